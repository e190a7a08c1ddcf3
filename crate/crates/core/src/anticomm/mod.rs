//! The free anti-commutative algebra `AC(X)`: normal tree-words, their
//! recursive order, the signed product, the Hall-word Gröbner–Shirshov basis
//! of the free Lie algebra, and bounded verification.

mod lyndon;

use std::cmp::Ordering;
use std::fmt;

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::linalg::SparseEchelon;
use crate::lincomb::LinComb;
use crate::poly::write_terms;
use crate::word::Word;

pub use lyndon::{is_ls_word, ls_bracketing, ls_words};

/// A binary tree over the alphabet. Normal words have `left > right` at every
/// node; other trees arise only as bracketings.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum AcWord {
    Leaf(u32),
    Node(Box<AcWord>, Box<AcWord>),
}

impl AcWord {
    pub fn leaf(x: u32) -> Self {
        AcWord::Leaf(x)
    }

    /// The tree `[left right]`, without normalizing.
    pub fn node(left: AcWord, right: AcWord) -> Self {
        AcWord::Node(Box::new(left), Box::new(right))
    }

    pub fn degree(&self) -> usize {
        match self {
            AcWord::Leaf(_) => 1,
            AcWord::Node(l, r) => l.degree() + r.degree(),
        }
    }

    pub fn is_normal(&self) -> bool {
        match self {
            AcWord::Leaf(_) => true,
            AcWord::Node(l, r) => l.is_normal() && r.is_normal() && l > r,
        }
    }

    /// The associative word read off the leaves.
    pub fn flatten(&self) -> Word {
        let mut out = Vec::with_capacity(self.degree());
        fn walk(t: &AcWord, out: &mut Vec<u32>) {
            match t {
                AcWord::Leaf(x) => out.push(*x),
                AcWord::Node(l, r) => {
                    walk(l, out);
                    walk(r, out);
                }
            }
        }
        walk(self, &mut out);
        Word::new(out)
    }

    pub fn validate(&self, alphabet: &Alphabet) -> Result<()> {
        self.flatten().validate(alphabet)
    }

    /// Fully parenthesized text such as `((x2 x1) x1)`.
    pub fn display(&self, alphabet: &Alphabet) -> String {
        match self {
            AcWord::Leaf(x) => alphabet.name(*x as usize).to_string(),
            AcWord::Node(l, r) => format!("({} {})", l.display(alphabet), r.display(alphabet)),
        }
    }

    /// Subtree at `path` (`false` = left, `true` = right).
    pub fn subtree(&self, path: &[bool]) -> Option<&AcWord> {
        match (self, path.split_first()) {
            (_, None) => Some(self),
            (AcWord::Node(l, r), Some((&right, rest))) => if right { r } else { l }.subtree(rest),
            (AcWord::Leaf(_), Some(_)) => None,
        }
    }

    /// Paths to every subtree equal to `t`, in preorder.
    pub fn occurrences(&self, t: &AcWord) -> Vec<Vec<bool>> {
        let mut out = Vec::new();
        fn walk(node: &AcWord, t: &AcWord, path: &mut Vec<bool>, out: &mut Vec<Vec<bool>>) {
            if node.degree() < t.degree() {
                return;
            }
            if node == t {
                out.push(path.clone());
                return;
            }
            if let AcWord::Node(l, r) = node {
                path.push(false);
                walk(l, t, path, out);
                path.pop();
                path.push(true);
                walk(r, t, path, out);
                path.pop();
            }
        }
        walk(self, t, &mut Vec::new(), &mut out);
        out
    }
}

/// Degree first; equal degrees compare `(left, right)` recursively and
/// leaves by rank.
impl Ord for AcWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| match (self, other) {
                (AcWord::Leaf(a), AcWord::Leaf(b)) => a.cmp(b),
                (AcWord::Node(l1, r1), AcWord::Node(l2, r2)) => l1.cmp(l2).then_with(|| r1.cmp(r2)),
                _ => unreachable!("a leaf and a node never share a degree"),
            })
    }
}

impl PartialOrd for AcWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for AcWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AcWord::Leaf(x) => write!(f, "{x}"),
            AcWord::Node(l, r) => write!(f, "({l:?} {r:?})"),
        }
    }
}

pub fn ac_cmp(u: &AcWord, v: &AcWord) -> Ordering {
    u.cmp(v)
}

pub type AcPolynomial = LinComb<AcWord>;

/// `[uv]` if `u > v`, `−[vu]` if `u < v`, zero if equal.
pub fn ac_mul(u: &AcWord, v: &AcWord) -> AcPolynomial {
    let mut out = AcPolynomial::zero();
    add_product(&mut out, u, v, &crate::lincomb::scalar(1));
    out
}

fn add_product(out: &mut AcPolynomial, u: &AcWord, v: &AcWord, c: &crate::lincomb::Scalar) {
    match u.cmp(v) {
        Ordering::Greater => out.add_term(AcWord::node(u.clone(), v.clone()), c.clone()),
        Ordering::Less => out.add_term(AcWord::node(v.clone(), u.clone()), -c.clone()),
        Ordering::Equal => {}
    }
}

pub fn ac_mul_poly(p: &AcPolynomial, q: &AcPolynomial) -> AcPolynomial {
    let mut out = AcPolynomial::zero();
    for (u, c) in p.terms() {
        for (v, d) in q.terms() {
            add_product(&mut out, u, v, &(c * d));
        }
    }
    out
}

pub fn ac_display(p: &AcPolynomial, alphabet: &Alphabet) -> String {
    struct Show<'a>(&'a AcPolynomial, &'a Alphabet);
    impl fmt::Display for Show<'_> {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write_terms(f, self.0.terms(), |t| Some(t.display(self.1)))
        }
    }
    Show(p, alphabet).to_string()
}

/// Normal words of each degree `0..=max_deg` (index 0 empty), ascending.
pub fn normal_words_by_degree(letters: usize, max_deg: usize) -> Vec<Vec<AcWord>> {
    words_by_degree(letters, max_deg, |l, r| l > r)
}

/// Hall words of each degree `0..=max_deg` (index 0 empty), ascending:
/// `[u₁u₂]` with `u₁ > u₂` Hall and, if `u₁ = [u₁₁u₁₂]`, `u₁₂ ≤ u₂`.
pub fn hall_words_by_degree(letters: usize, max_deg: usize) -> Vec<Vec<AcWord>> {
    words_by_degree(letters, max_deg, |l, r| {
        l > r
            && match l {
                AcWord::Node(_, l2) => **l2 <= *r,
                AcWord::Leaf(_) => true,
            }
    })
}

fn words_by_degree(
    letters: usize,
    max_deg: usize,
    keep: impl Fn(&AcWord, &AcWord) -> bool,
) -> Vec<Vec<AcWord>> {
    let mut by_deg: Vec<Vec<AcWord>> = vec![Vec::new(); max_deg + 1];
    if max_deg >= 1 {
        by_deg[1] = (0..letters as u32).map(AcWord::Leaf).collect();
    }
    for d in 2..=max_deg {
        let mut level = Vec::new();
        for dl in d.div_ceil(2)..d {
            let dr = d - dl;
            for l in &by_deg[dl] {
                for r in &by_deg[dr] {
                    if keep(l, r) {
                        level.push(AcWord::node(l.clone(), r.clone()));
                    }
                }
            }
        }
        level.sort();
        by_deg[d] = level;
    }
    by_deg
}

pub fn hall_words(letters: usize, max_deg: usize) -> Vec<AcWord> {
    hall_words_by_degree(letters, max_deg).concat()
}

/// `([u][v])[w] − ([u][w])[v] − [u]([v][w])` for Hall words `u > v > w` of
/// total degree ≤ `max_deg`, each made monic.
pub fn hall_gsb(letters: usize, max_deg: usize) -> Vec<AcPolynomial> {
    let hall = hall_words(letters, max_deg.saturating_sub(2));
    let m = |a: &AcWord| AcPolynomial::monomial(a.clone());
    let mut out = Vec::new();
    for u in &hall {
        for v in hall.iter().filter(|v| *v < u) {
            for w in hall.iter().filter(|w| *w < v) {
                if u.degree() + v.degree() + w.degree() > max_deg {
                    continue;
                }
                let uv_w = ac_mul_poly(&ac_mul(u, v), &m(w));
                let uw_v = ac_mul_poly(&ac_mul(u, w), &m(v));
                let u_vw = ac_mul_poly(&m(u), &ac_mul(v, w));
                let f = &(&uv_w - &uw_v) - &u_vw;
                out.push(f.make_monic().expect("leading term [[uv]w]"));
            }
        }
    }
    out.sort_by(|p, q| p.leading_monomial().cmp(&q.leading_monomial()));
    out
}

/// A monic set of anti-commutative polynomials.
#[derive(Clone, Debug)]
pub struct AcSystem {
    alphabet: Alphabet,
    elements: Vec<AcPolynomial>,
}

/// An S-word: `s` substituted at `path` inside `ambient`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AcRedex {
    pub element: usize,
    pub path: Vec<bool>,
    pub coefficient: crate::lincomb::Scalar,
}

impl AcSystem {
    /// Elements must be combinations of normal words; they are made monic.
    pub fn new(alphabet: Alphabet, elements: Vec<AcPolynomial>) -> Result<Self> {
        let mut monic = Vec::with_capacity(elements.len());
        for p in elements {
            for t in p.monomials() {
                t.validate(&alphabet)?;
                if !t.is_normal() {
                    return Err(Error::InvalidAlgebra(format!(
                        "{} is not a normal word",
                        t.display(&alphabet)
                    )));
                }
            }
            monic.push(p.make_monic()?);
        }
        Ok(AcSystem {
            alphabet,
            elements: monic,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn elements(&self) -> &[AcPolynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn lead(&self, i: usize) -> &AcWord {
        self.elements[i].leading_monomial().expect("nonzero")
    }

    /// First element and preorder position where `m` is the leading word of
    /// a normal S-word.
    pub fn find_redex(&self, m: &AcWord) -> Option<AcRedex> {
        for (element, s) in self.elements.iter().enumerate() {
            for path in m.occurrences(self.lead(element)) {
                let g = substitute(m, &path, s);
                if let Some((lead, c)) = g.leading() {
                    if lead == m {
                        return Some(AcRedex {
                            element,
                            path,
                            coefficient: c.clone(),
                        });
                    }
                }
            }
        }
        None
    }

    pub fn is_reducible(&self, m: &AcWord) -> bool {
        self.find_redex(m).is_some()
    }
}

/// The S-word obtained by replacing the subtree of `ambient` at `path` by
/// `s`, evaluated with the signed product.
pub fn substitute(ambient: &AcWord, path: &[bool], s: &AcPolynomial) -> AcPolynomial {
    match (ambient, path.split_first()) {
        (_, None) => s.clone(),
        (AcWord::Node(l, r), Some((&right, rest))) => {
            if right {
                ac_mul_poly(
                    &AcPolynomial::monomial((**l).clone()),
                    &substitute(r, rest, s),
                )
            } else {
                ac_mul_poly(
                    &substitute(l, rest, s),
                    &AcPolynomial::monomial((**r).clone()),
                )
            }
        }
        (AcWord::Leaf(_), Some(_)) => AcPolynomial::zero(),
    }
}

pub fn ac_reduce(p: &AcPolynomial, s: &AcSystem) -> AcPolynomial {
    let mut rest = p.clone();
    let mut out = AcPolynomial::zero();
    while let Some((m, c)) = rest.pop_leading() {
        match s.find_redex(&m) {
            Some(r) => {
                let g = substitute(&m, &r.path, &s.elements[r.element]);
                let factor = -(&c / &r.coefficient);
                for (n, d) in g.terms().skip(1) {
                    rest.add_term(n.clone(), &factor * d);
                }
            }
            None => out.add_term(m, c),
        }
    }
    out
}

/// An inclusion composition `f − (a g b)` at `w = f̄`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AcComposition {
    pub w: AcWord,
    pub left: usize,
    pub right: usize,
    pub path: Vec<bool>,
    pub result: AcPolynomial,
}

/// Every occurrence of `ḡ` in `f̄` whose S-word has leading word `f̄`.
pub fn ac_compositions(
    left: usize,
    f: &AcPolynomial,
    right: usize,
    g: &AcPolynomial,
) -> Vec<AcComposition> {
    let (Some(fl), Some(gl)) = (f.leading_monomial(), g.leading_monomial()) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for path in fl.occurrences(gl) {
        let h = substitute(fl, &path, g);
        let Some((lead, c)) = h.leading() else {
            continue;
        };
        if lead != fl {
            continue;
        }
        let mut result = f.clone();
        result.add_scaled(&-(f.leading().expect("nonzero").1 / c), &h);
        out.push(AcComposition {
            w: fl.clone(),
            left,
            right,
            path,
            result,
        });
    }
    out
}

pub fn all_ac_compositions(s: &AcSystem) -> Vec<AcComposition> {
    let mut out = Vec::new();
    for (i, f) in s.elements.iter().enumerate() {
        for (j, g) in s.elements.iter().enumerate() {
            out.extend(ac_compositions(i, f, j, g));
        }
    }
    out.sort_by(|a, b| (&a.w, a.left, a.right, &a.path).cmp(&(&b.w, b.left, b.right, &b.path)));
    out
}

/// Echelon basis of the S-words of degree ≤ d, built as iterated products
/// `((s·w₁)·w₂)·…` with normal words `wᵢ`, and its rank per degree.
pub fn ac_span(s: &AcSystem, max_deg: usize) -> (SparseEchelon<AcWord>, Vec<usize>) {
    let normal = normal_words_by_degree(s.alphabet.len(), max_deg);
    let mut echelon = SparseEchelon::new();
    let mut frontier: Vec<(usize, AcPolynomial)> = s
        .elements
        .iter()
        .filter_map(|p| {
            let d = p.leading_monomial()?.degree();
            (d <= max_deg).then(|| (d, p.clone()))
        })
        .collect();
    let mut all: Vec<(usize, AcPolynomial)> = frontier.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (d, p) in &frontier {
            for (dw, words) in normal.iter().enumerate().take(max_deg - d + 1).skip(1) {
                for w in words {
                    let q = ac_mul_poly(p, &AcPolynomial::monomial(w.clone()));
                    if !q.is_zero() {
                        next.push((d + dw, q));
                    }
                }
            }
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    all.sort_by_key(|(d, _)| *d);
    let mut rank_at = vec![0; max_deg + 1];
    let mut idx = 0;
    for (d, slot) in rank_at.iter_mut().enumerate() {
        while idx < all.len() && all[idx].0 <= d {
            echelon.insert(all[idx].1.clone());
            idx += 1;
        }
        *slot = echelon.rank();
    }
    (echelon, rank_at)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AcReport {
    pub max_deg: usize,
    /// Inclusion compositions with `|w| ≤ max_deg`.
    pub checked: usize,
    pub failing: Vec<AcComposition>,
    pub compositions_trivial: bool,
    pub leads_reducible: bool,
    /// Irreducible normal words of each degree (index 0 unused).
    pub irr_counts: Vec<usize>,
    /// `dim AC(X)_{≤d} / span_d` for each `d`.
    pub quotient_dims: Vec<usize>,
    pub irr_matches: bool,
}

impl AcReport {
    pub fn all_hold(&self) -> bool {
        self.compositions_trivial && self.leads_reducible && self.irr_matches
    }
}

pub fn ac_irr_by_degree(s: &AcSystem, max_deg: usize) -> Vec<Vec<AcWord>> {
    normal_words_by_degree(s.alphabet.len(), max_deg)
        .into_iter()
        .map(|level| level.into_iter().filter(|t| !s.is_reducible(t)).collect())
        .collect()
}

pub fn ac_gsb_check_bounded(s: &AcSystem, max_deg: usize) -> AcReport {
    let comps: Vec<AcComposition> = all_ac_compositions(s)
        .into_iter()
        .filter(|c| c.w.degree() <= max_deg)
        .collect();
    let checked = comps.len();
    let failing: Vec<AcComposition> = comps
        .into_iter()
        .filter(|c| !ac_reduce(&c.result, s).is_zero())
        .collect();
    let (echelon, rank_at) = ac_span(s, max_deg);
    let leads_reducible = echelon.pivots().all(|t| s.is_reducible(t));
    let irr_counts: Vec<usize> = ac_irr_by_degree(s, max_deg).iter().map(Vec::len).collect();
    let normal_counts: Vec<usize> = normal_words_by_degree(s.alphabet.len(), max_deg)
        .iter()
        .map(Vec::len)
        .collect();
    let (mut total, mut irr_total) = (0, 0);
    let mut irr_matches = true;
    let mut quotient_dims = Vec::with_capacity(max_deg + 1);
    for d in 0..=max_deg {
        total += normal_counts[d];
        irr_total += irr_counts[d];
        quotient_dims.push(total - rank_at[d]);
        irr_matches &= irr_total == total - rank_at[d];
    }
    AcReport {
        max_deg,
        checked,
        compositions_trivial: failing.is_empty(),
        failing,
        leads_reducible,
        irr_counts,
        quotient_dims,
        irr_matches,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lincomb::scalar;

    fn l(x: u32) -> AcWord {
        AcWord::leaf(x)
    }

    fn n(a: AcWord, b: AcWord) -> AcWord {
        AcWord::node(a, b)
    }

    #[test]
    fn order_and_product_examples() {
        assert!(l(0) < l(1));
        assert!(n(l(1), l(0)) < n(n(l(1), l(0)), l(0)));
        assert_eq!(ac_mul(&l(1), &l(0)), AcPolynomial::monomial(n(l(1), l(0))));
        assert_eq!(
            ac_mul(&l(0), &l(1)),
            AcPolynomial::term(scalar(-1), n(l(1), l(0)))
        );
        assert!(ac_mul(&l(0), &l(0)).is_zero());
        assert_eq!(normal_words_by_degree(2, 2)[2], vec![n(l(1), l(0))]);
        let a = Alphabet::indexed("x", 2);
        assert_eq!(n(n(l(1), l(0)), l(0)).display(&a), "((x2 x1) x1)");
    }

    /// All binary trees with `d` leaves over `k` letters.
    fn all_trees(k: u32, d: usize) -> Vec<AcWord> {
        if d == 1 {
            return (0..k).map(AcWord::Leaf).collect();
        }
        let mut out = Vec::new();
        for dl in 1..d {
            for a in all_trees(k, dl) {
                for b in all_trees(k, d - dl) {
                    out.push(n(a.clone(), b));
                }
            }
        }
        out
    }

    #[test]
    fn normal_counts_match_brute_force() {
        let gen = normal_words_by_degree(2, 5);
        for (d, level) in gen.iter().enumerate().skip(1) {
            let brute = all_trees(2, d)
                .into_iter()
                .filter(AcWord::is_normal)
                .count();
            assert_eq!(level.len(), brute, "degree {d}");
        }
        let counts: Vec<usize> = gen.iter().map(Vec::len).collect();
        assert_eq!(counts, vec![0, 2, 1, 2, 4, 10]);
    }

    #[test]
    fn anti_commutativity() {
        let words: Vec<AcWord> = normal_words_by_degree(2, 4).concat();
        for u in &words {
            assert!(ac_mul(u, u).is_zero());
            for v in &words {
                assert_eq!(ac_mul(u, v), -&ac_mul(v, u));
            }
        }
    }

    #[test]
    fn order_is_total_on_normal_words() {
        let words: Vec<AcWord> = normal_words_by_degree(2, 5).concat();
        for (i, u) in words.iter().enumerate() {
            for (j, v) in words.iter().enumerate() {
                assert_eq!(u.cmp(v), i.cmp(&j));
            }
        }
    }

    #[test]
    fn hall_examples() {
        let counts: Vec<usize> = hall_words_by_degree(2, 5).iter().map(Vec::len).collect();
        assert_eq!(counts, vec![0, 2, 1, 2, 3, 6]);
        assert!(hall_gsb(2, 2).is_empty());
        assert!(hall_gsb(2, 3).is_empty());
        let four = hall_gsb(2, 4);
        assert_eq!(four.len(), 1);
        assert_eq!(
            four[0].leading_monomial(),
            Some(&n(n(n(l(1), l(0)), l(1)), l(0)))
        );
    }

    #[test]
    fn jacobi_on_three_letters() {
        // ([x3 x2]) x1 − ([x3 x1]) x2 − x3 ([x2 x1])
        let s = hall_gsb(3, 3);
        assert_eq!(s.len(), 1);
        let expected = AcPolynomial::from_terms([
            (n(n(l(2), l(1)), l(0)), scalar(1)),
            (n(n(l(2), l(0)), l(1)), scalar(-1)),
            (n(n(l(1), l(0)), l(2)), scalar(1)),
        ]);
        assert_eq!(s[0], expected);
    }

    #[test]
    fn composition_examples() {
        let f = AcPolynomial::monomial(n(n(l(1), l(0)), l(0)));
        let g = AcPolynomial::monomial(n(l(1), l(0)));
        assert_eq!(ac_compositions(0, &f, 1, &g).len(), 1);
        assert!(ac_compositions(1, &g, 0, &f).is_empty());
        let own = ac_compositions(0, &f, 0, &f);
        assert_eq!(own.len(), 1);
        assert!(own[0].result.is_zero());
    }

    #[test]
    fn empty_system_keeps_normal_words() {
        let s = AcSystem::new(Alphabet::indexed("x", 2), vec![]).unwrap();
        let r = ac_gsb_check_bounded(&s, 4);
        assert!(r.all_hold());
        assert_eq!(r.irr_counts, vec![0, 2, 1, 2, 4]);
    }

    #[test]
    fn non_normal_input_is_rejected() {
        let bad = AcPolynomial::monomial(n(l(0), l(1)));
        assert!(AcSystem::new(Alphabet::indexed("x", 2), vec![bad]).is_err());
    }

    #[test]
    fn hall_basis_at_degree_five() {
        let s = AcSystem::new(Alphabet::indexed("x", 2), hall_gsb(2, 5)).unwrap();
        let r = ac_gsb_check_bounded(&s, 5);
        assert!(r.all_hold(), "{r:?}");
        assert_eq!(r.irr_counts, vec![0, 2, 1, 2, 3, 6]);
        let irr: Vec<AcWord> = ac_irr_by_degree(&s, 5).concat();
        assert_eq!(irr, hall_words(2, 5));
    }

    #[test]
    fn reduction_is_idempotent() {
        let s = AcSystem::new(Alphabet::indexed("x", 2), hall_gsb(2, 5)).unwrap();
        for t in normal_words_by_degree(2, 5).concat() {
            let once = ac_reduce(&AcPolynomial::monomial(t), &s);
            assert_eq!(ac_reduce(&once, &s), once);
        }
    }
}
