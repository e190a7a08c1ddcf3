//! Double-free modules: the free left `k⟨X⟩`-module with basis `Y`.

use std::cmp::Ordering;
use std::fmt;

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::linalg::SparseEchelon;
use crate::lincomb::LinComb;
use crate::poly::{write_terms, Polynomial};
use crate::rewrite::RewriteSystem;
use crate::word::{words_of_length, Word};

/// The basis element `u·y` of the module.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ModuleWord {
    pub u: Word,
    pub y: u32,
}

impl ModuleWord {
    pub fn new(u: Word, y: u32) -> Self {
        ModuleWord { u, y }
    }

    pub fn generator(y: u32) -> Self {
        ModuleWord {
            u: Word::empty(),
            y,
        }
    }

    /// Renders as `x*x*[y1]`.
    pub fn display(&self, x: &Alphabet, y: &Alphabet) -> String {
        let gen = format!("[{}]", y.name(self.y as usize));
        if self.u.is_empty() {
            gen
        } else {
            format!("{}*{gen}", self.u.display(x))
        }
    }
}

/// `u` by deg-lex, then `y`.
impl Ord for ModuleWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.u.cmp(&other.u).then(self.y.cmp(&other.y))
    }
}

impl PartialOrd for ModuleWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ModuleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}[{}]", self.u, self.y)
    }
}

pub fn mword_cmp(w1: &ModuleWord, w2: &ModuleWord) -> Ordering {
    w1.cmp(w2)
}

pub type ModuleElement = LinComb<ModuleWord>;

/// Left action `p · m`.
pub fn act(p: &Polynomial, m: &ModuleElement) -> ModuleElement {
    let mut out = ModuleElement::zero();
    for (a, c) in p.terms() {
        for (w, d) in m.terms() {
            out.add_term(ModuleWord::new(a.concat(&w.u), w.y), c * d);
        }
    }
    out
}

fn shift(m: &ModuleElement, a: &[u32]) -> ModuleElement {
    m.map_monomials(|w| ModuleWord::new(w.u.wrap(a, &[]), w.y))
}

pub fn module_display(m: &ModuleElement, x: &Alphabet, y: &Alphabet) -> String {
    struct Show<'a>(&'a ModuleElement, &'a Alphabet, &'a Alphabet);
    impl fmt::Display for Show<'_> {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write_terms(f, self.0.terms(), |w| Some(w.display(self.1, self.2)))
        }
    }
    Show(m, x, y).to_string()
}

/// Monic module elements over generator alphabets `X` and `Y`.
#[derive(Clone, Debug)]
pub struct ModuleSystem {
    x: Alphabet,
    y: Alphabet,
    elements: Vec<ModuleElement>,
}

impl ModuleSystem {
    pub fn new(x: Alphabet, y: Alphabet, elements: Vec<ModuleElement>) -> Result<Self> {
        let mut monic = Vec::with_capacity(elements.len());
        for e in elements {
            for w in e.monomials() {
                w.u.validate(&x)?;
                if w.y as usize >= y.len() {
                    return Err(Error::InvalidWord {
                        index: w.y as usize,
                        size: y.len(),
                    });
                }
            }
            monic.push(e.make_monic()?);
        }
        Ok(ModuleSystem {
            x,
            y,
            elements: monic,
        })
    }

    pub fn x(&self) -> &Alphabet {
        &self.x
    }

    pub fn y(&self) -> &Alphabet {
        &self.y
    }

    pub fn elements(&self) -> &[ModuleElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn lead(&self, i: usize) -> &ModuleWord {
        self.elements[i].leading_monomial().expect("nonzero")
    }

    /// Longest `u`-part among leading words.
    pub fn max_len(&self) -> usize {
        (0..self.len())
            .map(|i| self.lead(i).u.len())
            .max()
            .unwrap_or(0)
    }

    /// An element whose leading word is a suffix of `w`, preferring the
    /// longest leading word; returns the element and the prefix length.
    pub fn find_redex(&self, w: &ModuleWord) -> Option<(usize, usize)> {
        (0..self.len())
            .filter_map(|i| {
                let l = self.lead(i);
                let n = w.u.len();
                let k = l.u.len();
                (l.y == w.y && k <= n && w.u.letters()[n - k..] == *l.u.letters())
                    .then(|| (i, n - k))
            })
            .max_by_key(|&(i, p)| (std::cmp::Reverse(p), std::cmp::Reverse(i)))
    }

    pub fn is_reducible(&self, w: &ModuleWord) -> bool {
        self.find_redex(w).is_some()
    }
}

/// Eliminates leading words `a·s̄` until none remain.
pub fn module_normal_form(m: &ModuleElement, s: &ModuleSystem) -> ModuleElement {
    let mut rest = m.clone();
    let mut out = ModuleElement::zero();
    while let Some((w, c)) = rest.pop_leading() {
        match s.find_redex(&w) {
            Some((i, p)) => {
                let a = &w.u.letters()[..p];
                for (n, d) in s.elements[i].terms().skip(1) {
                    rest.add_term(ModuleWord::new(n.u.wrap(a, &[]), n.y), -(&c * d));
                }
            }
            None => out.add_term(w, c),
        }
    }
    out
}

/// `(f, g)_w = f − a·g` where `w = f̄ = a·ḡ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleComposition {
    pub w: ModuleWord,
    pub left: usize,
    pub right: usize,
    pub a: Word,
    pub result: ModuleElement,
}

pub fn module_compositions(
    left: usize,
    f: &ModuleElement,
    right: usize,
    g: &ModuleElement,
) -> Vec<ModuleComposition> {
    let (Some(fl), Some(gl)) = (f.leading_monomial(), g.leading_monomial()) else {
        return Vec::new();
    };
    let (n, k) = (fl.u.len(), gl.u.len());
    if fl.y != gl.y || k > n || fl.u.letters()[n - k..] != *gl.u.letters() {
        return Vec::new();
    }
    let a = &fl.u.letters()[..n - k];
    vec![ModuleComposition {
        w: fl.clone(),
        left,
        right,
        a: Word::from(a),
        result: f - &shift(g, a),
    }]
}

pub fn all_module_compositions(s: &ModuleSystem) -> Vec<ModuleComposition> {
    let mut out = Vec::new();
    for (i, f) in s.elements.iter().enumerate() {
        for (j, g) in s.elements.iter().enumerate() {
            out.extend(module_compositions(i, f, j, g));
        }
    }
    out.sort_by(|x, y| (&x.w, x.left, x.right).cmp(&(&y.w, y.left, y.right)));
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleGsbReport {
    pub holds: bool,
    pub checked: usize,
    pub failing: Vec<ModuleComposition>,
}

pub fn module_is_gsb(s: &ModuleSystem) -> ModuleGsbReport {
    let comps = all_module_compositions(s);
    let checked = comps.len();
    let failing: Vec<ModuleComposition> = comps
        .into_iter()
        .filter(|c| !module_normal_form(&c.result, s).is_zero())
        .collect();
    ModuleGsbReport {
        holds: failing.is_empty(),
        checked,
        failing,
    }
}

/// Module words with `|u| ≤ max_len` that have no `s̄` as a suffix, by `|u|`.
pub fn module_irr_by_length(s: &ModuleSystem, max_len: usize) -> Vec<Vec<ModuleWord>> {
    (0..=max_len)
        .map(|len| {
            words_of_length(s.x.len(), len)
                .into_iter()
                .flat_map(|u| (0..s.y.len() as u32).map(move |y| ModuleWord::new(u.clone(), y)))
                .filter(|w| !s.is_reducible(w))
                .collect()
        })
        .collect()
}

/// Echelon basis of `span{a·s : |a| + |s̄.u| ≤ d}` with ranks per `d`.
pub fn module_span(s: &ModuleSystem, max_len: usize) -> (SparseEchelon<ModuleWord>, Vec<usize>) {
    let mut echelon = SparseEchelon::new();
    let mut rank_at = Vec::with_capacity(max_len + 1);
    for d in 0..=max_len {
        for (i, e) in s.elements.iter().enumerate() {
            let k = s.lead(i).u.len();
            if k > d {
                continue;
            }
            for a in words_of_length(s.x.len(), d - k) {
                echelon.insert(shift(e, a.letters()));
            }
        }
        rank_at.push(echelon.rank());
    }
    (echelon, rank_at)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleCdReport {
    pub max_len: usize,
    /// (i)
    pub compositions_trivial: bool,
    /// (ii), checked on every leading word of the bounded span.
    pub leads_reducible: bool,
    pub irreducible_leads: Vec<ModuleWord>,
    /// (iii)
    pub irr_matches: bool,
    pub irr_counts: Vec<usize>,
    pub quotient_dims: Vec<usize>,
}

impl ModuleCdReport {
    pub fn agree(&self) -> bool {
        self.compositions_trivial == self.leads_reducible
            && self.leads_reducible == self.irr_matches
    }

    pub fn all_hold(&self) -> bool {
        self.compositions_trivial && self.leads_reducible && self.irr_matches
    }
}

pub fn module_cd_check(s: &ModuleSystem, max_len: usize) -> Result<ModuleCdReport> {
    let needed = s.max_len();
    if max_len < needed {
        return Err(Error::BoundTooSmall {
            bound: max_len,
            needed,
        });
    }
    let (echelon, rank_at) = module_span(s, max_len);
    let irreducible_leads: Vec<ModuleWord> = echelon
        .pivots()
        .filter(|w| !s.is_reducible(w))
        .cloned()
        .collect();
    let irr_counts: Vec<usize> = module_irr_by_length(s, max_len)
        .iter()
        .map(Vec::len)
        .collect();
    let (nx, ny) = (s.x.len(), s.y.len());
    let mut total = 0;
    let mut irr_total = 0;
    let mut irr_matches = true;
    let mut quotient_dims = Vec::with_capacity(max_len + 1);
    for (d, r) in rank_at.iter().enumerate() {
        total += ny * nx.pow(d as u32);
        irr_total += irr_counts[d];
        quotient_dims.push(total - r);
        irr_matches &= irr_total == total - r;
    }
    Ok(ModuleCdReport {
        max_len,
        compositions_trivial: module_is_gsb(s).holds,
        leads_reducible: irreducible_leads.is_empty(),
        irreducible_leads,
        irr_matches,
        irr_counts,
        quotient_dims,
    })
}

/// Normal form in a cyclic-style module `A·Y / k⟨X⟩T` over `A = k⟨X|S⟩`:
/// monomials are rewritten by the algebra relations acting on `u` and by
/// the module relations at the `Y` end, whichever applies first.
pub fn kang_lee_normal_form(
    m: &ModuleElement,
    algebra: &RewriteSystem,
    module: &ModuleSystem,
) -> ModuleElement {
    let mut rest = m.clone();
    let mut out = ModuleElement::zero();
    while let Some((w, c)) = rest.pop_leading() {
        if let Some((i, p)) = module.find_redex(&w) {
            let a = &w.u.letters()[..p];
            for (n, d) in module.elements[i].terms().skip(1) {
                rest.add_term(ModuleWord::new(n.u.wrap(a, &[]), n.y), -(&c * d));
            }
        } else if let Some((pos, e)) = algebra.find_redex(&w.u) {
            let s = &algebra.elements()[e];
            let len = algebra.lead(e).len();
            let (a, b) = (&w.u.letters()[..pos], &w.u.letters()[pos + len..]);
            for (n, d) in s.terms().skip(1) {
                rest.add_term(ModuleWord::new(n.wrap(a, b), w.y), -(&c * d));
            }
        } else {
            out.add_term(w, c);
        }
    }
    out
}
