//! The free dialgebra `D(X)`: normal diwords, the products `⊢` and `⊣`,
//! reduction modulo normal S-diwords, and a bounded check of the
//! Composition-Diamond conditions.
//!
//! A normal diword `x₋ₘ ⊢ … ⊢ x₀ ⊣ … ⊣ xₖ` is stored as its letters together
//! with the position `m` of the center `x₀`.

mod leibniz;

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::linalg::SparseEchelon;
use crate::lincomb::{LinComb, Scalar};
use crate::poly::write_terms;
use crate::word::{words_of_length, Word};

pub use leibniz::{
    leibniz_check, leibniz_enveloping, leibniz_violations, pbw_basis, LeibnizAlgebra,
};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Diword {
    letters: Word,
    center: usize,
}

impl Diword {
    pub fn new(letters: Word, center: usize) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::EmptyWord);
        }
        if center >= letters.len() {
            return Err(Error::InvalidCenter {
                center,
                len: letters.len(),
            });
        }
        Ok(Diword { letters, center })
    }

    pub fn letter(x: u32) -> Self {
        Diword {
            letters: Word::letter(x),
            center: 0,
        }
    }

    pub fn letters(&self) -> &Word {
        &self.letters
    }

    pub fn center(&self) -> usize {
        self.center
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn validate(&self, alphabet: &Alphabet) -> Result<()> {
        self.letters.validate(alphabet)
    }

    /// Renders as `x*@y*z`, the center prefixed with `@`; a single letter
    /// carries no marker.
    pub fn display(&self, alphabet: &Alphabet) -> String {
        self.letters
            .letters()
            .iter()
            .enumerate()
            .map(|(i, &l)| {
                let name = alphabet.name(l as usize);
                if i == self.center && self.len() > 1 {
                    format!("@{name}")
                } else {
                    name.to_string()
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// Weight order: length, then center position, then letters.
impl Ord for Diword {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then(self.center.cmp(&other.center))
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for Diword {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Diword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.letters().iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if i == self.center {
                write!(f, "@{l}")?;
            } else {
                write!(f, "{l}")?;
            }
        }
        Ok(())
    }
}

pub fn diword_cmp(u: &Diword, v: &Diword) -> Ordering {
    u.cmp(v)
}

/// `u ⊢ v`: the center comes from `v`.
pub fn di_left(u: &Diword, v: &Diword) -> Diword {
    Diword {
        letters: u.letters.concat(&v.letters),
        center: u.len() + v.center,
    }
}

/// `u ⊣ v`: the center comes from `u`.
pub fn di_right(u: &Diword, v: &Diword) -> Diword {
    Diword {
        letters: u.letters.concat(&v.letters),
        center: u.center,
    }
}

pub type DiPolynomial = LinComb<Diword>;

fn bilinear(
    p: &DiPolynomial,
    q: &DiPolynomial,
    op: fn(&Diword, &Diword) -> Diword,
) -> DiPolynomial {
    let mut out = DiPolynomial::zero();
    for (u, c) in p.terms() {
        for (v, d) in q.terms() {
            out.add_term(op(u, v), c * d);
        }
    }
    out
}

pub fn di_left_poly(p: &DiPolynomial, q: &DiPolynomial) -> DiPolynomial {
    bilinear(p, q, di_left)
}

pub fn di_right_poly(p: &DiPolynomial, q: &DiPolynomial) -> DiPolynomial {
    bilinear(p, q, di_right)
}

/// Linear combination of single letters.
pub fn letters_poly(coeffs: &[Scalar]) -> DiPolynomial {
    DiPolynomial::from_terms(
        coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| (Diword::letter(i as u32), c.clone())),
    )
}

pub fn di_display(p: &DiPolynomial, alphabet: &Alphabet) -> String {
    struct Show<'a>(&'a DiPolynomial, &'a Alphabet);
    impl fmt::Display for Show<'_> {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write_terms(f, self.0.terms(), |d| Some(d.display(self.1)))
        }
    }
    Show(p, alphabet).to_string()
}

/// Where the center of `a·s·b` sits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Placement {
    /// Each term keeps its own center: `a ⊢ s ⊣ b`.
    Inner,
    /// At this position of `a`; every letter of `s` is joined by `⊣`.
    InLeft(usize),
    /// At this position of `b`; every letter of `s` is joined by `⊢`.
    InRight(usize),
}

/// The normal S-diword `a·s·b` with the given center placement, evaluated in `D(X)`.
pub fn embed(s: &DiPolynomial, a: &Word, b: &Word, placement: Placement) -> DiPolynomial {
    let mut out = DiPolynomial::zero();
    for (w, c) in s.terms() {
        let center = match placement {
            Placement::Inner => a.len() + w.center,
            Placement::InLeft(k) => k,
            Placement::InRight(k) => a.len() + w.len() + k,
        };
        let letters = w.letters.wrap(a.letters(), b.letters());
        out.add_term(Diword { letters, center }, c.clone());
    }
    out
}

/// A monic set of dialgebra polynomials over an alphabet.
#[derive(Clone, Debug)]
pub struct DiSystem {
    alphabet: Alphabet,
    elements: Vec<DiPolynomial>,
}

/// An occurrence `m = lead(a·s·b)` of a normal S-diword in a monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiRedex {
    pub element: usize,
    pub a: Word,
    pub b: Word,
    pub placement: Placement,
    /// Coefficient of `m` in `a·s·b`.
    pub coefficient: Scalar,
}

impl DiSystem {
    /// Makes every element monic; rejects zero elements.
    pub fn new(alphabet: Alphabet, elements: Vec<DiPolynomial>) -> Result<Self> {
        let mut monic = Vec::with_capacity(elements.len());
        for p in elements {
            for d in p.monomials() {
                d.validate(&alphabet)?;
            }
            monic.push(p.make_monic()?);
        }
        Ok(DiSystem {
            alphabet,
            elements: monic,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn elements(&self) -> &[DiPolynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn max_len(&self) -> usize {
        self.elements
            .iter()
            .filter_map(|p| p.leading_monomial().map(Diword::len))
            .max()
            .unwrap_or(0)
    }

    /// First normal S-diword (by element, then leftmost block) whose leading
    /// diword is `m`.
    pub fn find_redex(&self, m: &Diword) -> Option<DiRedex> {
        for (element, s) in self.elements.iter().enumerate() {
            let lengths: BTreeSet<usize> = s.monomials().map(Diword::len).collect();
            for &len in lengths.iter().rev() {
                if len > m.len() {
                    continue;
                }
                for p in 0..=m.len() - len {
                    let a = m.letters.slice(0, p);
                    let b = m.letters.slice(p + len, m.len());
                    let placement = if m.center < p {
                        Placement::InLeft(m.center)
                    } else if m.center >= p + len {
                        Placement::InRight(m.center - p - len)
                    } else {
                        Placement::Inner
                    };
                    let g = embed(s, &a, &b, placement);
                    if let Some((lead, c)) = g.leading() {
                        if lead == m {
                            return Some(DiRedex {
                                element,
                                coefficient: c.clone(),
                                a,
                                b,
                                placement,
                            });
                        }
                    }
                }
            }
        }
        None
    }

    pub fn is_reducible(&self, m: &Diword) -> bool {
        self.find_redex(m).is_some()
    }
}

/// Normal form: repeatedly cancels the greatest reducible diword against
/// the S-diword it is the leading term of.
pub fn di_reduce(p: &DiPolynomial, s: &DiSystem) -> DiPolynomial {
    let mut rest = p.clone();
    let mut out = DiPolynomial::zero();
    while let Some((m, c)) = rest.pop_leading() {
        match s.find_redex(&m) {
            Some(r) => {
                let g = embed(&s.elements[r.element], &r.a, &r.b, r.placement);
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

/// All diwords of length `len` over `n` letters, ascending.
pub fn diwords_of_length(n: usize, len: usize) -> Vec<Diword> {
    if len == 0 {
        return Vec::new();
    }
    let words = words_of_length(n, len);
    (0..len)
        .flat_map(|center| {
            words.iter().map(move |w| Diword {
                letters: w.clone(),
                center,
            })
        })
        .collect()
}

/// Irreducible diwords of length `1..=max_len`, grouped by length (index 0 is
/// always empty).
pub fn di_irr_by_length(s: &DiSystem, max_len: usize) -> Vec<Vec<Diword>> {
    (0..=max_len)
        .map(|len| {
            diwords_of_length(s.alphabet.len(), len)
                .into_iter()
                .filter(|d| !s.is_reducible(d))
                .collect()
        })
        .collect()
}

/// Echelon basis of the span of all normal S-diwords of length ≤ d, with
/// the rank recorded for each `d = 0..=max_len`.
pub fn di_span(s: &DiSystem, max_len: usize) -> (SparseEchelon<Diword>, Vec<usize>) {
    let n = s.alphabet.len();
    let mut echelon = SparseEchelon::new();
    let mut rank_at = Vec::with_capacity(max_len + 1);
    for d in 0..=max_len {
        for elem in &s.elements {
            let len = elem.leading_monomial().map_or(0, Diword::len);
            if len > d {
                continue;
            }
            let extra = d - len;
            for left in 0..=extra {
                let lefts = words_of_length(n, left);
                let rights = words_of_length(n, extra - left);
                for a in &lefts {
                    for b in &rights {
                        let placements = std::iter::once(Placement::Inner)
                            .chain((0..a.len()).map(Placement::InLeft))
                            .chain((0..b.len()).map(Placement::InRight));
                        for pl in placements {
                            echelon.insert(embed(elem, a, b, pl));
                        }
                    }
                }
            }
        }
        rank_at.push(echelon.rank());
    }
    (echelon, rank_at)
}

/// Bounded check of the dialgebra CD conditions (ii) and (iii).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiCdReport {
    pub max_len: usize,
    /// (ii): every leading diword of the bounded span is the leading term of
    /// a normal S-diword.
    pub leads_reducible: bool,
    pub irreducible_leads: Vec<Diword>,
    /// (iii): irreducible diwords of length ≤ d number exactly the bounded
    /// quotient dimension.
    pub irr_matches: bool,
    pub irr_counts: Vec<usize>,
    pub quotient_dims: Vec<usize>,
}

impl DiCdReport {
    pub fn holds(&self) -> bool {
        self.leads_reducible && self.irr_matches
    }
}

pub fn di_gsb_check_bounded(s: &DiSystem, max_len: usize) -> Result<DiCdReport> {
    let needed = s.max_len();
    if max_len < needed {
        return Err(Error::BoundTooSmall {
            bound: max_len,
            needed,
        });
    }
    let (echelon, rank_at) = di_span(s, max_len);
    let irreducible_leads: Vec<Diword> = echelon
        .pivots()
        .filter(|d| !s.is_reducible(d))
        .cloned()
        .collect();
    let irr_counts: Vec<usize> = di_irr_by_length(s, max_len).iter().map(Vec::len).collect();
    let n = s.alphabet.len();
    let mut total = 0;
    let mut irr_total = 0;
    let mut quotient_dims = Vec::with_capacity(max_len + 1);
    let mut irr_matches = true;
    for (d, r) in rank_at.iter().enumerate() {
        total += d * n.pow(d as u32);
        irr_total += irr_counts[d];
        quotient_dims.push(total - r);
        irr_matches &= irr_total == total - r;
    }
    Ok(DiCdReport {
        max_len,
        leads_reducible: irreducible_leads.is_empty(),
        irreducible_leads,
        irr_matches,
        irr_counts,
        quotient_dims,
    })
}
