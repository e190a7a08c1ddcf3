//! Elimination of leading words, normal forms modulo a relation set,
//! irreducible words, and a bounded-degree ideal membership oracle.

mod trie;

use num_traits::{One, Zero};

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::linalg::SparseEchelon;
use crate::lincomb::Scalar;
use crate::poly::{self, Polynomial};
use crate::word::{words_of_length, DegLexOrder, Word};

pub(crate) use trie::Trie;

/// A finite set of monic relations under the deg-lex order.
#[derive(Clone, Debug)]
pub struct RewriteSystem {
    order: DegLexOrder,
    elements: Vec<Polynomial>,
    /// Leading words, for factor search.
    leads: Trie,
    /// Reversed leading words, for suffix tests during enumeration.
    rev_leads: Trie,
}

/// One applicable elimination: `monomial = a · lead(element) · b` with `a`
/// of length `position`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Redex {
    pub monomial: Word,
    pub element: usize,
    pub position: usize,
}

impl RewriteSystem {
    /// Makes every element monic. Zero elements and elements whose leading
    /// word is empty are rejected.
    pub fn new(alphabet: Alphabet, elements: Vec<Polynomial>) -> Result<Self> {
        let mut monic = Vec::with_capacity(elements.len());
        for p in elements {
            poly::validate(&p, &alphabet)?;
            let p = p.make_monic()?;
            if p.leading_monomial().is_some_and(Word::is_empty) {
                return Err(Error::EmptyLeadingWord);
            }
            monic.push(p);
        }
        let mut leads = Trie::new();
        let mut rev_leads = Trie::new();
        for (i, p) in monic.iter().enumerate() {
            let lead = p.leading_monomial().expect("nonzero");
            leads.insert(lead.letters().iter().copied(), i);
            rev_leads.insert(lead.letters().iter().rev().copied(), i);
        }
        Ok(RewriteSystem {
            order: DegLexOrder::new(alphabet),
            elements: monic,
            leads,
            rev_leads,
        })
    }

    pub fn empty(alphabet: Alphabet) -> Self {
        Self::new(alphabet, Vec::new()).expect("no elements")
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.order.alphabet()
    }

    pub fn order(&self) -> &DegLexOrder {
        &self.order
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn lead(&self, i: usize) -> &Word {
        self.elements[i]
            .leading_monomial()
            .expect("elements are nonzero")
    }

    pub fn with_elements(&self, elements: Vec<Polynomial>) -> Result<Self> {
        Self::new(self.alphabet().clone(), elements)
    }

    /// Largest leading-word length, 0 when empty.
    pub fn max_degree(&self) -> usize {
        (0..self.len())
            .map(|i| self.lead(i).len())
            .max()
            .unwrap_or(0)
    }

    /// Every occurrence `(position, element)` of a leading word inside `w`.
    pub fn occurrences(&self, w: &Word) -> Vec<(usize, usize)> {
        let letters = w.letters();
        let mut out = Vec::new();
        for start in 0..letters.len() {
            self.leads
                .prefixes_of(letters[start..].iter().copied(), |_, ids| {
                    out.extend(ids.iter().map(|&id| (start, id)));
                });
        }
        out
    }

    /// The preferred elimination inside `w`: the greatest applicable leading
    /// word (lowest element index on ties), at its leftmost occurrence.
    pub fn find_redex(&self, w: &Word) -> Option<(usize, usize)> {
        self.occurrences(w)
            .into_iter()
            .max_by(|&(p1, e1), &(p2, e2)| {
                self.lead(e1)
                    .cmp(self.lead(e2))
                    .then(e2.cmp(&e1))
                    .then(p2.cmp(&p1))
            })
    }

    pub fn is_reducible(&self, w: &Word) -> bool {
        let letters = w.letters();
        (0..letters.len()).any(|start| self.leads.has_prefix_of(letters[start..].iter().copied()))
    }

    /// All applicable eliminations in `p`, in descending monomial order.
    pub fn redexes(&self, p: &Polynomial) -> Vec<Redex> {
        p.monomials()
            .flat_map(|m| {
                self.occurrences(m)
                    .into_iter()
                    .map(|(position, element)| Redex {
                        monomial: m.clone(),
                        element,
                        position,
                    })
            })
            .collect()
    }

    /// Rewrites one occurrence: `p − c · a · s · b`.
    pub fn apply(&self, p: &Polynomial, redex: &Redex) -> Polynomial {
        let c = p
            .coefficient(&redex.monomial)
            .cloned()
            .unwrap_or_else(Scalar::zero);
        let len = self.lead(redex.element).len();
        let a = &redex.monomial.letters()[..redex.position];
        let b = &redex.monomial.letters()[redex.position + len..];
        let mut out = p.clone();
        out.add_scaled(&-c, &poly::wrap(&self.elements[redex.element], a, b));
        out
    }

    fn eliminate(
        &self,
        p: &mut Polynomial,
        m: &Word,
        c: &Scalar,
        (position, element): (usize, usize),
    ) {
        let len = self.lead(element).len();
        let a = &m.letters()[..position];
        let b = &m.letters()[position + len..];
        p.add_scaled(&-c.clone(), &poly::wrap(&self.elements[element], a, b));
    }
}

/// One elimination step on the greatest reducible monomial of `p`, or `None`
/// when `p` is irreducible.
pub fn reduce_step(p: &Polynomial, s: &RewriteSystem) -> Option<Polynomial> {
    for (m, c) in p.terms() {
        if let Some(hit) = s.find_redex(m) {
            let mut out = p.clone();
            s.eliminate(&mut out, m, c, hit);
            return Some(out);
        }
    }
    None
}

/// Fixed point of [`reduce_step`].
///
/// Monomials above the current one are already irreducible and no step
/// touches them again, so they are moved to the output as they are passed.
pub fn normal_form(p: &Polynomial, s: &RewriteSystem) -> Polynomial {
    let mut rest = p.clone();
    let mut out = Polynomial::zero();
    while let Some((m, c)) = rest.pop_leading() {
        match s.find_redex(&m) {
            Some(hit) => {
                // The eliminated term's own contribution is the popped one.
                let mut tail = Polynomial::zero();
                s.eliminate(&mut tail, &m, &c, hit);
                tail.add_term(m, c);
                rest.add_scaled(&Scalar::one(), &tail);
            }
            None => out.add_term(m, c),
        }
    }
    out
}

/// Words of length at most `max_len` avoiding every leading word as a
/// factor, ascending.
pub fn irr_words(s: &RewriteSystem, max_len: usize) -> Vec<Word> {
    irr_by_length(s, max_len).into_iter().flatten().collect()
}

/// Irreducible words grouped by length `0..=max_len`.
pub fn irr_by_length(s: &RewriteSystem, max_len: usize) -> Vec<Vec<Word>> {
    let n = s.alphabet().len() as u32;
    let mut levels = vec![vec![Word::empty()]];
    for _ in 0..max_len {
        let prev = levels.last().expect("nonempty");
        let mut next = Vec::new();
        for w in prev {
            for l in 0..n {
                let mut letters = w.letters().to_vec();
                letters.push(l);
                // Only factors ending at the new letter can be new.
                if !s.rev_leads.has_prefix_of(letters.iter().rev().copied()) {
                    next.push(Word::new(letters));
                }
            }
        }
        levels.push(next);
    }
    levels
}

/// Number of irreducible words of each length `0..=max_len`.
pub fn irr_counts(s: &RewriteSystem, max_len: usize) -> Vec<usize> {
    irr_by_length(s, max_len).iter().map(Vec::len).collect()
}

/// Echelon basis of `span{a·s·b : deg ≤ d}` with its rank recorded at every
/// bound `d = 0..=max_deg`.
#[derive(Clone, Debug)]
pub struct BoundedSpan {
    pub echelon: SparseEchelon<Word>,
    pub rank_at: Vec<usize>,
}

impl BoundedSpan {
    pub fn build(s: &RewriteSystem, max_deg: usize) -> Self {
        let mut echelon = SparseEchelon::new();
        let mut rank_at = Vec::with_capacity(max_deg + 1);
        let n = s.alphabet().len();
        for d in 0..=max_deg {
            for (i, elem) in s.elements().iter().enumerate() {
                let lead_len = s.lead(i).len();
                if lead_len > d {
                    continue;
                }
                let extra = d - lead_len;
                for left in 0..=extra {
                    let lefts = words_of_length(n, left);
                    let rights = words_of_length(n, extra - left);
                    for a in &lefts {
                        for b in &rights {
                            echelon.insert(poly::wrap(elem, a.letters(), b.letters()));
                        }
                    }
                }
            }
            rank_at.push(echelon.rank());
        }
        BoundedSpan { echelon, rank_at }
    }

    /// Dimension of `k⟨X⟩_{≤d} / span_d` for each `d`.
    pub fn quotient_dims(&self, letters: usize) -> Vec<usize> {
        let mut total = 0usize;
        self.rank_at
            .iter()
            .enumerate()
            .map(|(d, r)| {
                total += letters.pow(d as u32);
                total - r
            })
            .collect()
    }
}

/// Tests `p ∈ span{a·s·b : every monomial of length ≤ max_deg}`.
///
/// Exact when reductions stay within the bound; may give false negatives
/// for ideal members that need higher-degree intermediate terms.
pub fn membership_oracle(p: &Polynomial, s: &RewriteSystem, max_deg: usize) -> Result<bool> {
    if let Some(d) = poly::degree(p) {
        if d > max_deg {
            return Err(Error::BoundTooSmall {
                bound: max_deg,
                needed: d,
            });
        }
    }
    if p.is_zero() {
        return Ok(true);
    }
    Ok(BoundedSpan::build(s, max_deg).echelon.contains(p))
}
