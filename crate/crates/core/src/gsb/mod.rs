//! Compositions of noncommutative polynomials and Gröbner–Shirshov basis
//! verification.

mod cdlemma;
mod completion;

use crate::poly::{self, Polynomial};
use crate::rewrite::{normal_form, RewriteSystem};
use crate::word::Word;

pub use cdlemma::{cd_lemma_check, CdReport};
pub use completion::{
    inter_reduce, shirshov_complete, shirshov_complete_with, CompletionLimits, CompletionReport,
    CompletionStatus, CompletionStep,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CompositionKind {
    /// `w = f̄·b = a·ḡ` with the leading words overlapping; result `f·b − a·g`.
    Intersection,
    /// `w = f̄ = a·ḡ·b`; result `f − a·g·b`.
    Inclusion,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Composition {
    pub kind: CompositionKind,
    /// The ambient word.
    pub w: Word,
    pub left: usize,
    pub right: usize,
    pub a: Word,
    pub b: Word,
    pub result: Polynomial,
}

impl Composition {
    fn sort_key(&self) -> (&Word, usize, usize, CompositionKind, usize) {
        (&self.w, self.left, self.right, self.kind, self.a.len())
    }
}

/// All compositions of monic `f` (index `left`) with monic `g` (index
/// `right`): intersections where a proper suffix of `f̄` is a proper prefix
/// of `ḡ`, and inclusions of `ḡ` inside `f̄`. An element is not paired
/// with itself at the identity position, where the result is always zero.
pub fn find_compositions(
    left: usize,
    f: &Polynomial,
    right: usize,
    g: &Polynomial,
) -> Vec<Composition> {
    let (Some(fl), Some(gl)) = (f.leading_monomial(), g.leading_monomial()) else {
        return Vec::new();
    };
    let (fw, gw) = (fl.letters(), gl.letters());
    let mut out = Vec::new();
    for k in (1..fw.len().min(gw.len())).rev() {
        if fw[fw.len() - k..] == gw[..k] {
            let a = &fw[..fw.len() - k];
            let b = &gw[k..];
            let result = &poly::wrap(f, &[], b) - &poly::wrap(g, a, &[]);
            out.push(Composition {
                kind: CompositionKind::Intersection,
                w: fl.wrap(&[], b),
                left,
                right,
                a: Word::from(a),
                b: Word::from(b),
                result,
            });
        }
    }
    for pos in fl.occurrences(gl) {
        if left == right && fw.len() == gw.len() {
            continue;
        }
        let a = &fw[..pos];
        let b = &fw[pos + gw.len()..];
        let result = f - &poly::wrap(g, a, b);
        out.push(Composition {
            kind: CompositionKind::Inclusion,
            w: fl.clone(),
            left,
            right,
            a: Word::from(a),
            b: Word::from(b),
            result,
        });
    }
    out
}

/// Every composition among elements of `s` (all ordered pairs, self-pairs
/// included), sorted by ambient word, then element indices.
pub fn all_compositions(s: &RewriteSystem) -> Vec<Composition> {
    let elems = s.elements();
    let mut out = Vec::new();
    for (i, f) in elems.iter().enumerate() {
        for (j, g) in elems.iter().enumerate() {
            out.extend(find_compositions(i, f, j, g));
        }
    }
    out.sort_by(|x, y| x.sort_key().cmp(&y.sort_key()));
    out
}

/// Whether the composition reduces to zero modulo `s`.
pub fn is_trivial(c: &Composition, s: &RewriteSystem) -> bool {
    normal_form(&c.result, s).is_zero()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GsbReport {
    pub holds: bool,
    /// Number of compositions examined.
    pub checked: usize,
    pub failing: Vec<Composition>,
}

pub fn is_gsb(s: &RewriteSystem) -> GsbReport {
    is_gsb_bounded(s, None)
}

/// GS-basis check restricted to compositions with `|w| ≤ max_w`.
pub fn is_gsb_bounded(s: &RewriteSystem, max_w: Option<usize>) -> GsbReport {
    let comps: Vec<Composition> = all_compositions(s)
        .into_iter()
        .filter(|c| max_w.is_none_or(|m| c.w.len() <= m))
        .collect();
    let checked = comps.len();
    let failing: Vec<Composition> = comps.into_iter().filter(|c| !is_trivial(c, s)).collect();
    GsbReport {
        holds: failing.is_empty(),
        checked,
        failing,
    }
}
