use super::is_gsb_bounded;
use crate::rewrite::{irr_counts, BoundedSpan, RewriteSystem};
use crate::word::Word;

/// Bounded-degree check of the three equivalent Composition-Diamond
/// conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CdReport {
    pub max_deg: usize,
    /// (i): every composition with `|w| ≤ max_deg` reduces to zero.
    pub compositions_trivial: bool,
    pub failing_compositions: usize,
    /// (ii): every leading word of the bounded ideal span contains a leading
    /// word of `S` as a factor.
    pub leads_reducible: bool,
    /// Leading words of the bounded span that are irreducible.
    pub irreducible_leads: Vec<Word>,
    /// (iii): irreducible words of length ≤ d number exactly the bounded
    /// quotient dimension, for every d.
    pub irr_matches: bool,
    /// Irreducible words of each exact length.
    pub irr_counts: Vec<usize>,
    /// `dim k⟨X⟩_{≤d} / span{a·s·b : deg ≤ d}`.
    pub quotient_dims: Vec<usize>,
}

impl CdReport {
    pub fn agree(&self) -> bool {
        self.compositions_trivial == self.leads_reducible
            && self.leads_reducible == self.irr_matches
    }

    pub fn all_hold(&self) -> bool {
        self.compositions_trivial && self.leads_reducible && self.irr_matches
    }
}

/// The leading-word condition is checked on the whole bounded span, not a
/// sample: the pivots of its echelon basis are exactly the leading words of
/// its elements.
pub fn cd_lemma_check(s: &RewriteSystem, max_deg: usize) -> CdReport {
    let gsb = is_gsb_bounded(s, Some(max_deg));
    let span = BoundedSpan::build(s, max_deg);
    let irreducible_leads: Vec<Word> = span
        .echelon
        .pivots()
        .filter(|w| !s.is_reducible(w))
        .cloned()
        .collect();
    let irr_counts = irr_counts(s, max_deg);
    let quotient_dims = span.quotient_dims(s.alphabet().len());
    let mut cumulative = 0;
    let irr_matches = irr_counts.iter().zip(&quotient_dims).all(|(n, q)| {
        cumulative += n;
        cumulative == *q
    });
    CdReport {
        max_deg,
        compositions_trivial: gsb.holds,
        failing_compositions: gsb.failing.len(),
        leads_reducible: irreducible_leads.is_empty(),
        irreducible_leads,
        irr_matches,
        irr_counts,
        quotient_dims,
    }
}
