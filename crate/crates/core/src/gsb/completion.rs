//! The Shirshov completion procedure and inter-reduction.

use std::time::Instant;

use super::{all_compositions, Composition};
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rewrite::{normal_form, RewriteSystem};
use crate::word::Word;

/// Minimal form of `s`: no leading word contains another as a factor and
/// every element is reduced modulo the rest. Generates the same ideal.
pub fn inter_reduce(s: &RewriteSystem) -> RewriteSystem {
    let mut elems: Vec<Polynomial> = s.elements().to_vec();
    loop {
        let leads: Vec<Word> = elems
            .iter()
            .map(|p| p.leading_monomial().expect("nonzero").clone())
            .collect();
        let victim = (0..elems.len()).find(|&i| {
            (0..elems.len()).any(|j| {
                j != i && leads[i].contains_factor(&leads[j]) && (leads[i] != leads[j] || j < i)
            })
        });
        let Some(i) = victim else { break };
        let removed = elems.remove(i);
        let others = s.with_elements(elems.clone()).expect("monic elements");
        let r = normal_form(&removed, &others);
        if !r.is_zero() {
            elems.push(r.make_monic().expect("nonzero"));
        }
    }
    for i in 0..elems.len() {
        let mut others = elems.clone();
        let this = others.remove(i);
        let others = s.with_elements(others).expect("monic elements");
        elems[i] = normal_form(&this, &others);
    }
    elems.sort_by(|p, q| p.leading_monomial().cmp(&q.leading_monomial()));
    s.with_elements(elems).expect("monic elements")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompletionStatus {
    /// Every composition of the output reduces to zero.
    Completed,
    /// Closed up to the degree cap; some composition above it is nontrivial.
    DegreeCapped,
    /// The basis grew past the element cap.
    ElementCapped,
}

impl CompletionStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            CompletionStatus::Completed => "completed",
            CompletionStatus::DegreeCapped => "degree-capped",
            CompletionStatus::ElementCapped => "element-capped",
        }
    }
}

/// One adjoined element and the ambient word of the composition it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompletionStep {
    pub w: Word,
    pub element: Polynomial,
}

#[derive(Clone, Debug)]
pub struct CompletionReport {
    pub status: CompletionStatus,
    pub basis: RewriteSystem,
    pub added: usize,
    pub iterations: usize,
    pub trace: Vec<CompletionStep>,
}

#[derive(Clone, Copy, Debug)]
pub struct CompletionLimits {
    /// Compositions with ambient word longer than this are not processed.
    pub max_deg: usize,
    pub max_elems: usize,
    pub deadline: Option<Instant>,
}

pub fn shirshov_complete(s: &RewriteSystem, max_deg: usize, max_elems: usize) -> CompletionReport {
    shirshov_complete_with(
        s,
        CompletionLimits {
            max_deg,
            max_elems,
            deadline: None,
        },
    )
    .expect("no deadline")
}

/// Adjoins normal forms of nontrivial compositions, in ascending order of
/// ambient word, until closed or a limit is hit. Fails only when the
/// deadline passes.
pub fn shirshov_complete_with(
    s: &RewriteSystem,
    limits: CompletionLimits,
) -> Result<CompletionReport> {
    let mut basis = inter_reduce(s);
    let mut added = 0;
    let mut iterations = 0;
    let mut trace = Vec::new();
    let check_deadline = || match limits.deadline {
        Some(d) if Instant::now() >= d => {
            Err(Error::ResourceLimit("completion deadline passed".into()))
        }
        _ => Ok(()),
    };
    loop {
        iterations += 1;
        check_deadline()?;
        let pending: Vec<Composition> = all_compositions(&basis)
            .into_iter()
            .filter(|c| c.w.len() <= limits.max_deg)
            .collect();
        let mut current = basis.clone();
        let mut grew = false;
        for c in pending {
            let r = normal_form(&c.result, &current);
            if r.is_zero() {
                continue;
            }
            check_deadline()?;
            let r = r.make_monic().expect("nonzero");
            trace.push(CompletionStep {
                w: c.w.clone(),
                element: r.clone(),
            });
            let mut elems = current.elements().to_vec();
            elems.push(r);
            current = current.with_elements(elems).expect("monic elements");
            added += 1;
            grew = true;
            if current.len() > limits.max_elems {
                return Ok(CompletionReport {
                    status: CompletionStatus::ElementCapped,
                    basis: inter_reduce(&current),
                    added,
                    iterations,
                    trace,
                });
            }
        }
        basis = inter_reduce(&current);
        if !grew {
            break;
        }
    }
    let closed = all_compositions(&basis)
        .iter()
        .filter(|c| c.w.len() > limits.max_deg)
        .all(|c| normal_form(&c.result, &basis).is_zero());
    Ok(CompletionReport {
        status: if closed {
            CompletionStatus::Completed
        } else {
            CompletionStatus::DegreeCapped
        },
        basis,
        added,
        iterations,
        trace,
    })
}
