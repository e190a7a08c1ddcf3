//! Exact linear algebra over the rationals.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lincomb::{LinComb, Scalar};

/// Reduced row-echelon form of a dense matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowEchelon {
    /// Nonzero rows of the reduced form, top to bottom.
    pub rows: Vec<Vec<Scalar>>,
    /// Pivot column of each row.
    pub pivots: Vec<usize>,
    pub rank: usize,
}

/// Gauss-Jordan elimination; the pivot of each row is its leftmost nonzero entry.
pub fn row_reduce(rows: &[Vec<Scalar>]) -> Result<RowEchelon> {
    let width = rows.first().map_or(0, Vec::len);
    if let Some(bad) = rows.iter().find(|r| r.len() != width) {
        return Err(Error::DimensionMismatch {
            expected: width,
            found: bad.len(),
        });
    }
    let mut m: Vec<Vec<Scalar>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..width {
        let Some(found) = (next..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(next, found);
        let inv = m[next][col].recip();
        for x in m[next].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[next].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == next || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &factor * p;
                }
            }
        }
        pivots.push(col);
        next += 1;
        if next == m.len() {
            break;
        }
    }
    m.truncate(next);
    Ok(RowEchelon {
        rank: next,
        rows: m,
        pivots,
    })
}

/// Incremental echelon basis of a subspace spanned by sparse vectors.
///
/// Every stored row is monic and keyed by its greatest monomial, so the key
/// set is exactly the set of leading monomials of the subspace.
#[derive(Clone)]
pub struct SparseEchelon<M: Ord> {
    rows: BTreeMap<M, LinComb<M>>,
}

impl<M: Ord + std::fmt::Debug> std::fmt::Debug for SparseEchelon<M> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SparseEchelon")
            .field("pivots", &self.rows.keys().collect::<Vec<_>>())
            .finish()
    }
}

impl<M: Ord> Default for SparseEchelon<M> {
    fn default() -> Self {
        SparseEchelon {
            rows: BTreeMap::new(),
        }
    }
}

impl<M: Ord + Clone> SparseEchelon<M> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Leading monomials of the subspace, ascending.
    pub fn pivots(&self) -> impl Iterator<Item = &M> {
        self.rows.keys()
    }

    pub fn is_pivot(&self, m: &M) -> bool {
        self.rows.contains_key(m)
    }

    /// Adds a vector; returns whether it enlarged the span.
    pub fn insert(&mut self, mut v: LinComb<M>) -> bool {
        while let Some((lead, c)) = v.leading() {
            match self.rows.get(lead) {
                Some(row) => {
                    let c = -c.clone();
                    v.add_scaled(&c, row);
                }
                None => {
                    let lead = lead.clone();
                    let v = v.make_monic().expect("nonzero");
                    self.rows.insert(lead, v);
                    return true;
                }
            }
        }
        false
    }

    /// Remainder of `v` after eliminating every pivot monomial.
    pub fn reduce(&self, mut v: LinComb<M>) -> LinComb<M> {
        let mut out = LinComb::zero();
        while let Some((m, c)) = v.pop_leading() {
            match self.rows.get(&m) {
                Some(row) => {
                    // row is monic with leading m; subtract the rest of c·row.
                    for (n, d) in row.terms().skip(1) {
                        v.add_term(n.clone(), -(&c * d));
                    }
                }
                None => out.add_term(m, c),
            }
        }
        out
    }

    pub fn contains(&self, v: &LinComb<M>) -> bool {
        self.reduce(v.clone()).is_zero()
    }
}

pub(crate) fn unit(n: usize, i: usize) -> Vec<Scalar> {
    (0..n)
        .map(|j| {
            if i == j {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lincomb::scalar;
    use proptest::prelude::*;

    fn mat(rows: &[&[i64]]) -> Vec<Vec<Scalar>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| scalar(x)).collect())
            .collect()
    }

    #[test]
    fn examples() {
        assert_eq!(row_reduce(&mat(&[&[1, 2], &[2, 4]])).unwrap().rank, 1);
        assert_eq!(row_reduce(&[]).unwrap().rank, 0);
        let id = row_reduce(&mat(&[&[0, 1], &[1, 0]])).unwrap();
        assert_eq!(id.rank, 2);
        assert_eq!(id.rows, mat(&[&[1, 0], &[0, 1]]));
        assert_eq!(id.pivots, vec![0, 1]);
    }

    #[test]
    fn ragged_input_is_rejected() {
        assert_eq!(
            row_reduce(&mat(&[&[1, 2], &[1]])),
            Err(Error::DimensionMismatch {
                expected: 2,
                found: 1
            })
        );
    }

    fn det(m: &[Vec<Scalar>]) -> Scalar {
        if m.is_empty() {
            return Scalar::one();
        }
        let n = m.len();
        let mut total = Scalar::zero();
        for col in 0..n {
            let minor: Vec<Vec<Scalar>> = m[1..]
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|(j, _)| *j != col)
                        .map(|(_, x)| x.clone())
                        .collect()
                })
                .collect();
            let term = &m[0][col] * det(&minor);
            if col % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        total
    }

    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        (0u32..1 << n)
            .filter(|s| s.count_ones() as usize == k)
            .map(|s| (0..n).filter(|i| s >> i & 1 == 1).collect())
            .collect()
    }

    /// Rank as the largest order of a nonvanishing minor.
    fn minor_rank(m: &[Vec<Scalar>]) -> usize {
        let rows = m.len();
        let cols = m.first().map_or(0, Vec::len);
        for k in (1..=rows.min(cols)).rev() {
            for rs in subsets(rows, k) {
                for cs in subsets(cols, k) {
                    let sub: Vec<Vec<Scalar>> = rs
                        .iter()
                        .map(|&r| cs.iter().map(|&c| m[r][c].clone()).collect())
                        .collect();
                    if !det(&sub).is_zero() {
                        return k;
                    }
                }
            }
        }
        0
    }

    fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..=4, 1usize..=4)
            .prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-2i64..=2, c), r))
    }

    proptest! {
        #[test]
        fn rank_matches_minor_expansion(m in small_matrix()) {
            let m: Vec<Vec<Scalar>> = m.iter().map(|r| r.iter().map(|&x| scalar(x)).collect()).collect();
            let reduced = row_reduce(&m).unwrap();
            prop_assert_eq!(reduced.rank, minor_rank(&m));
            for (row, &p) in reduced.rows.iter().zip(&reduced.pivots) {
                prop_assert!(row[p].is_one());
                prop_assert!(row[..p].iter().all(Zero::is_zero));
            }
        }

        #[test]
        fn sparse_echelon_rank_matches_dense(m in small_matrix()) {
            let dense: Vec<Vec<Scalar>> = m.iter().map(|r| r.iter().map(|&x| scalar(x)).collect()).collect();
            let mut sparse = SparseEchelon::<usize>::new();
            for row in &dense {
                sparse.insert(LinComb::from_terms(row.iter().cloned().enumerate()));
            }
            prop_assert_eq!(sparse.rank(), row_reduce(&dense).unwrap().rank);
            for row in &dense {
                prop_assert!(sparse.contains(&LinComb::from_terms(row.iter().cloned().enumerate())));
            }
        }
    }
}
