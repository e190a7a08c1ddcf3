//! Finite linear combinations of monomials with exact rational coefficients.

use std::collections::btree_map::{self, BTreeMap};
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar. Always in lowest terms with positive denominator.
pub type Scalar = num_rational::BigRational;

pub fn scalar(n: i64) -> Scalar {
    Scalar::from_integer(n.into())
}

pub fn ratio(n: i64, d: i64) -> Scalar {
    Scalar::new(n.into(), d.into())
}

/// A finite mapping from monomials to nonzero scalars.
///
/// The monomial type's `Ord` is the monomial order; iteration through
/// [`LinComb::terms`] runs from the greatest monomial down.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<M: Ord> {
    terms: BTreeMap<M, Scalar>,
}

impl<M: Ord> Default for LinComb<M> {
    fn default() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }
}

impl<M: Ord + Clone> LinComb<M> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(m: M) -> Self {
        Self::term(Scalar::one(), m)
    }

    pub fn term(c: Scalar, m: M) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (M, Scalar)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &M) -> Option<&Scalar> {
        self.terms.get(m)
    }

    /// Terms in descending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&M, &Scalar)> + ExactSizeIterator {
        self.terms.iter().rev()
    }

    pub fn monomials(&self) -> impl DoubleEndedIterator<Item = &M> + ExactSizeIterator {
        self.terms.keys().rev()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (M, Scalar)> {
        self.terms.into_iter().rev()
    }

    pub fn add_term(&mut self, m: M, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &Scalar, other: &LinComb<M>) {
        if c.is_zero() {
            return;
        }
        for (m, d) in &other.terms {
            self.add_term(m.clone(), c * d);
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LinComb {
            terms: self.terms.iter().map(|(m, d)| (m.clone(), c * d)).collect(),
        }
    }

    /// Applies a monomial map; collisions are summed.
    pub fn map_monomials<N: Ord + Clone>(&self, mut f: impl FnMut(&M) -> N) -> LinComb<N> {
        LinComb::from_terms(self.terms.iter().map(|(m, c)| (f(m), c.clone())))
    }

    pub fn leading(&self) -> Option<(&M, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn leading_monomial(&self) -> Option<&M> {
        self.terms.keys().next_back()
    }

    pub fn try_leading(&self) -> Result<(&M, &Scalar)> {
        self.leading().ok_or(Error::NoLeadingTerm)
    }

    /// Scales so the leading coefficient is 1.
    pub fn make_monic(&self) -> Result<Self> {
        let (_, c) = self.try_leading()?;
        Ok(self.scale(&c.recip()))
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|(_, c)| c.is_one())
    }

    /// Removes and returns the leading term.
    pub fn pop_leading(&mut self) -> Option<(M, Scalar)> {
        self.terms.pop_last()
    }
}

impl<M: Ord + Clone> Add for &LinComb<M> {
    type Output = LinComb<M>;

    fn add(self, rhs: Self) -> LinComb<M> {
        let mut out = self.clone();
        out.add_scaled(&Scalar::one(), rhs);
        out
    }
}

impl<M: Ord + Clone> Sub for &LinComb<M> {
    type Output = LinComb<M>;

    fn sub(self, rhs: Self) -> LinComb<M> {
        let mut out = self.clone();
        out.add_scaled(&-Scalar::one(), rhs);
        out
    }
}

impl<M: Ord + Clone> Neg for &LinComb<M> {
    type Output = LinComb<M>;

    fn neg(self) -> LinComb<M> {
        self.scale(&-Scalar::one())
    }
}

impl<M: Ord + Clone + std::fmt::Debug> std::fmt::Debug for LinComb<M> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in self.terms() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{c}·{m:?}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_coefficients_are_dropped() {
        let mut p: LinComb<u32> = LinComb::from_terms([(1, scalar(2)), (0, scalar(1))]);
        p.add_term(1, scalar(-2));
        assert_eq!(p, LinComb::monomial(0));
        assert_eq!(LinComb::term(scalar(0), 5u32), LinComb::zero());
    }

    #[test]
    fn leading_is_greatest_key() {
        let p: LinComb<u32> =
            LinComb::from_terms([(3, scalar(2)), (7, ratio(-1, 3)), (1, scalar(1))]);
        assert_eq!(p.leading(), Some((&7, &ratio(-1, 3))));
        assert_eq!(p.monomials().copied().collect::<Vec<_>>(), vec![7, 3, 1]);
        let m = p.make_monic().unwrap();
        assert_eq!(m.coefficient(&3), Some(&scalar(-6)));
        assert!(LinComb::<u32>::zero().make_monic().is_err());
    }
}
