//! Noncommutative polynomials in the free associative algebra.

use std::fmt;

use num_traits::{One, Signed};

use crate::alphabet::Alphabet;
use crate::error::Result;
use crate::lincomb::{LinComb, Scalar};
use crate::word::{DegLexOrder, Word};

pub type Polynomial = LinComb<Word>;

pub fn poly_add(p: &Polynomial, q: &Polynomial) -> Polynomial {
    p + q
}

/// Bilinear extension of word concatenation.
pub fn poly_mul(p: &Polynomial, q: &Polynomial) -> Polynomial {
    let mut out = Polynomial::zero();
    for (u, c) in p.terms() {
        for (v, d) in q.terms() {
            out.add_term(u.concat(v), c * d);
        }
    }
    out
}

/// The deg-lex leading word and its coefficient.
pub fn leading<'a>(p: &'a Polynomial, ord: &DegLexOrder) -> Result<(&'a Word, &'a Scalar)> {
    let lead = p.try_leading()?;
    lead.0.validate(ord.alphabet())?;
    Ok(lead)
}

pub fn make_monic(p: &Polynomial, ord: &DegLexOrder) -> Result<Polynomial> {
    leading(p, ord)?;
    p.make_monic()
}

/// `a · p · b` for words `a`, `b`.
pub fn wrap(p: &Polynomial, a: &[u32], b: &[u32]) -> Polynomial {
    p.map_monomials(|w| w.wrap(a, b))
}

/// Length of the longest monomial; `None` for zero.
pub fn degree(p: &Polynomial) -> Option<usize> {
    p.monomials().map(Word::len).max()
}

pub fn validate(p: &Polynomial, alphabet: &Alphabet) -> Result<()> {
    p.monomials().try_for_each(|w| w.validate(alphabet))
}

/// Canonical text: descending terms, unit coefficients omitted, signs folded.
pub fn display<'a>(p: &'a Polynomial, alphabet: &'a Alphabet) -> DisplayPoly<'a> {
    DisplayPoly { p, alphabet }
}

pub struct DisplayPoly<'a> {
    p: &'a Polynomial,
    alphabet: &'a Alphabet,
}

impl fmt::Display for DisplayPoly<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.p.terms(), |w| {
            (!w.is_empty()).then(|| w.display(self.alphabet).to_string())
        })
    }
}

/// Writes `c1*m1 + c2*m2 - ...`. `render` returns `None` for the unit
/// monomial, which is printed as its bare coefficient.
pub(crate) fn write_terms<'a, M: 'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a M, &'a Scalar)>,
    mut render: impl FnMut(&M) -> Option<String>,
) -> fmt::Result {
    let mut first = true;
    for (m, c) in terms {
        match (first, c.is_negative()) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        first = false;
        let abs = c.abs();
        match render(m) {
            None => write!(f, "{abs}")?,
            Some(text) if abs.is_one() => f.write_str(&text)?,
            Some(text) => write!(f, "{abs}*{text}")?,
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lincomb::{ratio, scalar};
    use crate::word::words_of_length;

    fn alpha() -> Alphabet {
        Alphabet::new(["x", "y"]).unwrap()
    }

    fn x() -> Polynomial {
        Polynomial::monomial(Word::letter(0))
    }

    fn y() -> Polynomial {
        Polynomial::monomial(Word::letter(1))
    }

    fn w(l: &[u32]) -> Word {
        Word::from(l)
    }

    #[test]
    fn add_examples() {
        assert_eq!(poly_add(&(&x() - &y()), &y()), x());
        assert_eq!(poly_add(&x(), &Polynomial::zero()), x());
        let a = Polynomial::term(ratio(1, 2), w(&[0, 1]));
        let b = Polynomial::term(ratio(1, 3), w(&[0, 1]));
        assert_eq!(poly_add(&a, &b), Polynomial::term(ratio(5, 6), w(&[0, 1])));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(poly_mul(&x(), &y()), Polynomial::monomial(w(&[0, 1])));
        let expected = Polynomial::from_terms([
            (w(&[0, 0]), scalar(1)),
            (w(&[0, 1]), scalar(-1)),
            (w(&[1, 0]), scalar(1)),
            (w(&[1, 1]), scalar(-1)),
        ]);
        assert_eq!(poly_mul(&(&x() + &y()), &(&x() - &y())), expected);
        assert!(poly_mul(&x(), &Polynomial::zero()).is_zero());
    }

    #[test]
    fn leading_examples() {
        // x > y: alphabet listed y, x.
        let yx_order = DegLexOrder::new(Alphabet::new(["y", "x"]).unwrap());
        let (xl, yl) = (1u32, 0u32);
        let p = Polynomial::from_terms([(w(&[xl]), scalar(1)), (w(&[yl]), scalar(-1))]);
        assert_eq!(leading(&p, &yx_order).unwrap(), (&w(&[xl]), &scalar(1)));

        let ord = DegLexOrder::new(alpha());
        let p = Polynomial::from_terms([(w(&[1, 0]), scalar(1)), (w(&[0, 1]), scalar(-1))]);
        assert_eq!(leading(&p, &ord).unwrap().0, &w(&[1, 0]));

        // 2·xyx − 3·yxx with x > y.
        let xyx = w(&[xl, yl, xl]);
        let yxx = w(&[yl, xl, xl]);
        let p = Polynomial::from_terms([(xyx.clone(), scalar(2)), (yxx.clone(), scalar(-3))]);
        let mut all = words_of_length(2, 3);
        all.sort();
        let rank = |u: &Word| all.iter().position(|v| v == u).unwrap();
        assert!(rank(&xyx) > rank(&yxx));
        assert_eq!(leading(&p, &yx_order).unwrap(), (&xyx, &scalar(2)));

        assert!(leading(&Polynomial::zero(), &ord).is_err());
    }

    #[test]
    fn monic_examples() {
        // 2x − 4y with x > y (alphabet listed y, x).
        let yx_order = DegLexOrder::new(Alphabet::new(["y", "x"]).unwrap());
        let p = Polynomial::from_terms([(w(&[1]), scalar(2)), (w(&[0]), scalar(-4))]);
        let q = Polynomial::from_terms([(w(&[1]), scalar(1)), (w(&[0]), scalar(-2))]);
        assert_eq!(make_monic(&p, &yx_order).unwrap(), q);

        let ord = DegLexOrder::new(alpha());
        assert_eq!(make_monic(&x(), &ord).unwrap(), x());
        let p = Polynomial::from_terms([(w(&[1, 0]), ratio(-1, 3)), (w(&[1]), scalar(1))]);
        let m = make_monic(&p, &ord).unwrap();
        assert_eq!(
            m,
            Polynomial::from_terms([(w(&[1, 0]), scalar(1)), (w(&[1]), scalar(-3))])
        );
        assert_eq!(m.scale(&ratio(-1, 3)), p);
        assert!(make_monic(&Polynomial::zero(), &ord).is_err());
    }

    #[test]
    fn canonical_display() {
        let a = alpha();
        let p = Polynomial::from_terms([
            (w(&[1, 0]), scalar(1)),
            (w(&[0, 1]), scalar(-1)),
            (w(&[0]), ratio(-3, 2)),
            (w(&[]), scalar(2)),
        ]);
        assert_eq!(display(&p, &a).to_string(), "y*x - x*y - 3/2*x + 2");
        assert_eq!(display(&Polynomial::zero(), &a).to_string(), "0");
        assert_eq!(display(&(-&x()), &a).to_string(), "-x");
    }
}
