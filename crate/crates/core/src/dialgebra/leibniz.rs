use std::borrow::Cow;

use num_traits::{One, Zero};

use super::{di_left_poly, di_right_poly, letters_poly, DiPolynomial, DiSystem, Diword};
use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::linalg::{row_reduce, unit};
use crate::lincomb::Scalar;
use crate::word::Word;

/// A finite-dimensional Leibniz algebra given by structure constants
/// `{eᵢ, eⱼ} = Σₖ αᵢⱼᵏ eₖ` on the basis `e1 < … < en`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeibnizAlgebra {
    dim: usize,
    /// `bracket[i][j]` is the coordinate vector of `{eᵢ, eⱼ}`.
    bracket: Vec<Vec<Vec<Scalar>>>,
}

impl LeibnizAlgebra {
    /// Unlisted brackets are zero.
    pub fn new(
        dim: usize,
        brackets: impl IntoIterator<Item = ((usize, usize), Vec<Scalar>)>,
    ) -> Result<Self> {
        let mut bracket = vec![vec![vec![Scalar::zero(); dim]; dim]; dim];
        for ((i, j), v) in brackets {
            for idx in [i, j] {
                if idx >= dim {
                    return Err(Error::InvalidWord {
                        index: idx,
                        size: dim,
                    });
                }
            }
            if v.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: v.len(),
                });
            }
            bracket[i][j] = v;
        }
        Ok(LeibnizAlgebra { dim, bracket })
    }

    pub fn abelian(dim: usize) -> Self {
        LeibnizAlgebra::new(dim, []).expect("no brackets")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn alphabet(&self) -> Alphabet {
        Alphabet::indexed("e", self.dim)
    }

    pub fn bracket(&self, i: usize, j: usize) -> &[Scalar] {
        &self.bracket[i][j]
    }

    /// Bilinear extension to coordinate vectors.
    pub fn bracket_vec(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, a) in u.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in v.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a * b;
                for (o, c) in out.iter_mut().zip(&self.bracket[i][j]) {
                    *o += &ab * c;
                }
            }
        }
        out
    }

    /// Reduced echelon basis of `L₀ = span{{a,a}, {a,b} + {b,a}}`.
    pub fn l0_basis(&self) -> Vec<Vec<Scalar>> {
        let mut rows = Vec::new();
        for i in 0..self.dim {
            rows.push(self.bracket[i][i].clone());
            for j in i + 1..self.dim {
                rows.push(
                    self.bracket[i][j]
                        .iter()
                        .zip(&self.bracket[j][i])
                        .map(|(a, b)| a + b)
                        .collect(),
                );
            }
        }
        if rows.is_empty() {
            return rows;
        }
        row_reduce(&rows).expect("rows share the dimension").rows
    }

    /// Indices spanning `L₀` when it is spanned by basis vectors.
    pub fn i0(&self) -> Option<Vec<usize>> {
        let basis = self.l0_basis();
        let mut out = Vec::with_capacity(basis.len());
        for row in &basis {
            let mut nonzero = row.iter().enumerate().filter(|(_, c)| !c.is_zero());
            let (i, _) = nonzero.next()?;
            if nonzero.next().is_some() {
                return None;
            }
            out.push(i);
        }
        Some(out)
    }

    /// The same algebra in a basis whose first vectors span `L₀`; unchanged
    /// when `L₀` is already spanned by basis vectors.
    pub fn adapted(&self) -> Cow<'_, LeibnizAlgebra> {
        if self.i0().is_some() {
            return Cow::Borrowed(self);
        }
        let n = self.dim;
        let l0 = self.l0_basis();
        let pivots: Vec<usize> = l0
            .iter()
            .map(|r| r.iter().position(|c| !c.is_zero()).expect("nonzero row"))
            .collect();
        let mut change = l0.clone();
        change.extend((0..n).filter(|c| !pivots.contains(c)).map(|c| unit(n, c)));
        // Invert the change of basis: reduce [P | I].
        let augmented: Vec<Vec<Scalar>> = change
            .iter()
            .enumerate()
            .map(|(i, row)| row.iter().cloned().chain(unit(n, i)).collect())
            .collect();
        let reduced = row_reduce(&augmented).expect("square");
        let inverse: Vec<Vec<Scalar>> = reduced.rows.iter().map(|r| r[n..].to_vec()).collect();
        let to_new = |v: &[Scalar]| -> Vec<Scalar> {
            (0..n)
                .map(|k| v.iter().zip(&inverse).map(|(a, row)| a * &row[k]).sum())
                .collect()
        };
        let mut brackets = Vec::new();
        for a in 0..n {
            for b in 0..n {
                let v = self.bracket_vec(&change[a], &change[b]);
                brackets.push(((a, b), to_new(&v)));
            }
        }
        Cow::Owned(LeibnizAlgebra::new(n, brackets).expect("square constants"))
    }
}

/// Basis triples `(x, y, z)` where `[[xy]z] − [[xz]y] − [x[yz]]` is nonzero.
pub fn leibniz_violations(l: &LeibnizAlgebra) -> Vec<(usize, usize, usize)> {
    let n = l.dim;
    let e = |i: usize| unit(n, i);
    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let xy_z = l.bracket_vec(&l.bracket_vec(&e(x), &e(y)), &e(z));
                let xz_y = l.bracket_vec(&l.bracket_vec(&e(x), &e(z)), &e(y));
                let x_yz = l.bracket_vec(&e(x), &l.bracket_vec(&e(y), &e(z)));
                let ok = (0..n).all(|k| (&xy_z[k] - &xz_y[k] - &x_yz[k]).is_zero());
                if !ok {
                    out.push((x, y, z));
                }
            }
        }
    }
    out
}

/// The right Leibniz identity `[[xy]z] = [[xz]y] + [x[yz]]` on all basis
/// triples.
pub fn leibniz_check(l: &LeibnizAlgebra) -> bool {
    leibniz_violations(l).is_empty()
}

/// The five relation families presenting the universal enveloping
/// dialgebra, in the adapted basis (see [`LeibnizAlgebra::adapted`]):
///
/// 1. `xⱼ ⊢ xᵢ − xᵢ ⊣ xⱼ + {xᵢ,xⱼ}` for all `i, j`,
/// 2. `xⱼ ⊢ xᵢ ⊢ xₜ − xᵢ ⊢ xⱼ ⊢ xₜ + {xᵢ,xⱼ} ⊢ xₜ` for `j > i`,
/// 3. `x_{i₀} ⊢ xₜ` for `i₀ ∈ I₀`,
/// 4. `xₜ ⊣ xⱼ ⊣ xᵢ − xₜ ⊣ xᵢ ⊣ xⱼ + xₜ ⊣ {xᵢ,xⱼ}` for `j > i`,
/// 5. `xₜ ⊣ x_{i₀}` for `i₀ ∈ I₀`.
pub fn leibniz_enveloping(l: &LeibnizAlgebra) -> Result<DiSystem> {
    let bad = leibniz_violations(l);
    if let Some(&(x, y, z)) = bad.first() {
        return Err(Error::InvalidAlgebra(format!(
            "Leibniz identity fails on (e{}, e{}, e{})",
            x + 1,
            y + 1,
            z + 1
        )));
    }
    let l = l.adapted();
    let i0 = l.i0().expect("adapted basis");
    let n = l.dim;
    let x = |i: usize| DiPolynomial::monomial(Diword::letter(i as u32));
    let br = |i: usize, j: usize| letters_poly(l.bracket(i, j));
    let mut rels = Vec::new();
    for j in 0..n {
        for i in 0..n {
            let f = &(&di_left_poly(&x(j), &x(i)) - &di_right_poly(&x(i), &x(j))) + &br(i, j);
            rels.push(f);
        }
    }
    for j in 0..n {
        for i in 0..j {
            for t in 0..n {
                let ji = di_left_poly(&di_left_poly(&x(j), &x(i)), &x(t));
                let ij = di_left_poly(&di_left_poly(&x(i), &x(j)), &x(t));
                rels.push(&(&ji - &ij) + &di_left_poly(&br(i, j), &x(t)));
            }
        }
    }
    for &i in &i0 {
        for t in 0..n {
            rels.push(di_left_poly(&x(i), &x(t)));
        }
    }
    for j in 0..n {
        for i in 0..j {
            for t in 0..n {
                let ji = di_right_poly(&di_right_poly(&x(t), &x(j)), &x(i));
                let ij = di_right_poly(&di_right_poly(&x(t), &x(i)), &x(j));
                rels.push(&(&ji - &ij) + &di_right_poly(&x(t), &br(i, j)));
            }
        }
    }
    for &i in &i0 {
        for t in 0..n {
            rels.push(di_right_poly(&x(t), &x(i)));
        }
    }
    DiSystem::new(l.alphabet(), rels)
}

/// `xⱼ ⊣ x_{i₁} ⊣ … ⊣ x_{iₖ}` with `j` arbitrary, `i₁ ≤ … ≤ iₖ` outside
/// `I₀`, and total length ≤ `max_len`, in the adapted basis.
pub fn pbw_basis(l: &LeibnizAlgebra, max_len: usize) -> Vec<Diword> {
    let l = l.adapted();
    let i0 = l.i0().expect("adapted basis");
    let free: Vec<u32> = (0..l.dim)
        .filter(|i| !i0.contains(i))
        .map(|i| i as u32)
        .collect();
    let mut tails: Vec<Vec<u32>> = vec![Vec::new()];
    let mut out = Vec::new();
    for len in 1..=max_len {
        for tail in &tails {
            for j in 0..l.dim as u32 {
                let letters: Vec<u32> = std::iter::once(j).chain(tail.iter().copied()).collect();
                out.push(Diword::new(Word::new(letters), 0).expect("nonempty"));
            }
        }
        if len == max_len {
            break;
        }
        tails = tails
            .iter()
            .flat_map(|t| {
                let floor = t.last().copied();
                free.iter()
                    .filter(move |&&i| floor.is_none_or(|f| i >= f))
                    .map(move |&i| {
                        let mut next = t.clone();
                        next.push(i);
                        next
                    })
            })
            .collect();
    }
    out.sort();
    out
}

impl LeibnizAlgebra {
    /// `{e2, e2} = e1`, every other bracket zero.
    pub fn dim2_example() -> Self {
        let mut v = vec![Scalar::zero(); 2];
        v[0] = Scalar::one();
        LeibnizAlgebra::new(2, [((1, 1), v)]).expect("valid constants")
    }
}

#[cfg(test)]
mod tests {
    use super::super::{
        di_gsb_check_bounded, di_left, di_reduce, di_right, di_span, diwords_of_length,
    };
    use super::*;
    use crate::lincomb::scalar;

    fn v(c: &[i64]) -> Vec<Scalar> {
        c.iter().map(|&x| scalar(x)).collect()
    }

    #[test]
    fn identity_checks() {
        assert!(leibniz_check(&LeibnizAlgebra::dim2_example()));
        assert!(leibniz_check(&LeibnizAlgebra::abelian(3)));
        // {e1, e2} = e1, {e2, e1} = 0: right multiplication by e2 is a derivation.
        let l = LeibnizAlgebra::new(2, [((0, 1), v(&[1, 0]))]).unwrap();
        assert!(leibniz_check(&l));
        // {e2, e1} = e1 alone is not right Leibniz.
        let bad = LeibnizAlgebra::new(2, [((1, 0), v(&[1, 0]))]).unwrap();
        assert!(!leibniz_check(&bad));
        assert!(matches!(
            leibniz_enveloping(&bad),
            Err(Error::InvalidAlgebra(_))
        ));
    }

    /// `[a,b] = a ⊣ b − b ⊢ a` on diwords satisfies the right Leibniz
    /// identity in the free dialgebra, while `[[ab]c] − [[ac]b] − [[bc]a]`
    /// does not vanish there.
    #[test]
    fn dialgebra_commutator_is_right_leibniz() {
        let br = |p: &DiPolynomial, q: &DiPolynomial| &di_right_poly(p, q) - &di_left_poly(q, p);
        let words: Vec<Diword> = (1..=2).flat_map(|l| diwords_of_length(2, l)).collect();
        let mut cyclic_fails = false;
        for a in &words {
            for b in &words {
                for c in &words {
                    let (a, b, c) = (
                        DiPolynomial::monomial(a.clone()),
                        DiPolynomial::monomial(b.clone()),
                        DiPolynomial::monomial(c.clone()),
                    );
                    let lhs = br(&br(&a, &b), &c);
                    let rhs = &br(&br(&a, &c), &b) + &br(&a, &br(&b, &c));
                    assert_eq!(lhs, rhs);
                    cyclic_fails |=
                        !(&(&lhs - &br(&br(&a, &c), &b)) - &br(&br(&b, &c), &a)).is_zero();
                }
            }
        }
        assert!(cyclic_fails);
    }

    #[test]
    fn i0_of_examples() {
        assert_eq!(LeibnizAlgebra::dim2_example().i0(), Some(vec![0]));
        assert_eq!(LeibnizAlgebra::abelian(2).i0(), Some(vec![]));
    }

    #[test]
    fn abelian_relations_are_commutation_style() {
        let s = leibniz_enveloping(&LeibnizAlgebra::abelian(2)).unwrap();
        let e = |i: u32| Diword::letter(i);
        let f = |j: u32, i: u32| {
            &DiPolynomial::monomial(di_left(&e(j), &e(i)))
                - &DiPolynomial::monomial(di_right(&e(i), &e(j)))
        };
        for (j, i) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            assert!(s.elements().contains(&f(j, i)));
        }
        // 4 + 2 + 0 + 2 + 0
        assert_eq!(s.len(), 8);
    }

    #[test]
    fn dim2_example_relations() {
        let s = leibniz_enveloping(&LeibnizAlgebra::dim2_example()).unwrap();
        // 4 + 2 + 2 + 2 + 2
        assert_eq!(s.len(), 12);
        // e2 ⊢ e2 − e2 ⊣ e2 + e1 rewrites e2 ė2 into ė2 e2 − e1.
        let alpha = s.alphabet().clone();
        let m = DiPolynomial::monomial(Diword::new(Word::from(&[1u32, 1][..]), 1).unwrap());
        let nf = di_reduce(&m, &s);
        let expected = &DiPolynomial::monomial(Diword::new(Word::from(&[1u32, 1][..]), 0).unwrap())
            - &DiPolynomial::monomial(Diword::letter(0));
        assert_eq!(nf, expected, "{}", super::super::di_display(&nf, &alpha));
        // ė1 ⊣ e1 is killed by family 5.
        let h = DiPolynomial::monomial(Diword::new(Word::from(&[0u32, 0][..]), 0).unwrap());
        assert!(di_reduce(&h, &s).is_zero());
    }

    #[test]
    fn pbw_counts_match_oracle() {
        let l = LeibnizAlgebra::dim2_example();
        let s = leibniz_enveloping(&l).unwrap();
        let report = di_gsb_check_bounded(&s, 3).unwrap();
        assert!(report.holds(), "{report:?}");
        let (_, rank_at) = di_span(&s, 3);
        let mut total = 0;
        for (d, rank) in rank_at.iter().enumerate().skip(1) {
            total += d * 2usize.pow(d as u32);
            let pbw = pbw_basis(&l, d);
            assert_eq!(pbw.len(), 2 * d);
            assert_eq!(pbw.len(), total - rank);
        }
        assert_eq!(pbw_basis(&l, 1), vec![Diword::letter(0), Diword::letter(1)]);
        let irr: Vec<Diword> = super::super::di_irr_by_length(&s, 3).concat();
        assert_eq!(irr, pbw_basis(&l, 3));
    }

    #[test]
    fn abelian_pbw_is_symmetric_tails() {
        let l = LeibnizAlgebra::abelian(2);
        // Length n: 2 choices of head times n multisets of size n−1 over 2.
        let counts: Vec<usize> = (1..=4).map(|d| pbw_basis(&l, d).len()).collect();
        assert_eq!(counts, vec![2, 6, 12, 20]);
        let s = leibniz_enveloping(&l).unwrap();
        assert!(di_gsb_check_bounded(&s, 3).unwrap().holds());
    }

    #[test]
    fn non_aligned_l0_is_adapted() {
        // {e1,e1} = e1 + e2 = {e2,e2}… use a single nonzero bracket on a
        // non-basis direction: {e3,e3} = e1 + e2.
        let l = LeibnizAlgebra::new(3, [((2, 2), v(&[1, 1, 0]))]).unwrap();
        assert!(leibniz_check(&l));
        assert_eq!(l.i0(), None);
        let a = l.adapted();
        assert_eq!(a.i0(), Some(vec![0]));
        assert!(leibniz_check(&a));
        assert_eq!(pbw_basis(&l, 2).len(), 3 + 3 * 2);
        let s = leibniz_enveloping(&l).unwrap();
        assert!(di_gsb_check_bounded(&s, 3).unwrap().holds());
    }
}
