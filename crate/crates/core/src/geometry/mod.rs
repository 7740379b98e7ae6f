//! Points, forms and zero-dimensional schemes in `P^n`.
//!
//! Forms of degree `d` are coefficient vectors over [`monomial_basis`]; a
//! linear condition on forms is a row vector over the same basis.

mod curve;
mod point;
mod scheme;

use crate::error::{Error, Result};
use crate::exactfield::{ExactMatrix, Field};

pub use curve::CurveForm;
pub use point::{same_direction, ProjPoint};
pub use scheme::{
    double_scheme, residual_scheme, restrict_to_curve, tangent_direction, ComponentKind,
    SchemeComponent, ZeroDimScheme,
};

/// Exponent vectors of degree `d` in `n + 1` variables, lexicographically
/// decreasing (so `x0^d` comes first and `xn^d` last).
pub fn monomial_basis(n: usize, d: usize) -> Vec<Vec<u32>> {
    fn fill(rest: usize, vars: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if vars == 1 {
            prefix.push(rest as u32);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=rest).rev() {
            prefix.push(e as u32);
            fill(rest - e, vars - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::with_capacity(binomial(n + d, n) as usize);
    fill(d, n + 1, &mut Vec::with_capacity(n + 1), &mut out);
    out
}

/// `binom(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Number of degree-`d` forms on `P^n`; zero for negative `d`.
pub fn forms_dimension(n: usize, d: i64) -> usize {
    if d < 0 {
        0
    } else {
        binomial(n + d as usize, n) as usize
    }
}

fn power_table<F: Field>(field: &F, coords: &[F::Element], d: usize) -> Vec<Vec<F::Element>> {
    coords
        .iter()
        .map(|c| {
            let mut pw = Vec::with_capacity(d + 1);
            pw.push(field.one());
            for e in 1..=d {
                pw.push(field.mul(&pw[e - 1], c));
            }
            pw
        })
        .collect()
}

/// Values of the degree-`d` monomials at `p`.
pub fn eval_row<F: Field>(field: &F, p: &ProjPoint<F::Element>, d: usize) -> Vec<F::Element> {
    let pw = power_table(field, p.coords(), d);
    monomial_basis(p.ambient_dim(), d)
        .iter()
        .map(|m| {
            m.iter()
                .enumerate()
                .fold(field.one(), |acc, (j, &e)| field.mul(&acc, &pw[j][e as usize]))
        })
        .collect()
}

/// Directional derivative along `v`, evaluated at `p`, of every monomial.
///
/// No characteristic check; see [`derivative_row`].
pub(crate) fn derivative_row_unchecked<F: Field>(
    field: &F,
    p: &[F::Element],
    v: &[F::Element],
    d: usize,
) -> Vec<F::Element> {
    let n = p.len() - 1;
    if d == 0 {
        return vec![field.zero(); 1];
    }
    let pw = power_table(field, p, d);
    monomial_basis(n, d)
        .iter()
        .map(|m| {
            let mut acc = field.zero();
            for k in 0..=n {
                if m[k] == 0 || field.is_zero(&v[k]) {
                    continue;
                }
                let mut term = field.mul(&field.from_i64(m[k] as i64), &v[k]);
                for (j, &e) in m.iter().enumerate() {
                    let e = if j == k { e - 1 } else { e };
                    term = field.mul(&term, &pw[j][e as usize]);
                }
                acc = field.add(&acc, &term);
            }
            acc
        })
        .collect()
}

pub(crate) fn check_characteristic<F: Field>(field: &F, d: usize) -> Result<()> {
    let ch = field.characteristic();
    if ch != 0 && ch <= d as u64 {
        return Err(Error::CharacteristicTooSmall { characteristic: ch, degree: d as i64 });
    }
    Ok(())
}

/// Row whose dot product with a coefficient vector is the derivative of the
/// form along `v` at `p`. Requires characteristic zero or larger than `d`.
pub fn derivative_row<F: Field>(
    field: &F,
    p: &ProjPoint<F::Element>,
    v: &ProjPoint<F::Element>,
    d: usize,
) -> Result<Vec<F::Element>> {
    check_characteristic(field, d)?;
    if v.ambient_dim() != p.ambient_dim() {
        return Err(Error::DimensionMismatch { expected: p.coords().len(), got: v.coords().len() });
    }
    Ok(derivative_row_unchecked(field, p.coords(), v.coords(), d))
}

/// `∂/∂x_k` of every monomial at `p`.
pub(crate) fn partial_row<F: Field>(field: &F, p: &[F::Element], k: usize, d: usize) -> Vec<F::Element> {
    let mut e = vec![field.zero(); p.len()];
    e[k] = field.one();
    derivative_row_unchecked(field, p, &e, d)
}

/// Projective dimension of the linear span; `-1` for no points.
pub fn span_dimension<F: Field>(field: &F, points: &[ProjPoint<F::Element>]) -> i64 {
    let Some(first) = points.first() else {
        return -1;
    };
    let m = ExactMatrix::from_rows(field, first.coords().len(), points.iter().map(|p| p.coords().to_vec()));
    m.rank() as i64 - 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::{PrimeField, RationalField};

    #[test]
    fn basis_order_and_sizes() {
        assert_eq!(monomial_basis(2, 1), vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(monomial_basis(2, 4).len(), 15);
        // 32 * 31 / 2
        assert_eq!(monomial_basis(2, 30).len(), 496);
        assert_eq!(monomial_basis(3, 2).len(), 10);
        assert_eq!(monomial_basis(2, 0), vec![vec![0, 0, 0]]);
        let b = monomial_basis(2, 2);
        assert_eq!(b.first().unwrap(), &vec![2, 0, 0]);
        assert_eq!(b.last().unwrap(), &vec![0, 0, 2]);
    }

    #[test]
    fn eval_rows() {
        let q = RationalField;
        let row = eval_row(&q, &ProjPoint::from_i64(&q, &[0, 0, 1]).unwrap(), 2);
        let ones: Vec<usize> = (0..row.len()).filter(|&i| !q.is_zero(&row[i])).collect();
        assert_eq!(ones, vec![5]);
        let row = eval_row(&q, &ProjPoint::from_i64(&q, &[1, 1, 1]).unwrap(), 1);
        assert_eq!(row, vec![q.one(); 3]);
        let f7 = PrimeField::new(7).unwrap();
        assert_eq!(eval_row(&f7, &ProjPoint::from_i64(&f7, &[2, 3, 1]).unwrap(), 1), vec![2, 3, 1]);
    }

    #[test]
    fn derivative_examples() {
        let q = RationalField;
        let p = ProjPoint::from_i64(&q, &[0, 0, 1]).unwrap();
        let v = ProjPoint::from_i64(&q, &[1, 0, 0]).unwrap();
        assert_eq!(
            derivative_row(&q, &p, &v, 1).unwrap(),
            vec![q.one(), q.zero(), q.zero()]
        );
        // Euler relation
        let p = ProjPoint::from_i64(&q, &[3, -2, 1]).unwrap();
        for d in 1..5 {
            let lhs = derivative_row(&q, &p, &p, d).unwrap();
            let rhs: Vec<_> = eval_row(&q, &p, d).iter().map(|x| q.mul(x, &q.from_i64(d as i64))).collect();
            assert_eq!(lhs, rhs);
        }
    }

    /// Symbolic differentiation of each monomial, evaluated independently.
    #[test]
    fn derivative_matches_symbolic_oracle() {
        let q = RationalField;
        let p = ProjPoint::from_i64(&q, &[1, 2, 1]).unwrap();
        let v = ProjPoint::from_i64(&q, &[0, 1, 0]).unwrap();
        let got = derivative_row(&q, &p, &v, 2).unwrap();
        // basis: x0^2, x0x1, x0x2, x1^2, x1x2, x2^2; d/dx1 at (1,2,1)
        let expected = [0, 1, 0, 4, 1, 0].map(|v| q.from_i64(v));
        assert_eq!(got, expected);
    }

    #[test]
    fn derivative_rejects_small_characteristic() {
        let f = PrimeField::new(3).unwrap();
        let p = ProjPoint::from_i64(&f, &[0, 0, 1]).unwrap();
        let v = ProjPoint::from_i64(&f, &[1, 0, 0]).unwrap();
        assert!(derivative_row(&f, &p, &v, 2).is_ok());
        assert_eq!(
            derivative_row(&f, &p, &v, 3),
            Err(Error::CharacteristicTooSmall { characteristic: 3, degree: 3 })
        );
    }

    #[test]
    fn spans() {
        let q = RationalField;
        let pts = |v: &[[i64; 3]]| v.iter().map(|c| ProjPoint::from_i64(&q, c).unwrap()).collect::<Vec<_>>();
        assert_eq!(span_dimension(&q, &pts(&[[1, 0, 0], [0, 1, 0], [0, 0, 1]])), 2);
        assert_eq!(span_dimension(&q, &pts(&[[1, 0, 1], [2, 0, 1], [3, 0, 1]])), 1);
        assert_eq!(span_dimension(&q, &[]), -1);
    }
}
