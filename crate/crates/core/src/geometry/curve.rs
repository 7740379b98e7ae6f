use std::collections::HashMap;

use super::{eval_row, monomial_basis, partial_row, ProjPoint};
use crate::error::{Error, Result};
use crate::exactfield::matrix::dot;
use crate::exactfield::Field;

/// A nonzero homogeneous form of degree `degree >= 1` on `P^n`, stored as
/// coefficients over [`monomial_basis`]`(n, degree)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CurveForm<E> {
    n: usize,
    degree: usize,
    coefficients: Vec<E>,
}

impl<E: Clone> CurveForm<E> {
    pub fn new<F: Field<Element = E>>(field: &F, n: usize, degree: usize, coefficients: Vec<E>) -> Result<Self> {
        let expected = super::binomial(n + degree, n) as usize;
        if coefficients.len() != expected {
            return Err(Error::BadCurve { expected, got: coefficients.len() });
        }
        if degree == 0 || coefficients.iter().all(|c| field.is_zero(c)) {
            return Err(Error::ZeroCurve);
        }
        Ok(CurveForm { n, degree, coefficients })
    }

    /// Linear form `Σ a_i x_i`.
    pub fn linear<F: Field<Element = E>>(field: &F, coeffs: Vec<E>) -> Result<Self> {
        let n = coeffs.len().saturating_sub(1);
        Self::new(field, n, 1, coeffs)
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coefficients(&self) -> &[E] {
        &self.coefficients
    }

    pub fn evaluate<F: Field<Element = E>>(&self, field: &F, p: &ProjPoint<E>) -> E {
        dot(field, &self.coefficients, &eval_row(field, p, self.degree))
    }

    pub fn contains_point<F: Field<Element = E>>(&self, field: &F, p: &ProjPoint<E>) -> bool {
        field.is_zero(&self.evaluate(field, p))
    }

    /// Partial derivatives at `p`.
    pub fn gradient<F: Field<Element = E>>(&self, field: &F, p: &ProjPoint<E>) -> Vec<E> {
        (0..=self.n)
            .map(|k| dot(field, &self.coefficients, &partial_row(field, p.coords(), k, self.degree)))
            .collect()
    }

    /// Smooth at `p`: some partial derivative is nonzero.
    pub fn is_smooth_at<F: Field<Element = E>>(&self, field: &F, p: &ProjPoint<E>) -> bool {
        self.gradient(field, p).iter().any(|g| !field.is_zero(g))
    }

    pub fn product<F: Field<Element = E>>(&self, field: &F, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { expected: self.n + 1, got: other.n + 1 });
        }
        let left = monomial_basis(self.n, self.degree);
        let right = monomial_basis(self.n, other.degree);
        let target = monomial_basis(self.n, self.degree + other.degree);
        let index: HashMap<&[u32], usize> = target.iter().enumerate().map(|(i, m)| (m.as_slice(), i)).collect();
        let mut out = vec![field.zero(); target.len()];
        let mut exps = vec![0u32; self.n + 1];
        for (a, ma) in self.coefficients.iter().zip(&left) {
            if field.is_zero(a) {
                continue;
            }
            for (b, mb) in other.coefficients.iter().zip(&right) {
                if field.is_zero(b) {
                    continue;
                }
                for k in 0..=self.n {
                    exps[k] = ma[k] + mb[k];
                }
                let slot = &mut out[index[exps.as_slice()]];
                *slot = field.add(slot, &field.mul(a, b));
            }
        }
        Self::new(field, self.n, self.degree + other.degree, out)
    }

    /// Product of a nonempty list of forms.
    pub fn product_of<F: Field<Element = E>>(field: &F, forms: &[Self]) -> Result<Self> {
        let (first, rest) = forms.split_first().ok_or(Error::ZeroCurve)?;
        rest.iter().try_fold(first.clone(), |acc, f| acc.product(field, f))
    }

    pub fn to_strings<F: Field<Element = E>>(&self, field: &F) -> Vec<String> {
        self.coefficients.iter().map(|c| field.format(c)).collect()
    }
}
