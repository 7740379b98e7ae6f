use crate::error::{Error, Result};
use crate::exactfield::{ExactMatrix, Field};

/// A point of `P^n`, stored with its last nonzero coordinate equal to one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProjPoint<E> {
    coords: Vec<E>,
}

impl<E: Clone> ProjPoint<E> {
    /// Normalizes `coords`; fails on the zero vector.
    pub fn new<F: Field<Element = E>>(field: &F, coords: Vec<E>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::DimensionMismatch { expected: 2, got: coords.len() });
        }
        let last = coords
            .iter()
            .rposition(|c| !field.is_zero(c))
            .ok_or(Error::ZeroPoint)?;
        let inv = field.inv(&coords[last]).expect("nonzero coordinate");
        let coords = coords.iter().map(|c| field.mul(c, &inv)).collect();
        Ok(ProjPoint { coords })
    }

    pub fn from_i64<F: Field<Element = E>>(field: &F, coords: &[i64]) -> Result<Self> {
        Self::new(field, coords.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn coords(&self) -> &[E] {
        &self.coords
    }

    /// The `n` of the ambient `P^n`.
    pub fn ambient_dim(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn to_strings<F: Field<Element = E>>(&self, field: &F) -> Vec<String> {
        self.coords.iter().map(|c| field.format(c)).collect()
    }

    pub fn parse<F: Field<Element = E>, S: AsRef<str>>(field: &F, coords: &[S]) -> Result<Self> {
        let coords = coords
            .iter()
            .map(|s| field.parse(s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(field, coords)
    }
}

/// True when `w` lies in the span of `p` and `v`, i.e. `v` and `w` define
/// the same tangent direction at `p`.
pub fn same_direction<F: Field>(
    field: &F,
    p: &ProjPoint<F::Element>,
    v: &ProjPoint<F::Element>,
    w: &ProjPoint<F::Element>,
) -> bool {
    let m = ExactMatrix::from_rows(
        field,
        p.coords.len(),
        [p.coords.clone(), v.coords.clone(), w.coords.clone()],
    );
    m.rank() <= 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::{PrimeField, RationalField};

    #[test]
    fn normalization_scales_last_nonzero_to_one() {
        let q = RationalField;
        let p = ProjPoint::from_i64(&q, &[2, 4, 0]).unwrap();
        assert_eq!(p.to_strings(&q), ["1/2", "1", "0"]);
        assert_eq!(p, ProjPoint::from_i64(&q, &[1, 2, 0]).unwrap());
        assert_eq!(ProjPoint::from_i64(&q, &[0, 0, 0]), Err(Error::ZeroPoint));
    }

    #[test]
    fn prime_field_normalization() {
        let f = PrimeField::new(7).unwrap();
        let p = ProjPoint::from_i64(&f, &[2, 3, 2]).unwrap();
        assert_eq!(p.coords(), &[1, 5, 1]);
    }
}
