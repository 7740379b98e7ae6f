//! Exact scalar arithmetic and exact dense linear algebra.
//!
//! Every dimension computed by this crate reduces to the rank of a matrix
//! over either a prime field `F_p` or the rationals. Both are modelled as an
//! arithmetic *context* implementing [`Field`]; elements are plain values and
//! all operations go through the context, which lets the modulus be chosen at
//! run time.

pub(crate) mod matrix;
mod prime;
mod rational;

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use matrix::ExactMatrix;
pub use prime::{is_prime_u64, PrimeField, MERSENNE_61};
pub use rational::RationalField;

/// Arithmetic context for an exact field.
pub trait Field: Clone + fmt::Debug + Send + Sync {
    type Element: Clone + PartialEq + Eq + Hash + fmt::Debug + Send + Sync;

    fn spec(&self) -> FieldSpec;

    /// Zero for the rationals.
    fn characteristic(&self) -> u64;

    fn zero(&self) -> Self::Element;
    fn one(&self) -> Self::Element;
    fn from_i64(&self, v: i64) -> Self::Element;

    fn add(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
    fn sub(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
    fn mul(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
    fn neg(&self, a: &Self::Element) -> Self::Element;
    /// `None` for zero.
    fn inv(&self, a: &Self::Element) -> Option<Self::Element>;
    fn is_zero(&self, a: &Self::Element) -> bool;

    fn div(&self, a: &Self::Element, b: &Self::Element) -> Result<Self::Element> {
        let inv = self.inv(b).ok_or(Error::DivisionByZero)?;
        Ok(self.mul(a, &inv))
    }

    fn pow(&self, a: &Self::Element, mut e: u64) -> Self::Element {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    fn is_one(&self, a: &Self::Element) -> bool {
        *a == self.one()
    }

    /// Decimal rendering; rationals use `num/den`.
    fn format(&self, a: &Self::Element) -> String;

    /// Parses an integer or `num/den` literal into the field.
    fn parse(&self, s: &str) -> Result<Self::Element>;

    /// A random element; uniform over `F_p`, small integers over `Q`.
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Element;

    /// Exact rank of a row-major `rows x cols` matrix.
    fn rank(&self, rows: usize, cols: usize, data: Vec<Self::Element>) -> usize {
        gauss_rank(self, rows, cols, data)
    }
}

/// Plain Gaussian elimination with exact division.
///
/// Pivots are taken column by column, choosing the first row (in order) with
/// a nonzero entry.
pub(crate) fn gauss_rank<F: Field + ?Sized>(
    field: &F,
    rows: usize,
    cols: usize,
    mut a: Vec<F::Element>,
) -> usize {
    debug_assert_eq!(a.len(), rows * cols);
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| !field.is_zero(&a[r * cols + col])) else {
            continue;
        };
        if pivot != rank {
            for j in col..cols {
                a.swap(pivot * cols + j, rank * cols + j);
            }
        }
        let inv = field.inv(&a[rank * cols + col]).expect("pivot is nonzero");
        for j in col..cols {
            a[rank * cols + j] = field.mul(&a[rank * cols + j], &inv);
        }
        let (head, tail) = a.split_at_mut((rank + 1) * cols);
        let prow = &head[rank * cols..];
        for row in tail.chunks_mut(cols) {
            if field.is_zero(&row[col]) {
                continue;
            }
            let factor = row[col].clone();
            row[col] = field.zero();
            for j in col + 1..cols {
                if !field.is_zero(&prow[j]) {
                    row[j] = field.sub(&row[j], &field.mul(&factor, &prow[j]));
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Which field a computation runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Prime(u64),
    Rational,
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::Prime(MERSENNE_61)
    }
}

impl FieldSpec {
    /// Checks the modulus; the returned spec is safe to build a field from.
    pub fn validate(self) -> Result<Self> {
        if let FieldSpec::Prime(p) = self {
            PrimeField::new(p)?;
        }
        Ok(self)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime(p) => write!(f, "prime:{p}"),
            FieldSpec::Rational => write!(f, "rational"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `prime:<p>`, `prime` (the default Mersenne prime) or `rational`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("rational") || s == "Q" {
            return Ok(FieldSpec::Rational);
        }
        if s.eq_ignore_ascii_case("prime") {
            return Ok(FieldSpec::default());
        }
        let Some(p) = s.strip_prefix("prime:") else {
            return Err(Error::BadElement(s.to_string()));
        };
        let p = p.trim();
        let value: u64 = p.parse().map_err(|_| {
            if !p.is_empty() && p.bytes().all(|b| b.is_ascii_digit()) {
                Error::ModulusTooLarge(p.to_string())
            } else {
                Error::BadElement(p.to_string())
            }
        })?;
        FieldSpec::Prime(value).validate()
    }
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum FieldSpecRepr {
    Prime { p: String },
    Rational,
}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            FieldSpec::Prime(p) => FieldSpecRepr::Prime { p: p.to_string() },
            FieldSpec::Rational => FieldSpecRepr::Rational,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FieldSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        match FieldSpecRepr::deserialize(deserializer)? {
            FieldSpecRepr::Rational => Ok(FieldSpec::Rational),
            FieldSpecRepr::Prime { p } => format!("prime:{p}")
                .parse()
                .map_err(serde::de::Error::custom),
        }
    }
}

/// Builds the arithmetic context for a spec.
///
/// Callers that need static dispatch match on the `FieldSpec` and construct
/// [`PrimeField`] or [`RationalField`] directly; this is the checked entry
/// point for the prime case.
pub fn field_create(spec: FieldSpec) -> Result<AnyField> {
    match spec {
        FieldSpec::Prime(p) => Ok(AnyField::Prime(PrimeField::new(p)?)),
        FieldSpec::Rational => Ok(AnyField::Rational(RationalField)),
    }
}

/// A field chosen at run time.
#[derive(Debug, Clone)]
pub enum AnyField {
    Prime(PrimeField),
    Rational(RationalField),
}

/// Runs a generic body with the concrete field behind an [`AnyField`].
#[macro_export]
macro_rules! with_field {
    ($any:expr, |$f:ident| $body:expr) => {
        match $any {
            $crate::exactfield::AnyField::Prime($f) => $body,
            $crate::exactfield::AnyField::Rational($f) => $body,
        }
    };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_seven_inverse_of_three() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.inv(&3), Some(5));
        assert_eq!(f.mul(&3, &5), 1);
    }

    #[test]
    fn rational_third_is_exact() {
        let q = RationalField;
        let third = q.inv(&q.from_i64(3)).unwrap();
        assert_eq!(q.format(&third), "1/3");
        assert_eq!(q.mul(&third, &q.from_i64(3)), q.one());
    }

    #[test]
    fn composite_modulus_is_rejected() {
        assert_eq!(
            field_create(FieldSpec::Prime(6)).unwrap_err(),
            Error::NonPrimeModulus("6".into())
        );
        assert!(matches!(
            "prime:6".parse::<FieldSpec>(),
            Err(Error::NonPrimeModulus(_))
        ));
    }

    #[test]
    fn spec_json_shape() {
        let json = serde_json::to_string(&FieldSpec::default()).unwrap();
        assert_eq!(json, r#"{"kind":"prime","p":"2305843009213693951"}"#);
        assert_eq!(
            serde_json::to_string(&FieldSpec::Rational).unwrap(),
            r#"{"kind":"rational"}"#
        );
        let back: FieldSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(back, FieldSpec::default());
        assert!(serde_json::from_str::<FieldSpec>(r#"{"kind":"prime","p":"15"}"#).is_err());
    }

    #[test]
    fn spec_from_cli_strings() {
        assert_eq!("rational".parse::<FieldSpec>().unwrap(), FieldSpec::Rational);
        assert_eq!("prime:7".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(7));
        assert_eq!("prime".parse::<FieldSpec>().unwrap(), FieldSpec::default());
        assert!(matches!(
            "prime:99999999999999999999999".parse::<FieldSpec>(),
            Err(Error::ModulusTooLarge(_))
        ));
    }
}
