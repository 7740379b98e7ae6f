use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use super::{Field, FieldSpec};
use crate::error::{Error, Result};

/// The rational numbers, with arbitrary-precision numerators and denominators.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct RationalField;

/// Range of the integers returned by [`RationalField::random`].
const RANDOM_BOUND: i64 = 1 << 10;

impl Field for RationalField {
    type Element = BigRational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rational
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn format(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }

    fn parse(&self, s: &str) -> Result<BigRational> {
        let s = s.trim();
        let bad = || Error::BadElement(s.to_string());
        match s.split_once('/') {
            None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(BigRational::new(n, d))
            }
        }
    }

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        self.from_i64(rng.gen_range(-RANDOM_BOUND..=RANDOM_BOUND))
    }

    fn rank(&self, rows: usize, cols: usize, data: Vec<BigRational>) -> usize {
        bareiss_rank(rows, cols, integer_rows(rows, cols, data))
    }
}

/// Scales every row by the lcm of its denominators.
fn integer_rows(rows: usize, cols: usize, data: Vec<BigRational>) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(rows * cols);
    for row in data.chunks(cols.max(1)).take(rows) {
        let lcm = row
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        out.extend(row.iter().map(|x| x.numer() * (&lcm / x.denom())));
    }
    out
}

/// Fraction-free (Bareiss) elimination over the integers.
///
/// After step `k`, every remaining entry is a `(k+1) x (k+1)` minor of the
/// input, so the division by the previous pivot is exact. Zero columns below
/// the current pivot row are skipped, which keeps the identity intact.
fn bareiss_rank(rows: usize, cols: usize, mut a: Vec<BigInt>) -> usize {
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| !a[r * cols + col].is_zero()) else {
            continue;
        };
        if pivot != rank {
            for j in 0..cols {
                a.swap(pivot * cols + j, rank * cols + j);
            }
        }
        let (head, tail) = a.split_at_mut((rank + 1) * cols);
        let prow = &head[rank * cols..];
        let p = &prow[col];
        for row in tail.chunks_mut(cols) {
            let lead = std::mem::take(&mut row[col]);
            for j in col + 1..cols {
                let mut v = &row[j] * p;
                if !lead.is_zero() && !prow[j].is_zero() {
                    v -= &lead * &prow[j];
                }
                if !v.is_zero() && !prev.is_one() {
                    v /= &prev;
                }
                row[j] = v;
            }
        }
        prev = prow[col].clone();
        rank += 1;
    }
    rank
}
