//! Cohomology of ideal sheaves of zero-dimensional schemes.
//!
//! For a scheme `Z` of degree `z` and a degree `d`, the conditions matrix has
//! one row per unit of length and one column per monomial. Its rank is the
//! Hilbert function `H_Z(d)`, and
//!
//! * `h0(I_Z(d)) = binom(n+d, n) - H_Z(d)`
//! * `h1(I_Z(d)) = z - H_Z(d)`.
//!
//! Everything else here (s, τ, the profile and the numerical character) is
//! read off these two numbers.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactfield::{ExactMatrix, Field};
use crate::geometry::{binomial, forms_dimension, monomial_basis, residual_scheme, restrict_to_curve, CurveForm, ZeroDimScheme};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Cohomology {
    pub h0: usize,
    pub h1: usize,
}

/// Rows: conditions imposed by each component in order. Columns: the
/// degree-`d` monomials.
pub fn conditions_matrix<F: Field>(
    field: &F,
    z: &ZeroDimScheme<F::Element>,
    d: usize,
) -> Result<ExactMatrix<F>> {
    let cols = monomial_basis(z.ambient_dim(), d).len();
    let mut rows = Vec::with_capacity(z.degree());
    for c in z.components() {
        for row in c.rows(field, d)? {
            rows.push(if row.len() == cols { row } else { vec![field.zero(); cols] });
        }
    }
    Ok(ExactMatrix::from_rows(field, cols, rows))
}

/// `(h0, h1)` of `I_Z(d)`; negative degrees have no sections.
pub fn cohomology<F: Field>(field: &F, z: &ZeroDimScheme<F::Element>, d: i64) -> Result<Cohomology> {
    if d < 0 {
        return Ok(Cohomology { h0: 0, h1: z.degree() });
    }
    let rank = conditions_matrix(field, z, d as usize)?.rank();
    Ok(Cohomology {
        h0: forms_dimension(z.ambient_dim(), d) - rank,
        h1: z.degree() - rank,
    })
}

pub fn h1<F: Field>(field: &F, z: &ZeroDimScheme<F::Element>, d: i64) -> Result<usize> {
    cohomology(field, z, d).map(|c| c.h1)
}

/// Minimal degree of a hypersurface containing `Z`.
pub fn s_min<F: Field>(field: &F, z: &ZeroDimScheme<F::Element>) -> Result<usize> {
    if z.is_empty() {
        return Err(Error::EmptyScheme);
    }
    let mut t = 1;
    loop {
        if cohomology(field, z, t as i64)?.h0 > 0 {
            return Ok(t);
        }
        t += 1;
    }
}

/// Maximal `t` with `h1(I_Z(t)) > 0`. Since `h1` is non-increasing in the
/// degree, the scan stops at the first vanishing value. A single reduced
/// point gives `-1`.
pub fn tau_max<F: Field>(field: &F, z: &ZeroDimScheme<F::Element>) -> Result<i64> {
    if z.is_empty() {
        return Err(Error::EmptyScheme);
    }
    let mut t = 0i64;
    while cohomology(field, z, t)?.h1 > 0 {
        t += 1;
    }
    Ok(t - 1)
}

/// Hilbert function data of a nonempty scheme for `t = 0 ..= τ + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertProfile {
    pub degree: usize,
    pub s: usize,
    pub tau: i64,
    pub hilbert: Vec<usize>,
    pub delta: Vec<usize>,
    pub h1: Vec<usize>,
}

impl HilbertProfile {
    /// Degrees covered, starting at zero.
    pub fn degrees(&self) -> impl Iterator<Item = usize> {
        0..self.hilbert.len()
    }
}

pub fn hilbert_profile<F: Field>(field: &F, z: &ZeroDimScheme<F::Element>) -> Result<HilbertProfile> {
    if z.is_empty() {
        return Err(Error::EmptyScheme);
    }
    let deg = z.degree();
    let mut hilbert = Vec::new();
    let mut s = None;
    let mut tau = None;
    let mut t = 0usize;
    while s.is_none() || tau.is_none() {
        let c = cohomology(field, z, t as i64)?;
        hilbert.push(deg - c.h1);
        if s.is_none() && c.h0 > 0 {
            s = Some(t);
        }
        if tau.is_none() && c.h1 == 0 {
            tau = Some(t as i64 - 1);
        }
        t += 1;
    }
    let (s, tau) = (s.unwrap(), tau.unwrap());
    hilbert.truncate((tau + 2) as usize);
    let delta = hilbert
        .iter()
        .enumerate()
        .map(|(t, &h)| if t == 0 { h } else { h - hilbert[t - 1] })
        .collect();
    let h1 = hilbert.iter().map(|&h| deg - h).collect();
    Ok(HilbertProfile { degree: deg, s, tau, hilbert, delta, h1 })
}

/// `n_0 ≥ n_1 ≥ … ≥ n_{s-1}` for a plane scheme.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct NumericalCharacter {
    entries: Vec<usize>,
    connected: bool,
}

impl NumericalCharacter {
    /// Validates monotonicity and `n_{s-1} ≥ s`.
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        let s = entries.len();
        if s == 0 {
            return Err(Error::PreconditionViolated("empty numerical character".into()));
        }
        if entries.windows(2).any(|w| w[0] < w[1]) || entries[s - 1] < s {
            return Err(Error::PreconditionViolated(format!("{entries:?} is not a numerical character")));
        }
        let connected = entries.windows(2).all(|w| w[0] <= w[1] + 1);
        Ok(NumericalCharacter { entries, connected })
    }

    /// Reads the character off `Δ`: for `t ≥ s - 1`, `Δ(t)` counts the `i`
    /// with `n_i ≥ t + 1`.
    pub fn from_profile(profile: &HilbertProfile) -> Result<Self> {
        let s = profile.s;
        let entries = (0..s)
            .map(|i| {
                (s - 1..profile.delta.len())
                    .filter(|&t| profile.delta[t] > i)
                    .map(|t| t + 1)
                    .max()
                    .unwrap_or(s)
            })
            .collect();
        Self::new(entries)
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// The `s` of the scheme.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn connected(&self) -> bool {
        self.connected
    }

    /// `Σ n_i - binom(s, 2)`.
    pub fn scheme_degree(&self) -> usize {
        self.entries.iter().sum::<usize>() - binomial(self.len(), 2) as usize
    }
}

pub fn numerical_character<F: Field>(field: &F, z: &ZeroDimScheme<F::Element>) -> Result<NumericalCharacter> {
    NumericalCharacter::from_profile(&hilbert_profile(field, z)?)
}

/// `Σ_i ((n_i - t - 1)_+ - (i - t - 1)_+)`.
pub fn character_to_h1(character: &NumericalCharacter, t: i64) -> i64 {
    character
        .entries
        .iter()
        .enumerate()
        .map(|(i, &n)| (n as i64 - t - 1).max(0) - (i as i64 - t - 1).max(0))
        .sum()
}

pub fn is_connected(character: &NumericalCharacter) -> bool {
    character.connected
}

/// Result of splitting a scheme along a curve at a gap of its character.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitReport {
    pub t: usize,
    pub character: Vec<usize>,
    pub predicted_restricted: Vec<usize>,
    pub predicted_residual: Vec<usize>,
    pub restricted: Vec<usize>,
    pub residual: Vec<usize>,
    pub restricted_matches: bool,
    pub residual_matches: bool,
    pub pass: bool,
}

/// Checks a candidate curve `C` of degree `t` against the predicted split
/// `Z ∩ C ↦ (n_0..n_{t-1})`, `Res_C Z ↦ (n_{t+i} - t)`.
pub fn character_split_check<F: Field>(
    field: &F,
    z: &ZeroDimScheme<F::Element>,
    c: &CurveForm<F::Element>,
    t: usize,
) -> Result<SplitReport> {
    let character = numerical_character(field, z)?;
    let n = character.entries();
    if t == 0 || t >= n.len() || n[t - 1] <= n[t] + 1 {
        return Err(Error::GapAbsent(t));
    }
    if c.degree() != t {
        return Err(Error::PreconditionViolated(format!(
            "curve has degree {}, expected {t}",
            c.degree()
        )));
    }
    let predicted_restricted = n[..t].to_vec();
    let predicted_residual: Vec<usize> = n[t..].iter().map(|&v| v - t).collect();
    let char_of = |w: &ZeroDimScheme<F::Element>| -> Result<Vec<usize>> {
        if w.is_empty() {
            Ok(Vec::new())
        } else {
            Ok(numerical_character(field, w)?.entries)
        }
    };
    let restricted = char_of(&restrict_to_curve(field, z, c)?)?;
    let residual = char_of(&residual_scheme(field, z, c)?)?;
    let restricted_matches = restricted == predicted_restricted;
    let residual_matches = residual == predicted_residual;
    Ok(SplitReport {
        t,
        character: n.to_vec(),
        predicted_restricted,
        predicted_residual,
        restricted,
        residual,
        restricted_matches,
        residual_matches,
        pass: restricted_matches && residual_matches,
    })
}

/// `binom(s+1, 2) ≤ z ≤ s(τ+2) - binom(s, 2)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub s: usize,
    pub tau: i64,
    pub degree: usize,
    pub lower: i64,
    pub upper: i64,
    pub lower_ok: bool,
    pub upper_ok: bool,
}

pub fn bound_checks<F: Field>(field: &F, z: &ZeroDimScheme<F::Element>) -> Result<BoundReport> {
    let profile = hilbert_profile(field, z)?;
    Ok(bounds_from(profile.s, profile.tau, profile.degree))
}

pub(crate) fn bounds_from(s: usize, tau: i64, degree: usize) -> BoundReport {
    let lower = binomial(s + 1, 2) as i64;
    let upper = s as i64 * (tau + 2) - binomial(s, 2) as i64;
    BoundReport {
        s,
        tau,
        degree,
        lower,
        upper,
        lower_ok: lower <= degree as i64,
        upper_ok: degree as i64 <= upper,
    }
}
