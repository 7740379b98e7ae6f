//! Exact cohomology of zero-dimensional schemes in the projective plane,
//! Terracini and minimally Terracini point sets, numerical characters and
//! critical schemes.
//!
//! All computations are exact ranks of interpolation matrices over a prime
//! field (default `p = 2^61 - 1`) or over the rationals. Code is generic over
//! a [`Field`] context; the aliases below fix the element type for the two
//! concrete fields.
//!
//! ```
//! use terracini_core::constructions::{conic_points, default_conic_params};
//! use terracini_core::{is_minimally_terracini, PrimeField};
//!
//! let f = PrimeField::default();
//! let s = conic_points(&f, &default_conic_params(9)).unwrap();
//! let v = is_minimally_terracini(&f, &s, 8).unwrap();
//! assert_eq!(v.minimal, Some(true));
//! ```

pub mod cohomology;
pub mod constructions;
pub mod error;
pub mod exactfield;
pub mod geometry;
pub mod io;
pub mod terracini;

pub use cohomology::{
    character_to_h1, cohomology, h1, hilbert_profile, numerical_character, s_min, tau_max, Cohomology, HilbertProfile,
    NumericalCharacter,
};
pub use error::{Error, Result};
pub use exactfield::{field_create, AnyField, ExactMatrix, Field, FieldSpec, PrimeField, RationalField, MERSENNE_61};
pub use geometry::{double_scheme, CurveForm, ProjPoint, SchemeComponent, ZeroDimScheme};
pub use terracini::{find_critical_scheme, is_minimally_terracini, is_terracini, CriticalScheme, TerraciniVerdict};

pub use num_rational::BigRational;

/// The default modulus.
pub const DEFAULT_PRIME: u64 = MERSENNE_61;

pub type PrimePoint = ProjPoint<u64>;
pub type RationalPoint = ProjPoint<BigRational>;
pub type PrimeScheme = ZeroDimScheme<u64>;
pub type RationalScheme = ZeroDimScheme<BigRational>;
pub type PrimeCurve = CurveForm<u64>;
pub type RationalCurve = CurveForm<BigRational>;
pub type PrimeMatrix = ExactMatrix<PrimeField>;
pub type RationalMatrix = ExactMatrix<RationalField>;
