use thiserror::Error;

/// Errors raised by the scheme, cohomology and construction routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    NonPrimeModulus(String),
    #[error("modulus {0} exceeds the supported range (p < 2^63)")]
    ModulusTooLarge(String),
    #[error("cannot parse field element from {0:?}")]
    BadElement(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("field characteristic {characteristic} does not exceed degree {degree}")]
    CharacteristicTooSmall { characteristic: u64, degree: i64 },
    #[error("the zero vector is not a projective point")]
    ZeroPoint,
    #[error("dimension mismatch: expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("direction of a curvilinear component must differ from its point")]
    DegenerateDirection,
    #[error("points {0} and {1} coincide")]
    DuplicatePoints(usize, usize),
    #[error("curve is singular at support point {0}")]
    SingularAtSupport(usize),
    #[error("curve coefficient vector has length {got}, expected {expected}")]
    BadCurve { expected: usize, got: usize },
    #[error("curve form is identically zero")]
    ZeroCurve,
    #[error("operation requires a nonempty scheme")]
    EmptyScheme,
    #[error("operation is only implemented in the projective plane (n = 2), got n = {0}")]
    UnsupportedAmbient(usize),
    #[error("numerical character has no gap n_(t-1) > n_t + 1 at t = {0}")]
    GapAbsent(usize),
    #[error("critical scheme search failed: {0}")]
    CriticalSearchFailed(String),
    #[error("curve does not contain the scheme: {0}")]
    CurveDoesNotContainZ(String),
    #[error("construction parameters are not pairwise distinct")]
    DuplicateParameters,
    #[error("only {found} distinct rational intersection points, need {needed}")]
    InsufficientRationalPoints { found: usize, needed: usize },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("degenerate construction parameters: {0}")]
    DegenerateParameters(String),
    #[error("malformed input: {0}")]
    Malformed(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
