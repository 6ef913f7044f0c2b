use thiserror::Error;

/// Errors raised by the algebra, the measurement model and the estimators.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("multivector coefficient {index} is not finite ({value})")]
    NonFinite { index: usize, value: f64 },

    #[error("vector ({x}, {y}, {z}) is degenerate or non-finite and cannot be normalized")]
    DegenerateVector { x: f64, y: f64, z: f64 },

    #[error("grade {0} is outside 0..=3")]
    InvalidGrade(u8),

    #[error("orientation must be +1 or -1, got {0}")]
    InvalidOrientation(i64),

    #[error("expected a pure trivector, found residue {residue:e} outside grade 3")]
    NotTrivector { residue: f64 },

    #[error("expected an even element, found odd residue {residue:e}")]
    NotEven { residue: f64 },

    #[error("dispersion scale not invertible as unit even element (residue {residue:e})")]
    NotInvertible { residue: f64 },

    #[error("non-scalar measurement outcome (residue {residue:e})")]
    NonScalarOutcome { residue: f64 },

    #[error("ordered triple product left a non-scalar residue {residue:e}")]
    NonScalarTriple { residue: f64 },

    #[error("standardized score deviates from the expected bivector by {residue:e}")]
    StandardizationMismatch { residue: f64 },

    #[error("trial violates the case tables: A = {a_raw}, B = {b_raw} at lambda = {lambda}")]
    TrialInvariant { a_raw: i8, b_raw: i8, lambda: i64 },

    #[error("unknown equation identifier `{0}`")]
    UnknownEquation(String),

    #[error("trial count must be at least 1")]
    EmptySample,

    #[error("chunk length must be at least 1")]
    EmptyChunk,

    #[error("correlation scalar part {0} lies outside [-1, 1]")]
    CorrelationOutOfRange(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
