use thiserror::Error;

use crate::field::Field;

/// Errors raised anywhere in the exact pipeline.
///
/// Axiom violations are not errors; they are reported as data by
/// [`verify_root_axioms`](crate::roots::verify_root_axioms).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("division by zero")]
    DivisionByZero,
    #[error("square root of a negative value")]
    Domain,
    #[error("square root of {0} is not representable in its field")]
    NotRepresentable(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("unsupported dimension {0}")]
    UnsupportedDimension(usize),
    #[error("expected a pure vector")]
    NotAVector,
    #[error("mirror normal is not a unit vector")]
    NonUnitMirror,
    #[error("vector is not of unit length")]
    NonUnitVector,
    #[error("root {0} is not of unit length")]
    NonUnitRoot(String),
    #[error("multivector has odd-grade components")]
    OddGradePresent,
    #[error("not a rotor: R * reverse(R) != 1")]
    NotARotor,
    #[error("zero root")]
    ZeroRoot,
    #[error("closure exceeded cap of {0} elements")]
    ClosureCapExceeded(usize),
    #[error("squared norm {norm} of root {root} has no square root in the field")]
    NormNotInField { root: String, norm: String },
    #[error("simple roots are linearly dependent")]
    LinearlyDependent,
    #[error("input is not a root system: {0}")]
    NotARootSystem(String),
    #[error("induced set failed the root system axioms: {0}")]
    InductionFailed(String),
    #[error("no generic linear functional found after {0} perturbations")]
    DegenerateFunctional(usize),
    #[error("inner product {0} matches no supported Coxeter label")]
    UnknownAngle(String),
    #[error("unknown preset {0:?}")]
    UnknownPreset(String),
    #[error("malformed root system file: {0}")]
    Format(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Format(err.to_string())
    }
}
