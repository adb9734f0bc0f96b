use thiserror::Error;

/// Errors raised by the exact algebra routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("input vectors are linearly dependent (vector {index} lies in the span of its predecessors)")]
    DependentVectors { index: usize },

    #[error("vector is not in the span of the given basis")]
    NotInSpan,

    #[error("matrix is singular")]
    Singular,

    #[error("dimension D = {dim} outside the supported range 1..={limit}")]
    DimensionOutOfRange { dim: usize, limit: usize },

    #[error("argument out of range: {0}")]
    ArgumentOutOfRange(String),

    #[error("two constructions of {what} disagree at entry {at:?}")]
    ConstructionMismatch { what: &'static str, at: (usize, usize) },

    #[error("module (r={r}, index={index}) violates invariant: {invariant}")]
    InvariantViolated { r: usize, index: usize, invariant: String },

    #[error("basis {basis} has a zero vector at position {position}")]
    ZeroBasisVector { basis: &'static str, position: usize },

    #[error("infeasible targets: a*b*c*(1+i)^d must be real and positive")]
    InfeasibleTargets,

    #[error("targets require field extension: the rescaling factor is not a rational square")]
    FieldExtensionRequired,

    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },
}

pub type Result<T> = std::result::Result<T, Error>;
