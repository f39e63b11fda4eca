//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Errors produced by exact-arithmetic and geometry operations.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("elements belong to different extension fields")]
    FieldMismatch,

    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,

    #[error("operation requires a nonconstant function")]
    ConstantFunction,

    #[error("0/0 is not a rational function")]
    ZeroOverZero,

    #[error("expected a Möbius transformation (degree 1), got degree {0}")]
    NotMobius(u32),

    #[error("degree {degree} exceeds the configured cap {cap}")]
    DegreeCap { degree: u32, cap: u32 },

    #[error("operation budget exceeded: {spent} > {budget} coefficient operations")]
    BudgetExceeded { spent: u64, budget: u64 },

    #[error("minimal polynomial is reducible; discovered factor: {factor}")]
    ReducibleMinimalPolynomial { factor: String },

    #[error("integrity violation: {0}")]
    Integrity(String),

    #[error("orbifold support is not representable over the available fields: {0}")]
    UnsupportedSupport(String),

    #[error("torus orbifolds only support the Euler characteristic")]
    TorusUnsupported,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
