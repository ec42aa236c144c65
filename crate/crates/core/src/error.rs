use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("characteristic {0} is not supported (use 0 or an odd prime)")]
    UnsupportedCharacteristic(u32),
    #[error("operands belong to different rings")]
    MixedRings,
    #[error("monomial has {found} exponents, ring has {expected} variables")]
    VariableCount { expected: usize, found: usize },
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("relation {0} is not homogeneous for the declared weights")]
    InhomogeneousRelation(String),
    #[error("input is not homogeneous: {0}")]
    Inhomogeneous(String),
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("submodule is not contained in the given generators")]
    Containment,
    #[error("the zero ideal has no analytic spread")]
    ZeroIdeal,
    #[error("ideal is not contained in the irrelevant maximal ideal")]
    NotInMaximalIdeal,
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
