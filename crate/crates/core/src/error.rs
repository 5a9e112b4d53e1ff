use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("exponent vector has length {found}, ring has {expected} variables")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("ideals live in rings with {left} and {right} variables")]
    RingMismatch { left: usize, right: usize },

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("characteristic {0} is not prime; the rank engine needs a prime field")]
    NotPrime(u32),

    #[error("{op} is undefined for the unit ideal")]
    UnitIdeal { op: &'static str },

    #[error("{op} is undefined for the zero ideal")]
    ZeroIdeal { op: &'static str },

    #[error("multidegree {degree:?} lies outside the stabilization box {rho:?}")]
    BoxViolation { degree: Vec<i64>, rho: Vec<u32> },

    #[error("{count} generators exceed the Taylor complex limit of {limit}")]
    TooManyGenerators { count: usize, limit: usize },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// Two independent engines produced different values for the same
    /// invariant. This is never an input problem.
    #[error("engine disagreement on {invariant}: {detail}")]
    EngineDisagreement { invariant: String, detail: String },

    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },

    #[error("io: {0}")]
    Io(String),
}

impl Error {
    pub fn disagreement(invariant: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::EngineDisagreement {
            invariant: invariant.into(),
            detail: detail.into(),
        }
    }

    pub fn is_engine_disagreement(&self) -> bool {
        matches!(self, Error::EngineDisagreement { .. })
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
