use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field size {p}^{k} exceeds the budget of {budget} elements")]
    BudgetExceeded { p: u64, k: u32, budget: u64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("F_{p}^{sub} is not a subfield of F_{p}^{sup}")]
    NotSubfield { p: u64, sub: u32, sup: u32 },
    #[error("gcd of generators is {0}, not 1")]
    NonCoprimeGenerators(u64),
    #[error("counts are inconsistent with an L-polynomial: {0}")]
    InconsistentCounts(String),
    #[error("series precision {available} is insufficient (needed {needed})")]
    InsufficientPrecision { needed: i64, available: i64 },
    #[error("singular point on the curve model")]
    SingularPoint,
    #[error("unsupported for this curve: {0}")]
    Unsupported(String),
    #[error("polynomial is not separable")]
    NotSeparable,
    #[error("mathematical check failed: {0}")]
    CheckFailed(String),
}

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
