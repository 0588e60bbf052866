use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("modulus t must be positive")]
    ZeroModulus,
    #[error("modulus t = {0} must be odd")]
    EvenModulus(u32),
    #[error("partition {partition} is not a {t}-core")]
    NotCore { partition: String, t: u32 },
    #[error("invalid coding: {0}")]
    InvalidCoding(String),
    #[error("truncation degrees differ ({0} vs {1})")]
    DegreeMismatch(usize, usize),
    #[error("series must have zero constant term")]
    NonZeroConstant,
    #[error("series is not invertible: {0}")]
    NotInvertible(String),
    #[error("degree {requested} exceeds truncation degree {available}")]
    DegreeOutOfRange { requested: usize, available: usize },
    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),
    #[error("internal arithmetic error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
