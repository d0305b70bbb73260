use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("spectrum has no coefficients")]
    EmptyInput,
    #[error("coefficient {index} is negative ({value})")]
    NegativeEntry { index: usize, value: f64 },
    #[error("coefficient {index} is not a finite number")]
    NonFinite { index: usize },
    #[error("coefficients sum to {sum}, not 1")]
    NotNormalized { sum: f64 },
    #[error("cannot pad a spectrum of dimension {current} down to {requested}")]
    DimTooSmall { current: usize, requested: usize },
    #[error("dimension must be positive")]
    ZeroDimension,
    #[error("result would have {entries} entries, above the cap of {cap}")]
    SizeCapExceeded { entries: u128, cap: usize },
    #[error("{name} = {value} is not a probability in (0, 1]")]
    InvalidProbability { name: &'static str, value: f64 },
    #[error("pair is not incomparable: {0}")]
    NotIncomparable(&'static str),
    #[error("invalid search configuration: {0}")]
    InvalidSearchConfig(String),
}
