use thiserror::Error;

/// Errors produced by channel construction, exponent evaluation and the code oracle.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("d = {0} is not a prime")]
    NotPrime(u32),
    #[error("probability {0} is outside [0, 1]")]
    ProbabilityOutOfRange(f64),
    #[error("expected {expected} probabilities, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("entry {index} is negative or not finite ({value})")]
    InvalidEntry { index: usize, value: f64 },
    #[error("probabilities sum to {0}, not 1 within tolerance")]
    BadSum(f64),
    #[error("distributions live on different alphabets (q = {0} vs q = {1})")]
    AlphabetMismatch(usize, usize),
    #[error("parameter {name} = {value} is out of range")]
    OutOfRange { name: &'static str, value: f64 },
    #[error("vector lengths differ ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("additive code has odd F_d-dimension {0}")]
    OddDimension(usize),
    #[error("code parameters out of range: n = {n}, k = {k}")]
    BadCodeParams { n: usize, k: usize },
    #[error("instance too large: {what} = {size} exceeds 2^24")]
    TooLarge { what: &'static str, size: f64 },
    #[error("no sign change found while bracketing {0}")]
    NoSignChange(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
