use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("radix {radix} at coordinate {coord} is below 2")]
    InvalidRadix { coord: usize, radix: u32 },

    #[error("group spec has no radices")]
    EmptyRadices,

    #[error("natural-number overflow while computing {0}")]
    Overflow(&'static str),

    #[error("index {value} out of range (must be below {bound})")]
    IndexOutOfRange { value: String, bound: String },

    #[error("rank {rank} exceeds depth {depth}")]
    RankOutOfRange { rank: usize, depth: usize },

    #[error("digit {digit} at coordinate {coord} is not below radix {radix}")]
    DigitOutOfRange { coord: usize, digit: u32, radix: u32 },

    #[error("point has {got} coordinates, group depth is {expected}")]
    DepthMismatch { expected: usize, got: usize },

    #[error("length {got} does not match group size {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("exponent p must be positive, got {0}")]
    NonPositiveExponent(f64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Io(e.to_string())
    }
}
