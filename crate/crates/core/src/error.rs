use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("order must be a positive even number, got {0}")]
    InvalidOrder(usize),
    #[error("invalid matching: {0}")]
    InvalidMatching(String),
    #[error("matching is crossing: chords ({0}, {1}) and ({2}, {3}) intersect")]
    Crossing(usize, usize, usize, usize),
    #[error("number of chords must be at least {min}, got {got}")]
    TooFewChords { min: usize, got: usize },
    #[error("degree n must be at least {min}, got {got}")]
    DegreeTooSmall { min: usize, got: usize },
    #[error("position {0} is out of range")]
    PositionOutOfRange(usize),
    #[error("root {0} is an endpoint of the diameter")]
    RootOnDiameter(usize),
    #[error("diagram has more than one diameter: {0:?}")]
    MultipleDiameters(Vec<(usize, usize)>),
    #[error("invalid labeling: {0}")]
    InvalidLabeling(String),
    #[error("invalid up-down word {0:?}: only U and D are allowed")]
    InvalidWord(String),
    #[error("brute-force enumeration is capped at words of length {max}, got {got}")]
    BruteForceTooLarge { max: usize, got: usize },
    #[error("2up-2down permutations exist only for odd lengths, got {0}")]
    EvenLength(usize),
    #[error("invalid caterpillar type {0:?}: entries must be even and at least 2")]
    InvalidCaterpillarType(Vec<usize>),
    #[error("diagram is not of the required shape: {0}")]
    WrongShape(String),
    #[error("invalid corner {0}: {1}")]
    InvalidCorner(usize, String),
    #[error("invalid Dyck word {0:?}")]
    InvalidDyckWord(String),
    #[error("series operation failed: {0}")]
    Series(String),
    #[error("cross-check failed: {0}")]
    CrossCheck(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
