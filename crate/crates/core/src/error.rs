use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("modulus must be at least 1")]
    ZeroModulus,
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("floor power x^{alpha} at x = {x} exceeds exact float range for n = {n}")]
    Precision { alpha: f64, x: u64, n: u64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("{g} is not a unit modulo {n}")]
    NotAUnit { g: u64, n: u64 },
    #[error("at least one generator map is required")]
    EmptySpecList,
    #[error("henon maps need a square vertex count, got {0}")]
    NonSquareHenon(u64),
    #[error("vertex count {0} does not fit the graph index type")]
    TooManyVertices(u64),
    #[error("{0} is undefined for this graph")]
    Undefined(&'static str),
    #[error("length-cluster coefficient undefined for clustering {nu}")]
    UndefinedLambda { nu: f64 },
    #[error("clique vector truncated at size {0}; euler characteristic needs the full vector")]
    TruncatedCliques(usize),
    #[error("work budget of {0} exceeded")]
    BudgetExceeded(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("i/o error: {0}")]
    Io(String),
    #[error("all {0} samples had an undefined length-cluster coefficient")]
    AllSamplesUndefined(usize),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
