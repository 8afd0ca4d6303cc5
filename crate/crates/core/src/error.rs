use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("degenerate Gram data: {0}")]
    DegenerateGram(String),
    #[error("leading minor of order {0} vanishes")]
    SingularLeadingMinor(usize),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("invalid design: {0}")]
    InvalidDesign(String),
    #[error("expected 2 shells, found {0}")]
    WrongShellCount(usize),
    #[error("shells must satisfy 1 <= r1 < r2 <= n-1, got r1={r1}, r2={r2}, n={n}")]
    DegenerateShells { n: usize, r1: usize, r2: usize },
    #[error("design has {size} points, a tight design needs {expected}")]
    NotTight { size: usize, expected: usize },
    #[error("malformed file at {location}: {message}")]
    MalformedFile { location: String, message: String },
    #[error("bad Hadamard order: {0}")]
    BadOrder(String),
    #[error("modulus {0} must be a prime congruent to 3 mod 4")]
    BadModulus(u64),
    #[error("unsupported order {0}")]
    UnsupportedOrder(u64),
    #[error("degenerate design: {0}")]
    Degenerate(String),
    #[error("block size {k} is half of {v}")]
    HalfSizeBlock { v: usize, k: usize },
    #[error("invalid Hadamard matrix: {0}")]
    InvalidHadamard(String),
    #[error("invalid symmetric design: {0}")]
    InvalidSymmetricDesign(String),
}

pub type Result<T> = std::result::Result<T, Error>;
