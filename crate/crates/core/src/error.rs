use thiserror::Error;

/// Errors raised by constructors and operations across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field of order {p}^{m} exceeds the supported size")]
    FieldTooLarge { p: u32, m: u32 },
    #[error("field extension of total degree {0} is beyond the supported range")]
    ExtensionTooLarge(u32),
    #[error("fields have different characteristic or incompatible degrees")]
    FieldMismatch,
    #[error("bad field element coordinates: {0}")]
    BadCoords(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("total degree {degree} exceeds the cap {cap}")]
    DegreeOverflow { degree: u64, cap: u32 },
    #[error("element involves generator {found} but only generators below {limit} are allowed")]
    GeneratorOutOfRange { found: usize, limit: usize },
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("invalid Hopf structure: {0}")]
    InvalidHopf(String),
    #[error("tensor arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("invalid character: {0}")]
    InvalidCharacter(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("operation requires a noncommutative algebra")]
    Commutative,
    #[error("negative exponent where a unit is required: {0}")]
    NotInvertible(String),
    #[error("inconsistent result: {0}")]
    Inconsistent(String),
    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
