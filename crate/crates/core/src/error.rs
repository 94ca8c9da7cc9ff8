use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("unknown letter `{0}`")]
    UnknownLetter(String),

    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },

    #[error("orbit exceeds {limit} states (ideal is not regular or the budget is too small)")]
    OrbitBudgetExceeded { limit: usize },

    #[error("language is not closed under right multiplication: {0}")]
    NotIdealLanguage(String),

    #[error("backend `{backend}` cannot represent this ideal: {reason}")]
    UnsupportedBackend { backend: String, reason: String },

    #[error("degree {0} is too large for brute-force enumeration (max 12)")]
    DegreeTooLarge(usize),

    #[error("rational function has denominator with constant term {0}, expected 1")]
    NonUnitConstantTerm(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("spec file line {line}: {message}")]
    SpecFile { line: usize, message: String },
}
