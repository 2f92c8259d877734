use thiserror::Error;

/// Errors raised by group construction, structural queries and the harness.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed permutation: {0}")]
    MalformedPermutation(String),

    #[error("cycle notation parse error: {0}")]
    Parse(String),

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("not a subgroup: generator {0} is not in the ambient group")]
    NotSubgroup(String),

    #[error("not normal: conjugating {element} by {conjugator} leaves the subgroup")]
    NotNormal { element: String, conjugator: String },

    #[error("subgroup is not invariant: automorphism #{0} moves it")]
    NotInvariant(usize),

    #[error("{what} exceeds the configured cap ({size} > {cap})")]
    CapExceeded {
        what: &'static str,
        size: u128,
        cap: u128,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("corpus error at line {line}: {message}")]
    Corpus { line: usize, message: String },

    #[error("i/o error on {path}: {message}")]
    Io { path: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
