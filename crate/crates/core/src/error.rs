use thiserror::Error;

/// Errors produced anywhere in the toolkit.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("empty generator list")]
    NoGenerators,
    #[error("group order {order} exceeds the element cap {cap}")]
    CapExceeded { order: u64, cap: u64 },
    #[error("element is not a member of the group")]
    NotMember,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("invalid group spec `{spec}`: {reason}")]
    BadSpec { spec: String, reason: String },
    #[error("unsupported field order {0}")]
    UnsupportedField(u32),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("character table invariant violated: {0}")]
    Invariant(String),
    #[error("eigenspace splitting failed: {0}")]
    Splitting(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("result of a cited theorem violated: {0}")]
    CitedResultViolated(String),
    #[error("selector `{selector}` is ambiguous; candidates: {candidates}")]
    Ambiguous {
        selector: String,
        candidates: String,
    },
    #[error("selector `{0}` matches nothing")]
    NoMatch(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
