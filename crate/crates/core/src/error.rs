use thiserror::Error;

/// Errors raised by the library.
///
/// Parse-type failures (malformed literals, series strings, JSON) are kept
/// apart from domain failures so that front ends can map them to different
/// exit statuses.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("malformed input: {0}")]
    Format(String),

    #[error("invalid multiplicity sequence: entry {index} is not a sum of consecutive successors")]
    InvalidSequence { index: usize },

    #[error("semigroup is not Arf")]
    NotArf,

    #[error("generators have gcd {0}, the complement would be infinite")]
    GcdNotOne(u64),

    #[error("empty generator set")]
    Empty,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("index {index} out of range for dimension {d}")]
    IndexOutOfRange { index: usize, d: usize },

    #[error("{0} is not a member of the semigroup")]
    NotMember(String),

    #[error("not a good semigroup: {0}")]
    NotGood(String),

    #[error("semigroup or ring is not local")]
    NotLocal,

    #[error("invalid multiplicity tree: {0}")]
    InvalidTree(String),

    #[error("trees have different branch collections")]
    DifferentBranches,

    #[error("valuation undecidable at this truncation: component {component} is zero up to order {order}")]
    Undecidable { component: usize, order: u32 },

    #[error("truncation exhausted: {0}; raise the truncation order")]
    Truncation(String),

    #[error("{0}")]
    Domain(String),
}

impl Error {
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse { .. } | Error::Format(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
