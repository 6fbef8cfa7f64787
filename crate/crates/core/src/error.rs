use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid order {order}: {reason}")]
    InvalidOrder { order: usize, reason: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("not a homomorphism: {0}")]
    NotAHomomorphism(String),

    /// A skew brace axiom failed. `witness` is the lexicographically least
    /// offending tuple.
    #[error("skew brace axiom violated: {axiom} at {witness:?}")]
    Axiom { axiom: String, witness: Vec<usize> },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse {
            position: e.column(),
            message: e.to_string(),
        }
    }
}
