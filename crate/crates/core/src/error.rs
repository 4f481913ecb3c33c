use thiserror::Error;

/// Errors raised by constructors, parsers and the command line front end.
///
/// The variants are grouped so that callers can tell apart malformed input,
/// violated preconditions, and instances for which the requested object
/// provably does not exist.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse group spec at `{token}`: {reason}")]
    SpecParse { token: String, reason: String },

    #[error("cyclic factor order must be at least 2, got {0}")]
    InvalidFactor(usize),

    #[error("group order {order} exceeds the supported bound {bound}")]
    OrderTooLarge { order: u128, bound: usize },

    #[error("element has {found} coordinates, group has {expected} factors")]
    Arity { expected: usize, found: usize },

    #[error("coordinate {index} = {value} is outside [0, {modulus})")]
    CoordinateOutOfRange {
        index: usize,
        value: usize,
        modulus: usize,
    },

    #[error("invalid coset representatives: {0}")]
    NotATransversal(String),

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("block size {m} does not divide the group order {order}")]
    Divisibility { m: usize, order: usize },

    #[error("impossible: {0}")]
    Impossible(String),

    #[error("does not exist: {0}")]
    Nonexistence(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("invalid graph: {0}")]
    Graph(String),

    #[error("line {line}: {message}")]
    Format { line: usize, message: String },

    #[error("internal construction failure: {0}")]
    Internal(String),
}

impl Error {
    /// True for errors that certify that the requested object cannot exist,
    /// as opposed to malformed input.
    pub fn is_nonexistence(&self) -> bool {
        matches!(self, Error::Impossible(_) | Error::Nonexistence(_))
    }

    pub(crate) fn format(line: usize, message: impl Into<String>) -> Self {
        Error::Format {
            line,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
