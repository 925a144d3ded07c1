use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed text input (plane, correspondence or triple file).
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// The incidence table parsed but violates a projective-plane axiom.
    #[error("invalid plane: {0}")]
    InvalidPlane(String),

    #[error("unsupported order {0}: only difference-set planes of order 2 and 3 are built in")]
    UnsupportedOrder(usize),

    #[error("plane has {0} points; at most 128 are supported")]
    TooLarge(usize),

    #[error("not a bijection: {0}")]
    NotBijection(String),

    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("index {index} out of range 0..{bound}")]
    OutOfRange { index: usize, bound: usize },

    #[error("not a subplane: {0}")]
    NotSubplane(String),

    #[error("subplane is not a Baer subplane: {0}")]
    NotBaer(String),

    #[error("degenerate configuration: {0}")]
    Degenerate(String),

    #[error("edge ({0}, {1}) is not an edge of the correspondence graph")]
    NotAnEdge(usize, usize),

    #[error("correspondence does not preserve the subplane: {0}")]
    SubplaneNotPreserved(String),

    #[error("restriction not closed: {0}")]
    NotClosed(String),

    #[error("presentation is not full: {0}")]
    NotFull(String),

    #[error("unknown strategy `{0}`")]
    UnknownStrategy(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
