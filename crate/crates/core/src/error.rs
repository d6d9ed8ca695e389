use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands belong to different polynomial contexts")]
    ContextMismatch,

    #[error("invalid polynomial context: {0}")]
    InvalidContext(String),

    #[error("exponent overflow")]
    ExponentOverflow,

    #[error("integer overflow in exact cone arithmetic")]
    ArithmeticOverflow,

    #[error("operation requires a proper nonzero ideal, got the {0} ideal")]
    TrivialIdeal(&'static str),

    #[error("power must be at least 1, got {0}")]
    InvalidPower(u32),

    #[error("embedded primes present")]
    EmbeddedPrimes,

    #[error("primary component {0} is not normal")]
    NonNormalComponent(String),

    #[error("cone is not pointed")]
    NotPointed,

    #[error("cone is not full-dimensional in its ambient space")]
    NotFullDimensional,

    #[error("invalid cone: {0}")]
    InvalidCone(String),

    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("invalid digraph: {0}")]
    InvalidDigraph(String),

    #[error("vertex set is not a vertex cover of the underlying graph")]
    NotVertexCover,

    #[error("vertex count {count} exceeds the cover-enumeration cap of {cap}")]
    VertexCapExceeded { count: usize, cap: usize },

    #[error("lattice point count {count} exceeds the cap of {cap}")]
    LatticePointCapExceeded { count: u128, cap: u128 },

    #[error(
        "depth reduction hypothesis violated: need p >= 1 and q - p >= 2, got p = {p}, q = {q}"
    )]
    HypothesisViolated { p: u32, q: u32 },

    #[error("variable index {0} out of range")]
    VariableOutOfRange(usize),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    /// True for errors caused by a configured resource cap.
    pub fn is_resource_cap(&self) -> bool {
        matches!(
            self,
            Error::VertexCapExceeded { .. } | Error::LatticePointCapExceeded { .. }
        )
    }

    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
