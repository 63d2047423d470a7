use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("rational function has a pole at q = {0}")]
    Pole(String),

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("weight {0} is not dominant")]
    NotDominant(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// The two Kostka engines returned different polynomials for the same key.
    #[error("engine disagreement at {key}: kostant = {kostant}, vertex = {vertex}")]
    EngineDisagreement {
        key: String,
        kostant: String,
        vertex: String,
    },

    #[error("coefficient {0} is not an integral polynomial in q")]
    NonIntegral(String),

    /// A rewriting procedure failed to decrease its termination measure.
    #[error("rewriting did not terminate: {0}")]
    Termination(String),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}
