use thiserror::Error;

/// Errors raised by the library. Every variant describes invalid input or a
/// violated precondition; internal inconsistencies panic instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse `{input}` at position {position}: {message}")]
    Parse {
        input: String,
        position: usize,
        message: String,
    },

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("coefficient r_{index} = {value} is not in the open interval (0,1)")]
    OutOfRange { index: usize, value: String },

    #[error("points do not form a triangle of the Farey tessellation")]
    NotFareyTriangle,

    #[error("map coefficients have determinant {0}, expected +1 or -1")]
    BadDeterminant(String),

    #[error("degenerate case s = r'_2: the Gompf condition holds automatically")]
    DegeneratePairSum,

    #[error("({n}, {h}) is not a realizability witness for the given tuple")]
    InvalidWitness { n: String, h: String },

    #[error("vertex {vertex} has non-negative self-intersection {weight}")]
    NonNegativeDiagonal { vertex: usize, weight: String },

    #[error("lattice entry {0} is too large for the embedding search")]
    WeightTooLarge(String),
}

pub type Result<T> = std::result::Result<T, Error>;
