use thiserror::Error;

use crate::parse::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands live in different polynomial rings")]
    RingMismatch,

    #[error("structural error: {0}")]
    Structural(String),

    #[error("partial derivatives are only supported in characteristic zero (field is {0})")]
    UnsupportedCharacteristic(String),

    #[error("{0}")]
    Parse(#[from] ParseError),

    #[error("input is not homogeneous")]
    NotHomogeneous,

    #[error("the zero ideal is not allowed here")]
    ZeroIdeal,

    #[error("the unit ideal is not allowed here")]
    UnitIdeal,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("computation cancelled")]
    Cancelled,

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
