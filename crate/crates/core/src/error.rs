use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not divisible: {numerator} / {denominator} leaves a nonzero remainder")]
    NotDivisible {
        numerator: String,
        denominator: String,
    },

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("determinant of order {order} exceeds the configured bound {bound}")]
    OrderTooLarge { order: usize, bound: usize },

    #[error("cannot set {var} to zero: it occurs with a negative exponent")]
    NegativeExponentAtZero { var: String },

    #[error("plane partition is not symmetric")]
    NotSymmetric,

    #[error("malformed input: {0}")]
    MalformedInput(String),

    #[error("cannot parse polynomial: {0}")]
    Parse(String),

    #[error("unknown check `{0}`")]
    UnknownCheck(String),

    #[error("invalid range: {0}")]
    InvalidRange(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
