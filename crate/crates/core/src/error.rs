use thiserror::Error;

use crate::inequality::TheoremId;
use crate::rational::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid bounds: lower endpoint {lo} exceeds upper endpoint {hi}")]
    InvalidBounds { lo: Box<Rational>, hi: Box<Rational> },
    #[error("division by zero")]
    DivisionByZero,
    #[error("divisor interval [{lo}, {hi}] contains zero")]
    DivisorContainsZero { lo: Box<Rational>, hi: Box<Rational> },
    #[error("H-difference does not exist: width {minuend_width} is smaller than width {subtrahend_width}")]
    HDiffNotExist {
        minuend_width: Box<Rational>,
        subtrahend_width: Box<Rational>,
    },
    #[error("cannot parse {0:?} as an exact rational")]
    NonRational(String),
    #[error("sequence of length {len} is too short (need at least {min})")]
    TooShort { len: usize, min: usize },
    #[error("sequence lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("index {index} is outside {first}..={last}")]
    IndexOutOfRange { index: i64, first: i64, last: i64 },
    #[error("step {from} -> {to} is not monotone: endpoints move in opposite directions")]
    NotDecomposable { from: i64, to: i64 },
    #[error("{theorem} expects {expected} sequence(s)")]
    ArityMismatch { theorem: TheoremId, expected: usize },
    #[error("{0} requires a summation window (n, m)")]
    WindowRequired(TheoremId),
    #[error("window for {theorem} is out of range: {detail}")]
    WindowOutOfRange { theorem: TheoremId, detail: String },
    #[error("exponent {value} is out of range ({detail})")]
    ExponentOutOfRange { value: i64, detail: String },
    #[error("boundary value at index {index} is not zero")]
    BoundaryNotZero { index: i64 },
    #[error("infeasible generator profile: {0}")]
    InfeasibleProfile(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("enumeration of {count} candidates exceeds the budget of {cap}")]
    BudgetExceeded { count: u128, cap: u128 },
}
