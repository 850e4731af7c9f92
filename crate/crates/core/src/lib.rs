//! Exact interval arithmetic and discrete Opial-type inequality checks for
//! sequences of compact intervals with generalized Hukuhara differences.

pub mod error;
pub mod inequality;
pub mod interval;
pub mod oracle;
pub mod rational;
pub mod sequence;

pub use error::{Error, Result};
pub use inequality::{
    check_classical, check_pair, check_pair_with, check_single, check_single_with, CheckOptions, PairBoundary,
    Precondition, SumConvention, TheoremId, Verdict, Window,
};
pub use interval::{GhCase, Interval};
pub use rational::Rational;
pub use sequence::{
    synchronous, Direction, IntervalSequence, MonotonicityProfile, MuDirection, Segment, SegmentDecomposition,
    Synchronicity,
};
