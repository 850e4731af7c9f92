//! Discrete Opial-type inequalities for interval sequences.

mod check;
mod registry;
mod verdict;

pub use check::{
    check_classical, check_pair, check_pair_with, check_single, check_single_with, lhs_terms, lhs_terms_with,
    pair_lhs_terms, CheckOptions, PairBoundary, SumConvention, Window,
};
pub use registry::{lookup, registry, ConstantArgs, Operator, Precondition, TheoremId, TheoremSpec, WindowKind};
pub use verdict::{IndexRange, PreconditionResult, Term, Verdict};
