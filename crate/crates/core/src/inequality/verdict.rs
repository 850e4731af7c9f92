use serde::{Deserialize, Serialize};

use crate::inequality::registry::TheoremId;
use crate::interval::Interval;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PreconditionResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// One summand of a left-hand side: the product interval and its norm.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub index: i64,
    pub value: Interval,
    pub norm: Rational,
}

/// Inclusive summation range; empty when `start > end`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexRange {
    pub start: i64,
    pub end: i64,
}

impl IndexRange {
    pub fn new(start: i64, end: i64) -> Self {
        IndexRange { start, end }
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> {
        self.start..=self.end
    }

    pub fn is_empty(&self) -> bool {
        self.start > self.end
    }
}

/// Outcome of checking one inequality on concrete data.
///
/// `holds` is the exact comparison `lhs <= rhs` and is reported even when a
/// hypothesis fails; `within_hypotheses` tells the two situations apart.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub theorem: TheoremId,
    /// `[λ₁, λ₂]` for single-sequence inequalities; absent for pairs.
    pub exponents: Option<[u32; 2]>,
    pub lhs_window: IndexRange,
    pub rhs_window: IndexRange,
    pub preconditions: Vec<PreconditionResult>,
    pub within_hypotheses: bool,
    pub lhs: Rational,
    pub rhs: Rational,
    pub constant: Rational,
    pub holds: bool,
    /// `lhs / rhs`; `0` when both sides vanish, absent when only `rhs` does.
    pub ratio: Option<Rational>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Verdict {
    /// True when the hypotheses held but the inequality did not.
    pub fn is_violation(&self) -> bool {
        self.within_hypotheses && !self.holds
    }

    pub fn failed_preconditions(&self) -> impl Iterator<Item = &PreconditionResult> {
        self.preconditions.iter().filter(|p| !p.passed)
    }
}

pub(crate) fn ratio_of(lhs: &Rational, rhs: &Rational) -> Option<Rational> {
    if rhs.is_zero() {
        lhs.is_zero().then(Rational::zero)
    } else {
        lhs.checked_div(rhs).ok()
    }
}
