//! Verdict computation: window resolution, hypothesis checks and exact sums.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::inequality::registry::{check_exponent, lookup, ConstantArgs, Operator, Precondition, TheoremId, WindowKind};
use crate::inequality::verdict::{ratio_of, IndexRange, PreconditionResult, Term, Verdict};
use crate::interval::Interval;
use crate::rational::Rational;
use crate::sequence::{synchronous, IntervalSequence, Step, Synchronicity};

/// Summation limits `(n, m)` in the sequence's own indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Window {
    pub n: i64,
    pub m: i64,
}

impl Window {
    pub fn new(n: i64, m: i64) -> Self {
        Window { n, m }
    }
}

/// Which right-hand summation range the two-sided single-sequence results use.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SumConvention {
    /// `T3_5`: `i = 1..m`; `T4_5`: `i = 0..m−1`.
    #[default]
    Theorem,
    /// `i = 1..m−1` for both, the range used in the worked numerical example
    /// (and, for `T4_5`, the printed range minus the term past the end).
    /// Not sound in general; kept to reproduce printed numbers.
    Literal,
}

/// Left boundary used by `T3_10`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PairBoundary {
    /// `u_1 = v_1 = [0, 0]`; `u_0`, `v_0` must be present but are unconstrained.
    #[default]
    AtOne,
    /// `u_0 = v_0 = [0, 0]`.
    AtZero,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOptions {
    pub convention: SumConvention,
    pub t3_10_boundary: PairBoundary,
}

#[derive(Debug, Clone)]
struct Plan {
    lhs: IndexRange,
    rhs: IndexRange,
    args: ConstantArgs,
    /// Indices the hypotheses are evaluated over.
    domain: IndexRange,
    /// Boundary predicates with the index they pin to zero.
    anchors: Vec<(Precondition, i64)>,
}

fn out_of_range(theorem: TheoremId, detail: impl Into<String>) -> Error {
    Error::WindowOutOfRange {
        theorem,
        detail: detail.into(),
    }
}

fn resolve(
    id: TheoremId,
    seq: &IntervalSequence,
    lambdas: (u32, u32),
    window: Option<Window>,
    opts: &CheckOptions,
) -> Result<Plan> {
    use TheoremId::*;
    let spec = lookup(id);
    let (first, last) = (seq.first_index(), seq.last_index());
    if seq.len() < 2 {
        return Err(Error::TooShort {
            len: seq.len(),
            min: 2,
        });
    }
    let window = match (spec.window, window) {
        (WindowKind::Required, None) => return Err(Error::WindowRequired(id)),
        (WindowKind::None, Some(w)) => {
            return Err(out_of_range(id, format!("takes no window, got ({}, {})", w.n, w.m)))
        }
        (_, w) => w,
    };
    let starts_at_zero = || {
        if first != 0 {
            Err(out_of_range(id, format!("sequence must start at index 0, starts at {first}")))
        } else {
            Ok(())
        }
    };
    let (lambda1, lambda2) = lambdas;
    let args = |n: i64, m: i64| ConstantArgs {
        lambda1,
        lambda2,
        n,
        m,
    };
    let r = IndexRange::new;
    let plan = match id {
        T2_2 => {
            starts_at_zero()?;
            let n = last;
            Plan {
                lhs: r(1, n - 1),
                rhs: r(0, n - 1),
                args: args(n, n),
                domain: r(0, n),
                anchors: vec![(Precondition::ZeroAtStart, 0), (Precondition::ZeroAtEnd, n)],
            }
        }
        L3_1 | L3_01 | T3_1 | T3_3 | T4_1 | T3_6 => {
            starts_at_zero()?;
            let n = last;
            let (lhs, rhs) = if id == T4_1 {
                (r(0, n - 1), r(0, n - 1))
            } else {
                (r(1, n), r(1, n))
            };
            Plan {
                lhs,
                rhs,
                args: args(n, n),
                domain: r(0, n),
                anchors: vec![(Precondition::ZeroAtStart, 0)],
            }
        }
        L3_02 | T3_2 | T3_4 | T4_2 | T3_7 | T3_9 => {
            let w = window.expect("required window checked above");
            if id == T3_4 {
                starts_at_zero()?;
            }
            // nabla at the window start reaches one index further left
            let lowest = if matches!(id, L3_02 | T3_2 | T3_4) { first + 1 } else { first };
            if w.n < lowest || w.m > last || w.n > w.m {
                return Err(out_of_range(
                    id,
                    format!("need {lowest} <= n <= m <= {last}, got ({}, {})", w.n, w.m),
                ));
            }
            let (lhs, rhs) = match id {
                T4_2 => (r(w.n, w.m - 1), r(w.n, w.m.min(last - 1))),
                T3_7 | T3_9 => (r(w.n + 1, w.m), r(w.n + 1, w.m)),
                _ => (r(w.n, w.m - 1), r(w.n, w.m)),
            };
            Plan {
                lhs,
                rhs,
                args: args(w.n, w.m),
                domain: r(first, w.m),
                anchors: vec![(Precondition::ZeroAtEnd, w.m)],
            }
        }
        T3_5 | T4_5 => {
            starts_at_zero()?;
            let m = last;
            let rhs = match (id, opts.convention) {
                (_, SumConvention::Literal) => r(1, m - 1),
                (T3_5, SumConvention::Theorem) => r(1, m),
                _ => r(0, m - 1),
            };
            Plan {
                lhs: r(1, m - 1),
                rhs,
                args: args(m, m),
                domain: r(0, m),
                anchors: vec![(Precondition::ZeroAtStart, 0), (Precondition::ZeroAtEnd, m)],
            }
        }
        T3_8 => {
            starts_at_zero()?;
            let w = window.unwrap_or(Window::new(last, last));
            if w.n < 1 || w.m > last || w.n > w.m {
                return Err(out_of_range(id, format!("need 1 <= n <= m <= {last}, got ({}, {})", w.n, w.m)));
            }
            Plan {
                lhs: r(1, w.n),
                rhs: r(1, w.n),
                args: args(w.n, w.m),
                domain: r(0, w.m),
                anchors: vec![(Precondition::ZeroAtStart, 0)],
            }
        }
        T3_10 => {
            starts_at_zero()?;
            let m = last;
            let left = match opts.t3_10_boundary {
                PairBoundary::AtOne => (Precondition::ZeroAtOne, 1),
                PairBoundary::AtZero => (Precondition::ZeroAtStart, 0),
            };
            Plan {
                lhs: r(1, m),
                rhs: r(1, m),
                args: args(m, m),
                domain: r(left.1, m),
                anchors: vec![left, (Precondition::ZeroAtEnd, m)],
            }
        }
    };
    Ok(plan)
}

/// The interval the theorem's operator assigns to index `i`.
fn difference_at(seq: &IntervalSequence, operator: Operator, i: i64) -> Result<Interval> {
    let (a, b) = match operator {
        Operator::Nabla => (i, i - 1),
        Operator::Delta | Operator::ClassicalForward => (i + 1, i),
    };
    Ok(seq.at(a)?.gh_sub(seq.at(b)?))
}

fn slice(seq: &IntervalSequence, range: IndexRange) -> IntervalSequence {
    let items = seq
        .indexed()
        .filter(|(i, _)| *i >= range.start && *i <= range.end)
        .map(|(_, u)| u.clone())
        .collect();
    IntervalSequence::with_base(items, range.start)
}

fn exponents_for(id: TheoremId, lambda1: u32, lambda2: u32) -> Result<(u32, u32)> {
    if let Some(fixed) = lookup(id).fixed_exponents {
        return Ok(fixed);
    }
    check_exponent(lambda1)?;
    check_exponent(lambda2)?;
    Ok((lambda1, lambda2))
}

/// Per-index summands `u_i^λ₁ (D u_i)^λ₂` of a single-sequence left-hand side.
pub fn lhs_terms(
    seq: &IntervalSequence,
    lambda1: u32,
    lambda2: u32,
    id: TheoremId,
    window: Option<Window>,
) -> Result<Vec<Term>> {
    lhs_terms_with(seq, lambda1, lambda2, id, window, &CheckOptions::default())
}

pub fn lhs_terms_with(
    seq: &IntervalSequence,
    lambda1: u32,
    lambda2: u32,
    id: TheoremId,
    window: Option<Window>,
    opts: &CheckOptions,
) -> Result<Vec<Term>> {
    let spec = lookup(id);
    if spec.arity != 1 {
        return Err(Error::ArityMismatch { theorem: id, expected: spec.arity });
    }
    let (l1, l2) = exponents_for(id, lambda1, lambda2)?;
    let plan = resolve(id, seq, (l1, l2), window, opts)?;
    interval_terms(seq, spec.operator, l1, l2, plan.lhs)
}

fn interval_terms(
    seq: &IntervalSequence,
    operator: Operator,
    l1: u32,
    l2: u32,
    range: IndexRange,
) -> Result<Vec<Term>> {
    range
        .iter()
        .map(|i| {
            let d = difference_at(seq, operator, i)?;
            let value = seq.at(i)?.pow(l1)?.mul(&d.pow(l2)?);
            let norm = value.qnorm();
            Ok(Term { index: i, value, norm })
        })
        .collect()
}

/// Right-hand sum `Σ ‖D u_i‖^(λ₁+λ₂)` without the constant.
fn norm_power_sum(seq: &IntervalSequence, operator: Operator, power: u32, range: IndexRange) -> Result<Rational> {
    range
        .iter()
        .map(|i| Ok(difference_at(seq, operator, i)?.qnorm().pow(power)))
        .sum()
}

/// Scalar evaluation on the lower endpoints, used for the real-sequence lemmas.
fn real_sides(
    values: &IntervalSequence,
    operator: Operator,
    l1: u32,
    l2: u32,
    plan: &Plan,
) -> Result<(Rational, Rational)> {
    let x = |i: i64| values.at(i).map(|u| u.lo().clone());
    let diff = |i: i64| -> Result<Rational> {
        match operator {
            Operator::Nabla => Ok(x(i)? - x(i - 1)?),
            Operator::Delta | Operator::ClassicalForward => Ok(x(i + 1)? - x(i)?),
        }
    };
    let mut lhs = Rational::zero();
    for i in plan.lhs.iter() {
        lhs += x(i)?.abs().pow(l1) * diff(i)?.abs().pow(l2);
    }
    let mut sum = Rational::zero();
    for i in plan.rhs.iter() {
        sum += diff(i)?.abs().pow(l1 + l2);
    }
    Ok((lhs, sum))
}

pub fn check_single(
    seq: &IntervalSequence,
    lambda1: u32,
    lambda2: u32,
    id: TheoremId,
    window: Option<Window>,
) -> Result<Verdict> {
    check_single_with(seq, lambda1, lambda2, id, window, &CheckOptions::default())
}

pub fn check_single_with(
    seq: &IntervalSequence,
    lambda1: u32,
    lambda2: u32,
    id: TheoremId,
    window: Option<Window>,
    opts: &CheckOptions,
) -> Result<Verdict> {
    let spec = lookup(id);
    if spec.arity != 1 {
        return Err(Error::ArityMismatch { theorem: id, expected: spec.arity });
    }
    let (l1, l2) = exponents_for(id, lambda1, lambda2)?;
    let plan = resolve(id, seq, (l1, l2), window, opts)?;
    let preconditions: Vec<PreconditionResult> = spec
        .preconditions
        .iter()
        .map(|&p| evaluate_single(p, seq, &plan))
        .collect();

    let real_valued = spec.requires(Precondition::RealValued) && seq.is_degenerate();
    let (lhs, rhs_sum) = if real_valued {
        real_sides(seq, spec.operator, l1, l2, &plan)?
    } else {
        let lhs = interval_terms(seq, spec.operator, l1, l2, plan.lhs)?
            .into_iter()
            .map(|t| t.norm)
            .sum();
        (lhs, norm_power_sum(seq, spec.operator, l1 + l2, plan.rhs)?)
    };
    let constant = spec.constant(&plan.args);
    let mut notes = Vec::new();
    if opts.convention == SumConvention::Literal && matches!(id, TheoremId::T3_5 | TheoremId::T4_5) {
        notes.push(format!(
            "right-hand sum over i = {}..{} (literal convention; not a valid bound in general)",
            plan.rhs.start, plan.rhs.end
        ));
    }
    Ok(finish(id, Some([l1, l2]), &plan, preconditions, lhs, constant * rhs_sum, constant_of(spec, &plan), notes))
}

fn constant_of(spec: &crate::inequality::registry::TheoremSpec, plan: &Plan) -> Rational {
    spec.constant(&plan.args)
}

#[allow(clippy::too_many_arguments)]
fn finish(
    id: TheoremId,
    exponents: Option<[u32; 2]>,
    plan: &Plan,
    preconditions: Vec<PreconditionResult>,
    lhs: Rational,
    rhs: Rational,
    constant: Rational,
    notes: Vec<String>,
) -> Verdict {
    let within_hypotheses = preconditions.iter().all(|p| p.passed);
    let holds = lhs <= rhs;
    let ratio = ratio_of(&lhs, &rhs);
    Verdict {
        theorem: id,
        exponents,
        lhs_window: plan.lhs,
        rhs_window: plan.rhs,
        preconditions,
        within_hypotheses,
        lhs,
        rhs,
        constant,
        holds,
        ratio,
        notes,
    }
}

/// The classical discrete inequality on real numbers `u_0, …, u_n`.
pub fn check_classical(values: &[Rational]) -> Result<Verdict> {
    if values.len() < 2 {
        return Err(Error::TooShort { len: values.len(), min: 2 });
    }
    for index in [0, values.len() - 1] {
        if !values[index].is_zero() {
            return Err(Error::BoundaryNotZero { index: index as i64 });
        }
    }
    let seq = IntervalSequence::from_reals(values.iter().cloned());
    check_single(&seq, 1, 1, TheoremId::T2_2, None)
}

/// Summands `u_{i−1} ∇v_i + v_i ∇u_i` of a two-sequence left-hand side.
pub fn pair_lhs_terms(
    u: &IntervalSequence,
    v: &IntervalSequence,
    id: TheoremId,
    window: Option<Window>,
) -> Result<Vec<Term>> {
    let (plan, _) = pair_plan(u, v, id, window, &CheckOptions::default())?;
    pair_terms(u, v, plan.lhs)
}

fn pair_terms(u: &IntervalSequence, v: &IntervalSequence, range: IndexRange) -> Result<Vec<Term>> {
    range
        .iter()
        .map(|i| {
            let du = u.at(i)?.gh_sub(u.at(i - 1)?);
            let dv = v.at(i)?.gh_sub(v.at(i - 1)?);
            let value = u.at(i - 1)?.mul(&dv).add(&v.at(i)?.mul(&du));
            let norm = value.qnorm();
            Ok(Term { index: i, value, norm })
        })
        .collect()
}

fn pair_plan(
    u: &IntervalSequence,
    v: &IntervalSequence,
    id: TheoremId,
    window: Option<Window>,
    opts: &CheckOptions,
) -> Result<(Plan, &'static crate::inequality::registry::TheoremSpec)> {
    let spec = lookup(id);
    if spec.arity != 2 {
        return Err(Error::ArityMismatch { theorem: id, expected: spec.arity });
    }
    if u.len() != v.len() {
        return Err(Error::LengthMismatch { left: u.len(), right: v.len() });
    }
    if u.base() != v.base() {
        return Err(out_of_range(
            id,
            format!("u starts at index {} but v starts at {}", u.base(), v.base()),
        ));
    }
    Ok((resolve(id, u, (1, 1), window, opts)?, spec))
}

pub fn check_pair(
    u: &IntervalSequence,
    v: &IntervalSequence,
    id: TheoremId,
    window: Option<Window>,
) -> Result<Verdict> {
    check_pair_with(u, v, id, window, &CheckOptions::default())
}

pub fn check_pair_with(
    u: &IntervalSequence,
    v: &IntervalSequence,
    id: TheoremId,
    window: Option<Window>,
    opts: &CheckOptions,
) -> Result<Verdict> {
    let (plan, spec) = pair_plan(u, v, id, window, opts)?;
    let preconditions = hypotheses(spec, opts)
        .into_iter()
        .map(|p| evaluate_pair(p, u, v, &plan))
        .collect();
    let lhs: Rational = pair_terms(u, v, plan.lhs)?.into_iter().map(|t| t.norm).sum();
    let mut rhs_sum = Rational::zero();
    for i in plan.rhs.iter() {
        let du = u.at(i)?.gh_sub(u.at(i - 1)?);
        let dv = v.at(i)?.gh_sub(v.at(i - 1)?);
        rhs_sum += du.pow(2)?.add(&dv.pow(2)?).qnorm();
    }
    let constant = spec.constant(&plan.args);
    let mut notes = Vec::new();
    if matches!(id, TheoremId::T3_8 | TheoremId::T3_9 | TheoremId::T3_10) {
        let vd = slice(v, plan.domain);
        let v_shape = match vd.alternate_segments() {
            Ok(d) => format!("piecewise alternate with {} segment(s)", d.segments.len()),
            Err(e) => format!("not piecewise alternate ({e})"),
        };
        notes.push(format!("v (not constrained by the hypotheses): {v_shape}"));
    }
    if id == TheoremId::T3_10 {
        notes.push(format!("left boundary convention: {:?}", opts.t3_10_boundary));
    }
    let rhs = &constant * rhs_sum;
    Ok(finish(id, None, &plan, preconditions, lhs, rhs, constant, notes))
}

/// The theorem's hypotheses, with the left boundary swapped when requested.
fn hypotheses(spec: &crate::inequality::registry::TheoremSpec, opts: &CheckOptions) -> Vec<Precondition> {
    spec.preconditions
        .iter()
        .map(|&p| match (p, opts.t3_10_boundary) {
            (Precondition::ZeroAtOne, PairBoundary::AtZero) => Precondition::ZeroAtStart,
            _ => p,
        })
        .collect()
}

fn result(p: Precondition, failure: Option<String>, ok_detail: impl Into<String>) -> PreconditionResult {
    match failure {
        Some(detail) => PreconditionResult {
            name: p.name().into(),
            passed: false,
            detail,
        },
        None => PreconditionResult {
            name: p.name().into(),
            passed: true,
            detail: ok_detail.into(),
        },
    }
}

fn anchor_of(plan: &Plan, p: Precondition) -> Option<i64> {
    plan.anchors.iter().find(|(q, _)| *q == p).map(|(_, i)| *i)
}

fn zero_failure(seq: &IntervalSequence, index: i64, label: &str) -> Option<String> {
    match seq.get(index) {
        Some(u) if u.is_zero() => None,
        Some(u) => Some(format!("{label}_{index} = {u} is not [0, 0]")),
        None => Some(format!("{label}_{index} is missing")),
    }
}

/// First index where the sequence stops being monotone, with a reason.
fn monotone_failure(seq: &IntervalSequence) -> Option<String> {
    let mut established = None;
    for (k, w) in seq.items().windows(2).enumerate() {
        let i = seq.base() + k as i64 + 1;
        match Step::between(&w[0], &w[1]).direction() {
            None => {
                return Some(format!(
                    "index {i}: lower and upper endpoints move in opposite directions"
                ))
            }
            Some(None) => {}
            Some(Some(d)) => match established {
                None => established = Some(d),
                Some(e) if e != d => {
                    return Some(format!("index {i}: sequence turns from {e:?} to {d:?}"))
                }
                _ => {}
            },
        }
    }
    None
}

fn width_failure(seq: &IntervalSequence, increasing: bool) -> Option<String> {
    seq.items().windows(2).enumerate().find_map(|(k, w)| {
        let i = seq.base() + k as i64 + 1;
        let (a, b) = (w[0].width(), w[1].width());
        let bad = if increasing { b < a } else { b > a };
        bad.then(|| format!("index {i}: width goes from {a} to {b}"))
    })
}

/// A single term is trivially one segment.
fn piecewise_failure(seq: &IntervalSequence) -> Option<String> {
    if seq.len() < 2 {
        return None;
    }
    seq.alternate_segments().err().map(|e| e.to_string())
}

fn evaluate_single(p: Precondition, seq: &IntervalSequence, plan: &Plan) -> PreconditionResult {
    let dom = slice(seq, plan.domain);
    let failure = match p {
        Precondition::RealValued => dom
            .indexed()
            .find(|(_, u)| !u.is_degenerate())
            .map(|(i, u)| format!("u_{i} = {u} is not degenerate")),
        Precondition::NonNegative => dom
            .indexed()
            .find(|(_, u)| u.lo().is_negative())
            .map(|(i, u)| format!("u_{i} = {u} has a negative endpoint")),
        Precondition::NonDecreasing => dom.items().windows(2).enumerate().find_map(|(k, w)| {
            let i = dom.base() + k as i64 + 1;
            (w[1].lo() < w[0].lo() || w[1].hi() < w[0].hi())
                .then(|| format!("index {i}: u_{i} = {} is below u_{} = {}", w[1], i - 1, w[0]))
        }),
        Precondition::ZeroAtStart | Precondition::ZeroAtOne | Precondition::ZeroAtEnd => {
            let index = anchor_of(plan, p).expect("boundary predicate has an anchor");
            zero_failure(seq, index, "u")
        }
        Precondition::Monotone => monotone_failure(&dom),
        Precondition::MuIncreasing => width_failure(&dom, true),
        Precondition::MuDecreasing => width_failure(&dom, false),
        Precondition::PiecewiseAlternate => piecewise_failure(&dom),
        Precondition::NoOtherZeros => {
            let anchors: Vec<i64> = plan.anchors.iter().map(|(_, i)| *i).collect();
            dom.zero_indices()
                .into_iter()
                .find(|i| !anchors.contains(i))
                .map(|i| format!("u_{i} = [0, 0] is an additional zero"))
        }
        Precondition::Synchronous => Some("needs two sequences".into()),
    };
    let ok = match p {
        Precondition::PiecewiseAlternate if dom.len() >= 2 => dom
            .alternate_segments()
            .map(|d| format!("{} segment(s), breakpoints {:?}", d.segments.len(), d.breakpoints))
            .unwrap_or_default(),
        _ => "ok".into(),
    };
    result(p, failure, ok)
}

fn evaluate_pair(p: Precondition, u: &IntervalSequence, v: &IntervalSequence, plan: &Plan) -> PreconditionResult {
    let (du, dv) = (slice(u, plan.domain), slice(v, plan.domain));
    let both = |f: &dyn Fn(&IntervalSequence, &str) -> Option<String>| {
        f(&du, "u").or_else(|| f(&dv, "v"))
    };
    let failure = match p {
        Precondition::ZeroAtStart | Precondition::ZeroAtOne | Precondition::ZeroAtEnd => {
            let index = anchor_of(plan, p).expect("boundary predicate has an anchor");
            zero_failure(u, index, "u").or_else(|| zero_failure(v, index, "v"))
        }
        Precondition::MuIncreasing => both(&|s, l| width_failure(s, true).map(|d| format!("{l}: {d}"))),
        Precondition::MuDecreasing => both(&|s, l| width_failure(s, false).map(|d| format!("{l}: {d}"))),
        Precondition::Monotone => both(&|s, l| monotone_failure(s).map(|d| format!("{l}: {d}"))),
        Precondition::Synchronous => match synchronous(&du, &dv) {
            Ok(Synchronicity::Synchronous) => None,
            Ok(Synchronicity::Asynchronous) => Some("u and v are monotone in opposite directions".into()),
            Ok(Synchronicity::Neither) => Some(
                monotone_failure(&du)
                    .map(|d| format!("u: {d}"))
                    .or_else(|| monotone_failure(&dv).map(|d| format!("v: {d}")))
                    .unwrap_or_else(|| "not both monotone".into()),
            ),
            Err(e) => Some(e.to_string()),
        },
        Precondition::PiecewiseAlternate => piecewise_failure(&du).map(|e| format!("u: {e}")),
        Precondition::NoOtherZeros => {
            let anchors: Vec<i64> = plan.anchors.iter().map(|(_, i)| *i).collect();
            du.indexed()
                .zip(dv.items())
                .find(|((i, a), b)| a.is_zero() && b.is_zero() && !anchors.contains(i))
                .map(|((i, _), _)| format!("u_{i} = v_{i} = [0, 0] is an additional common zero"))
        }
        Precondition::RealValued | Precondition::NonNegative | Precondition::NonDecreasing => {
            both(&|s, l| {
                evaluate_single(p, s, plan)
                    .passed
                    .then_some(())
                    .map_or(Some(format!("{l} fails {}", p.name())), |_| None)
            })
        }
    };
    result(p, failure, "ok")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ex33() -> IntervalSequence {
        IntervalSequence::from_int_pairs(&[(0, 0), (1, 2), (2, 4), (3, 6), (1, 2), (0, 0)])
    }

    fn int(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn worked_example_literal_window() {
        let opts = CheckOptions {
            convention: SumConvention::Literal,
            ..CheckOptions::default()
        };
        let v = check_single_with(&ex33(), 2, 3, TheoremId::T3_5, None, &opts).unwrap();
        assert_eq!(v.lhs, int(704));
        assert_eq!(v.rhs, int(6048));
        assert!(v.holds && v.within_hypotheses);
    }

    #[test]
    fn worked_example_theorem_window() {
        let v = check_single(&ex33(), 2, 3, TheoremId::T3_5, None).unwrap();
        assert_eq!(v.lhs, int(704));
        // 27/5 * (4 * 2^5 + 4^5)
        assert_eq!(v.rhs, "31104/5".parse().unwrap());
        let v = check_single(&ex33(), 1, 2, TheoremId::T3_5, None).unwrap();
        assert_eq!(v.lhs, int(80));
        assert_eq!(v.rhs, int(192));
        assert!(v.holds);
    }

    #[test]
    fn terms_of_worked_example() {
        let terms = lhs_terms(&ex33(), 2, 3, TheoremId::T3_5, None).unwrap();
        assert_eq!(terms.len(), 4);
        assert_eq!(terms[2].index, 3);
        assert_eq!(terms[2].value, Interval::ints(9, 288).unwrap());
        assert_eq!(terms[2].norm, int(288));
        assert_eq!(terms[3].value, Interval::ints(-256, -8).unwrap());
        assert_eq!(terms[3].norm, int(256));
        let t41 = lhs_terms(&ex33(), 2, 3, TheoremId::T4_5, None).unwrap();
        assert!(t41.iter().all(|t| t.index >= 1));
        let t = lhs_terms(&IntervalSequence::from_int_pairs(&[(0, 0), (1, 2)]), 1, 1, TheoremId::T4_1, None).unwrap();
        assert_eq!(t[0].norm, Rational::zero());
    }

    #[test]
    fn equality_case_of_linear_sequence() {
        let seq = IntervalSequence::from_int_pairs(&[(0, 0), (1, 2), (2, 4), (3, 6)]);
        let v = check_single(&seq, 1, 1, TheoremId::T3_1, None).unwrap();
        assert_eq!((v.lhs.clone(), v.rhs.clone(), v.constant.clone()), (int(24), int(24), int(2)));
        assert!(v.holds && v.within_hypotheses);
        assert_eq!(v.ratio, Some(Rational::one()));
    }

    #[test]
    fn classical_examples() {
        let v = check_classical(&[0, 1, 2, 1, 0].map(int)).unwrap();
        assert_eq!((v.lhs.clone(), v.rhs.clone()), (int(4), int(4)));
        let v = check_classical(&[int(0), int(0)]).unwrap();
        assert_eq!((v.lhs.clone(), v.rhs.clone(), v.ratio.clone()), (int(0), int(0), Some(int(0))));
        let v = check_classical(&[0, 1, 0].map(int)).unwrap();
        assert_eq!((v.lhs.clone(), v.rhs.clone()), (int(1), int(1)));
        assert_eq!(
            check_classical(&[0, 1, 2].map(int)),
            Err(Error::BoundaryNotZero { index: 2 })
        );
    }

    #[test]
    fn pair_examples() {
        let u = IntervalSequence::from_int_pairs(&[(0, 0), (1, 2), (2, 4)]);
        let v = check_pair(&u, &u, TheoremId::T3_6, None).unwrap();
        assert_eq!((v.lhs.clone(), v.rhs.clone()), (int(16), int(16)));
        assert!(v.holds && v.within_hypotheses);

        let z = IntervalSequence::from_int_pairs(&[(0, 0), (0, 0)]);
        let v = check_pair(&z, &z, TheoremId::T3_6, None).unwrap();
        assert_eq!((v.lhs.clone(), v.rhs.clone()), (int(0), int(0)));

        let dec = IntervalSequence::from_int_pairs(&[(0, 0), (-2, -1), (-4, -2)]);
        let v = check_pair(&u, &dec, TheoremId::T3_6, None).unwrap();
        assert!(!v.within_hypotheses);
        let sync = v.preconditions.iter().find(|p| p.name == "synchronous").unwrap();
        assert!(!sync.passed);
    }

    #[test]
    fn argument_errors() {
        let s = ex33();
        assert!(matches!(
            check_single(&s, 1, 1, TheoremId::T3_6, None),
            Err(Error::ArityMismatch { .. })
        ));
        assert_eq!(
            check_single(&s, 1, 1, TheoremId::T3_2, None),
            Err(Error::WindowRequired(TheoremId::T3_2))
        );
        assert!(matches!(
            check_single(&s, 1, 1, TheoremId::T3_2, Some(Window::new(0, 5))),
            Err(Error::WindowOutOfRange { .. })
        ));
        assert!(matches!(
            check_single(&s, 1, 1, TheoremId::T3_2, Some(Window::new(2, 9))),
            Err(Error::WindowOutOfRange { .. })
        ));
        assert!(matches!(
            check_single(&s, 0, 1, TheoremId::T3_1, None),
            Err(Error::ExponentOutOfRange { .. })
        ));
        assert!(matches!(
            check_pair(&s, &s, TheoremId::T3_1, None),
            Err(Error::ArityMismatch { .. })
        ));
        let short = IntervalSequence::from_ints(&[0, 1]);
        assert!(matches!(
            check_pair(&s, &short, TheoremId::T3_6, None),
            Err(Error::LengthMismatch { .. })
        ));
        assert_eq!(
            check_pair(&s, &s, TheoremId::T3_7, None),
            Err(Error::WindowRequired(TheoremId::T3_7))
        );
    }

    #[test]
    fn failed_preconditions_name_the_index() {
        let s = IntervalSequence::from_ints(&[0, 1, 3, 2]);
        let v = check_single(&s, 1, 1, TheoremId::T3_1, None).unwrap();
        assert!(!v.within_hypotheses);
        let m = v.failed_preconditions().next().unwrap();
        assert_eq!(m.name, "monotone");
        assert!(m.detail.contains("index 3"), "{}", m.detail);
    }

    #[test]
    fn literal_t4_5_window_admits_a_counterexample() {
        let s = IntervalSequence::from_ints(&[0, 2, 1, 0]);
        let lit = CheckOptions {
            convention: SumConvention::Literal,
            ..CheckOptions::default()
        };
        let v = check_single_with(&s, 1, 1, TheoremId::T4_5, None, &lit).unwrap();
        assert!(v.within_hypotheses);
        assert_eq!((v.lhs.clone(), v.rhs.clone()), (int(3), int(2)));
        assert!(!v.holds);
        let v = check_single(&s, 1, 1, TheoremId::T4_5, None).unwrap();
        assert!(v.holds);

        let s = IntervalSequence::from_ints(&[0, 1, 2, 0]);
        let v = check_single_with(&s, 1, 1, TheoremId::T3_5, None, &lit).unwrap();
        assert!(v.within_hypotheses && !v.holds);
        assert!(check_single(&s, 1, 1, TheoremId::T3_5, None).unwrap().holds);
    }

    #[test]
    fn t3_10_boundary_switch() {
        let u = IntervalSequence::from_ints(&[3, 0, 1, 0]);
        let v = IntervalSequence::from_ints(&[-2, 0, 2, 0]);
        let printed = check_pair(&u, &v, TheoremId::T3_10, None).unwrap();
        assert!(printed.within_hypotheses, "{:?}", printed.preconditions);
        assert!(printed.holds);
        let shifted = CheckOptions {
            t3_10_boundary: PairBoundary::AtZero,
            ..CheckOptions::default()
        };
        let v2 = check_pair_with(&u, &v, TheoremId::T3_10, None, &shifted).unwrap();
        assert!(!v2.within_hypotheses);
    }

    #[test]
    fn classical_via_registry_ignores_requested_exponents() {
        let s = IntervalSequence::from_ints(&[0, 1, 2, 1, 0]);
        let v = check_single(&s, 3, 4, TheoremId::T2_2, None).unwrap();
        assert_eq!(v.exponents, Some([1, 1]));
        assert_eq!(v.lhs, int(4));
    }
}
