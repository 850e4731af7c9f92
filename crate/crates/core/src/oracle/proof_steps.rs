//! Exact checks of the individual steps the proofs rely on.

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::rational::Rational;
use crate::sequence::{synchronous, IntervalSequence, Synchronicity};

/// Young: `a^λ₁ b^λ₂ ≤ (λ₁ a^(λ₁+λ₂) + λ₂ b^(λ₁+λ₂)) / (λ₁+λ₂)` for `a, b ≥ 0`.
pub fn young_check(a: &Rational, b: &Rational, lambda1: u32, lambda2: u32) -> bool {
    let p = lambda1 + lambda2;
    let lhs = a.pow(lambda1) * b.pow(lambda2);
    let rhs = Rational::from(i64::from(lambda1)) * a.pow(p) + Rational::from(i64::from(lambda2)) * b.pow(p);
    lhs * Rational::from(i64::from(p)) <= rhs
}

/// Power-mean form of Hölder: `(mean x)^p ≤ mean(x^p)`. Vacuously true when empty.
pub fn holder_mean_check(values: &[Rational], p: u32) -> bool {
    if values.is_empty() {
        return true;
    }
    let n = Rational::from(values.len() as i64);
    let sum: Rational = values.iter().sum();
    let pow_sum: Rational = values.iter().map(|x| x.pow(p)).sum();
    // (S/n)^p <= P/n  <=>  S^p <= P n^(p-1)
    sum.pow(p) <= pow_sum * n.pow(p.saturating_sub(1))
}

/// Compares `u_{i−1} ∇v_i + v_i ∇u_i` with `∇(u_i v_i)` at every index after the first.
///
/// The identity is only claimed for synchronous, μ-increasing pairs that
/// start at `[0, 0]`; other inputs are rejected.
pub fn product_rule_check(u: &IntervalSequence, v: &IntervalSequence) -> Result<Vec<bool>> {
    if synchronous(u, v)? != Synchronicity::Synchronous {
        return Err(Error::PreconditionViolated("u and v are not synchronous".into()));
    }
    if !u.classify(false).is_mu_increasing() || !v.classify(false).is_mu_increasing() {
        return Err(Error::PreconditionViolated("u and v must both be μ-increasing".into()));
    }
    if !u.items().first().is_some_and(Interval::is_zero) || !v.items().first().is_some_and(Interval::is_zero) {
        return Err(Error::PreconditionViolated("u and v must start at [0, 0]".into()));
    }
    let (du, dv) = (u.nabla()?, v.nabla()?);
    (u.first_index() + 1..=u.last_index())
        .map(|i| {
            let lhs = u.at(i - 1)?.mul(dv.at(i)?).add(&v.at(i)?.mul(du.at(i)?));
            let rhs = u.at(i)?.mul(v.at(i)?).gh_sub(&u.at(i - 1)?.mul(v.at(i - 1)?));
            Ok(lhs == rhs)
        })
        .collect()
}
