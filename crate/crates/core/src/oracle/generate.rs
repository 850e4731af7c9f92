//! Random sequences that satisfy a requested set of hypotheses by construction.
//!
//! Every term is built as a midpoint `c` and half-width `w`, so `[c − w, c + w]`.
//! A step moves both endpoints the same way exactly when `|Δw| ≤ |Δc|`, and a
//! term is `[0, 0]` exactly when `c = w = 0`. Midpoints are drawn first; widths
//! are then chosen greedily inside a range that keeps every later boundary
//! zero reachable.

use std::collections::BTreeSet;

use num_traits::ToPrimitive;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::inequality::Precondition;
use crate::interval::Interval;
use crate::rational::Rational;
use crate::sequence::IntervalSequence;

const MAX_DENOM: i64 = 16;

/// A uniformly drawn rational in `[lo, hi]` with denominator at most 16.
/// Falls back to `lo` when no such fraction fits.
pub(crate) fn rational_in(rng: &mut impl Rng, lo: &Rational, hi: &Rational) -> Rational {
    if lo >= hi {
        return lo.clone();
    }
    for _ in 0..4 {
        let q = rng.gen_range(1..=MAX_DENOM);
        let qr = Rational::from_integer(q);
        let pmin = -(-(lo * &qr)).floor();
        let pmax = (hi * &qr).floor();
        if pmin <= pmax {
            let (a, b) = (pmin.to_i64().unwrap_or(i64::MIN / 2), pmax.to_i64().unwrap_or(i64::MAX / 2));
            let p = rng.gen_range(a..=b);
            return Rational::new(p, q).expect("positive denominator");
        }
    }
    lo.clone()
}

/// Shape the midpoints follow.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Shape {
    /// No step constraint at all.
    Free,
    /// One direction for the whole chain; `None` picks it at random.
    Monotone(Option<bool>),
    /// Every step monotone, directions free to change.
    Piecewise,
}

/// Full description of one random sequence.
#[derive(Debug, Clone)]
pub(crate) struct Blueprint {
    pub len: usize,
    /// Inclusive positions the constraints apply to; the rest is arbitrary.
    pub chain: (usize, usize),
    pub anchors: BTreeSet<usize>,
    pub real: bool,
    pub nonneg: bool,
    pub shape: Shape,
    pub mu_inc: bool,
    pub mu_dec: bool,
    pub no_other_zeros: bool,
    pub bound: Rational,
}

impl Blueprint {
    pub fn new(len: usize, bound: u32) -> Self {
        Blueprint {
            len,
            chain: (0, len.saturating_sub(1)),
            anchors: BTreeSet::new(),
            real: false,
            nonneg: false,
            shape: Shape::Free,
            mu_inc: false,
            mu_dec: false,
            no_other_zeros: false,
            bound: Rational::from_integer(i64::from(bound)),
        }
    }

    /// Applies the non-boundary predicates of `profile`.
    pub fn with_profile(mut self, profile: &BTreeSet<Precondition>) -> Self {
        use Precondition as P;
        self.real = profile.contains(&P::RealValued);
        self.nonneg = profile.contains(&P::NonNegative);
        self.mu_inc = profile.contains(&P::MuIncreasing);
        self.mu_dec = profile.contains(&P::MuDecreasing);
        self.no_other_zeros = profile.contains(&P::NoOtherZeros);
        self.shape = if profile.contains(&P::NonDecreasing) {
            Shape::Monotone(Some(true))
        } else if profile.contains(&P::Monotone) || profile.contains(&P::Synchronous) {
            Shape::Monotone(None)
        } else if profile.contains(&P::PiecewiseAlternate) {
            Shape::Piecewise
        } else {
            Shape::Free
        };
        self
    }

    /// Resolves the direction of a monotone shape so a partner can share it.
    pub fn fix_direction(&mut self, rng: &mut impl Rng) -> Option<bool> {
        if let Shape::Monotone(None) = self.shape {
            let up = if self.nonneg { self.nonneg_direction() } else { rng.gen_bool(0.5) };
            self.shape = Shape::Monotone(Some(up));
        }
        match self.shape {
            Shape::Monotone(dir) => dir,
            _ => None,
        }
    }

    fn nonneg_direction(&self) -> bool {
        // non-negative and anchored: rise away from a left zero, fall into a right one
        !matches!(self.anchors.first(), Some(&p) if p > self.chain.0)
    }

    fn check(&self) -> Result<()> {
        let infeasible = |s: &str| Err(Error::InfeasibleProfile(s.into()));
        if self.len == 0 {
            return infeasible("length must be positive");
        }
        if self.chain.0 > self.chain.1 || self.chain.1 >= self.len {
            return infeasible("constrained range lies outside the sequence");
        }
        if self.anchors.iter().any(|&a| a < self.chain.0 || a > self.chain.1) {
            return infeasible("boundary zero outside the constrained range");
        }
        if let (Shape::Monotone(_), Some(&p), Some(&q)) = (self.shape, self.anchors.first(), self.anchors.last()) {
            if self.no_other_zeros && (p + 1..q).any(|i| !self.anchors.contains(&i)) {
                return infeasible("a monotone sequence with two zeros vanishes in between");
            }
            if self.nonneg && p > self.chain.0 && q < self.chain.1 {
                return infeasible("a non-negative monotone sequence cannot leave zero on both sides");
            }
        }
        Ok(())
    }

    pub fn generate(&self, rng: &mut impl Rng) -> Result<IntervalSequence> {
        self.check()?;
        let (a, b) = self.chain;
        let c = self.midpoints(rng);
        let w = self.widths(rng, &c)?;
        let mut items = Vec::with_capacity(self.len);
        for i in 0..self.len {
            if i < a || i > b {
                items.push(self.arbitrary(rng));
            } else {
                let (ci, wi) = (&c[i - a], &w[i - a]);
                items.push(Interval::new(ci - wi, ci + wi)?);
            }
        }
        Ok(IntervalSequence::new(items))
    }

    fn arbitrary(&self, rng: &mut impl Rng) -> Interval {
        let half = &self.bound * Rational::new(1, 2).expect("nonzero");
        let c = rational_in(rng, &-half.clone(), &half);
        if self.real {
            return Interval::degenerate(c);
        }
        let cap = &self.bound - c.abs();
        let w = rational_in(rng, &Rational::zero(), &cap);
        Interval::new(&c - &w, &c + &w).expect("w is non-negative")
    }

    fn midpoints(&self, rng: &mut impl Rng) -> Vec<Rational> {
        let (a, b) = self.chain;
        let n = b - a + 1;
        let zero = Rational::zero();
        let quarter = &self.bound * Rational::new(1, 4).expect("nonzero");
        match self.shape {
            Shape::Monotone(dir) => {
                let up = dir.unwrap_or(true);
                let sign = |x: Rational| if up { x } else { -x };
                let steps = (n - 1).max(1) as i64;
                let max_step = quarter.checked_div(&Rational::from_integer(steps)).expect("nonzero");
                let step = |rng: &mut _| loop {
                    let s = rational_in(rng, &zero, &max_step);
                    if !(self.no_other_zeros && s.is_zero()) || max_step.is_zero() {
                        break s;
                    }
                };
                let mut c = vec![Rational::zero(); n];
                match (self.anchors.first(), self.anchors.last()) {
                    (Some(&p), Some(&q)) => {
                        for i in (a..p).rev() {
                            let s = step(rng);
                            c[i - a] = &c[i + 1 - a] - sign(s);
                        }
                        for i in q + 1..=b {
                            let s = step(rng);
                            c[i - a] = &c[i - 1 - a] + sign(s);
                        }
                    }
                    _ => {
                        let lo = if self.nonneg { zero.clone() } else { -quarter.clone() };
                        c[0] = rational_in(rng, &lo, &quarter);
                        if self.nonneg && !up {
                            c[0] = &c[0] + &quarter;
                        }
                        for i in 1..n {
                            let s = step(rng);
                            c[i] = &c[i - 1] + sign(s);
                        }
                    }
                }
                c
            }
            Shape::Free if rng.gen_bool(0.5) => {
                // a drifting walk; independent draws rarely stress a bound
                let steps = (n - 1).max(1) as i64;
                let max_step = (&self.bound * Rational::new(1, 2 * steps).expect("nonzero")).clone();
                let mut c = vec![Rational::zero(); n];
                let start = if self.nonneg { zero.clone() } else { -quarter.clone() };
                c[0] = if self.anchors.contains(&a) { zero.clone() } else { rational_in(rng, &start, &quarter) };
                for k in 1..n {
                    let s = rational_in(rng, &zero, &max_step);
                    let s = if rng.gen_ratio(1, 8) { -s } else { s };
                    let mut x = &c[k - 1] + s;
                    if self.nonneg && x.is_negative() {
                        x = Rational::zero();
                    }
                    c[k] = if self.anchors.contains(&(k + a)) { zero.clone() } else { x.min(half_bound(&self.bound)) };
                }
                c
            }
            Shape::Free | Shape::Piecewise => {
                let half = &self.bound * Rational::new(1, 2).expect("nonzero");
                let lo = if self.nonneg { zero.clone() } else { -half.clone() };
                (a..=b)
                    .map(|i| {
                        if self.anchors.contains(&i) {
                            return Rational::zero();
                        }
                        if !self.no_other_zeros && rng.gen_ratio(1, 8) {
                            return Rational::zero();
                        }
                        loop {
                            let x = rational_in(rng, &lo, &half);
                            if !x.is_zero() || half.is_zero() {
                                break x;
                            }
                        }
                    })
                    .collect()
            }
        }
    }

    fn widths(&self, rng: &mut impl Rng, c: &[Rational]) -> Result<Vec<Rational>> {
        let (a, b) = self.chain;
        let n = b - a + 1;
        let zero = Rational::zero();
        if self.real {
            return Ok(vec![zero; n]);
        }
        let step_monotone = self.shape != Shape::Free;
        // reach[k]: total midpoint travel from position k to the next anchor
        let mut reach: Vec<Option<Rational>> = vec![None; n];
        for k in (0..n).rev() {
            reach[k] = if self.anchors.contains(&(k + a)) {
                Some(Rational::zero())
            } else if k + 1 < n {
                reach[k + 1].as_ref().map(|r| r + (&c[k + 1] - &c[k]).abs())
            } else {
                None
            };
        }
        let last_anchor = self.anchors.last().copied();
        let mut w: Vec<Rational> = Vec::with_capacity(n);
        for k in 0..n {
            let i = k + a;
            let mut cap = &self.bound - c[k].abs();
            if self.nonneg {
                cap = cap.min(c[k].clone());
            }
            if step_monotone {
                if let Some(r) = &reach[k] {
                    cap = cap.min(r.clone());
                }
            } else if self.anchors.contains(&i) {
                cap = zero.clone();
            }
            if self.mu_inc && last_anchor.is_some_and(|q| i < q) {
                cap = zero.clone();
            }
            let (mut lower, mut upper) = (zero.clone(), cap);
            if let Some(prev) = w.last() {
                let d = (&c[k] - &c[k - 1]).abs();
                if step_monotone {
                    lower = lower.max(prev - &d);
                    upper = upper.min(prev + &d);
                }
                if self.mu_inc {
                    lower = lower.max(prev.clone());
                }
                if self.mu_dec {
                    upper = upper.min(prev.clone());
                }
            }
            if lower > upper {
                return Err(Error::InfeasibleProfile(format!(
                    "no admissible width at position {i}"
                )));
            }
            let pick = match rng.gen_range(0..8) {
                0 => lower,
                1 => upper,
                _ => rational_in(rng, &lower, &upper),
            };
            w.push(pick);
        }
        Ok(w)
    }
}

fn half_bound(bound: &Rational) -> Rational {
    bound * Rational::new(1, 2).expect("nonzero")
}

/// Anchor positions for the boundary predicates, with `ZeroAtEnd` at `end`.
pub(crate) fn anchors_for(profile: &BTreeSet<Precondition>, end: usize) -> BTreeSet<usize> {
    let mut anchors = BTreeSet::new();
    if profile.contains(&Precondition::ZeroAtStart) {
        anchors.insert(0);
    }
    if profile.contains(&Precondition::ZeroAtOne) {
        anchors.insert(1);
    }
    if profile.contains(&Precondition::ZeroAtEnd) {
        anchors.insert(end);
    }
    anchors
}

fn blueprint(profile: &[Precondition], length: usize, bound: u32) -> Result<(Blueprint, BTreeSet<Precondition>)> {
    if length == 0 {
        return Err(Error::InfeasibleProfile("length must be positive".into()));
    }
    let set: BTreeSet<Precondition> = profile.iter().copied().collect();
    if set.contains(&Precondition::ZeroAtOne) && length < 2 {
        return Err(Error::InfeasibleProfile("zero_at_one needs at least two terms".into()));
    }
    let mut bp = Blueprint::new(length, bound).with_profile(&set);
    bp.anchors = anchors_for(&set, length - 1);
    if set.contains(&Precondition::ZeroAtOne) && !set.contains(&Precondition::ZeroAtStart) {
        // u_0 is left unconstrained
        bp.chain.0 = 1;
    }
    Ok((bp, set))
}

/// A random sequence on indices `0..length` satisfying every predicate in `profile`.
///
/// `ZeroAtEnd` pins the last index. `Synchronous` needs two sequences; use
/// [`generate_pair`].
pub fn generate(profile: &[Precondition], length: usize, seed: u64, bound: u32) -> Result<IntervalSequence> {
    let (mut bp, set) = blueprint(profile, length, bound)?;
    if set.contains(&Precondition::Synchronous) {
        return Err(Error::InfeasibleProfile("synchronous describes a pair of sequences".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    bp.fix_direction(&mut rng);
    bp.generate(&mut rng)
}

/// A random pair `(u, v)` for the two-sequence hypotheses.
///
/// Boundary, μ and no-common-zero predicates hold for both; `Synchronous`
/// gives both the same direction. Under `PiecewiseAlternate` only `u` is
/// shaped and `v` is arbitrary apart from its boundary zeros.
pub fn generate_pair(
    profile: &[Precondition],
    length: usize,
    seed: u64,
    bound: u32,
) -> Result<(IntervalSequence, IntervalSequence)> {
    let (bp, _) = blueprint(profile, length, bound)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    pair_from(bp, false, &mut rng)
}

pub(crate) fn pair_from(
    mut bp: Blueprint,
    opposite: bool,
    rng: &mut impl Rng,
) -> Result<(IntervalSequence, IntervalSequence)> {
    let dir = bp.fix_direction(rng);
    let mut partner = bp.clone();
    match bp.shape {
        Shape::Monotone(_) => partner.shape = Shape::Monotone(dir.map(|d| d != opposite)),
        Shape::Piecewise => {
            partner.shape = Shape::Free;
            partner.no_other_zeros = false;
        }
        Shape::Free => {}
    }
    let u = bp.generate(rng)?;
    let v = partner.generate(rng)?;
    Ok((u, v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::{synchronous, Synchronicity};
    use Precondition as P;

    #[test]
    fn prefix_monotone_profile() {
        for seed in 0..200 {
            let s = generate(&[P::ZeroAtStart, P::Monotone, P::MuIncreasing], 6, seed, 100).unwrap();
            let prof = s.classify(false);
            assert!(s.items()[0].is_zero());
            assert!(prof.is_monotone() && prof.is_mu_increasing(), "{s:?}");
            assert!(s.items().iter().all(|u| u.lo().abs() <= Rational::from(100) && u.hi().abs() <= Rational::from(100)));
        }
    }

    #[test]
    fn two_sided_piecewise_profile() {
        for seed in 0..200 {
            let s = generate(&[P::ZeroAtStart, P::ZeroAtEnd, P::PiecewiseAlternate, P::NoOtherZeros], 6, seed, 100)
                .unwrap();
            assert_eq!(s.zero_indices(), vec![0, 5]);
            s.alternate_segments().unwrap();
        }
    }

    #[test]
    fn suffix_profile_and_reals() {
        for seed in 0..200 {
            let s = generate(&[P::ZeroAtEnd, P::Monotone, P::MuDecreasing], 5, seed, 10).unwrap();
            assert!(s.items()[4].is_zero());
            let p = s.classify(false);
            assert!(p.is_monotone() && p.is_mu_decreasing());
            let r = generate(&[P::RealValued, P::ZeroAtStart, P::NonNegative, P::NonDecreasing], 5, seed, 10).unwrap();
            assert!(r.is_degenerate());
            assert!(r.classify(false).is_increasing());
        }
    }

    #[test]
    fn synchronous_pairs() {
        for seed in 0..100 {
            let (u, v) = generate_pair(&[P::ZeroAtStart, P::Synchronous, P::MuIncreasing], 5, seed, 50).unwrap();
            assert_eq!(synchronous(&u, &v).unwrap(), Synchronicity::Synchronous);
            assert!(u.classify(false).is_mu_increasing() && v.classify(false).is_mu_increasing());
        }
    }

    #[test]
    fn same_seed_same_sequence() {
        let p = [P::ZeroAtStart, P::PiecewiseAlternate];
        assert_eq!(generate(&p, 8, 7, 100).unwrap(), generate(&p, 8, 7, 100).unwrap());
    }

    #[test]
    fn infeasible_profiles() {
        let p = [P::ZeroAtStart, P::ZeroAtEnd, P::Monotone, P::NoOtherZeros];
        assert!(matches!(generate(&p, 4, 0, 10), Err(Error::InfeasibleProfile(_))));
        assert!(matches!(generate(&[P::Synchronous], 4, 0, 10), Err(Error::InfeasibleProfile(_))));
        assert!(matches!(generate(&[], 0, 0, 10), Err(Error::InfeasibleProfile(_))));
        // two terms leave no interior to vanish
        assert!(generate(&p, 2, 0, 10).is_ok());
    }

    #[test]
    fn denominators_stay_small() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..1000 {
            let x = rational_in(&mut rng, &Rational::from(-3), &Rational::from(5));
            assert!(x >= Rational::from(-3) && x <= Rational::from(5));
            assert!(x.denom() <= &num_bigint::BigInt::from(16));
        }
    }
}
