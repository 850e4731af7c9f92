//! Seeded random certification of every inequality.

use std::collections::BTreeSet;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::inequality::{
    check_pair_with, check_single_with, lookup, CheckOptions, PairBoundary, Precondition, TheoremId, Verdict,
    Window, WindowKind,
};
use crate::oracle::generate::{anchors_for, pair_from, Blueprint, Shape};
use crate::rational::Rational;
use crate::sequence::IntervalSequence;

/// Concrete arguments of one check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuzzInput {
    pub u: IntervalSequence,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v: Option<IntervalSequence>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exponents: Option<[u32; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub window: Option<Window>,
}

impl FuzzInput {
    pub fn check(&self, id: TheoremId, opts: &CheckOptions) -> Result<Verdict> {
        match &self.v {
            Some(v) => check_pair_with(&self.u, v, id, self.window, opts),
            None => {
                let [l1, l2] = self.exponents.unwrap_or([1, 1]);
                check_single_with(&self.u, l1, l2, id, self.window, opts)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuzzConfig {
    pub theorem: TheoremId,
    pub trials: u64,
    pub seed: u64,
    /// Inclusive range of sequence lengths.
    pub length_range: (usize, usize),
    /// Upper bound on `|endpoint|`.
    pub endpoint_magnitude: u32,
    /// Inclusive range for each of `λ₁`, `λ₂`.
    pub lambda_range: (u32, u32),
    /// Hypotheses the generator deliberately stops enforcing.
    #[serde(default)]
    pub relax: BTreeSet<Precondition>,
    #[serde(default)]
    pub options: CheckOptions,
}

impl FuzzConfig {
    /// 10,000 trials, lengths 2–12, magnitudes up to 100, exponents 1–4.
    pub fn new(theorem: TheoremId, seed: u64) -> Self {
        FuzzConfig {
            theorem,
            trials: 10_000,
            seed,
            length_range: (2, 12),
            endpoint_magnitude: 100,
            lambda_range: (1, 4),
            relax: BTreeSet::new(),
            options: CheckOptions::default(),
        }
    }

    fn validate(&self) -> Result<()> {
        let bad = |s: &str| Err(Error::InvalidConfig(s.into()));
        if self.trials == 0 {
            return bad("trials must be positive");
        }
        let (lo, hi) = self.length_range;
        if lo < 2 || lo > hi {
            return bad("length range must satisfy 2 <= min <= max");
        }
        if self.endpoint_magnitude == 0 {
            return bad("endpoint magnitude must be positive");
        }
        let (a, b) = self.lambda_range;
        if a < 1 || a > b {
            return bad("exponent range must satisfy 1 <= min <= max");
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub trial: u64,
    pub input: FuzzInput,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuzzReport {
    pub config: FuzzConfig,
    pub trials_run: u64,
    /// Trials whose input met every hypothesis not listed in `relax`.
    pub conforming: u64,
    /// Trials whose input missed a hypothesis the generator should have enforced.
    pub nonconforming: u64,
    pub violation_count: u64,
    /// The first few violations in trial order.
    pub violations: Vec<Violation>,
    pub max_ratio: Option<Rational>,
    pub max_ratio_trial: Option<u64>,
    pub max_ratio_witness: Option<FuzzInput>,
}

const KEPT_VIOLATIONS: usize = 20;

struct Outcome {
    trial: u64,
    conforming: bool,
    violation: Option<(FuzzInput, Verdict)>,
    ratio: Option<Rational>,
}

fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// The window a trial uses, with `m` as the pinned right boundary.
fn pick_window(id: TheoremId, len: usize, rng: &mut impl Rng) -> Option<Window> {
    use TheoremId::*;
    let last = len as i64 - 1;
    match lookup(id).window {
        WindowKind::None => None,
        WindowKind::Optional => rng.gen_bool(0.5).then(|| {
            let m = rng.gen_range(1..=last);
            Window::new(rng.gen_range(1..=m), m)
        }),
        WindowKind::Required => {
            let lowest = if matches!(id, L3_02 | T3_2 | T3_4) { 1 } else { 0 };
            let m = rng.gen_range(lowest..=last);
            Some(Window::new(rng.gen_range(lowest..=m), m))
        }
    }
}

/// The hypotheses as the checker will evaluate them.
fn hypotheses(id: TheoremId, opts: &CheckOptions) -> BTreeSet<Precondition> {
    lookup(id)
        .preconditions
        .iter()
        .map(|&p| match (p, opts.t3_10_boundary) {
            (Precondition::ZeroAtOne, PairBoundary::AtZero) => Precondition::ZeroAtStart,
            _ => p,
        })
        .collect()
}

pub fn draw_input(config: &FuzzConfig, trial: u64) -> Result<FuzzInput> {
    let mut rng = trial_rng(config.seed, trial);
    let id = config.theorem;
    let spec = lookup(id);
    let min_len = if id == TheoremId::T3_10 { 3 } else { 2 };
    let len = rng.gen_range(config.length_range.0.max(min_len)..=config.length_range.1.max(min_len));
    let (la, lb) = config.lambda_range;
    let exponents = match spec.fixed_exponents {
        _ if spec.arity == 2 => None,
        Some((a, b)) => Some([a, b]),
        None => Some([rng.gen_range(la..=lb), rng.gen_range(la..=lb)]),
    };
    let window = pick_window(id, len, &mut rng);
    let end = window.map_or(len - 1, |w| w.m as usize);

    let all = hypotheses(id, &config.options);
    let kept: BTreeSet<Precondition> = all.difference(&config.relax).copied().collect();
    let mut bp = Blueprint::new(len, config.endpoint_magnitude).with_profile(&kept);
    if config.relax.contains(&Precondition::RealValued) {
        bp.real = false;
    }
    bp.anchors = anchors_for(&kept, end);
    let left = if all.contains(&Precondition::ZeroAtOne) { 1 } else { 0 };
    bp.chain = (left, end);
    if config.relax.contains(&Precondition::NoOtherZeros) {
        let free: Vec<usize> = (left..=end).filter(|i| !bp.anchors.contains(i)).collect();
        if !free.is_empty() {
            bp.anchors.insert(free[rng.gen_range(0..free.len())]);
        }
        if let Shape::Monotone(_) = bp.shape {
            bp.no_other_zeros = false;
        }
    }
    let input = if spec.arity == 2 {
        let opposite = config.relax.contains(&Precondition::Synchronous);
        let (u, v) = pair_from(bp, opposite, &mut rng)?;
        FuzzInput {
            u,
            v: Some(v),
            exponents,
            window,
        }
    } else {
        bp.fix_direction(&mut rng);
        FuzzInput {
            u: bp.generate(&mut rng)?,
            v: None,
            exponents,
            window,
        }
    };
    Ok(input)
}

fn run_trial(config: &FuzzConfig, trial: u64) -> Result<Outcome> {
    let input = draw_input(config, trial)?;
    let verdict = input.check(config.theorem, &config.options)?;
    let relaxed: BTreeSet<&str> = config.relax.iter().map(|p| p.name()).collect();
    let conforming = verdict
        .preconditions
        .iter()
        .all(|p| p.passed || relaxed.contains(p.name.as_str()));
    let ratio = if conforming { verdict.ratio.clone() } else { None };
    let violation = (conforming && !verdict.holds).then_some((input, verdict));
    Ok(Outcome {
        trial,
        conforming,
        violation,
        ratio,
    })
}

/// Runs `config.trials` independent trials in parallel.
///
/// Each trial draws from its own stream of a ChaCha generator seeded with
/// `config.seed`, so the report does not depend on scheduling. Ties for the
/// largest ratio go to the lowest trial index.
pub fn fuzz(config: &FuzzConfig) -> Result<FuzzReport> {
    config.validate()?;
    let outcomes: Vec<Outcome> = (0..config.trials)
        .into_par_iter()
        .map(|t| run_trial(config, t))
        .collect::<Result<_>>()?;

    let mut report = FuzzReport {
        config: config.clone(),
        trials_run: config.trials,
        conforming: 0,
        nonconforming: 0,
        violation_count: 0,
        violations: Vec::new(),
        max_ratio: None,
        max_ratio_trial: None,
        max_ratio_witness: None,
    };
    for o in outcomes {
        if o.conforming {
            report.conforming += 1;
        } else {
            report.nonconforming += 1;
        }
        if let Some((input, verdict)) = o.violation {
            report.violation_count += 1;
            if report.violations.len() < KEPT_VIOLATIONS {
                report.violations.push(Violation {
                    trial: o.trial,
                    input,
                    verdict,
                });
            }
        }
        if let Some(r) = o.ratio {
            if report.max_ratio.as_ref().is_none_or(|m| r > *m) {
                report.max_ratio = Some(r);
                report.max_ratio_trial = Some(o.trial);
            }
        }
    }
    if let Some(t) = report.max_ratio_trial {
        report.max_ratio_witness = Some(draw_input(config, t)?);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(id: TheoremId) -> FuzzConfig {
        FuzzConfig {
            trials: 300,
            ..FuzzConfig::new(id, 11)
        }
    }

    #[test]
    fn every_theorem_conforms_and_holds() {
        for id in TheoremId::ALL {
            let r = fuzz(&small(id)).unwrap();
            assert_eq!(r.nonconforming, 0, "{id}: {:?}", r.violations.first());
            assert_eq!(r.violation_count, 0, "{id}: {:?}", r.violations.first());
            assert!(r.max_ratio.unwrap() <= Rational::one(), "{id}");
        }
    }

    #[test]
    fn deterministic_reports() {
        let c = small(TheoremId::T3_5);
        assert_eq!(fuzz(&c).unwrap(), fuzz(&c).unwrap());
    }

    #[test]
    fn relaxed_right_boundary_breaks_the_classical_bound() {
        let mut c = small(TheoremId::T2_2);
        c.relax.insert(Precondition::ZeroAtEnd);
        let r = fuzz(&c).unwrap();
        assert!(r.violation_count > 0);
        let v = &r.violations[0];
        assert_eq!(v.input.check(TheoremId::T2_2, &c.options).unwrap(), v.verdict);
    }

    #[test]
    fn invalid_configs() {
        let mut c = small(TheoremId::T3_1);
        c.length_range = (1, 4);
        assert!(matches!(fuzz(&c), Err(Error::InvalidConfig(_))));
        let mut c = small(TheoremId::T3_1);
        c.lambda_range = (0, 2);
        assert!(matches!(fuzz(&c), Err(Error::InvalidConfig(_))));
    }
}
