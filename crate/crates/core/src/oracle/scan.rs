//! Exhaustive search for the largest lhs/rhs ratio over a small integer grid.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::inequality::{lookup, CheckOptions, Precondition, TheoremId, Window, WindowKind};
use crate::interval::Interval;
use crate::oracle::fuzz::FuzzInput;
use crate::rational::Rational;
use crate::sequence::IntervalSequence;

/// Default cap on the number of enumerated candidates.
pub const DEFAULT_SCAN_BUDGET: u128 = 5_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub theorem: TheoremId,
    pub exponents: Option<[u32; 2]>,
    pub length: usize,
    pub bound: u32,
    pub window: Option<Window>,
    pub candidates: u128,
    pub conforming: u64,
    pub max_ratio: Option<Rational>,
    pub witness: Option<FuzzInput>,
}

/// Number of inputs [`ratio_scan`] would enumerate.
pub fn scan_size(id: TheoremId, length: usize, bound: u32) -> Result<u128> {
    Ok(Grid::new(id, length, bound)?.count())
}

struct Grid {
    values: Vec<Interval>,
    /// Positions per sequence that are enumerated; the rest are `[0, 0]`.
    free: Vec<usize>,
    sequences: usize,
    length: usize,
    window: Option<Window>,
}

impl Grid {
    fn new(id: TheoremId, length: usize, bound: u32) -> Result<Self> {
        if length < 2 {
            return Err(Error::TooShort { len: length, min: 2 });
        }
        let spec = lookup(id);
        let b = i64::from(bound);
        let values: Vec<Interval> = if spec.requires(Precondition::RealValued) {
            (0..=b).map(|x| Interval::degenerate(Rational::from(x))).collect()
        } else {
            (0..=b)
                .flat_map(|lo| (lo..=b).map(move |hi| Interval::ints(lo, hi).expect("lo <= hi")))
                .collect()
        };
        let last = length - 1;
        let mut pinned = Vec::new();
        for p in spec.preconditions {
            match p {
                Precondition::ZeroAtStart => pinned.push(0),
                Precondition::ZeroAtOne => pinned.push(1),
                Precondition::ZeroAtEnd => pinned.push(last),
                _ => {}
            }
        }
        let window = match spec.window {
            WindowKind::Required => {
                use TheoremId::*;
                let lowest = if matches!(id, L3_02 | T3_2 | T3_4) { 1 } else { 0 };
                Some(Window::new(lowest, last as i64))
            }
            _ => None,
        };
        Ok(Grid {
            values,
            free: (0..length).filter(|i| !pinned.contains(i)).collect(),
            sequences: spec.arity,
            length,
            window,
        })
    }

    fn count(&self) -> u128 {
        let digits = (self.free.len() * self.sequences) as u32;
        (self.values.len() as u128).saturating_pow(digits)
    }

    fn decode(&self, mut index: u128) -> Vec<IntervalSequence> {
        let k = self.values.len() as u128;
        (0..self.sequences)
            .map(|_| {
                let mut items = vec![Interval::zero(); self.length];
                for &pos in &self.free {
                    items[pos] = self.values[(index % k) as usize].clone();
                    index /= k;
                }
                IntervalSequence::new(items)
            })
            .collect()
    }
}

/// Enumerates every input with integer endpoints in `[0, bound]` and the
/// boundary zeros fixed, and returns the exact largest ratio among inputs
/// that meet all hypotheses.
///
/// Windowed inequalities use `n` as small as allowed and `m` at the last
/// index. Ties go to the first candidate in enumeration order.
pub fn ratio_scan(
    id: TheoremId,
    lambda1: u32,
    lambda2: u32,
    length: usize,
    bound: u32,
    budget: u128,
) -> Result<ScanReport> {
    let grid = Grid::new(id, length, bound)?;
    let count = grid.count();
    if count > budget {
        return Err(Error::BudgetExceeded { count, cap: budget });
    }
    let spec = lookup(id);
    let exponents = match spec.fixed_exponents {
        _ if spec.arity == 2 => None,
        Some((a, b)) => Some([a, b]),
        None => Some([lambda1, lambda2]),
    };
    let opts = CheckOptions::default();
    let input_at = |index: u128| {
        let mut seqs = grid.decode(index);
        let v = (seqs.len() == 2).then(|| seqs.pop().expect("two sequences"));
        FuzzInput {
            u: seqs.pop().expect("one sequence"),
            v,
            exponents,
            window: grid.window,
        }
    };
    let best = (0..count as u64)
        .into_par_iter()
        .map(|index| -> Result<Option<(Rational, u64)>> {
            let verdict = input_at(u128::from(index)).check(id, &opts)?;
            Ok(if verdict.within_hypotheses {
                Some((verdict.ratio.unwrap_or_else(|| Rational::from(i64::MAX)), index))
            } else {
                None
            })
        })
        .try_fold(
            || (0u64, None::<(Rational, u64)>),
            |(n, acc), item| {
                let item = item?;
                Ok((n + item.is_some() as u64, better(acc, item)))
            },
        )
        .try_reduce(|| (0, None), |(n1, a), (n2, b)| Ok((n1 + n2, better(a, b))))?;
    let (conforming, top) = best;
    Ok(ScanReport {
        theorem: id,
        exponents,
        length,
        bound,
        window: grid.window,
        candidates: count,
        conforming,
        max_ratio: top.as_ref().map(|(r, _)| r.clone()),
        witness: top.map(|(_, i)| input_at(u128::from(i))),
    })
}

fn better(a: Option<(Rational, u64)>, b: Option<(Rational, u64)>) -> Option<(Rational, u64)> {
    match (a, b) {
        (Some(x), Some(y)) => Some(if y.0 > x.0 || (y.0 == x.0 && y.1 < x.1) { y } else { x }),
        (x, None) => x,
        (None, y) => y,
    }
}
