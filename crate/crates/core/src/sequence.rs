//! Finite interval sequences with an explicit base index, the forward and
//! backward gH-difference operators, and the monotonicity vocabulary used by
//! theorem hypotheses.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::rational::Rational;

/// `{u_i}` for `i = base, base + 1, …, base + len − 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntervalSequence {
    #[serde(rename = "base_index", default)]
    base: i64,
    items: Vec<Interval>,
}

impl IntervalSequence {
    pub fn new(items: Vec<Interval>) -> Self {
        IntervalSequence { base: 0, items }
    }

    pub fn with_base(items: Vec<Interval>, base: i64) -> Self {
        IntervalSequence { base, items }
    }

    /// A sequence of degenerate intervals.
    pub fn from_reals(values: impl IntoIterator<Item = Rational>) -> Self {
        IntervalSequence::new(values.into_iter().map(Interval::degenerate).collect())
    }

    pub fn from_ints(values: &[i64]) -> Self {
        IntervalSequence::from_reals(values.iter().map(|&v| Rational::from_integer(v)))
    }

    /// Integer-endpoint intervals, `[(lo, hi), …]`. Panics on reversed bounds.
    pub fn from_int_pairs(pairs: &[(i64, i64)]) -> Self {
        IntervalSequence::new(
            pairs
                .iter()
                .map(|&(lo, hi)| Interval::ints(lo, hi).expect("ordered bounds"))
                .collect(),
        )
    }

    pub fn base(&self) -> i64 {
        self.base
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn items(&self) -> &[Interval] {
        &self.items
    }

    pub fn into_items(self) -> Vec<Interval> {
        self.items
    }

    pub fn first_index(&self) -> i64 {
        self.base
    }

    /// Index of the last element; `base − 1` for an empty sequence.
    pub fn last_index(&self) -> i64 {
        self.base + self.items.len() as i64 - 1
    }

    pub fn contains_index(&self, i: i64) -> bool {
        i >= self.first_index() && i <= self.last_index()
    }

    pub fn get(&self, i: i64) -> Option<&Interval> {
        if self.contains_index(i) {
            self.items.get((i - self.base) as usize)
        } else {
            None
        }
    }

    pub fn at(&self, i: i64) -> Result<&Interval> {
        self.get(i).ok_or(Error::IndexOutOfRange {
            index: i,
            first: self.first_index(),
            last: self.last_index(),
        })
    }

    /// `(index, value)` pairs in order.
    pub fn indexed(&self) -> impl Iterator<Item = (i64, &Interval)> + '_ {
        let base = self.base;
        self.items.iter().enumerate().map(move |(k, u)| (base + k as i64, u))
    }

    pub fn is_degenerate(&self) -> bool {
        self.items.iter().all(Interval::is_degenerate)
    }

    /// Same values re-labelled to start at `base`.
    pub fn rebased(&self, base: i64) -> Self {
        IntervalSequence {
            base,
            items: self.items.clone(),
        }
    }

    fn require_differencable(&self) -> Result<()> {
        if self.items.len() < 2 {
            return Err(Error::TooShort {
                len: self.items.len(),
                min: 2,
            });
        }
        Ok(())
    }

    /// Backward gH-difference `∇u_i = u_i ⊖g u_{i−1}`, indexed from `base + 1`.
    pub fn nabla(&self) -> Result<IntervalSequence> {
        self.require_differencable()?;
        let items = self.items.windows(2).map(|w| w[1].gh_sub(&w[0])).collect();
        Ok(IntervalSequence::with_base(items, self.base + 1))
    }

    /// Forward gH-difference `Δu_i = u_{i+1} ⊖g u_i`, indexed from `base`.
    pub fn delta(&self) -> Result<IntervalSequence> {
        self.require_differencable()?;
        let items = self.items.windows(2).map(|w| w[1].gh_sub(&w[0])).collect();
        Ok(IntervalSequence::with_base(items, self.base))
    }

    /// Indices `i` with `u_i = [0, 0]`.
    pub fn zero_indices(&self) -> Vec<i64> {
        self.indexed().filter(|(_, u)| u.is_zero()).map(|(i, _)| i).collect()
    }

    pub fn classify(&self, strict: bool) -> MonotonicityProfile {
        let mut steps = self.items.windows(2).map(|w| Step::between(&w[0], &w[1]));
        let (mut up, mut down, mut mu_up, mut mu_down) = (true, true, true, true);
        for step in steps.by_ref() {
            let (sl, sh, sw) = (step.lo, step.hi, step.width);
            if strict {
                up &= sl == Ordering::Greater && sh == Ordering::Greater;
                down &= sl == Ordering::Less && sh == Ordering::Less;
                mu_up &= sw == Ordering::Greater;
                mu_down &= sw == Ordering::Less;
            } else {
                up &= sl != Ordering::Less && sh != Ordering::Less;
                down &= sl != Ordering::Greater && sh != Ordering::Greater;
                mu_up &= sw != Ordering::Less;
                mu_down &= sw != Ordering::Greater;
            }
        }
        MonotonicityProfile {
            direction: if up {
                Direction::Increasing
            } else if down {
                Direction::Decreasing
            } else {
                Direction::NonMonotone
            },
            mu_direction: if mu_up {
                MuDirection::MuIncreasing
            } else if mu_down {
                MuDirection::MuDecreasing
            } else {
                MuDirection::MuNonMonotone
            },
            strict,
            both_directions: up && down,
            both_mu_directions: mu_up && mu_down,
            zero_indices: self.zero_indices(),
        }
    }

    /// Greedy maximal split into contiguous monotone, μ-monotone segments.
    ///
    /// Adjacent segments share their boundary index. Steps that leave both
    /// endpoints unchanged in a given order stay in the open segment.
    pub fn alternate_segments(&self) -> Result<SegmentDecomposition> {
        self.require_differencable()?;
        let mut segments = Vec::new();
        let mut start = self.first_index();
        let mut dir: Option<Direction> = None;
        let mut mu: Option<MuDirection> = None;
        for (k, w) in self.items.windows(2).enumerate() {
            let from = self.base + k as i64;
            let step = Step::between(&w[0], &w[1]);
            let step_dir = step.direction().ok_or(Error::NotDecomposable { from, to: from + 1 })?;
            let step_mu = step.mu_direction();
            let dir_ok = step_dir.is_none() || dir.is_none() || dir == step_dir;
            let mu_ok = step_mu.is_none() || mu.is_none() || mu == step_mu;
            if !(dir_ok && mu_ok) {
                segments.push(Segment::closed(start, from, dir, mu));
                start = from;
                dir = None;
                mu = None;
            }
            dir = dir.or(step_dir);
            mu = mu.or(step_mu);
        }
        segments.push(Segment::closed(start, self.last_index(), dir, mu));
        let mut breakpoints: Vec<i64> = segments.iter().map(|s| s.start).collect();
        breakpoints.push(self.last_index());
        Ok(SegmentDecomposition {
            breakpoints,
            segments,
        })
    }
}

/// Per-step comparison of consecutive lower endpoints, upper endpoints and widths.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Step {
    pub lo: Ordering,
    pub hi: Ordering,
    pub width: Ordering,
}

impl Step {
    pub fn between(prev: &Interval, next: &Interval) -> Self {
        Step {
            lo: next.lo().cmp(prev.lo()),
            hi: next.hi().cmp(prev.hi()),
            width: next.width().cmp(&prev.width()),
        }
    }

    /// `None` when the endpoints move in opposite directions; `Some(None)` for a
    /// step that leaves both endpoints in place.
    pub fn direction(&self) -> Option<Option<Direction>> {
        use Ordering::*;
        match (self.lo, self.hi) {
            (Equal, Equal) => Some(None),
            (Less, Greater) | (Greater, Less) => None,
            (Greater, _) | (_, Greater) => Some(Some(Direction::Increasing)),
            _ => Some(Some(Direction::Decreasing)),
        }
    }

    pub fn mu_direction(&self) -> Option<MuDirection> {
        match self.width {
            Ordering::Greater => Some(MuDirection::MuIncreasing),
            Ordering::Less => Some(MuDirection::MuDecreasing),
            Ordering::Equal => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    Increasing,
    Decreasing,
    NonMonotone,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MuDirection {
    MuIncreasing,
    MuDecreasing,
    MuNonMonotone,
}

/// Monotonicity classification of a whole sequence.
///
/// A constant sequence is both increasing and decreasing; `direction` then
/// reports `Increasing` and `both_directions` is set. Widths are handled the
/// same way.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonotonicityProfile {
    pub direction: Direction,
    pub mu_direction: MuDirection,
    pub strict: bool,
    pub both_directions: bool,
    pub both_mu_directions: bool,
    pub zero_indices: Vec<i64>,
}

impl MonotonicityProfile {
    pub fn is_increasing(&self) -> bool {
        self.direction == Direction::Increasing
    }

    pub fn is_decreasing(&self) -> bool {
        self.direction == Direction::Decreasing || self.both_directions
    }

    pub fn is_monotone(&self) -> bool {
        self.direction != Direction::NonMonotone
    }

    pub fn is_mu_increasing(&self) -> bool {
        self.mu_direction == MuDirection::MuIncreasing
    }

    pub fn is_mu_decreasing(&self) -> bool {
        self.mu_direction == MuDirection::MuDecreasing || self.both_mu_directions
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Synchronicity {
    Synchronous,
    Asynchronous,
    Neither,
}

/// Whether two equal-length sequences are monotone in the same or opposite sense.
///
/// A constant sequence shares either direction, so it is synchronous with any
/// monotone partner.
pub fn synchronous(u: &IntervalSequence, v: &IntervalSequence) -> Result<Synchronicity> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch {
            left: u.len(),
            right: v.len(),
        });
    }
    let (pu, pv) = (u.classify(false), v.classify(false));
    if !pu.is_monotone() || !pv.is_monotone() {
        return Ok(Synchronicity::Neither);
    }
    let same = (pu.is_increasing() && pv.is_increasing()) || (pu.is_decreasing() && pv.is_decreasing());
    Ok(if same {
        Synchronicity::Synchronous
    } else {
        Synchronicity::Asynchronous
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Segment {
    pub start: i64,
    pub end: i64,
    pub direction: Direction,
    pub mu_direction: MuDirection,
}

impl Segment {
    fn closed(start: i64, end: i64, dir: Option<Direction>, mu: Option<MuDirection>) -> Self {
        Segment {
            start,
            end,
            direction: dir.unwrap_or(Direction::Increasing),
            mu_direction: mu.unwrap_or(MuDirection::MuIncreasing),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SegmentDecomposition {
    /// `i_0 ≤ i_1 < … < i_k`: segment starts followed by the final index.
    pub breakpoints: Vec<i64>,
    pub segments: Vec<Segment>,
}

/// `Σ_{j ≤ i} ‖d_j‖` over a difference sequence; `i = first − 1` is the empty sum.
pub fn prefix_norm_sum(diffs: &IntervalSequence, i: i64) -> Result<Rational> {
    if i < diffs.first_index() - 1 || i > diffs.last_index() {
        return Err(Error::IndexOutOfRange {
            index: i,
            first: diffs.first_index() - 1,
            last: diffs.last_index(),
        });
    }
    Ok(diffs
        .indexed()
        .take_while(|(j, _)| *j <= i)
        .map(|(_, d)| d.qnorm())
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ex33() -> IntervalSequence {
        IntervalSequence::from_int_pairs(&[(0, 0), (1, 2), (2, 4), (3, 6), (1, 2), (0, 0)])
    }

    #[test]
    fn nabla_of_worked_example() {
        let d = ex33().nabla().unwrap();
        assert_eq!(d.base(), 1);
        let expected = IntervalSequence::from_int_pairs(&[(1, 2), (1, 2), (1, 2), (-4, -2), (-2, -1)]);
        assert_eq!(d.items(), expected.items());
    }

    #[test]
    fn differences_reduce_on_reals() {
        let n = IntervalSequence::from_ints(&[0, 1, 3]).nabla().unwrap();
        assert_eq!(n.items(), IntervalSequence::from_ints(&[1, 2]).items());
        let d = IntervalSequence::from_ints(&[0, 1, 0]).delta().unwrap();
        assert_eq!(d.items(), IntervalSequence::from_ints(&[1, -1]).items());
        assert_eq!(d.base(), 0);
    }

    #[test]
    fn difference_edge_cases() {
        let c = IntervalSequence::from_int_pairs(&[(1, 2), (1, 2)]).nabla().unwrap();
        assert_eq!(c.items(), &[Interval::zero()]);
        let d = IntervalSequence::from_int_pairs(&[(0, 0), (1, 2)]).delta().unwrap();
        assert_eq!(d.items(), &[Interval::ints(1, 2).unwrap()]);
        let d = IntervalSequence::from_int_pairs(&[(3, 6), (1, 2)]).delta().unwrap();
        assert_eq!(d.items(), &[Interval::ints(-4, -2).unwrap()]);
        let single = IntervalSequence::from_ints(&[5]);
        assert_eq!(single.nabla(), Err(Error::TooShort { len: 1, min: 2 }));
        assert_eq!(single.delta(), Err(Error::TooShort { len: 1, min: 2 }));
    }

    #[test]
    fn classify_examples() {
        let p = IntervalSequence::from_int_pairs(&[(0, 0), (1, 2), (2, 4)]).classify(false);
        assert_eq!(p.direction, Direction::Increasing);
        assert_eq!(p.mu_direction, MuDirection::MuIncreasing);
        assert_eq!(p.zero_indices, vec![0]);

        let q = |s: &str| s.parse::<Rational>().unwrap();
        let seq = IntervalSequence::new(vec![
            Interval::new(q("1"), q("2")).unwrap(),
            Interval::new(q("1/2"), q("1")).unwrap(),
            Interval::new(q("1/3"), q("2/3")).unwrap(),
        ]);
        let p = seq.classify(false);
        assert_eq!(p.direction, Direction::Decreasing);
        assert_eq!(p.mu_direction, MuDirection::MuDecreasing);
        assert!(p.zero_indices.is_empty());

        let p = IntervalSequence::from_int_pairs(&[(0, 1), (1, 1)]).classify(false);
        assert_eq!(p.direction, Direction::Increasing);
        assert_eq!(p.mu_direction, MuDirection::MuDecreasing);
    }

    #[test]
    fn strict_classification() {
        let s = IntervalSequence::from_int_pairs(&[(0, 0), (1, 2), (1, 3)]);
        assert_eq!(s.classify(false).direction, Direction::Increasing);
        assert_eq!(s.classify(true).direction, Direction::NonMonotone);
        assert_eq!(s.classify(true).mu_direction, MuDirection::MuIncreasing);
        let flat = IntervalSequence::from_int_pairs(&[(1, 2), (1, 2)]).classify(false);
        assert!(flat.is_increasing() && flat.is_decreasing());
        assert!(flat.is_mu_increasing() && flat.is_mu_decreasing());
    }

    #[test]
    fn synchronicity() {
        let inc = IntervalSequence::from_ints(&[0, 1, 2]);
        let dec = IntervalSequence::from_ints(&[0, -1, -2]);
        let wobble = IntervalSequence::from_ints(&[0, 1, 0]);
        assert_eq!(synchronous(&inc, &inc).unwrap(), Synchronicity::Synchronous);
        assert_eq!(synchronous(&inc, &dec).unwrap(), Synchronicity::Asynchronous);
        assert_eq!(synchronous(&wobble, &inc).unwrap(), Synchronicity::Neither);
        assert!(matches!(
            synchronous(&inc, &IntervalSequence::from_ints(&[0, 1])),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn segments_of_worked_example() {
        let d = ex33().alternate_segments().unwrap();
        assert_eq!(d.breakpoints, vec![0, 3, 5]);
        assert_eq!(d.segments.len(), 2);
        assert_eq!(d.segments[0].direction, Direction::Increasing);
        assert_eq!(d.segments[0].mu_direction, MuDirection::MuIncreasing);
        assert_eq!(d.segments[1].direction, Direction::Decreasing);
        assert_eq!(d.segments[1].mu_direction, MuDirection::MuDecreasing);
    }

    #[test]
    fn segment_edge_cases() {
        let one = IntervalSequence::from_ints(&[0, 1, 2, 3]).alternate_segments().unwrap();
        assert_eq!(one.segments.len(), 1);
        let two = IntervalSequence::from_ints(&[0, 1, 0]).alternate_segments().unwrap();
        assert_eq!(two.breakpoints, vec![0, 1, 2]);
        let mixed = IntervalSequence::from_int_pairs(&[(0, 4), (1, 3)]);
        assert_eq!(
            mixed.alternate_segments(),
            Err(Error::NotDecomposable { from: 0, to: 1 })
        );
        // width turns while the endpoints keep rising
        let mu_turn = IntervalSequence::from_int_pairs(&[(0, 0), (1, 3), (4, 5)]);
        assert_eq!(mu_turn.alternate_segments().unwrap().segments.len(), 2);
    }

    #[test]
    fn prefix_sums() {
        let diffs = IntervalSequence::with_base(
            vec![Interval::ints(1, 2).unwrap(), Interval::ints(1, 2).unwrap()],
            1,
        );
        assert_eq!(prefix_norm_sum(&diffs, 2).unwrap(), Rational::from_integer(4));
        assert_eq!(prefix_norm_sum(&diffs, 0).unwrap(), Rational::zero());
        assert!(matches!(prefix_norm_sum(&diffs, 3), Err(Error::IndexOutOfRange { .. })));
        let empty = IntervalSequence::with_base(vec![], 1);
        assert_eq!(prefix_norm_sum(&empty, 0).unwrap(), Rational::zero());
        let one = IntervalSequence::with_base(vec![Interval::ints(-4, -2).unwrap()], 1);
        assert_eq!(prefix_norm_sum(&one, 1).unwrap(), Rational::from_integer(4));
    }
}
