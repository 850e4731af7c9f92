//! Input builders shared by the benchmarks.

use opial_core::IntervalSequence;

/// `[k, 2k]` rising from zero and falling back to zero: a two-segment
/// sequence with zeros only at both ends.
pub fn tent(len: usize) -> IntervalSequence {
    let last = len as i64 - 1;
    let pairs: Vec<(i64, i64)> = (0..=last)
        .map(|i| {
            let k = i.min(last - i);
            (k, 2 * k)
        })
        .collect();
    IntervalSequence::from_int_pairs(&pairs)
}
