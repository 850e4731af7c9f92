mod common;

use common::*;
use opial_core::sequence::prefix_norm_sum;
use opial_core::{Interval, IntervalSequence, Rational};
use proptest::prelude::*;

fn interval() -> impl Strategy<Value = Interval> {
    (-300i64..=300, 0i64..=100, 1i64..=8).prop_map(|(c, w, d)| {
        let lo = Rational::new(c, d).unwrap();
        let hi = &lo + Rational::new(w, d).unwrap();
        Interval::new(lo, hi).unwrap()
    })
}

fn sequence() -> impl Strategy<Value = IntervalSequence> {
    (prop::collection::vec(interval(), 2..10), -3i64..=3).prop_map(|(v, b)| IntervalSequence::with_base(v, b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn forward_and_backward_differences_are_shifts(s in sequence()) {
        let (d, n) = (s.delta().unwrap(), s.nabla().unwrap());
        prop_assert_eq!(d.first_index(), s.first_index());
        prop_assert_eq!(n.first_index(), s.first_index() + 1);
        for i in d.first_index()..=d.last_index() {
            prop_assert_eq!(d.at(i).unwrap(), n.at(i + 1).unwrap());
            prop_assert_eq!(to_iv(d.at(i).unwrap()), gh(&to_iv(s.at(i + 1).unwrap()), &to_iv(s.at(i).unwrap())));
        }
    }

    #[test]
    fn degenerate_differences_are_classical(xs in prop::collection::vec(-500i64..=500, 2..12)) {
        let s = IntervalSequence::from_ints(&xs);
        let n = s.nabla().unwrap();
        for (k, w) in xs.windows(2).enumerate() {
            prop_assert_eq!(n.at(k as i64 + 1).unwrap(), &Interval::degenerate(Rational::from(w[1] - w[0])));
        }
    }

    #[test]
    fn prefix_sums_are_additive_and_dominate(s in sequence()) {
        let mut items = s.items().to_vec();
        items[0] = Interval::zero();
        let s = IntervalSequence::with_base(items, s.base());
        let d = s.nabla().unwrap();
        let mut running = Rational::zero();
        prop_assert!(prefix_norm_sum(&d, d.first_index() - 1).unwrap().is_zero());
        for i in d.first_index()..=d.last_index() {
            running += d.at(i).unwrap().qnorm();
            let p = prefix_norm_sum(&d, i).unwrap();
            prop_assert_eq!(&p, &running);
            // a sequence starting at zero is bounded by its accumulated steps
            prop_assert!(s.at(i).unwrap().qnorm() <= p);
        }
    }

    #[test]
    fn segments_cover_and_are_monotone(s in sequence()) {
        if let Ok(dec) = s.alternate_segments() {
            prop_assert_eq!(dec.segments.first().unwrap().start, s.first_index());
            prop_assert_eq!(dec.segments.last().unwrap().end, s.last_index());
            for w in dec.segments.windows(2) {
                prop_assert_eq!(w[0].end, w[1].start);
            }
            for seg in &dec.segments {
                let part: Vec<Interval> = (seg.start..=seg.end).map(|i| s.at(i).unwrap().clone()).collect();
                let p = IntervalSequence::new(part).classify(false);
                prop_assert!(p.is_monotone());
                prop_assert!(p.mu_direction != opial_core::MuDirection::MuNonMonotone);
            }
        }
    }

    #[test]
    fn rebasing_keeps_items(s in sequence(), b in -5i64..=5) {
        let r = s.rebased(b);
        prop_assert_eq!(r.items(), s.items());
        prop_assert_eq!(r.first_index(), b);
    }

    #[test]
    fn json_round_trip(s in sequence()) {
        let j = serde_json::to_string(&s).unwrap();
        prop_assert_eq!(serde_json::from_str::<IntervalSequence>(&j).unwrap(), s);
    }
}
