//! Closed intervals with exact rational endpoints.
//!
//! Besides Minkowski arithmetic this module carries the two Hukuhara-type
//! differences: the classical H-difference, which only exists when the
//! minuend is at least as wide as the subtrahend, and the generalized
//! gH-difference, which always exists and reports which defining clause held.

use std::fmt;

use serde::de::{self, SeqAccess, Visitor};
use serde::ser::SerializeTuple;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

/// Which clause of the gH-difference definition `w = u ⊖g v` holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GhCase {
    /// `u = v + w`
    A,
    /// `v = u + (-1)w`
    B,
    /// Both clauses hold; happens exactly when `u` and `v` have equal width.
    Both,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidBounds {
                lo: Box::new(lo),
                hi: Box::new(hi),
            });
        }
        Ok(Interval { lo, hi })
    }

    pub fn degenerate(x: Rational) -> Self {
        Interval {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn zero() -> Self {
        Interval::degenerate(Rational::zero())
    }

    /// Convenience constructor for integer endpoints.
    pub fn ints(lo: i64, hi: i64) -> Result<Self> {
        Interval::new(lo.into(), hi.into())
    }

    // Only for endpoint pairs already known to be ordered.
    fn ordered(lo: Rational, hi: Rational) -> Self {
        debug_assert!(lo <= hi);
        Interval { lo, hi }
    }

    fn hull_of<I: IntoIterator<Item = Rational>>(values: I) -> Self {
        let mut it = values.into_iter();
        let first = it.next().expect("hull of at least one value");
        let (lo, hi) = it.fold((first.clone(), first), |(lo, hi), x| {
            (lo.min(x.clone()), hi.max(x))
        });
        Interval::ordered(lo, hi)
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn is_degenerate(&self) -> bool {
        self.lo == self.hi
    }

    pub fn is_zero(&self) -> bool {
        self.lo.is_zero() && self.hi.is_zero()
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn scalar_mul(&self, k: &Rational) -> Interval {
        if k.is_negative() {
            Interval::ordered(k * &self.hi, k * &self.lo)
        } else {
            Interval::ordered(k * &self.lo, k * &self.hi)
        }
    }

    pub fn add(&self, other: &Interval) -> Interval {
        Interval::ordered(&self.lo + &other.lo, &self.hi + &other.hi)
    }

    /// Minkowski difference `[u̲ − v̄, ū − v̲]`; its width is the sum of both widths.
    pub fn minkowski_sub(&self, other: &Interval) -> Interval {
        Interval::ordered(&self.lo - &other.hi, &self.hi - &other.lo)
    }

    pub fn mul(&self, other: &Interval) -> Interval {
        Interval::hull_of([
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ])
    }

    pub fn div(&self, other: &Interval) -> Result<Interval> {
        if other.contains(&Rational::zero()) {
            return Err(Error::DivisorContainsZero {
                lo: Box::new(other.lo.clone()),
                hi: Box::new(other.hi.clone()),
            });
        }
        let mut quotients = Vec::with_capacity(4);
        for a in [&self.lo, &self.hi] {
            for b in [&other.lo, &other.hi] {
                quotients.push(a.checked_div(b)?);
            }
        }
        Ok(Interval::hull_of(quotients))
    }

    /// Generalized Hukuhara difference `self ⊖g other`.
    pub fn gh_diff(&self, other: &Interval) -> (Interval, GhCase) {
        let d_lo = &self.lo - &other.lo;
        let d_hi = &self.hi - &other.hi;
        let case = match self.width().cmp(&other.width()) {
            std::cmp::Ordering::Greater => GhCase::A,
            std::cmp::Ordering::Less => GhCase::B,
            std::cmp::Ordering::Equal => GhCase::Both,
        };
        let w = if d_lo <= d_hi {
            Interval::ordered(d_lo, d_hi)
        } else {
            Interval::ordered(d_hi, d_lo)
        };
        (w, case)
    }

    /// Shorthand for the interval part of [`Interval::gh_diff`].
    pub fn gh_sub(&self, other: &Interval) -> Interval {
        self.gh_diff(other).0
    }

    /// Hukuhara difference: the `w` with `self = other + w`, when it exists.
    pub fn h_diff(&self, other: &Interval) -> Result<Interval> {
        let (uw, vw) = (self.width(), other.width());
        if uw < vw {
            return Err(Error::HDiffNotExist {
                minuend_width: Box::new(uw),
                subtrahend_width: Box::new(vw),
            });
        }
        Ok(Interval::ordered(&self.lo - &other.lo, &self.hi - &other.hi))
    }

    /// Exact image of `t ↦ t^k` over the interval, `k ≥ 1`.
    pub fn pow(&self, k: u32) -> Result<Interval> {
        if k == 0 {
            return Err(Error::ExponentOutOfRange {
                value: 0,
                detail: "integer powers start at 1".into(),
            });
        }
        let lo_k = self.lo.pow(k);
        let hi_k = self.hi.pow(k);
        if k % 2 == 1 {
            return Ok(Interval::ordered(lo_k, hi_k));
        }
        if self.lo.is_negative() && self.hi.is_positive() {
            Ok(Interval::ordered(Rational::zero(), lo_k.max(hi_k)))
        } else if lo_k <= hi_k {
            Ok(Interval::ordered(lo_k, hi_k))
        } else {
            Ok(Interval::ordered(hi_k, lo_k))
        }
    }

    /// Hausdorff distance `max(|u̲ − v̲|, |ū − v̄|)`.
    pub fn hausdorff(&self, other: &Interval) -> Rational {
        (&self.lo - &other.lo).abs().max((&self.hi - &other.hi).abs())
    }

    /// Quasi-norm `‖u‖ = max(|u̲|, |ū|)`, the distance to `[0, 0]`.
    pub fn qnorm(&self) -> Rational {
        self.lo.abs().max(self.hi.abs())
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Interval {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut tuple = serializer.serialize_tuple(2)?;
        tuple.serialize_element(&self.lo)?;
        tuple.serialize_element(&self.hi)?;
        tuple.end()
    }
}

impl<'de> Deserialize<'de> for Interval {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct IntervalVisitor;

        impl<'de> Visitor<'de> for IntervalVisitor {
            type Value = Interval;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a two-element array [lo, hi]")
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> std::result::Result<Interval, A::Error> {
                let lo: Rational = seq
                    .next_element()?
                    .ok_or_else(|| de::Error::invalid_length(0, &self))?;
                let hi: Rational = seq
                    .next_element()?
                    .ok_or_else(|| de::Error::invalid_length(1, &self))?;
                if seq.next_element::<de::IgnoredAny>()?.is_some() {
                    return Err(de::Error::invalid_length(3, &self));
                }
                Interval::new(lo, hi).map_err(de::Error::custom)
            }
        }

        deserializer.deserialize_seq(IntervalVisitor)
    }
}
