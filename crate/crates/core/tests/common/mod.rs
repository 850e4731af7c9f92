//! Independent reference arithmetic for the integration tests.
//!
//! Intervals are bare `(lo, hi)` pairs of `BigRational` and every operation
//! is written from its set definition, without touching the library code.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use opial_core::{Interval, IntervalSequence, Rational};
use rand::Rng;

pub type Iv = (BigRational, BigRational);

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn to_iv(u: &Interval) -> Iv {
    (u.lo().as_big().clone(), u.hi().as_big().clone())
}

pub fn to_big(r: &Rational) -> BigRational {
    r.as_big().clone()
}

fn min_max(xs: Vec<BigRational>) -> Iv {
    let lo = xs.iter().min().unwrap().clone();
    let hi = xs.iter().max().unwrap().clone();
    (lo, hi)
}

pub fn add(a: &Iv, b: &Iv) -> Iv {
    (&a.0 + &b.0, &a.1 + &b.1)
}

pub fn mul(a: &Iv, b: &Iv) -> Iv {
    min_max(vec![&a.0 * &b.0, &a.0 * &b.1, &a.1 * &b.0, &a.1 * &b.1])
}

/// Image of `t^k`: attained at an endpoint, or at 0 when it lies inside.
pub fn pow(a: &Iv, k: u32) -> Iv {
    let p = |x: &BigRational| num_traits::pow(x.clone(), k as usize);
    let mut cands = vec![p(&a.0), p(&a.1)];
    if a.0 <= BigRational::zero() && a.1 >= BigRational::zero() {
        cands.push(BigRational::zero());
    }
    min_max(cands)
}

pub fn gh(a: &Iv, b: &Iv) -> Iv {
    min_max(vec![&a.0 - &b.0, &a.1 - &b.1])
}

pub fn norm(a: &Iv) -> BigRational {
    a.0.abs().max(a.1.abs())
}

/// `Σ_{i∈range} ‖u_i^l1 (D u_i)^l2‖` with `D` backward (`nabla`) or forward.
pub fn lhs(items: &[Iv], base: i64, l1: u32, l2: u32, range: (i64, i64), nabla: bool) -> BigRational {
    let at = |i: i64| &items[(i - base) as usize];
    let mut s = BigRational::zero();
    for i in range.0..=range.1 {
        let d = if nabla { gh(at(i), at(i - 1)) } else { gh(at(i + 1), at(i)) };
        s += norm(&mul(&pow(at(i), l1), &pow(&d, l2)));
    }
    s
}

/// `Σ_{i∈range} ‖D u_i‖^p`.
pub fn rhs(items: &[Iv], base: i64, p: u32, range: (i64, i64), nabla: bool) -> BigRational {
    let at = |i: i64| &items[(i - base) as usize];
    let mut s = BigRational::zero();
    for i in range.0..=range.1 {
        let d = if nabla { gh(at(i), at(i - 1)) } else { gh(at(i + 1), at(i)) };
        s += num_traits::pow(norm(&d), p as usize);
    }
    s
}

pub fn items(seq: &IntervalSequence) -> Vec<Iv> {
    seq.items().iter().map(to_iv).collect()
}

/// Random rational in `[-mag, mag]` with denominator at most 16.
pub fn rand_rat(rng: &mut impl Rng, mag: i64) -> Rational {
    let d = rng.gen_range(1..=16);
    Rational::new(rng.gen_range(-mag * d..=mag * d), d).unwrap()
}

pub fn rand_interval(rng: &mut impl Rng, mag: i64) -> Interval {
    let (a, b) = (rand_rat(rng, mag), rand_rat(rng, mag));
    if rng.gen_ratio(1, 10) {
        return Interval::degenerate(a);
    }
    Interval::new(a.clone().min(b.clone()), a.max(b)).unwrap()
}
