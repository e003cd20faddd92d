//! Closed intervals with outward rounding.
//!
//! Every operation returns an interval guaranteed to contain the exact real
//! result for all points of its operands. Directed rounding is realized in
//! software: error-free transformations (TwoSum / FMA residuals) detect when
//! a rounded endpoint already sits on the correct side, and a one-ulp nudge
//! is applied only when it does not. Library transcendentals (exp, ln) are
//! assumed faithful to within 1 ulp and nudged by two ulps.

use crate::error::{Error, Result};
use crate::rational::{rational_from_f64, rational_to_f64, Rational};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

// Directed endpoint primitives.

fn add_down(a: f64, b: f64) -> f64 {
    let s = a + b;
    if s.is_infinite() {
        return if s > 0.0 { f64::MAX } else { f64::NEG_INFINITY };
    }
    // TwoSum residual: err = (a + b) - s exactly.
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    if err >= 0.0 {
        s
    } else {
        s.next_down()
    }
}

fn add_up(a: f64, b: f64) -> f64 {
    let s = a + b;
    if s.is_infinite() {
        return if s > 0.0 { f64::INFINITY } else { f64::MIN };
    }
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    if err <= 0.0 {
        s
    } else {
        s.next_up()
    }
}

// The FMA residual of a product is exact only outside the subnormal range;
// below it we nudge unconditionally (round-to-nearest is within one ulp).
fn mul_down(a: f64, b: f64) -> f64 {
    let p = a * b;
    if p.is_infinite() {
        return if p > 0.0 { f64::MAX } else { f64::NEG_INFINITY };
    }
    if p.abs() < f64::MIN_POSITIVE {
        if a == 0.0 || b == 0.0 {
            return 0.0;
        }
        return if p == 0.0 && (a > 0.0) == (b > 0.0) {
            0.0
        } else {
            p.next_down()
        };
    }
    let err = a.mul_add(b, -p);
    if err >= 0.0 {
        p
    } else {
        p.next_down()
    }
}

fn mul_up(a: f64, b: f64) -> f64 {
    let p = a * b;
    if p.is_infinite() {
        return if p > 0.0 { f64::INFINITY } else { f64::MIN };
    }
    if p.abs() < f64::MIN_POSITIVE {
        if a == 0.0 || b == 0.0 {
            return 0.0;
        }
        return if p == 0.0 && (a > 0.0) != (b > 0.0) {
            0.0
        } else {
            p.next_up()
        };
    }
    let err = a.mul_add(b, -p);
    if err <= 0.0 {
        p
    } else {
        p.next_up()
    }
}

// True quotient is q + e/b with e = a - q*b computed exactly by FMA.
fn div_down(a: f64, b: f64) -> f64 {
    let q = a / b;
    if q.is_infinite() {
        return if q > 0.0 { f64::MAX } else { f64::NEG_INFINITY };
    }
    if q != 0.0 && q.abs() < f64::MIN_POSITIVE {
        return q.next_down();
    }
    let e = (-q).mul_add(b, a);
    if e == 0.0 || (e > 0.0) == (b > 0.0) {
        q
    } else {
        q.next_down()
    }
}

fn div_up(a: f64, b: f64) -> f64 {
    let q = a / b;
    if q.is_infinite() {
        return if q > 0.0 { f64::INFINITY } else { f64::MIN };
    }
    if q != 0.0 && q.abs() < f64::MIN_POSITIVE {
        return q.next_up();
    }
    let e = (-q).mul_add(b, a);
    if e == 0.0 || (e > 0.0) != (b > 0.0) {
        q
    } else {
        q.next_up()
    }
}

fn sqrt_down(x: f64) -> f64 {
    let s = x.sqrt();
    let e = s.mul_add(s, -x);
    if e > 0.0 {
        s.next_down()
    } else {
        s
    }
}

fn sqrt_up(x: f64) -> f64 {
    let s = x.sqrt();
    let e = s.mul_add(s, -x);
    if e < 0.0 {
        s.next_up()
    } else {
        s
    }
}

fn exp_down(x: f64) -> f64 {
    (x.exp().next_down().next_down()).max(0.0)
}

fn exp_up(x: f64) -> f64 {
    x.exp().next_up().next_up()
}

fn ln_down(x: f64) -> f64 {
    x.ln().next_down().next_down()
}

fn ln_up(x: f64) -> f64 {
    x.ln().next_up().next_up()
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Self {
        assert!(!lo.is_nan() && !hi.is_nan(), "NaN interval endpoint");
        assert!(lo <= hi, "inverted interval [{lo}, {hi}]");
        Interval { lo, hi }
    }

    pub fn point(x: f64) -> Self {
        Interval::new(x, x)
    }

    pub fn zero() -> Self {
        Interval::point(0.0)
    }

    pub fn one() -> Self {
        Interval::point(1.0)
    }

    /// Tightest interval containing the exact rational `r`.
    pub fn from_rational(r: &Rational) -> Self {
        let approx = rational_to_f64(r);
        let mut lo = approx;
        let mut hi = approx;
        while rational_from_f64(lo).map_or(false, |q| &q > r) {
            lo = lo.next_down();
        }
        while rational_from_f64(hi).map_or(false, |q| &q < r) {
            hi = hi.next_up();
        }
        Interval::new(lo, hi)
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn width(&self) -> f64 {
        add_up(self.hi, -self.lo)
    }

    pub fn midpoint(&self) -> f64 {
        self.lo * 0.5 + self.hi * 0.5
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn contains_rational(&self, r: &Rational) -> bool {
        match (rational_from_f64(self.lo), rational_from_f64(self.hi)) {
            (Some(a), Some(b)) => &a <= r && r <= &b,
            _ => {
                (self.lo == f64::NEG_INFINITY || rational_from_f64(self.lo).unwrap() <= *r)
                    && (self.hi == f64::INFINITY || *r <= rational_from_f64(self.hi).unwrap())
            }
        }
    }

    pub fn subset_of(&self, other: &Interval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let lo = self.lo.max(other.lo);
        let hi = self.hi.min(other.hi);
        if lo <= hi {
            Some(Interval::new(lo, hi))
        } else {
            None
        }
    }

    pub fn hull(&self, other: &Interval) -> Interval {
        Interval::new(self.lo.min(other.lo), self.hi.max(other.hi))
    }

    pub fn neg(&self) -> Interval {
        Interval::new(-self.hi, -self.lo)
    }

    pub fn add(&self, other: &Interval) -> Interval {
        Interval::new(add_down(self.lo, other.lo), add_up(self.hi, other.hi))
    }

    pub fn sub(&self, other: &Interval) -> Interval {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Interval) -> Interval {
        let pairs = [
            (self.lo, other.lo),
            (self.lo, other.hi),
            (self.hi, other.lo),
            (self.hi, other.hi),
        ];
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for (a, b) in pairs {
            lo = lo.min(mul_down(a, b));
            hi = hi.max(mul_up(a, b));
        }
        Interval::new(lo, hi)
    }

    /// Tighter than `self.mul(self)`: the square never goes negative.
    pub fn square(&self) -> Interval {
        if self.lo >= 0.0 {
            Interval::new(mul_down(self.lo, self.lo), mul_up(self.hi, self.hi))
        } else if self.hi <= 0.0 {
            Interval::new(mul_down(self.hi, self.hi), mul_up(self.lo, self.lo))
        } else {
            let m = mul_up(self.lo, self.lo).max(mul_up(self.hi, self.hi));
            Interval::new(0.0, m)
        }
    }

    pub fn div(&self, other: &Interval) -> Result<Interval> {
        if other.contains(0.0) {
            return Err(Error::Domain(format!(
                "division by interval [{}, {}] containing 0",
                other.lo, other.hi
            )));
        }
        let pairs = [
            (self.lo, other.lo),
            (self.lo, other.hi),
            (self.hi, other.lo),
            (self.hi, other.hi),
        ];
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for (a, b) in pairs {
            lo = lo.min(div_down(a, b));
            hi = hi.max(div_up(a, b));
        }
        Ok(Interval::new(lo, hi))
    }

    pub fn recip(&self) -> Result<Interval> {
        Interval::one().div(self)
    }

    pub fn sqrt(&self) -> Result<Interval> {
        if self.lo < 0.0 {
            return Err(Error::Domain(format!(
                "sqrt of interval [{}, {}] with negative lower end",
                self.lo, self.hi
            )));
        }
        Ok(Interval::new(sqrt_down(self.lo), sqrt_up(self.hi)))
    }

    pub fn exp(&self) -> Interval {
        Interval::new(exp_down(self.lo), exp_up(self.hi))
    }

    pub fn ln(&self) -> Result<Interval> {
        if self.lo <= 0.0 {
            return Err(Error::Domain(format!(
                "ln of interval [{}, {}] not strictly positive",
                self.lo, self.hi
            )));
        }
        Ok(Interval::new(ln_down(self.lo), ln_up(self.hi)))
    }

    /// Integer power by repeated squaring (exponent >= 0).
    pub fn powi(&self, mut e: u32) -> Interval {
        let mut acc = Interval::one();
        let mut base = *self;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.square();
            e >>= 1;
        }
        acc
    }

    /// Certified `self >= other`: the whole of self lies at or above
    /// the whole of other.
    pub fn certainly_ge(&self, other: &Interval) -> bool {
        self.lo >= other.hi
    }

    pub fn certainly_gt(&self, other: &Interval) -> bool {
        self.lo > other.hi
    }
}

impl std::ops::Add for Interval {
    type Output = Interval;
    fn add(self, rhs: Interval) -> Interval {
        Interval::add(&self, &rhs)
    }
}

impl std::ops::Sub for Interval {
    type Output = Interval;
    fn sub(self, rhs: Interval) -> Interval {
        Interval::sub(&self, &rhs)
    }
}

impl std::ops::Mul for Interval {
    type Output = Interval;
    fn mul(self, rhs: Interval) -> Interval {
        Interval::mul(&self, &rhs)
    }
}

impl std::ops::Neg for Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval::neg(&self)
    }
}

impl std::fmt::Display for Interval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{:e}, {:e}]", self.lo, self.hi)
    }
}

/// Enclosure of pi from the half-ulp-accurate float constant.
pub fn pi() -> Interval {
    Interval::new(std::f64::consts::PI.next_down(), std::f64::consts::PI.next_up())
}

pub fn sqrt2() -> Interval {
    Interval::point(2.0).sqrt().unwrap()
}

/// Enclosure of 1/sqrt(2*pi), the normal density normalization.
pub fn inv_sqrt_2pi() -> Interval {
    let two_pi = Interval::point(2.0).mul(&pi());
    Interval::one().div(&two_pi.sqrt().unwrap()).unwrap()
}
