//! Exact rational arithmetic and conversions between rationals and floats.
//!
//! `Rational` is a normalized arbitrary-precision fraction (positive
//! denominator, gcd 1); every arithmetic operation on it is exact.

use num::bigint::{BigInt, Sign};
use num::{BigRational, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Exact conversion of a finite float into a rational.
pub fn rational_from_f64(x: f64) -> Option<Rational> {
    Rational::from_float(x)
}

/// Nearest-float approximation of a rational (not directed; see
/// `Interval::from_rational` for the certified enclosure).
pub fn rational_to_f64(r: &Rational) -> f64 {
    match r.to_f64() {
        Some(x) if x.is_finite() => x,
        _ => {
            if r.is_negative() {
                f64::MIN
            } else {
                f64::MAX
            }
        }
    }
}

/// Parses "p/q", an integer, or a finite decimal ("-0.125") into an exact
/// rational. Decimal strings convert as d·10^-k with no float round-trip.
pub fn parse_rational(s: &str) -> std::result::Result<Rational, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty numeric literal".to_string());
    }
    if let Some((p, q)) = s.split_once('/') {
        let num: BigInt = p
            .trim()
            .parse()
            .map_err(|_| format!("bad numerator {p:?}"))?;
        let den: BigInt = q
            .trim()
            .parse()
            .map_err(|_| format!("bad denominator {q:?}"))?;
        if den.is_zero() {
            return Err(format!("zero denominator in {s:?}"));
        }
        return Ok(Rational::new(num, den));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(format!("bad decimal {s:?}"));
        }
        let negative = int_part.starts_with('-');
        let int_digits = int_part.trim_start_matches(['-', '+']);
        if !int_digits.is_empty() && !int_digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(format!("bad decimal {s:?}"));
        }
        let digits = format!("{int_digits}{frac_part}");
        let num: BigInt = digits.parse().map_err(|_| format!("bad decimal {s:?}"))?;
        let den = BigInt::from(10u32).pow(frac_part.len() as u32);
        let mut r = Rational::new(num, den);
        if negative {
            r = -r;
        }
        return Ok(r);
    }
    let n: BigInt = s.parse().map_err(|_| format!("bad integer {s:?}"))?;
    Ok(Rational::from_integer(n))
}

/// True iff `r` is the square of a rational; returns the nonnegative root.
pub fn exact_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let num = r.numer().magnitude();
    let den = r.denom().magnitude();
    let sn = num.sqrt();
    let sd = den.sqrt();
    if &(&sn * &sn) == num && &(&sd * &sd) == den {
        Some(Rational::new(
            BigInt::from_biguint(Sign::Plus, sn),
            BigInt::from_biguint(Sign::Plus, sd),
        ))
    } else {
        None
    }
}

/// Largest rational q with bounded denominator such that q^2 * s <= limit.
/// Used to rescale a vector onto (or under) a sphere exactly.
pub fn shrink_to_budget(s: &Rational, limit: &Rational) -> Result<Rational> {
    if !s.is_positive() {
        return Err(Error::Contract("shrink_to_budget needs s > 0".into()));
    }
    if s <= limit {
        return Ok(Rational::one());
    }
    // Start from the float approximation of sqrt(limit/s) and step down
    // until the exact inequality holds.
    let target = rational_to_f64(&(limit / s)).max(0.0).sqrt();
    let den = BigInt::from(1u64 << 32);
    let mut num = BigInt::from((target * 4294967296.0).floor().max(0.0) as u64);
    loop {
        let q = Rational::new(num.clone(), den.clone());
        if &(&q * &q) * s <= *limit {
            return Ok(q);
        }
        if num.is_zero() {
            return Err(Error::Contract("cannot rescale to budget".into()));
        }
        num -= 1;
    }
}

/// Best rational approximation of `x` with denominator at most `max_den`,
/// by walking the continued-fraction convergents.
pub fn rationalize(x: f64, max_den: u64) -> Rational {
    let max_den = max_den.max(1);
    let exact = match rational_from_f64(x) {
        Some(r) => r,
        None => return Rational::zero(),
    };
    if exact.denom().magnitude() <= &num::BigUint::from(max_den) {
        return exact;
    }
    let negative = exact.is_negative();
    let mut frac = exact.abs();
    let bound = BigInt::from(max_den);
    // Convergents p_k/q_k of the continued fraction of |x|.
    let (mut p0, mut q0) = (BigInt::one(), BigInt::zero());
    let (mut p1, mut q1) = (frac.to_integer(), BigInt::one());
    frac -= Rational::from_integer(p1.clone());
    while !frac.is_zero() {
        frac = frac.recip();
        let a = frac.to_integer();
        frac -= Rational::from_integer(a.clone());
        let p2 = &a * &p1 + &p0;
        let q2 = &a * &q1 + &q0;
        if q2 > bound {
            // Best semiconvergent still within the denominator bound.
            let t = (&bound - &q0) / &q1;
            if !t.is_zero() {
                let ps = &t * &p1 + &p0;
                let qs = &t * &q1 + &q0;
                let cand = Rational::new(ps, qs);
                let conv = Rational::new(p1.clone(), q1.clone());
                let target = exact.abs();
                if (&cand - &target).abs() < (&conv - &target).abs() {
                    p1 = cand.numer().clone();
                    q1 = cand.denom().clone();
                }
            }
            break;
        }
        p0 = std::mem::replace(&mut p1, p2);
        q0 = std::mem::replace(&mut q1, q2);
    }
    let r = Rational::new(p1, q1);
    if negative {
        -r
    } else {
        r
    }
}

/// Renders a rational as "p/q" (or "p" when the denominator is 1).
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
