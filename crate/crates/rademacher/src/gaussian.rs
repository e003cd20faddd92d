//! Certified enclosures of the standard normal tail Q and quantities
//! derived from it.
//!
//! Q(x) = (1/sqrt(2 pi)) * integral_x^inf exp(-t^2/2) dt.
//!
//! Two evaluation routes, both with rigorous remainder control:
//!   * |x| <= 3: the alternating Maclaurin series of erf(x/sqrt 2), with the
//!     first omitted term folded into the enclosure;
//!   * x > 3: the Laplace continued fraction for the Mills ratio
//!     Q(x)/phi(x) = 1/(x + 1/(x + 2/(x + ...))), truncated with the tail
//!     continuation replaced by its a-priori range [0, N/x].

use crate::error::{Error, Result};
use crate::interval::{inv_sqrt_2pi, pi, sqrt2, Interval};
use crate::report::Verdict;

pub const DEFAULT_TARGET_WIDTH: f64 = 1e-12;

const SERIES_THRESHOLD: f64 = 3.0;
const MAX_SERIES_TERMS: usize = 400;
const CF_DEPTH: usize = 80;

/// Enclosure of the normal density phi(t) over an interval argument.
pub fn phi(t: &Interval) -> Interval {
    let half_sq = t.square().mul(&Interval::point(0.5));
    inv_sqrt_2pi().mul(&half_sq.neg().exp())
}

/// Enclosure of erf over a nonnegative interval argument, via the
/// alternating Maclaurin series with the next term as remainder.
fn erf_series(u: &Interval) -> Result<Interval> {
    let u2 = u.square();
    let mut sum = *u;
    let mut term = *u;
    let mut k: usize = 1;
    loop {
        if k > MAX_SERIES_TERMS {
            return Err(Error::PrecisionExhausted {
                achieved: f64::INFINITY,
                target: 0.0,
            });
        }
        // term_k / term_{k-1} = u^2 * (2k-1) / (k (2k+1)), all factors exact.
        let num = Interval::point((2 * k - 1) as f64);
        let den = Interval::point((k * (2 * k + 1)) as f64);
        term = term.mul(&u2).mul(&num).div(&den)?;
        // Terms are guaranteed decreasing once k exceeds u^2.
        let decreasing = (k as f64) > u2.hi();
        if decreasing && term.hi() < 1e-18 {
            // Alternating series: the truncation error is at most the
            // magnitude of the first omitted term.
            let rem = Interval::new(-term.hi(), term.hi());
            sum = sum.add(&rem);
            break;
        }
        if k % 2 == 1 {
            sum = sum.sub(&term);
        } else {
            sum = sum.add(&term);
        }
        k += 1;
    }
    let two_over_sqrt_pi = Interval::point(2.0).div(&pi().sqrt()?)?;
    Ok(two_over_sqrt_pi.mul(&sum))
}

/// Point-argument enclosure of Q(t).
fn q_point(t: f64) -> Result<Interval> {
    if t < 0.0 {
        let q = q_point(-t)?;
        return Ok(Interval::one().sub(&q));
    }
    if t == 0.0 {
        return Ok(Interval::point(0.5));
    }
    let raw = if t <= SERIES_THRESHOLD {
        let u = Interval::point(t).mul(&Interval::point(0.5).sqrt()?);
        let erf = erf_series(&u)?;
        Interval::one().sub(&erf).mul(&Interval::point(0.5))
    } else {
        // Mills-ratio continued fraction; the true continuation value at
        // depth N lies in [0, N/x], so propagating that range downward
        // yields a rigorous enclosure.
        let x = Interval::point(t);
        let mut tail = Interval::new(0.0, (CF_DEPTH as f64) / t);
        for k in (1..=CF_DEPTH).rev() {
            tail = Interval::point(k as f64).div(&x.add(&tail))?;
        }
        phi(&x).div(&x.add(&tail))?
    };
    Ok(raw
        .intersect(&Interval::new(0.0, 1.0))
        .expect("Q enclosure left [0,1]"))
}

/// Enclosure of Q over the whole interval `x`.
///
/// For a point argument the result width is checked against
/// `target_width`; an unreachable target reports precision exhaustion
/// rather than a silently loose enclosure.
pub fn q_tail(x: &Interval, target_width: f64) -> Result<Interval> {
    if !(target_width > 0.0) {
        return Err(Error::Contract("target_width must be positive".into()));
    }
    // Q is decreasing: the image endpoints come from the argument endpoints.
    let at_hi = q_point(x.hi())?;
    let at_lo = q_point(x.lo())?;
    let enclosure = Interval::new(at_hi.lo().min(at_lo.lo()), at_lo.hi().max(at_hi.hi()))
        .intersect(&Interval::new(0.0, 1.0))
        .expect("Q enclosure left [0,1]");
    if x.width() == 0.0 && enclosure.width() > target_width {
        return Err(Error::PrecisionExhausted {
            achieved: enclosure.width(),
            target: target_width,
        });
    }
    Ok(enclosure)
}

/// Enclosure of F(c) = 1/2 - Q(1/sqrt c) / (4 Q(sqrt 2)).
pub fn f_of_c(c: &Interval, target_width: f64) -> Result<Interval> {
    if !(c.lo() > 0.0) {
        return Err(Error::Contract(format!(
            "f_of_c needs c > 0, got {c}"
        )));
    }
    let inv_sqrt_c = Interval::one().div(&c.sqrt()?)?;
    let q_num = q_tail(&inv_sqrt_c, target_width)?;
    let q_den = q_tail(&sqrt2(), target_width)?;
    let ratio = q_num.div(&q_den.mul(&Interval::point(4.0)))?;
    let f = Interval::point(0.5).sub(&ratio);
    if c.width() == 0.0 && f.width() > target_width {
        return Err(Error::PrecisionExhausted {
            achieved: f.width(),
            target: target_width,
        });
    }
    Ok(f)
}

/// Enclosure of the tail bound Q(x) / (4 Q(sqrt 2)).
pub fn bd_bound(x: &Interval) -> Result<Interval> {
    let q_num = q_tail(x, DEFAULT_TARGET_WIDTH)?;
    let q_den = q_tail(&sqrt2(), DEFAULT_TARGET_WIDTH)?;
    q_num.div(&q_den.mul(&Interval::point(4.0)))
}

/// Certified spot-check of the identity Q''(t) + t Q'(t) = 0, with
/// Q' = -phi and Q'' = t phi evaluated from their closed forms.
pub fn q_second_derivative_identity_check(x: &Interval) -> Result<Verdict> {
    if !(x.lo() > 0.0) {
        return Err(Error::Contract("identity check needs x > 0".into()));
    }
    let samples = [x.lo(), x.midpoint(), x.hi()];
    for t in samples {
        let ti = Interval::point(t);
        let density = phi(&ti);
        let q_second = ti.mul(&density);
        let q_prime = density.neg();
        let residual = q_second.add(&ti.mul(&q_prime));
        if !residual.contains(0.0) {
            return Ok(Verdict::Refuted);
        }
        if residual.width() > 1e-9 {
            return Ok(Verdict::Undecided);
        }
    }
    Ok(Verdict::Verified)
}
