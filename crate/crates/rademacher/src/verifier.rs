//! Certified machine checks of the tail-bound statements on enumerable
//! instances, plus the finite lemma checks that are fully decidable.
//!
//! Comparison semantics: "A >= B certified" means A.lo >= B.hi. Overlapping
//! enclosures yield an undecided verdict, never a silent pass.

use num::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::distribution::{
    enumerate_distribution, prob_abs_shifted_le, prob_tail_ge, Atoms, Shift, WeightVector,
};
use crate::error::{Error, Result};
use crate::gaussian::{bd_bound, f_of_c, DEFAULT_TARGET_WIDTH};
use crate::interval::{inv_sqrt_2pi, Interval};
use crate::rational::{format_rational, rat, rational_from_f64, shrink_to_budget, Rational};
use crate::report::{Evidence, Verdict, VerificationReport};

/// The headline constant the main conclusion is checked against.
pub fn main_constant() -> Rational {
    rat(427685, 1_000_000)
}

fn undecided_on_precision(claim: &str, precision: f64, err: Error) -> VerificationReport {
    let mut report = VerificationReport::new(claim, Verdict::Undecided, precision);
    report.evidence.push(Evidence {
        input: format!("precision failure: {err}"),
        lhs: [String::new(), String::new()],
        rhs: [String::new(), String::new()],
    });
    report
}

/// Certified comparison lhs >= rhs at interval level.
fn certify_ge(lhs: &Interval, rhs: &Interval) -> Verdict {
    if lhs.lo() >= rhs.hi() {
        Verdict::Verified
    } else if lhs.hi() < rhs.lo() {
        Verdict::Refuted
    } else {
        Verdict::Undecided
    }
}

/// F(1/4) > 0.427685, the headline inequality.
pub fn verify_main_constant(precision: f64) -> VerificationReport {
    let claim = "main-constant";
    let quarter = Interval::from_rational(&rat(1, 4));
    let f = match f_of_c(&quarter, precision) {
        Ok(f) => f,
        Err(err) => return undecided_on_precision(claim, precision, err),
    };
    let threshold = Interval::from_rational(&main_constant());
    let verdict = if f.lo() > threshold.hi() {
        Verdict::Verified
    } else if f.hi() <= threshold.lo() {
        Verdict::Refuted
    } else {
        Verdict::Undecided
    };
    VerificationReport::new(claim, verdict, precision)
        .with_evidence(vec![Evidence::new("F(1/4) vs 0.427685", &f, &threshold)])
}

/// Instance check of the Gaussian tail bound Pr[S >= x] <= Q(x)/(4 Q(sqrt 2)).
pub fn verify_bd_on_instance(
    v: &WeightVector,
    x: &Shift,
    precision: f64,
) -> Result<VerificationReport> {
    let claim = "bd-instance";
    if v.sum_squares() > Rational::one() {
        return Err(Error::Contract(
            "bd instance needs sum of squares <= 1".into(),
        ));
    }
    let p = prob_tail_ge(v, x)?;
    let bound = match bd_bound(&x.enclosure()) {
        Ok(b) => b,
        Err(err) => return Ok(undecided_on_precision(claim, precision, err)),
    };
    // The bound is a proved inequality; a certified exceedance could only
    // mean an implementation bug, and is reported as refuted.
    let verdict = if p.bounds.lo() > bound.hi() {
        Verdict::Refuted
    } else {
        Verdict::Verified
    };
    let input = format!("n={} x={}", v.n(), x);
    Ok(VerificationReport::new(claim, verdict, precision)
        .with_evidence(vec![Evidence::new(input, &p.bounds, &bound)]))
}

/// Instance check of the drift lemma Pr[|x + Y| <= 1] >= F(c).
pub fn verify_lemma1_on_instance(
    v: &WeightVector,
    c: &Rational,
    x: &Rational,
    precision: f64,
) -> Result<VerificationReport> {
    let claim = "lemma1-instance";
    if x.abs() > Rational::one() {
        return Err(Error::Contract("lemma1 needs |x| <= 1".into()));
    }
    let one_plus = Rational::one() + x.abs();
    let budget = c * &one_plus * &one_plus;
    if v.sum_squares() > budget {
        return Err(Error::Contract(
            "lemma1 needs sum of squares <= c (1 + |x|)^2".into(),
        ));
    }
    let p = prob_abs_shifted_le(v, &Shift::Exact(x.clone()), &Rational::one())?;
    let f = match f_of_c(&Interval::from_rational(c), precision) {
        Ok(f) => f,
        Err(err) => return Ok(undecided_on_precision(claim, precision, err)),
    };
    let verdict = certify_ge(&p.bounds, &f);
    let input = format!("n={} c={} x={}", v.n(), format_rational(c), format_rational(x));
    Ok(VerificationReport::new(claim, verdict, precision)
        .with_evidence(vec![Evidence::new(input, &p.bounds, &f)]))
}

/// The weighted-average inequality checked for every K in 2..=k_max, with
/// the exact rational identities for c1 and c2 asserted along the way.
pub fn verify_lemma2_finite(k_max: u32, precision: f64) -> Result<VerificationReport> {
    let claim = "lemma2-finite";
    if k_max < 2 {
        return Err(Error::Contract("lemma2 needs k_max >= 2".into()));
    }
    let mut verdict = Verdict::Verified;
    let mut evidence = Vec::new();
    for k in 2..=k_max {
        let odd = rat(2 * k as i64 + 1, 1);
        let odd_sq = &odd * &odd;
        let kp1 = rat(k as i64 + 1, 1);
        let c1 = (&kp1 * &kp1 - rat(k as i64, 1)) / &odd_sq;
        let c2 = (&kp1 * &kp1 - rat(k as i64 + 2, 1)) / &odd_sq;
        // c1 = 1/4 + (3/4)/(2K+1)^2 and c2 = 1/4 - (5/4)/(2K+1)^2 exactly.
        if &c1 - rat(1, 4) != rat(3, 4) / &odd_sq || rat(1, 4) - &c2 != rat(5, 4) / &odd_sq {
            return Ok(VerificationReport::new(claim, Verdict::Refuted, precision)
                .with_evidence(vec![Evidence {
                    input: format!("K={k}: rational identity for c1/c2 failed"),
                    lhs: [format_rational(&c1), format_rational(&c2)],
                    rhs: [String::new(), String::new()],
                }]));
        }
        let weight = Rational::new(1.into(), num::BigInt::from(2u8).pow(k - 1));
        let f1 = match f_of_c(&Interval::from_rational(&c1), precision) {
            Ok(f) => f,
            Err(err) => return Ok(undecided_on_precision(claim, precision, err)),
        };
        let f2 = match f_of_c(&Interval::from_rational(&c2), precision) {
            Ok(f) => f,
            Err(err) => return Ok(undecided_on_precision(claim, precision, err)),
        };
        let rhs = match f_of_c(&Interval::from_rational(&rat(1, 4)), precision) {
            Ok(f) => f,
            Err(err) => return Ok(undecided_on_precision(claim, precision, err)),
        };
        let w = Interval::from_rational(&weight);
        let cw = Interval::from_rational(&(Rational::one() - &weight));
        let lhs = w.mul(&f1).add(&cw.mul(&f2));
        let local = certify_ge(&lhs, &rhs);
        verdict = verdict.and(local);
        if local != Verdict::Verified || k <= 3 || k == k_max {
            evidence.push(Evidence::new(format!("K={k}"), &lhs, &rhs));
        }
    }
    Ok(VerificationReport::new(claim, verdict, precision).with_evidence(evidence))
}

/// Inequality (1): (1/2) F(1/4 + 3 xi/4) + (1/2) F(1/4 - 5 xi/4) >= F(1/4).
pub fn verify_xi_inequality(xi: &Rational, precision: f64) -> Result<VerificationReport> {
    let claim = "xi-inequality";
    if xi.is_negative() {
        return Err(Error::Contract("xi must be nonnegative".into()));
    }
    let c_minus = rat(1, 4) - rat(5, 4) * xi;
    if !c_minus.is_positive() {
        return Err(Error::Contract("xi must keep 1/4 - 5 xi/4 positive".into()));
    }
    if xi.is_zero() {
        // Both sides are the same expression; certified structurally rather
        // than numerically, since equal intervals can never certify >=.
        let report = VerificationReport::new(claim, Verdict::Verified, precision).with_evidence(
            vec![Evidence {
                input: "xi=0: both sides identical by substitution".into(),
                lhs: [String::new(), String::new()],
                rhs: [String::new(), String::new()],
            }],
        );
        return Ok(report);
    }
    let c_plus = rat(1, 4) + rat(3, 4) * xi;
    let f_plus = match f_of_c(&Interval::from_rational(&c_plus), precision) {
        Ok(f) => f,
        Err(err) => return Ok(undecided_on_precision(claim, precision, err)),
    };
    let f_minus = match f_of_c(&Interval::from_rational(&c_minus), precision) {
        Ok(f) => f,
        Err(err) => return Ok(undecided_on_precision(claim, precision, err)),
    };
    let rhs = match f_of_c(&Interval::from_rational(&rat(1, 4)), precision) {
        Ok(f) => f,
        Err(err) => return Ok(undecided_on_precision(claim, precision, err)),
    };
    let half = Interval::point(0.5);
    let lhs = half.mul(&f_plus).add(&half.mul(&f_minus));
    let verdict = certify_ge(&lhs, &rhs);
    Ok(VerificationReport::new(claim, verdict, precision)
        .with_evidence(vec![Evidence::new(
            format!("xi={}", format_rational(xi)),
            &lhs,
            &rhs,
        )]))
}

/// Default covering grid of (1e-4, 1/3] for the convexity check.
pub fn default_convexity_grid() -> Vec<(Rational, Rational)> {
    let a = rat(1, 10_000);
    let b = rat(1, 3);
    let cells = 600i64;
    let step = (&b - &a) / rat(cells, 1);
    (0..cells)
        .map(|i| (&a + &step * rat(i, 1), &a + &step * rat(i + 1, 1)))
        .collect()
}

/// Certifies d^2/dx^2 Q(x^{-1/2}) = -(1/4) Q'(x^{-1/2}) x^{-7/2} (1 - 3x) > 0
/// on each grid cell (>= 0 on a cell touching x = 1/3).
///
/// Interior cells are certified in the log domain,
/// log E = -1/(2x) - log(4 sqrt(2 pi)) - (7/2) log x + log(1 - 3x),
/// whose finite enclosure proves strict positivity even where E itself
/// underflows the float range.
pub fn verify_convexity_q_invsqrt(
    cells: &[(Rational, Rational)],
    precision: f64,
) -> Result<VerificationReport> {
    let claim = "convexity-q-invsqrt";
    let third = rat(1, 3);
    let mut verdict = Verdict::Verified;
    let mut evidence = Vec::new();
    let log_norm = Interval::point(4.0)
        .div(&inv_sqrt_2pi())
        .and_then(|i| i.ln())?;
    for (idx, (a, b)) in cells.iter().enumerate() {
        if !a.is_positive() || b > &third || a >= b {
            return Err(Error::Contract(format!(
                "convexity grid cell [{}, {}] outside (0, 1/3]",
                format_rational(a),
                format_rational(b)
            )));
        }
        let x = Interval::new(
            Interval::from_rational(a).lo(),
            Interval::from_rational(b).hi(),
        );
        let one_minus_3b = Rational::one() - rat(3, 1) * b;
        let one_minus_3a = Rational::one() - rat(3, 1) * a;
        let lin = Interval::new(
            Interval::from_rational(&one_minus_3b).lo().max(0.0),
            Interval::from_rational(&one_minus_3a).hi(),
        );
        let boundary_cell = one_minus_3b.is_zero();
        if boundary_cell {
            // The factor (1 - 3x) vanishes at the endpoint; only E >= 0 is
            // claimed here, and every factor is nonnegative.
            let half_inv_x = x.recip()?.mul(&Interval::point(0.5));
            let density_part = half_inv_x.neg().exp();
            let x_pow = x.recip()?.powi(7).sqrt()?;
            let value = Interval::point(0.25)
                .mul(&inv_sqrt_2pi())
                .mul(&density_part)
                .mul(&x_pow)
                .mul(&lin);
            let local = if value.lo() >= 0.0 {
                Verdict::Verified
            } else {
                Verdict::Undecided
            };
            verdict = verdict.and(local);
            evidence.push(Evidence::new(
                format!(
                    "cell [{}, {}] (boundary, E >= 0)",
                    format_rational(a),
                    format_rational(b)
                ),
                &value,
                &Interval::zero(),
            ));
            continue;
        }
        let log_e = x
            .recip()?
            .mul(&Interval::point(0.5))
            .neg()
            .sub(&log_norm)
            .sub(&Interval::point(3.5).mul(&x.ln()?))
            .add(&lin.ln()?);
        let local = if log_e.lo().is_finite() && log_e.hi().is_finite() {
            Verdict::Verified
        } else {
            Verdict::Undecided
        };
        verdict = verdict.and(local);
        if local != Verdict::Verified || idx == 0 || idx + 1 == cells.len() {
            evidence.push(Evidence::new(
                format!("cell [{}, {}] log E", format_rational(a), format_rational(b)),
                &log_e,
                &Interval::zero(),
            ));
        }
    }
    Ok(VerificationReport::new(claim, verdict, precision).with_evidence(evidence))
}

/// The four properties of F behind the main conclusion: bounded by 1/2,
/// nonincreasing, the drift lemma, and the weighted-average inequality.
pub fn verify_f_properties(c_grid: &[Rational], precision: f64) -> Result<VerificationReport> {
    let claim = "f-properties";
    if c_grid.is_empty() || c_grid.iter().any(|c| !c.is_positive()) {
        return Err(Error::Contract("grid must be positive and nonempty".into()));
    }
    let mut sorted = c_grid.to_vec();
    sorted.sort();
    let mut verdict = Verdict::Verified;
    let mut evidence = Vec::new();
    let half = Interval::point(0.5);
    let mut values = Vec::new();
    for c in &sorted {
        let f = match f_of_c(&Interval::from_rational(c), precision) {
            Ok(f) => f,
            Err(err) => return Ok(undecided_on_precision(claim, precision, err)),
        };
        let local = if f.hi() <= 0.5 {
            Verdict::Verified
        } else {
            Verdict::Refuted
        };
        verdict = verdict.and(local);
        evidence.push(Evidence::new(
            format!("bounded: F({}) <= 1/2", format_rational(c)),
            &f,
            &half,
        ));
        values.push((c.clone(), f));
    }
    for pair in values.windows(2) {
        let (ca, fa) = &pair[0];
        let (cb, fb) = &pair[1];
        if ca == cb {
            continue;
        }
        let local = if fa.lo() > fb.hi() {
            Verdict::Verified
        } else {
            Verdict::Undecided
        };
        verdict = verdict.and(local);
        evidence.push(Evidence::new(
            format!(
                "decreasing: F({}) > F({})",
                format_rational(ca),
                format_rational(cb)
            ),
            fa,
            fb,
        ));
    }
    if sorted.len() > 1 {
        // Property 3: drift lemma on canonical enumerable instances.
        let lemma1_instances: Vec<(WeightVector, Rational, Rational)> = vec![
            (
                WeightVector::from_rationals(vec![Rational::zero(), Rational::zero()]),
                rat(1, 4),
                rat(1, 2),
            ),
            (
                WeightVector::from_rationals(vec![rat(1, 2); 4]),
                rat(1, 4),
                Rational::one(),
            ),
            (
                WeightVector::from_rationals(vec![rat(3, 5), rat(4, 5)]),
                rat(1, 4),
                Rational::one(),
            ),
        ];
        for (v, c, x) in &lemma1_instances {
            let sub = verify_lemma1_on_instance(v, c, x, precision)?;
            verdict = verdict.and(sub.verdict);
            evidence.extend(sub.evidence);
        }
        // Property 4: the weighted-average inequality on small K.
        let sub = verify_lemma2_finite(10, precision)?;
        verdict = verdict.and(sub.verdict);
        evidence.push(Evidence {
            input: format!("lemma2 K<=10: {}", sub.verdict),
            lhs: [String::new(), String::new()],
            rhs: [String::new(), String::new()],
        });
    }
    Ok(VerificationReport::new(claim, verdict, precision).with_evidence(evidence))
}

/// Instance check of the main conclusion Pr[|S| <= 1] > 0.427685.
pub fn verify_main_conclusion(v: &WeightVector, precision: f64) -> Result<VerificationReport> {
    let claim = "main-conclusion-instance";
    if v.sum_squares() > Rational::one() {
        return Err(Error::Contract(
            "main conclusion needs sum of squares <= 1".into(),
        ));
    }
    let p = prob_abs_shifted_le(v, &Shift::Exact(Rational::zero()), &Rational::one())?;
    let threshold = main_constant();
    let verdict = match &p.exact {
        Some(exact) => {
            if exact > &threshold {
                Verdict::Verified
            } else {
                Verdict::Refuted
            }
        }
        None => match rational_from_f64(p.bounds.lo()) {
            Some(lo) if lo > threshold => Verdict::Verified,
            _ => match rational_from_f64(p.bounds.hi()) {
                Some(hi) if hi <= threshold => Verdict::Refuted,
                _ => Verdict::Undecided,
            },
        },
    };
    let input = match &p.exact {
        Some(exact) => format!("n={} Pr[|S|<=1]={}", v.n(), format_rational(exact)),
        None => format!("n={} ambiguous_atoms={}", v.n(), p.ambiguous_atoms),
    };
    Ok(
        VerificationReport::new(claim, verdict, precision).with_evidence(vec![Evidence::new(
            input,
            &p.bounds,
            &Interval::from_rational(&threshold),
        )]),
    )
}

// -------- randomized stress batteries --------

/// Deterministic random rational vector with sum of squares <= 1.
pub fn random_unit_budget_vector(rng: &mut ChaCha8Rng, max_n: usize) -> WeightVector {
    let n = rng.gen_range(1..=max_n);
    let mut entries: Vec<Rational> = (0..n)
        .map(|_| {
            let den = rng.gen_range(1..=12i64);
            let num = rng.gen_range(-den..=den);
            rat(num, den)
        })
        .collect();
    let s: Rational = entries.iter().map(|v| v * v).sum();
    if s > Rational::one() {
        let q = shrink_to_budget(&s, &Rational::one()).expect("s > 0");
        for v in &mut entries {
            *v *= &q;
        }
    }
    WeightVector::from_rationals(entries)
}

fn merge_stress(claim: &str, precision: f64, reports: Vec<VerificationReport>) -> VerificationReport {
    let mut verdict = Verdict::Verified;
    let mut evidence = Vec::new();
    let total = reports.len();
    for r in reports {
        verdict = verdict.and(r.verdict);
        if r.verdict != Verdict::Verified {
            evidence.extend(r.evidence);
        }
    }
    evidence.push(Evidence {
        input: format!("{total} randomized instances, all others verified"),
        lhs: [String::new(), String::new()],
        rhs: [String::new(), String::new()],
    });
    VerificationReport::new(claim, verdict, precision).with_evidence(evidence)
}

/// Random tail-bound instances; x is drawn from atom values and midpoints.
pub fn bd_stress(count: usize, seed: u64, precision: f64) -> Result<VerificationReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut instances = Vec::with_capacity(count);
    for _ in 0..count {
        let v = random_unit_budget_vector(&mut rng, 14);
        let d = enumerate_distribution(&v)?;
        let atoms = match &d.atoms {
            Atoms::Exact(a) => a,
            Atoms::Enclosed(_) => unreachable!("random vectors are exact"),
        };
        let idx = rng.gen_range(0..atoms.len());
        let x = if rng.gen_bool(0.5) || idx + 1 == atoms.len() {
            atoms[idx].0.clone()
        } else {
            (&atoms[idx].0 + &atoms[idx + 1].0) / rat(2, 1)
        };
        instances.push((v, x));
    }
    let reports = instances
        .par_iter()
        .map(|(v, x)| verify_bd_on_instance(v, &Shift::Exact(x.clone()), precision))
        .collect::<Result<Vec<_>>>()?;
    Ok(merge_stress("bd-stress", precision, reports))
}

/// Random drift-lemma instances with sum of squares = c (1 + |x|)^2 exactly.
pub fn lemma1_stress(count: usize, seed: u64, precision: f64) -> Result<VerificationReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut instances = Vec::with_capacity(count);
    while instances.len() < count {
        let v = random_unit_budget_vector(&mut rng, 14);
        let den = rng.gen_range(1..=8i64);
        let x = rat(rng.gen_range(-den..=den), den);
        let one_plus = Rational::one() + x.abs();
        let s = v.sum_squares();
        if s.is_zero() {
            instances.push((v, rat(1, 4), x));
            continue;
        }
        let mut entries = v.exact_entries().expect("exact mode");
        let mut c = &s / (&one_plus * &one_plus);
        while c > Rational::one() {
            for e in &mut entries {
                *e /= rat(2, 1);
            }
            c /= rat(4, 1);
        }
        instances.push((WeightVector::from_rationals(entries), c, x));
    }
    let reports = instances
        .par_iter()
        .map(|(v, c, x)| verify_lemma1_on_instance(v, c, x, precision))
        .collect::<Result<Vec<_>>>()?;
    Ok(merge_stress("lemma1-stress", precision, reports))
}

// -------- consolidated battery --------

#[derive(Clone, Debug, Serialize)]
pub struct FullReport {
    pub overall: Verdict,
    pub precision: f64,
    pub components: Vec<VerificationReport>,
}

pub const REPORT_BD_SEED: u64 = 0xBD5EED;
pub const REPORT_LEMMA1_SEED: u64 = 0x1E44A1;
pub const REPORT_STRESS_COUNT: usize = 500;

/// Runs the full verification battery with a fixed seed. Deterministic:
/// identical inputs produce identical reports.
pub fn report_all(precision: f64) -> Result<FullReport> {
    let mut components = Vec::new();
    components.push(verify_main_constant(precision));
    let grid = [
        rat(1, 100),
        rat(1, 10),
        rat(1, 5),
        rat(1, 4),
        rat(7, 25),
        rat(1, 2),
        Rational::one(),
    ];
    components.push(verify_f_properties(&grid, precision)?);
    components.push(verify_lemma2_finite(60, precision)?);
    // xi grid k/1000 for 0 <= k <= 111, covering [0, 1/9].
    {
        let mut verdict = Verdict::Verified;
        let mut evidence = Vec::new();
        for k in 0..=111i64 {
            let sub = verify_xi_inequality(&rat(k, 1000), precision)?;
            verdict = verdict.and(sub.verdict);
            if sub.verdict != Verdict::Verified || k == 0 || k == 40 || k == 111 {
                evidence.extend(sub.evidence);
            }
        }
        for xi in [rat(1, 25), rat(1, 9)] {
            let sub = verify_xi_inequality(&xi, precision)?;
            verdict = verdict.and(sub.verdict);
            evidence.extend(sub.evidence);
        }
        components
            .push(VerificationReport::new("xi-grid", verdict, precision).with_evidence(evidence));
    }
    components.push(verify_convexity_q_invsqrt(
        &default_convexity_grid(),
        precision,
    )?);
    components.push(bd_stress(REPORT_STRESS_COUNT, REPORT_BD_SEED, precision)?);
    components.push(lemma1_stress(
        REPORT_STRESS_COUNT,
        REPORT_LEMMA1_SEED,
        precision,
    )?);
    let overall = components
        .iter()
        .fold(Verdict::Verified, |acc, r| acc.and(r.verdict));
    Ok(FullReport {
        overall,
        precision,
        components,
    })
}

pub fn default_precision() -> f64 {
    DEFAULT_TARGET_WIDTH
}
