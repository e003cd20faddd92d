//! Numerical exploration for weight vectors with small Pr[|S| <= 1].
//!
//! The local search runs in fast floating point; any reported candidate is
//! rationalized, rescaled so the sum of squares is at most 1 exactly, and
//! its probability recomputed exactly by the distribution module. Nothing
//! from the float loop is trusted in the output.

use num::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::distribution::{prob_abs_shifted_le, Shift, Weight, WeightVector};
use crate::error::{Error, Result};
use crate::rational::{rat, rationalize, shrink_to_budget, Rational};

/// Search vectors are fully enumerated in the float surrogate, so the cap is
/// tighter than the counting cap of the distribution module.
pub const MAX_SEARCH_N: usize = 24;

#[derive(Clone, Debug, Serialize)]
pub struct SearchConfig {
    pub n: usize,
    pub restarts: usize,
    pub seed: u64,
    pub step_initial: f64,
    pub step_decay: f64,
    pub step_min: f64,
    pub max_denominator: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            n: 4,
            restarts: 16,
            seed: 0,
            step_initial: 0.3,
            step_decay: 0.9,
            step_min: 0.005,
            max_denominator: 64,
        }
    }
}

impl SearchConfig {
    fn validate(&self) -> Result<()> {
        if self.n == 0 || self.restarts == 0 || self.max_denominator == 0 {
            return Err(Error::Contract("search counts must be positive".into()));
        }
        if !(self.step_decay > 0.0 && self.step_decay < 1.0) {
            return Err(Error::Contract("step decay must lie in (0, 1)".into()));
        }
        if !(self.step_min > 0.0 && self.step_initial >= self.step_min) {
            return Err(Error::Contract("step schedule must be decreasing".into()));
        }
        if self.n > MAX_SEARCH_N {
            return Err(Error::Capacity {
                n: self.n,
                limit: MAX_SEARCH_N,
            });
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct SearchResult {
    pub best: WeightVector,
    pub probability: Rational,
    /// Certified probability per restart, in restart order.
    pub trajectory: Vec<(usize, f64)>,
}

/// Float surrogate for Pr[|S| <= 1]: meet-in-the-middle enumeration with a
/// small tolerance so boundary atoms are counted as they are in the exact
/// inclusive semantics.
fn surrogate_prob(v: &[f64]) -> f64 {
    const EPS: f64 = 1e-9;
    let half = v.len() / 2;
    let sums = |part: &[f64]| -> Vec<f64> {
        let mut out = vec![0.0f64];
        for &w in part {
            let mut next = Vec::with_capacity(out.len() * 2);
            for &s in &out {
                next.push(s + w);
                next.push(s - w);
            }
            out = next;
        }
        out
    };
    let left = sums(&v[..half]);
    let mut right = sums(&v[half..]);
    right.sort_by(|a, b| a.total_cmp(b));
    let mut count = 0usize;
    for &a in &left {
        let lo = right.partition_point(|&s| s < -1.0 - a - EPS);
        let hi = right.partition_point(|&s| s <= 1.0 - a + EPS);
        count += hi - lo;
    }
    count as f64 / (left.len() * right.len()) as f64
}

fn renormalize(v: &mut [f64]) {
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if norm > 0.0 {
        for x in v.iter_mut() {
            *x /= norm;
        }
    }
}

/// One restart of the coordinate-perturbation local search on the unit sphere.
fn local_search(n: usize, seed: u64, config: &SearchConfig) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut v: Vec<f64> = (0..n).map(|_| rng.gen_range(0.05..1.0)).collect();
    renormalize(&mut v);
    let mut best = surrogate_prob(&v);
    let mut step = config.step_initial;
    while step >= config.step_min {
        for _ in 0..8 * n {
            let i = rng.gen_range(0..n);
            let factor = 1.0 + step * rng.gen_range(-1.0..1.0f64);
            let mut cand = v.clone();
            cand[i] = (cand[i] * factor).max(1e-6);
            renormalize(&mut cand);
            let p = surrogate_prob(&cand);
            if p <= best {
                best = p;
                v = cand;
            }
        }
        step *= config.step_decay;
    }
    v
}

/// Continued-fraction rationalization within the denominator bound, then an
/// exact downscale so the sum of squares never exceeds 1.
fn rationalize_candidate(v: &[f64], max_den: u64) -> WeightVector {
    let mut entries: Vec<Rational> = v.iter().map(|&x| rationalize(x, max_den)).collect();
    let s: Rational = entries.iter().map(|e| e * e).sum();
    if s > Rational::one() {
        let q = shrink_to_budget(&s, &Rational::one()).expect("s > 0 since s > 1");
        for e in &mut entries {
            *e *= &q;
        }
    }
    WeightVector::from_rationals(entries)
}

fn certify(v: &WeightVector) -> Result<Rational> {
    let p = prob_abs_shifted_le(v, &Shift::Exact(Rational::zero()), &Rational::one())?;
    Ok(p.exact.expect("rationalized vectors are exact mode"))
}

/// Deterministic randomized minimization of Pr[|S| <= 1] over the unit
/// sphere. Restarts run in parallel with per-restart derived seeds; the
/// reduction keeps the smallest certified probability, breaking ties by
/// restart index.
pub fn minimize_prob(config: &SearchConfig) -> Result<SearchResult> {
    config.validate()?;
    let candidates = (0..config.restarts)
        .into_par_iter()
        .map(|r| {
            let float_best = local_search(config.n, config.seed.wrapping_add(r as u64), config);
            let vector = rationalize_candidate(&float_best, config.max_denominator);
            let prob = certify(&vector)?;
            Ok((r, vector, prob))
        })
        .collect::<Result<Vec<_>>>()?;
    let trajectory = candidates
        .iter()
        .map(|(r, _, p)| (*r, crate::rational::rational_to_f64(p)))
        .collect();
    let (_, best, probability) = candidates
        .into_iter()
        .min_by(|(ra, _, pa), (rb, _, pb)| pa.cmp(pb).then(ra.cmp(rb)))
        .expect("restarts >= 1");
    Ok(SearchResult {
        best,
        probability,
        trajectory,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Uniform,
    TwoBlock,
    Dyadic,
}

impl std::str::FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "uniform" => Ok(Family::Uniform),
            "two-block" => Ok(Family::TwoBlock),
            "dyadic" => Ok(Family::Dyadic),
            other => Err(format!(
                "unknown family '{other}' (expected uniform, two-block, dyadic)"
            )),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SweepRow {
    pub label: String,
    pub n: usize,
    /// Exact probability when the family member is exactly enumerable.
    pub exact: Option<Rational>,
    pub lo: f64,
    pub hi: f64,
}

/// Certified probabilities across a parameterized family, sorted by
/// probability (lower bound first, label as deterministic tiebreak).
pub fn sweep_family(family: Family, n: usize) -> Result<Vec<SweepRow>> {
    if n == 0 {
        return Err(Error::Contract("sweep needs n >= 1".into()));
    }
    if n > MAX_SEARCH_N {
        return Err(Error::Capacity {
            n,
            limit: MAX_SEARCH_N,
        });
    }
    let mut members: Vec<(String, usize, WeightVector)> = Vec::new();
    match family {
        Family::Uniform => {
            for m in 1..=n {
                members.push((format!("uniform n={m}"), m, WeightVector::uniform(m)?));
            }
        }
        Family::TwoBlock => {
            // (a, ..., a, b) with m-1 copies of a and b chosen so the sum of
            // squares is exactly 1.
            for m in 2..=n {
                for j in 1..8i64 {
                    let a = rat(j, 8);
                    let rest = Rational::one() - rat(m as i64 - 1, 1) * &a * &a;
                    if !rest.is_positive() {
                        continue;
                    }
                    let mut entries = vec![Weight::Rational(a.clone()); m - 1];
                    entries.push(Weight::sqrt_of(rest, false)?);
                    members.push((
                        format!("two-block n={m} a={j}/8"),
                        m,
                        WeightVector::new(entries),
                    ));
                }
            }
        }
        Family::Dyadic => {
            // Uniform magnitude k/32 with the largest k keeping the sum of
            // squares at most 1.
            for m in 1..=n {
                let mut k = 32i64;
                while rat(m as i64, 1) * rat(k, 32) * rat(k, 32) > Rational::one() {
                    k -= 1;
                }
                if k == 0 {
                    continue;
                }
                let entries = vec![rat(k, 32); m];
                members.push((
                    format!("dyadic n={m} v={k}/32"),
                    m,
                    WeightVector::from_rationals(entries),
                ));
            }
        }
    }
    let mut rows = members
        .into_par_iter()
        .map(|(label, m, v)| {
            let p = prob_abs_shifted_le(&v, &Shift::Exact(Rational::zero()), &Rational::one())?;
            Ok(SweepRow {
                label,
                n: m,
                exact: p.exact,
                lo: p.bounds.lo(),
                hi: p.bounds.hi(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by(|a, b| a.lo.total_cmp(&b.lo).then_with(|| a.label.cmp(&b.label)));
    Ok(rows)
}
