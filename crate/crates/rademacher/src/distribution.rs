//! Exact and certified distributions of S = sum of +/- v_i over all 2^n
//! sign assignments.
//!
//! Weights are exact rationals, symbolic square roots of rationals, or
//! interval enclosures carrying their exact square. Probability queries
//! count via meet-in-the-middle over coalesced half-sums instead of
//! materializing 2^n atoms. Whenever every comparison in a query can be
//! settled exactly (rational sums, or sums that are integer multiples of a
//! common sqrt), the result is an exact rational; otherwise the query
//! returns certified bounds and counts the atoms it could not classify.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::rational::{exact_sqrt, format_rational, parse_rational, Rational};

/// Meet-in-the-middle counting limit.
pub const MAX_COUNTING_N: usize = 40;
/// Full atom materialization limit.
pub const MAX_MATERIALIZE_N: usize = 24;
/// Cap on coalesced half-sum pair products in interval mode.
const MAX_INTERVAL_PAIRS: u128 = 1 << 26;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Interval,
}

/// A single weight entry.
#[derive(Clone, Debug, PartialEq)]
pub enum Weight {
    Rational(Rational),
    /// +/- sqrt(radicand); constructed only when the root is irrational.
    SqrtRational { negative: bool, radicand: Rational },
    /// Interval enclosure with its exact square (from normalize_for_bd).
    Scaled { enclosure: Interval, square: Rational },
}

impl Weight {
    /// Builds a sqrt weight, collapsing perfect squares to exact rationals.
    pub fn sqrt_of(radicand: Rational, negative: bool) -> Result<Weight> {
        if radicand.is_negative() {
            return Err(Error::Contract(format!(
                "sqrt weight needs nonnegative radicand, got {}",
                format_rational(&radicand)
            )));
        }
        if let Some(root) = exact_sqrt(&radicand) {
            let root = if negative { -root } else { root };
            return Ok(Weight::Rational(root));
        }
        Ok(Weight::SqrtRational { negative, radicand })
    }

    /// The exact square of the weight (available in every representation).
    pub fn square(&self) -> Rational {
        match self {
            Weight::Rational(r) => r * r,
            Weight::SqrtRational { radicand, .. } => radicand.clone(),
            Weight::Scaled { square, .. } => square.clone(),
        }
    }

    pub fn enclosure(&self) -> Interval {
        match self {
            Weight::Rational(r) => Interval::from_rational(r),
            Weight::SqrtRational { negative, radicand } => {
                let root = Interval::from_rational(radicand)
                    .sqrt()
                    .expect("nonnegative radicand");
                if *negative {
                    root.neg()
                } else {
                    root
                }
            }
            Weight::Scaled { enclosure, .. } => *enclosure,
        }
    }

    pub fn as_exact(&self) -> Option<&Rational> {
        match self {
            Weight::Rational(r) => Some(r),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Weight::Rational(r) => r.is_zero(),
            Weight::SqrtRational { radicand, .. } => radicand.is_zero(),
            Weight::Scaled { square, .. } => square.is_zero(),
        }
    }
}

impl std::fmt::Display for Weight {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Weight::Rational(r) => write!(f, "{}", format_rational(r)),
            Weight::SqrtRational { negative, radicand } => {
                let sign = if *negative { "-" } else { "" };
                write!(f, "{sign}sqrt({})", format_rational(radicand))
            }
            Weight::Scaled { enclosure, .. } => write!(f, "{enclosure}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct WeightVector {
    entries: Vec<Weight>,
}

impl WeightVector {
    pub fn new(entries: Vec<Weight>) -> Self {
        WeightVector { entries }
    }

    pub fn from_rationals(values: Vec<Rational>) -> Self {
        WeightVector {
            entries: values.into_iter().map(Weight::Rational).collect(),
        }
    }

    /// Uniform vector (1/sqrt n, ..., 1/sqrt n).
    pub fn uniform(n: usize) -> Result<Self> {
        if n == 0 {
            return Ok(WeightVector::new(Vec::new()));
        }
        let radicand = Rational::new(1.into(), (n as i64).into());
        let entries = (0..n)
            .map(|_| Weight::sqrt_of(radicand.clone(), false))
            .collect::<Result<Vec<_>>>()?;
        Ok(WeightVector::new(entries))
    }

    /// Parses the weight file format: one weight per line, each "p/q",
    /// a finite decimal, or "sqrt(p/q)" / "-sqrt(p/q)"; '#' starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            entries.push(parse_weight(line).map_err(|message| Error::Parse {
                line: idx + 1,
                message,
            })?);
        }
        Ok(WeightVector::new(entries))
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Weight] {
        &self.entries
    }

    pub fn mode(&self) -> Mode {
        if self
            .entries
            .iter()
            .all(|w| matches!(w, Weight::Rational(_)))
        {
            Mode::Exact
        } else {
            Mode::Interval
        }
    }

    /// Exact sum of squared weights, available in every mode.
    pub fn sum_squares(&self) -> Rational {
        self.entries.iter().map(|w| w.square()).sum()
    }

    pub fn exact_entries(&self) -> Option<Vec<Rational>> {
        self.entries
            .iter()
            .map(|w| w.as_exact().cloned())
            .collect()
    }

    /// If every nonzero entry is +/- sqrt(r) for one common radicand r,
    /// returns (r, count of such entries).
    fn common_sqrt_radicand(&self) -> Option<(Rational, usize)> {
        let mut radicand: Option<Rational> = None;
        let mut count = 0usize;
        for w in &self.entries {
            if w.is_zero() {
                continue;
            }
            match w {
                Weight::SqrtRational { radicand: r, .. } => {
                    match &radicand {
                        None => radicand = Some(r.clone()),
                        Some(prev) if prev == r => {}
                        _ => return None,
                    }
                    count += 1;
                }
                _ => return None,
            }
        }
        radicand.map(|r| (r, count))
    }
}

fn parse_weight(token: &str) -> std::result::Result<Weight, String> {
    let (negative, body) = match token.strip_prefix('-') {
        Some(rest) if rest.trim_start().starts_with("sqrt(") => (true, rest.trim_start()),
        _ => (false, token),
    };
    if let Some(inner) = body.strip_prefix("sqrt(") {
        let inner = inner
            .strip_suffix(')')
            .ok_or_else(|| format!("unterminated sqrt in {token:?}"))?;
        let radicand = parse_rational(inner)?;
        if radicand.is_negative() {
            return Err(format!("negative radicand in {token:?}"));
        }
        return Weight::sqrt_of(radicand, negative).map_err(|e| e.to_string());
    }
    parse_rational(token).map(Weight::Rational)
}

/// Offset value in shifted-event queries: exact, symbolic sqrt, or enclosure.
#[derive(Clone, Debug)]
pub enum Shift {
    Exact(Rational),
    Sqrt { negative: bool, radicand: Rational },
    Enclosure(Interval),
}

impl Shift {
    pub fn parse(token: &str) -> std::result::Result<Shift, String> {
        match parse_weight(token.trim())? {
            Weight::Rational(r) => Ok(Shift::Exact(r)),
            Weight::SqrtRational { negative, radicand } => Ok(Shift::Sqrt { negative, radicand }),
            Weight::Scaled { .. } => unreachable!("parser never yields scaled weights"),
        }
    }

    pub fn enclosure(&self) -> Interval {
        match self {
            Shift::Exact(r) => Interval::from_rational(r),
            Shift::Sqrt { negative, radicand } => {
                let root = Interval::from_rational(radicand)
                    .sqrt()
                    .expect("nonnegative radicand");
                if *negative {
                    root.neg()
                } else {
                    root
                }
            }
            Shift::Enclosure(i) => *i,
        }
    }
}

impl From<Rational> for Shift {
    fn from(r: Rational) -> Self {
        Shift::Exact(r)
    }
}

impl std::fmt::Display for Shift {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Shift::Exact(r) => write!(f, "{}", format_rational(r)),
            Shift::Sqrt { negative, radicand } => {
                let sign = if *negative { "-" } else { "" };
                write!(f, "{sign}sqrt({})", format_rational(radicand))
            }
            Shift::Enclosure(i) => write!(f, "{i}"),
        }
    }
}

// Exact comparison of k*sqrt(r) (k rational, r rational >= 0) with c.
fn cmp_scaled_sqrt_vs_rational(k: &Rational, r: &Rational, c: &Rational) -> Ordering {
    let lhs_sign = if r.is_zero() || k.is_zero() {
        0
    } else if k.is_negative() {
        -1
    } else {
        1
    };
    let rhs_sign = if c.is_zero() {
        0
    } else if c.is_negative() {
        -1
    } else {
        1
    };
    match lhs_sign.cmp(&rhs_sign) {
        Ordering::Equal => {}
        other => return other,
    }
    // Same sign: compare squares, flipping for the negative branch.
    let lhs_sq = (k * k) * r;
    let rhs_sq = c * c;
    if lhs_sign >= 0 {
        lhs_sq.cmp(&rhs_sq)
    } else {
        rhs_sq.cmp(&lhs_sq)
    }
}

// Exact comparison of k*sqrt(r) with sign * sqrt(s).
fn cmp_scaled_sqrt_vs_sqrt(
    k: &Rational,
    r: &Rational,
    rhs_negative: bool,
    s: &Rational,
) -> Ordering {
    let lhs_sign = if r.is_zero() || k.is_zero() {
        0
    } else if k.is_negative() {
        -1
    } else {
        1
    };
    let rhs_sign = if s.is_zero() {
        0
    } else if rhs_negative {
        -1
    } else {
        1
    };
    match lhs_sign.cmp(&rhs_sign) {
        Ordering::Equal => {}
        other => return other,
    }
    let lhs_sq = (k * k) * r;
    if lhs_sign >= 0 {
        lhs_sq.cmp(s)
    } else {
        s.cmp(&lhs_sq)
    }
}

/// Multiset of signed-sum values with multiplicities.
#[derive(Clone, Debug)]
pub enum Atoms {
    Exact(Vec<(Rational, u128)>),
    Enclosed(Vec<(Interval, u128)>),
}

#[derive(Clone, Debug)]
pub struct SignedSumDistribution {
    pub atoms: Atoms,
    pub total: u128,
    pub n: usize,
}

/// Materializes the full coalesced distribution of S.
pub fn enumerate_distribution(v: &WeightVector) -> Result<SignedSumDistribution> {
    let n = v.n();
    if n > MAX_MATERIALIZE_N {
        return Err(Error::Capacity {
            n,
            limit: MAX_MATERIALIZE_N,
        });
    }
    let total: u128 = 1u128 << n;
    if v.mode() == Mode::Exact {
        let mut sums: BTreeMap<Rational, u128> = BTreeMap::new();
        sums.insert(Rational::zero(), 1);
        for w in v.entries() {
            let r = w.as_exact().expect("exact mode");
            let mut next: BTreeMap<Rational, u128> = BTreeMap::new();
            for (s, c) in &sums {
                *next.entry(s + r).or_insert(0) += c;
                *next.entry(s - r).or_insert(0) += c;
            }
            sums = next;
        }
        Ok(SignedSumDistribution {
            atoms: Atoms::Exact(sums.into_iter().collect()),
            total,
            n,
        })
    } else {
        let enclosures: Vec<Interval> = v.entries().iter().map(|w| w.enclosure()).collect();
        let atoms = interval_fold(&enclosures);
        Ok(SignedSumDistribution {
            atoms: Atoms::Enclosed(atoms),
            total,
            n,
        })
    }
}

// Sort key for interval atoms: total order on (lo, hi) bit patterns.
fn f64_key(x: f64) -> u64 {
    let b = x.to_bits();
    if b >> 63 == 1 {
        !b
    } else {
        b | 0x8000_0000_0000_0000
    }
}

fn interval_fold(enclosures: &[Interval]) -> Vec<(Interval, u128)> {
    let mut sums: BTreeMap<(u64, u64), (Interval, u128)> = BTreeMap::new();
    sums.insert(
        (f64_key(0.0), f64_key(0.0)),
        (Interval::zero(), 1),
    );
    for w in enclosures {
        let mut next: BTreeMap<(u64, u64), (Interval, u128)> = BTreeMap::new();
        for (s, c) in sums.values() {
            for candidate in [s.add(w), s.sub(w)] {
                let key = (f64_key(candidate.lo()), f64_key(candidate.hi()));
                next.entry(key).or_insert((candidate, 0)).1 += c;
            }
        }
        sums = next;
    }
    sums.into_values().collect()
}

/// Integrity audit of an exact distribution: total mass and mirror symmetry.
#[derive(Clone, Debug, Serialize)]
pub struct MassCheckSummary {
    pub pass: bool,
    pub total: String,
    pub atom_count: usize,
    pub issues: Vec<String>,
}

pub fn quantile_mass_check(d: &SignedSumDistribution) -> Result<MassCheckSummary> {
    let atoms = match &d.atoms {
        Atoms::Exact(a) => a,
        Atoms::Enclosed(_) => {
            return Err(Error::Contract(
                "quantile_mass_check requires an exact-mode distribution".into(),
            ))
        }
    };
    let mut issues = Vec::new();
    let mass: u128 = atoms.iter().map(|(_, c)| c).sum();
    if mass != d.total {
        issues.push(format!("mass {mass} != total {}", d.total));
    }
    for window in atoms.windows(2) {
        if window[0].0 >= window[1].0 {
            issues.push("atom values not strictly increasing".into());
            break;
        }
    }
    let by_value: BTreeMap<&Rational, u128> = atoms.iter().map(|(v, c)| (v, *c)).collect();
    for (value, count) in atoms {
        let mirrored = -value.clone();
        if by_value.get(&mirrored) != Some(count) {
            issues.push(format!(
                "multiplicity of {} does not mirror",
                format_rational(value)
            ));
        }
    }
    Ok(MassCheckSummary {
        pass: issues.is_empty(),
        total: d.total.to_string(),
        atom_count: atoms.len(),
        issues,
    })
}

/// Probability of an event, exact when decidable.
#[derive(Clone, Debug)]
pub struct ProbabilityResult {
    pub exact: Option<Rational>,
    pub bounds: Interval,
    pub ambiguous_atoms: usize,
}

impl ProbabilityResult {
    fn from_exact(r: Rational) -> Self {
        let bounds = Interval::from_rational(&r);
        ProbabilityResult {
            exact: Some(r),
            bounds,
            ambiguous_atoms: 0,
        }
    }
}

// -------- exact meet-in-the-middle counting --------

fn exact_half_sums(ws: &[Rational]) -> Vec<(Rational, u128)> {
    let mut sums: BTreeMap<Rational, u128> = BTreeMap::new();
    sums.insert(Rational::zero(), 1);
    for w in ws {
        let mut next: BTreeMap<Rational, u128> = BTreeMap::new();
        for (s, c) in &sums {
            *next.entry(s + w).or_insert(0) += c;
            *next.entry(s - w).or_insert(0) += c;
        }
        sums = next;
    }
    sums.into_iter().collect()
}

/// Window bound for exact counting: a value the sums compare against
/// exactly, which may be rational or a signed square root.
#[derive(Clone, Debug)]
pub enum Cut {
    Rational(Rational),
    Sqrt { negative: bool, radicand: Rational },
}

/// Counts sign assignments with a+b in [lo, hi] (inclusive; None = open end)
/// by two-pointer sweep over sorted coalesced half-sums.
fn count_in_window(
    a_half: &[(Rational, u128)],
    b_half: &[(Rational, u128)],
    lo: Option<&Cut>,
    hi: Option<&Cut>,
) -> u128 {
    let sum_leq = |sum: &Rational, cut: &Cut| -> bool {
        match cut {
            Cut::Rational(c) => sum <= c,
            Cut::Sqrt { negative, radicand } => {
                let sign = if *negative { -1 } else { 1 };
                let k = Rational::from_integer(sign.into());
                // sum <= sign*sqrt(radicand)  <=>  sign*sqrt(radicand) >= sum
                cmp_scaled_sqrt_vs_rational(&k, radicand, sum) != Ordering::Less
            }
        }
    };
    let sum_ge = |sum: &Rational, cut: &Cut| -> bool {
        match cut {
            Cut::Rational(c) => sum >= c,
            Cut::Sqrt { negative, radicand } => {
                let sign = if *negative { -1 } else { 1 };
                let k = Rational::from_integer(sign.into());
                cmp_scaled_sqrt_vs_rational(&k, radicand, sum) != Ordering::Greater
            }
        }
    };
    let mut prefix: Vec<u128> = Vec::with_capacity(b_half.len() + 1);
    prefix.push(0);
    for (_, c) in b_half {
        let last = *prefix.last().unwrap();
        prefix.push(last + c);
    }
    let mut idx_hi = b_half.len();
    let mut idx_lo = b_half.len();
    let mut count = 0u128;
    for (a, ca) in a_half {
        if let Some(cut) = hi {
            while idx_hi > 0 {
                let sum = a + &b_half[idx_hi - 1].0;
                if sum_leq(&sum, cut) {
                    break;
                }
                idx_hi -= 1;
            }
        }
        let lo_count = match lo {
            None => 0,
            Some(cut) => {
                while idx_lo > 0 {
                    let sum = a + &b_half[idx_lo - 1].0;
                    if !sum_ge(&sum, cut) {
                        break;
                    }
                    idx_lo -= 1;
                }
                prefix[idx_lo]
            }
        };
        let hi_count = prefix[idx_hi];
        if hi_count > lo_count {
            count += ca * (hi_count - lo_count);
        }
    }
    count
}

// -------- interval-mode counting --------

fn interval_half_sums(ws: &[Interval]) -> Vec<(Interval, u128)> {
    interval_fold(ws)
}

struct IntervalCounts {
    definite: u128,
    possible: u128,
    ambiguous_atoms: usize,
}

fn count_window_intervals(
    a_half: &[(Interval, u128)],
    b_half: &[(Interval, u128)],
    lo: Option<Interval>,
    hi: Option<Interval>,
) -> Result<IntervalCounts> {
    let pairs = (a_half.len() as u128) * (b_half.len() as u128);
    if pairs > MAX_INTERVAL_PAIRS {
        return Err(Error::Capacity {
            n: pairs as usize,
            limit: MAX_INTERVAL_PAIRS as usize,
        });
    }
    let mut definite = 0u128;
    let mut possible = 0u128;
    let mut ambiguous_atoms = 0usize;
    for (a, ca) in a_half {
        for (b, cb) in b_half {
            let s = a.add(b);
            let in_lo_definite = lo.map_or(true, |l| s.lo() >= l.hi());
            let in_hi_definite = hi.map_or(true, |h| s.hi() <= h.lo());
            let in_lo_possible = lo.map_or(true, |l| s.hi() >= l.lo());
            let in_hi_possible = hi.map_or(true, |h| s.lo() <= h.hi());
            let c = ca * cb;
            if in_lo_definite && in_hi_definite {
                definite += c;
                possible += c;
            } else if in_lo_possible && in_hi_possible {
                possible += c;
                ambiguous_atoms += 1;
            }
        }
    }
    Ok(IntervalCounts {
        definite,
        possible,
        ambiguous_atoms,
    })
}

fn ratio_of_counts(count: u128, total: u128) -> Rational {
    Rational::new(
        num::BigInt::from(count),
        num::BigInt::from(total),
    )
}

fn bounds_from_counts(definite: u128, possible: u128, total: u128) -> Interval {
    let lo = Interval::from_rational(&ratio_of_counts(definite, total));
    let hi = Interval::from_rational(&ratio_of_counts(possible, total));
    Interval::new(lo.lo(), hi.hi())
}

// Splits per the first-ceil(n/2)-entries convention.
fn split_halves<T: Clone>(entries: &[T]) -> (Vec<T>, Vec<T>) {
    let mid = entries.len().div_ceil(2);
    (entries[..mid].to_vec(), entries[mid..].to_vec())
}

fn check_counting_capacity(n: usize) -> Result<()> {
    if n > MAX_COUNTING_N {
        return Err(Error::Capacity {
            n,
            limit: MAX_COUNTING_N,
        });
    }
    Ok(())
}

/// Counts sign assignments of the integer sum T = sum of +/- 1 over `n`
/// terms with predicate on k = T, via binomial multiplicities.
fn binomial_scan(n: usize, mut keep: impl FnMut(i64) -> bool) -> u128 {
    let mut count = 0u128;
    let mut choose: u128 = 1; // C(n, 0)
    for j in 0..=n {
        let k = n as i64 - 2 * j as i64;
        if keep(k) {
            count += choose;
        }
        if j < n {
            choose = choose * (n - j) as u128 / (j + 1) as u128;
        }
    }
    count
}

enum QueryPlan {
    ExactRationals(Vec<Rational>),
    CommonSqrt { radicand: Rational, terms: usize },
    Intervals(Vec<Interval>),
}

fn plan_query(v: &WeightVector) -> QueryPlan {
    let nonzero: Vec<&Weight> = v.entries().iter().filter(|w| !w.is_zero()).collect();
    if nonzero
        .iter()
        .all(|w| matches!(w, Weight::Rational(_)))
    {
        return QueryPlan::ExactRationals(
            nonzero
                .iter()
                .map(|w| w.as_exact().unwrap().clone())
                .collect(),
        );
    }
    if let Some((radicand, terms)) = v.common_sqrt_radicand() {
        return QueryPlan::CommonSqrt { radicand, terms };
    }
    QueryPlan::Intervals(nonzero.iter().map(|w| w.enclosure()).collect())
}

/// Pr[ lo <= Y <= hi ] for Y = sum of +/- v_i, with optional exact cuts and
/// interval fallbacks for each end.
fn prob_window(
    v: &WeightVector,
    lo_cut: Option<Cut>,
    hi_cut: Option<Cut>,
    lo_enc: Option<Interval>,
    hi_enc: Option<Interval>,
    exact_cuts_available: bool,
) -> Result<ProbabilityResult> {
    check_counting_capacity(v.n())?;
    match plan_query(v) {
        QueryPlan::ExactRationals(ws) if exact_cuts_available => {
            let n = ws.len();
            let total = 1u128 << n;
            let (first, second) = split_halves(&ws);
            let a = exact_half_sums(&first);
            let b = exact_half_sums(&second);
            let count = count_in_window(&a, &b, lo_cut.as_ref(), hi_cut.as_ref());
            Ok(ProbabilityResult::from_exact(ratio_of_counts(count, total)))
        }
        QueryPlan::CommonSqrt { radicand, terms } if exact_cuts_available => {
            // Y = sqrt(radicand) * T with T a sum of n unit signs; every
            // comparison against the cuts reduces to exact surd arithmetic.
            let total = 1u128 << terms;
            let keep = |k: i64| -> bool {
                let kq = Rational::from_integer(k.into());
                let above_lo = match &lo_cut {
                    None => true,
                    Some(Cut::Rational(c)) => {
                        cmp_scaled_sqrt_vs_rational(&kq, &radicand, c) != Ordering::Less
                    }
                    Some(Cut::Sqrt { negative, radicand: s }) => {
                        cmp_scaled_sqrt_vs_sqrt(&kq, &radicand, *negative, s) != Ordering::Less
                    }
                };
                if !above_lo {
                    return false;
                }
                match &hi_cut {
                    None => true,
                    Some(Cut::Rational(c)) => {
                        cmp_scaled_sqrt_vs_rational(&kq, &radicand, c) != Ordering::Greater
                    }
                    Some(Cut::Sqrt { negative, radicand: s }) => {
                        cmp_scaled_sqrt_vs_sqrt(&kq, &radicand, *negative, s) != Ordering::Greater
                    }
                }
            };
            let count = binomial_scan(terms, keep);
            Ok(ProbabilityResult::from_exact(ratio_of_counts(count, total)))
        }
        plan => {
            let ws = match plan {
                QueryPlan::Intervals(ws) => ws,
                QueryPlan::ExactRationals(ws) => {
                    ws.iter().map(Interval::from_rational).collect()
                }
                QueryPlan::CommonSqrt { .. } => v
                    .entries()
                    .iter()
                    .filter(|w| !w.is_zero())
                    .map(|w| w.enclosure())
                    .collect(),
            };
            let n = ws.len();
            let total = 1u128 << n;
            let (first, second) = split_halves(&ws);
            let a = interval_half_sums(&first);
            let b = interval_half_sums(&second);
            let counts = count_window_intervals(&a, &b, lo_enc, hi_enc)?;
            let exact = if counts.ambiguous_atoms == 0 {
                Some(ratio_of_counts(counts.definite, total))
            } else {
                None
            };
            Ok(ProbabilityResult {
                exact,
                bounds: bounds_from_counts(counts.definite, counts.possible, total),
                ambiguous_atoms: counts.ambiguous_atoms,
            })
        }
    }
}

/// Pr[ |x + Y| <= t ] with inclusive boundary.
pub fn prob_abs_shifted_le(
    v: &WeightVector,
    x: &Shift,
    t: &Rational,
) -> Result<ProbabilityResult> {
    if t.is_negative() {
        return Err(Error::Contract("threshold t must be nonnegative".into()));
    }
    // |x + Y| <= t  <=>  -t - x <= Y <= t - x.
    let (lo_cut, hi_cut, exact_ok) = match x {
        Shift::Exact(x) => (
            Some(Cut::Rational(-t - x)),
            Some(Cut::Rational(t - x)),
            true,
        ),
        Shift::Sqrt { negative, radicand } if t.is_zero() => (
            Some(Cut::Sqrt {
                negative: !*negative,
                radicand: radicand.clone(),
            }),
            Some(Cut::Sqrt {
                negative: !*negative,
                radicand: radicand.clone(),
            }),
            true,
        ),
        _ => (None, None, false),
    };
    let x_enc = x.enclosure();
    let t_enc = Interval::from_rational(t);
    let lo_enc = t_enc.neg().sub(&x_enc);
    let hi_enc = t_enc.sub(&x_enc);
    prob_window(v, lo_cut, hi_cut, Some(lo_enc), Some(hi_enc), exact_ok)
}

/// Pr[ S >= x ] with inclusive boundary.
pub fn prob_tail_ge(v: &WeightVector, x: &Shift) -> Result<ProbabilityResult> {
    let (lo_cut, exact_ok) = match x {
        Shift::Exact(r) => (Some(Cut::Rational(r.clone())), true),
        Shift::Sqrt { negative, radicand } => (
            Some(Cut::Sqrt {
                negative: *negative,
                radicand: radicand.clone(),
            }),
            true,
        ),
        Shift::Enclosure(_) => (None, false),
    };
    let lo_enc = x.enclosure();
    prob_window(v, lo_cut, None, Some(lo_enc), None, exact_ok)
}

/// Transform of the drift-lemma proof: w_i = -v_i / (sqrt(c) (1 + x)).
pub fn normalize_for_bd(v: &WeightVector, c: &Rational, x: &Rational) -> Result<WeightVector> {
    if !c.is_positive() {
        return Err(Error::Contract("normalize_for_bd needs c > 0".into()));
    }
    let one = Rational::one();
    if x.abs() > one {
        return Err(Error::Contract("normalize_for_bd needs |x| <= 1".into()));
    }
    let one_plus_x = &one + x;
    if !one_plus_x.is_positive() {
        return Err(Error::Contract("normalize_for_bd needs x > -1".into()));
    }
    let budget = c * (&one + &x.abs()) * (&one + &x.abs());
    if v.sum_squares() > budget {
        return Err(Error::Contract(
            "sum of squares exceeds c (1 + |x|)^2".into(),
        ));
    }
    let scale_sq = c * &one_plus_x * &one_plus_x;
    let denom = Interval::from_rational(c)
        .sqrt()?
        .mul(&Interval::from_rational(&one_plus_x));
    let entries = v
        .entries()
        .iter()
        .map(|w| -> Result<Weight> {
            Ok(Weight::Scaled {
                enclosure: w.enclosure().neg().div(&denom)?,
                square: w.square() / &scale_sq,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(WeightVector::new(entries))
}
