//! Machine-readable verdicts for certified inequality checks.

use serde::Serialize;

use crate::interval::Interval;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Verified,
    Refuted,
    Undecided,
}

impl Verdict {
    pub fn and(self, other: Verdict) -> Verdict {
        use Verdict::*;
        match (self, other) {
            (Refuted, _) | (_, Refuted) => Refuted,
            (Undecided, _) | (_, Undecided) => Undecided,
            _ => Verified,
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Verified => 0,
            Verdict::Refuted => 1,
            Verdict::Undecided => 2,
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Verified => write!(f, "verified"),
            Verdict::Refuted => write!(f, "refuted"),
            Verdict::Undecided => write!(f, "undecided"),
        }
    }
}

/// One compared pair of enclosures, recorded as evidence.
#[derive(Clone, Debug, Serialize)]
pub struct Evidence {
    pub input: String,
    pub lhs: [String; 2],
    pub rhs: [String; 2],
}

/// Shortest round-trip decimal rendering of a float endpoint.
pub fn fmt_f64(x: f64) -> String {
    if x.is_finite() {
        serde_json::Number::from_f64(x)
            .map(|n| n.to_string())
            .unwrap_or_else(|| format!("{x:e}"))
    } else {
        format!("{x}")
    }
}

pub fn interval_strings(i: &Interval) -> [String; 2] {
    [fmt_f64(i.lo()), fmt_f64(i.hi())]
}

impl Evidence {
    pub fn new(input: impl Into<String>, lhs: &Interval, rhs: &Interval) -> Self {
        Evidence {
            input: input.into(),
            lhs: interval_strings(lhs),
            rhs: interval_strings(rhs),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub claim: String,
    pub verdict: Verdict,
    pub precision: f64,
    pub evidence: Vec<Evidence>,
}

impl VerificationReport {
    pub fn new(claim: impl Into<String>, verdict: Verdict, precision: f64) -> Self {
        VerificationReport {
            claim: claim.into(),
            verdict,
            precision,
            evidence: Vec::new(),
        }
    }

    pub fn with_evidence(mut self, evidence: Vec<Evidence>) -> Self {
        self.evidence = evidence;
        self
    }
}
