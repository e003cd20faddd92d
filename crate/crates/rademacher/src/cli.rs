//! Command-line surface: batch verification, enumeration queries, search,
//! and consolidated report generation.
//!
//! Exit status contract: 0 success/verified, 1 refuted, 2 undecided,
//! 3 usage error, 4 capacity or precision error. JSON output (--json) is
//! the source of truth; the default text output renders the same content.
//! Rationals serialize as {"num", "den"} decimal strings, intervals as
//! {"lo", "hi"} shortest round-trip decimal strings.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use num::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::distribution::{
    enumerate_distribution, prob_abs_shifted_le, prob_tail_ge, quantile_mass_check, Atoms, Shift,
    WeightVector,
};
use crate::error::Error;
use crate::gaussian::{bd_bound, f_of_c, DEFAULT_TARGET_WIDTH};
use crate::interval::Interval;
use crate::rational::{format_rational, parse_rational, Rational};
use crate::report::{fmt_f64, VerificationReport};
use crate::search::{minimize_prob, sweep_family, Family, SearchConfig};
use crate::verifier;

pub const EXIT_VERIFIED: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_UNDECIDED: i32 = 2;
pub const EXIT_USAGE: i32 = 3;
pub const EXIT_CAPACITY: i32 = 4;

#[derive(Parser)]
#[command(
    name = "rademacher",
    version,
    about = "Exact distributions of randomly signed sums and certified tail-bound verification"
)]
pub struct Cli {
    /// Emit JSON instead of the text rendering.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker thread count (performance knob only; output is identical).
    #[arg(long, global = true, env = "RADEMACHER_THREADS")]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Enumerate the full signed-sum distribution of a weight vector.
    Dist {
        #[arg(long)]
        weights: PathBuf,
    },
    /// Pr[|offset + S| <= threshold], exact when decidable.
    Prob {
        #[arg(long)]
        weights: PathBuf,
        /// Rational offset added to the sum (default 0).
        #[arg(long)]
        offset: Option<String>,
        /// Rational threshold (default 1).
        #[arg(long)]
        threshold: Option<String>,
    },
    /// Pr[S >= x] for a rational or sqrt-rational x.
    Tail {
        #[arg(long)]
        weights: PathBuf,
        #[arg(long)]
        x: String,
    },
    /// Certified enclosure of F(c) = 1/2 - Q(1/sqrt c)/(4 Q(sqrt 2)).
    Fvalue {
        #[arg(long)]
        c: String,
        /// Target enclosure width (default 1e-12).
        #[arg(long)]
        width: Option<f64>,
    },
    /// Certified enclosure of the tail bound Q(x)/(4 Q(sqrt 2)).
    Bound {
        #[arg(long)]
        x: String,
    },
    /// Run a certified verification check; exit code reflects the verdict.
    Verify {
        #[command(subcommand)]
        check: VerifyCmd,
    },
    /// Randomized minimization of Pr[|S| <= 1] with exact certification.
    Search {
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, default_value_t = 16)]
        restarts: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Certified probabilities across a weight-vector family.
    Sweep {
        /// One of: uniform, two-block, dyadic.
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
    },
    /// Full verification battery as one consolidated report.
    Report {
        #[arg(long)]
        precision: Option<f64>,
    },
}

#[derive(Subcommand)]
pub enum VerifyCmd {
    /// F(1/4) > 0.427685.
    MainConstant,
    /// F bounded by 1/2, decreasing, and its two lemmas on a small grid.
    FProperties,
    /// Randomized drift-lemma stress battery (fixed seed).
    Lemma1,
    /// Weighted-average inequality for every K in 2..=kmax.
    Lemma2 {
        #[arg(long, default_value_t = 60)]
        kmax: u32,
    },
    /// (1/2) F(1/4 + 3 xi/4) + (1/2) F(1/4 - 5 xi/4) >= F(1/4).
    Xi {
        #[arg(long)]
        value: String,
    },
    /// Convexity of Q(x^{-1/2}) on a covering grid of (1e-4, 1/3].
    Convexity,
    /// Randomized tail-bound stress battery (fixed seed).
    Bd,
    /// Pr[|S| <= 1] > 0.427685 for the given weight vector.
    Main {
        #[arg(long)]
        weights: PathBuf,
    },
}

fn error_exit(e: &Error) -> i32 {
    match e {
        Error::Capacity { .. } | Error::PrecisionExhausted { .. } => EXIT_CAPACITY,
        _ => EXIT_USAGE,
    }
}

fn fail(e: &Error) -> i32 {
    eprintln!("error: {e}");
    error_exit(e)
}

fn usage(msg: impl std::fmt::Display) -> i32 {
    eprintln!("error: {msg}");
    EXIT_USAGE
}

fn json_rational(r: &Rational) -> Value {
    json!({"num": r.numer().to_string(), "den": r.denom().to_string()})
}

fn json_interval(i: &Interval) -> Value {
    json!({"lo": fmt_f64(i.lo()), "hi": fmt_f64(i.hi())})
}

fn print_value(v: &Value) {
    println!("{}", serde_json::to_string(v).expect("serializable"));
}

fn load_weights(path: &PathBuf) -> Result<WeightVector, i32> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format_args!("cannot read {}: {e}", path.display())))?;
    WeightVector::parse(&text).map_err(|e| fail(&e))
}

fn parse_rat_flag(name: &str, raw: &str) -> Result<Rational, i32> {
    parse_rational(raw).map_err(|e| usage(format_args!("--{name}: {e}")))
}

fn parse_shift_flag(raw: &str) -> Result<Shift, i32> {
    Shift::parse(raw).map_err(|e| usage(format_args!("--x: {e}")))
}

fn render_report(report: &VerificationReport, as_json: bool) -> i32 {
    if as_json {
        print_value(&serde_json::to_value(report).expect("serializable"));
    } else {
        println!("claim: {}", report.claim);
        println!("verdict: {}", report.verdict);
        println!("precision: {}", fmt_f64(report.precision));
        for e in &report.evidence {
            if e.lhs[0].is_empty() {
                println!("  {}", e.input);
            } else {
                println!(
                    "  {} | lhs [{}, {}] | rhs [{}, {}]",
                    e.input, e.lhs[0], e.lhs[1], e.rhs[0], e.rhs[1]
                );
            }
        }
    }
    report.verdict.exit_code()
}

fn probability_json(p: &crate::distribution::ProbabilityResult) -> Value {
    json!({
        "exact": p.exact.as_ref().map(json_rational),
        "bounds": json_interval(&p.bounds),
        "ambiguous_atoms": p.ambiguous_atoms,
    })
}

fn probability_text(p: &crate::distribution::ProbabilityResult) -> String {
    match &p.exact {
        Some(e) => format_rational(e),
        None => format!(
            "[{}, {}] ({} ambiguous atoms)",
            fmt_f64(p.bounds.lo()),
            fmt_f64(p.bounds.hi()),
            p.ambiguous_atoms
        ),
    }
}

fn cmd_dist(weights: &PathBuf, as_json: bool) -> i32 {
    let v = match load_weights(weights) {
        Ok(v) => v,
        Err(code) => return code,
    };
    let d = match enumerate_distribution(&v) {
        Ok(d) => d,
        Err(e) => return fail(&e),
    };
    let total = Rational::from_integer(d.total.into());
    match &d.atoms {
        Atoms::Exact(atoms) => {
            let mass = match quantile_mass_check(&d) {
                Ok(m) => m,
                Err(e) => return fail(&e),
            };
            if as_json {
                let rows: Vec<Value> = atoms
                    .iter()
                    .map(|(value, count)| {
                        let p = Rational::from_integer((*count).into()) / &total;
                        json!({
                            "value": json_rational(value),
                            "count": count.to_string(),
                            "probability": json_rational(&p),
                        })
                    })
                    .collect();
                print_value(&json!({
                    "n": d.n,
                    "mode": "exact",
                    "total": d.total.to_string(),
                    "atoms": rows,
                    "mass_check": {
                        "pass": mass.pass,
                        "atom_count": mass.atom_count,
                        "issues": mass.issues,
                    },
                }));
            } else {
                println!("n = {}, {} atoms, total {}", d.n, atoms.len(), d.total);
                for (value, count) in atoms {
                    let p = Rational::from_integer((*count).into()) / &total;
                    println!(
                        "{:>16}  count {:>8}  probability {}",
                        format_rational(value),
                        count,
                        format_rational(&p)
                    );
                }
                println!("mass check: {}", if mass.pass { "pass" } else { "FAIL" });
            }
        }
        Atoms::Enclosed(atoms) => {
            if as_json {
                let rows: Vec<Value> = atoms
                    .iter()
                    .map(|(value, count)| {
                        let p = Rational::from_integer((*count).into()) / &total;
                        json!({
                            "value": json_interval(value),
                            "count": count.to_string(),
                            "probability": json_rational(&p),
                        })
                    })
                    .collect();
                print_value(&json!({
                    "n": d.n,
                    "mode": "interval",
                    "total": d.total.to_string(),
                    "atoms": rows,
                }));
            } else {
                println!(
                    "n = {}, {} atom enclosures, total {}",
                    d.n,
                    atoms.len(),
                    d.total
                );
                for (value, count) in atoms {
                    let p = Rational::from_integer((*count).into()) / &total;
                    println!(
                        "[{}, {}]  count {:>8}  probability {}",
                        fmt_f64(value.lo()),
                        fmt_f64(value.hi()),
                        count,
                        format_rational(&p)
                    );
                }
            }
        }
    }
    EXIT_VERIFIED
}

fn cmd_prob(
    weights: &PathBuf,
    offset: Option<&str>,
    threshold: Option<&str>,
    as_json: bool,
) -> i32 {
    let v = match load_weights(weights) {
        Ok(v) => v,
        Err(code) => return code,
    };
    let offset = match offset {
        Some(raw) => match parse_rat_flag("offset", raw) {
            Ok(r) => r,
            Err(code) => return code,
        },
        None => Rational::zero(),
    };
    let threshold = match threshold {
        Some(raw) => match parse_rat_flag("threshold", raw) {
            Ok(r) => r,
            Err(code) => return code,
        },
        None => Rational::one(),
    };
    if threshold.is_negative() {
        return usage("--threshold must be nonnegative");
    }
    let p = match prob_abs_shifted_le(&v, &Shift::Exact(offset), &threshold) {
        Ok(p) => p,
        Err(e) => return fail(&e),
    };
    if as_json {
        print_value(&probability_json(&p));
    } else {
        println!("{}", probability_text(&p));
    }
    EXIT_VERIFIED
}

fn cmd_tail(weights: &PathBuf, x: &str, as_json: bool) -> i32 {
    let v = match load_weights(weights) {
        Ok(v) => v,
        Err(code) => return code,
    };
    let x = match parse_shift_flag(x) {
        Ok(s) => s,
        Err(code) => return code,
    };
    let p = match prob_tail_ge(&v, &x) {
        Ok(p) => p,
        Err(e) => return fail(&e),
    };
    if as_json {
        print_value(&probability_json(&p));
    } else {
        println!("{}", probability_text(&p));
    }
    EXIT_VERIFIED
}

fn cmd_fvalue(c: &str, width: Option<f64>, as_json: bool) -> i32 {
    let c = match parse_rat_flag("c", c) {
        Ok(r) => r,
        Err(code) => return code,
    };
    if !c.is_positive() {
        return usage("--c must be positive");
    }
    let width = width.unwrap_or(DEFAULT_TARGET_WIDTH);
    let f = match f_of_c(&Interval::from_rational(&c), width) {
        Ok(f) => f,
        Err(e) => return fail(&e),
    };
    if as_json {
        print_value(&json!({
            "c": json_rational(&c),
            "f": json_interval(&f),
            "precision": fmt_f64(width),
        }));
    } else {
        println!("F({}) in [{}, {}]", format_rational(&c), fmt_f64(f.lo()), fmt_f64(f.hi()));
    }
    EXIT_VERIFIED
}

fn cmd_bound(x: &str, as_json: bool) -> i32 {
    let x = match parse_shift_flag(x) {
        Ok(s) => s,
        Err(code) => return code,
    };
    let b = match bd_bound(&x.enclosure()) {
        Ok(b) => b,
        Err(e) => return fail(&e),
    };
    if as_json {
        print_value(&json!({
            "x": x.to_string(),
            "bound": json_interval(&b),
        }));
    } else {
        println!("bound({x}) in [{}, {}]", fmt_f64(b.lo()), fmt_f64(b.hi()));
    }
    EXIT_VERIFIED
}

fn cmd_verify(check: &VerifyCmd, as_json: bool) -> i32 {
    let precision = DEFAULT_TARGET_WIDTH;
    let report = match check {
        VerifyCmd::MainConstant => Ok(verifier::verify_main_constant(precision)),
        VerifyCmd::FProperties => {
            let grid = [
                crate::rational::rat(1, 100),
                crate::rational::rat(1, 10),
                crate::rational::rat(1, 5),
                crate::rational::rat(1, 4),
                crate::rational::rat(7, 25),
                crate::rational::rat(1, 2),
                Rational::one(),
            ];
            verifier::verify_f_properties(&grid, precision)
        }
        VerifyCmd::Lemma1 => verifier::lemma1_stress(
            verifier::REPORT_STRESS_COUNT,
            verifier::REPORT_LEMMA1_SEED,
            precision,
        ),
        VerifyCmd::Lemma2 { kmax } => verifier::verify_lemma2_finite(*kmax, precision),
        VerifyCmd::Xi { value } => match parse_rat_flag("value", value) {
            Ok(xi) => verifier::verify_xi_inequality(&xi, precision),
            Err(code) => return code,
        },
        VerifyCmd::Convexity => {
            verifier::verify_convexity_q_invsqrt(&verifier::default_convexity_grid(), precision)
        }
        VerifyCmd::Bd => verifier::bd_stress(
            verifier::REPORT_STRESS_COUNT,
            verifier::REPORT_BD_SEED,
            precision,
        ),
        VerifyCmd::Main { weights } => {
            let v = match load_weights(weights) {
                Ok(v) => v,
                Err(code) => return code,
            };
            verifier::verify_main_conclusion(&v, precision)
        }
    };
    match report {
        Ok(report) => render_report(&report, as_json),
        Err(e) => fail(&e),
    }
}

fn cmd_search(n: usize, restarts: usize, seed: u64, as_json: bool) -> i32 {
    let config = SearchConfig {
        n,
        restarts,
        seed,
        ..SearchConfig::default()
    };
    let result = match minimize_prob(&config) {
        Ok(r) => r,
        Err(e) => return fail(&e),
    };
    let entries = result
        .best
        .exact_entries()
        .expect("search vectors are exact");
    if as_json {
        let trajectory: Vec<Value> = result
            .trajectory
            .iter()
            .map(|(r, p)| json!({"restart": r, "probability": fmt_f64(*p)}))
            .collect();
        print_value(&json!({
            "n": n,
            "restarts": restarts,
            "seed": seed,
            "probability": json_rational(&result.probability),
            "weights": entries.iter().map(json_rational).collect::<Vec<_>>(),
            "trajectory": trajectory,
        }));
    } else {
        let rendered: Vec<String> = entries.iter().map(format_rational).collect();
        println!("best vector: ({})", rendered.join(", "));
        println!(
            "certified Pr[|S| <= 1] = {}",
            format_rational(&result.probability)
        );
    }
    EXIT_VERIFIED
}

fn cmd_sweep(family: &str, n: usize, as_json: bool) -> i32 {
    let family: Family = match family.parse() {
        Ok(f) => f,
        Err(e) => return usage(e),
    };
    let rows = match sweep_family(family, n) {
        Ok(r) => r,
        Err(e) => return fail(&e),
    };
    if as_json {
        let rows: Vec<Value> = rows
            .iter()
            .map(|r| {
                json!({
                    "label": r.label,
                    "n": r.n,
                    "exact": r.exact.as_ref().map(json_rational),
                    "bounds": {"lo": fmt_f64(r.lo), "hi": fmt_f64(r.hi)},
                })
            })
            .collect();
        print_value(&Value::Array(rows));
    } else {
        for r in &rows {
            match &r.exact {
                Some(e) => println!("{:<24} {}", r.label, format_rational(e)),
                None => println!("{:<24} [{}, {}]", r.label, fmt_f64(r.lo), fmt_f64(r.hi)),
            }
        }
    }
    EXIT_VERIFIED
}

fn cmd_report(precision: Option<f64>, as_json: bool) -> i32 {
    let precision = precision.unwrap_or(DEFAULT_TARGET_WIDTH);
    if !(precision > 0.0) {
        return usage("--precision must be positive");
    }
    let full = match verifier::report_all(precision) {
        Ok(f) => f,
        Err(e) => return fail(&e),
    };
    if as_json {
        print_value(&serde_json::to_value(&full).expect("serializable"));
    } else {
        println!("overall: {}", full.overall);
        for component in &full.components {
            println!("  {}: {}", component.claim, component.verdict);
        }
    }
    full.overall.exit_code()
}

/// Parses arguments and dispatches; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{e}");
                    EXIT_VERIFIED
                }
                _ => {
                    eprint!("{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    if let Some(threads) = cli.threads {
        if threads == 0 {
            return usage("--threads must be positive");
        }
        // Pure performance knob; ignore failure if a pool already exists.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    match &cli.command {
        Command::Dist { weights } => cmd_dist(weights, cli.json),
        Command::Prob {
            weights,
            offset,
            threshold,
        } => cmd_prob(weights, offset.as_deref(), threshold.as_deref(), cli.json),
        Command::Tail { weights, x } => cmd_tail(weights, x, cli.json),
        Command::Fvalue { c, width } => cmd_fvalue(c, *width, cli.json),
        Command::Bound { x } => cmd_bound(x, cli.json),
        Command::Verify { check } => cmd_verify(check, cli.json),
        Command::Search { n, restarts, seed } => cmd_search(*n, *restarts, *seed, cli.json),
        Command::Sweep { family, n } => cmd_sweep(family, *n, cli.json),
        Command::Report { precision } => cmd_report(*precision, cli.json),
    }
}
