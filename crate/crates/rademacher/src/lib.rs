//! Exact distributions of randomly signed sums and certified interval
//! verification of the Gaussian tail bounds built on top of them.

pub mod cli;
pub mod distribution;
pub mod error;
pub mod gaussian;
pub mod interval;
pub mod rational;
pub mod report;
pub mod search;
pub mod verifier;

pub use error::{Error, Result};
pub use interval::Interval;
pub use rational::Rational;
pub use report::{Verdict, VerificationReport};
