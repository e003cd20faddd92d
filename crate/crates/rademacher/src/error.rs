use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// An interval operation left its mathematical domain (division by an
    /// interval containing zero, square root of a negative interval, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// The requested enclosure width cannot be reached at the working
    /// precision. Callers may retry with a looser target.
    #[error("precision exhausted: achieved width {achieved:e}, target {target:e}")]
    PrecisionExhausted { achieved: f64, target: f64 },

    /// The weight vector is too large for the requested operation.
    #[error("capacity exceeded: n = {n}, limit = {limit}")]
    Capacity { n: usize, limit: usize },

    /// A caller violated an operation precondition.
    #[error("contract violation: {0}")]
    Contract(String),

    /// A weight file or numeric literal failed to parse.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
