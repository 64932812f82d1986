use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A parameter violates its documented invariant (bad range, too few samples, ...).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An input lies outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A geometric construction degenerates (zero-length chord and the like).
    #[error("degenerate geometry: {0}")]
    Geometry(String),

    /// The projected coordinate reverses direction, so no single-valued
    /// inverse exists. Carries the first knot interval where it happens.
    #[error("projection is not monotone over s in [{lo}, {hi}]: the profile folds and has no single-valued inverse")]
    NonMonotone { lo: f64, hi: f64 },

    /// A lookup query outside the table's range.
    #[error("query {value} outside table range [{min}, {max}]")]
    OutOfDomain { value: f64, min: f64, max: f64 },

    /// A computation produced a non-finite intermediate.
    #[error("numeric failure: {0}")]
    Numeric(String),

    /// Malformed serialized data (CSV, PNM headers, ...).
    #[error("format error: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
