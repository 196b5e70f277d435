use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Input outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// An iterative scheme failed to converge within its budget.
    #[error("convergence failure in {context}: {detail}")]
    Convergence { context: &'static str, detail: String },

    /// The requested integral does not converge.
    #[error("divergent integral: {0}")]
    Divergent(String),

    /// Adaptive integration exhausted its budget; `best` is the last estimate
    /// and `err_rel` the estimated relative error actually achieved.
    #[error("tolerance not met (best {best:?}, relative error {err_rel:.3e})")]
    ToleranceNotMet { best: f64, err_rel: f64 },

    /// Quantum numbers invalid for the requested system.
    #[error("invalid quantum numbers: {0}")]
    QuantumNumbers(String),

    /// Invalid run configuration (CLI or programmatic).
    #[error("configuration error: {0}")]
    Config(String),

    /// Cache file I/O failure.
    #[error("cache i/o error: {0}")]
    CacheIo(String),

    /// Output file I/O failure.
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
