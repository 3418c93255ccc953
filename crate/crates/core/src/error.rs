use thiserror::Error;

/// Errors raised by the solver, reference generators and run harness.
#[derive(Debug, Error)]
pub enum Error {
    #[error("non-physical state at cell {cell}: rho = {rho}, p = {p}")]
    NonPhysicalState { cell: usize, rho: f64, p: f64 },

    #[error("non-finite value in field at cell {cell}")]
    NonFinite { cell: usize },

    #[error("unknown problem `{0}`")]
    UnknownProblem(String),

    #[error("root finding did not converge after {iterations} iterations at x = {x}")]
    NoConvergence { x: f64, iterations: usize },

    #[error("Riemann problem generates vacuum (p* collapsed below {threshold:e})")]
    VacuumState { threshold: f64 },

    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    #[error("run failed at t = {t} (step {step}): {source}")]
    RunFailed {
        t: f64,
        step: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("configuration error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
