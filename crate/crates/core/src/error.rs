use thiserror::Error;

/// Broad failure classes; the CLI maps them onto exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// Singular matrices, inadmissible hbar, failed convergence.
    Numerical,
    /// Malformed input: wrong dimensions, bad arguments, caps exceeded.
    Usage,
    /// A well-formed request whose mathematical preconditions do not hold.
    Precondition,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("non-finite value in {0}")]
    NonFinite(String),
    #[error("matrix is not Hermitian (relative defect {defect:.3e})")]
    NotHermitian { defect: f64 },
    #[error("{routine} did not converge after {iterations} iterations")]
    NoConvergence {
        routine: &'static str,
        iterations: usize,
    },
    #[error("function undefined at eigenvalue {eigenvalue:.17e}")]
    Singular { eigenvalue: f64 },
    #[error("map is not linear (spot-check defect {defect:.3e})")]
    Nonlinear { defect: f64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("hbar {hbar:.17e} is inadmissible: w_{k}^2 = {value:.3e}")]
    InadmissibleHbar { hbar: f64, k: usize, value: f64 },
    #[error("closure defect has no sign change on [{lo}, {hi}] (d(lo) = {d_lo:.3e}, d(hi) = {d_hi:.3e})")]
    NoSignChange {
        lo: f64,
        hi: f64,
        d_lo: f64,
        d_hi: f64,
    },
    #[error("surface carries no normal matrices")]
    MissingNormals,
    #[error("{op} requires {expected}, got {found}")]
    WrongDimension {
        op: &'static str,
        expected: String,
        found: String,
    },
    #[error("curved ambient metrics are not supported")]
    CurvedAmbientUnsupported,
    #[error("superoperator size {size} exceeds cap {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("{0} requires a fully periodic grid")]
    NonPeriodicGrid(&'static str),
    #[error("Gram eigenvalue {value:.4} is mid-gap at grid point {point}; refine the grid")]
    GramMidGap { value: f64, point: usize },
    #[error("degenerate geometry: {0}")]
    Degenerate(String),
    #[error("{what}: defect {defect:.3e} exceeds {limit:.3e}")]
    CrossCheck {
        what: &'static str,
        defect: f64,
        limit: f64,
    },
    #[error("no analytic reference for {0}")]
    NoReference(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        use Error::*;
        match self {
            DimensionMismatch { .. }
            | InvalidShape(_)
            | InvalidArgument(_)
            | CapExceeded { .. }
            | Json(_)
            | Io(_) => ErrorClass::Usage,
            MissingNormals
            | WrongDimension { .. }
            | CurvedAmbientUnsupported
            | NonPeriodicGrid(_)
            | NoSignChange { .. }
            | NoReference(_) => ErrorClass::Precondition,
            NonFinite(_)
            | NotHermitian { .. }
            | NoConvergence { .. }
            | Singular { .. }
            | Nonlinear { .. }
            | InadmissibleHbar { .. }
            | GramMidGap { .. }
            | Degenerate(_)
            | CrossCheck { .. } => ErrorClass::Numerical,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
