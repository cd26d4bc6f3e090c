use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("random construction failed: {0}")]
    ConstructionFailure(String),

    #[error("vertex {vertex} has degree zero")]
    DegenerateDegree { vertex: usize },

    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error(
        "Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {residual:e})"
    )]
    ConvergenceFailure { sweeps: usize, residual: f64 },

    #[error("spectrum sanity check failed: {0}")]
    SpectrumSanity(String),

    #[error("vector is numerically zero (norm {norm:e})")]
    ZeroVector { norm: f64 },

    #[error("every edge touches a zero-sign vertex")]
    UndefinedFraction,

    #[error("graph is not regular")]
    RegularityRequired,

    #[error("not an eigenvector of D + A (residual {residual:e}, allowed {allowed:e})")]
    NotAnEigenvector { residual: f64, allowed: f64 },

    #[error("bound inapplicable: signless eigenvalue {epsilon} is not below the degree {degree}")]
    BoundInapplicable { epsilon: f64, degree: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("named graph `{name}` is not provisioned: {reason}")]
    NotProvisioned { name: String, reason: String },

    #[error("named graph `{name}` does not match its manifest: {message}")]
    ManifestMismatch { name: String, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse_at_byte(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            location: format!("byte {offset}"),
            message: message.into(),
        }
    }

    pub(crate) fn parse_at_line(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            location: format!("line {line}"),
            message: message.into(),
        }
    }

    /// True for failures that come from floating-point computation rather
    /// than from malformed input.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::ConvergenceFailure { .. }
                | Error::SpectrumSanity(_)
                | Error::NotAnEigenvector { .. }
                | Error::ZeroVector { .. }
        )
    }
}
