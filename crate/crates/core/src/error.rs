use thiserror::Error;

/// Errors reported by the operator laboratory.
#[derive(Debug, Error)]
pub enum Error {
    #[error("algebra mismatch: {0}")]
    AlgebraMismatch(String),

    #[error("module mismatch: {0}")]
    ModuleMismatch(String),

    #[error("size limit exceeded: {0}")]
    SizeLimit(String),

    #[error("multiplication table is not a group: {0}")]
    NotAGroup(String),

    #[error("representation fails *-homomorphism check: {0}")]
    RepresentationCheck(String),

    #[error("operator is not self-adjoint within tolerance: residual {residual:.3e}, tolerance {tol:.3e}")]
    NotSelfAdjoint { residual: f64, tol: f64 },

    #[error("operator is not strictly positive: min spectral value {min:.3e}")]
    NotPositive { min: f64 },

    #[error("spectral point too close to the spectrum: {0}")]
    SpectrumHit(String),

    #[error("functional calculus reconstruction failed: {0}")]
    Reconstruction(String),

    #[error("section continuity proxy violated: {0}")]
    ContinuityViolation(String),

    #[error("field validation failed: {0}")]
    FieldValidation(String),

    #[error("cycle is not degenerate: {0}")]
    NotDegenerate(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("scenario error: {0}")]
    Scenario(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),
}
