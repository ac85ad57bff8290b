//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CoreError {
    #[error("q must lie in (0,1), got {0}")]
    InvalidQ(f64),
    #[error("non-finite numeric value")]
    NonFinite,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("index out of range: {0}")]
    IndexRange(String),
    #[error("not a bijection: {0}")]
    NotBijection(String),
    #[error("epsilon sequence not in standard form: {0}")]
    NonStandardEpsilon(String),
    #[error("rewrite budget of {budget} steps exceeded (processed {steps})")]
    RewriteBudget { budget: u64, steps: u64 },
    #[error("calibration failure: {0}")]
    Calibration(String),
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("signature cross-check failed: {0}")]
    SignatureMismatch(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("weight is not adapted to epsilon: {0}")]
    NotAdapted(String),
    #[error("unitarizability failure: {0}")]
    Unitarizability(String),
    #[error("operators do not commute within tolerance: {0}")]
    NonCommuting(String),
    #[error("no consistent shape detected: {0}")]
    ShapeDetection(String),
    #[error("non-scalar central action: {0}")]
    NonScalarCentre(String),
    #[error("root pattern incompatible with signature: {0}")]
    RootPattern(String),
    #[error("missing provenance: {0}")]
    Provenance(String),
    #[error("invalid input: {0}")]
    Input(String),
}
