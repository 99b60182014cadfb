use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("composition parts must be positive integers")]
    InvalidPart,

    #[error("enumeration of n = {n} refused: 2^(n-1) candidates exceed cap {cap}")]
    EnumerationCap { n: u32, cap: u32 },

    #[error("series has nonzero constant term; 1 - s is not invertible")]
    NonzeroConstantTerm,

    #[error("evaluation point out of domain: {0}")]
    EvaluationDomain(String),

    #[error("sigma_1(z) = 1 has no real root in (0, 1)")]
    NoRealRoot,

    #[error("bracketing failed: {0}")]
    BracketFailure(String),

    #[error("gamma function pole at a nonpositive integer")]
    GammaPole,

    #[error("grid too coarse for requested certification; required arc step <= {required_step:e}")]
    GridTooCoarse { required_step: f64 },

    #[error("a root lies too close to the circle |z| = {radius}; try radius {suggested} instead")]
    CircleProximity { radius: f64, suggested: f64 },

    #[error("count table unusable here: {0}")]
    TableMismatch(String),

    #[error("rejection sampler exhausted {attempts} attempts (measured acceptance rate {measured_rate:e})")]
    RetryBudget { attempts: u64, measured_rate: f64 },

    #[error("resource guard tripped: {0}")]
    ResourceGuard(String),

    #[error("invalid precision context: {0}")]
    Precision(String),
}

pub type Result<T> = std::result::Result<T, Error>;
