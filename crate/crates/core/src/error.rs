use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("Gamma pole at z = {re} + {im}i")]
    Pole { re: f64, im: f64 },

    #[error("Kummer parameter b = {re} + {im}i is a non-positive integer")]
    ParameterPole { re: f64, im: f64 },

    #[error("{what} did not converge after {terms} terms")]
    Convergence { what: &'static str, terms: usize },

    #[error("accuracy loss in {what}: residual {residual:e} exceeds {limit:e}")]
    AccuracyLoss {
        what: &'static str,
        residual: f64,
        limit: f64,
    },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("outside the validity regime: {0}")]
    Regime(String),

    #[error(
        "no bound states: requires ell^2 < 2*m*alpha*lambda^2, got ell^2 = {ell_sq} and 2*m*alpha*lambda^2 = {coupling}"
    )]
    NoBoundStateRegime { ell_sq: f64, coupling: f64 },

    #[error("r = {r} lies inside the forbidden region r < R = {cutoff}")]
    ForbiddenRegion { r: f64, cutoff: f64 },

    #[error("no sign change of W around kappa = {kappa_guess} within relative window {window}")]
    Bracket { kappa_guess: f64, window: f64 },

    #[error("grid too coarse: Richardson estimate {estimate:e} exceeds 1% of level spacing {spacing:e}")]
    GridTooCoarse { estimate: f64, spacing: f64 },

    #[error("Numerov step too large: phase advance {advance} per step at r = {r}")]
    StepTooLarge { advance: f64, r: f64 },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

impl Error {
    /// True for failures caused by the physical regime rather than numerics.
    pub fn is_regime_violation(&self) -> bool {
        matches!(self, Error::NoBoundStateRegime { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
