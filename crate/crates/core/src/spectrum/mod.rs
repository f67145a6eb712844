//! Bound-state energies from the closed-form geometric spectrum and from exact
//! quantization of the hard-wall condition `W_{kappa, i mu}(m omega R^2) = 0`,
//! plus radial wavefunctions.

mod asymptotic;
mod exact;
mod wavefunction;

pub use asymptotic::{
    energy_levels_asymptotic, energy_levels_asymptotic_with, swave_energy_closed_form,
    x0_branch, X0Branch,
};
pub use exact::{quantize_exact, quantize_exact_with, QuantizeOptions, Quantization};
pub use wavefunction::{radial_wavefunction, Normalization, RadialProfile};

/// Which computation produced an energy level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Route {
    AsymptoticClosedForm,
    ExactQuantization,
    NumericOracle,
}

impl Route {
    pub fn as_str(&self) -> &'static str {
        match self {
            Route::AsymptoticClosedForm => "asymptotic",
            Route::ExactQuantization => "exact",
            Route::NumericOracle => "oracle",
        }
    }
}

impl std::fmt::Display for Route {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Thresholds that decide whether a level lies in the regime where the
/// closed form is expected to hold.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Thresholds {
    /// `x0 = m omega R^2` must stay below this.
    pub x0_admissible: f64,
    /// `beta = 1/2 - kappa` must reach at least this.
    pub beta_min: f64,
    /// Relative gap accepted between routes.
    pub compare_tol: f64,
}

impl Default for Thresholds {
    fn default() -> Self {
        Thresholds {
            x0_admissible: 0.01,
            beta_min: 10.0,
            compare_tol: 0.05,
        }
    }
}

/// Per-level regime checks.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct RegimeFlags {
    pub x0_admissible: bool,
    pub beta_ok: bool,
}

impl RegimeFlags {
    pub fn evaluate(x0: f64, kappa: Option<f64>, t: &Thresholds) -> Self {
        RegimeFlags {
            x0_admissible: x0 < t.x0_admissible,
            // omega = 0 sends beta to +infinity
            beta_ok: kappa.map_or(true, |k| 0.5 - k >= t.beta_min),
        }
    }

    pub fn ok(&self) -> bool {
        self.x0_admissible && self.beta_ok
    }

    /// Names of the violated thresholds.
    pub fn violations(&self) -> Vec<&'static str> {
        let mut v = Vec::new();
        if !self.x0_admissible {
            v.push("x0_admissible");
        }
        if !self.beta_ok {
            v.push("beta_min");
        }
        v
    }
}

/// One bound state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyLevel {
    /// Level index, `n >= 1`; `n = 1` is the deepest level.
    pub n: u32,
    pub ell: i64,
    pub energy: f64,
    pub route: Route,
    /// `kappa` at this level; `None` when `omega = 0`.
    pub kappa: Option<f64>,
    pub estimated_error: f64,
    pub flags: RegimeFlags,
}

impl EnergyLevel {
    /// `omega + p_z^2 / 2m - E`, the binding relative to the oscillator
    /// threshold.
    pub fn binding(&self, params: &crate::PhysicalParams) -> f64 {
        params.omega + params.energy_shift() - self.energy
    }
}
