use std::f64::consts::PI;

use super::{EnergyLevel, RegimeFlags, Route, Thresholds};
use crate::error::{Error, Result};
use crate::model::{derive, lambda_sq_dd, DerivedParams, KappaMap, PhysicalParams};
use crate::special::dd::Dd;

/// One branch of the small-argument quantization condition.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct X0Branch {
    pub x0: f64,
    /// `x0` below the admissibility threshold.
    pub admissible: bool,
}

/// `x0 = Lambda^2 / beta * e^{pi/(2 Lambda) - 2} * e^{2 pi nu / Lambda}`: the
/// cut-off value at which the cosine form of `W` vanishes on branch `nu`.
pub fn x0_branch(derived: &DerivedParams, beta: f64, nu: i64, threshold: f64) -> Result<X0Branch> {
    if !(beta > 0.0) {
        return Err(Error::Domain(format!("x0 branch needs beta > 0, got {beta}")));
    }
    let l = derived.lambda_cap;
    let x0 = l * l / beta * (PI / (2.0 * l) - 2.0).exp() * (2.0 * PI * nu as f64 / l).exp();
    Ok(X0Branch {
        x0,
        admissible: x0 < threshold,
    })
}

/// Prefactor `2 Lambda^2 / (m R^2)` of the geometric spectrum, evaluated in
/// double-double and rounded once.
fn binding_prefactor(params: &PhysicalParams) -> f64 {
    let r = Dd::new(params.radius);
    (Dd::new(2.0) * lambda_sq_dd(params) / (Dd::new(params.mass) * r * r)).to_f64()
}

fn closed_form_energy(params: &PhysicalParams, lambda_cap: f64, prefactor: f64, n: u32) -> f64 {
    let binding = prefactor * (PI / (2.0 * lambda_cap) - 2.0).exp()
        * (-2.0 * PI * n as f64 / lambda_cap).exp();
    params.omega + params.energy_shift() - binding
}

/// s-wave levels in the original form
/// `E_n = omega - 4 alpha lambda^2 e^{pi/(2 sqrt(2 m alpha lambda^2)) - 2} / R^2 * e^{-2 n pi / sqrt(2 m alpha lambda^2)}`
/// (plus the axial shift). Ignores `ell`.
pub fn swave_energy_closed_form(params: &PhysicalParams, n: u32) -> Result<f64> {
    params.validate()?;
    if n == 0 {
        return Err(Error::Domain("level index starts at n = 1".into()));
    }
    let lambda_cap = params.coupling().sqrt();
    let r = Dd::new(params.radius);
    let l = Dd::new(params.lambda);
    let prefactor = (Dd::new(4.0) * Dd::new(params.alpha) * l * l / (r * r)).to_f64();
    Ok(closed_form_energy(params, lambda_cap, prefactor, n))
}

/// Closed-form levels `n = 1..=n_max` for general `ell`, with default regime
/// thresholds.
pub fn energy_levels_asymptotic(params: &PhysicalParams, n_max: u32) -> Result<Vec<EnergyLevel>> {
    energy_levels_asymptotic_with(params, n_max, &Thresholds::default())
}

pub fn energy_levels_asymptotic_with(
    params: &PhysicalParams,
    n_max: u32,
    thresholds: &Thresholds,
) -> Result<Vec<EnergyLevel>> {
    let derived = derive(params)?;
    if n_max == 0 {
        return Err(Error::Domain("n_max must be >= 1".into()));
    }
    let map = KappaMap::new(params).ok();
    let prefactor = binding_prefactor(params);
    Ok((1..=n_max)
        .map(|n| {
            let energy = closed_form_energy(params, derived.lambda_cap, prefactor, n);
            let kappa = map.map(|m| m.kappa_of_energy(energy));
            let binding = params.omega + derived.energy_shift - energy;
            EnergyLevel {
                n,
                ell: params.ell,
                energy,
                route: Route::AsymptoticClosedForm,
                kappa,
                estimated_error: 8.0 * f64::EPSILON * (binding.abs() + params.omega),
                flags: RegimeFlags::evaluate(derived.x0, kappa, thresholds),
            }
        })
        .collect())
}
