use super::{EnergyLevel, Route};
use crate::error::{Error, Result};
use crate::model::{derive, KappaMap, PhysicalParams};
use crate::special::whittaker_w_imag;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Normalization {
    /// Scaled so that `max |f| = 1` on the sampled grid.
    MaxAbsOne,
}

/// `f(r) = W_{kappa, i mu}(m omega r^2) / sqrt(m omega r^2)` on a uniform grid.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialProfile {
    pub r_samples: Vec<f64>,
    pub f_values: Vec<f64>,
    /// Estimated absolute error of each value, in the same normalization.
    pub f_errors: Vec<f64>,
    pub normalization: Normalization,
    pub route: Route,
    /// Set when the level did not come from exact quantization, so `f(R)` is
    /// not expected to vanish.
    pub boundary_warning: bool,
}

impl RadialProfile {
    /// `|f(R)|` relative to `max |f|`.
    pub fn boundary_residual(&self) -> f64 {
        self.f_values.first().map_or(0.0, |v| v.abs())
    }

    /// Sign changes between samples whose magnitude clears their error
    /// estimate (and a small absolute floor that hides the boundary zero).
    pub fn node_count(&self) -> usize {
        let mut last_sign = 0.0;
        let mut nodes = 0;
        for (&f, &e) in self.f_values.iter().zip(&self.f_errors) {
            if f.abs() <= (10.0 * e).max(1e-8) {
                continue;
            }
            let s = f.signum();
            if last_sign != 0.0 && s != last_sign {
                nodes += 1;
            }
            last_sign = s;
        }
        nodes
    }
}

pub fn radial_wavefunction(
    params: &PhysicalParams,
    level: &EnergyLevel,
    r_max: f64,
    samples: usize,
) -> Result<RadialProfile> {
    let derived = derive(params)?;
    let map = KappaMap::new(params)?;
    if !(r_max > params.radius) {
        return Err(Error::Domain(format!(
            "r_max = {r_max} must exceed the cut-off R = {}",
            params.radius
        )));
    }
    if samples < 2 {
        return Err(Error::Domain("need at least two samples".into()));
    }
    let kappa = level
        .kappa
        .unwrap_or_else(|| map.kappa_of_energy(level.energy));
    let m_omega = params.mass * params.omega;
    let step = (r_max - params.radius) / (samples - 1) as f64;
    let r_samples: Vec<f64> = (0..samples)
        .map(|i| {
            if i + 1 == samples {
                r_max
            } else {
                params.radius + i as f64 * step
            }
        })
        .collect();

    let raw = r_samples
        .iter()
        .map(|&r| {
            let x = m_omega * r * r;
            whittaker_w_imag(kappa, derived.mu, x).map(|w| (w, x.sqrt()))
        })
        .collect::<Result<Vec<_>>>()?;
    let log_ref = raw
        .iter()
        .map(|(w, _)| w.log_scale)
        .fold(f64::NEG_INFINITY, f64::max);
    let mut f_values: Vec<f64> = raw.iter().map(|(w, s)| w.rescaled(log_ref) / s).collect();
    let mut f_errors: Vec<f64> = raw
        .iter()
        .map(|(w, s)| w.error * (w.log_scale - log_ref).exp() / s)
        .collect();
    let peak = f_values.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
    if !(peak > 0.0) || !peak.is_finite() {
        return Err(Error::AccuracyLoss {
            what: "radial wavefunction (no resolvable amplitude)",
            residual: peak,
            limit: 0.0,
        });
    }
    f_values.iter_mut().for_each(|v| *v /= peak);
    f_errors.iter_mut().for_each(|e| *e /= peak);

    Ok(RadialProfile {
        r_samples,
        f_values,
        f_errors,
        normalization: Normalization::MaxAbsOne,
        route: level.route,
        boundary_warning: level.route != Route::ExactQuantization,
    })
}
