//! Direct numerical solution of the cut-off radial eigenproblem, independent
//! of the special-function routes.
//!
//! The radial equation
//! `f'' + f'/r + Lambda^2/r^2 f - m^2 omega^2 r^2 f + tau f = 0`, with
//! `Lambda^2 = 2 m alpha lambda^2 - ell^2` (any sign) and `tau = 2 m E - p_z^2`,
//! is discretized in conservative form on `[r_min, r_max]` with Dirichlet
//! conditions, symmetrized, and handed to Sturm bisection.

mod fd;
mod numerov;
mod sturm;

pub use fd::{fd_eigensolve, outer_turning_point, OracleResult};
pub use numerov::numerov_node_count;
pub use sturm::{sturm_count, sturm_tridiag_eigs, tridiag_eigenvector};

use crate::error::{Error, Result};
use crate::model::PhysicalParams;

/// Coefficients of the radial equation. Unlike [`PhysicalParams`] it admits a
/// vanishing or repulsive inverse-square term and `r_min = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialProblem {
    pub mass: f64,
    /// `Lambda^2 = 2 m alpha lambda^2 - ell^2`; negative values are repulsive.
    pub lambda_sq: f64,
    pub omega: f64,
    /// `p_z^2 / (2m)`.
    pub energy_shift: f64,
}

impl RadialProblem {
    /// Two-dimensional isotropic oscillator in partial wave `ell`, no dipole
    /// coupling.
    pub fn oscillator(mass: f64, omega: f64, ell: i64) -> Self {
        RadialProblem {
            mass,
            lambda_sq: -((ell * ell) as f64),
            omega,
            energy_shift: 0.0,
        }
    }

    pub fn tau_of_energy(&self, energy: f64) -> f64 {
        2.0 * self.mass * (energy - self.energy_shift)
    }

    pub fn energy_of_tau(&self, tau: f64) -> f64 {
        tau / (2.0 * self.mass) + self.energy_shift
    }

    /// `-Lambda^2 / r^2 + m^2 omega^2 r^2`, the potential in `tau` units.
    pub fn potential_tau(&self, r: f64) -> f64 {
        let mw = self.mass * self.omega;
        -self.lambda_sq / (r * r) + mw * mw * r * r
    }
}

impl From<&PhysicalParams> for RadialProblem {
    fn from(p: &PhysicalParams) -> Self {
        let ell = p.ell as f64;
        RadialProblem {
            mass: p.mass,
            lambda_sq: p.coupling() - ell * ell,
            omega: p.omega,
            energy_shift: p.energy_shift(),
        }
    }
}

impl From<PhysicalParams> for RadialProblem {
    fn from(p: PhysicalParams) -> Self {
        RadialProblem::from(&p)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridScheme {
    Uniform,
    LogUniform,
}

/// Radial grid; `points` counts interior nodes of the coarse grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialGridSpec {
    pub r_min: f64,
    pub r_max: f64,
    pub points: usize,
    pub scheme: GridScheme,
}

impl RadialGridSpec {
    pub fn uniform(r_min: f64, r_max: f64, points: usize) -> Self {
        RadialGridSpec {
            r_min,
            r_max,
            points,
            scheme: GridScheme::Uniform,
        }
    }

    pub fn log_uniform(r_min: f64, r_max: f64, points: usize) -> Self {
        RadialGridSpec {
            r_min,
            r_max,
            points,
            scheme: GridScheme::LogUniform,
        }
    }

    /// Grid starting at the cut-off `R`, log-spaced when `omega > 0` and
    /// `R < 1`, ending at three times the outer turning point of the `k`-th
    /// oscillator-like level `tau = 4 m omega k`.
    pub fn default_for(params: &PhysicalParams, k: usize) -> Result<Self> {
        let problem = RadialProblem::from(params);
        if !(params.omega > 0.0) {
            return Err(Error::Domain(
                "omega = 0 needs an explicit r_max for the oracle grid".into(),
            ));
        }
        let tau_top = 4.0 * params.mass * params.omega * k.max(1) as f64;
        let turning = outer_turning_point(&problem, tau_top).unwrap_or(params.radius * 10.0);
        let r_max = (3.0 * turning).max(2.0 * params.radius);
        Ok(if params.radius < 1.0 {
            RadialGridSpec::log_uniform(params.radius, r_max, 4000)
        } else {
            RadialGridSpec::uniform(params.radius, r_max, 2000)
        })
    }

    pub fn validate(&self) -> Result<()> {
        if self.points < 100 {
            return Err(Error::Domain(format!(
                "grid needs at least 100 points, got {}",
                self.points
            )));
        }
        if !(self.r_min >= 0.0) || !(self.r_min < self.r_max) || !self.r_max.is_finite() {
            return Err(Error::Domain(format!(
                "grid needs 0 <= r_min < r_max, got [{}, {}]",
                self.r_min, self.r_max
            )));
        }
        if self.scheme == GridScheme::LogUniform && !(self.r_min > 0.0) {
            return Err(Error::Domain("log-uniform grid needs r_min > 0".into()));
        }
        Ok(())
    }
}
