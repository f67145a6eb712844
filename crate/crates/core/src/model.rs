//! Physical configuration, the dimensionless parameters of the radial problem
//! and the effective potential outside the cylinder.

use crate::error::{Error, Result};
use crate::special::dd::Dd;

/// Physical inputs in natural units (`hbar = c = 1`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalParams {
    pub mass: f64,
    /// Atomic polarizability `alpha`.
    pub alpha: f64,
    /// Field coupling `lambda`, with `E = lambda / r` outside the cylinder.
    pub lambda: f64,
    /// Oscillator angular frequency.
    pub omega: f64,
    /// Cylinder radius, the short-distance cut-off.
    pub radius: f64,
    /// Eigenvalue of `L_z`.
    pub ell: i64,
    /// Axial momentum.
    pub pz: f64,
}

impl PhysicalParams {
    pub fn new(mass: f64, alpha: f64, lambda: f64, omega: f64, radius: f64, ell: i64) -> Result<Self> {
        let p = PhysicalParams {
            mass,
            alpha,
            lambda,
            omega,
            radius,
            ell,
            pz: 0.0,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn with_pz(mut self, pz: f64) -> Self {
        self.pz = pz;
        self
    }

    pub fn with_radius(mut self, radius: f64) -> Self {
        self.radius = radius;
        self
    }

    pub fn with_omega(mut self, omega: f64) -> Self {
        self.omega = omega;
        self
    }

    pub fn with_ell(mut self, ell: i64) -> Self {
        self.ell = ell;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("mass", self.mass),
            ("alpha", self.alpha),
            ("lambda", self.lambda),
            ("radius", self.radius),
        ];
        for (name, v) in positive {
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::Domain(format!("{name} must be positive and finite, got {v}")));
            }
        }
        if !(self.omega >= 0.0) || !self.omega.is_finite() {
            return Err(Error::Domain(format!("omega must be >= 0, got {}", self.omega)));
        }
        if !self.pz.is_finite() {
            return Err(Error::Domain(format!("pz must be finite, got {}", self.pz)));
        }
        Ok(())
    }

    /// `2 m alpha lambda^2`, correctly rounded.
    pub fn coupling(&self) -> f64 {
        self.coupling_dd().to_f64()
    }

    pub(crate) fn coupling_dd(&self) -> Dd {
        let l = Dd::new(self.lambda);
        Dd::new(2.0 * self.mass) * Dd::new(self.alpha) * l * l
    }

    /// `p_z^2 / (2m)`.
    pub fn energy_shift(&self) -> f64 {
        self.pz * self.pz / (2.0 * self.mass)
    }

    /// `m omega R^2`.
    pub fn x0(&self) -> f64 {
        self.mass * self.omega * self.radius * self.radius
    }
}

/// `lambda = rho R^2 / (2 epsilon_0)` for a uniformly charged cylinder.
pub fn lambda_from_charge(rho: f64, radius: f64, epsilon0: f64) -> Result<f64> {
    for (name, v) in [("rho", rho), ("R", radius), ("epsilon0", epsilon0)] {
        if !(v > 0.0) || !v.is_finite() {
            return Err(Error::Domain(format!("{name} must be positive, got {v}")));
        }
    }
    Ok(rho * radius * radius / (2.0 * epsilon0))
}

/// Dimensionless parameters of the radial problem.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedParams {
    /// `sqrt(2 m alpha lambda^2 - ell^2)`.
    pub lambda_cap: f64,
    /// `Lambda / 2`, the imaginary Whittaker order.
    pub mu: f64,
    /// `m omega R^2`.
    pub x0: f64,
    /// `p_z^2 / (2m)`.
    pub energy_shift: f64,
}

/// Squared effective coupling `2 m alpha lambda^2 - ell^2` in double-double.
pub(crate) fn lambda_sq_dd(params: &PhysicalParams) -> Dd {
    let ell = params.ell as f64;
    params.coupling_dd() - Dd::new(ell) * Dd::new(ell)
}

/// Derive `Lambda`, `mu`, `x0` and the axial energy shift.
///
/// The boundary `ell^2 = 2 m alpha lambda^2` is rejected together with the
/// region beyond it; equality is judged to a relative `1e-12` so that inputs
/// such as `lambda = sqrt(2)` land on the intended side.
pub fn derive(params: &PhysicalParams) -> Result<DerivedParams> {
    params.validate()?;
    let coupling = params.coupling();
    let ell_sq = (params.ell as f64).powi(2);
    let lambda_sq = lambda_sq_dd(params).to_f64();
    if lambda_sq <= 1e-12 * coupling.max(ell_sq) {
        return Err(Error::NoBoundStateRegime { ell_sq, coupling });
    }
    let lambda_cap = lambda_sq.sqrt();
    Ok(DerivedParams {
        lambda_cap,
        mu: 0.5 * lambda_cap,
        x0: params.x0(),
        energy_shift: params.energy_shift(),
    })
}

/// `V(r) = -alpha lambda^2 / r^2 + m omega^2 r^2 / 2`, optionally plus the
/// centrifugal term `ell^2 / (2 m r^2)`.
pub fn effective_potential(params: &PhysicalParams, r: f64, centrifugal: bool) -> Result<f64> {
    params.validate()?;
    if !(r >= params.radius) {
        return Err(Error::ForbiddenRegion {
            r,
            cutoff: params.radius,
        });
    }
    let r2 = r * r;
    let mut v = -params.alpha * params.lambda * params.lambda / r2
        + 0.5 * params.mass * params.omega * params.omega * r2;
    if centrifugal {
        let ell = params.ell as f64;
        v += ell * ell / (2.0 * params.mass * r2);
    }
    Ok(v)
}

/// Minimum of the potential including the centrifugal term, at
/// `r^4 = (ell^2 - 2 m alpha lambda^2) / (m omega)^2`. It exists only when the
/// centrifugal barrier beats the dipole attraction and `omega > 0`; otherwise
/// the potential is monotone on `r > 0`.
pub fn potential_minimum(params: &PhysicalParams) -> Option<f64> {
    let ell = params.ell as f64;
    let repulsion = ell * ell - params.coupling();
    let mw = params.mass * params.omega;
    (params.omega > 0.0 && repulsion > 0.0).then(|| (repulsion / (mw * mw)).powf(0.25))
}

/// Affine maps `kappa = (E - shift) / (2 omega)` and `beta = 1/2 - kappa`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KappaMap {
    pub omega: f64,
    pub mass: f64,
    pub energy_shift: f64,
}

impl KappaMap {
    pub fn new(params: &PhysicalParams) -> Result<Self> {
        if !(params.omega > 0.0) {
            return Err(Error::Domain(
                "kappa map undefined for omega = 0".into(),
            ));
        }
        Ok(KappaMap {
            omega: params.omega,
            mass: params.mass,
            energy_shift: params.energy_shift(),
        })
    }

    pub fn kappa_of_energy(&self, energy: f64) -> f64 {
        // tau / (4 m omega) with tau = 2 m (E - shift)
        (energy - self.energy_shift) / (2.0 * self.omega)
    }

    pub fn energy_of_kappa(&self, kappa: f64) -> f64 {
        2.0 * self.omega * kappa + self.energy_shift
    }

    pub fn beta_of_kappa(kappa: f64) -> f64 {
        0.5 - kappa
    }

    pub fn kappa_of_beta(beta: f64) -> f64 {
        0.5 - beta
    }
}
