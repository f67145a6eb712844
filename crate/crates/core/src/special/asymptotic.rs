//! Stirling-type approximations of Gamma and the small-argument cosine form of
//! `W_{kappa, i mu}` that underlies the closed-form spectrum.

use num_complex::Complex64;
use std::f64::consts::{FRAC_PI_4, PI};

use crate::error::{Error, Result};

const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;

/// `ln Gamma(a zeta + b) ~ ln sqrt(2 pi) - a zeta + (a zeta + b - 1/2) ln(a zeta)`
/// for large real `a zeta > 0`.
pub fn ln_gamma_uniform_asymptotic(a: f64, zeta: f64, b: Complex64) -> Result<Complex64> {
    if !(a > 0.0) {
        return Err(Error::Domain(format!("uniform asymptotic needs a > 0, got {a}")));
    }
    if !(zeta.abs() >= 1.0) {
        return Err(Error::Domain(format!(
            "uniform asymptotic needs |zeta| >= 1, got {zeta}"
        )));
    }
    let az = a * zeta;
    if !(az > 0.0) || !az.is_finite() {
        return Err(Error::Domain(format!("a*zeta = {az} must be positive")));
    }
    Ok(Complex64::new(HALF_LN_2PI - az, 0.0) + (b + az - 0.5) * az.ln())
}

/// `Gamma(a zeta + b) ~ sqrt(2 pi) e^{-a zeta} (a zeta)^{a zeta + b - 1/2}`.
///
/// With `a = 1`, `zeta = beta`, `b = +-i mu` this is
/// `sqrt(2 pi) beta^{beta - 1/2} e^{-beta} e^{+-i mu ln beta}`.
pub fn gamma_uniform_asymptotic(a: f64, zeta: f64, b: Complex64) -> Result<Complex64> {
    let ln = ln_gamma_uniform_asymptotic(a, zeta, b)?;
    let v = ln.exp();
    if !(v.re.is_finite() && v.im.is_finite()) {
        return Err(Error::Domain(format!(
            "Gamma({} + {b}) overflows; use ln_gamma_uniform_asymptotic",
            a * zeta
        )));
    }
    Ok(v)
}

/// Leading Stirling form of `Gamma(i y)` for large `|y|`:
/// `sqrt(2 pi / |y|) e^{-pi |y| / 2} exp(i sgn(y) (|y| ln|y| - |y| - pi/4))`.
///
/// For `y = +-2 mu` this is the strong-field form of `Gamma(+-2 i mu)`.
pub fn gamma_imaginary_stirling(y: f64) -> Result<Complex64> {
    if y == 0.0 || !y.is_finite() {
        return Err(Error::Domain(format!("Gamma(i y) Stirling form needs y != 0, got {y}")));
    }
    let ay = y.abs();
    let modulus = (2.0 * PI / ay).sqrt() * (-0.5 * PI * ay).exp();
    let phase = y.signum() * (ay * ay.ln() - ay - FRAC_PI_4);
    Ok(Complex64::from_polar(modulus, phase))
}

/// Regime thresholds for [`whittaker_w_smallx_approx_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SmallXOptions {
    /// Minimum `beta = 1/2 - kappa`.
    pub beta_min: f64,
    /// Minimum `mu` for the strong-field form of `Gamma(+-2 i mu)`.
    pub mu_min: f64,
    /// Return the approximation even outside the thresholds.
    pub allow_out_of_regime: bool,
}

impl Default for SmallXOptions {
    fn default() -> Self {
        SmallXOptions {
            beta_min: 10.0,
            mu_min: 1.0,
            allow_out_of_regime: false,
        }
    }
}

/// `W_{kappa, i mu}(x) ~ 2 A sqrt(x) cos(phase_at_x1 + mu ln x)` for small `x`,
/// with `A = e^{-mu pi + beta} / (sqrt(2 mu) beta^{beta - 1/2})`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SmallXApprox {
    /// `ln A`; `A` itself underflows once `beta` reaches a few hundred.
    pub log_amplitude: f64,
    /// `2 mu + mu ln(beta / (4 mu^2)) + pi/4`.
    pub phase_at_x1: f64,
    /// Heuristic upper end of the validity range in `x`.
    pub valid_below_x: f64,
    pub beta: f64,
    pub mu: f64,
}

impl SmallXApprox {
    pub fn amplitude(&self) -> f64 {
        self.log_amplitude.exp()
    }

    pub fn phase(&self, x: f64) -> f64 {
        self.phase_at_x1 + self.mu * x.ln()
    }

    pub fn value(&self, x: f64) -> f64 {
        self.rescaled(x, 0.0)
    }

    /// Value divided by `exp(log_ref)`.
    pub fn rescaled(&self, x: f64, log_ref: f64) -> f64 {
        2.0 * (self.log_amplitude - log_ref).exp() * x.sqrt() * self.phase(x).cos()
    }

    /// Zeros of the cosine form in `(x_lo, x_hi]`, ascending.
    pub fn zeros_between(&self, x_lo: f64, x_hi: f64) -> Vec<f64> {
        // phase = pi/2 + j pi
        let j_lo = ((self.phase(x_lo) - 0.5 * PI) / PI).floor() as i64;
        let j_hi = ((self.phase(x_hi) - 0.5 * PI) / PI).ceil() as i64;
        (j_lo..=j_hi)
            .map(|j| ((0.5 * PI + j as f64 * PI - self.phase_at_x1) / self.mu).exp())
            .filter(|&x| x > x_lo && x <= x_hi)
            .collect()
    }
}

/// Small-`x` cosine form of `W_{kappa, i mu}` with the default regime thresholds.
pub fn whittaker_w_smallx_approx(kappa: f64, mu: f64) -> Result<SmallXApprox> {
    whittaker_w_smallx_approx_with(kappa, mu, &SmallXOptions::default())
}

pub fn whittaker_w_smallx_approx_with(
    kappa: f64,
    mu: f64,
    opts: &SmallXOptions,
) -> Result<SmallXApprox> {
    if !(mu > 0.0) || !mu.is_finite() || !kappa.is_finite() {
        return Err(Error::Domain(format!(
            "small-x form needs mu > 0 and finite kappa (kappa = {kappa}, mu = {mu})"
        )));
    }
    let beta = 0.5 - kappa;
    if !(beta > 0.0) {
        return Err(Error::Domain(format!(
            "small-x form needs beta = 1/2 - kappa > 0, got {beta}"
        )));
    }
    if !opts.allow_out_of_regime {
        if beta < opts.beta_min {
            return Err(Error::Regime(format!(
                "beta = {beta} below beta_min = {}",
                opts.beta_min
            )));
        }
        if mu < opts.mu_min {
            return Err(Error::Regime(format!(
                "mu = {mu} below strong-field threshold {}",
                opts.mu_min
            )));
        }
    }
    let log_amplitude = -mu * PI + beta - (beta - 0.5) * beta.ln() - 0.5 * (2.0 * mu).ln();
    let phase_at_x1 = 2.0 * mu + mu * (beta / (4.0 * mu * mu)).ln() + FRAC_PI_4;
    Ok(SmallXApprox {
        log_amplitude,
        phase_at_x1,
        valid_below_x: (0.1 / beta).min(0.5),
        beta,
        mu,
    })
}
