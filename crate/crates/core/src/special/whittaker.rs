//! Whittaker functions of imaginary second index.
//!
//! `M_{kappa, i mu}(x)` comes straight from the Kummer series. `W_{kappa, i mu}(x)`
//! is real for real `kappa`, `mu`, `x` and is produced by one of three routes:
//!
//! * the connection formula combining `M_{kappa, +-i mu}` with Gamma weights,
//! * the divergent large-`x` expansion truncated at its smallest term,
//! * Numerov integration of the Whittaker equation inward from a point where the
//!   large-`x` expansion is accurate (used when the connection formula has lost
//!   too many digits to cancellation).
//!
//! `W` underflows `f64` long before the physically interesting region is left
//! (it carries a factor `1 / |Gamma(1/2 - kappa + i mu)|`), so values are
//! returned as `mantissa * exp(log_scale)`.

use num_complex::Complex64;

use super::gamma::ln_gamma_complex;
use super::kummer::kummer_m;
use super::Estimate;
use crate::error::{Error, Result};

/// Realness tolerance on the conjugate-pair combination.
const REALNESS_TOL: f64 = 1e-8;

/// `M_{kappa, i mu}(x) = e^{-x/2} x^{1/2 + i mu} M(1/2 + i mu - kappa, 1 + 2 i mu, x)`.
///
/// `mu` may have either sign; `M_{kappa, -i mu}` is the complex conjugate.
pub fn whittaker_m_imag(kappa: f64, mu: f64, x: f64) -> Result<Estimate<Complex64>> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!("Whittaker argument x = {x} must be > 0")));
    }
    if !kappa.is_finite() || !mu.is_finite() {
        return Err(Error::Domain("non-finite Whittaker index".into()));
    }
    let a = Complex64::new(0.5 - kappa, mu);
    let b = Complex64::new(1.0, 2.0 * mu);
    let m = kummer_m(a, b, x)?;
    let ln_x = x.ln();
    let prefactor = Complex64::from_polar((-0.5 * x).exp() * x.sqrt(), mu * ln_x);
    let value = prefactor * m.value;
    if !(value.re.is_finite() && value.im.is_finite()) {
        return Err(Error::Domain(format!(
            "M_(kappa={kappa}, i mu={mu})({x}) overflows"
        )));
    }
    let error = prefactor.norm() * m.error
        + 4.0 * f64::EPSILON * value.norm() * (1.0 + (mu * ln_x).abs() + x);
    Ok(Estimate { value, error })
}

/// Which evaluation route produced a [`WhittakerW`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WRoute {
    Connection,
    LargeX,
    InwardOde,
}

/// `W_{kappa, i mu}(x) = mantissa * exp(log_scale)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WhittakerW {
    pub mantissa: f64,
    pub log_scale: f64,
    /// Estimated absolute error of `mantissa`.
    pub error: f64,
    /// `|Im| / (1 + |Re|)` of the connection-formula combination, in mantissa
    /// units; zero for the other routes.
    pub imag_residual: f64,
    pub route: WRoute,
}

impl WhittakerW {
    /// The value itself; may underflow to zero or overflow.
    pub fn value(&self) -> f64 {
        self.mantissa * self.log_scale.exp()
    }

    /// Value expressed relative to `exp(log_ref)`; used to compare evaluations
    /// that carry different scales.
    pub fn rescaled(&self, log_ref: f64) -> f64 {
        self.mantissa * (self.log_scale - log_ref).exp()
    }

    pub fn relative_error(&self) -> f64 {
        if self.mantissa == 0.0 {
            f64::INFINITY
        } else {
            self.error / self.mantissa.abs()
        }
    }
}

/// Tuning knobs for [`whittaker_w_imag_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WhittakerOptions {
    /// At and beyond this `x` the large-`x` expansion is tried first.
    pub large_x_switch: f64,
    /// Relative error below which a connection-formula value is accepted as-is.
    pub connection_accept: f64,
    /// Step budget for the inward Numerov route.
    pub max_ode_steps: usize,
}

impl Default for WhittakerOptions {
    fn default() -> Self {
        WhittakerOptions {
            large_x_switch: 30.0,
            connection_accept: 1e-9,
            max_ode_steps: 2_000_000,
        }
    }
}

/// `W_{kappa, i mu}(x)` with default options.
pub fn whittaker_w_imag(kappa: f64, mu: f64, x: f64) -> Result<WhittakerW> {
    whittaker_w_imag_with(kappa, mu, x, &WhittakerOptions::default())
}

pub fn whittaker_w_imag_with(
    kappa: f64,
    mu: f64,
    x: f64,
    opts: &WhittakerOptions,
) -> Result<WhittakerW> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!("Whittaker argument x = {x} must be > 0")));
    }
    if !(mu > 0.0) || !mu.is_finite() || !kappa.is_finite() {
        return Err(Error::Domain(format!(
            "W requires finite kappa and mu > 0 (kappa = {kappa}, mu = {mu})"
        )));
    }

    if x >= opts.large_x_switch {
        let asym = large_x_expansion(kappa, mu, x);
        if asym.relative_error() <= 1e-13 {
            return Ok(asym);
        }
    }

    let conn = connection(kappa, mu, x);
    match conn {
        Ok(w) if w.relative_error() <= opts.connection_accept => return Ok(w),
        Err(Error::AccuracyLoss { .. }) | Ok(_) if x >= 1.0 => {
            if let Some(w) = inward_ode(kappa, mu, x, opts) {
                let keep_ode = match &conn {
                    Ok(c) => w.relative_error() < c.relative_error(),
                    Err(_) => true,
                };
                if keep_ode {
                    return Ok(w);
                }
            }
        }
        _ => {}
    }
    conn
}

fn connection(kappa: f64, mu: f64, x: f64) -> Result<WhittakerW> {
    let beta = 0.5 - kappa;
    let i = Complex64::i();
    let lg_p2 = ln_gamma_complex(2.0 * mu * i)?;
    let lg_m2 = ln_gamma_complex(-2.0 * mu * i)?;
    let lg_bp = ln_gamma_complex(Complex64::new(beta, mu))?;
    let lg_bm = ln_gamma_complex(Complex64::new(beta, -mu))?;

    let log_scale = lg_m2.value.re - lg_bm.value.re;
    let w1 = (lg_p2.value - lg_bp.value - log_scale).exp();
    let w2 = (lg_m2.value - lg_bm.value - log_scale).exp();

    let m_minus = whittaker_m_imag(kappa, -mu, x)?;
    let m_plus = whittaker_m_imag(kappa, mu, x)?;
    let t1 = w1 * m_minus.value;
    let t2 = w2 * m_plus.value;
    let total = t1 + t2;

    // The real parts of the log-Gammas only move the common scale; their
    // imaginary parts (phases) are accurate to a few ulps of their size.
    let phase_err = |g: &Estimate<Complex64>| 8.0 * f64::EPSILON * (1.0 + g.value.im.abs());
    let magnitude_err = lg_bp.error.min(1e-6) + lg_p2.error;
    let error = (t1.norm() + t2.norm()) * (phase_err(&lg_p2) + phase_err(&lg_bp))
        + w1.norm() * m_minus.error
        + w2.norm() * m_plus.error
        + magnitude_err * total.re.abs()
        + 2.0 * f64::EPSILON * (t1.norm() + t2.norm());

    let imag_residual = total.im.abs() / (1.0 + total.re.abs());
    if imag_residual > REALNESS_TOL {
        return Err(Error::AccuracyLoss {
            what: "Whittaker W connection formula (imaginary residual)",
            residual: imag_residual,
            limit: REALNESS_TOL,
        });
    }
    Ok(WhittakerW {
        mantissa: total.re,
        log_scale,
        error,
        imag_residual,
        route: WRoute::Connection,
    })
}

/// `W ~ e^{-x/2} x^kappa sum_k (beta + i mu)_k (beta - i mu)_k / (k! (-x)^k)`,
/// truncated just before the smallest term.
fn large_x_expansion(kappa: f64, mu: f64, x: f64) -> WhittakerW {
    let beta = 0.5 - kappa;
    let mut term = 1.0_f64;
    let mut sum = 1.0_f64;
    let mut smallest = 1.0_f64;
    for k in 0..500 {
        let kf = k as f64;
        let next = term * ((beta + kf).powi(2) + mu * mu) / ((kf + 1.0) * -x);
        if next.abs() >= term.abs() || next == 0.0 {
            smallest = next.abs().min(term.abs());
            break;
        }
        term = next;
        sum += term;
        smallest = term.abs();
        if term.abs() <= 1e-17 * sum.abs() {
            break;
        }
    }
    WhittakerW {
        mantissa: sum,
        log_scale: -0.5 * x + kappa * x.ln(),
        error: smallest + 4.0 * f64::EPSILON * sum.abs(),
        imag_residual: 0.0,
        route: WRoute::LargeX,
    }
}

/// Numerov on `W'' = q(x) W`, `q = 1/4 - kappa/x - (1/4 + mu^2)/x^2`, marching
/// inward from `x_far` where the large-`x` expansion is accurate. Inward, the
/// decaying solution is the dominant one, so the recursion is stable.
fn inward_ode(kappa: f64, mu: f64, x: f64, opts: &WhittakerOptions) -> Option<WhittakerW> {
    let q = |t: f64| 0.25 - kappa / t - (0.25 + mu * mu) / (t * t);
    let mut x_far = (x + 5.0).max(opts.large_x_switch);
    let mut far = large_x_expansion(kappa, mu, x_far);
    while far.relative_error() > 1e-14 {
        x_far *= 1.5;
        if x_far > 1e5 {
            return None;
        }
        far = large_x_expansion(kappa, mu, x_far);
    }
    let q_max = q(x).abs().max(q(x_far).abs()).max(0.25);
    let h_target = 0.02 / q_max.sqrt();
    let steps = ((x_far - x) / h_target).ceil() as usize;
    if steps > opts.max_ode_steps / 2 {
        return None;
    }
    let fine = numerov_inward(&q, kappa, mu, x, x_far, steps.max(16) * 2)?;
    let coarse = numerov_inward(&q, kappa, mu, x, x_far, steps.max(16))?;
    let diff = (fine.0 - coarse.0 * (coarse.1 - fine.1).exp()).abs();
    Some(WhittakerW {
        mantissa: fine.0,
        log_scale: fine.1,
        error: diff / 15.0 + far.relative_error() * fine.0.abs() + 1e3 * f64::EPSILON * fine.0.abs(),
        imag_residual: 0.0,
        route: WRoute::InwardOde,
    })
}

fn numerov_inward(
    q: &impl Fn(f64) -> f64,
    kappa: f64,
    mu: f64,
    x: f64,
    x_far: f64,
    steps: usize,
) -> Option<(f64, f64)> {
    let h = (x_far - x) / steps as f64;
    let h2 = h * h / 12.0;
    let start = large_x_expansion(kappa, mu, x_far);
    let second = large_x_expansion(kappa, mu, x_far - h);
    let mut log_scale = start.log_scale;
    let mut y_prev = start.mantissa;
    let mut y_cur = second.rescaled(log_scale);
    for k in 2..=steps {
        let t_prev = x_far - (k - 2) as f64 * h;
        let t_cur = x_far - (k - 1) as f64 * h;
        let t_next = if k == steps { x } else { x_far - k as f64 * h };
        let y_next = (2.0 * (1.0 + 5.0 * h2 * q(t_cur)) * y_cur - (1.0 - h2 * q(t_prev)) * y_prev)
            / (1.0 - h2 * q(t_next));
        y_prev = y_cur;
        y_cur = y_next;
        let mag = y_cur.abs();
        if mag > 1e100 {
            y_prev /= mag;
            y_cur /= mag;
            log_scale += mag.ln();
        }
        if !y_cur.is_finite() {
            return None;
        }
    }
    Some((y_cur, log_scale))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn m_small_x_limit() {
        let x = 1e-8;
        let m = whittaker_m_imag(1.0, 2.0, x).unwrap().value;
        let lead = Complex64::from_polar(x.sqrt(), 2.0 * x.ln());
        assert!((m / lead - 1.0).norm() < 1e-7);
    }

    #[test]
    fn m_conjugation_in_mu() {
        let a = whittaker_m_imag(2.0, 1.5, 0.3).unwrap().value;
        let b = whittaker_m_imag(2.0, -1.5, 0.3).unwrap().value;
        assert!((a - b.conj()).norm() < 1e-15 * a.norm());
    }

    #[test]
    fn w_is_real_for_conjugate_pair() {
        let w = whittaker_w_imag(-3.0, 2.5, 1e-3).unwrap();
        assert!(w.imag_residual < 1e-8);
        assert_eq!(w.route, WRoute::Connection);
    }

    #[test]
    fn w_rejects_bad_arguments() {
        assert!(whittaker_w_imag(0.0, 1.0, 0.0).is_err());
        assert!(whittaker_w_imag(0.0, 0.0, 1.0).is_err());
        assert!(whittaker_m_imag(0.0, 1.0, -1.0).is_err());
    }

    #[test]
    fn routes_agree_where_they_overlap() {
        // x = 12: connection is still accurate, and the ODE route can be forced
        let (kappa, mu, x) = (0.7, 1.3, 12.0);
        let conn = connection(kappa, mu, x).unwrap();
        let ode = inward_ode(kappa, mu, x, &WhittakerOptions::default()).unwrap();
        let a = conn.value();
        let b = ode.value();
        assert!((a - b).abs() < 1e-8 * a.abs(), "{a} vs {b}");
    }

    #[test]
    fn large_x_uses_expansion() {
        let w = whittaker_w_imag(0.0, 1.0, 40.0).unwrap();
        assert_eq!(w.route, WRoute::LargeX);
        let ode = whittaker_w_imag_with(
            0.0,
            1.0,
            20.0,
            &WhittakerOptions {
                connection_accept: 0.0,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(ode.route, WRoute::InwardOde);
    }
}
