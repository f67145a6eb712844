use std::f64::consts::PI;

use super::{energy_levels_asymptotic_with, EnergyLevel, RegimeFlags, Route, Thresholds};
use crate::error::{Error, Result};
use crate::model::{derive, KappaMap, PhysicalParams};
use crate::special::{whittaker_w_imag_with, WhittakerOptions, WhittakerW};

/// Bracketing and convergence settings for [`quantize_exact_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuantizeOptions {
    /// The search window grows as `2^k * initial_window` (relative to
    /// `max(|kappa_hat|, 1)`) up to this relative half-width. It is further
    /// capped below half the spacing to the neighbouring closed-form levels.
    pub max_window: f64,
    pub initial_window: f64,
    /// Stop when the bracket is narrower than `rel_tol * max(1, |kappa|)`.
    pub rel_tol: f64,
    pub thresholds: Thresholds,
    pub whittaker: WhittakerOptions,
}

impl Default for QuantizeOptions {
    fn default() -> Self {
        QuantizeOptions {
            max_window: 0.512,
            initial_window: 1e-3,
            rel_tol: 1e-12,
            thresholds: Thresholds::default(),
            whittaker: WhittakerOptions::default(),
        }
    }
}

/// Result of exact quantization with its diagnostics.
#[derive(Debug, Clone, PartialEq)]
pub struct Quantization {
    pub level: EnergyLevel,
    /// Final bracket in `kappa`.
    pub bracket: (f64, f64),
    /// The closed-form starting point.
    pub kappa_guess: f64,
    /// Midpoints of further sign changes seen inside the search window.
    /// They are reported, not interpreted.
    pub extra_sign_changes: Vec<f64>,
}

/// Exact level `n`: the root of `W_{kappa, i mu}(x0)` nearest to the closed-form
/// estimate.
pub fn quantize_exact(params: &PhysicalParams, n: u32) -> Result<EnergyLevel> {
    quantize_exact_with(params, n, &QuantizeOptions::default()).map(|q| q.level)
}

#[derive(Debug, Clone, Copy)]
struct Sample {
    kappa: f64,
    w: WhittakerW,
}

impl Sample {
    fn sign(&self) -> f64 {
        self.w.mantissa.signum()
    }

    fn reliable(&self) -> bool {
        self.w.mantissa.abs() > self.w.error
    }
}

pub fn quantize_exact_with(
    params: &PhysicalParams,
    n: u32,
    opts: &QuantizeOptions,
) -> Result<Quantization> {
    let derived = derive(params)?;
    let map = KappaMap::new(params)?;
    if n == 0 {
        return Err(Error::Domain("level index starts at n = 1".into()));
    }
    let mu = derived.mu;
    let x0 = derived.x0;
    let guess_level = energy_levels_asymptotic_with(params, n, &opts.thresholds)?[n as usize - 1];
    let kappa_hat = map.kappa_of_energy(guess_level.energy);

    let eval = |kappa: f64| -> Result<Sample> {
        let w = whittaker_w_imag_with(kappa, mu, x0, &opts.whittaker)?;
        Ok(Sample { kappa, w })
    };

    // neighbouring closed-form levels sit a factor e^{2 pi / Lambda} away in beta
    let half_spacing = 1.0 - (-PI / derived.lambda_cap).exp();
    let max_window = opts.max_window.min(half_spacing);
    let scale = kappa_hat.abs().max(1.0);

    let center = eval(kappa_hat)?;
    let mut lower = vec![center];
    let mut upper = vec![center];
    let mut delta = opts.initial_window;
    while delta <= max_window * (1.0 + 1e-12) {
        lower.push(eval(kappa_hat - delta * scale)?);
        upper.push(eval(kappa_hat + delta * scale)?);
        delta *= 2.0;
    }

    // all grid brackets, ordered by distance from the guess
    let mut brackets: Vec<(Sample, Sample)> = Vec::new();
    for side in [&lower, &upper] {
        for pair in side.windows(2) {
            let (a, b) = (pair[0], pair[1]);
            if a.sign() * b.sign() < 0.0 {
                let (lo, hi) = if a.kappa < b.kappa { (a, b) } else { (b, a) };
                brackets.push((lo, hi));
            }
        }
    }
    if center.w.mantissa == 0.0 {
        brackets.push((center, center));
    }
    brackets.sort_by(|p, q| {
        let dp = (0.5 * (p.0.kappa + p.1.kappa) - kappa_hat).abs();
        let dq = (0.5 * (q.0.kappa + q.1.kappa) - kappa_hat).abs();
        dp.total_cmp(&dq)
    });
    let Some(&(mut lo, mut hi)) = brackets.first() else {
        return Err(Error::Bracket {
            kappa_guess: kappa_hat,
            window: max_window,
        });
    };
    if !(lo.reliable() && hi.reliable()) {
        return Err(Error::AccuracyLoss {
            what: "exact quantization bracket (W below its error estimate)",
            residual: (lo.w.error / lo.w.mantissa.abs()).max(hi.w.error / hi.w.mantissa.abs()),
            limit: 1.0,
        });
    }
    let extra_sign_changes = brackets[1..]
        .iter()
        .map(|(a, b)| 0.5 * (a.kappa + b.kappa))
        .collect();

    let mut noise_floor = 0.0_f64;
    while hi.kappa - lo.kappa > opts.rel_tol * lo.kappa.abs().max(hi.kappa.abs()).max(1.0) {
        let mid_k = 0.5 * (lo.kappa + hi.kappa);
        if mid_k <= lo.kappa || mid_k >= hi.kappa {
            break;
        }
        let mid = eval(mid_k)?;
        if mid.w.mantissa == 0.0 {
            lo = mid;
            hi = mid;
            break;
        }
        if !mid.reliable() {
            // sign of W is noise here; the root is only known to the bracket
            noise_floor = hi.kappa - lo.kappa;
            break;
        }
        if mid.sign() == lo.sign() {
            lo = mid;
        } else {
            hi = mid;
        }
    }

    let kappa = 0.5 * (lo.kappa + hi.kappa);
    let energy = map.energy_of_kappa(kappa);
    let half_width = 0.5 * (hi.kappa - lo.kappa) + noise_floor;
    let level = EnergyLevel {
        n,
        ell: params.ell,
        energy,
        route: Route::ExactQuantization,
        kappa: Some(kappa),
        estimated_error: 2.0 * params.omega * half_width + 4.0 * f64::EPSILON * energy.abs(),
        flags: RegimeFlags::evaluate(x0, Some(kappa), &opts.thresholds),
    };
    Ok(Quantization {
        level,
        bracket: (lo.kappa, hi.kappa),
        kappa_guess: kappa_hat,
        extra_sign_changes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::whittaker_w_imag;

    fn regime_set() -> PhysicalParams {
        PhysicalParams::new(1.0, 1.0, 12.5f64.sqrt(), 1e-3, 0.1, 0).unwrap()
    }

    #[test]
    fn ground_level_matches_extended_precision_root() {
        // root of W_{kappa, 2.5 i}(1e-5) found with 40-digit arithmetic
        let level = quantize_exact(&regime_set(), 1).unwrap();
        let expect = -293.913_130_911_633_26;
        assert!((level.energy - expect).abs() < 1e-7 * expect.abs(), "{}", level.energy);
    }

    #[test]
    fn returned_kappa_is_a_sign_change() {
        let p = regime_set();
        let mu = derive(&p).unwrap().mu;
        for n in 1..=2 {
            let k = quantize_exact(&p, n).unwrap().kappa.unwrap();
            let d = 1e-6 * k.abs();
            let a = whittaker_w_imag(k - d, mu, p.x0()).unwrap().mantissa;
            let b = whittaker_w_imag(k + d, mu, p.x0()).unwrap().mantissa;
            assert!(a * b < 0.0, "n={n}");
        }
    }

    #[test]
    fn requires_oscillator() {
        assert!(quantize_exact(&regime_set().with_omega(0.0), 1).is_err());
    }

    #[test]
    fn regime_gate_propagates() {
        let p = PhysicalParams::new(1.0, 1.0, 2f64.sqrt(), 1e-3, 0.1, 2).unwrap();
        assert!(matches!(
            quantize_exact(&p, 1),
            Err(Error::NoBoundStateRegime { .. })
        ));
    }
}
