//! Complex log-Gamma by the Lanczos approximation (g = 607/128, 15 terms),
//! with the reflection formula for `Re z < 1/2`.

use num_complex::Complex64;
use std::f64::consts::PI;

use super::Estimate;
use crate::error::{Error, Result};

const LANCZOS_G: f64 = 607.0 / 128.0;

const LANCZOS_COEF: [f64; 15] = [
    0.999_999_999_999_997_1,
    57.156_235_665_862_92,
    -59.597_960_355_475_49,
    14.136_097_974_741_747,
    -0.491_913_816_097_620_2,
    0.339_946_499_848_118_9e-4,
    0.465_236_289_270_485_76e-4,
    -0.983_744_753_048_795_6e-4,
    0.158_088_703_224_912_5e-3,
    -0.210_264_441_724_104_9e-3,
    0.217_439_618_115_212_64e-3,
    -0.164_318_106_536_763_9e-3,
    0.844_182_239_838_527_4e-4,
    -0.261_908_384_015_814_1e-4,
    0.368_991_826_595_316_2e-5,
];

/// Relative accuracy of the Lanczos sum on the right half-plane.
const LANCZOS_REL_ERR: f64 = 2e-15;

const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;

/// `ln Gamma(z)` on the branch that is continuous in the right half-plane and
/// real on the positive real axis. `exp` of the value equals `Gamma(z)`.
pub fn ln_gamma_complex(z: Complex64) -> Result<Estimate<Complex64>> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::Domain(format!("ln_gamma of non-finite argument {z}")));
    }
    let nearest = z.re.round();
    if nearest <= 0.0 {
        let dist = (z - nearest).norm();
        if dist <= 8.0 * f64::EPSILON * nearest.abs().max(1.0) {
            return Err(Error::Pole { re: z.re, im: z.im });
        }
    }

    // the two real zeros of ln Gamma
    if z.im == 0.0 && (z.re == 1.0 || z.re == 2.0) {
        return Ok(Estimate {
            value: Complex64::new(0.0, 0.0),
            error: 0.0,
        });
    }

    let est = if z.re >= 0.5 {
        lanczos_ln(z)
    } else {
        // Gamma(z) Gamma(1 - z) = pi / sin(pi z)
        let refl = lanczos_ln(Complex64::new(1.0, 0.0) - z);
        let ln_sin = ln_sin_pi(z);
        let value = Complex64::new(PI.ln(), 0.0) - ln_sin.value - refl.value;
        Estimate {
            value,
            error: refl.error + ln_sin.error + f64::EPSILON * (PI.ln() + value.norm()),
        }
    };
    if !(est.value.re.is_finite() && est.value.im.is_finite()) {
        return Err(Error::Domain(format!("ln_gamma overflow at {z}")));
    }
    Ok(est)
}

/// `Gamma(z)` as a complex number; overflows for large arguments, prefer
/// [`ln_gamma_complex`] there.
pub fn gamma_complex(z: Complex64) -> Result<Estimate<Complex64>> {
    let lg = ln_gamma_complex(z)?;
    let value = lg.value.exp();
    if !(value.re.is_finite() && value.im.is_finite()) {
        return Err(Error::Domain(format!("Gamma({z}) overflows f64")));
    }
    Ok(Estimate {
        value,
        error: value.norm() * lg.error,
    })
}

fn lanczos_ln(z: Complex64) -> Estimate<Complex64> {
    let zm1 = z - 1.0;
    let mut sum = Complex64::new(LANCZOS_COEF[0], 0.0);
    for (k, &c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        sum += c / (zm1 + k as f64);
    }
    let t = zm1 + LANCZOS_G + 0.5;
    let ln_t = t.ln();
    let main = (zm1 + 0.5) * ln_t;
    let value = Complex64::new(HALF_LN_2PI, 0.0) + main - t + sum.ln();
    let error = LANCZOS_REL_ERR + 4.0 * f64::EPSILON * (main.norm() + t.norm() + 1.0);
    Estimate { value, error }
}

/// `ln sin(pi z)` without overflow for large `|Im z|` (branch irrelevant,
/// only the exponential is used).
fn ln_sin_pi(z: Complex64) -> Estimate<Complex64> {
    if z.im.abs() < 15.0 {
        let s = (z * PI).sin();
        return Estimate {
            value: s.ln(),
            error: 4.0 * f64::EPSILON * (1.0 + (z * PI).norm()),
        };
    }
    if z.im < 0.0 {
        let c = ln_sin_pi(z.conj());
        return Estimate {
            value: c.value.conj(),
            error: c.error,
        };
    }
    // sin(pi z) = exp(-i pi z) (exp(2 i pi z) - 1) / (2i), exp(2 i pi z) tiny
    let i = Complex64::i();
    let w = (2.0 * PI * i * z).exp();
    let value = -i * PI * z + ((w - 1.0) / (2.0 * i)).ln();
    Estimate {
        value,
        error: 4.0 * f64::EPSILON * (1.0 + PI * z.norm()),
    }
}
