//! Kummer's confluent hypergeometric function `M(a, b, x)` for complex
//! parameters and non-negative real argument.
//!
//! The power series is summed in `f64` with compensated addition. When the
//! running error estimate shows cancellation (terms much larger than the
//! result) the series is re-summed with double-double terms, and if that is
//! still not enough the Kummer transformation `M(a,b,x) = e^x M(b-a,b,-x)` is
//! tried as well.

use num_complex::Complex64;

use super::dd::{Dd, DdComplex, DD_EPSILON};
use super::Estimate;
use crate::error::{Error, Result};

const MAX_TERMS: usize = 10_000;
const TERM_TOL: f64 = 1e-16;
/// Relative error above which the `f64` pass is redone in double-double.
const F64_ACCEPT: f64 = 1e-13;
const DD_ACCEPT: f64 = 1e-13;

/// `M(a, b, x) = sum_k (a)_k / (b)_k x^k / k!`.
pub fn kummer_m(a: Complex64, b: Complex64, x: f64) -> Result<Estimate<Complex64>> {
    if !(a.re.is_finite() && a.im.is_finite() && b.re.is_finite() && b.im.is_finite()) {
        return Err(Error::Domain("non-finite Kummer parameter".into()));
    }
    if !(x >= 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!("Kummer argument x = {x} must be >= 0")));
    }
    let nb = b.re.round();
    if nb <= 0.0 && (b - nb).norm() <= 8.0 * f64::EPSILON * nb.abs().max(1.0) {
        return Err(Error::ParameterPole { re: b.re, im: b.im });
    }
    if x == 0.0 {
        return Ok(Estimate {
            value: Complex64::new(1.0, 0.0),
            error: 0.0,
        });
    }

    let direct = series_f64(a, b, x)?;
    if direct.relative_error() <= F64_ACCEPT {
        return Ok(direct.into_estimate());
    }

    let dd = series_dd(a, b, x, 1.0)?;
    if dd.relative_error() <= DD_ACCEPT {
        return Ok(dd.into_estimate());
    }

    // e^x M(b - a, b, -x): alternating in the opposite regime
    let transformed = series_dd(b - a, b, -x, x.exp())?;
    let best = [direct, dd, transformed]
        .into_iter()
        .min_by(|p, q| p.relative_error().total_cmp(&q.relative_error()))
        .expect("non-empty");
    Ok(best.into_estimate())
}

#[derive(Debug, Clone, Copy)]
struct SeriesSum {
    sum: Complex64,
    error: f64,
}

impl SeriesSum {
    fn relative_error(&self) -> f64 {
        let m = self.sum.norm();
        if m == 0.0 {
            f64::INFINITY
        } else {
            self.error / m
        }
    }

    fn into_estimate(self) -> Estimate<Complex64> {
        Estimate {
            value: self.sum,
            error: self.error,
        }
    }
}

/// Neumaier summation on one real component.
#[derive(Debug, Default, Clone, Copy)]
struct Compensated {
    sum: f64,
    comp: f64,
}

impl Compensated {
    fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.comp += (self.sum - t) + v;
        } else {
            self.comp += (v - t) + self.sum;
        }
        self.sum = t;
    }

    fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

fn series_f64(a: Complex64, b: Complex64, x: f64) -> Result<SeriesSum> {
    let mut term = Complex64::new(1.0, 0.0);
    let mut re = Compensated::default();
    let mut im = Compensated::default();
    re.add(1.0);
    // each term carries about (k + 2) roundings from the product recurrence
    let mut weighted_abs = 2.0;
    let mut small = 0;
    for k in 0..MAX_TERMS {
        let kf = k as f64;
        let ratio = (a + kf) * x / ((b + kf) * (kf + 1.0));
        term *= ratio;
        re.add(term.re);
        im.add(term.im);
        let tn = term.norm();
        weighted_abs += (kf + 3.0) * tn;
        if !tn.is_finite() {
            return Err(Error::Convergence {
                what: "Kummer series (overflow)",
                terms: k + 1,
            });
        }
        if tn == 0.0 {
            break;
        }
        let running = Complex64::new(re.value(), im.value()).norm();
        if tn <= TERM_TOL * running {
            small += 1;
        } else {
            small = 0;
        }
        if small >= 2 && ratio.norm() < 0.5 {
            let sum = Complex64::new(re.value(), im.value());
            return Ok(SeriesSum {
                sum,
                error: 2.0 * f64::EPSILON * weighted_abs + tn,
            });
        }
    }
    let sum = Complex64::new(re.value(), im.value());
    if term.norm() == 0.0 {
        return Ok(SeriesSum {
            sum,
            error: 2.0 * f64::EPSILON * weighted_abs,
        });
    }
    Err(Error::Convergence {
        what: "Kummer series",
        terms: MAX_TERMS,
    })
}

fn series_dd(a: Complex64, b: Complex64, x: f64, prefactor: f64) -> Result<SeriesSum> {
    let a = DdComplex::new(a.re, a.im);
    let b = DdComplex::new(b.re, b.im);
    let xd = Dd::new(x);
    let mut term = DdComplex::ONE;
    let mut sum = DdComplex::ONE;
    let mut weighted_abs = 2.0;
    let mut small = 0;
    let mut last = 1.0;
    let mut finished = false;
    for k in 0..MAX_TERMS {
        let kd = Dd::new(k as f64);
        let num = DdComplex {
            re: a.re + kd,
            im: a.im,
        }
        .scale(xd);
        let den = DdComplex {
            re: b.re + kd,
            im: b.im,
        }
        .scale(kd + Dd::ONE);
        let ratio = num / den;
        term = term * ratio;
        sum = sum + term;
        let tn = term.norm_f64();
        last = tn;
        weighted_abs += (k as f64 + 3.0) * tn;
        if !tn.is_finite() {
            return Err(Error::Convergence {
                what: "Kummer series (overflow)",
                terms: k + 1,
            });
        }
        if tn == 0.0 {
            finished = true;
            break;
        }
        if tn <= TERM_TOL * sum.norm_f64() {
            small += 1;
        } else {
            small = 0;
        }
        if small >= 2 && ratio.norm_f64() < 0.5 {
            finished = true;
            break;
        }
    }
    if !finished {
        return Err(Error::Convergence {
            what: "Kummer series (double-double)",
            terms: MAX_TERMS,
        });
    }
    let value = sum.to_c64() * prefactor;
    let error = prefactor
        * (4.0 * DD_EPSILON * weighted_abs + last + f64::EPSILON * sum.norm_f64());
    Ok(SeriesSum { sum: value, error })
}
