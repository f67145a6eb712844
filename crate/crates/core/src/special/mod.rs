//! Special functions of imaginary order: complex log-Gamma, Kummer's
//! confluent hypergeometric function, the Whittaker functions `M_{kappa, i mu}`
//! and `W_{kappa, i mu}`, and the large-argument and small-argument
//! approximations used by the closed-form spectrum.
//!
//! Every evaluation carries an estimated absolute error next to its value so
//! that root finders can tell a genuine sign change from rounding noise.

mod asymptotic;
pub mod dd;
mod gamma;
mod kummer;
mod whittaker;

pub use asymptotic::{
    gamma_imaginary_stirling, gamma_uniform_asymptotic, ln_gamma_uniform_asymptotic,
    whittaker_w_smallx_approx, whittaker_w_smallx_approx_with, SmallXApprox, SmallXOptions,
};
pub use gamma::{gamma_complex, ln_gamma_complex};
pub use kummer::kummer_m;
pub use whittaker::{
    whittaker_m_imag, whittaker_w_imag, whittaker_w_imag_with, WRoute, WhittakerOptions,
    WhittakerW,
};

/// Complex argument/value type used throughout the special functions.
pub type ComplexVal = num_complex::Complex64;

/// A computed value together with an estimate of its absolute error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate<T> {
    pub value: T,
    pub error: f64,
}
