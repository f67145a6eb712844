//! Bound-state spectrum of a neutral particle with an induced electric dipole
//! moment in the field of a uniformly charged non-conducting cylinder, under
//! an additional two-dimensional harmonic confinement.
//!
//! The cylinder radius `R` acts as a hard-wall cut-off. Outside it the particle
//! feels `V(r) = -alpha lambda^2 / r^2 + m omega^2 r^2 / 2` (units with
//! `hbar = c = 1`). Three independent routes produce energy levels:
//!
//! * [`spectrum::energy_levels_asymptotic`]: the closed-form geometric spectrum
//!   obtained from the small-argument form of the Whittaker function.
//! * [`spectrum::quantize_exact`]: roots in `kappa` of `W_{kappa, i mu}(m omega R^2) = 0`.
//! * [`oracle::fd_eigensolve`]: a finite-difference discretisation of the
//!   radial equation solved by Sturm-sequence bisection.
//!
//! The [`cli`] module backs the `dipole-spectrum` binary.

pub mod cli;
pub mod error;
pub mod model;
pub mod oracle;
pub mod special;
pub mod spectrum;

pub use error::{Error, Result};
pub use model::{derive, DerivedParams, KappaMap, PhysicalParams};
pub use num_complex::Complex64;
pub use spectrum::{EnergyLevel, RadialProfile, Route};
