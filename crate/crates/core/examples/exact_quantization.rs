//! Roots of W_(kappa, i mu)(m omega R^2) = 0 next to their closed-form guesses.

use dipole_spectrum::spectrum::{quantize_exact_with, QuantizeOptions};
use dipole_spectrum::PhysicalParams;

fn main() -> dipole_spectrum::Result<()> {
    let p = PhysicalParams::new(1.0, 1.0, 12.5f64.sqrt(), 1e-3, 0.1, 0)?;
    for n in 1..=4 {
        let q = quantize_exact_with(&p, n, &QuantizeOptions::default())?;
        let kappa = q.level.kappa.unwrap();
        println!(
            "n={n} E={:+.14e} kappa={kappa:+.10e} (guess {:+.6e}, shift {:.2}%) bracket width {:.1e}",
            q.level.energy,
            q.kappa_guess,
            100.0 * (kappa / q.kappa_guess - 1.0),
            q.bracket.1 - q.bracket.0
        );
        if !q.extra_sign_changes.is_empty() {
            println!("  other sign changes in window: {:?}", q.extra_sign_changes);
        }
    }
    Ok(())
}
