//! Closed-form geometric spectrum and its regime flags.

use dipole_spectrum::spectrum::energy_levels_asymptotic;
use dipole_spectrum::{derive, PhysicalParams};

fn main() -> dipole_spectrum::Result<()> {
    let p = PhysicalParams::new(1.0, 1.0, 12.5f64.sqrt(), 1e-3, 0.1, 0)?;
    let d = derive(&p)?;
    println!("Lambda = {}, mu = {}, x0 = {:e}", d.lambda_cap, d.mu, d.x0);
    println!("level ratio e^(-2 pi / Lambda) = {:.12}", (-2.0 * std::f64::consts::PI / d.lambda_cap).exp());

    let levels = energy_levels_asymptotic(&p, 6)?;
    for pair in levels.windows(2) {
        let (a, b) = (&pair[0], &pair[1]);
        println!(
            "n={} E={:+.10e} kappa={:+.6e} binding ratio to next {:.12} flags {:?}",
            a.n,
            a.energy,
            a.kappa.unwrap(),
            b.binding(&p) / a.binding(&p),
            a.flags.violations()
        );
    }

    // the general form at ell = 1
    for l in energy_levels_asymptotic(&p.with_ell(1), 3)? {
        println!("ell=1 n={} E={:+.10e}", l.n, l.energy);
    }
    Ok(())
}
