//! Radial profiles of the lowest exact levels, written as CSV.

use dipole_spectrum::spectrum::{quantize_exact, radial_wavefunction};
use dipole_spectrum::PhysicalParams;

fn main() -> dipole_spectrum::Result<()> {
    let p = PhysicalParams::new(1.0, 1.0, 12.5f64.sqrt(), 1e-3, 0.1, 0)?;
    let levels = (1..=3).map(|n| quantize_exact(&p, n)).collect::<Result<Vec<_>, _>>()?;
    let profiles = levels
        .iter()
        .map(|l| radial_wavefunction(&p, l, 1.2, 121))
        .collect::<Result<Vec<_>, _>>()?;
    for (l, prof) in levels.iter().zip(&profiles) {
        eprintln!(
            "n={} E={:+.6e} f(R)={:.1e} sign changes {}",
            l.n,
            l.energy,
            prof.boundary_residual(),
            prof.node_count()
        );
    }
    println!("r,f1,f2,f3");
    for i in 0..profiles[0].r_samples.len() {
        println!(
            "{:.6},{:+.8e},{:+.8e},{:+.8e}",
            profiles[0].r_samples[i], profiles[0].f_values[i], profiles[1].f_values[i], profiles[2].f_values[i]
        );
    }
    Ok(())
}
