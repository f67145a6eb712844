//! Confinement lifts shallow levels above zero; without it every level is bound.

use dipole_spectrum::cli::oracle_levels;
use dipole_spectrum::oracle::RadialGridSpec;
use dipole_spectrum::spectrum::{energy_levels_asymptotic, quantize_exact, Thresholds};
use dipole_spectrum::PhysicalParams;

fn main() -> dipole_spectrum::Result<()> {
    let confined = PhysicalParams::new(1.0, 1.0, 2.5, 1e-2, 0.1, 0)?;
    let oracle = oracle_levels(&confined, 6, None, &Thresholds::default())?;
    let free = confined.with_omega(0.0);
    let free_asym = energy_levels_asymptotic(&free, 6)?;
    let free_oracle = oracle_levels(
        &free,
        6,
        Some(RadialGridSpec::log_uniform(0.1, 200.0, 4000)),
        &Thresholds::default(),
    )?;
    println!("n, exact (omega=1e-2), oracle (omega=1e-2), closed form (omega=0), oracle (omega=0)");
    for n in 1..=6u32 {
        let i = n as usize - 1;
        println!(
            "{n} {:+.6e} {:+.6e} {:+.6e} {:+.6e}",
            quantize_exact(&confined, n)?.energy,
            oracle[i].energy,
            free_asym[i].energy,
            free_oracle[i].energy
        );
    }
    Ok(())
}
