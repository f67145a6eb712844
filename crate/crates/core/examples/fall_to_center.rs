//! Ground level as the cut-off shrinks: E_1 -> -infinity like 1/R^2.

use dipole_spectrum::cli::oracle_levels;
use dipole_spectrum::spectrum::{energy_levels_asymptotic, quantize_exact, Thresholds};
use dipole_spectrum::PhysicalParams;

fn main() -> dipole_spectrum::Result<()> {
    let base = PhysicalParams::new(1.0, 1.0, 12.5f64.sqrt(), 1e-3, 0.1, 0)?;
    println!("R, E1 closed form, E1 exact, E1 oracle, R^2 (omega - E1) exact");
    for r in [0.4, 0.2, 0.1, 0.05, 0.025, 0.0125] {
        let p = base.with_radius(r);
        let a = energy_levels_asymptotic(&p, 1)?[0];
        let e = quantize_exact(&p, 1)?;
        let o = oracle_levels(&p, 1, None, &Thresholds::default())?[0];
        println!(
            "{r:<7} {:+.8e} {:+.8e} {:+.8e} {:.10}",
            a.energy,
            e.energy,
            o.energy,
            r * r * e.binding(&p)
        );
    }
    Ok(())
}
