//! The potential outside the cylinder, with and without the centrifugal term.

use dipole_spectrum::model::{effective_potential, potential_minimum};
use dipole_spectrum::PhysicalParams;

fn main() -> dipole_spectrum::Result<()> {
    let p = PhysicalParams::new(1.0, 1.0, 1.0, 1.0, 0.1, 3)?;
    match potential_minimum(&p) {
        Some(r) => println!("minimum with centrifugal term at r = {r:.6}"),
        None => println!("monotone potential"),
    }
    println!("r,V,V_centrifugal");
    for i in 0..=20 {
        let r = 0.1 + 0.15 * i as f64;
        println!(
            "{r:.3},{:+.6e},{:+.6e}",
            effective_potential(&p, r, false)?,
            effective_potential(&p, r, true)?
        );
    }
    if let Err(e) = effective_potential(&p, 0.05, false) {
        println!("r = 0.05: {e}");
    }
    Ok(())
}
