//! Finite-difference oracle: 2D oscillator check, then the cut-off problem.

use dipole_spectrum::oracle::{fd_eigensolve, numerov_node_count, RadialGridSpec, RadialProblem};
use dipole_spectrum::PhysicalParams;

fn main() -> dipole_spectrum::Result<()> {
    // E = omega (2 n_r + |ell| + 1); tau = 2 m E
    let osc = RadialProblem::oscillator(1.0, 1.0, 0);
    let res = fd_eigensolve(osc, &RadialGridSpec::uniform(0.0, 12.0, 1000), 4)?;
    for (t, e) in res.eigenvalues_tau.iter().zip(&res.richardson_error_estimate) {
        println!("oscillator tau = {t:.10} +- {e:.1e}");
    }

    let p = PhysicalParams::new(1.0, 1.0, 12.5f64.sqrt(), 1e-3, 0.1, 0)?;
    let problem = RadialProblem::from(&p);
    let grid = RadialGridSpec::default_for(&p, 3)?;
    println!("grid {:?}", grid);
    let res = fd_eigensolve(problem, &grid, 3)?;
    for (e, err) in res.energies(&problem).iter().zip(res.energy_errors(&problem)) {
        let shoot = RadialGridSpec { points: 40_000, ..grid };
        let below = numerov_node_count(problem, e - 1e-6 * e.abs(), &shoot)?;
        println!("E = {e:+.12e} +- {err:.1e}, levels strictly below: {below}");
    }
    Ok(())
}
