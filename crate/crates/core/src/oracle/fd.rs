use super::sturm::{sturm_tridiag_eigs, tridiag_eigenvector};
use super::{GridScheme, RadialGridSpec, RadialProblem};
use crate::error::{Error, Result};

/// Lowest eigenvalues `tau_k = 2 m E_k - p_z^2` with Richardson error estimates.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleResult {
    /// Richardson-extrapolated eigenvalues, ascending.
    pub eigenvalues_tau: Vec<f64>,
    pub grid: RadialGridSpec,
    /// `|tau(h/2) - tau(h)| / 3` for each eigenvalue.
    pub richardson_error_estimate: Vec<f64>,
    /// Raw eigenvalues on the half-step grid.
    pub fine_tau: Vec<f64>,
}

impl OracleResult {
    pub fn energies(&self, problem: &RadialProblem) -> Vec<f64> {
        self.eigenvalues_tau
            .iter()
            .map(|&t| problem.energy_of_tau(t))
            .collect()
    }

    /// Error estimates converted to energy units.
    pub fn energy_errors(&self, problem: &RadialProblem) -> Vec<f64> {
        self.richardson_error_estimate
            .iter()
            .map(|e| e / (2.0 * problem.mass))
            .collect()
    }
}

/// Radius where `-Lambda^2/r^2 + m^2 omega^2 r^2 = tau` on the outer side.
pub fn outer_turning_point(problem: &RadialProblem, tau: f64) -> Option<f64> {
    let mw = problem.mass * problem.omega;
    if mw > 0.0 {
        let disc = tau * tau + 4.0 * mw * mw * problem.lambda_sq;
        if disc < 0.0 {
            return None;
        }
        let r2 = (tau + disc.sqrt()) / (2.0 * mw * mw);
        (r2 > 0.0).then(|| r2.sqrt())
    } else if tau < 0.0 && problem.lambda_sq > 0.0 {
        Some((problem.lambda_sq / -tau).sqrt())
    } else {
        None
    }
}

/// Symmetrized tridiagonal matrix; `g = sqrt(weight) f` are its eigenvectors.
struct Discretization {
    diag: Vec<f64>,
    off: Vec<f64>,
}

fn discretize(problem: &RadialProblem, grid: &RadialGridSpec, n: usize) -> Discretization {
    let mut diag = Vec::with_capacity(n);
    let mut off = Vec::with_capacity(n.saturating_sub(1));
    match grid.scheme {
        GridScheme::LogUniform => {
            // s = ln r: -f_ss - Lambda^2 f + m^2 omega^2 r^4 f = tau r^2 f
            let s_min = grid.r_min.ln();
            let h = (grid.r_max.ln() - s_min) / (n + 1) as f64;
            let mw = problem.mass * problem.omega;
            let r: Vec<f64> = (1..=n).map(|i| (s_min + i as f64 * h).exp()).collect();
            for i in 0..n {
                let a = 2.0 / (h * h) - problem.lambda_sq + mw * mw * r[i].powi(4);
                diag.push(a / (r[i] * r[i]));
                if i + 1 < n {
                    off.push(-1.0 / (h * h * r[i] * r[i + 1]));
                }
            }
        }
        GridScheme::Uniform if grid.r_min > 0.0 => {
            // nodes r_min + i h, flux form -(r f')' weighted by r
            let h = (grid.r_max - grid.r_min) / (n + 1) as f64;
            let r: Vec<f64> = (1..=n).map(|i| grid.r_min + i as f64 * h).collect();
            for i in 0..n {
                let a = (2.0 * r[i]) / (h * h) + r[i] * problem.potential_tau(r[i]);
                diag.push(a / r[i]);
                if i + 1 < n {
                    off.push(-(r[i] + 0.5 * h) / (h * h * (r[i] * r[i + 1]).sqrt()));
                }
            }
        }
        GridScheme::Uniform => {
            // cell centres (i + 1/2) h, zero flux through r = 0, Dirichlet on the
            // outer face r_max = n h via a mirrored ghost value
            let h = grid.r_max / n as f64;
            let r: Vec<f64> = (0..n).map(|i| (i as f64 + 0.5) * h).collect();
            for i in 0..n {
                let inner = r[i] - 0.5 * h;
                let outer = r[i] + 0.5 * h;
                let outer_w = if i + 1 == n { 2.0 * outer } else { outer };
                let a = (inner + outer_w) / (h * h) + r[i] * problem.potential_tau(r[i]);
                diag.push(a / r[i]);
                if i + 1 < n {
                    off.push(-outer / (h * h * (r[i] * r[i + 1]).sqrt()));
                }
            }
        }
    }
    Discretization { diag, off }
}

/// Interior point count of the half-step grid.
fn refined_points(grid: &RadialGridSpec) -> usize {
    match grid.scheme {
        GridScheme::Uniform if grid.r_min == 0.0 => 2 * grid.points,
        _ => 2 * grid.points + 1,
    }
}

/// The `k_levels` lowest `tau`, second-order central differences, Richardson
/// extrapolated from a half-step refinement.
pub fn fd_eigensolve(
    problem: impl Into<RadialProblem>,
    grid: &RadialGridSpec,
    k_levels: usize,
) -> Result<OracleResult> {
    let problem = problem.into();
    grid.validate()?;
    if k_levels == 0 {
        return Err(Error::Domain("k_levels must be >= 1".into()));
    }
    if grid.r_min == 0.0 && problem.lambda_sq > 0.0 {
        return Err(Error::Domain(
            "an attractive inverse-square term needs a cut-off r_min > 0".into(),
        ));
    }
    let fine_n = refined_points(grid);
    let want = (k_levels + 1).min(grid.points);
    if k_levels > grid.points {
        return Err(Error::DimensionMismatch(format!(
            "{k_levels} levels requested from a {}-point grid",
            grid.points
        )));
    }

    let (coarse, fine) = rayon::join(
        || {
            let d = discretize(&problem, grid, grid.points);
            sturm_tridiag_eigs(&d.diag, &d.off, want)
        },
        || {
            let d = discretize(&problem, grid, fine_n);
            let eigs = sturm_tridiag_eigs(&d.diag, &d.off, want);
            (d, eigs)
        },
    );
    let coarse = coarse?;
    let (fine_disc, fine) = (fine.0, fine.1?);

    let mut tau = Vec::with_capacity(k_levels);
    let mut est = Vec::with_capacity(k_levels);
    for j in 0..k_levels {
        let diff = fine[j] - coarse[j];
        tau.push(fine[j] + diff / 3.0);
        est.push(diff.abs() / 3.0);
    }

    for j in 0..k_levels {
        let spacing = if j + 1 < fine.len() {
            fine[j + 1] - fine[j]
        } else if j > 0 {
            fine[j] - fine[j - 1]
        } else {
            f64::INFINITY
        };
        if est[j] > 0.01 * spacing {
            return Err(Error::GridTooCoarse {
                estimate: est[j],
                spacing,
            });
        }
    }

    // eigenfunction mass in the outermost 5% of the grid
    let tail_start = fine_n - (fine_n / 20).max(1);
    for &lam in fine.iter().take(k_levels) {
        let g = tridiag_eigenvector(&fine_disc.diag, &fine_disc.off, lam);
        let total: f64 = g.iter().map(|v| v * v).sum();
        let tail: f64 = g[tail_start..].iter().map(|v| v * v).sum();
        if total > 0.0 && tail / total > 1e-6 {
            return Err(Error::Domain(format!(
                "r_max = {} too small: {:.2e} of the eigenfunction mass lies at the outer boundary",
                grid.r_max,
                tail / total
            )));
        }
    }

    Ok(OracleResult {
        eigenvalues_tau: tau,
        grid: *grid,
        richardson_error_estimate: est,
        fine_tau: fine[..k_levels].to_vec(),
    })
}
