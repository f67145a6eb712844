use std::f64::consts::FRAC_PI_4;

use super::{GridScheme, RadialGridSpec, RadialProblem};
use crate::error::{Error, Result};

/// Interior sign changes of the solution that vanishes at `r_min`, integrated
/// outward with Numerov at energy `energy`. By Sturm oscillation this counts
/// the Dirichlet levels of `[r_min, r_max]` lying below `energy`.
pub fn numerov_node_count(
    problem: impl Into<RadialProblem>,
    energy: f64,
    grid: &RadialGridSpec,
) -> Result<usize> {
    let problem = problem.into();
    grid.validate()?;
    let tau = problem.tau_of_energy(energy);
    let n = grid.points + 1;

    // y'' = q(t) y on a uniform grid in t, with t = r (y = sqrt(r) f) or t = ln r (y = f)
    let (t0, h, q): (f64, f64, Box<dyn Fn(f64) -> f64>) = match grid.scheme {
        GridScheme::Uniform => {
            let h = (grid.r_max - grid.r_min) / n as f64;
            let mw = problem.mass * problem.omega;
            let lsq = problem.lambda_sq;
            (
                grid.r_min,
                h,
                Box::new(move |r: f64| -(lsq + 0.25) / (r * r) + mw * mw * r * r - tau),
            )
        }
        GridScheme::LogUniform => {
            let s0 = grid.r_min.ln();
            let h = (grid.r_max.ln() - s0) / n as f64;
            let mw = problem.mass * problem.omega;
            let lsq = problem.lambda_sq;
            (
                s0,
                h,
                Box::new(move |s: f64| {
                    let r2 = (2.0 * s).exp();
                    -lsq + mw * mw * r2 * r2 - tau * r2
                }),
            )
        }
    };

    let (mut y_prev, mut y_cur, first) = if grid.scheme == GridScheme::Uniform && grid.r_min == 0.0 {
        if problem.lambda_sq > 0.0 {
            return Err(Error::Domain(
                "an attractive inverse-square term needs a cut-off r_min > 0".into(),
            ));
        }
        // regular solution u ~ r^{1/2 + nu}, nu = sqrt(-Lambda^2)
        let p = 0.5 + (-problem.lambda_sq).sqrt();
        (h.powf(p), (2.0 * h).powf(p), 2)
    } else {
        (0.0, h, 1)
    };

    let h2 = h * h / 12.0;
    let mut nodes = 0;
    let mut last_sign = y_cur.signum();
    for i in first..n {
        let t_prev = t0 + (i - 1) as f64 * h;
        let t_cur = t0 + i as f64 * h;
        let t_next = t0 + (i + 1) as f64 * h;
        let q_cur = q(t_cur);
        let advance = h * (-q_cur).max(0.0).sqrt();
        if advance > FRAC_PI_4 {
            return Err(Error::StepTooLarge {
                advance,
                r: match grid.scheme {
                    GridScheme::Uniform => t_cur,
                    GridScheme::LogUniform => t_cur.exp(),
                },
            });
        }
        let y_next = (2.0 * (1.0 + 5.0 * h2 * q_cur) * y_cur - (1.0 - h2 * q(t_prev)) * y_prev)
            / (1.0 - h2 * q(t_next));
        y_prev = y_cur;
        y_cur = y_next;
        let mag = y_cur.abs();
        if mag > 1e150 {
            y_prev /= mag;
            y_cur /= mag;
        }
        // the last step lands on r_max itself, which is not interior
        if i + 1 < n && y_cur != 0.0 {
            let s = y_cur.signum();
            if s != last_sign {
                nodes += 1;
                last_sign = s;
            }
        }
    }
    Ok(nodes)
}
