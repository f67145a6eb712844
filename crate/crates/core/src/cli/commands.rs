use std::fmt::Write as _;

use clap::ValueEnum;
use num_complex::Complex64;
use rayon::prelude::*;

use super::RunConfig;
use crate::error::{Error, Result};
use crate::model::{derive, effective_potential, KappaMap, PhysicalParams};
use crate::oracle::{fd_eigensolve, outer_turning_point, RadialGridSpec, RadialProblem};
use crate::special::{
    kummer_m, ln_gamma_complex, whittaker_m_imag, whittaker_w_imag,
    whittaker_w_smallx_approx_with, SmallXOptions,
};
use crate::spectrum::{
    energy_levels_asymptotic_with, quantize_exact_with, radial_wavefunction, EnergyLevel,
    QuantizeOptions, RegimeFlags, Route, Thresholds,
};

/// Round-trip exact CSV number.
fn csv_num(v: f64) -> String {
    format!("{v:.16e}")
}

/// Human-readable number, 15 significant digits.
fn human_num(v: f64) -> String {
    format!("{v:.14e}")
}

/// CSV cells never contain commas or newlines.
fn csv_text(s: &str) -> String {
    s.replace([',', '\n', '\r'], ";")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RouteSelection {
    Asymptotic,
    Exact,
    Oracle,
    All,
}

impl RouteSelection {
    fn routes(self) -> Vec<Route> {
        match self {
            RouteSelection::Asymptotic => vec![Route::AsymptoticClosedForm],
            RouteSelection::Exact => vec![Route::ExactQuantization],
            RouteSelection::Oracle => vec![Route::NumericOracle],
            RouteSelection::All => vec![
                Route::AsymptoticClosedForm,
                Route::ExactQuantization,
                Route::NumericOracle,
            ],
        }
    }
}

/// The `k` lowest levels from the finite-difference oracle, on `grid` or on
/// [`RadialGridSpec::default_for`]. Works whether or not the analytic routes
/// admit bound states.
pub fn oracle_levels(
    params: &PhysicalParams,
    k: u32,
    grid: Option<RadialGridSpec>,
    thresholds: &Thresholds,
) -> Result<Vec<EnergyLevel>> {
    params.validate()?;
    let grid = match grid {
        Some(g) => g,
        None => RadialGridSpec::default_for(params, k as usize)?,
    };
    let problem = RadialProblem::from(params);
    let res = fd_eigensolve(problem, &grid, k as usize)?;
    let map = KappaMap::new(params).ok();
    Ok(res
        .energies(&problem)
        .into_iter()
        .zip(res.energy_errors(&problem))
        .enumerate()
        .map(|(j, (energy, err))| {
            let kappa = map.map(|m| m.kappa_of_energy(energy));
            EnergyLevel {
                n: j as u32 + 1,
                ell: params.ell,
                energy,
                route: Route::NumericOracle,
                kappa,
                estimated_error: err,
                flags: RegimeFlags::evaluate(params.x0(), kappa, thresholds),
            }
        })
        .collect())
}

fn exact_levels(params: &PhysicalParams, n_max: u32, thresholds: &Thresholds) -> Result<Vec<EnergyLevel>> {
    let opts = QuantizeOptions {
        thresholds: *thresholds,
        ..Default::default()
    };
    (1..=n_max)
        .into_par_iter()
        .map(|n| quantize_exact_with(params, n, &opts).map(|q| q.level))
        .collect()
}

fn levels_for(config: &RunConfig, route: Route, n_max: u32) -> Result<Vec<EnergyLevel>> {
    let p = &config.params;
    match route {
        Route::AsymptoticClosedForm => energy_levels_asymptotic_with(p, n_max, &config.thresholds),
        Route::ExactQuantization => exact_levels(p, n_max, &config.thresholds),
        Route::NumericOracle => oracle_levels(p, n_max, config.grid_overrides, &config.thresholds),
    }
}

/// `n,ell,route,energy,kappa,estimated_error`, ordered by level then route.
pub fn spectrum_csv(config: &RunConfig, selection: RouteSelection) -> Result<String> {
    config.validate()?;
    let routes = selection.routes();
    let per_route = routes
        .par_iter()
        .map(|&r| levels_for(config, r, config.n_max))
        .collect::<Result<Vec<_>>>()?;
    let mut out = String::from("n,ell,route,energy,kappa,estimated_error\n");
    for i in 0..config.n_max as usize {
        for levels in &per_route {
            let l = &levels[i];
            let _ = writeln!(
                out,
                "{},{},{},{},{},{}",
                l.n,
                l.ell,
                l.route,
                csv_num(l.energy),
                l.kappa.map(csv_num).unwrap_or_default(),
                csv_num(l.estimated_error)
            );
        }
    }
    Ok(out)
}

/// An energy from one route, or the reason it is missing.
#[derive(Debug, Clone, PartialEq)]
pub enum RouteValue {
    Present { energy: f64, error: f64 },
    Absent(String),
}

impl RouteValue {
    pub fn energy(&self) -> Option<f64> {
        match self {
            RouteValue::Present { energy, .. } => Some(*energy),
            RouteValue::Absent(_) => None,
        }
    }

    fn csv(&self) -> String {
        self.energy().map(csv_num).unwrap_or_else(|| "absent".into())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ValidationRow {
    pub n: u32,
    pub ell: i64,
    pub e_asymptotic: RouteValue,
    pub e_exact: RouteValue,
    pub e_oracle: RouteValue,
    /// `|E_exact - E_asym| / (omega + shift - E_asym)`.
    pub rel_gap_asym_exact: Option<f64>,
    /// `|E_exact - E_oracle| / (omega + shift - E_exact)`.
    pub rel_gap_exact_oracle: Option<f64>,
    /// Oracle Richardson estimate in the same relative units.
    pub oracle_rel_error: Option<f64>,
    pub regime_flags: RegimeFlags,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ValidationSummary {
    /// Largest relative gap of either kind over all rows.
    pub max_rel_gap: f64,
    pub max_rel_gap_asym_exact: f64,
    pub max_rel_gap_exact_oracle: f64,
    pub regime_ok: bool,
    /// Names of the thresholds violated by any row.
    pub violations: Vec<&'static str>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ValidationReport {
    pub rows: Vec<ValidationRow>,
    pub summary: ValidationSummary,
}

impl ValidationReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from(
            "n,ell,E_asymptotic,E_exact,E_oracle,oracle_rel_error,rel_gap_asym_exact,rel_gap_exact_oracle,regime_flags,absent_reason\n",
        );
        let opt = |v: Option<f64>| v.map(csv_num).unwrap_or_default();
        for r in &self.rows {
            let flags = r.regime_flags.violations();
            let reasons: Vec<String> = [
                ("asymptotic", &r.e_asymptotic),
                ("exact", &r.e_exact),
                ("oracle", &r.e_oracle),
            ]
            .iter()
            .filter_map(|(name, v)| match v {
                RouteValue::Absent(why) => Some(format!("{name}: {why}")),
                RouteValue::Present { .. } => None,
            })
            .collect();
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{},{},{}",
                r.n,
                r.ell,
                r.e_asymptotic.csv(),
                r.e_exact.csv(),
                r.e_oracle.csv(),
                opt(r.oracle_rel_error),
                opt(r.rel_gap_asym_exact),
                opt(r.rel_gap_exact_oracle),
                if flags.is_empty() { "ok".to_string() } else { flags.join(";") },
                csv_text(&reasons.join(" | "))
            );
        }
        out
    }
}

fn to_values(res: Result<Vec<EnergyLevel>>, n_max: u32) -> Vec<RouteValue> {
    match res {
        Ok(levels) => levels
            .iter()
            .map(|l| RouteValue::Present {
                energy: l.energy,
                error: l.estimated_error,
            })
            .collect(),
        Err(e) => vec![RouteValue::Absent(e.to_string()); n_max as usize],
    }
}

/// All three routes for `n = 1..=n_max`. A failing route leaves absent
/// markers; only a regime violation or a failure of every route is an error.
pub fn validate(config: &RunConfig) -> Result<ValidationReport> {
    config.validate()?;
    let p = &config.params;
    derive(p)?;
    let n_max = config.n_max;
    let exact_per_level: Vec<Result<EnergyLevel>> = {
        let opts = QuantizeOptions {
            thresholds: config.thresholds,
            ..Default::default()
        };
        (1..=n_max)
            .into_par_iter()
            .map(|n| quantize_exact_with(p, n, &opts).map(|q| q.level))
            .collect()
    };
    let (asym, oracle) = rayon::join(
        || levels_for(config, Route::AsymptoticClosedForm, n_max),
        || levels_for(config, Route::NumericOracle, n_max),
    );
    let asym_levels = asym.as_ref().ok().cloned();
    let asym = to_values(asym, n_max);
    let oracle = to_values(oracle, n_max);
    let threshold = p.omega + p.energy_shift();

    let mut rows = Vec::with_capacity(n_max as usize);
    for i in 0..n_max as usize {
        let exact = match &exact_per_level[i] {
            Ok(l) => RouteValue::Present {
                energy: l.energy,
                error: l.estimated_error,
            },
            Err(e) => RouteValue::Absent(e.to_string()),
        };
        let (ea, ee, eo) = (asym[i].energy(), exact.energy(), oracle[i].energy());
        let rel_gap_asym_exact = ea.zip(ee).map(|(a, e)| (e - a).abs() / (threshold - a));
        let rel_gap_exact_oracle = ee.zip(eo).map(|(e, o)| (e - o).abs() / (threshold - e));
        let oracle_rel_error = match (&oracle[i], ee.or(eo)) {
            (RouteValue::Present { error, .. }, Some(e)) => Some(error / (threshold - e)),
            _ => None,
        };
        let kappa = exact_per_level[i]
            .as_ref()
            .ok()
            .and_then(|l| l.kappa)
            .or_else(|| asym_levels.as_ref().and_then(|v| v[i].kappa));
        rows.push(ValidationRow {
            n: i as u32 + 1,
            ell: p.ell,
            e_asymptotic: asym[i].clone(),
            e_exact: exact,
            e_oracle: oracle[i].clone(),
            rel_gap_asym_exact,
            rel_gap_exact_oracle,
            oracle_rel_error,
            regime_flags: RegimeFlags::evaluate(p.x0(), kappa, &config.thresholds),
        });
    }

    let all_absent = rows.iter().all(|r| {
        r.e_asymptotic.energy().is_none() && r.e_exact.energy().is_none() && r.e_oracle.energy().is_none()
    });
    if all_absent {
        return Err(match &exact_per_level[0] {
            Err(e) => e.clone(),
            Ok(_) => Error::Domain("every route failed".into()),
        });
    }

    let fold = |f: fn(&ValidationRow) -> Option<f64>| rows.iter().filter_map(f).fold(0.0_f64, f64::max);
    let max_ae = fold(|r| r.rel_gap_asym_exact);
    let max_eo = fold(|r| r.rel_gap_exact_oracle);
    let mut violations: Vec<&'static str> = Vec::new();
    for r in &rows {
        for v in r.regime_flags.violations() {
            if !violations.contains(&v) {
                violations.push(v);
            }
        }
    }
    Ok(ValidationReport {
        summary: ValidationSummary {
            max_rel_gap: max_ae.max(max_eo),
            max_rel_gap_asym_exact: max_ae,
            max_rel_gap_exact_oracle: max_eo,
            regime_ok: violations.is_empty(),
            violations,
        },
        rows,
    })
}

/// Radial profile `r,f,f_error` of one level. The second value is a warning
/// when the level does not come from exact quantization.
pub fn wavefunction_csv(
    config: &RunConfig,
    level: u32,
    route: RouteSelection,
    r_max: Option<f64>,
    samples: usize,
) -> Result<(String, Option<String>)> {
    config.validate()?;
    let p = &config.params;
    if level == 0 {
        return Err(Error::Domain("level must be >= 1".into()));
    }
    let route = match route {
        RouteSelection::Asymptotic => Route::AsymptoticClosedForm,
        RouteSelection::Exact => Route::ExactQuantization,
        RouteSelection::Oracle => Route::NumericOracle,
        RouteSelection::All => {
            return Err(Error::Domain("wavefunction needs a single route".into()))
        }
    };
    let lvl = match route {
        Route::ExactQuantization => {
            let opts = QuantizeOptions {
                thresholds: config.thresholds,
                ..Default::default()
            };
            quantize_exact_with(p, level, &opts)?.level
        }
        _ => levels_for(config, route, level)?[level as usize - 1],
    };
    let r_max = match r_max {
        Some(r) => r,
        None => {
            let problem = RadialProblem::from(p);
            let turning = outer_turning_point(&problem, problem.tau_of_energy(lvl.energy))
                .unwrap_or(10.0 * p.radius);
            (3.0 * turning).max(2.0 * p.radius)
        }
    };
    let prof = radial_wavefunction(p, &lvl, r_max, samples)?;
    let mut out = String::from("r,f,f_error\n");
    for ((r, f), e) in prof.r_samples.iter().zip(&prof.f_values).zip(&prof.f_errors) {
        let _ = writeln!(out, "{},{},{}", csv_num(*r), csv_num(*f), csv_num(*e));
    }
    let warning = prof.boundary_warning.then(|| {
        format!(
            "level from the {} route; f(R) = {:.3e} of the peak is not expected to vanish",
            lvl.route,
            prof.boundary_residual()
        )
    });
    Ok((out, warning))
}

/// Ground level versus cut-off: `R,route,E1,scaled_binding,estimated_error,status`
/// with `scaled_binding = R^2 (omega + shift - E1)`. Failed rows keep their
/// place with empty values and the reason in `status`.
pub fn sweep_cutoff_csv(config: &RunConfig, radii: &[f64]) -> Result<String> {
    config.validate()?;
    derive(&config.params)?;
    let routes = RouteSelection::All.routes();
    let jobs: Vec<(f64, Route)> = radii
        .iter()
        .flat_map(|&r| routes.iter().map(move |&route| (r, route)))
        .collect();
    let results: Vec<Result<EnergyLevel>> = jobs
        .par_iter()
        .map(|&(radius, route)| {
            let cfg = RunConfig {
                params: config.params.with_radius(radius),
                grid_overrides: None,
                ..config.clone()
            };
            levels_for(&cfg, route, 1).map(|v| v[0])
        })
        .collect();
    let mut out = String::from("R,route,E1,scaled_binding,estimated_error,status\n");
    for ((radius, route), res) in jobs.iter().zip(results) {
        match res {
            Ok(l) => {
                let binding = config.params.omega + config.params.energy_shift() - l.energy;
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},ok",
                    csv_num(*radius),
                    route,
                    csv_num(l.energy),
                    csv_num(radius * radius * binding),
                    csv_num(l.estimated_error)
                );
            }
            Err(e) => {
                let _ = writeln!(
                    out,
                    "{},{},,,,failed: {}",
                    csv_num(*radius),
                    route,
                    csv_text(&e.to_string())
                );
            }
        }
    }
    Ok(out)
}

/// `r,V_effective` (plus `V_centrifugal`). Radii inside the cut-off are
/// written as `forbidden` and reported in the returned warnings.
pub fn potential_csv(config: &RunConfig, radii: &[f64], centrifugal: bool) -> (String, Vec<String>) {
    let p = &config.params;
    let mut out = String::from(if centrifugal {
        "r,V_effective,V_centrifugal\n"
    } else {
        "r,V_effective\n"
    });
    let mut warnings = Vec::new();
    for &r in radii {
        let cell = |c: bool| match effective_potential(p, r, c) {
            Ok(v) => csv_num(v),
            Err(Error::ForbiddenRegion { .. }) => "forbidden".to_string(),
            Err(_) => "error".to_string(),
        };
        let v = cell(false);
        if v == "forbidden" {
            warnings.push(format!("r = {r} lies inside the cut-off R = {}", p.radius));
        }
        if centrifugal {
            let _ = writeln!(out, "{},{},{}", csv_num(r), v, cell(true));
        } else {
            let _ = writeln!(out, "{},{}", csv_num(r), v);
        }
    }
    (out, warnings)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EvalKind {
    /// `re im` -> `Re lnGamma  Im lnGamma  error`
    GammaLn,
    /// `a b x` or `a_re a_im b_re b_im x` -> `Re M  Im M  error`
    KummerM,
    /// `kappa mu x` -> `Re M  Im M  error` for `M_{kappa, i mu}(x)`
    WhittakerM,
    /// `kappa mu x` -> `W  error  imag_residual`
    WhittakerW,
    /// `kappa mu x` -> small-x cosine form and its deviation from `W`
    WSmallX,
}

fn expect_args(args: &[f64], counts: &[usize], kind: &str) -> Result<()> {
    if counts.contains(&args.len()) {
        Ok(())
    } else {
        Err(Error::DimensionMismatch(format!(
            "{kind} takes {} arguments, got {}",
            counts
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(" or "),
            args.len()
        )))
    }
}

/// One line of output, numbers at 15 significant digits.
pub fn eval_special(kind: EvalKind, args: &[f64]) -> Result<String> {
    let line = match kind {
        EvalKind::GammaLn => {
            expect_args(args, &[2], "gamma-ln")?;
            let g = ln_gamma_complex(Complex64::new(args[0], args[1]))?;
            format!("{} {} {}", human_num(g.value.re), human_num(g.value.im), human_num(g.error))
        }
        EvalKind::KummerM => {
            expect_args(args, &[3, 5], "kummer-m")?;
            let (a, b, x) = if args.len() == 3 {
                (Complex64::new(args[0], 0.0), Complex64::new(args[1], 0.0), args[2])
            } else {
                (Complex64::new(args[0], args[1]), Complex64::new(args[2], args[3]), args[4])
            };
            let m = kummer_m(a, b, x)?;
            format!("{} {} {}", human_num(m.value.re), human_num(m.value.im), human_num(m.error))
        }
        EvalKind::WhittakerM => {
            expect_args(args, &[3], "whittaker-m")?;
            let m = whittaker_m_imag(args[0], args[1], args[2])?;
            format!("{} {} {}", human_num(m.value.re), human_num(m.value.im), human_num(m.error))
        }
        EvalKind::WhittakerW => {
            expect_args(args, &[3], "whittaker-w")?;
            let w = whittaker_w_imag(args[0], args[1], args[2])?;
            format!(
                "{} {} {}",
                human_num(w.value()),
                human_num(w.error * w.log_scale.exp()),
                human_num(w.imag_residual)
            )
        }
        EvalKind::WSmallX => {
            expect_args(args, &[3], "w-small-x")?;
            let (kappa, mu, x) = (args[0], args[1], args[2]);
            let approx = whittaker_w_smallx_approx_with(
                kappa,
                mu,
                &SmallXOptions {
                    allow_out_of_regime: true,
                    ..Default::default()
                },
            )?;
            let w = whittaker_w_imag(kappa, mu, x)?;
            let deviation = (approx.rescaled(x, w.log_scale) - w.mantissa).abs() * w.log_scale.exp();
            format!("{} {}", human_num(approx.value(x)), human_num(deviation))
        }
    };
    Ok(line + "\n")
}
