//! The three routes side by side in the deep and in a shallow regime.

use dipole_spectrum::cli::{default_params, validate, CommandKind, RunConfig};

fn main() -> dipole_spectrum::Result<()> {
    let deep = RunConfig {
        n_max: 4,
        ..RunConfig::new(default_params(), CommandKind::Validate)
    };
    let report = validate(&deep)?;
    print!("{}", report.to_csv());
    println!("summary {:?}\n", report.summary);

    let mut shallow = RunConfig::new(default_params(), CommandKind::Validate);
    shallow.params.lambda = 2f64.sqrt();
    shallow.params.omega = 0.1;
    shallow.params.radius = 1.0;
    let report = validate(&shallow)?;
    print!("{}", report.to_csv());
    println!("summary {:?}", report.summary);
    Ok(())
}
