/// Values read from a config file; `None` for keys it does not set.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ConfigValues {
    pub mass: Option<f64>,
    pub alpha: Option<f64>,
    pub lambda: Option<f64>,
    pub omega: Option<f64>,
    pub radius: Option<f64>,
    pub ell: Option<i64>,
    pub pz: Option<f64>,
    pub nmax: Option<u32>,
    pub x0_admissible: Option<f64>,
    pub beta_min: Option<f64>,
    pub compare_tol: Option<f64>,
}

/// Parses `key = value` lines. `#` starts a comment; blank lines are skipped.
pub fn parse_config_file(text: &str) -> Result<ConfigValues, String> {
    let mut c = ConfigValues::default();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| format!("line {}: expected `key = value`", lineno + 1))?;
        let (key, value) = (key.trim(), value.trim());
        let real = || {
            value
                .parse::<f64>()
                .map_err(|_| format!("line {}: `{value}` is not a number", lineno + 1))
        };
        match key {
            "mass" => c.mass = Some(real()?),
            "alpha" => c.alpha = Some(real()?),
            "lambda" => c.lambda = Some(real()?),
            "omega" => c.omega = Some(real()?),
            "radius" => c.radius = Some(real()?),
            "pz" => c.pz = Some(real()?),
            "x0_admissible" => c.x0_admissible = Some(real()?),
            "beta_min" => c.beta_min = Some(real()?),
            "compare_tol" => c.compare_tol = Some(real()?),
            "ell" => {
                c.ell = Some(value.parse().map_err(|_| {
                    format!("line {}: `{value}` is not an integer", lineno + 1)
                })?)
            }
            "nmax" => {
                c.nmax = Some(value.parse().map_err(|_| {
                    format!("line {}: `{value}` is not a positive integer", lineno + 1)
                })?)
            }
            other => return Err(format!("line {}: unknown key `{other}`", lineno + 1)),
        }
    }
    Ok(c)
}
