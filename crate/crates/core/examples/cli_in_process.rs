//! Drive the command-line front end from code; the exit code is returned.

fn main() {
    let code = dipole_spectrum::cli::run([
        "dipole-spectrum",
        "spectrum",
        "--route",
        "all",
        "--nmax",
        "2",
    ]);
    eprintln!("exit code {code}");
    let code = dipole_spectrum::cli::run(["dipole-spectrum", "spectrum", "--lambda", "1", "--ell", "2"]);
    eprintln!("exit code {code}");
}
