fn main() {
    std::process::exit(dipole_spectrum::cli::run(std::env::args_os()));
}
