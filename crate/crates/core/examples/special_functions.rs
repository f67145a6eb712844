//! Complex log-Gamma, Kummer M and the Whittaker pair of imaginary order.

use dipole_spectrum::special::{
    kummer_m, ln_gamma_complex, whittaker_m_imag, whittaker_w_imag, whittaker_w_smallx_approx,
};
use dipole_spectrum::Complex64;

fn main() -> dipole_spectrum::Result<()> {
    let g = ln_gamma_complex(Complex64::new(0.0, 2.0))?;
    println!("|Gamma(2i)|          = {:.15}", g.value.re.exp());

    let m = kummer_m(Complex64::new(0.5, 2.5), Complex64::new(1.0, 5.0), 0.3)?;
    println!("M(1/2+2.5i, 1+5i, .3) = {:.15} (err {:.1e})", m.value, m.error);

    let mw = whittaker_m_imag(0.0, 1.0, 0.5)?;
    println!("M_(0, i)(0.5)         = {:.15}", mw.value);

    // W carries a separate log scale; at beta ~ 1e5 the value itself underflows
    for &(kappa, x) in &[(0.7, 12.0), (-3.0, 1e-3), (-146_956.5, 1e-5)] {
        let w = whittaker_w_imag(kappa, 2.5, x)?;
        println!(
            "W_(kappa={kappa}, 2.5i)({x:e}) = {:+.12e} * exp({:.6}) via {:?}",
            w.mantissa, w.log_scale, w.route
        );
    }

    let approx = whittaker_w_smallx_approx(-199.5, 2.5)?;
    println!("cosine-form zeros of W_(-199.5, 2.5i) in (1e-8, 1e-3]:");
    for z in approx.zeros_between(1e-8, 1e-3) {
        println!("  {z:.6e}");
    }
    Ok(())
}
