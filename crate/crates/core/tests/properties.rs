use std::f64::consts::PI;

use dipole_spectrum::special::{
    gamma_complex, kummer_m, whittaker_w_imag, whittaker_w_smallx_approx,
};
use dipole_spectrum::spectrum::energy_levels_asymptotic;
use dipole_spectrum::{derive, Complex64, KappaMap, PhysicalParams};
use proptest::prelude::*;

fn strong_field() -> impl Strategy<Value = PhysicalParams> {
    (0.5..2.0f64, 0.5..2.0f64, 0..3i64, 9.0..64.0f64, -4.0..-2.0f64, 0.05..0.3f64, 0.0..0.3f64).prop_map(
        |(mass, alpha, ell, lambda_sq, log_omega, radius, pz)| PhysicalParams {
            mass,
            alpha,
            lambda: ((lambda_sq + (ell * ell) as f64) / (2.0 * mass * alpha)).sqrt(),
            omega: 10f64.powf(log_omega),
            radius,
            ell,
            pz,
        },
    )
}

fn any_valid() -> impl Strategy<Value = PhysicalParams> {
    (0.5..2.0f64, 0.5..2.0f64, 0.5..4.0f64, 0.0..0.1f64, 0.05..1.0f64, 0..3i64, 0.0..1.0f64)
        .prop_map(|(mass, alpha, lambda, omega, radius, ell, pz)| PhysicalParams {
            mass,
            alpha,
            lambda,
            omega,
            radius,
            ell,
            pz,
        })
        .prop_filter("needs bound states", |p| derive(p).is_ok())
}

proptest! {
    #[test]
    fn gamma_reflection(re in -6.0..6.0f64, im in -6.0..6.0f64) {
        let z = Complex64::new(re, im);
        prop_assume!((re - re.round()).abs() > 1e-3 || im.abs() > 1e-3);
        let lhs = gamma_complex(z).unwrap().value * gamma_complex(1.0 - z).unwrap().value;
        let rhs = PI / (PI * z).sin();
        prop_assert!((lhs / rhs - 1.0).norm() < 1e-11, "{z}: {lhs} vs {rhs}");
    }

    #[test]
    fn gamma_recurrence(re in -10.0..40.0f64, im in -20.0..20.0f64) {
        let z = Complex64::new(re, im);
        prop_assume!((re - re.round()).abs() > 1e-3 || im.abs() > 1e-3);
        let g1 = gamma_complex(z + 1.0).unwrap().value;
        let g0 = gamma_complex(z).unwrap().value;
        prop_assert!(((g1 - z * g0) / g1).norm() < 1e-10);
    }

    #[test]
    fn kummer_contiguous_relation(
        ar in -5.0..5.0f64, ai in -3.0..3.0f64, br in 0.5..6.0f64, bi in -3.0..3.0f64, x in 0.0..10.0f64,
    ) {
        // (b - a) M(a-1) + (2a - b + x) M(a) - a M(a+1) = 0
        let a = Complex64::new(ar, ai);
        let b = Complex64::new(br, bi);
        let m0 = kummer_m(a - 1.0, b, x).unwrap().value;
        let m1 = kummer_m(a, b, x).unwrap().value;
        let m2 = kummer_m(a + 1.0, b, x).unwrap().value;
        let terms = [(b - a) * m0, (2.0 * a - b + x) * m1, -a * m2];
        let scale: f64 = terms.iter().map(|t| t.norm()).sum();
        let sum: Complex64 = terms.iter().sum();
        prop_assert!(sum.norm() <= 1e-10 * scale.max(1e-300));
    }

    #[test]
    fn whittaker_w_is_real(kappa in -200.0..3.0f64, mu in 0.3..6.0f64, log_x in -8.0..1.5f64) {
        let w = whittaker_w_imag(kappa, mu, 10f64.powf(log_x)).unwrap();
        prop_assert!(w.imag_residual <= 1e-8);
        prop_assert!(w.mantissa.is_finite() && w.error.is_finite());
    }

    #[test]
    fn small_x_form_tracks_w(beta in 200.0..2000.0f64, mu in 1.0..3.0f64, t in 1e-6..1.0f64) {
        // relative to the envelope 2 A sqrt(x)
        let kappa = 0.5 - beta;
        let approx = whittaker_w_smallx_approx(kappa, mu).unwrap();
        let x = t * approx.valid_below_x;
        let w = whittaker_w_imag(kappa, mu, x).unwrap();
        let envelope = 2.0 * (approx.log_amplitude - w.log_scale).exp() * x.sqrt();
        let dev = (approx.rescaled(x, w.log_scale) - w.mantissa).abs() / envelope;
        prop_assert!(dev <= 0.25, "deviation {dev} at x = {x}");
    }

    #[test]
    fn kappa_map_round_trip(p in any_valid().prop_filter("omega > 0", |p| p.omega > 0.0), e in -1e3..1e3f64) {
        let map = KappaMap::new(&p).unwrap();
        let back = map.energy_of_kappa(map.kappa_of_energy(e));
        prop_assert!((back - e).abs() <= 1e-12 * (e.abs() + map.energy_shift.abs() + p.omega));
        let k = map.kappa_of_energy(e);
        prop_assert_eq!(KappaMap::kappa_of_beta(KappaMap::beta_of_kappa(k)), k);
    }

    #[test]
    fn geometric_ratio_in_strong_field(p in strong_field()) {
        let lam = derive(&p).unwrap().lambda_cap;
        let levels = energy_levels_asymptotic(&p, 6).unwrap();
        let expect = (-2.0 * PI / lam).exp();
        for n in 0..5 {
            let ratio = levels[n + 1].binding(&p) / levels[n].binding(&p);
            prop_assert!((ratio / expect - 1.0).abs() <= 1e-12);
        }
    }

    #[test]
    fn geometric_ratio_within_cancellation_bound(p in any_valid()) {
        // forming omega + shift - E from a rounded E costs eps (|E| + threshold) / binding
        let lam = derive(&p).unwrap().lambda_cap;
        let levels = energy_levels_asymptotic(&p, 4).unwrap();
        let expect = (-2.0 * PI / lam).exp();
        let threshold = p.omega + p.energy_shift();
        for n in 0..3 {
            let (b0, b1) = (levels[n].binding(&p), levels[n + 1].binding(&p));
            prop_assume!(b1 > 0.0);
            let bound = 8.0 * f64::EPSILON
                * ((levels[n].energy.abs() + threshold) / b0 + (levels[n + 1].energy.abs() + threshold) / b1 + 1.0);
            prop_assert!((b1 / b0 / expect - 1.0).abs() <= bound);
        }
    }

    #[test]
    fn cutoff_and_frequency_scaling(p in strong_field(), s in 0.25..4.0f64) {
        // r -> s r with omega -> omega / s^2 scales every binding by 1 / s^2
        let q = p.with_radius(p.radius * s).with_omega(p.omega / (s * s)).with_pz(0.0);
        let p = p.with_pz(0.0);
        let a = energy_levels_asymptotic(&p, 3).unwrap();
        let b = energy_levels_asymptotic(&q, 3).unwrap();
        for (la, lb) in a.iter().zip(&b) {
            let ratio = lb.binding(&q) * s * s / la.binding(&p);
            prop_assert!((ratio - 1.0).abs() <= 1e-12);
        }
    }

    #[test]
    fn binding_scales_as_inverse_cutoff_squared(p in strong_field(), s in 0.25..4.0f64) {
        let q = p.with_radius(p.radius * s);
        let a = energy_levels_asymptotic(&p, 1).unwrap()[0].binding(&p);
        let b = energy_levels_asymptotic(&q, 1).unwrap()[0].binding(&q);
        prop_assert!((b * s * s / a - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn levels_rise_with_angular_momentum(p in strong_field(), n in 1u32..5) {
        let p = p.with_ell(0);
        let mut last = f64::NEG_INFINITY;
        for ell in 0..4 {
            let q = p.with_ell(ell);
            if derive(&q).is_err() {
                break;
            }
            let e = energy_levels_asymptotic(&q, n).unwrap()[n as usize - 1].energy;
            prop_assert!(e > last);
            last = e;
        }
    }

    #[test]
    fn confined_spectrum_reaches_positive_energies(p in strong_field()) {
        // bindings shrink geometrically below omega + shift, so some closed-form level is positive
        let levels = energy_levels_asymptotic(&p, 200).unwrap();
        prop_assert!(levels.iter().any(|l| l.energy > 0.0));
        let free = p.with_omega(0.0).with_pz(0.0);
        let free_levels = energy_levels_asymptotic(&free, 200).unwrap();
        prop_assert!(free_levels.iter().all(|l| l.energy < 0.0));
    }
}
