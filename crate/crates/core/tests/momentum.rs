use std::f64::consts::PI;

use ncst_core::momentum::{
    arcsine_density, arcsine_moments, bessel_j0, bessel_j0_quadrature, char_fn, char_fn_on_circle,
    density_from_char_fn, dos_product, j0_asymptotic, j0_series, momentum_mass_quadrature, Density,
    J0_CROSSOVER,
};
use ncst_core::{AlgebraParams, Epsilon};
use proptest::prelude::*;

#[test]
fn j0_routes_agree() {
    for i in 0..=600 {
        let z = 30.0 * i as f64 / 600.0;
        let q = bessel_j0_quadrature(z);
        assert!((bessel_j0(z) - q).abs() <= 1e-9, "z={z}");
        if z <= J0_CROSSOVER {
            assert!((j0_series(z) - q).abs() <= 1e-9, "series z={z}");
        } else {
            assert!((j0_asymptotic(z) - q).abs() <= 1e-9, "asymptotic z={z}");
        }
    }
}

#[test]
fn char_fn_independent_of_level() {
    for r in [0.5, 1.0, 2.0] {
        for s in [0.0, 0.7, 3.0, 10.0] {
            let target = char_fn(s, r);
            for n in [-3, 0, 1, 5] {
                let c = char_fn_on_circle(s, r, n, 256);
                assert!((c.re - target).abs() <= 1e-12, "s={s} r={r} n={n}");
                assert!(c.im.abs() <= 1e-12);
            }
        }
    }
}

#[test]
fn arcsine_moments_match_closed_form() {
    for r in [0.5, 1.0, 3.0] {
        let m = arcsine_moments(5, r);
        assert!((m[0] - 1.0).abs() <= 1e-10);
        assert!((m[2] - r * r / 2.0).abs() <= 1e-9);
        assert!((m[4] - 3.0 * r.powi(4) / 8.0).abs() <= 1e-9);
        for k in [1, 3, 5] {
            assert!(m[k].abs() <= 1e-12 * r.powi(k as i32).max(1.0));
        }
        assert_eq!(arcsine_density(r, r).unwrap().density, Density::Singular);
        assert_eq!(arcsine_density(-r, r).unwrap().density, Density::Singular);
        assert_eq!(
            arcsine_density(1.5 * r, r).unwrap().density,
            Density::Finite(0.0)
        );
    }
}

#[test]
fn fourier_inversion_recovers_density() {
    for r in [0.5, 1.0, 2.0] {
        for p in [0.0, 0.5 * r, -0.5 * r] {
            let want = arcsine_density(p, r).unwrap().density.value().unwrap();
            let got = density_from_char_fn(p, r, 50.0 / r).unwrap();
            assert!(
                (got - want).abs() <= 2e-3 * want.max(1.0 / r),
                "r={r} p={p}: {got} vs {want}"
            );
        }
    }
}

#[test]
fn dos_product_examples() {
    let d = dos_product(&AlgebraParams::with_ell(0.1, Epsilon::Minus).unwrap()).unwrap();
    assert!((d.mu_p - 0.031_844_266_473_320_69).abs() <= 1e-15);
    assert!((d.product - 3.140_282_728_251_271_7).abs() <= 1e-13);
    assert!(dos_product(&AlgebraParams::with_ell(0.1, Epsilon::Plus).unwrap()).is_err());
    assert!(dos_product(&AlgebraParams::with_ell(2.5, Epsilon::Minus).unwrap()).is_err());
}

proptest! {
    #[test]
    fn dos_product_below_pi(ell in 1e-4f64..0.2, r in 0.5f64..3.0) {
        let params = AlgebraParams::new(ell, Epsilon::Minus, r, 1.0).unwrap();
        let d = dos_product(&params).unwrap();
        let free = PI * r;
        prop_assert!(d.product <= free);
        let x = ell / r;
        prop_assert!(free - d.product <= x * x / 8.0 * free * 1.1);
        let q = momentum_mass_quadrature(ell, r).unwrap();
        prop_assert!((q - d.mu_p).abs() <= 1e-12 * d.mu_p.max(1e-3));
    }

    #[test]
    fn density_normalized(r in 0.1f64..5.0) {
        prop_assert!((arcsine_moments(0, r)[0] - 1.0).abs() <= 1e-10);
        let a = arcsine_density(0.3 * r, r).unwrap();
        prop_assert!((a.cdf - (0.5 + (0.3f64).asin() / PI)).abs() <= 1e-15);
    }
}
