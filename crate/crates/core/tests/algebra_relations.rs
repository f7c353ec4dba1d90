use ncst_core::linalg::commutator;
use ncst_core::repr::{
    algebra_residuals, build_circle_rep, build_fourier_rep, build_hyperbola_rep, im_from_p,
};
use ncst_core::{AlgebraParams, Complex64, Epsilon};
use proptest::prelude::*;

fn minus(ell: f64, r: f64) -> AlgebraParams {
    AlgebraParams::new(ell, Epsilon::Minus, r, 1.0).unwrap()
}

fn plus(ell: f64, r: f64) -> AlgebraParams {
    AlgebraParams::new(ell, Epsilon::Plus, r, 1.0).unwrap()
}

#[test]
fn every_rep_is_hermitian() {
    for n in [2, 8, 32] {
        assert!(
            build_fourier_rep(minus(0.7, 1.3), n)
                .unwrap()
                .hermiticity_defect()
                <= 1e-13
        );
    }
    for m in [8, 16, 64] {
        assert!(
            build_circle_rep(minus(0.7, 1.3), m)
                .unwrap()
                .hermiticity_defect()
                <= 1e-13
        );
    }
    for m in [16, 200] {
        assert!(
            build_hyperbola_rep(plus(0.7, 1.3), 5.0, m)
                .unwrap()
                .hermiticity_defect()
                <= 1e-13
        );
    }
}

#[test]
fn fourier_relations_exact_in_interior() {
    for n in [8, 16, 32, 64] {
        for (ell, r) in [(1.0, 1.0), (0.5, 2.0)] {
            let rep = build_fourier_rep(minus(ell, r), n).unwrap();
            let res = algebra_residuals(&rep).unwrap();
            assert!(res.interior.max() <= 1e-13, "N={n}: {:?}", res.interior);
            assert!(res.probe.is_none());
        }
    }
}

#[test]
fn fourier_commutator_pi_only_at_corners() {
    let n = 32usize;
    let rep = build_fourier_rep(minus(1.0, 1.0), n).unwrap();
    let res = algebra_residuals(&rep).unwrap();
    let pi = &res.matrices.pi;
    assert!(res.full.pi > 0.1);
    let dim = 2 * n + 1;
    let mut nonzero = 0;
    for i in 0..dim {
        for j in 0..dim {
            if pi[(i, j)].norm() > 1e-14 {
                nonzero += 1;
                let (a, b) = (i as i64 - n as i64, j as i64 - n as i64);
                assert!(
                    a.abs() >= n as i64 - 1 && b.abs() >= n as i64 - 1,
                    "({a},{b})"
                );
            }
        }
    }
    assert!(nonzero > 0 && nonzero <= 4);
}

#[test]
fn fourier_xp_commutator_is_i_center() {
    let rep = build_fourier_rep(minus(1.0, 1.0), 16).unwrap();
    let xp = commutator(rep.x(), rep.p()).unwrap();
    let target = rep.center().scale(Complex64::new(0.0, 1.0));
    // X is diagonal, so this holds on the whole matrix
    assert!(xp.sub(&target).unwrap().max_abs() <= 1e-14);
}

#[test]
fn diagonal_reps_casimir() {
    for m in [8, 16, 64, 128] {
        let res = algebra_residuals(&build_circle_rep(minus(1.0, 1.0), m).unwrap()).unwrap();
        assert!(res.full.casimir <= 1e-13);
        assert!(res.full.pi == 0.0);
    }
    for m in [16, 64, 200] {
        // rounding in cosh² − sinh² grows like cosh²(mu_max)·ε
        let res = algebra_residuals(&build_hyperbola_rep(plus(1.0, 1.0), 2.0, m).unwrap()).unwrap();
        assert!(res.full.casimir <= 1e-13, "{}", res.full.casimir);
    }
}

#[test]
fn circle_position_spectrum_is_integer() {
    let rep = build_circle_rep(minus(1.0, 1.0), 16).unwrap();
    let e = rep.x().eigh().unwrap();
    for v in &e.values {
        assert!((v - v.round()).abs() <= 1e-10, "{v}");
    }
}

/// Circle grid of size M and lattice of half width M/2 − 1 share the
/// position spectrum ℓ{−(M/2−1)..(M/2−1)}; the circle grid has one extra
/// zero from the Nyquist mode.
#[test]
fn circle_and_lattice_are_unitarily_equivalent() {
    for (m, ell) in [(16usize, 1.0), (32, 0.5), (64, 2.0)] {
        let circle = build_circle_rep(minus(ell, 1.0), m).unwrap();
        let lattice = build_fourier_rep(minus(ell, 1.0), m / 2 - 1).unwrap();
        let mut cv = circle.x().eigh().unwrap().values;
        let lv = lattice.x().eigh().unwrap().values;
        let zero = cv
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.abs().total_cmp(&b.1.abs()))
            .unwrap()
            .0;
        cv.remove(zero);
        assert_eq!(cv.len(), lv.len());
        for (a, b) in cv.iter().zip(&lv) {
            assert!((a - b).abs() <= 1e-9, "M={m}: {a} vs {b}");
        }
    }
}

fn hyperbola_probe_xp(points: usize) -> f64 {
    let rep = build_hyperbola_rep(plus(1.0, 1.0), 5.0, points).unwrap();
    algebra_residuals(&rep).unwrap().probe.unwrap().xp
}

#[test]
fn hyperbola_commutator_converges_fourth_order() {
    // M − 1 doubles so h halves exactly
    let sizes = [200, 399, 797];
    let res: Vec<f64> = sizes.iter().map(|&m| hyperbola_probe_xp(m)).collect();
    println!("points\tresidual");
    for (m, r) in sizes.iter().zip(&res) {
        println!("{m}\t{r:.3e}");
    }
    for w in res.windows(2) {
        let ratio = w[0] / w[1];
        assert!((12.0..=20.0).contains(&ratio), "ratio {ratio} from {res:?}");
    }
}

#[test]
fn hyperbola_xi_and_casimir_on_probe() {
    let rep = build_hyperbola_rep(plus(0.5, 1.0), 5.0, 399).unwrap();
    let probe = algebra_residuals(&rep).unwrap().probe.unwrap();
    assert!(probe.xi < 1e-4, "{probe:?}");
    assert!(probe.casimir < 1e-10);
    assert_eq!(probe.pi, 0.0);
}

#[test]
fn im_from_p_leading_order_envelope() {
    let p = plus(1.0, 1.0);
    for i in 0..=50 {
        let q = 0.5 * i as f64 / 50.0;
        let (e, l) = im_from_p(q, &p).unwrap();
        assert!((e - l).abs() <= q.powi(4));
        let (e, l) = im_from_p(q, &minus(1.0, 1.0)).unwrap();
        assert!((e - l).abs() <= q.powi(4));
    }
}

proptest! {
    #[test]
    fn heisenberg_limit_is_monotone(p in -50.0f64..50.0, r in 0.2f64..3.0) {
        let mut prev_gap = f64::INFINITY;
        for ell in [1e-1, 1e-2, 1e-3, 1e-4, 0.0] {
            for eps in [Epsilon::Plus, Epsilon::Minus] {
                let params = AlgebraParams::new(ell, eps, r, 1.0).unwrap();
                if let Ok((e, l)) = im_from_p(p, &params) {
                    prop_assert!((l - r).abs() <= (ell * p).powi(2) / r + 1e-15);
                    prop_assert!((e - r).abs() <= (ell * p).powi(2) / r + 1e-15);
                }
            }
            let (e, _) = im_from_p(p, &AlgebraParams::new(ell, Epsilon::Plus, r, 1.0).unwrap()).unwrap();
            let gap = (e - r).abs();
            prop_assert!(gap <= prev_gap);
            prev_gap = gap;
        }
        prop_assert_eq!(prev_gap, 0.0);
    }

    #[test]
    fn lattice_structural_exactness(n in 3usize..40, ell in 0.1f64..4.0, r in 0.1f64..4.0) {
        let rep = build_fourier_rep(minus(ell, r), n).unwrap();
        let res = algebra_residuals(&rep).unwrap();
        let scale = 1.0f64.max(r * r).max(r * ell);
        prop_assert!(res.interior.max() <= 1e-13 * scale);
    }
}
