//! Invariant suites behind `ncst verify`. Each suite returns one [`Check`]
//! per measured quantity; a library error inside a check counts as a failure.

use std::f64::consts::PI;

use ncst_core::counting::{fill_table, phase_cell};
use ncst_core::momentum::{
    arcsine_moments, bessel_j0_quadrature, dos_product, j0_asymptotic, j0_series, J0_CROSSOVER,
};
use ncst_core::repr::{
    algebra_residuals, build_circle_rep, build_fourier_rep, build_hyperbola_rep, GridState,
};
use ncst_core::uncertainty::{
    angle_bound, gaussian_moments, gup_curve, kempf_operator_check, localized_state_check,
    log_grid, BoundKind, GaussianSpec, MomentumGrid,
};
use ncst_core::well::{continuum_shift_residual, lattice_well_solve, BoundaryMode, WellSpec};
use ncst_core::{AlgebraParams, Complex64, Epsilon};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    AtMost,
    AtLeast,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub suite: usize,
    pub name: String,
    pub value: f64,
    pub threshold: f64,
    pub relation: Relation,
    pub passed: bool,
}

impl Check {
    pub fn at_most(suite: usize, name: &str, value: f64, threshold: f64) -> Self {
        Check {
            suite,
            name: name.to_owned(),
            value,
            threshold,
            relation: Relation::AtMost,
            passed: value <= threshold,
        }
    }

    pub fn at_least(suite: usize, name: &str, value: f64, threshold: f64) -> Self {
        Check {
            suite,
            name: name.to_owned(),
            value,
            threshold,
            relation: Relation::AtLeast,
            passed: value >= threshold,
        }
    }

    /// A yes/no property, reported as 1 (holds) or 0.
    pub fn holds(suite: usize, name: &str, ok: bool) -> Self {
        Self::at_least(suite, name, if ok { 1.0 } else { 0.0 }, 1.0)
    }

    fn failed(suite: usize, name: &str) -> Self {
        Check {
            suite,
            name: name.to_owned(),
            value: f64::NAN,
            threshold: f64::NAN,
            relation: Relation::AtMost,
            passed: false,
        }
    }

    pub fn status(&self) -> &'static str {
        if self.passed {
            "PASS"
        } else {
            "FAIL"
        }
    }
}

fn guard(suite: usize, name: &str, f: impl FnOnce() -> ncst_core::Result<Check>) -> Check {
    f().unwrap_or_else(|_| Check::failed(suite, name))
}

pub struct Suite {
    pub id: usize,
    pub name: &'static str,
    pub run: fn() -> Vec<Check>,
}

pub const SUITES: [Suite; 7] = [
    Suite {
        id: 1,
        name: "algebra relations",
        run: algebra,
    },
    Suite {
        id: 2,
        name: "well spectra",
        run: well,
    },
    Suite {
        id: 3,
        name: "phase-space counting",
        run: counting,
    },
    Suite {
        id: 4,
        name: "momentum statistics",
        run: momentum,
    },
    Suite {
        id: 5,
        name: "uncertainty",
        run: uncertainty,
    },
    Suite {
        id: 6,
        name: "gup comparator",
        run: gup,
    },
    Suite {
        id: 7,
        name: "localized and angle states",
        run: localized,
    },
];

pub fn run_all() -> Vec<Check> {
    SUITES.iter().flat_map(|s| (s.run)()).collect()
}

fn minus(ell: f64) -> ncst_core::Result<AlgebraParams> {
    AlgebraParams::with_ell(ell, Epsilon::Minus)
}

fn plus(ell: f64) -> ncst_core::Result<AlgebraParams> {
    AlgebraParams::with_ell(ell, Epsilon::Plus)
}

pub fn algebra() -> Vec<Check> {
    let mut out = Vec::new();
    for n in [8, 16, 32, 64] {
        let name = format!("lattice N={n} interior relations, casimir, jacobi");
        out.push(guard(1, &name, || {
            let res = algebra_residuals(&build_fourier_rep(minus(1.0)?, n)?)?;
            Ok(Check::at_most(1, &name, res.interior.max(), 1e-13))
        }));
    }
    let name = "hyperbola [X,P] halving-h reduction";
    out.push(guard(1, name, || {
        // M − 1 doubles, so h halves exactly
        let mut res = Vec::new();
        for m in [200, 399, 797] {
            let rep = build_hyperbola_rep(plus(1.0)?, 5.0, m)?;
            res.push(algebra_residuals(&rep)?.probe.map_or(f64::NAN, |p| p.xp));
        }
        let worst = res
            .windows(2)
            .map(|w| w[0] / w[1])
            .fold(f64::INFINITY, f64::min);
        Ok(Check::at_least(1, name, worst, 12.0))
    }));
    out
}

pub fn well() -> Vec<Check> {
    let mut out = Vec::new();
    let name = "odd_image lattice spectrum vs closed form, k=3..64";
    out.push(guard(2, name, || {
        let mut worst: f64 = 0.0;
        for k in 3..=64 {
            for ell in [0.5, 1.0, 2.0] {
                let spec = WellSpec::lattice(minus(ell)?, k)?;
                let rep = lattice_well_solve(&spec, BoundaryMode::OddImage)?;
                worst = worst.max(rep.max_abs_diff().unwrap_or(f64::NAN));
            }
        }
        Ok(Check::at_most(2, name, worst, 1e-12))
    }));
    let name = "shift-operator identity residual (relative to max(1, E))";
    out.push(guard(2, name, || {
        let mut worst: f64 = 0.0;
        for ell in [0.01, 0.1, 0.5, 1.0] {
            for delta in [1.0, PI, 5.0] {
                let spec = WellSpec::new(plus(ell)?, delta)?;
                for n in 1..=4 {
                    let r = continuum_shift_residual(&spec, n, 101)?;
                    worst = worst.max(r / spec.energy(n).max(1.0));
                }
            }
        }
        Ok(Check::at_most(2, name, worst, 1e-12))
    }));
    let name = "deformed levels -> undeformed, gap / (n pi ell / delta)^2";
    out.push(guard(2, name, || {
        let mut worst: f64 = 0.0;
        for n in 1..=3usize {
            for k in [400usize, 1000, 4000] {
                let ell = 0.01;
                let delta = k as f64 * ell;
                let y = n as f64 * PI * ell / delta;
                let e0 = WellSpec::new(AlgebraParams::heisenberg(1.0)?, delta)?.energy(n);
                let ep = WellSpec::new(plus(ell)?, delta)?.energy(n);
                let em = WellSpec::lattice(minus(ell)?, k)?.energy(n);
                worst = worst.max((ep - e0).abs() / e0 / (y * y));
                worst = worst.max((em - e0).abs() / e0 / (y * y));
            }
        }
        Ok(Check::at_most(2, name, worst, 1.0))
    }));
    out
}

pub fn counting() -> Vec<Check> {
    let mut out = Vec::new();
    let name = "undeformed closed-form cell equals pi";
    out.push(guard(3, name, || {
        let p = AlgebraParams::heisenberg(1.0)?;
        let mut worst: f64 = 0.0;
        for n in 0..50 {
            worst = worst.max((phase_cell(&p, 2.5, n)? - PI).abs());
        }
        Ok(Check::at_most(3, name, worst, 0.0))
    }));
    let name = "undeformed table cells from level momenta vs pi";
    out.push(guard(3, name, || {
        let t = fill_table(&AlgebraParams::heisenberg(1.0)?, 2.5, 50)?;
        let worst = t
            .rows
            .iter()
            .map(|r| (r.cell - PI).abs())
            .fold(0.0, f64::max);
        Ok(Check::at_most(3, name, worst, 1e-12))
    }));
    let name = "eps=+1 cells strictly increase";
    out.push(guard(3, name, || {
        let t = fill_table(&plus(0.5)?, 3.0, 40)?;
        Ok(Check::holds(
            3,
            name,
            t.rows.windows(2).all(|w| w[1].cell > w[0].cell),
        ))
    }));
    let name = "eps=-1 cells strictly decrease below the band edge";
    out.push(guard(3, name, || {
        let mut ok = true;
        for k in [5usize, 10, 33, 64] {
            let t = fill_table(&minus(1.0)?, k as f64, k - 1)?;
            let below: Vec<f64> = t
                .rows
                .iter()
                .filter(|r| !r.band_edge)
                .map(|r| r.cell)
                .collect();
            ok &= below.len() >= 2 && below.windows(2).all(|w| w[1] < w[0]);
        }
        Ok(Check::holds(3, name, ok))
    }));
    let name = "deformed cells -> pi, gap / (pi ell / delta)^2";
    out.push(guard(3, name, || {
        let mut worst: f64 = 0.0;
        for k in [100usize, 1000, 10000] {
            let ell = 0.01;
            let delta = k as f64 * ell;
            let y = PI * ell / delta;
            worst = worst.max((phase_cell(&plus(ell)?, delta, 0)? - PI).abs() / PI / (y * y));
            worst = worst.max((phase_cell(&minus(ell)?, delta, 0)? - PI).abs() / PI / (y * y));
        }
        Ok(Check::at_most(3, name, worst, 1.0))
    }));
    out
}

pub fn momentum() -> Vec<Check> {
    let mut worst: f64 = 0.0;
    for i in 0..=3000 {
        let z = 30.0 * i as f64 / 3000.0;
        let closed = if z <= J0_CROSSOVER {
            j0_series(z)
        } else {
            j0_asymptotic(z)
        };
        worst = worst.max((closed - bessel_j0_quadrature(z)).abs());
    }
    let moments = arcsine_moments(2, 1.0);
    let mut out = vec![
        Check::at_most(
            4,
            "J0 series/asymptotic vs quadrature, sr in [0, 30]",
            worst,
            1e-9,
        ),
        Check::at_most(4, "arcsine normalization", (moments[0] - 1.0).abs(), 1e-10),
        Check::at_most(4, "<P^2> - r^2/2", (moments[2] - 0.5).abs(), 1e-9),
    ];
    let name = "dos product gap / (ell^2/8 pi), ell <= 0.2";
    out.push(guard(4, name, || {
        let mut worst: f64 = 0.0;
        let mut below = true;
        for ell in [0.2, 0.1, 0.05, 0.01, 0.001] {
            let d = dos_product(&minus(ell)?)?;
            below &= d.product <= PI;
            worst = worst.max((PI - d.product) / (ell * ell / 8.0 * PI));
        }
        Ok(Check::at_most(
            4,
            name,
            if below { worst } else { f64::INFINITY },
            1.1,
        ))
    }));
    out
}

pub fn uncertainty() -> Vec<Check> {
    let mut out = Vec::new();
    let name = "Gaussian dx vs ell/(2 sqrt(alpha))";
    out.push(guard(5, name, || {
        let mut worst: f64 = 0.0;
        for alpha in [0.01, 0.1, 1.0, 3.0, 6.0] {
            for ell in [0.1, 1.0] {
                let g = gaussian_moments(&GaussianSpec::new(alpha, plus(ell)?)?)?;
                worst = worst.max((g.dx - ell / (2.0 * alpha.sqrt())).abs());
            }
        }
        Ok(Check::at_most(5, name, worst, 1e-8))
    }));
    let name = "Gaussian margin dx dp - exp(alpha/2)/2, alpha in [0.01, 6]";
    out.push(guard(5, name, || {
        let mut margin = f64::INFINITY;
        for i in 0..=120 {
            let alpha = 0.01 + (6.0 - 0.01) * i as f64 / 120.0;
            let g = gaussian_moments(&GaussianSpec::new(alpha, plus(1.0)?)?)?;
            margin = margin.min(g.product - 0.5 * (0.5 * alpha).exp());
        }
        Ok(Check::at_least(5, name, margin, 0.0))
    }));
    let name = "Gaussian product at alpha=1e-3 vs 1/2";
    out.push(guard(5, name, || {
        let g = gaussian_moments(&GaussianSpec::new(1e-3, plus(1.0)?)?)?;
        Ok(Check::at_most(5, name, (g.product - 0.5).abs(), 0.01))
    }));
    out
}

pub fn gup() -> Vec<Check> {
    let mut out = Vec::new();
    let grid = MomentumGrid {
        half_width: 40.0,
        points: 4000,
    };
    for a in [0.0, 1.0] {
        let name = format!("Kempf eigenvector residual, C=2, a={a}");
        out.push(guard(6, &name, || {
            Ok(Check::at_most(
                6,
                &name,
                kempf_operator_check(2.0, a, grid)?.eigen_residual,
                1e-6,
            ))
        }));
    }
    let name = "Kempf [x,p] halving-h reduction";
    out.push(guard(6, name, || {
        let mut res = Vec::new();
        for points in [401, 801, 1601] {
            let g = MomentumGrid {
                half_width: 10.0,
                points,
            };
            res.push(kempf_operator_check(1.0, 0.0, g)?.commutator_residual);
        }
        let worst = res
            .windows(2)
            .map(|w| w[0] / w[1])
            .fold(f64::INFINITY, f64::min);
        Ok(Check::at_least(6, name, worst, 12.0))
    }));
    let name = "sampled GUP minimum vs sqrt(C/2)";
    out.push(guard(6, name, || {
        let mut worst: f64 = 0.0;
        for c in [0.01, 0.5, 2.0] {
            let curve = gup_curve(c, &log_grid(1e-3, 1e3, 20001))?;
            worst = worst.max((curve.sampled_min - curve.min_dx).abs());
        }
        Ok(Check::at_most(6, name, worst, 1e-4))
    }));
    let name = "<p^2> partial integrals grow linearly: slope / 2 - 1, C=2";
    out.push(guard(6, name, || {
        // the integrand p²/(1 + p²) tends to 1, so the partials grow like 2L
        let tail = kempf_operator_check(2.0, 0.0, grid)?.energy_tail;
        let last = tail.partials.len() - 1;
        let slope = (tail.partials[last] - tail.partials[last - 1])
            / (tail.domains[last] - tail.domains[last - 1]);
        let dev = if tail.strictly_increasing {
            (slope / 2.0 - 1.0).abs()
        } else {
            f64::INFINITY
        };
        Ok(Check::at_most(6, name, dev, 1e-3))
    }));
    out
}

pub fn localized() -> Vec<Check> {
    let mut out = Vec::new();
    let name = "lattice delta_n: dx, product, bound all zero";
    out.push(guard(7, name, || {
        let rep = build_fourier_rep(minus(1.0)?, 16)?;
        let mut worst: f64 = 0.0;
        for n in -14..=14 {
            let r = localized_state_check(n, &rep)?;
            worst = worst.max(r.dx).max(r.product).max(r.bound);
        }
        Ok(Check::at_most(7, name, worst, 0.0))
    }));
    let name = "circle e_n: angle bound";
    out.push(guard(7, name, || {
        let rep = build_circle_rep(minus(1.0)?, 128)?;
        let mut worst: f64 = 0.0;
        for n in -5..=5 {
            let r = angle_bound(&GridState::circle_mode(&rep, n)?)?;
            worst = worst.max(r.bound);
        }
        Ok(Check::at_most(7, name, worst, 1e-15))
    }));
    let name = "seam-vanishing wavepacket: angle bound - 1/2";
    out.push(guard(7, name, || {
        let rep = build_circle_rep(minus(1.0)?, 128)?;
        let sigma = 0.3;
        let state = GridState::from_fn(&rep, |t| {
            Complex64::new((-(t - PI).powi(2) / (4.0 * sigma * sigma)).exp(), 0.0)
        })?;
        let r = angle_bound(&state)?;
        let dev = if r.satisfied && r.bound_kind == BoundKind::Angle {
            (r.bound - 0.5).abs()
        } else {
            f64::INFINITY
        };
        Ok(Check::at_most(7, name, dev, 1e-12))
    }));
    out
}
