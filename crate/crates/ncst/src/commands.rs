//! One report builder per subcommand. Inputs are already validated plain
//! values; every builder is deterministic.

use ncst_core::counting::{fill_table, phase_cell};
use ncst_core::momentum::{
    arcsine_moments, bessel_j0, bessel_j0_quadrature, char_fn_on_circle, dos_product,
    momentum_mass_quadrature,
};
use ncst_core::uncertainty::{
    gaussian_moments, gup_curve, log_grid, measure_compare, GaussianSpec,
};
use ncst_core::well::{analytic_levels, lattice_well_solve, BoundaryMode, WellSpec};
use ncst_core::{AlgebraParams, Epsilon, Result};

use crate::report::{Report, Value};
use crate::suites::{self, Check};

/// Well width, either directly or as a number of lattice sites (Δ = kℓ).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Width {
    Delta(f64),
    Sites(usize),
}

impl Width {
    fn spec(self, params: AlgebraParams) -> Result<WellSpec> {
        match self {
            Width::Delta(d) => WellSpec::new(params, d),
            Width::Sites(k) => WellSpec::lattice(params, k),
        }
    }
}

/// `steps` evenly spaced points on [start, stop]; a single point is `start`.
pub fn linear_points(start: f64, stop: f64, steps: usize) -> Vec<f64> {
    if steps == 1 {
        return vec![start];
    }
    (0..steps)
        .map(|i| start + (stop - start) * i as f64 / (steps - 1) as f64)
        .collect()
}

fn well_meta(r: &mut Report, params: &AlgebraParams, spec: &WellSpec) {
    r.meta("epsilon", params.epsilon().value() as i64);
    r.meta("ell", params.ell());
    r.meta("mass", params.mass());
    r.meta("r", params.r());
    r.meta("delta", spec.delta());
    r.meta("sites", spec.sites().map_or(Value::Missing, Value::from));
    r.meta("well", "[0, delta], Dirichlet walls");
}

pub fn spectra(
    params: AlgebraParams,
    width: Width,
    levels: Option<usize>,
    boundary: BoundaryMode,
) -> Result<Report> {
    let spec = width.spec(params)?;
    let mut r = Report::new(
        "spectra",
        &[
            "case",
            "epsilon",
            "ell",
            "mass",
            "delta",
            "n",
            "E_analytic",
            "E_numeric",
            "abs_diff",
        ],
    );
    well_meta(&mut r, &params, &spec);
    r.meta("boundary", boundary.label());

    let mut rows = match spec.sites() {
        Some(k) => {
            if let Some(n) = levels {
                // same NoSuchLevel error as the closed-form path
                analytic_levels(&spec, n)?;
            }
            let mut levels_out = lattice_well_solve(&spec, boundary)?.levels;
            levels_out.sort_by_key(|l| l.n);
            levels_out.truncate(levels.unwrap_or(k - 1));
            r.meta(
                "numeric",
                "lattice diagonalization, numeric levels paired in sorted order",
            );
            levels_out
        }
        None => {
            r.meta("numeric", "none: continuous spectrum, closed form only");
            analytic_levels(&spec, levels.unwrap_or(5))?.levels
        }
    };
    let case = spec.case().label();
    for l in rows.drain(..) {
        r.push(vec![
            case.into(),
            (params.epsilon().value() as i64).into(),
            params.ell().into(),
            params.mass().into(),
            spec.delta().into(),
            l.n.into(),
            l.analytic.into(),
            l.numeric.into(),
            l.abs_diff.into(),
        ]);
    }
    Ok(r)
}

pub fn counting(params: AlgebraParams, width: Width, levels: usize) -> Result<Report> {
    let spec = width.spec(params)?;
    let table = fill_table(&params, spec.delta(), levels)?;
    let mut r = Report::new(
        "counting",
        &[
            "case",
            "epsilon",
            "ell",
            "delta",
            "n",
            "p_n",
            "p_next",
            "dp",
            "cell",
            "cell_closed_form",
            "cumulative",
            "band_edge",
        ],
    );
    well_meta(&mut r, &params, &spec);
    r.meta(
        "cell",
        "delta * (p_next - p_n), p_n = sqrt(2 m E_n), p_0 = 0",
    );
    for row in &table.rows {
        r.push(vec![
            table.case.label().into(),
            (params.epsilon().value() as i64).into(),
            params.ell().into(),
            table.delta.into(),
            row.n.into(),
            row.p_n.into(),
            row.p_next.into(),
            row.dp.into(),
            row.cell.into(),
            phase_cell(&params, table.delta, row.n)?.into(),
            row.cumulative.into(),
            row.band_edge.into(),
        ]);
    }
    Ok(r)
}

pub fn momstats(r_val: f64, s_max: f64, steps: usize) -> Result<Report> {
    AlgebraParams::new(1.0, Epsilon::Minus, r_val, 1.0)?;
    let mut r = Report::new(
        "momstats",
        &[
            "s",
            "C_closed_form",
            "C_quadrature",
            "C_circle_grid",
            "abs_diff",
        ],
    );
    let m = arcsine_moments(4, r_val);
    r.meta("r", r_val);
    r.meta("s_max", s_max);
    r.meta("steps", steps);
    r.meta("norm", m[0]);
    r.meta("mean", m[1]);
    r.meta("second_moment", m[2]);
    r.meta("second_moment_exact", 0.5 * r_val * r_val);
    r.meta("fourth_moment", m[4]);
    r.meta("circle_grid_points", 256usize);
    for s in linear_points(0.0, s_max, steps) {
        let closed = bessel_j0(s * r_val);
        let quad = bessel_j0_quadrature(s * r_val);
        r.push(vec![
            s.into(),
            closed.into(),
            quad.into(),
            char_fn_on_circle(s, r_val, 0, 256).re.into(),
            (closed - quad).abs().into(),
        ]);
    }
    Ok(r)
}

pub fn uncertainty(ell: f64, alphas: &[f64]) -> Result<Report> {
    let params = AlgebraParams::with_ell(ell, Epsilon::Plus)?;
    let mut r = Report::new(
        "uncertainty",
        &[
            "alpha",
            "ell",
            "dx",
            "dp",
            "product",
            "bound",
            "bound_kind",
            "satisfied",
            "x2",
            "x2_printed",
            "x2_deviation",
            "p2",
            "p2_printed",
            "p2_deviation",
            "product_printed",
            "product_deviation",
        ],
    );
    r.meta("epsilon", 1i64);
    r.meta("ell", ell);
    r.meta("r", 1.0);
    r.meta(
        "state",
        "psi(mu) = (2 pi alpha)^(-1/4) exp(-mu^2 / (4 alpha))",
    );
    r.meta(
        "printed",
        "closed forms as commonly quoted; deviation = printed - quadrature",
    );
    for &alpha in alphas {
        let g = gaussian_moments(&GaussianSpec::new(alpha, params)?)?;
        let rep = g.report();
        r.push(vec![
            alpha.into(),
            ell.into(),
            rep.dx.into(),
            rep.dp.into(),
            rep.product.into(),
            rep.bound.into(),
            rep.bound_kind.label().into(),
            rep.satisfied.into(),
            g.x2_quad.into(),
            g.x2_printed.into(),
            (g.x2_printed - g.x2_quad).into(),
            g.p2_quad.into(),
            g.p2_printed.into(),
            (g.p2_printed - g.p2_quad).into(),
            g.product_printed.into(),
            (g.product_printed - g.product).into(),
        ]);
    }
    Ok(r)
}

pub fn gup(c: f64, dp_min: f64, dp_max: f64, steps: usize) -> Result<Report> {
    let curve = gup_curve(c, &log_grid(dp_min, dp_max, steps))?;
    let mut r = Report::new("gup", &["c", "dp", "dx_min"]);
    r.meta("c", c);
    r.meta("spacing", "logarithmic");
    r.meta("min_dx", curve.min_dx);
    r.meta("argmin_dp", curve.argmin_dp);
    r.meta("sampled_min", curve.sampled_min);
    r.meta("sampled_argmin", curve.sampled_argmin);
    for (dp, b) in curve.dp_values.iter().zip(&curve.bounds) {
        r.push(vec![c.into(), (*dp).into(), (*b).into()]);
    }
    Ok(r)
}

pub fn dos(ell: f64, r_val: f64) -> Result<Report> {
    let params = AlgebraParams::new(ell, Epsilon::Minus, r_val, 1.0)?;
    let d = dos_product(&params)?;
    let mut r = Report::new(
        "dos",
        &[
            "ell",
            "r",
            "mu_x_inv",
            "mu_p",
            "mu_p_quadrature",
            "mu_p_inv",
            "product",
            "small_ell_product",
            "small_ell_mu_p",
        ],
    );
    r.meta("epsilon", -1i64);
    r.push(vec![
        ell.into(),
        r_val.into(),
        d.mu_x_inv.into(),
        d.mu_p.into(),
        momentum_mass_quadrature(ell, r_val)?.into(),
        d.mu_p_inv.into(),
        d.product.into(),
        d.small_ell_product.into(),
        d.small_ell_mu_p.into(),
    ]);
    Ok(r)
}

pub fn measures(ell: f64, beta: f64, tau: f64) -> Result<Report> {
    let m = measure_compare(ell, beta, tau)?;
    let mut r = Report::new(
        "measures",
        &[
            "ell",
            "beta",
            "tau",
            "cutoff",
            "z_flat",
            "z_deformed",
            "z_gup",
        ],
    );
    r.meta("weight", "exp(-p^2 / (2 tau))");
    r.push(vec![
        ell.into(),
        beta.into(),
        tau.into(),
        m.cutoff.into(),
        m.z_flat.into(),
        m.z_deformed.into(),
        m.z_gup.into(),
    ]);
    Ok(r)
}

/// Runs every suite. The report carries a PASS/FAIL status per check and
/// the failure count in its metadata.
pub fn verify() -> (Report, Vec<Check>) {
    let checks = suites::run_all();
    let fails = checks.iter().filter(|c| !c.passed).count();
    let mut r = Report::new(
        "verify",
        &["suite", "check", "value", "relation", "threshold", "status"],
    );
    r.meta("checks", checks.len());
    r.meta("fail", fails);
    for c in &checks {
        let rel = match c.relation {
            suites::Relation::AtMost => "<=",
            suites::Relation::AtLeast => ">=",
        };
        r.push(vec![
            c.suite.into(),
            c.name.clone().into(),
            c.value.into(),
            rel.into(),
            c.threshold.into(),
            c.status().into(),
        ]);
    }
    (r, checks)
}
