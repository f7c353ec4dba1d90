//! Infinite square well of width Δ under the three kinetic operators.
//!
//! | case      | kinetic term                             | Eₙ                         |
//! |-----------|------------------------------------------|----------------------------|
//! | ℓ = 0     | −(1/2m) d²/dx²                           | n²π²/(2mΔ²)                |
//! | ε = +1    | (1/8mℓ²)(e^{iℓ d/dx} − e^{−iℓ d/dx})²    | sinh²(nπℓ/Δ)/(2mℓ²)        |
//! | ε = −1    | −(1/8mℓ²)(e^{ℓ d/dx} − e^{−ℓ d/dx})²     | sin²(nπℓ/Δ)/(2mℓ²), Δ = kℓ |
//!
//! The well sits on `[0, Δ]`; spectra are translation invariant.

use alloc::vec::Vec;
use core::f64::consts::PI;

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::linalg::CMatrix;
use crate::params::{AlgebraParams, Epsilon};
use crate::Complex64;

const COMMENSURATE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseLabel {
    Undeformed,
    EpsPlus,
    EpsMinus,
}

impl CaseLabel {
    pub fn of(params: &AlgebraParams) -> Self {
        if !params.is_deformed() {
            CaseLabel::Undeformed
        } else {
            match params.epsilon() {
                Epsilon::Plus => CaseLabel::EpsPlus,
                Epsilon::Minus => CaseLabel::EpsMinus,
            }
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            CaseLabel::Undeformed => "undeformed",
            CaseLabel::EpsPlus => "eps_plus",
            CaseLabel::EpsMinus => "eps_minus",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryMode {
    /// Ghost sites mirror with a sign flip: ψ₋ⱼ = −ψⱼ, ψ_{k+j} = −ψ_{k−j}.
    OddImage,
    /// Every site outside the well is zero.
    HardZero,
}

impl BoundaryMode {
    pub fn label(self) -> &'static str {
        match self {
            BoundaryMode::OddImage => "odd_image",
            BoundaryMode::HardZero => "hard_zero",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WellSpec {
    params: AlgebraParams,
    delta: f64,
    sites: Option<usize>,
}

impl WellSpec {
    /// Well of width `delta`. For ε = −1 with ℓ > 0 the width must be an
    /// integral multiple of ℓ.
    pub fn new(params: AlgebraParams, delta: f64) -> Result<Self> {
        if !(delta.is_finite() && delta > 0.0) {
            return Err(Error::InvalidParameter {
                name: "delta",
                reason: "must be finite and > 0",
            });
        }
        let sites = if CaseLabel::of(&params) == CaseLabel::EpsMinus {
            Some(commensurate_sites(delta, params.ell())?)
        } else {
            None
        };
        Ok(WellSpec {
            params,
            delta,
            sites,
        })
    }

    /// ε = −1 well spanning `k` lattice spacings, Δ = kℓ.
    pub fn lattice(params: AlgebraParams, k: usize) -> Result<Self> {
        params.require_sign(Epsilon::Minus)?;
        params.require_deformed()?;
        if k == 0 {
            return Err(Error::GridSize {
                got: 0,
                reason: "well must span at least one lattice spacing",
            });
        }
        Ok(WellSpec {
            params,
            delta: k as f64 * params.ell(),
            sites: Some(k),
        })
    }

    pub fn params(&self) -> &AlgebraParams {
        &self.params
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    /// k with Δ = kℓ, only for the ε = −1 case.
    pub fn sites(&self) -> Option<usize> {
        self.sites
    }

    pub fn case(&self) -> CaseLabel {
        CaseLabel::of(&self.params)
    }

    /// Closed-form Eₙ for this well.
    pub fn energy(&self, n: usize) -> f64 {
        level_energy(&self.params, self.delta, n)
    }
}

fn commensurate_sites(delta: f64, ell: f64) -> Result<usize> {
    let k = (delta / ell).round();
    if k < 1.0 || (delta - k * ell).abs() > COMMENSURATE_TOL * delta {
        return Err(Error::NotCommensurate { delta, ell });
    }
    Ok(k as usize)
}

/// Closed-form level n for width Δ; the case follows from `params`.
pub fn level_energy(params: &AlgebraParams, delta: f64, n: usize) -> f64 {
    let m = params.mass();
    let ell = params.ell();
    let n = n as f64;
    match CaseLabel::of(params) {
        CaseLabel::Undeformed => n * n * PI * PI / (2.0 * m * delta * delta),
        CaseLabel::EpsPlus => (n * PI * ell / delta).sinh().powi(2) / (2.0 * m * ell * ell),
        CaseLabel::EpsMinus => (n * PI * ell / delta).sin().powi(2) / (2.0 * m * ell * ell),
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Level {
    pub n: usize,
    pub analytic: f64,
    pub numeric: Option<f64>,
    pub abs_diff: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumReport {
    pub case: CaseLabel,
    pub levels: Vec<Level>,
}

impl SpectrumReport {
    pub fn max_abs_diff(&self) -> Option<f64> {
        self.levels
            .iter()
            .filter_map(|l| l.abs_diff)
            .fold(None, |acc, d| Some(acc.map_or(d, |a: f64| a.max(d))))
    }

    /// Number of distinct analytic energies, merging values closer than `tol`.
    pub fn distinct_energies(&self, tol: f64) -> usize {
        let mut e: Vec<f64> = self.levels.iter().map(|l| l.analytic).collect();
        e.sort_by(f64::total_cmp);
        e.dedup_by(|a, b| (*a - *b).abs() <= tol);
        e.len()
    }
}

/// Levels n = 1..=n_max from the closed forms.
pub fn analytic_levels(spec: &WellSpec, n_max: usize) -> Result<SpectrumReport> {
    if n_max == 0 {
        return Err(Error::InvalidParameter {
            name: "n_max",
            reason: "must be >= 1",
        });
    }
    if let Some(k) = spec.sites() {
        if n_max > k.saturating_sub(1) {
            return Err(Error::NoSuchLevel {
                n: n_max,
                available: k.saturating_sub(1),
            });
        }
    }
    Ok(SpectrumReport {
        case: spec.case(),
        levels: (1..=n_max)
            .map(|n| Level {
                n,
                analytic: spec.energy(n),
                numeric: None,
                abs_diff: None,
            })
            .collect(),
    })
}

/// Hamiltonian `−(1/8mℓ²)(E₊ − E₋)²` on the interior sites j = 1..k−1, where
/// `(E₊ − E₋)²ψⱼ = ψ_{j+2} − 2ψⱼ + ψ_{j−2}`.
pub fn lattice_hamiltonian(spec: &WellSpec, mode: BoundaryMode) -> Result<CMatrix> {
    spec.params().require_sign(Epsilon::Minus)?;
    spec.params().require_deformed()?;
    let k = spec.sites().ok_or(Error::Undeformed)?;
    if k < 3 {
        return Err(Error::GridSize {
            got: k,
            reason: "lattice well needs k >= 3",
        });
    }
    let ell = spec.params().ell();
    let scale = -1.0 / (8.0 * spec.params().mass() * ell * ell);
    let dim = k - 1;
    let mut h = CMatrix::zeros(dim);
    // site j ↦ row j−1; ghosts resolved per boundary mode
    let mut add = |row_site: usize, site: i64, coeff: f64| {
        let target = match resolve_site(site, k, mode) {
            Some(t) => t,
            None => return,
        };
        let (sign, col_site) = target;
        h[(row_site - 1, col_site - 1)] += Complex64::new(scale * coeff * sign, 0.0);
    };
    for j in 1..k {
        let ji = j as i64;
        add(j, ji + 2, 1.0);
        add(j, ji, -2.0);
        add(j, ji - 2, 1.0);
    }
    Ok(h)
}

/// Maps a possibly-ghost site to `(sign, interior site)`, or `None` if it is zero.
fn resolve_site(site: i64, k: usize, mode: BoundaryMode) -> Option<(f64, usize)> {
    let k = k as i64;
    if site > 0 && site < k {
        return Some((1.0, site as usize));
    }
    match mode {
        BoundaryMode::HardZero => None,
        BoundaryMode::OddImage => {
            if site == 0 || site == k {
                None
            } else if site < 0 {
                resolve_site(-site, k as usize, mode).map(|(s, j)| (-s, j))
            } else {
                resolve_site(2 * k - site, k as usize, mode).map(|(s, j)| (-s, j))
            }
        }
    }
}

/// Diagonalizes the ε = −1 lattice well and pairs the sorted numeric
/// spectrum with the sorted closed-form one.
pub fn lattice_well_solve(spec: &WellSpec, mode: BoundaryMode) -> Result<SpectrumReport> {
    let h = lattice_hamiltonian(spec, mode)?;
    let k = spec.sites().ok_or(Error::Undeformed)?;
    let numeric = h.eigh()?.values;

    let mut analytic: Vec<(usize, f64)> = (1..k).map(|n| (n, spec.energy(n))).collect();
    analytic.sort_by(|a, b| a.1.total_cmp(&b.1).then(a.0.cmp(&b.0)));

    Ok(SpectrumReport {
        case: CaseLabel::EpsMinus,
        levels: analytic
            .into_iter()
            .zip(numeric)
            .map(|((n, e), num)| Level {
                n,
                analytic: e,
                numeric: Some(num),
                abs_diff: Some((num - e).abs()),
            })
            .collect(),
    })
}

/// Applies the ε = +1 kinetic operator to ψₙ(x) = sin(nπx/Δ) pointwise.
///
/// The shift `e^{±iℓ d/dx}` sends f(x) to f(x ± iℓ), so the operator needs
/// sine at complex argument: `sin(a + ib) = sin a cosh b + i cos a sinh b`.
/// Returns max |Lψₙ − Eₙψₙ| over `sample_count` uniform interior points.
pub fn continuum_shift_residual(spec: &WellSpec, n: usize, sample_count: usize) -> Result<f64> {
    spec.params().require_sign(Epsilon::Plus)?;
    spec.params().require_deformed()?;
    if n == 0 {
        return Err(Error::InvalidParameter {
            name: "n",
            reason: "levels start at 1",
        });
    }
    if sample_count == 0 {
        return Err(Error::InvalidParameter {
            name: "sample_count",
            reason: "must be >= 1",
        });
    }
    let ell = spec.params().ell();
    let m = spec.params().mass();
    let delta = spec.delta();
    let kw = n as f64 * PI / delta;
    let energy = spec.energy(n);
    let sin_c = |a: f64, b: f64| Complex64::new(a.sin() * b.cosh(), a.cos() * b.sinh());

    let mut worst: f64 = 0.0;
    for j in 1..=sample_count {
        let x = delta * j as f64 / (sample_count + 1) as f64;
        let a = kw * x;
        let psi = a.sin();
        // (e^{iℓ∂} − e^{−iℓ∂})² ψ = ψ(x + 2iℓ) − 2ψ(x) + ψ(x − 2iℓ)
        let second = sin_c(a, 2.0 * kw * ell) + sin_c(a, -2.0 * kw * ell) - 2.0 * psi;
        let applied = second / (8.0 * m * ell * ell);
        worst = worst.max((applied - energy * psi).norm());
    }
    Ok(worst)
}

/// Ground-state energy E₁ for each width, in input order.
pub fn ground_state_scan(params: &AlgebraParams, deltas: &[f64]) -> Result<Vec<(f64, f64)>> {
    deltas
        .iter()
        .map(|&d| WellSpec::new(*params, d).map(|s| (d, s.energy(1))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(ell: f64, eps: Epsilon) -> AlgebraParams {
        AlgebraParams::new(ell, eps, 1.0, 1.0).unwrap()
    }

    #[test]
    fn closed_form_examples() {
        let s = WellSpec::new(AlgebraParams::heisenberg(1.0).unwrap(), PI).unwrap();
        assert!((analytic_levels(&s, 1).unwrap().levels[0].analytic - 0.5).abs() < 1e-15);

        let s = WellSpec::new(p(1.0, Epsilon::Plus), PI).unwrap();
        assert!((s.energy(1) - 0.690_548_922_770_907_7).abs() < 1e-15);

        let s = WellSpec::lattice(p(1.0, Epsilon::Minus), 4).unwrap();
        let e: Vec<f64> = analytic_levels(&s, 3)
            .unwrap()
            .levels
            .iter()
            .map(|l| l.analytic)
            .collect();
        for (a, b) in e.iter().zip([0.25, 0.5, 0.25]) {
            assert!((a - b).abs() < 1e-15);
        }
    }

    #[test]
    fn eps_minus_level_cap() {
        let s = WellSpec::lattice(p(1.0, Epsilon::Minus), 4).unwrap();
        assert_eq!(
            analytic_levels(&s, 4).unwrap_err(),
            Error::NoSuchLevel { n: 4, available: 3 }
        );
    }

    #[test]
    fn non_commensurate_rejected() {
        let err = WellSpec::new(p(0.3, Epsilon::Minus), 1.0).unwrap_err();
        assert!(matches!(err, Error::NotCommensurate { .. }));
        assert_eq!(
            WellSpec::new(p(0.25, Epsilon::Minus), 1.0).unwrap().sites(),
            Some(4)
        );
        assert!(ground_state_scan(&p(0.3, Epsilon::Minus), &[0.9, 1.0]).is_err());
    }

    #[test]
    fn odd_image_k4_exact() {
        let s = WellSpec::lattice(p(1.0, Epsilon::Minus), 4).unwrap();
        let rep = lattice_well_solve(&s, BoundaryMode::OddImage).unwrap();
        let num: Vec<f64> = rep.levels.iter().map(|l| l.numeric.unwrap()).collect();
        for (a, b) in num.iter().zip([0.25, 0.25, 0.5]) {
            assert!((a - b).abs() < 1e-12);
        }
        assert!(rep.max_abs_diff().unwrap() < 1e-12);
        assert_eq!(rep.distinct_energies(1e-12), 2);
    }

    #[test]
    fn hard_zero_deviates() {
        let s = WellSpec::lattice(p(1.0, Epsilon::Minus), 10).unwrap();
        let rep = lattice_well_solve(&s, BoundaryMode::HardZero).unwrap();
        assert!(rep.max_abs_diff().unwrap() > 1e-6);
    }

    #[test]
    fn small_lattice_rejected() {
        let s = WellSpec::lattice(p(1.0, Epsilon::Minus), 2).unwrap();
        assert!(matches!(
            lattice_well_solve(&s, BoundaryMode::OddImage),
            Err(Error::GridSize { got: 2, .. })
        ));
    }

    #[test]
    fn shift_residual_examples() {
        let s = WellSpec::new(p(1.0, Epsilon::Plus), PI).unwrap();
        assert!(continuum_shift_residual(&s, 1, 101).unwrap() <= 1e-12);
        let s = WellSpec::new(p(0.01, Epsilon::Plus), 1.0).unwrap();
        assert!(continuum_shift_residual(&s, 3, 101).unwrap() <= 1e-12);
        assert!(continuum_shift_residual(&s, 0, 101).is_err());
        let s = WellSpec::lattice(p(1.0, Epsilon::Minus), 4).unwrap();
        assert!(continuum_shift_residual(&s, 1, 10).is_err());
    }

    #[test]
    fn scan_examples() {
        let t = ground_state_scan(&AlgebraParams::heisenberg(1.0).unwrap(), &[1.0, 0.5]).unwrap();
        assert!((t[0].1 - 4.934_802_200_544_679).abs() < 1e-12);
        assert!((t[1].1 - 19.739_208_802_178_716).abs() < 1e-12);

        let t = ground_state_scan(&p(0.01, Epsilon::Plus), &[0.1]).unwrap();
        assert!((t[0].1 - 509.930_223_345_551_95).abs() < 1e-9);
        assert!(t[0].1 > 493.480_220_054_467_9);

        let ds: Vec<f64> = (1..=50).map(|k| k as f64 * 0.01).collect();
        for (_, e) in ground_state_scan(&p(0.01, Epsilon::Minus), &ds).unwrap() {
            assert!(e <= 5000.0 + 1e-9);
        }
    }
}
