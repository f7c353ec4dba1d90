//! Uncertainty relations: Gaussian states on the hyperbola, the deformed
//! bound ΔxΔp ≥ ½|⟨I⟩|, the minimal-length GUP and its symmetric operator
//! realization, the angle/angular-momentum caveat, localized lattice states,
//! and the phase-space measure comparison.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::linalg::{CMatrix, SparseMatrix};
use crate::params::{AlgebraParams, Epsilon};
use crate::quad::{self, Tolerance};
use crate::repr::{
    fd4_entries, fourier_diff_matrix, gaussian_mu_max, line_grid, BasisKind, GridState, OperatorRep,
};
use crate::Complex64;

/// Slack allowed when comparing a product against its bound.
pub const BOUND_SLACK: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundKind {
    /// ½
    Heisenberg,
    /// ½|⟨(1 + ℓ²p²)^{1/2}⟩| = ½|⟨I⟩|
    Deformed,
    /// 1/(2Δp) + (C/4)Δp
    Gup,
    /// ½|1 − 2π|ψ(2π)|²|
    Angle,
}

impl BoundKind {
    pub fn label(self) -> &'static str {
        match self {
            BoundKind::Heisenberg => "heisenberg",
            BoundKind::Deformed => "deformed",
            BoundKind::Gup => "gup",
            BoundKind::Angle => "angle",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UncertaintyReport {
    pub dx: f64,
    pub dp: f64,
    pub product: f64,
    pub bound: f64,
    pub satisfied: bool,
    pub bound_kind: BoundKind,
}

impl UncertaintyReport {
    pub fn new(dx: f64, dp: f64, bound: f64, bound_kind: BoundKind) -> Self {
        let product = dx * dp;
        UncertaintyReport {
            dx,
            dp,
            product,
            bound,
            satisfied: product >= bound - BOUND_SLACK,
            bound_kind,
        }
    }
}

/// ψ(μ) = (2πα)^{−1/4} exp(−μ²/4α) on the ε = +1 hyperbola.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianSpec {
    alpha: f64,
    params: AlgebraParams,
}

impl GaussianSpec {
    pub fn new(alpha: f64, params: AlgebraParams) -> Result<Self> {
        if !(alpha.is_finite() && alpha > 0.0) {
            return Err(Error::InvalidParameter {
                name: "alpha",
                reason: "must be finite and > 0",
            });
        }
        params.require_sign(Epsilon::Plus)?;
        params.require_deformed()?;
        if params.r() != 1.0 {
            return Err(Error::InvalidParameter {
                name: "r",
                reason: "Gaussian moments are defined for r = 1",
            });
        }
        Ok(GaussianSpec { alpha, params })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn params(&self) -> &AlgebraParams {
        &self.params
    }

    pub fn amplitude(&self, mu: f64) -> f64 {
        (2.0 * PI * self.alpha).powf(-0.25) * (-mu * mu / (4.0 * self.alpha)).exp()
    }

    /// dψ/dμ
    pub fn derivative(&self, mu: f64) -> f64 {
        -mu / (2.0 * self.alpha) * self.amplitude(mu)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianMoments {
    pub alpha: f64,
    pub ell: f64,
    pub mu_max: f64,
    /// ⟨x⟩ and ⟨p⟩; zero by symmetry.
    pub mean_x: f64,
    pub mean_p: f64,
    pub x2_quad: f64,
    pub p2_quad: f64,
    /// ℓ²/4α
    pub x2_printed: f64,
    /// (2e^{2α} − 1)/4ℓ², as usually quoted; the quadrature gives (e^{2α} − 1)/2ℓ².
    pub p2_printed: f64,
    pub dx: f64,
    pub dp: f64,
    pub product: f64,
    /// (2e^α − 1)/4α, as usually quoted.
    pub product_printed: f64,
    /// ⟨cosh μ⟩ = ⟨I⟩ at r = 1.
    pub center_mean: f64,
}

impl GaussianMoments {
    /// ½⟨I⟩
    pub fn bound(&self) -> f64 {
        0.5 * self.center_mean.abs()
    }

    pub fn report(&self) -> UncertaintyReport {
        UncertaintyReport::new(self.dx, self.dp, self.bound(), BoundKind::Deformed)
    }
}

/// Moments of the Gaussian by quadrature with the default cutoff
/// μ_max = 2α + 10√(2α) + 10.
pub fn gaussian_moments(spec: &GaussianSpec) -> Result<GaussianMoments> {
    gaussian_moments_with_cutoff(spec, gaussian_mu_max(spec.alpha()))
}

pub fn gaussian_moments_with_cutoff(spec: &GaussianSpec, mu_max: f64) -> Result<GaussianMoments> {
    let alpha = spec.alpha();
    let ell = spec.params().ell();
    let tol = Tolerance::new(1e-300, 1e-14);
    let density = |m: f64| spec.amplitude(m).powi(2);
    // split at the origin and at the sinh² peak 2α so every panel sees a
    // single smooth bump
    let breaks = [-mu_max, -2.0 * alpha, 0.0, 2.0 * alpha, mu_max];
    let integ = |f: &dyn Fn(f64) -> f64| -> Result<f64> {
        let mut total = 0.0;
        for w in breaks.windows(2) {
            let (a, b) = (w[0].max(-mu_max), w[1].min(mu_max));
            if b > a {
                total += quad::integrate(f, a, b, tol)?;
            }
        }
        Ok(total)
    };

    let mean_x = ell * integ(&|m| spec.amplitude(m) * spec.derivative(m))?;
    let mean_p = integ(&|m| m.sinh() * density(m))? / ell;
    let x2_quad = ell * ell * integ(&|m| spec.derivative(m).powi(2))?;
    let p2_quad = integ(&|m| m.sinh().powi(2) * density(m))? / (ell * ell);
    let center_mean = integ(&|m| m.cosh() * density(m))?;

    let dx = (x2_quad - mean_x * mean_x).max(0.0).sqrt();
    let dp = (p2_quad - mean_p * mean_p).max(0.0).sqrt();
    Ok(GaussianMoments {
        alpha,
        ell,
        mu_max,
        mean_x,
        mean_p,
        x2_quad,
        p2_quad,
        x2_printed: ell * ell / (4.0 * alpha),
        p2_printed: (2.0 * (2.0 * alpha).exp() - 1.0) / (4.0 * ell * ell),
        dx,
        dp,
        product: dx * dp,
        product_printed: (2.0 * alpha.exp() - 1.0) / (4.0 * alpha),
        center_mean,
    })
}

/// Spreads of X and P in `state` against ½|⟨I⟩|.
pub fn deformed_bound_check(state: &GridState, rep: &OperatorRep) -> Result<UncertaintyReport> {
    if !state.matches(rep) {
        return Err(Error::BasisMismatch);
    }
    let dx = state.spread(rep.x())?;
    let dp = state.spread(rep.p())?;
    let bound = 0.5 * state.expectation(rep.center())?.norm();
    Ok(UncertaintyReport::new(dx, dp, bound, BoundKind::Deformed))
}

#[derive(Debug, Clone, PartialEq)]
pub struct GupCurve {
    pub c: f64,
    pub dp_values: Vec<f64>,
    pub bounds: Vec<f64>,
    /// √(C/2)
    pub min_dx: f64,
    /// √(2/C)
    pub argmin_dp: f64,
    pub sampled_min: f64,
    pub sampled_argmin: f64,
}

/// Δx ≥ 1/(2Δp) + (C/4)Δp, in units ℏ = 1.
pub fn gup_bound(c: f64, dp: f64) -> f64 {
    0.5 / dp + 0.25 * c * dp
}

pub fn gup_curve(c: f64, dp_values: &[f64]) -> Result<GupCurve> {
    if !(c.is_finite() && c > 0.0) {
        return Err(Error::InvalidParameter {
            name: "C",
            reason: "must be finite and > 0",
        });
    }
    if dp_values.is_empty() {
        return Err(Error::InvalidParameter {
            name: "dp_values",
            reason: "need at least one momentum spread",
        });
    }
    if dp_values.iter().any(|&d| !(d.is_finite() && d > 0.0)) {
        return Err(Error::InvalidParameter {
            name: "dp_values",
            reason: "momentum spreads must be positive",
        });
    }
    let bounds: Vec<f64> = dp_values.iter().map(|&d| gup_bound(c, d)).collect();
    let (imin, &sampled_min) = bounds
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))
        .expect("non-empty");
    Ok(GupCurve {
        c,
        dp_values: dp_values.to_vec(),
        bounds,
        min_dx: (c / 2.0).sqrt(),
        argmin_dp: (2.0 / c).sqrt(),
        sampled_min,
        sampled_argmin: dp_values[imin],
    })
}

/// `n` logarithmically spaced values on `[lo, hi]`.
pub fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![lo];
    }
    let (a, b) = (lo.ln(), hi.ln());
    (0..n)
        .map(|i| (a + (b - a) * i as f64 / (n - 1) as f64).exp())
        .collect()
}

/// Symmetric momentum grid `[−half_width, half_width]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentumGrid {
    pub half_width: f64,
    pub points: usize,
}

impl MomentumGrid {
    pub fn spacing(&self) -> f64 {
        2.0 * self.half_width / (self.points - 1) as f64
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EnergyTail {
    pub domains: Vec<f64>,
    /// ∫_{−L}^{L} p²|ψ|² dp for each L.
    pub partials: Vec<f64>,
    pub strictly_increasing: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct KempfReport {
    pub c: f64,
    pub a: f64,
    pub spacing: f64,
    /// Interior max of ([x,p] − i(1 + (C/2)p²))φ on a Gaussian probe φ.
    pub commutator_residual: f64,
    /// Interior max of |xψₐ − aψₐ|.
    pub eigen_residual: f64,
    /// ∫|ψₐ|² over the whole line, π/√(C/2).
    pub norm: f64,
    pub energy_tail: EnergyTail,
}

pub const DEFAULT_TAIL_DOMAINS: [f64; 3] = [10.0, 100.0, 1000.0];

/// x = i(1 + (C/2)p²) d/dp + i(C/2)p on a momentum grid, fourth-order
/// differences, as a sparse matrix.
pub fn kempf_position_operator(c: f64, grid: &[f64], h: f64) -> SparseMatrix {
    let half_c = 0.5 * c;
    let i = Complex64::new(0.0, 1.0);
    let mut entries: Vec<(usize, usize, Complex64)> = fd4_entries(grid.len(), h)
        .into_iter()
        .map(|(row, col, v)| (row, col, i * ((1.0 + half_c * grid[row] * grid[row]) * v)))
        .collect();
    entries.extend(
        grid.iter()
            .enumerate()
            .map(|(j, &p)| (j, j, i * (half_c * p))),
    );
    SparseMatrix::from_triplets(grid.len(), entries)
}

/// ψₐ(p) = (1 + (C/2)p²)^{−1/2} exp(−i a √(2/C) arctan(√(C/2) p)), the
/// normalizable eigenvector of x with eigenvalue a.
pub fn kempf_eigenvector(c: f64, a: f64, p: f64) -> Complex64 {
    let half_c = 0.5 * c;
    let amp = (1.0 + half_c * p * p).powf(-0.5);
    let phase = -a / half_c.sqrt() * (half_c.sqrt() * p).atan();
    Complex64::from_polar(amp, phase)
}

pub fn kempf_operator_check(c: f64, a: f64, grid: MomentumGrid) -> Result<KempfReport> {
    kempf_operator_check_with_tail(c, a, grid, &DEFAULT_TAIL_DOMAINS)
}

pub fn kempf_operator_check_with_tail(
    c: f64,
    a: f64,
    grid: MomentumGrid,
    tail_domains: &[f64],
) -> Result<KempfReport> {
    if !(c.is_finite() && c > 0.0) {
        return Err(Error::InvalidParameter {
            name: "C",
            reason: "must be finite and > 0",
        });
    }
    if !(grid.half_width.is_finite() && grid.half_width > 0.0) {
        return Err(Error::InvalidParameter {
            name: "half_width",
            reason: "must be finite and > 0",
        });
    }
    if grid.points < 16 {
        return Err(Error::GridSize {
            got: grid.points,
            reason: "momentum grid needs at least 16 points",
        });
    }
    let h = grid.spacing();
    let half_c = 0.5 * c;
    // resolve the (1 + (C/2)p²)^{−1/2} envelope and the phase winding
    if h * half_c.sqrt() * a.abs().max(1.0) > 0.25 {
        return Err(Error::GridSize {
            got: grid.points,
            reason: "momentum grid too coarse for C and a",
        });
    }
    let (p, _) = line_grid(grid.half_width, grid.points);
    let x = kempf_position_operator(c, &p, h);
    let lo = 2;
    let hi = p.len() - 2;
    let interior_max = |v: &[Complex64]| v[lo..hi].iter().map(|z| z.norm()).fold(0.0, f64::max);

    let probe: Vec<Complex64> = p
        .iter()
        .map(|&q| Complex64::new((-0.5 * q * q).exp(), 0.0))
        .collect();
    let p_probe: Vec<Complex64> = probe.iter().zip(&p).map(|(f, &q)| f * q).collect();
    let x_p_probe = x.matvec(&p_probe)?;
    let x_probe = x.matvec(&probe)?;
    let comm: Vec<Complex64> = (0..p.len())
        .map(|j| {
            x_p_probe[j]
                - x_probe[j] * p[j]
                - Complex64::new(0.0, 1.0 + half_c * p[j] * p[j]) * probe[j]
        })
        .collect();
    let commutator_residual = interior_max(&comm);

    let psi: Vec<Complex64> = p.iter().map(|&q| kempf_eigenvector(c, a, q)).collect();
    let x_psi = x.matvec(&psi)?;
    let eig: Vec<Complex64> = x_psi.iter().zip(&psi).map(|(xp, ps)| xp - ps * a).collect();
    let eigen_residual = interior_max(&eig);

    let density = |q: f64| 1.0 / (1.0 + half_c * q * q);
    let norm = quad::integrate_line(density, Tolerance::new(1e-14, 1e-14))?;
    let partials = tail_domains
        .iter()
        .map(|&l| quad::integrate(|q| q * q * density(q), -l, l, Tolerance::new(1e-12, 1e-13)))
        .collect::<Result<Vec<f64>>>()?;
    let strictly_increasing = partials.windows(2).all(|w| w[1] > w[0]);

    Ok(KempfReport {
        c,
        a,
        spacing: h,
        commutator_residual,
        eigen_residual,
        norm,
        energy_tail: EnergyTail {
            domains: tail_domains.to_vec(),
            partials,
            strictly_increasing,
        },
    })
}

/// ΔL_z Δφ against ½|1 − 2π|ψ(2π)|²| for a state on the circle grid.
///
/// L_z = −i d/dθ (spectral), φ is multiplication by θ ∈ [0, 2π), and ψ(2π)
/// is read at the last grid point (the seam approached from below), with ψ
/// rescaled to the measure dθ.
pub fn angle_bound(state: &GridState) -> Result<UncertaintyReport> {
    if state.basis() != BasisKind::CircleGrid {
        return Err(Error::BasisMismatch);
    }
    let m = state.grid().len();
    let lz = fourier_diff_matrix(m).scale(Complex64::new(0.0, -1.0));
    let phi = CMatrix::from_real_diag(state.grid());
    let d_l = state.spread(&lz)?;
    let d_phi = state.spread(&phi)?;
    let total_measure: f64 = state.weights().iter().sum();
    let seam = state.amplitudes()[m - 1].norm_sqr() * total_measure;
    let bound = 0.5 * (1.0 - seam).abs();
    Ok(UncertaintyReport::new(d_phi, d_l, bound, BoundKind::Angle))
}

/// δₙ on the lattice: Δx = 0, ⟨I⟩ = 0, hence product and bound both vanish.
pub fn localized_state_check(n: i64, rep: &OperatorRep) -> Result<UncertaintyReport> {
    if rep.basis() != BasisKind::FourierLattice {
        return Err(Error::BasisMismatch);
    }
    let half = (rep.dim() / 2) as i64;
    let limit = half - rep.interior_margin() as i64;
    if n.abs() > limit {
        return Err(Error::NoSuchLevel {
            n: n.unsigned_abs() as usize,
            available: limit.max(0) as usize,
        });
    }
    let state = GridState::localized(rep, n)?;
    deformed_bound_check(&state, rep)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasureComparison {
    pub z_flat: f64,
    pub z_deformed: f64,
    pub z_gup: f64,
    pub cutoff: f64,
}

/// Gaussian-weighted momentum integrals under the three phase-space measures
/// dp, dp/√(1 + ℓ²p²) and dp/(1 + βp²).
pub fn measure_compare(ell: f64, beta: f64, temp_scale: f64) -> Result<MeasureComparison> {
    if !(temp_scale.is_finite() && temp_scale > 0.0) {
        return Err(Error::InvalidParameter {
            name: "tau",
            reason: "must be finite and > 0",
        });
    }
    measure_compare_with_cutoff(ell, beta, temp_scale, 20.0 * temp_scale.sqrt())
}

pub fn measure_compare_with_cutoff(
    ell: f64,
    beta: f64,
    tau: f64,
    cutoff: f64,
) -> Result<MeasureComparison> {
    if !(ell.is_finite() && ell >= 0.0) {
        return Err(Error::InvalidParameter {
            name: "ell",
            reason: "must be finite and >= 0",
        });
    }
    if !(beta.is_finite() && beta >= 0.0) {
        return Err(Error::InvalidParameter {
            name: "beta",
            reason: "must be finite and >= 0",
        });
    }
    if !(tau.is_finite() && tau > 0.0) {
        return Err(Error::InvalidParameter {
            name: "tau",
            reason: "must be finite and > 0",
        });
    }
    let tol = Tolerance::new(1e-300, 1e-14);
    let weight = |p: f64| (-p * p / (2.0 * tau)).exp();
    // even integrands: integrate [0, cutoff] and double
    let half = |f: &dyn Fn(f64) -> f64| quad::integrate(f, 0.0, cutoff, tol).map(|v| 2.0 * v);
    Ok(MeasureComparison {
        z_flat: half(&weight)?,
        z_deformed: half(&|p| weight(p) / (1.0 + ell * ell * p * p).sqrt())?,
        z_gup: half(&|p| weight(p) / (1.0 + beta * p * p))?,
        cutoff,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repr::{build_circle_rep, build_fourier_rep};

    #[test]
    fn report_slack() {
        assert!(UncertaintyReport::new(1.0, 0.5, 0.5 + 0.5e-10, BoundKind::Heisenberg).satisfied);
        assert!(!UncertaintyReport::new(1.0, 0.5, 0.5 + 2e-10, BoundKind::Heisenberg).satisfied);
    }

    #[test]
    fn gaussian_spec_rejections() {
        let plus = AlgebraParams::with_ell(1.0, Epsilon::Plus).unwrap();
        assert!(GaussianSpec::new(0.0, plus).is_err());
        assert!(
            GaussianSpec::new(1.0, AlgebraParams::with_ell(1.0, Epsilon::Minus).unwrap()).is_err()
        );
        assert!(GaussianSpec::new(
            1.0,
            AlgebraParams::new(1.0, Epsilon::Plus, 2.0, 1.0).unwrap()
        )
        .is_err());
    }

    #[test]
    fn gup_examples() {
        let g = gup_curve(2.0, &[1.0]).unwrap();
        assert_eq!(g.bounds, vec![1.0]);
        assert_eq!(g.min_dx, 1.0);
        assert_eq!(g.argmin_dp, 1.0);
        assert!((gup_curve(2e-2, &[1.0]).unwrap().min_dx - 0.1).abs() < 1e-16);
        assert!(gup_curve(2.0, &[1.0, 0.0]).is_err());
        assert!(gup_curve(0.0, &[1.0]).is_err());
        assert!(gup_curve(1.0, &[]).is_err());
    }

    #[test]
    fn kempf_rejects_coarse_grid() {
        let g = MomentumGrid {
            half_width: 40.0,
            points: 100,
        };
        assert!(matches!(
            kempf_operator_check(2.0, 0.0, g),
            Err(Error::GridSize { .. })
        ));
    }

    #[test]
    fn localized_examples() {
        let p = AlgebraParams::with_ell(1.0, Epsilon::Minus).unwrap();
        let rep = build_fourier_rep(p, 32).unwrap();
        for n in [0, 5, -30] {
            let r = localized_state_check(n, &rep).unwrap();
            assert_eq!((r.dx, r.product, r.bound), (0.0, 0.0, 0.0));
            assert!(r.satisfied);
            assert!((r.dp * r.dp - 0.5).abs() < 1e-15);
        }
        assert!(localized_state_check(31, &rep).is_err());
        let circle = build_circle_rep(p, 16).unwrap();
        assert_eq!(
            localized_state_check(0, &circle).unwrap_err(),
            Error::BasisMismatch
        );
    }

    #[test]
    fn angle_bound_basis_check() {
        let p = AlgebraParams::with_ell(1.0, Epsilon::Minus).unwrap();
        let rep = build_fourier_rep(p, 8).unwrap();
        let s = GridState::localized(&rep, 0).unwrap();
        assert_eq!(angle_bound(&s).unwrap_err(), Error::BasisMismatch);
    }

    #[test]
    fn measure_flat_limit() {
        let m = measure_compare(0.0, 0.0, 1.0).unwrap();
        let root = (2.0 * PI).sqrt();
        for z in [m.z_flat, m.z_deformed, m.z_gup] {
            assert!((z - root).abs() < 1e-13);
        }
        assert!(measure_compare(1.0, 1.0, 0.0).is_err());
        assert!(measure_compare(-1.0, 1.0, 1.0).is_err());
    }
}
