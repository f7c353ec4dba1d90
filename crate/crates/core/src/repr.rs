//! Finite matrix realizations of the deformed algebra.
//!
//! Three bases are available:
//!
//! - [`BasisKind::FourierLattice`]: ε = −1, position diagonal on n ∈ {−N..N},
//!   `X = ℓn`, `P = (r/iℓ)Δ₋`, `I = rΔ₊` with Δ∓ the half difference/sum of
//!   the two neighbour shifts.
//! - [`BasisKind::CircleGrid`]: ε = −1, momentum diagonal on an M-point
//!   θ-grid, `P = (r/ℓ) sin θ`, `I = r cos θ`, `X = iℓ D_θ` with spectral
//!   (Fourier) differentiation.
//! - [`BasisKind::HyperbolaGrid`]: ε = +1 on a uniform μ-grid,
//!   `P = (r/ℓ) sinh μ`, `I = r cosh μ`, `X = iℓ D_μ` with fourth-order
//!   central differences.
//!
//! Truncating an infinite shift or derivative breaks the relations near the
//! cut, so every representation carries an `interior_margin` and relation
//! checks are made on the interior block.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::linalg::{commutator, CMatrix};
use crate::params::{AlgebraParams, Epsilon};
use crate::Complex64;

const I: Complex64 = Complex64::new(0.0, 1.0);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasisKind {
    FourierLattice,
    CircleGrid,
    HyperbolaGrid,
}

impl BasisKind {
    pub fn label(self) -> &'static str {
        match self {
            BasisKind::FourierLattice => "fourier_lattice",
            BasisKind::CircleGrid => "circle_grid",
            BasisKind::HyperbolaGrid => "hyperbola_grid",
        }
    }
}

/// Position, momentum and center operator on one finite basis.
#[derive(Debug, Clone)]
pub struct OperatorRep {
    x: CMatrix,
    p: CMatrix,
    center: CMatrix,
    basis: BasisKind,
    grid: Vec<f64>,
    weights: Vec<f64>,
    params: AlgebraParams,
    interior_margin: usize,
}

impl OperatorRep {
    pub fn x(&self) -> &CMatrix {
        &self.x
    }

    pub fn p(&self) -> &CMatrix {
        &self.p
    }

    /// The operator `I` replacing the trivial center.
    pub fn center(&self) -> &CMatrix {
        &self.center
    }

    pub fn basis(&self) -> BasisKind {
        self.basis
    }

    /// Lattice index n, angle θ or rapidity μ, depending on the basis.
    pub fn grid(&self) -> &[f64] {
        &self.grid
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn params(&self) -> &AlgebraParams {
        &self.params
    }

    pub fn interior_margin(&self) -> usize {
        self.interior_margin
    }

    pub fn dim(&self) -> usize {
        self.grid.len()
    }

    /// Largest `max |A − A†|` over X, P and I.
    ///
    /// Weights are uniform in every basis, so Hermiticity in the weighted
    /// inner product is plain matrix Hermiticity.
    pub fn hermiticity_defect(&self) -> f64 {
        [&self.x, &self.p, &self.center]
            .iter()
            .map(|m| m.hermiticity_defect())
            .fold(0.0, f64::max)
    }
}

/// `(2N+1)`-dimensional lattice representation with X diagonal.
pub fn build_fourier_rep(params: AlgebraParams, half_width: usize) -> Result<OperatorRep> {
    params.require_sign(Epsilon::Minus)?;
    params.require_deformed()?;
    if half_width < 2 {
        return Err(Error::GridSize {
            got: half_width,
            reason: "half width must be at least 2",
        });
    }
    let ell = params.ell();
    let r = params.r();
    let dim = 2 * half_width + 1;
    let grid: Vec<f64> = (0..dim).map(|j| j as f64 - half_width as f64).collect();
    let x = CMatrix::from_real_diag(&grid.iter().map(|n| ell * n).collect::<Vec<_>>());

    // (Δ₋ f)(n) = (f(n+1) − f(n−1))/2, (Δ₊ f)(n) = (f(n+1) + f(n−1))/2
    let hop = r / (2.0 * ell);
    let p = CMatrix::from_fn(dim, |i, j| {
        if j == i + 1 {
            Complex64::new(0.0, -hop)
        } else if i == j + 1 {
            Complex64::new(0.0, hop)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    let center = CMatrix::from_fn(dim, |i, j| {
        if i.abs_diff(j) == 1 {
            Complex64::new(0.5 * r, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    Ok(OperatorRep {
        x,
        p,
        center,
        basis: BasisKind::FourierLattice,
        grid,
        weights: vec![1.0; dim],
        params,
        interior_margin: 2,
    })
}

/// M-point θ-grid with P and I diagonal and spectral differentiation for X.
pub fn build_circle_rep(params: AlgebraParams, grid_size: usize) -> Result<OperatorRep> {
    params.require_sign(Epsilon::Minus)?;
    params.require_deformed()?;
    if grid_size < 8 || !grid_size.is_multiple_of(2) {
        return Err(Error::GridSize {
            got: grid_size,
            reason: "circle grid needs an even size of at least 8",
        });
    }
    let ell = params.ell();
    let r = params.r();
    let grid = circle_grid(grid_size);
    let p = CMatrix::from_real_diag(&grid.iter().map(|t| r / ell * t.sin()).collect::<Vec<_>>());
    let center = CMatrix::from_real_diag(&grid.iter().map(|t| r * t.cos()).collect::<Vec<_>>());
    let x = fourier_diff_matrix(grid_size).scale(I * ell);
    Ok(OperatorRep {
        x,
        p,
        center,
        basis: BasisKind::CircleGrid,
        grid,
        weights: vec![1.0 / grid_size as f64; grid_size],
        params,
        interior_margin: 0,
    })
}

/// Uniform μ-grid on `[−mu_max, mu_max]` for the ε = +1 algebra.
pub fn build_hyperbola_rep(
    params: AlgebraParams,
    mu_max: f64,
    grid_size: usize,
) -> Result<OperatorRep> {
    params.require_sign(Epsilon::Plus)?;
    params.require_deformed()?;
    if !(mu_max.is_finite() && mu_max > 0.0) {
        return Err(Error::InvalidParameter {
            name: "mu_max",
            reason: "must be finite and > 0",
        });
    }
    if grid_size < 16 {
        return Err(Error::GridSize {
            got: grid_size,
            reason: "hyperbola grid needs at least 16 points",
        });
    }
    let ell = params.ell();
    let r = params.r();
    let (grid, h) = line_grid(mu_max, grid_size);
    let p = CMatrix::from_real_diag(&grid.iter().map(|m| r / ell * m.sinh()).collect::<Vec<_>>());
    let center = CMatrix::from_real_diag(&grid.iter().map(|m| r * m.cosh()).collect::<Vec<_>>());
    let mut x = CMatrix::zeros(grid_size);
    for (i, j, v) in fd4_entries(grid_size, h) {
        x[(i, j)] = I * (ell * v);
    }
    Ok(OperatorRep {
        x,
        p,
        center,
        basis: BasisKind::HyperbolaGrid,
        grid,
        weights: vec![h; grid_size],
        params,
        interior_margin: 2,
    })
}

/// Rapidity cutoff that keeps the `sinh²μ`-weighted tail of a width-α
/// Gaussian below 1e−16.
pub fn gaussian_mu_max(alpha: f64) -> f64 {
    2.0 * alpha + 10.0 * (2.0 * alpha).sqrt() + 10.0
}

pub(crate) fn circle_grid(m: usize) -> Vec<f64> {
    (0..m).map(|j| 2.0 * PI * j as f64 / m as f64).collect()
}

/// `points` equispaced abscissas on `[−half, half]` and their spacing.
pub(crate) fn line_grid(half: f64, points: usize) -> (Vec<f64>, f64) {
    let h = 2.0 * half / (points - 1) as f64;
    ((0..points).map(|j| -half + j as f64 * h).collect(), h)
}

/// Spectral differentiation matrix on an even M-point periodic grid:
/// `D[j][k] = ½ (−1)^{j−k} cot((j−k)h/2)` off the diagonal, zero on it.
/// The Nyquist mode is mapped to zero, so the spectrum is
/// `i·{−(M/2−1)..(M/2−1)} ∪ {0}`.
pub fn fourier_diff_matrix(m: usize) -> CMatrix {
    let h = 2.0 * PI / m as f64;
    CMatrix::from_fn(m, |j, k| {
        if j == k {
            return Complex64::new(0.0, 0.0);
        }
        let d = j as i64 - k as i64;
        let sign = if d.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
        Complex64::new(0.5 * sign / (0.5 * d as f64 * h).tan(), 0.0)
    })
}

/// Nonzero entries of the fourth-order central first-derivative stencil
/// `(f₋₂ − 8f₋₁ + 8f₊₁ − f₊₂)/12h` on `n` points. Neighbours outside the
/// grid are dropped, which keeps the matrix exactly antisymmetric; the two
/// rows at each end are therefore only first-order accurate and must be
/// excluded from convergence checks.
pub fn fd4_entries(n: usize, h: f64) -> Vec<(usize, usize, f64)> {
    let mut out = Vec::with_capacity(4 * n);
    let w1 = 8.0 / (12.0 * h);
    let w2 = 1.0 / (12.0 * h);
    for i in 0..n {
        if i >= 2 {
            out.push((i, i - 2, w2));
        }
        if i >= 1 {
            out.push((i, i - 1, -w1));
        }
        if i + 1 < n {
            out.push((i, i + 1, w1));
        }
        if i + 2 < n {
            out.push((i, i + 2, -w2));
        }
    }
    out
}

/// Max-abs residuals of the five relations.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct RelationResiduals {
    /// `[X,P] − iI`
    pub xp: f64,
    /// `[X,I] − iεℓ²P`
    pub xi: f64,
    /// `[P,I]`
    pub pi: f64,
    /// `I² − εℓ²P² − r²`
    pub casimir: f64,
    /// `[[X,P],I] + [[P,I],X] + [[I,X],P]`
    pub jacobi: f64,
}

impl RelationResiduals {
    pub fn max(&self) -> f64 {
        [self.xp, self.xi, self.pi, self.casimir, self.jacobi]
            .into_iter()
            .fold(0.0, f64::max)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraResiduals {
    /// Entrywise, restricted to the interior block.
    pub interior: RelationResiduals,
    /// Entrywise over the whole matrix; reported, not asserted.
    pub full: RelationResiduals,
    /// Grid bases only: each relation applied to a smooth probe function,
    /// max over interior rows. A differentiation matrix only approximates
    /// the derivative on smooth functions, so this is the quantity that
    /// converges with grid spacing.
    pub probe: Option<RelationResiduals>,
    /// The relation matrices themselves, for inspection.
    pub matrices: RelationMatrices,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RelationMatrices {
    pub xp: CMatrix,
    pub xi: CMatrix,
    pub pi: CMatrix,
    pub casimir: CMatrix,
    pub jacobi: CMatrix,
}

impl RelationMatrices {
    fn residuals(&self, measure: impl Fn(&CMatrix) -> f64) -> RelationResiduals {
        RelationResiduals {
            xp: measure(&self.xp),
            xi: measure(&self.xi),
            pi: measure(&self.pi),
            casimir: measure(&self.casimir),
            jacobi: measure(&self.jacobi),
        }
    }
}

pub fn algebra_residuals(rep: &OperatorRep) -> Result<AlgebraResiduals> {
    let params = rep.params();
    let eps = params.epsilon().value();
    let ell2 = params.ell() * params.ell();
    let r2 = params.r() * params.r();
    let (x, p, c) = (rep.x(), rep.p(), rep.center());
    let n = rep.dim();

    let xp = commutator(x, p)?;
    let xi = commutator(x, c)?;
    let pi = commutator(p, c)?;
    let ix = xi.scale(Complex64::new(-1.0, 0.0));
    let jacobi = commutator(&xp, c)?
        .add(&commutator(&pi, x)?)?
        .add(&commutator(&ix, p)?)?;

    let matrices = RelationMatrices {
        xp: xp.sub(&c.scale(I))?,
        xi: xi.sub(&p.scale(I * (eps * ell2)))?,
        pi,
        casimir: c
            .matmul(c)?
            .sub(&p.matmul(p)?.scale(Complex64::new(eps * ell2, 0.0)))?
            .sub(&CMatrix::identity(n).scale(Complex64::new(r2, 0.0)))?,
        jacobi,
    };
    let margin = rep.interior_margin();
    let interior = matrices.residuals(|m| m.max_abs_interior(margin));
    let full = matrices.residuals(CMatrix::max_abs);

    let probe = match rep.basis() {
        BasisKind::FourierLattice => None,
        BasisKind::CircleGrid | BasisKind::HyperbolaGrid => {
            let phi = probe_function(rep);
            let lo = margin;
            let hi = n - margin;
            let measure = |m: &CMatrix| -> f64 {
                m.matvec(&phi)
                    .map(|v| v[lo..hi].iter().map(|z| z.norm()).fold(0.0, f64::max))
                    .unwrap_or(f64::NAN)
            };
            Some(matrices.residuals(measure))
        }
    };

    Ok(AlgebraResiduals {
        interior,
        full,
        probe,
        matrices,
    })
}

fn probe_function(rep: &OperatorRep) -> Vec<Complex64> {
    match rep.basis() {
        BasisKind::CircleGrid => rep
            .grid()
            .iter()
            .map(|&t| Complex64::new(t.cos().exp(), 0.5 * (2.0 * t).sin()))
            .collect(),
        _ => rep
            .grid()
            .iter()
            .map(|&m| Complex64::new((-0.5 * m * m).exp(), 0.0))
            .collect(),
    }
}

/// Center operator as a function of momentum, `I(p) = r √(1 + ε(ℓp/r)²)`,
/// together with its expansion to second order in ℓp.
pub fn im_from_p(p: f64, params: &AlgebraParams) -> Result<(f64, f64)> {
    let r = params.r();
    let eps = params.epsilon().value();
    let u = params.ell() * p / r;
    if params.epsilon() == Epsilon::Minus && u.abs() > 1.0 {
        return Err(Error::OffBand {
            p,
            max: if params.is_deformed() {
                r / params.ell()
            } else {
                f64::INFINITY
            },
        });
    }
    let exact = r * (1.0 + eps * u * u).max(0.0).sqrt();
    let leading = r * (1.0 + 0.5 * eps * u * u);
    Ok((exact, leading))
}

/// Complex amplitudes on a representation's grid, normalized under its weights.
#[derive(Debug, Clone, PartialEq)]
pub struct GridState {
    amplitudes: Vec<Complex64>,
    grid: Vec<f64>,
    weights: Vec<f64>,
    basis: BasisKind,
}

impl GridState {
    pub fn new(
        amplitudes: Vec<Complex64>,
        grid: Vec<f64>,
        weights: Vec<f64>,
        basis: BasisKind,
    ) -> Result<Self> {
        if amplitudes.len() != grid.len() || weights.len() != grid.len() {
            return Err(Error::DimensionMismatch {
                left: grid.len(),
                right: amplitudes.len().max(weights.len()),
            });
        }
        let norm2: f64 = amplitudes
            .iter()
            .zip(&weights)
            .map(|(a, w)| w * a.norm_sqr())
            .sum();
        if !(norm2.is_finite() && norm2 > 0.0) {
            return Err(Error::InvalidParameter {
                name: "amplitudes",
                reason: "state has zero or non-finite norm",
            });
        }
        let s = 1.0 / norm2.sqrt();
        Ok(GridState {
            amplitudes: amplitudes.into_iter().map(|a| a * s).collect(),
            grid,
            weights,
            basis,
        })
    }

    /// Samples `f` on the grid of `rep`.
    pub fn from_fn(rep: &OperatorRep, f: impl Fn(f64) -> Complex64) -> Result<Self> {
        Self::new(
            rep.grid().iter().map(|&t| f(t)).collect(),
            rep.grid().to_vec(),
            rep.weights().to_vec(),
            rep.basis(),
        )
    }

    /// The lattice basis vector δₙ, a position eigenstate with eigenvalue ℓn.
    pub fn localized(rep: &OperatorRep, n: i64) -> Result<Self> {
        if rep.basis() != BasisKind::FourierLattice {
            return Err(Error::BasisMismatch);
        }
        let half = (rep.dim() / 2) as i64;
        if n.abs() > half {
            return Err(Error::NoSuchLevel {
                n: n.unsigned_abs() as usize,
                available: half as usize,
            });
        }
        let idx = (n + half) as usize;
        let amps = (0..rep.dim())
            .map(|j| Complex64::new(if j == idx { 1.0 } else { 0.0 }, 0.0))
            .collect();
        Self::new(
            amps,
            rep.grid().to_vec(),
            rep.weights().to_vec(),
            rep.basis(),
        )
    }

    /// `e^{−inθ}` on the circle grid: the same position eigenstate seen in
    /// the momentum-diagonal basis.
    pub fn circle_mode(rep: &OperatorRep, n: i64) -> Result<Self> {
        if rep.basis() != BasisKind::CircleGrid {
            return Err(Error::BasisMismatch);
        }
        Self::from_fn(rep, |t| Complex64::from_polar(1.0, -(n as f64) * t))
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn grid(&self) -> &[f64] {
        &self.grid
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn basis(&self) -> BasisKind {
        self.basis
    }

    pub fn norm_sqr(&self) -> f64 {
        self.inner(&self.amplitudes).re
    }

    /// Weighted inner product ⟨self, v⟩ (antilinear in self).
    pub fn inner(&self, v: &[Complex64]) -> Complex64 {
        self.amplitudes
            .iter()
            .zip(v)
            .zip(&self.weights)
            .map(|((a, b), &w)| a.conj() * b * w)
            .sum()
    }

    pub fn matches(&self, rep: &OperatorRep) -> bool {
        self.basis == rep.basis() && self.grid.as_slice() == rep.grid()
    }

    /// ⟨ψ, Aψ⟩.
    pub fn expectation(&self, a: &CMatrix) -> Result<Complex64> {
        Ok(self.inner(&a.matvec(&self.amplitudes)?))
    }

    /// Root central second moment of a Hermitian A: ‖(A − ⟨A⟩)ψ‖.
    pub fn spread(&self, a: &CMatrix) -> Result<f64> {
        let av = a.matvec(&self.amplitudes)?;
        let mean = self.inner(&av).re;
        let centered: f64 = av
            .iter()
            .zip(&self.amplitudes)
            .zip(&self.weights)
            .map(|((x, psi), w)| w * (x - psi * mean).norm_sqr())
            .sum();
        Ok(centered.sqrt())
    }
}
