//! Momentum statistics of the localized states eₙ = e^{−inθ}/√(2π).
//!
//! The scaled momentum P = ℓp = r sin θ is arcsine distributed on [−r, r]
//! with density ν(P) = 1/(π√(r² − P²)) and characteristic function J₀(sr),
//! independently of n.

use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::params::{AlgebraParams, Epsilon};
use crate::quad::{self, Tolerance};
use crate::repr::circle_grid;
use crate::Complex64;

/// Below this |z| J₀ is summed from its power series, above it from the
/// Hankel asymptotic expansion.
pub const J0_CROSSOVER: f64 = 12.0;

/// μ(x)⁻¹μ(p)⁻¹ for a free particle quantized in a box.
pub const FREE_PARTICLE_PRODUCT: f64 = 2.0 * PI;

pub fn bessel_j0(z: f64) -> f64 {
    let x = z.abs();
    if x <= J0_CROSSOVER {
        j0_series(x)
    } else {
        j0_asymptotic(x)
    }
}

/// Σₖ (−z²/4)ᵏ/(k!)².
pub fn j0_series(z: f64) -> f64 {
    let q = -0.25 * z * z;
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut k = 1.0;
    while k < 200.0 {
        term *= q / (k * k);
        sum += term;
        if term.abs() <= 1e-17 * sum.abs().max(1e-300) && k > 0.5 * z {
            break;
        }
        k += 1.0;
    }
    sum
}

/// √(2/πx)·Re[e^{i(x−π/4)} Σₖ iᵏ aₖ/xᵏ] with
/// aₖ = (−1)(−9)···(−(2k−1)²)/(k! 8ᵏ), truncated at the smallest term.
pub fn j0_asymptotic(x: f64) -> f64 {
    let mut sum = Complex64::new(1.0, 0.0);
    let mut mag = 1.0;
    let mut phase = Complex64::new(1.0, 0.0);
    for k in 1..200 {
        let kf = k as f64;
        let ratio = (2.0 * kf - 1.0).powi(2) / (8.0 * kf * x);
        if ratio >= 1.0 {
            break;
        }
        // aₖ/aₖ₋₁ is negative; fold the sign into the iᵏ phase
        mag *= ratio;
        phase *= Complex64::new(0.0, -1.0);
        sum += phase * mag;
        if mag < 1e-17 {
            break;
        }
    }
    let w = x - FRAC_PI_4;
    (2.0 / (PI * x)).sqrt() * (Complex64::new(w.cos(), w.sin()) * sum).re
}

/// (1/2π)∫₀^{2π} cos(z sin θ) dθ by the periodic trapezoid rule.
pub fn bessel_j0_quadrature(z: f64) -> f64 {
    let points = 64 + 2 * z.abs().ceil() as usize;
    quad::periodic_trapezoid(|t| (z * t.sin()).cos(), 2.0 * PI, points) / (2.0 * PI)
}

/// C(s) = J₀(sr).
pub fn char_fn(s: f64, r: f64) -> f64 {
    bessel_j0(s * r)
}

/// ⟨eₙ, e^{isP} eₙ⟩ evaluated directly on an M-point circle grid in the
/// normalized measure dθ/2π. The result does not depend on n.
pub fn char_fn_on_circle(s: f64, r: f64, n: i64, points: usize) -> Complex64 {
    let grid = circle_grid(points);
    let w = 1.0 / points as f64;
    grid.iter()
        .map(|&t| {
            let e_n = Complex64::from_polar(1.0, -(n as f64) * t);
            let phase = Complex64::from_polar(1.0, s * r * t.sin());
            e_n.conj() * phase * e_n * w
        })
        .sum()
}

/// Density value; the two band edges are integrable singularities.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Density {
    Finite(f64),
    Singular,
}

impl Density {
    pub fn value(self) -> Option<f64> {
        match self {
            Density::Finite(v) => Some(v),
            Density::Singular => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArcsinePoint {
    pub density: Density,
    pub cdf: f64,
    /// r²/2, independent of the evaluation point.
    pub second_moment: f64,
}

pub fn arcsine_density(p: f64, r: f64) -> Result<ArcsinePoint> {
    if !(r.is_finite() && r > 0.0) {
        return Err(Error::InvalidParameter {
            name: "r",
            reason: "must be finite and > 0",
        });
    }
    let density = if p.abs() < r {
        Density::Finite(1.0 / (PI * (r * r - p * p).sqrt()))
    } else if p.abs() > r {
        Density::Finite(0.0)
    } else {
        Density::Singular
    };
    let cdf = if p <= -r {
        0.0
    } else if p >= r {
        1.0
    } else {
        0.5 + (p / r).asin() / PI
    };
    Ok(ArcsinePoint {
        density,
        cdf,
        second_moment: 0.5 * r * r,
    })
}

/// ∫ Pᵏ ν(P) dP computed after P = r sin u, which removes both endpoint
/// singularities; the transformed integrand is evaluated literally.
pub fn arcsine_moment_quadrature(k: i32, r: f64) -> f64 {
    quad::gauss_legendre_on(
        |u| {
            let p = r * u.sin();
            let jac = r * u.cos();
            let nu = if jac > 0.0 { 1.0 / (PI * jac) } else { 0.0 };
            p.powi(k) * nu * jac
        },
        -FRAC_PI_2,
        FRAC_PI_2,
        64,
    )
}

/// Reconstructs ν(P) from C(s) = J₀(sr) on s ∈ [−S, S]:
/// ν(P) ≈ (1/π)∫₀^S cos(sP) J₀(sr) σ(s) ds, with Lanczos σ-factors
/// σ(s) = sinc(s/S) to suppress the truncation ringing.
pub fn density_from_char_fn(p: f64, r: f64, s_max: f64) -> Result<f64> {
    let sigma = |s: f64| {
        let a = PI * s / s_max;
        if a == 0.0 {
            1.0
        } else {
            a.sin() / a
        }
    };
    let v = quad::integrate(
        |s| (s * p).cos() * bessel_j0(s * r) * sigma(s),
        0.0,
        s_max,
        Tolerance::new(1e-12, 1e-12),
    )?;
    Ok(v / PI)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DosProduct {
    /// Spacing of the position spectrum, ℓ.
    pub mu_x_inv: f64,
    /// Probability mass of p in [−½, ½], (2/π) arcsin(ℓ/2r).
    pub mu_p: f64,
    pub mu_p_inv: f64,
    pub product: f64,
    /// Small-ℓ value of the product, πr.
    pub small_ell_product: f64,
    /// Small-ℓ value of μ(p), ℓ/(πr).
    pub small_ell_mu_p: f64,
}

/// Product of inverse densities of states μ(x)⁻¹μ(p)⁻¹ for ε = −1.
pub fn dos_product(params: &AlgebraParams) -> Result<DosProduct> {
    params.require_sign(Epsilon::Minus)?;
    params.require_deformed()?;
    let ell = params.ell();
    let r = params.r();
    if ell > 2.0 * r {
        return Err(Error::InvalidParameter {
            name: "ell",
            reason: "momentum band narrower than the unit interval (ell > 2r)",
        });
    }
    let mu_p = 2.0 / PI * (ell / (2.0 * r)).asin();
    Ok(DosProduct {
        mu_x_inv: ell,
        mu_p,
        mu_p_inv: 1.0 / mu_p,
        product: ell / mu_p,
        small_ell_product: PI * r,
        small_ell_mu_p: ell / (PI * r),
    })
}

/// Independent route to μ(p): quadrature of the p-density ℓν(ℓp) over
/// [−½, ½]. Plain adaptive quadrature while the band edge r/ℓ stays at least
/// one unit away, the sine substitution otherwise.
pub fn momentum_mass_quadrature(ell: f64, r: f64) -> Result<f64> {
    let density_p = |p: f64| {
        let u = ell * p;
        ell / (PI * (r * r - u * u).sqrt())
    };
    if r / ell >= 1.5 {
        quad::integrate(density_p, -0.5, 0.5, Tolerance::new(1e-15, 1e-14))
    } else {
        let edge = (ell / (2.0 * r)).min(1.0).asin();
        Ok(quad::gauss_legendre_on(
            |v| {
                let p = r / ell * v.sin();
                let jac = r / ell * v.cos();
                if jac > 0.0 {
                    density_p(p) * jac
                } else {
                    1.0 / PI
                }
            },
            -edge,
            edge,
            64,
        ))
    }
}

/// Partial moments ∫ Pᵏ ν(P) dP for k = 0..=max_k.
pub fn arcsine_moments(max_k: i32, r: f64) -> Vec<f64> {
    (0..=max_k)
        .map(|k| arcsine_moment_quadrature(k, r))
        .collect()
}
