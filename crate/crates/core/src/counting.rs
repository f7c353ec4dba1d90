//! Phase-space area ΔpΔx needed to add the (n+1)st fermion to a box of
//! width Δ, with pₙ = √(2mEₙ) taken from the well spectra (p₀ = 0).

use alloc::vec::Vec;
use core::f64::consts::PI;

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::params::AlgebraParams;
use crate::well::{level_energy, CaseLabel, WellSpec};

/// Closed-form cell for adding particle n+1:
///
/// - ℓ = 0: π
/// - ε = +1: (2Δ/ℓ) sinh(πℓ/2Δ) cosh((πℓ/Δ)(n + ½))
/// - ε = −1, Δ = kℓ: 2k sin(π/2k) cos((π/k)(n + ½))
pub fn phase_cell(params: &AlgebraParams, delta: f64, n: usize) -> Result<f64> {
    let spec = WellSpec::new(*params, delta)?;
    let ell = params.ell();
    let half = n as f64 + 0.5;
    Ok(match spec.case() {
        CaseLabel::Undeformed => PI,
        CaseLabel::EpsPlus => {
            2.0 * delta / ell * (PI * ell / (2.0 * delta)).sinh() * (PI * ell / delta * half).cosh()
        }
        CaseLabel::EpsMinus => {
            let k = spec.sites().unwrap_or(0);
            check_discrete_index(k, n)?;
            let kf = k as f64;
            2.0 * kf * (PI / (2.0 * kf)).sin() * (PI / kf * half).cos()
        }
    })
}

fn check_discrete_index(k: usize, n: usize) -> Result<()> {
    if n + 1 > k.saturating_sub(1) {
        Err(Error::NoSuchLevel {
            n: n + 1,
            available: k.saturating_sub(1),
        })
    } else {
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CellRow {
    pub n: usize,
    /// Momentum of the n-th particle (0 for the empty box).
    pub p_n: f64,
    /// Momentum of the (n+1)-st particle.
    pub p_next: f64,
    pub dp: f64,
    pub cell: f64,
    pub cumulative: f64,
    /// ε = −1 past the spectral midpoint n + ½ ≥ k/2, where the band folds
    /// back and the cell turns negative.
    pub band_edge: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CellTable {
    pub case: CaseLabel,
    pub delta: f64,
    /// Cancels from every cell; kept for provenance.
    pub mass: f64,
    pub rows: Vec<CellRow>,
}

/// Rows n = 0..count−1 built from momenta of the closed-form energies.
pub fn fill_table(params: &AlgebraParams, delta: f64, count: usize) -> Result<CellTable> {
    if count == 0 {
        return Err(Error::InvalidParameter {
            name: "count",
            reason: "must be >= 1",
        });
    }
    let spec = WellSpec::new(*params, delta)?;
    if let Some(k) = spec.sites() {
        check_discrete_index(k, count - 1)?;
    }
    let m = params.mass();
    let momentum = |n: usize| {
        if n == 0 {
            0.0
        } else {
            (2.0 * m * level_energy(params, delta, n)).sqrt()
        }
    };
    let mut rows = Vec::with_capacity(count);
    let mut cumulative = 0.0;
    for n in 0..count {
        let p_n = momentum(n);
        let p_next = momentum(n + 1);
        let dp = p_next - p_n;
        let cell = dp * delta;
        cumulative += cell;
        let band_edge = spec
            .sites()
            .is_some_and(|k| 2.0 * (n as f64 + 0.5) >= k as f64);
        rows.push(CellRow {
            n,
            p_n,
            p_next,
            dp,
            cell,
            cumulative,
            band_edge,
        });
    }
    Ok(CellTable {
        case: spec.case(),
        delta,
        mass: m,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::Epsilon;

    #[test]
    fn undeformed_cell_is_pi() {
        let p = AlgebraParams::heisenberg(1.0).unwrap();
        for n in [0, 1, 7, 100] {
            assert_eq!(phase_cell(&p, 2.5, n).unwrap(), PI);
        }
        let t = fill_table(&p, PI, 3).unwrap();
        let next: Vec<f64> = t.rows.iter().map(|r| r.p_next).collect();
        let low: Vec<f64> = t.rows.iter().map(|r| r.p_n).collect();
        for (a, b) in next.iter().zip([1.0, 2.0, 3.0]) {
            assert!((a - b).abs() < 1e-14);
        }
        for (a, b) in low.iter().zip([0.0, 1.0, 2.0]) {
            assert!((a - b).abs() < 1e-14);
        }
        for r in &t.rows {
            assert!((r.dp - 1.0).abs() < 1e-14);
            assert!((r.cell - PI).abs() < 1e-13);
        }
    }

    #[test]
    fn closed_form_examples() {
        let p = AlgebraParams::with_ell(1.0, Epsilon::Plus).unwrap();
        assert!((phase_cell(&p, 10.0, 0).unwrap() - 3.193_525_397_881_006_5).abs() < 1e-13);
        let p = AlgebraParams::with_ell(1.0, Epsilon::Minus).unwrap();
        assert!((phase_cell(&p, 10.0, 0).unwrap() - 3.090_169_943_749_474).abs() < 1e-13);
    }

    #[test]
    fn discrete_overflow() {
        let p = AlgebraParams::with_ell(1.0, Epsilon::Minus).unwrap();
        assert!(phase_cell(&p, 10.0, 8).is_ok());
        assert_eq!(
            phase_cell(&p, 10.0, 9).unwrap_err(),
            Error::NoSuchLevel {
                n: 10,
                available: 9
            }
        );
        assert!(fill_table(&p, 10.0, 9).is_ok());
        assert!(fill_table(&p, 10.0, 10).is_err());
    }

    #[test]
    fn band_edge_flags_negative_cells() {
        let p = AlgebraParams::with_ell(1.0, Epsilon::Minus).unwrap();
        let t = fill_table(&p, 10.0, 9).unwrap();
        for r in &t.rows {
            assert_eq!(r.band_edge, r.n >= 5);
            if r.n >= 5 {
                assert!(r.cell < 0.0);
            }
        }
    }
}
