use core::fmt;

use crate::params::Epsilon;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A parameter violates its documented range.
    InvalidParameter {
        name: &'static str,
        reason: &'static str,
    },
    /// The operation only exists for one sign of the deformation.
    WrongSign { expected: Epsilon },
    /// ℓ = 0 where the operation needs a genuine deformation.
    Undeformed,
    /// Grid or lattice too small or of the wrong parity.
    GridSize { got: usize, reason: &'static str },
    /// Matrix shapes disagree.
    DimensionMismatch { left: usize, right: usize },
    /// Momentum outside the band |ℓp| ≤ r of the ε = −1 algebra.
    OffBand { p: f64, max: f64 },
    /// ε = −1 well width is not an integral multiple of ℓ.
    NotCommensurate { delta: f64, ell: f64 },
    /// Asked for a level beyond the ε = −1 lattice spectrum.
    NoSuchLevel { n: usize, available: usize },
    /// State and representation live on different grids.
    BasisMismatch,
    /// Iteration or quadrature failed to reach its tolerance.
    NotConverged(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParameter { name, reason } => write!(f, "invalid {name}: {reason}"),
            Error::WrongSign { expected } => {
                write!(f, "operation requires epsilon = {}", expected.value())
            }
            Error::Undeformed => f.write_str("operation requires ell > 0"),
            Error::GridSize { got, reason } => write!(f, "bad grid size {got}: {reason}"),
            Error::DimensionMismatch { left, right } => {
                write!(f, "dimension mismatch: {left} vs {right}")
            }
            Error::OffBand { p, max } => write!(f, "momentum {p} outside band |p| <= {max}"),
            Error::NotCommensurate { delta, ell } => {
                write!(
                    f,
                    "well width {delta} is not an integral multiple of ell = {ell}"
                )
            }
            Error::NoSuchLevel { n, available } => {
                write!(f, "level {n} requested but only {available} exist")
            }
            Error::BasisMismatch => f.write_str("state and representation use different grids"),
            Error::NotConverged(what) => write!(f, "{what} did not converge"),
        }
    }
}

impl core::error::Error for Error {}
