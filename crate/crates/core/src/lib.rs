//! Numerical laboratory for the one-dimensional deformed Heisenberg algebras
//!
//! ```text
//! [x, p] = i I      [x, I] = i ε ℓ² p      [p, I] = 0
//! ```
//!
//! with ε = −1 (motions of the plane, discrete position spectrum ℓZ) or
//! ε = +1 (motions of the hyperbolic plane). ℓ = 0 is the ordinary
//! Heisenberg algebra. Units are ℏ = c = 1 throughout.
//!
//! The crate is `no_std` and only needs `alloc`. Everything is pure and
//! deterministic; IO, reports and the command line live in the `ncst` crate.
//!
//! Modules:
//!
//! - [`repr`]: finite matrix realizations (lattice, circle grid, hyperbola grid)
//!   and residuals of the algebra relations.
//! - [`well`]: infinite square well spectra for the three kinetic operators.
//! - [`counting`]: phase-space cell needed per added fermion.
//! - [`momentum`]: J₀, the arcsine law and the density-of-states product.
//! - [`uncertainty`]: Gaussian states, deformed/GUP/angle bounds, measure comparison.
//! - [`linalg`], [`quad`]: dense complex matrices, Jacobi eigensolver, quadrature.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod counting;
pub mod error;
pub mod linalg;
pub mod momentum;
pub mod params;
pub mod quad;
pub mod repr;
pub mod uncertainty;
pub mod well;

pub use error::{Error, Result};
pub use linalg::{CMatrix, Eigen};
pub use params::{AlgebraParams, Epsilon};
pub use repr::{BasisKind, GridState, OperatorRep};

pub use num_complex::Complex64;
