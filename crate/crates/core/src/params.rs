use crate::error::{Error, Result};

/// Sign of the deformation.
///
/// `Minus` gives ISO(2): bounded momentum, discrete position spectrum.
/// `Plus` gives ISO(1,1): unbounded momentum, continuous position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Epsilon {
    Minus,
    Plus,
}

impl Epsilon {
    pub fn value(self) -> f64 {
        match self {
            Epsilon::Minus => -1.0,
            Epsilon::Plus => 1.0,
        }
    }

    pub fn from_sign(sign: i32) -> Result<Self> {
        match sign {
            -1 => Ok(Epsilon::Minus),
            1 => Ok(Epsilon::Plus),
            _ => Err(Error::InvalidParameter {
                name: "epsilon",
                reason: "must be -1 or +1",
            }),
        }
    }
}

/// Deformation parameters shared by every computation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlgebraParams {
    ell: f64,
    epsilon: Epsilon,
    r: f64,
    mass: f64,
}

impl AlgebraParams {
    pub fn new(ell: f64, epsilon: Epsilon, r: f64, mass: f64) -> Result<Self> {
        if !(ell.is_finite() && ell >= 0.0) {
            return Err(Error::InvalidParameter {
                name: "ell",
                reason: "must be finite and >= 0",
            });
        }
        if !(r.is_finite() && r > 0.0) {
            return Err(Error::InvalidParameter {
                name: "r",
                reason: "must be finite and > 0",
            });
        }
        if !(mass.is_finite() && mass > 0.0) {
            return Err(Error::InvalidParameter {
                name: "mass",
                reason: "must be finite and > 0",
            });
        }
        Ok(AlgebraParams {
            ell,
            epsilon,
            r,
            mass,
        })
    }

    /// r = 1, m = 1.
    pub fn with_ell(ell: f64, epsilon: Epsilon) -> Result<Self> {
        Self::new(ell, epsilon, 1.0, 1.0)
    }

    /// The undeformed Heisenberg algebra (ℓ = 0).
    pub fn heisenberg(mass: f64) -> Result<Self> {
        Self::new(0.0, Epsilon::Plus, 1.0, mass)
    }

    pub fn ell(&self) -> f64 {
        self.ell
    }

    pub fn epsilon(&self) -> Epsilon {
        self.epsilon
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn is_deformed(&self) -> bool {
        self.ell > 0.0
    }

    pub(crate) fn require_sign(&self, expected: Epsilon) -> Result<()> {
        if self.epsilon == expected {
            Ok(())
        } else {
            Err(Error::WrongSign { expected })
        }
    }

    pub(crate) fn require_deformed(&self) -> Result<()> {
        if self.is_deformed() {
            Ok(())
        } else {
            Err(Error::Undeformed)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_out_of_range() {
        assert!(AlgebraParams::new(-0.1, Epsilon::Plus, 1.0, 1.0).is_err());
        assert!(AlgebraParams::new(1.0, Epsilon::Plus, 0.0, 1.0).is_err());
        assert!(AlgebraParams::new(1.0, Epsilon::Plus, 1.0, -1.0).is_err());
        assert!(AlgebraParams::new(f64::NAN, Epsilon::Plus, 1.0, 1.0).is_err());
        assert!(AlgebraParams::new(0.0, Epsilon::Minus, 1.0, 1.0).is_ok());
    }

    #[test]
    fn sign_parsing() {
        assert_eq!(Epsilon::from_sign(-1), Ok(Epsilon::Minus));
        assert_eq!(Epsilon::from_sign(1), Ok(Epsilon::Plus));
        assert!(Epsilon::from_sign(0).is_err());
    }
}
