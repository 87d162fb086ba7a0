use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::real::Real;

/// The constants ℏ, m, κ of H = −(ℏ²/2m) d²/dx² − κ/|x|.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysParams<T> {
    pub hbar: T,
    pub mass: T,
    pub kappa: T,
}

impl<T: Real> PhysParams<T> {
    pub fn new(hbar: T, mass: T, kappa: T) -> Result<Self> {
        for (name, v) in [("hbar", hbar), ("mass", mass), ("kappa", kappa)] {
            if !(v > T::zero() && v.is_finite()) {
                return Err(Error::Domain(format!("{name} must be positive and finite, got {v}")));
            }
        }
        Ok(PhysParams { hbar, mass, kappa })
    }

    /// ℏ = m = κ = 1.
    pub fn atomic() -> Self {
        PhysParams {
            hbar: T::one(),
            mass: T::one(),
            kappa: T::one(),
        }
    }

    /// p = 2mκ/ℏ², the inverse Bohr-type length of the log term.
    pub fn p(&self) -> T {
        T::lit(2.0) * self.mass * self.kappa / (self.hbar * self.hbar)
    }

    /// 2m/ℏ², the factor turning energies into wave numbers squared.
    pub fn two_m_over_hbar2(&self) -> T {
        T::lit(2.0) * self.mass / (self.hbar * self.hbar)
    }

    /// ℏ²/(mκ), the natural length.
    pub fn length_unit(&self) -> T {
        self.hbar * self.hbar / (self.mass * self.kappa)
    }

    /// mκ²/ℏ², the natural energy (twice the ground-state binding).
    pub fn energy_unit(&self) -> T {
        self.mass * self.kappa * self.kappa / (self.hbar * self.hbar)
    }
}

impl<T: Real> Default for PhysParams<T> {
    fn default() -> Self {
        Self::atomic()
    }
}
