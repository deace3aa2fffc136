//! Morse oscillator model.
//!
//! ```text
//! V(x) = c * (exp(-2 alpha (x - x0)) - 2 exp(-alpha (x - x0)))
//! ```
//!
//! - `c`: well depth, `V(x0) = -c`
//! - `alpha`: inverse range
//! - `x0`: equilibrium position
//! - `mass`, `hbar`: unit constants (both 1 by default)
//!
//! The closed-form full-line spectrum
//! `E_n = -c (1 - (n + 1/2) / lambda)^2` with `lambda = sqrt(2 m c) / (alpha hbar)`
//! serves as an independent oracle for the shooting solver.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Morse potential parameters together with the unit constants `m` and `hbar`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MorsePotential<T> {
    c: T,
    alpha: T,
    x0: T,
    mass: T,
    hbar: T,
}

/// Harmonic frequency and anharmonicity constant of the second-order
/// expansion around the minimum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnharmonicApprox<T> {
    /// `alpha * sqrt(2 c / m)`
    pub omega: T,
    /// `hbar * omega / (4 c)`
    pub chi: T,
}

fn positive<T: Real>(name: &'static str, v: T) -> Result<T> {
    if v.is_finite() && v > T::zero() {
        Ok(v)
    } else {
        Err(Error::InvalidParameter {
            name,
            reason: format!("must be finite and > 0, got {v}"),
        })
    }
}

impl<T: Real> MorsePotential<T> {
    pub fn new(c: T, alpha: T, x0: T, mass: T, hbar: T) -> Result<Self> {
        if !x0.is_finite() {
            return Err(Error::InvalidParameter {
                name: "x0",
                reason: format!("must be finite, got {x0}"),
            });
        }
        Ok(Self {
            c: positive("c", c)?,
            alpha: positive("alpha", alpha)?,
            x0,
            mass: positive("mass", mass)?,
            hbar: positive("hbar", hbar)?,
        })
    }

    /// Well of depth `c` with `alpha = 2`, `x0 = 1`, `m = hbar = 1`.
    pub fn with_depth(c: T) -> Result<Self> {
        Self::new(c, T::lit(2.0), T::one(), T::one(), T::one())
    }

    pub fn depth(&self) -> T {
        self.c
    }

    pub fn alpha(&self) -> T {
        self.alpha
    }

    pub fn x0(&self) -> T {
        self.x0
    }

    pub fn mass(&self) -> T {
        self.mass
    }

    pub fn hbar(&self) -> T {
        self.hbar
    }

    /// Same potential with a different depth; the other parameters are kept.
    pub fn with_depth_changed(&self, c: T) -> Result<Self> {
        Self::new(c, self.alpha, self.x0, self.mass, self.hbar)
    }

    /// `V(x)`.
    #[inline]
    pub fn evaluate(&self, x: T) -> T {
        let e = (-self.alpha * (x - self.x0)).exp();
        self.c * (e * e - T::lit(2.0) * e)
    }

    /// `2 m / hbar^2`, the factor in `psi'' = (2m/hbar^2) (V - E) psi`.
    #[inline]
    pub fn kinetic_factor(&self) -> T {
        T::lit(2.0) * self.mass / (self.hbar * self.hbar)
    }

    /// `lambda = sqrt(2 m c) / (alpha hbar)`.
    pub fn depth_parameter(&self) -> T {
        (T::lit(2.0) * self.mass * self.c).sqrt() / (self.alpha * self.hbar)
    }

    pub fn anharmonic(&self) -> AnharmonicApprox<T> {
        let omega = self.alpha * (T::lit(2.0) * self.c / self.mass).sqrt();
        let chi = self.hbar * omega / (T::lit(4.0) * self.c);
        AnharmonicApprox { omega, chi }
    }

    /// `(n + 1/2) (1 - chi (n + 1/2)) hbar omega`, measured from the well
    /// bottom. Subtract `c` to compare with absolute energies.
    ///
    /// No boundedness check: the formula is returned for any `n`.
    pub fn anharmonic_spectrum(&self, n: usize) -> T {
        let AnharmonicApprox { omega, chi } = self.anharmonic();
        let k = T::from_usize(n).unwrap() + T::lit(0.5);
        k * (T::one() - chi * k) * self.hbar * omega
    }

    /// Closed-form energy of level `n`, or `None` when the level is not bound.
    pub fn analytic_energy(&self, n: usize) -> Option<T> {
        let lambda = self.depth_parameter();
        let k = T::from_usize(n)? + T::lit(0.5);
        if k < lambda {
            let r = T::one() - k / lambda;
            Some(-self.c * r * r)
        } else {
            None
        }
    }

    /// Every bound level of the full-line problem, ascending.
    pub fn analytic_spectrum(&self) -> Vec<T> {
        (0..self.bound_state_count())
            .map(|n| self.analytic_energy(n).expect("level below count is bound"))
            .collect()
    }

    /// Number of `n` with `n + 1/2 < lambda`; a tie counts as unbound.
    pub fn bound_state_count(&self) -> usize {
        let lambda = self.depth_parameter();
        let half = T::lit(0.5);
        if lambda <= half {
            return 0;
        }
        let mut count = (lambda - half).ceil().to_usize().unwrap_or(0);
        while count > 0 && T::from_usize(count - 1).unwrap() + half >= lambda {
            count -= 1;
        }
        while T::from_usize(count).unwrap() + half < lambda {
            count += 1;
        }
        count
    }
}
