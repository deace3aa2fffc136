//! Finite-difference reference spectrum.
//!
//! Three-point discretization of `-(hbar^2 / 2m) psi'' + V psi` on the
//! interior grid points with `psi = 0` at both ends:
//!
//! ```text
//! diagonal     2t + V(x_i)
//! off-diagonal -t,           t = hbar^2 / (2 m h^2)
//! ```
//!
//! Eigenvalues come from Sturm-sequence bisection, eigenvectors from inverse
//! iteration. Shares nothing with the shooting path beyond the potential.

use crate::error::{Error, Result};
use crate::morse::MorsePotential;
use crate::scalar::Real;

use super::grid::Grid;
use super::wavefunction::GridWavefunction;

/// Symmetric tridiagonal matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct SymTridiagonal<T> {
    diag: Vec<T>,
    off: Vec<T>,
}

impl<T: Real> SymTridiagonal<T> {
    pub fn new(diag: Vec<T>, off: Vec<T>) -> Result<Self> {
        if diag.is_empty() || off.len() + 1 != diag.len() {
            return Err(Error::InvalidParameter {
                name: "off",
                reason: format!("{} off-diagonal entries for order {}", off.len(), diag.len()),
            });
        }
        Ok(Self { diag, off })
    }

    pub fn order(&self) -> usize {
        self.diag.len()
    }

    fn pivot_floor(&self) -> T {
        let max_off = self.off.iter().fold(T::one(), |m, &e| m.fmax(e * e));
        T::min_positive_value() * max_off
    }

    /// Number of eigenvalues strictly below `lambda`.
    pub fn sturm_count(&self, lambda: T) -> usize {
        let floor = self.pivot_floor();
        let mut count = 0;
        let mut q = self.diag[0] - lambda;
        for i in 0..self.order() {
            if i > 0 {
                let e = self.off[i - 1];
                q = (self.diag[i] - lambda) - e * e / q;
            }
            if q.abs() < floor {
                q = -floor;
            }
            if q < T::zero() {
                count += 1;
            }
        }
        count
    }

    /// Gershgorin interval containing the whole spectrum.
    pub fn gershgorin(&self) -> (T, T) {
        let n = self.order();
        let mut lo = T::infinity();
        let mut hi = T::neg_infinity();
        for i in 0..n {
            let left = if i > 0 { self.off[i - 1].abs() } else { T::zero() };
            let right = if i + 1 < n { self.off[i].abs() } else { T::zero() };
            lo = lo.fmin(self.diag[i] - left - right);
            hi = hi.fmax(self.diag[i] + left + right);
        }
        (lo, hi)
    }

    /// Eigenvalue `index` (0 = lowest), bisected inside `[lo, hi]` to machine
    /// resolution. The interval must satisfy `count(lo) <= index < count(hi)`.
    pub fn eigenvalue_in(&self, index: usize, mut lo: T, mut hi: T) -> T {
        let half = T::lit(0.5);
        let eps = T::epsilon();
        for _ in 0..2000 {
            let mid = (lo + hi) * half;
            if mid <= lo || mid >= hi || hi - lo <= eps * (lo.abs().fmax(hi.abs())) {
                break;
            }
            if self.sturm_count(mid) > index {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        (lo + hi) * half
    }

    pub fn eigenvalue(&self, index: usize) -> T {
        let (lo, hi) = self.gershgorin();
        let pad = T::one() + (hi - lo) * T::epsilon();
        self.eigenvalue_in(index, lo - pad, hi + pad)
    }

    /// Eigenvector for a converged eigenvalue by inverse iteration, unit
    /// Euclidean norm.
    pub fn eigenvector(&self, lambda: T) -> Vec<T> {
        let n = self.order();
        let scale = {
            let (lo, hi) = self.gershgorin();
            lo.abs().fmax(hi.abs()).fmax(T::one())
        };
        let guard = T::epsilon() * scale;
        // shift a hair off the eigenvalue so the factorization stays finite
        let shift = lambda + guard;
        let mut y = vec![T::one(); n];
        for _ in 0..4 {
            y = self.solve_shifted(shift, &y, guard);
            let norm = y.iter().fold(T::zero(), |s, &v| s + v * v).sqrt();
            if !(norm > T::zero() && norm.is_finite()) {
                break;
            }
            for v in &mut y {
                *v = *v / norm;
            }
        }
        y
    }

    /// Thomas solve of `(A - shift I) x = rhs`; tiny pivots are replaced by `guard`.
    fn solve_shifted(&self, shift: T, rhs: &[T], guard: T) -> Vec<T> {
        let n = self.order();
        let mut c_prime = vec![T::zero(); n];
        let mut d_prime = vec![T::zero(); n];
        let mut pivot = self.diag[0] - shift;
        for i in 0..n {
            if i > 0 {
                pivot = self.diag[i] - shift - self.off[i - 1] * c_prime[i - 1];
            }
            if pivot.abs() < guard {
                pivot = if pivot < T::zero() { -guard } else { guard };
            }
            if i + 1 < n {
                c_prime[i] = self.off[i] / pivot;
            }
            let prev = if i > 0 { self.off[i - 1] * d_prime[i - 1] } else { T::zero() };
            d_prime[i] = (rhs[i] - prev) / pivot;
        }
        let mut x = vec![T::zero(); n];
        x[n - 1] = d_prime[n - 1];
        for i in (0..n - 1).rev() {
            x[i] = d_prime[i] - c_prime[i] * x[i + 1];
        }
        x
    }
}

/// Finite-difference Hamiltonian on the interior points of `grid`.
pub fn fd_hamiltonian<T: Real>(p: &MorsePotential<T>, grid: &Grid<T>) -> SymTridiagonal<T> {
    let h = grid.step();
    let t = p.hbar() * p.hbar() / (T::lit(2.0) * p.mass() * h * h);
    let interior = grid.len() - 2;
    let diag = (1..=interior).map(|i| t + t + p.evaluate(grid.x(i))).collect();
    let off = vec![-t; interior - 1];
    SymTridiagonal { diag, off }
}

/// The `k` lowest finite-difference eigenvalues, which must all be negative.
pub fn fd_reference_spectrum<T: Real>(
    p: &MorsePotential<T>,
    grid: &Grid<T>,
    k: usize,
) -> Result<Vec<T>> {
    if k == 0 {
        return Err(Error::InvalidParameter { name: "k", reason: "must be at least 1".into() });
    }
    let h = fd_hamiltonian(p, grid);
    let found = h.sturm_count(T::zero());
    if found < k {
        return Err(Error::GridTooCoarse { requested: k, found });
    }
    let (lo, _) = h.gershgorin();
    let lo = lo - T::one();
    Ok((0..k).map(|i| h.eigenvalue_in(i, lo, T::zero())).collect())
}

/// The `k` lowest eigenpairs, eigenvectors padded with the boundary zeros
/// and normalized like shooting eigenfunctions.
pub fn fd_reference_states<T: Real>(
    p: &MorsePotential<T>,
    grid: &Grid<T>,
    k: usize,
) -> Result<Vec<(T, GridWavefunction<T>)>> {
    let energies = fd_reference_spectrum(p, grid, k)?;
    let h = fd_hamiltonian(p, grid);
    energies
        .into_iter()
        .map(|e| {
            let v = h.eigenvector(e);
            let mut values = Vec::with_capacity(grid.len());
            values.push(T::zero());
            values.extend(v);
            values.push(T::zero());
            Ok((e, GridWavefunction::new(*grid, values)?.normalize()?))
        })
        .collect()
}
