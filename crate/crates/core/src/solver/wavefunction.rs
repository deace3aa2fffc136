use crate::error::{Error, Result};
use crate::quadrature::simpson;
use crate::scalar::Real;

use super::grid::Grid;

/// Real samples of a wavefunction on a uniform grid.
#[derive(Debug, Clone, PartialEq)]
pub struct GridWavefunction<T> {
    grid: Grid<T>,
    values: Vec<T>,
    normalized: bool,
}

impl<T: Real> GridWavefunction<T> {
    /// Wraps raw samples; `values.len()` must match the grid.
    pub fn new(grid: Grid<T>, values: Vec<T>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::InvalidGrid(format!(
                "{} samples for a {}-point grid",
                values.len(),
                grid.len()
            )));
        }
        Ok(Self { grid, values, normalized: false })
    }

    pub fn grid(&self) -> &Grid<T> {
        &self.grid
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    /// Simpson estimate of the integral of `phi^2`.
    pub fn norm_squared(&self) -> T {
        let sq: Vec<T> = self.values.iter().map(|&v| v * v).collect();
        simpson(&sq, self.grid.step())
    }

    /// Interior sign changes; exact zeros are skipped.
    pub fn sign_changes(&self) -> usize {
        count_sign_changes(&self.values)
    }

    /// Unit Simpson norm with the first local extremum positive.
    pub fn normalize(&self) -> Result<Self> {
        let tiny = T::negligible();
        if self.values.iter().all(|v| v.abs() < tiny) {
            return Err(Error::ZeroFunction);
        }
        let norm = self.norm_squared().sqrt();
        if !(norm > T::zero() && norm.is_finite()) {
            return Err(Error::ZeroFunction);
        }
        let scale = if first_extremum(&self.values) < T::zero() {
            -norm.recip()
        } else {
            norm.recip()
        };
        Ok(Self {
            grid: self.grid,
            values: self.values.iter().map(|&v| v * scale).collect(),
            normalized: true,
        })
    }
}

pub(crate) fn count_sign_changes<T: Real>(values: &[T]) -> usize {
    let mut last_positive: Option<bool> = None;
    let mut changes = 0;
    for &v in values {
        if v == T::zero() {
            continue;
        }
        let positive = v > T::zero();
        if last_positive.is_some_and(|p| p != positive) {
            changes += 1;
        }
        last_positive = Some(positive);
    }
    changes
}

/// Value at the first local maximum of `|phi|`, scanning from the left.
fn first_extremum<T: Real>(values: &[T]) -> T {
    let tiny = T::negligible();
    for i in 0..values.len().saturating_sub(1) {
        let here = values[i].abs();
        if here >= tiny && values[i + 1].abs() < here {
            return values[i];
        }
    }
    values
        .iter()
        .rev()
        .copied()
        .find(|v| v.abs() >= tiny)
        .unwrap_or_else(T::zero)
}
