use crate::error::{Error, Result};
use crate::morse::MorsePotential;
use crate::scalar::Real;

/// Uniform integration grid `x_i = x_min + i h`, `i = 0 .. n_points`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid<T> {
    x_min: T,
    x_max: T,
    step: T,
    n_points: usize,
}

pub const MIN_GRID_POINTS: usize = 16;

impl<T: Real> Grid<T> {
    pub fn new(x_min: T, x_max: T, step: T) -> Result<Self> {
        if !(x_min.is_finite() && x_max.is_finite() && step.is_finite()) {
            return Err(Error::InvalidGrid("non-finite bounds or step".into()));
        }
        if x_min < T::zero() {
            return Err(Error::InvalidGrid(format!("x_min = {x_min} is negative")));
        }
        if x_max <= x_min {
            return Err(Error::InvalidGrid(format!("x_max = {x_max} must exceed x_min = {x_min}")));
        }
        if step <= T::zero() {
            return Err(Error::InvalidGrid(format!("step = {step} must be positive")));
        }
        let intervals = ((x_max - x_min) / step).round();
        let n_points = intervals
            .to_usize()
            .and_then(|k| k.checked_add(1))
            .ok_or_else(|| Error::InvalidGrid("too many points".into()))?;
        if n_points < MIN_GRID_POINTS {
            return Err(Error::InvalidGrid(format!(
                "{n_points} points, at least {MIN_GRID_POINTS} required"
            )));
        }
        Ok(Self { x_min, x_max, step, n_points })
    }

    /// `[0, 12]` with `h = 1e-3`.
    pub fn standard() -> Self {
        Self::new(T::zero(), T::lit(12.0), T::lit(1e-3)).expect("standard grid is valid")
    }

    /// Grid on `[0, x0 + max(10, 8 / kappa)]` where `kappa = sqrt(2 m |E_n|) / hbar`
    /// uses the closed-form estimate of level `n`. Falls back to the highest
    /// bound level when `n` is not bound, and to `x0 + 10` when none is.
    pub fn adaptive(p: &MorsePotential<T>, n: usize, step: T) -> Result<Self> {
        Self::new(T::zero(), adaptive_extent(p, n), step)
    }

    pub fn x_min(&self) -> T {
        self.x_min
    }

    pub fn x_max(&self) -> T {
        self.x_max
    }

    pub fn step(&self) -> T {
        self.step
    }

    pub fn len(&self) -> usize {
        self.n_points
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn x(&self, i: usize) -> T {
        self.x_min + T::from_usize(i).unwrap() * self.step
    }

    pub fn points(&self) -> impl Iterator<Item = T> + '_ {
        (0..self.n_points).map(move |i| self.x(i))
    }

    /// Largest `|x|` on the grid.
    pub fn max_abs_x(&self) -> T {
        self.x_min.abs().fmax(self.x(self.n_points - 1).abs())
    }
}

pub fn adaptive_extent<T: Real>(p: &MorsePotential<T>, n: usize) -> T {
    let ten = T::lit(10.0);
    let energy = p
        .analytic_energy(n)
        .or_else(|| p.analytic_spectrum().last().copied());
    let reach = match energy {
        Some(e) => {
            let kappa = (T::lit(2.0) * p.mass() * e.abs()).sqrt() / p.hbar();
            ten.fmax(T::lit(8.0) / kappa)
        }
        None => ten,
    };
    p.x0() + reach
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_count() {
        let g = Grid::<f64>::standard();
        assert_eq!(g.len(), 12001);
        assert_eq!(g.x(0), 0.0);
        assert!((g.x(12000) - 12.0).abs() < 1e-12);
        let g = Grid::new(0.0, 1.0, 0.03).unwrap();
        assert_eq!(g.len(), 34);
    }

    #[test]
    fn invalid_grids() {
        assert!(Grid::new(0.0, 1.0, 0.1).is_err()); // 11 points
        assert!(Grid::new(1.0, 1.0, 0.01).is_err());
        assert!(Grid::new(-1.0, 1.0, 0.01).is_err());
        assert!(Grid::new(0.0, 1.0, 0.0).is_err());
        assert!(Grid::new(0.0, f64::NAN, 0.01).is_err());
    }

    #[test]
    fn adaptive_extents() {
        let p = MorsePotential::with_depth(10.0).unwrap();
        // ground state: 8 / kappa is small, floor of 10 applies
        assert_eq!(adaptive_extent(&p, 0), 11.0);
        // n = 1: kappa = sqrt(2 * 1.0836) = 1.472, 8 / kappa = 5.43
        assert_eq!(adaptive_extent(&p, 1), 11.0);
        let deep = MorsePotential::with_depth(14.0f64).unwrap();
        let e2 = deep.analytic_energy(2).unwrap();
        let expect = 1.0 + 8.0 / (2.0 * -e2).sqrt();
        assert!((adaptive_extent(&deep, 2) - expect).abs() < 1e-12);
        assert!(expect > 25.0);
        // unbound level falls back to the shallowest bound one
        assert_eq!(adaptive_extent(&deep, 9), expect);
        let none = MorsePotential::with_depth(0.1).unwrap();
        assert_eq!(adaptive_extent(&none, 0), 11.0);
    }
}
