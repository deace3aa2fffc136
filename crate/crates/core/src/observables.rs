//! Matrix elements between bound states on a shared grid.

use crate::error::{Error, Result};
use crate::morse::MorsePotential;
use crate::quadrature::{simpson, simpson_with_error};
use crate::scalar::Real;
use crate::solver::{fd_reference_states, Grid, GridWavefunction, Shooter, ShootingOptions};

/// Signed `<phi_0| x |phi_1>` for one well.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DipoleResult<T> {
    pub value: T,
    /// Depth `c` of the well it was computed for.
    pub depth: T,
    /// Richardson estimate from the same rule at half sampling.
    pub quadrature_error: T,
}

fn integrand<T: Real>(wa: &GridWavefunction<T>, wb: &GridWavefunction<T>, k: i32) -> Result<Vec<T>> {
    if wa.grid() != wb.grid() {
        return Err(Error::GridMismatch);
    }
    let grid = wa.grid();
    Ok(wa
        .values()
        .iter()
        .zip(wb.values())
        .enumerate()
        .map(|(i, (&a, &b))| a * b * grid.x(i).powi(k))
        .collect())
}

/// `integral phi_a(x) x^k phi_b(x) dx` by Simpson quadrature.
pub fn moment<T: Real>(wa: &GridWavefunction<T>, wb: &GridWavefunction<T>, k: u32) -> Result<T> {
    let f = integrand(wa, wb, k as i32)?;
    Ok(simpson(&f, wa.grid().step()))
}

/// `<phi_0| x |phi_1>` with a quadrature error estimate.
pub fn transition_dipole<T: Real>(
    s0: &crate::solver::BoundState<T>,
    s1: &crate::solver::BoundState<T>,
    depth: T,
) -> Result<DipoleResult<T>> {
    if s0.n != 0 || s1.n != 1 {
        return Err(Error::LevelMismatch { lower: s0.n, upper: s1.n });
    }
    dipole_between(&s0.wavefunction, &s1.wavefunction, depth)
}

fn dipole_between<T: Real>(
    w0: &GridWavefunction<T>,
    w1: &GridWavefunction<T>,
    depth: T,
) -> Result<DipoleResult<T>> {
    let f = integrand(w0, w1, 1)?;
    let (value, quadrature_error) = simpson_with_error(&f, w0.grid().step());
    Ok(DipoleResult { value, depth, quadrature_error })
}

/// Ground and first excited level solved by shooting on one grid, with
/// their dipole.
pub fn shooting_dipole<T: Real>(
    p: &MorsePotential<T>,
    opts: &ShootingOptions<T>,
) -> Result<DipoleResult<T>> {
    opts.validate()?;
    let shooter = Shooter::new(*p, opts.grid);
    let ladder = shooter.ladder(opts.seed);
    let s0 = shooter.solve_level(0, &ladder, opts)?;
    let s1 = shooter.solve_level(1, &ladder, opts)?;
    transition_dipole(&s0, &s1, p.depth())
}

/// The same integral over finite-difference eigenvectors.
pub fn fd_dipole<T: Real>(p: &MorsePotential<T>, grid: &Grid<T>) -> Result<DipoleResult<T>> {
    let states = fd_reference_states(p, grid, 2)?;
    dipole_between(&states[0].1, &states[1].1, p.depth())
}

/// One depth of a dipole sweep: shooting and finite-difference results side
/// by side, each possibly failing on its own.
#[derive(Debug, Clone, PartialEq)]
pub struct DepthSweepRow<T> {
    pub depth: T,
    pub x_max: T,
    pub shooting: Result<DipoleResult<T>>,
    pub finite_difference: Result<DipoleResult<T>>,
}

/// Dipole versus depth on a fixed grid. Running it once with a tight
/// domain and once with a wide one shows how strongly the small-depth
/// values depend on the truncation.
pub fn dipole_depth_sweep<T: Real>(
    base: &MorsePotential<T>,
    depths: &[T],
    opts: &ShootingOptions<T>,
) -> Vec<DepthSweepRow<T>> {
    depths
        .iter()
        .map(|&c| match base.with_depth_changed(c) {
            Ok(p) => DepthSweepRow {
                depth: c,
                x_max: opts.grid.x_max(),
                shooting: shooting_dipole(&p, opts),
                finite_difference: fd_dipole(&p, &opts.grid),
            },
            Err(e) => DepthSweepRow {
                depth: c,
                x_max: opts.grid.x_max(),
                shooting: Err(e.clone()),
                finite_difference: Err(e),
            },
        })
        .collect()
}
