//! Morse oscillator bound states and two-mode control planning.
//!
//! - [`morse`]: the potential, its second-order expansion and closed-form spectrum
//! - [`solver`]: RK4 shooting with node-count bracketing, plus a
//!   finite-difference oracle
//! - [`observables`]: overlaps and transition dipoles
//! - [`levelset`]: constant-energy ellipses of a two-mode product state
//! - [`control`]: product rotations and resonant pulse plans
//!
//! Every numerical type is generic over [`Real`]; the aliases below fix the
//! scalar to `f64` (and to binary128 with the `quad` feature).

// `!(x > 0)` style guards are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod control;
pub mod error;
pub mod levelset;
pub mod morse;
pub mod observables;
pub mod quadrature;
pub mod scalar;
pub mod solver;

pub use control::{angles_of, apply_rotation, plan_pulses, plan_rotation, Pulse, PulsePlan, RotationPlan};
pub use error::{Error, Result};
pub use levelset::{
    energy_expectation, full_ellipse_condition, level_set, Classification, LevelSetCurve, ModeSpectrum,
    ProductState, TwoModeSystem,
};
pub use morse::{AnharmonicApprox, MorsePotential};
pub use observables::{dipole_depth_sweep, fd_dipole, moment, shooting_dipole, transition_dipole, DepthSweepRow, DipoleResult};
pub use scalar::Real;
pub use solver::{
    all_bound_states, fd_reference_spectrum, fd_reference_states, find_bound_state, integrate_trial, BoundState,
    Bracket, EnergyLadder, Grid, GridWavefunction, Shooter, ShootingOptions, TrialSolution,
};

#[cfg(feature = "quad")]
pub use f128::f128 as Quad;

pub type Morse64 = MorsePotential<f64>;
pub type Grid64 = Grid<f64>;
pub type Options64 = ShootingOptions<f64>;
pub type BoundState64 = BoundState<f64>;
pub type Wavefunction64 = GridWavefunction<f64>;
pub type Dipole64 = DipoleResult<f64>;
pub type Mode64 = ModeSpectrum<f64>;
pub type TwoMode64 = TwoModeSystem<f64>;
pub type ProductState64 = ProductState<f64>;
pub type LevelSet64 = LevelSetCurve<f64>;
pub type Rotation64 = RotationPlan<f64>;
pub type PulsePlan64 = PulsePlan<f64>;

pub type Morse32 = MorsePotential<f32>;
pub type Grid32 = Grid<f32>;

#[cfg(feature = "quad")]
pub type MorseQuad = MorsePotential<Quad>;
#[cfg(feature = "quad")]
pub type GridQuad = Grid<Quad>;
#[cfg(feature = "quad")]
pub type OptionsQuad = ShootingOptions<Quad>;
