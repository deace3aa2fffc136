//! Bound states of the one-dimensional Schrödinger equation in a Morse well.
//!
//! [`shooting`] is the production path; [`fd`] is an independent
//! finite-difference oracle over the same Dirichlet problem.

pub mod fd;
pub mod grid;
pub mod shooting;
pub mod wavefunction;

pub use fd::{fd_hamiltonian, fd_reference_spectrum, fd_reference_states, SymTridiagonal};
pub use grid::{adaptive_extent, Grid};
pub use shooting::{
    all_bound_states, find_bound_state, integrate_trial, BoundState, Bracket, EnergyLadder, Shooter,
    ShootingOptions, TrialSolution,
};
pub use wavefunction::GridWavefunction;
