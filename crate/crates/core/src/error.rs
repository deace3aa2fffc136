use thiserror::Error;

/// Failures reported by the solver, observables, level-set and planning code.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("no bound state with {n} nodes below the dissociation limit")]
    NoSuchBoundState { n: usize },

    #[error("eigenvalue bisection did not converge in {iterations} iterations (bracket width {width:e})")]
    NoConvergence { iterations: usize, width: f64 },

    #[error("finite-difference grid supports only {found} bound eigenvalue(s), {requested} requested")]
    GridTooCoarse { requested: usize, found: usize },

    #[error("wavefunction is identically zero")]
    ZeroFunction,

    #[error("wavefunctions live on different grids")]
    GridMismatch,

    #[error("expected levels (0, 1), got ({lower}, {upper})")]
    LevelMismatch { lower: usize, upper: usize },

    #[error("coefficients ({a0}, {a1}) are not normalized: a0^2 + a1^2 = {norm}")]
    NotNormalized { a0: f64, a1: f64, norm: f64 },

    #[error(
        "mode {mode} has transition dipole {dipole:e}; the transition cannot be driven \
         (the well must be deep enough to couple to the field)"
    )]
    ZeroDipole { mode: u8, dipole: f64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
