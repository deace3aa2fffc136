//! Product rotations between two-mode states and the resonant pulses that
//! realize them.
//!
//! States are real, so each factor lives on a circle and a rotation
//! `R(d) = [[cos d, -sin d], [sin d, cos d]]` per mode reaches any target.
//! The full unitary is the Kronecker product `R(d1) x R(d2)`.
//!
//! Pulse model: ideal resonant square pulse in the rotating-wave
//! approximation. A pulse of area `pi` swaps `|0>` and `|1>`, i.e. turns the
//! mixing angle by `pi/2`, so `area = 2 |d|` and
//! `duration = area / (|dipole| * amplitude)`.

use crate::error::{Error, Result};
use crate::levelset::{ProductState, TwoModeSystem};
use crate::scalar::{wrap_angle, Real};

/// Dipoles below this magnitude cannot drive a transition.
pub const MIN_DIPOLE: f64 = 1e-6;

/// `theta = atan2(a1, a0)` for normalized real coefficients.
pub fn angles_of<T: Real>(a0: T, a1: T) -> Result<T> {
    let norm = a0 * a0 + a1 * a1;
    if !((norm - T::one()).abs() <= T::lit(1e-9)) {
        return Err(Error::NotNormalized {
            a0: a0.to_f64_lossy(),
            a1: a1.to_f64_lossy(),
            norm: norm.to_f64_lossy(),
        });
    }
    Ok(wrap_angle(a1.atan2(a0)))
}

/// 2x2 rotation by `delta`.
pub fn rotation_matrix<T: Real>(delta: T) -> [[T; 2]; 2] {
    let (s, c) = delta.sin_cos();
    [[c, -s], [s, c]]
}

/// Per-mode rotation angles; together they form `U = U1 x U2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotationPlan<T> {
    pub delta1: T,
    pub delta2: T,
}

impl<T: Real> RotationPlan<T> {
    pub fn identity() -> Self {
        Self { delta1: T::zero(), delta2: T::zero() }
    }

    pub fn delta(&self, label: u8) -> T {
        if label == 2 {
            self.delta2
        } else {
            self.delta1
        }
    }

    pub fn inverse(&self) -> Self {
        Self { delta1: wrap_angle(-self.delta1), delta2: wrap_angle(-self.delta2) }
    }

    pub fn factors(&self) -> ([[T; 2]; 2], [[T; 2]; 2]) {
        (rotation_matrix(self.delta1), rotation_matrix(self.delta2))
    }

    /// `U1 x U2` acting on amplitudes ordered `|00>, |01>, |10>, |11>`.
    pub fn unitary(&self) -> [[T; 4]; 4] {
        let (u1, u2) = self.factors();
        let mut u = [[T::zero(); 4]; 4];
        for (i, row) in u.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = u1[i / 2][j / 2] * u2[i % 2][j % 2];
            }
        }
        u
    }
}

/// Rotation taking `from` to `to`, each angle difference wrapped into `(-pi, pi]`.
pub fn plan_rotation<T: Real>(from: &ProductState<T>, to: &ProductState<T>) -> RotationPlan<T> {
    RotationPlan {
        delta1: wrap_angle(to.theta1() - from.theta1()),
        delta2: wrap_angle(to.theta2() - from.theta2()),
    }
}

pub fn apply_rotation<T: Real>(rot: &RotationPlan<T>, s: &ProductState<T>) -> ProductState<T> {
    ProductState::new(s.theta1() + rot.delta1, s.theta2() + rot.delta2)
}

/// One resonant pulse acting on a single mode.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Pulse<T> {
    pub mode: u8,
    /// `(E^1 - E^0) / hbar`.
    pub carrier: T,
    /// Signed rotation the pulse performs.
    pub rotation: T,
    /// `2 |rotation|`.
    pub area: T,
    pub amplitude: T,
    pub duration: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PulsePlan<T> {
    /// In mode order: mode 1 first.
    pub pulses: Vec<Pulse<T>>,
}

impl<T: Real> PulsePlan<T> {
    pub fn total_duration(&self) -> T {
        self.pulses.iter().fold(T::zero(), |acc, p| acc + p.duration)
    }
}

/// One pulse per mode with a nonzero rotation.
pub fn plan_pulses<T: Real>(sys: &TwoModeSystem<T>, rot: &RotationPlan<T>, amplitude: T) -> Result<PulsePlan<T>> {
    if !(amplitude > T::zero() && amplitude.is_finite()) {
        return Err(Error::InvalidParameter {
            name: "amplitude",
            reason: format!("must be finite and > 0, got {amplitude}"),
        });
    }
    let mut pulses = Vec::new();
    for label in [1u8, 2] {
        let delta = rot.delta(label);
        if delta == T::zero() {
            continue;
        }
        let mode = sys.mode(label);
        let dipole = mode.dipole.abs();
        if dipole < T::lit(MIN_DIPOLE) {
            return Err(Error::ZeroDipole { mode: label, dipole: dipole.to_f64_lossy() });
        }
        let area = T::lit(2.0) * delta.abs();
        pulses.push(Pulse {
            mode: label,
            carrier: mode.gap() / mode.hbar,
            rotation: delta,
            area,
            amplitude,
            duration: area / (dipole * amplitude),
        });
    }
    Ok(PulsePlan { pulses })
}
