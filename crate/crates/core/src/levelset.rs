//! Equal-energy level sets of a two-mode product state.
//!
//! Each mode keeps two levels, `|psi_i> = a_i^0 |0_i> + a_i^1 |1_i>` with real
//! coefficients on the unit circle, and the energies add. Eliminating
//! `a_i^1` gives an ellipse in the `(a_1^0, a_2^0)` plane:
//!
//! ```text
//! (a_1^0)^2 dE_1 + (a_2^0)^2 dE_2 = E_1^1 + E_2^1 - <E>
//! ```
//!
//! with semi-axes `A_i = sqrt((E_1^1 + E_2^1 - <E>) / dE_i)`. Only the part
//! inside the square `|a_i^0| <= 1` is physical.

use crate::error::{Error, Result};
use crate::morse::MorsePotential;
use crate::observables::shooting_dipole;
use crate::scalar::{wrap_angle, Real};
use crate::solver::{Shooter, ShootingOptions};

/// Lowest two levels of one vibrational mode.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModeSpectrum<T> {
    pub label: u8,
    pub e0: T,
    pub e1: T,
    /// Signed transition dipole `<0|x|1>`.
    pub dipole: T,
    /// Unit constant used to turn the gap into a carrier frequency.
    pub hbar: T,
}

impl<T: Real> ModeSpectrum<T> {
    pub fn new(label: u8, e0: T, e1: T, dipole: T, hbar: T) -> Result<Self> {
        if !(e0 < e1 && e1 < T::zero()) {
            return Err(Error::InvalidParameter {
                name: "mode energies",
                reason: format!("need e0 < e1 < 0, got e0 = {e0}, e1 = {e1}"),
            });
        }
        if !(hbar > T::zero() && dipole.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "mode",
                reason: "hbar must be positive and the dipole finite".into(),
            });
        }
        Ok(Self { label, e0, e1, dipole, hbar })
    }

    /// Closed-form energies with a supplied dipole.
    pub fn analytic(label: u8, p: &MorsePotential<T>, dipole: T) -> Result<Self> {
        match (p.analytic_energy(0), p.analytic_energy(1)) {
            (Some(e0), Some(e1)) => Self::new(label, e0, e1, dipole, p.hbar()),
            _ => Err(Error::NoSuchBoundState { n: 1 }),
        }
    }

    /// Energies and dipole from the shooting solver.
    pub fn solved(label: u8, p: &MorsePotential<T>, opts: &ShootingOptions<T>) -> Result<Self> {
        let shooter = Shooter::new(*p, opts.grid);
        let ladder = shooter.ladder(opts.seed);
        let s0 = shooter.solve_level(0, &ladder, opts)?;
        let s1 = shooter.solve_level(1, &ladder, opts)?;
        let d = crate::observables::transition_dipole(&s0, &s1, p.depth())?;
        Self::new(label, s0.energy, s1.energy, d.value, p.hbar())
    }

    /// Closed-form energies, dipole from the shooting solver.
    pub fn analytic_with_solved_dipole(
        label: u8,
        p: &MorsePotential<T>,
        opts: &ShootingOptions<T>,
    ) -> Result<Self> {
        let d = shooting_dipole(p, opts)?;
        Self::analytic(label, p, d.value)
    }

    pub fn gap(&self) -> T {
        self.e1 - self.e0
    }
}

/// Two independent modes whose energies add.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoModeSystem<T> {
    pub mode1: ModeSpectrum<T>,
    pub mode2: ModeSpectrum<T>,
}

impl<T: Real> TwoModeSystem<T> {
    pub fn new(mode1: ModeSpectrum<T>, mode2: ModeSpectrum<T>) -> Result<Self> {
        if !(mode1.gap() > T::zero() && mode2.gap() > T::zero()) {
            return Err(Error::InvalidParameter {
                name: "gaps",
                reason: "both modes need a positive gap".into(),
            });
        }
        Ok(Self { mode1, mode2 })
    }

    pub fn mode(&self, label: u8) -> &ModeSpectrum<T> {
        if label == 2 {
            &self.mode2
        } else {
            &self.mode1
        }
    }

    /// `E_1^0 + E_2^0`.
    pub fn min_energy(&self) -> T {
        self.mode1.e0 + self.mode2.e0
    }

    /// `E_1^1 + E_2^1`.
    pub fn max_energy(&self) -> T {
        self.mode1.e1 + self.mode2.e1
    }
}

/// Product state `(cos t1, sin t1) x (cos t2, sin t2)`, angles in `(-pi, pi]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProductState<T> {
    theta1: T,
    theta2: T,
}

impl<T: Real> ProductState<T> {
    pub fn new(theta1: T, theta2: T) -> Self {
        Self { theta1: wrap_angle(theta1), theta2: wrap_angle(theta2) }
    }

    /// State with `a_i^0` given and `a_i^1 = +sqrt(1 - (a_i^0)^2)`.
    pub fn from_ground_coefficients(a1: T, a2: T) -> Self {
        let clamp = |a: T| a.fmax(-T::one()).fmin(T::one());
        Self::new(clamp(a1).acos(), clamp(a2).acos())
    }

    pub fn theta1(&self) -> T {
        self.theta1
    }

    pub fn theta2(&self) -> T {
        self.theta2
    }

    pub fn theta(&self, label: u8) -> T {
        if label == 2 {
            self.theta2
        } else {
            self.theta1
        }
    }

    /// `(a_i^0, a_i^1)` for mode `label`.
    pub fn coefficients(&self, label: u8) -> (T, T) {
        let t = self.theta(label);
        (t.cos(), t.sin())
    }

    /// Four amplitudes of the product in the order `|00>, |01>, |10>, |11>`.
    pub fn amplitudes(&self) -> [T; 4] {
        let (a0, a1) = self.coefficients(1);
        let (b0, b1) = self.coefficients(2);
        [a0 * b0, a0 * b1, a1 * b0, a1 * b1]
    }
}

/// `sum_i cos^2(t_i) E_i^0 + sin^2(t_i) E_i^1`.
pub fn energy_expectation<T: Real>(sys: &TwoModeSystem<T>, s: &ProductState<T>) -> T {
    let mode = |m: &ModeSpectrum<T>, t: T| {
        let c = t.cos();
        let s = t.sin();
        c * c * m.e0 + s * s * m.e1
    };
    mode(&sys.mode1, s.theta1) + mode(&sys.mode2, s.theta2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Classification {
    Empty,
    Point,
    FullEllipse,
    ClippedArcs,
}

impl Classification {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Empty => "Empty",
            Self::Point => "Point",
            Self::FullEllipse => "FullEllipse",
            Self::ClippedArcs => "ClippedArcs",
        }
    }
}

impl std::fmt::Display for Classification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Level set at one target energy.
#[derive(Debug, Clone, PartialEq)]
pub struct LevelSetCurve<T> {
    pub target: T,
    pub classification: Classification,
    /// Nominal semi-axes `(A_1, A_2)`; zero for `Point`, `NaN` for an `Empty`
    /// set above the maximum.
    pub semi_axes: (T, T),
    /// Connected pieces inside the unit square, each ordered by the ellipse
    /// parameter. A full ellipse is a single arc; `Point` is one arc with the
    /// origin.
    pub arcs: Vec<Vec<(T, T)>>,
}

impl<T: Real> LevelSetCurve<T> {
    /// All sample points in arc order.
    pub fn samples(&self) -> impl Iterator<Item = (T, T)> + '_ {
        self.arcs.iter().flatten().copied()
    }

    /// `|lhs - rhs|` of the ellipse equation at `(a1, a2)`.
    pub fn residual(sys: &TwoModeSystem<T>, target: T, a1: T, a2: T) -> T {
        let lhs = a1 * a1 * sys.mode1.gap() + a2 * a2 * sys.mode2.gap();
        (lhs - (sys.max_energy() - target)).abs()
    }
}

/// Both semi-axes `<= 1`, i.e. `E_1^0 + E_2^1 <= <E>` and `E_1^1 + E_2^0 <= <E>`.
pub fn full_ellipse_condition<T: Real>(sys: &TwoModeSystem<T>, target: T) -> bool {
    sys.mode1.e0 + sys.mode2.e1 <= target && sys.mode1.e1 + sys.mode2.e0 <= target
}

/// Classifies and samples the level set at `target`.
///
/// `n_samples` (at least 8) is the number of points on a full ellipse; for
/// clipped sets it is spread over the arcs in proportion to their parameter
/// length, with every arc endpoint included exactly.
pub fn level_set<T: Real>(sys: &TwoModeSystem<T>, target: T, n_samples: usize) -> Result<LevelSetCurve<T>> {
    if n_samples < 8 {
        return Err(Error::InvalidParameter {
            name: "n_samples",
            reason: format!("need at least 8, got {n_samples}"),
        });
    }
    if !target.is_finite() {
        return Err(Error::InvalidParameter { name: "target", reason: "must be finite".into() });
    }
    let rhs = sys.max_energy() - target;
    let scale = sys.max_energy().abs().fmax(sys.min_energy().abs()).fmax(T::one());
    let tie = T::lit(4.0) * T::epsilon() * scale;
    let empty = |axes| LevelSetCurve { target, classification: Classification::Empty, semi_axes: axes, arcs: vec![] };

    if rhs.abs() <= tie {
        return Ok(LevelSetCurve {
            target,
            classification: Classification::Point,
            semi_axes: (T::zero(), T::zero()),
            arcs: vec![vec![(T::zero(), T::zero())]],
        });
    }
    if rhs < T::zero() {
        return Ok(empty((T::nan(), T::nan())));
    }
    let (g1, g2) = (sys.mode1.gap(), sys.mode2.gap());
    let axes = ((rhs / g1).sqrt(), (rhs / g2).sqrt());
    if target < sys.min_energy() {
        return Ok(empty(axes));
    }
    // same predicate as `full_ellipse_condition`, so the two never disagree
    if full_ellipse_condition(sys, target) {
        let n = T::from_usize(n_samples).unwrap();
        let one = T::one();
        let arc = (0..n_samples)
            .map(|j| {
                let t = T::TAU() * T::from_usize(j).unwrap() / n;
                ((axes.0 * t.cos()).fmax(-one).fmin(one), (axes.1 * t.sin()).fmax(-one).fmin(one))
            })
            .collect();
        return Ok(LevelSetCurve {
            target,
            classification: Classification::FullEllipse,
            semi_axes: axes,
            arcs: vec![arc],
        });
    }
    Ok(LevelSetCurve {
        target,
        classification: Classification::ClippedArcs,
        semi_axes: axes,
        arcs: clipped_arcs(rhs, g1, g2, axes, n_samples),
    })
}

/// Arcs of the ellipse `a1 = A1 cos t, a2 = A2 sin t` inside the unit square.
fn clipped_arcs<T: Real>(rhs: T, g1: T, g2: T, axes: (T, T), n_samples: usize) -> Vec<Vec<(T, T)>> {
    let (a_1, a_2) = axes;
    let one = T::one();
    let tau = T::TAU();
    let slack = one + T::lit(64.0) * T::epsilon();
    let inside = |t: T| (a_1 * t.cos()).abs() <= slack && (a_2 * t.sin()).abs() <= slack;

    // parameter angles where the ellipse crosses a side of the square
    let mut cuts: Vec<T> = Vec::new();
    if a_1 > one {
        let t = (one / a_1).acos();
        cuts.extend([t, T::PI() - t, T::PI() + t, tau - t]);
    }
    if a_2 > one {
        let t = (one / a_2).asin();
        cuts.extend([t, T::PI() - t, T::PI() + t, tau - t]);
    }
    if cuts.is_empty() {
        // rounding put both axes back inside the square
        let n = T::from_usize(n_samples).unwrap();
        return vec![(0..n_samples)
            .map(|j| {
                let t = tau * T::from_usize(j).unwrap() / n;
                (a_1 * t.cos(), a_2 * t.sin())
            })
            .collect()];
    }
    cuts.sort_by(|a, b| a.partial_cmp(b).expect("finite angles"));
    cuts.dedup_by(|a, b| (*a - *b).abs() <= T::lit(64.0) * T::epsilon() * tau);

    let mut spans: Vec<(T, T)> = Vec::new();
    for (k, &start) in cuts.iter().enumerate() {
        let end = if k + 1 < cuts.len() { cuts[k + 1] } else { cuts[0] + tau };
        if inside((start + end) / T::lit(2.0)) {
            spans.push((start, end));
        }
    }
    // cuts touching the square without an arc on either side (corners at the
    // lowest energy)
    let touches: Vec<T> = cuts
        .iter()
        .copied()
        .filter(|&t| inside(t))
        .filter(|&t| {
            !spans.iter().any(|&(s, e)| (s - t).abs() <= T::epsilon() * tau || ((e - t) % tau).abs() <= T::epsilon() * tau)
        })
        .collect();

    let total = spans.iter().fold(T::zero(), |acc, &(s, e)| acc + (e - s));
    let budget = T::from_usize(n_samples).unwrap();
    let endpoint = |t: T| exact_point(rhs, g1, g2, a_1, a_2, t);

    let mut arcs: Vec<(T, Vec<(T, T)>)> = spans
        .into_iter()
        .map(|(start, end)| {
            let count = ((end - start) / total * budget).round().to_usize().unwrap_or(0).max(2);
            let last = T::from_usize(count - 1).unwrap();
            let points = (0..count)
                .map(|j| {
                    if j == 0 {
                        endpoint(start)
                    } else if j + 1 == count {
                        endpoint(end)
                    } else {
                        let t = start + (end - start) * T::from_usize(j).unwrap() / last;
                        ((a_1 * t.cos()).fmax(-one).fmin(one), (a_2 * t.sin()).fmax(-one).fmin(one))
                    }
                })
                .collect();
            (start, points)
        })
        .collect();
    arcs.extend(touches.into_iter().map(|t| (t, vec![endpoint(t)])));
    arcs.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("finite angles"));
    arcs.into_iter().map(|(_, points)| points).collect()
}

/// Point at parameter `t` that lies on a square side: the coordinate on the
/// side is set to exactly `+-1` and the other one solved from the ellipse.
fn exact_point<T: Real>(rhs: T, g1: T, g2: T, a_1: T, a_2: T, t: T) -> (T, T) {
    let one = T::one();
    let x = a_1 * t.cos();
    let y = a_2 * t.sin();
    let on_vertical = (x.abs() - one).abs() <= (y.abs() - one).abs();
    if on_vertical {
        let sx = one.copysign(x);
        let rest = ((rhs - g1) / g2).fmax(T::zero()).sqrt().fmin(one);
        (sx, rest.copysign(y))
    } else {
        let sy = one.copysign(y);
        let rest = ((rhs - g2) / g1).fmax(T::zero()).sqrt().fmin(one);
        (rest.copysign(x), sy)
    }
}
