//! RK4 shooting with node-count bracketing.
//!
//! A trial energy `E` is integrated from `x_min` with `psi(x_min) = 0` and a
//! small positive slope. The number of sign changes of the trial equals the
//! number of Dirichlet eigenvalues on `[x_min, x_max]` below `E`, so a coarse
//! energy ladder brackets level `n` globally. Inside the bracket the sign of
//! `psi(x_max)` is bisected.

use crate::error::{Error, Result};
use crate::morse::MorsePotential;
use crate::scalar::Real;

use super::grid::Grid;
use super::wavefunction::{count_sign_changes, GridWavefunction};

/// Number of uniform steps in the energy ladder over `(-c, 0)`.
pub const LADDER_STEPS: usize = 400;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShootingOptions<T> {
    /// Bisection stops once the bracket is narrower than
    /// `tolerance * max(1, |E|)`.
    pub tolerance: T,
    pub max_iterations: usize,
    /// `psi'(x_min)`.
    pub seed: T,
    pub grid: Grid<T>,
}

impl<T: Real> ShootingOptions<T> {
    pub fn new(grid: Grid<T>) -> Self {
        Self {
            tolerance: T::lit(1e-9),
            max_iterations: 200,
            seed: T::lit(1e-6),
            grid,
        }
    }

    pub fn with_tolerance(mut self, tolerance: T) -> Self {
        self.tolerance = tolerance;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.tolerance > T::zero()) {
            return Err(Error::InvalidParameter {
                name: "tolerance",
                reason: format!("must be > 0, got {}", self.tolerance),
            });
        }
        if self.max_iterations == 0 {
            return Err(Error::InvalidParameter {
                name: "max_iterations",
                reason: "must be at least 1".into(),
            });
        }
        if !(self.seed.is_finite() && self.seed != T::zero()) {
            return Err(Error::InvalidParameter {
                name: "seed",
                reason: format!("must be finite and nonzero, got {}", self.seed),
            });
        }
        Ok(())
    }
}

impl<T: Real> Default for ShootingOptions<T> {
    fn default() -> Self {
        Self::new(Grid::standard())
    }
}

/// Final energy bracket of a bisection.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket<T> {
    /// Carries exactly `n` nodes.
    pub lo: T,
    /// Carries `n + 1` nodes or the opposite terminal sign.
    pub hi: T,
    /// End with the smaller terminal value.
    pub best: T,
}

/// Raw result of one shooting integration.
#[derive(Debug, Clone, PartialEq)]
pub struct TrialSolution<T> {
    /// Unnormalized `psi(x_i)`; clamped to the diverging sign after an overflow.
    pub samples: Vec<T>,
    pub node_count: usize,
    /// `psi(x_max)`.
    pub terminal_value: T,
    /// Index where `|psi|` first exceeded the overflow limit.
    pub early_stop: Option<usize>,
}

/// Eigenvalue, node count and normalized eigenfunction of one bound level.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundState<T> {
    pub n: usize,
    pub energy: T,
    pub wavefunction: GridWavefunction<T>,
}

struct Outcome<T> {
    nodes: usize,
    terminal: T,
    early_stop: Option<usize>,
}

/// Potential tabulated on the grid and its midpoints, reusable across trial
/// energies.
pub struct Shooter<T> {
    potential: MorsePotential<T>,
    grid: Grid<T>,
    /// `(2m/hbar^2) V(x_i)`
    nodes_q: Vec<T>,
    /// `(2m/hbar^2) V(x_i + h/2)`
    mid_q: Vec<T>,
}

impl<T: Real> Shooter<T> {
    pub fn new(potential: MorsePotential<T>, grid: Grid<T>) -> Self {
        let k = potential.kinetic_factor();
        let half = grid.step() / T::lit(2.0);
        let nodes_q = grid.points().map(|x| k * potential.evaluate(x)).collect();
        let mid_q = (0..grid.len() - 1)
            .map(|i| k * potential.evaluate(grid.x(i) + half))
            .collect();
        Self { potential, grid, nodes_q, mid_q }
    }

    pub fn grid(&self) -> &Grid<T> {
        &self.grid
    }

    pub fn potential(&self) -> &MorsePotential<T> {
        &self.potential
    }

    fn run(&self, energy: T, seed: T, mut sink: impl FnMut(usize, T)) -> Outcome<T> {
        let h = self.grid.step();
        let half_h = h / T::lit(2.0);
        let sixth_h = h / T::lit(6.0);
        let two = T::lit(2.0);
        let ke = self.potential.kinetic_factor() * energy;
        let limit = T::overflow_limit();
        let n = self.grid.len();

        let mut psi = T::zero();
        let mut dpsi = seed;
        let mut nodes = 0;
        let mut last_positive: Option<bool> = None;
        sink(0, psi);

        for i in 0..n - 1 {
            let q0 = self.nodes_q[i] - ke;
            let qm = self.mid_q[i] - ke;
            let q1 = self.nodes_q[i + 1] - ke;

            let k1p = dpsi;
            let k1d = q0 * psi;
            let k2p = dpsi + half_h * k1d;
            let k2d = qm * (psi + half_h * k1p);
            let k3p = dpsi + half_h * k2d;
            let k3d = qm * (psi + half_h * k2p);
            let k4p = dpsi + h * k3d;
            let k4d = q1 * (psi + h * k3p);

            psi = psi + sixth_h * (k1p + two * (k2p + k3p) + k4p);
            dpsi = dpsi + sixth_h * (k1d + two * (k2d + k3d) + k4d);

            if !(psi.abs() <= limit) {
                let clamped = if psi < T::zero() { -limit } else { limit };
                let positive = clamped > T::zero();
                if last_positive.is_some_and(|p| p != positive) {
                    nodes += 1;
                }
                for j in i + 1..n {
                    sink(j, clamped);
                }
                return Outcome { nodes, terminal: clamped, early_stop: Some(i + 1) };
            }
            if psi != T::zero() {
                let positive = psi > T::zero();
                if last_positive.is_some_and(|p| p != positive) {
                    nodes += 1;
                }
                last_positive = Some(positive);
            }
            sink(i + 1, psi);
        }
        Outcome { nodes, terminal: psi, early_stop: None }
    }

    /// Integrates one trial energy and keeps every sample.
    pub fn trial(&self, energy: T, seed: T) -> TrialSolution<T> {
        let mut samples = vec![T::zero(); self.grid.len()];
        let out = self.run(energy, seed, |i, v| samples[i] = v);
        TrialSolution {
            samples,
            node_count: out.nodes,
            terminal_value: out.terminal,
            early_stop: out.early_stop,
        }
    }

    fn probe(&self, energy: T, seed: T) -> Outcome<T> {
        self.run(energy, seed, |_, _| {})
    }

    /// Node counts on the uniform ladder from `-c (1 - 1e-6)` to `-1e-6`.
    pub fn ladder(&self, seed: T) -> EnergyLadder<T> {
        let c = self.potential.depth();
        let lo = -c * (T::one() - T::lit(1e-6));
        let hi = -T::lit(1e-6);
        let mut energies = Vec::with_capacity(LADDER_STEPS + 1);
        let mut nodes = Vec::with_capacity(LADDER_STEPS + 1);
        if lo < hi {
            let step = (hi - lo) / T::from_usize(LADDER_STEPS).unwrap();
            for j in 0..=LADDER_STEPS {
                let e = if j == LADDER_STEPS { hi } else { lo + T::from_usize(j).unwrap() * step };
                energies.push(e);
                nodes.push(self.probe(e, seed).nodes);
            }
        }
        EnergyLadder { floor: -c, energies, nodes }
    }

    /// Bisects level `n` inside `[lo, hi]`.
    ///
    /// The bracket is first tightened on node counts until exactly one
    /// eigenvalue remains (`nodes(lo) == n`, `nodes(hi) == n + 1`), then the
    /// sign of `psi(x_max)` is bisected.
    pub fn bisect(&self, n: usize, lo: T, hi: T, opts: &ShootingOptions<T>) -> Result<T> {
        self.bisect_bracket(n, lo, hi, opts).map(|b| b.best)
    }

    /// Like [`Shooter::bisect`] but also returns the final bracket. The lower
    /// end always carries exactly `n` nodes.
    pub fn bisect_bracket(
        &self,
        n: usize,
        lo: T,
        hi: T,
        opts: &ShootingOptions<T>,
    ) -> Result<Bracket<T>> {
        let (mut lo, mut hi) = (lo.fmin(hi), lo.fmax(hi));
        let half = T::lit(0.5);
        let mut lo_out = self.probe(lo, opts.seed);
        let mut hi_out = self.probe(hi, opts.seed);
        if lo_out.nodes > n || hi_out.nodes <= n {
            return Err(Error::InvalidParameter {
                name: "bracket",
                reason: format!(
                    "nodes ({}, {}) at the ends do not enclose level {n}",
                    lo_out.nodes, hi_out.nodes
                ),
            });
        }

        let mut iterations = 0;
        while lo_out.nodes != n || hi_out.nodes != n + 1 {
            iterations += 1;
            if iterations > opts.max_iterations {
                return Err(Error::NoConvergence {
                    iterations: opts.max_iterations,
                    width: (hi - lo).to_f64_lossy(),
                });
            }
            let mid = (lo + hi) * half;
            if mid <= lo || mid >= hi {
                break;
            }
            let out = self.probe(mid, opts.seed);
            if out.nodes <= n {
                lo = mid;
                lo_out = out;
            } else {
                hi = mid;
                hi_out = out;
            }
        }

        let lo_positive = lo_out.terminal > T::zero();
        let mut iterations = 0;
        loop {
            let mid = (lo + hi) * half;
            if hi - lo <= opts.tolerance * T::one().fmax(mid.abs()) || mid <= lo || mid >= hi {
                break;
            }
            iterations += 1;
            if iterations > opts.max_iterations {
                return Err(Error::NoConvergence {
                    iterations: opts.max_iterations,
                    width: (hi - lo).to_f64_lossy(),
                });
            }
            let out = self.probe(mid, opts.seed);
            if out.terminal == T::zero() {
                return Ok(Bracket { lo, hi, best: mid });
            }
            if (out.terminal > T::zero()) == lo_positive {
                lo = mid;
                lo_out = out;
            } else {
                hi = mid;
                hi_out = out;
            }
        }
        let best = if lo_out.terminal.abs() <= hi_out.terminal.abs() { lo } else { hi };
        Ok(Bracket { lo, hi, best })
    }

    /// Level `n` using a precomputed ladder.
    pub fn solve_level(
        &self,
        n: usize,
        ladder: &EnergyLadder<T>,
        opts: &ShootingOptions<T>,
    ) -> Result<BoundState<T>> {
        let (lo, hi) = ladder.bracket(n).ok_or(Error::NoSuchBoundState { n })?;
        let bracket = self.bisect_bracket(n, lo, hi, opts)?;
        // the lower end never has a spurious crossing next to the wall
        let trial = self.trial(bracket.lo, opts.seed);
        let energy = bracket.best;
        let mut values = trial.samples;
        tail_cut(&mut values);
        let wavefunction = GridWavefunction::new(self.grid, values)?.normalize()?;
        debug_assert_eq!(wavefunction.sign_changes(), n);
        Ok(BoundState { n, energy, wavefunction })
    }
}

/// Node counts sampled on a uniform energy ladder.
#[derive(Debug, Clone, PartialEq)]
pub struct EnergyLadder<T> {
    floor: T,
    energies: Vec<T>,
    nodes: Vec<usize>,
}

impl<T: Real> EnergyLadder<T> {
    pub fn energies(&self) -> &[T] {
        &self.energies
    }

    pub fn node_counts(&self) -> &[usize] {
        &self.nodes
    }

    /// Ladder interval where the node count first reaches `n + 1`.
    pub fn bracket(&self, n: usize) -> Option<(T, T)> {
        let j = self.nodes.iter().position(|&k| k > n)?;
        if j == 0 {
            // nothing is bound below the well floor
            Some((self.floor, self.energies[0]))
        } else {
            Some((self.energies[j - 1], self.energies[j]))
        }
    }
}

/// Zeroes the diverging tail of a shooting solution.
///
/// Walks back from the last sample while `|psi|` keeps shrinking and zeroes
/// everything from that final local minimum onward. Returns the cut index,
/// or `values.len()` when the tail does not grow.
pub fn tail_cut<T: Real>(values: &mut [T]) -> usize {
    let n = values.len();
    if n < 2 {
        return n;
    }
    let mut i = n - 1;
    while i > 0 && values[i - 1].abs() <= values[i].abs() {
        i -= 1;
    }
    if i == n - 1 {
        return n;
    }
    for v in &mut values[i..] {
        *v = T::zero();
    }
    i
}

/// One RK4 shooting pass at energy `energy` (`< 0`).
pub fn integrate_trial<T: Real>(
    p: &MorsePotential<T>,
    energy: T,
    grid: &Grid<T>,
    seed: T,
) -> Result<TrialSolution<T>> {
    if !(energy < T::zero()) {
        return Err(Error::InvalidParameter {
            name: "energy",
            reason: format!("trial energy must be negative, got {energy}"),
        });
    }
    Ok(Shooter::new(*p, *grid).trial(energy, seed))
}

/// Bound level `n` (node count `n`) by shooting.
pub fn find_bound_state<T: Real>(
    p: &MorsePotential<T>,
    n: usize,
    opts: &ShootingOptions<T>,
) -> Result<BoundState<T>> {
    opts.validate()?;
    let shooter = Shooter::new(*p, opts.grid);
    let ladder = shooter.ladder(opts.seed);
    shooter.solve_level(n, &ladder, opts)
}

/// Every bound level reachable on the grid, ascending in energy.
pub fn all_bound_states<T: Real>(
    p: &MorsePotential<T>,
    opts: &ShootingOptions<T>,
) -> Result<Vec<BoundState<T>>> {
    opts.validate()?;
    let shooter = Shooter::new(*p, opts.grid);
    let ladder = shooter.ladder(opts.seed);
    let mut states = Vec::new();
    for n in 0.. {
        match shooter.solve_level(n, &ladder, opts) {
            Ok(s) => states.push(s),
            Err(Error::NoSuchBoundState { .. }) => break,
            Err(e) => return Err(e),
        }
    }
    Ok(states)
}

/// Trial node count as seen after cutting the diverging tail.
pub fn nodes_before_tail<T: Real>(samples: &[T]) -> usize {
    let mut values = samples.to_vec();
    tail_cut(&mut values);
    count_sign_changes(&values)
}
