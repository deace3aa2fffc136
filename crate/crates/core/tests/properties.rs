use morse_core::control::rotation_matrix;
use morse_core::*;
use proptest::prelude::*;
use std::f64::consts::PI;

fn system(c1: f64, c2: f64) -> TwoMode64 {
    let m1 = Mode64::analytic(1, &Morse64::with_depth(c1).unwrap(), 0.25).unwrap();
    let m2 = Mode64::analytic(2, &Morse64::with_depth(c2).unwrap(), 0.24).unwrap();
    TwoMode64::new(m1, m2).unwrap()
}

fn angle() -> impl Strategy<Value = f64> {
    -PI..PI
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn spectrum_increasing_inside_well(c in 0.2f64..60.0, alpha in 0.5f64..3.0) {
        let p = Morse64::new(c, alpha, 1.0, 1.0, 1.0).unwrap();
        let s = p.analytic_spectrum();
        prop_assert_eq!(s.len(), p.bound_state_count());
        for w in s.windows(2) {
            prop_assert!(w[0] < w[1]);
        }
        for (n, &e) in s.iter().enumerate() {
            prop_assert!(e > -c && e < 0.0);
            let a = p.anharmonic_spectrum(n) - c;
            // subtracting c cancels near threshold, so scale by the depth
            prop_assert!((a - e).abs() < 1e-12 * c);
        }
    }

    #[test]
    fn potential_minimum_at_equilibrium(c in 0.5f64..30.0, x in 0.0f64..12.0) {
        let p = Morse64::with_depth(c).unwrap();
        prop_assert!(p.evaluate(x) >= p.evaluate(1.0));
        prop_assert_eq!(p.evaluate(1.0), -c);
    }

    #[test]
    fn rotation_matrices_orthogonal(d in -20.0f64..20.0) {
        let r = rotation_matrix(d);
        for i in 0..2 {
            for j in 0..2 {
                let dot = r[0][i] * r[0][j] + r[1][i] * r[1][j];
                let want = if i == j { 1.0 } else { 0.0 };
                prop_assert!((dot - want).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn kronecker_unitary(d1 in angle(), d2 in angle()) {
        let u = RotationPlan { delta1: d1, delta2: d2 }.unitary();
        for i in 0..4 {
            for j in 0..4 {
                let dot: f64 = (0..4).map(|k| u[k][i] * u[k][j]).sum();
                let want = if i == j { 1.0 } else { 0.0 };
                prop_assert!((dot - want).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn plan_reaches_target(a in angle(), b in angle(), c in angle(), d in angle()) {
        let from = ProductState64::new(a, b);
        let to = ProductState64::new(c, d);
        let rot = plan_rotation(&from, &to);
        let got = apply_rotation(&rot, &from);
        let gap = |x: f64, y: f64| morse_core::scalar::wrap_angle(x - y).abs();
        prop_assert!(gap(got.theta1(), to.theta1()) < 1e-9);
        prop_assert!(gap(got.theta2(), to.theta2()) < 1e-9);
        let back = apply_rotation(&rot.inverse(), &got);
        prop_assert!(gap(back.theta1(), from.theta1()) < 1e-12);
        prop_assert!(gap(back.theta2(), from.theta2()) < 1e-12);
    }

    #[test]
    fn amplitudes_stay_normalized(a in angle(), b in angle()) {
        let s = ProductState64::new(a, b);
        let n: f64 = s.amplitudes().iter().map(|x| x * x).sum();
        prop_assert!((n - 1.0).abs() < 1e-12);
        let u = plan_rotation(&s, &ProductState64::new(0.3, -1.1)).unitary();
        let v = s.amplitudes();
        let w: Vec<f64> = (0..4).map(|i| (0..4).map(|k| u[i][k] * v[k]).sum()).collect();
        let target = ProductState64::new(0.3, -1.1).amplitudes();
        for i in 0..4 {
            prop_assert!((w[i] - target[i]).abs() < 1e-12);
        }
    }

    #[test]
    fn durations_inverse_in_amplitude(a in angle(), b in angle(), amp in 0.01f64..10.0) {
        let sys = system(10.0, 12.0);
        let rot = RotationPlan { delta1: a, delta2: b };
        let one = plan_pulses(&sys, &rot, amp).unwrap();
        let two = plan_pulses(&sys, &rot, 2.0 * amp).unwrap();
        prop_assert_eq!(one.pulses.len(), two.pulses.len());
        for (p, q) in one.pulses.iter().zip(&two.pulses) {
            prop_assert_eq!(p.duration, 2.0 * q.duration);
            prop_assert_eq!(p.carrier, q.carrier);
        }
    }

    #[test]
    fn level_set_round_trip(c1 in 5.0f64..14.0, c2 in 5.0f64..14.0, frac in 0.0f64..1.0) {
        let sys = system(c1, c2);
        let target = sys.min_energy() + frac * (sys.max_energy() - sys.min_energy());
        let curve = level_set(&sys, target, 64).unwrap();
        prop_assert!(curve.classification != Classification::Empty);
        for (a1, a2) in curve.samples() {
            prop_assert!(a1.abs() <= 1.0 && a2.abs() <= 1.0);
            prop_assert!(LevelSet64::residual(&sys, target, a1, a2).abs() <= 1e-9);
            let s = ProductState64::from_ground_coefficients(a1, a2);
            prop_assert!((energy_expectation(&sys, &s) - target).abs() <= 1e-9);
        }
        let full = matches!(curve.classification, Classification::FullEllipse | Classification::Point);
        prop_assert_eq!(full, full_ellipse_condition(&sys, target));
    }

    #[test]
    fn ellipses_nest(c1 in 5.0f64..14.0, c2 in 5.0f64..14.0, f1 in 0.0f64..1.0, f2 in 0.0f64..1.0) {
        let sys = system(c1, c2);
        let (lo, hi) = (f1.min(f2), f1.max(f2));
        prop_assume!(hi - lo > 1e-6);
        let t = |f: f64| sys.max_energy() - f * (sys.max_energy() - sys.min_energy());
        // smaller fraction sits closer to the top, so its ellipse is inside
        let inner = level_set(&sys, t(lo), 16).unwrap();
        let outer = level_set(&sys, t(hi), 16).unwrap();
        prop_assert!(inner.semi_axes.0 < outer.semi_axes.0);
        prop_assert!(inner.semi_axes.1 < outer.semi_axes.1);
    }

    #[test]
    fn outside_range_is_empty(c1 in 5.0f64..14.0, c2 in 5.0f64..14.0, d in 1e-6f64..5.0) {
        let sys = system(c1, c2);
        prop_assert_eq!(level_set(&sys, sys.max_energy() + d, 16).unwrap().classification, Classification::Empty);
        prop_assert_eq!(level_set(&sys, sys.min_energy() - d, 16).unwrap().classification, Classification::Empty);
    }

    #[test]
    fn normalize_idempotent_and_sign_free(k in 1.0f64..6.0, scale in 0.01f64..100.0, flip: bool) {
        let grid = Grid64::new(0.0, 3.0, 1e-2).unwrap();
        let values: Vec<f64> = grid.points()
            .map(|x| scale * if flip { -1.0 } else { 1.0 } * (k * x).sin() * (-x).exp())
            .collect();
        let w = Wavefunction64::new(grid, values.clone()).unwrap().normalize().unwrap();
        let again = w.normalize().unwrap();
        for (a, b) in w.values().iter().zip(again.values()) {
            prop_assert!((a - b).abs() < 1e-12);
        }
        let neg: Vec<f64> = values.iter().map(|v| -v).collect();
        let wn = Wavefunction64::new(grid, neg).unwrap().normalize().unwrap();
        prop_assert_eq!(wn.values(), w.values());
        prop_assert!((w.norm_squared() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn moment_symmetric(k1 in 1.0f64..6.0, k2 in 1.0f64..6.0, power in 0u32..3) {
        let grid = Grid64::new(0.0, 3.0, 1e-2).unwrap();
        let f = |k: f64| Wavefunction64::new(grid, grid.points().map(|x| (k * x).sin()).collect()).unwrap();
        let (a, b) = (f(k1), f(k2));
        prop_assert_eq!(moment(&a, &b, power).unwrap(), moment(&b, &a, power).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn node_count_monotone_in_energy(c in 2.0f64..16.0) {
        let p = Morse64::with_depth(c).unwrap();
        let grid = Grid64::standard();
        let mut last = 0;
        for i in 0..200 {
            let e = -c + (i as f64 + 0.5) / 200.0 * c;
            let t = integrate_trial(&p, e, &grid, 1e-6).unwrap();
            prop_assert!(t.node_count >= last, "c={} E={}", c, e);
            last = t.node_count;
        }
    }

    #[test]
    fn dipole_sign_reproducible(c in 8.0f64..14.0) {
        let p = Morse64::with_depth(c).unwrap();
        let opts = Options64::default();
        let a = shooting_dipole(&p, &opts).unwrap();
        let b = shooting_dipole(&p, &opts).unwrap();
        prop_assert_eq!(a.value.signum(), b.value.signum());
        prop_assert_eq!(a, b);
    }
}
