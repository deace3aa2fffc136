//! Composite Simpson quadrature on uniformly spaced samples.

use crate::scalar::Real;

/// Integrates uniformly spaced samples with step `h`.
///
/// An even number of intervals uses the composite 1/3 rule throughout. An odd
/// number closes the last three intervals with the 3/8 rule. Two samples fall
/// back to the trapezoid rule.
pub fn simpson<T: Real>(values: &[T], h: T) -> T {
    let n = values.len();
    match n {
        0 | 1 => T::zero(),
        2 => h * (values[0] + values[1]) / T::lit(2.0),
        3 => h / T::lit(3.0) * (values[0] + T::lit(4.0) * values[1] + values[2]),
        _ => {
            let intervals = n - 1;
            if intervals.is_multiple_of(2) {
                simpson_even(values, h)
            } else {
                let split = n - 3;
                let tail = &values[split - 1..];
                let three_eighths = T::lit(3.0) * h / T::lit(8.0)
                    * (tail[0] + T::lit(3.0) * tail[1] + T::lit(3.0) * tail[2] + tail[3]);
                let head = if split > 1 { simpson_even(&values[..split], h) } else { T::zero() };
                head + three_eighths
            }
        }
    }
}

fn simpson_even<T: Real>(values: &[T], h: T) -> T {
    let n = values.len();
    debug_assert!(n % 2 == 1);
    let mut odd = T::zero();
    let mut even = T::zero();
    for (i, &v) in values.iter().enumerate().take(n - 1).skip(1) {
        if i % 2 == 1 {
            odd = odd + v;
        } else {
            even = even + v;
        }
    }
    h / T::lit(3.0) * (values[0] + values[n - 1] + T::lit(4.0) * odd + T::lit(2.0) * even)
}

/// Simpson estimate together with a Richardson error estimate from the
/// same rule applied to every second sample.
pub fn simpson_with_error<T: Real>(values: &[T], h: T) -> (T, T) {
    let fine = simpson(values, h);
    let coarse: Vec<T> = values.iter().step_by(2).copied().collect();
    if coarse.len() < 3 {
        return (fine, T::zero());
    }
    // the coarse grid drops the last sample when the interval count is odd
    let coarse_value = if (values.len() - 1).is_multiple_of(2) {
        simpson(&coarse, h + h)
    } else {
        simpson(&coarse, h + h) + simpson(&values[values.len() - 2..], h)
    };
    (fine, (fine - coarse_value).abs() / T::lit(15.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sampled(n: usize, a: f64, b: f64, f: impl Fn(f64) -> f64) -> (Vec<f64>, f64) {
        let h = (b - a) / (n - 1) as f64;
        ((0..n).map(|i| f(a + i as f64 * h)).collect(), h)
    }

    #[test]
    fn exact_for_cubics() {
        for n in [4, 5, 6, 7, 16, 17] {
            let (v, h) = sampled(n, -1.0, 2.0, |x| 3.0 * x * x * x - x * x + 2.0);
            // integral of 3x^3 - x^2 + 2 over [-1, 2]
            let exact = 0.75 * (16.0 - 1.0) - (8.0 + 1.0) / 3.0 + 6.0;
            assert!((simpson(&v, h) - exact).abs() < 1e-12, "n={n}");
        }
    }

    #[test]
    fn fourth_order_convergence() {
        let err = |n| {
            let (v, h) = sampled(n, 0.0, 1.0, f64::exp);
            (simpson(&v, h) - (1f64.exp() - 1.0)).abs()
        };
        let ratio = err(21) / err(41);
        assert!(ratio > 14.0 && ratio < 18.0, "{ratio}");
    }

    #[test]
    fn error_estimate_tracks_true_error() {
        let (v, h) = sampled(41, 0.0, 3.0, |x| (2.0 * x).sin());
        let (value, est) = simpson_with_error(&v, h);
        let truth = (1.0 - 6f64.cos()) / 2.0;
        let err = (value - truth).abs();
        assert!(est > 0.0 && err < 3.0 * est && est < 30.0 * err, "{err} {est}");
    }
}
