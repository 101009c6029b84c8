//! Least-squares convergence-rate fit.
//!
//! A mesh sequence produces error samples `(h_i, err_i)`; on a log-log plot
//! a scheme of order `theta` lines up as
//!
//! ```text
//!   ln err = theta ln h + ln C
//! ```
//!
//! so the observed order is the slope of the regression line through
//! `(ln h_i, ln err_i)`.  That slope is what the acceptance gates bracket.

/// Least-squares slope of `ln err` against `ln h`.
///
/// Errors that reach exactly zero (an exact scheme) carry no rate
/// information and would break the logarithm, so the fit requires strictly
/// positive entries; it also needs at least two distinct mesh sizes.
///
/// # Panics
///
/// Panics when fewer than two samples are given, when `h` or `err` are not
/// strictly positive and finite, or when all `h` coincide.
pub fn fit_rate(samples: &[(f64, f64)]) -> f64 {
    assert!(
        samples.len() >= 2,
        "rate fit needs at least two (h, err) samples, got {}",
        samples.len()
    );
    for &(h, err) in samples {
        assert!(
            h > 0.0 && h.is_finite() && err > 0.0 && err.is_finite(),
            "rate fit needs positive finite samples, got ({h}, {err})"
        );
    }
    let n = samples.len() as f64;
    let (mut sx, mut sy, mut sxx, mut sxy) = (0.0, 0.0, 0.0, 0.0);
    for &(h, err) in samples {
        let (x, y) = (h.ln(), err.ln());
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    let denom = n * sxx - sx * sx;
    assert!(
        denom > 0.0,
        "rate fit needs at least two distinct mesh sizes"
    );
    (n * sxy - sx * sy) / denom
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn exact_power_laws_recover_their_exponent() {
        let first: Vec<(f64, f64)> = [0.2, 0.1, 0.05, 0.025]
            .iter()
            .map(|&h| (h, 3.0 * h))
            .collect();
        let second: Vec<(f64, f64)> = [0.2, 0.1, 0.05, 0.025]
            .iter()
            .map(|&h| (h, 0.7 * h * h))
            .collect();
        assert_relative_eq!(fit_rate(&first), 1.0, max_relative = 1e-12);
        assert_relative_eq!(fit_rate(&second), 2.0, max_relative = 1e-12);
    }

    #[test]
    fn two_point_fit_matches_the_hand_computed_slope() {
        // ln(0.05/0.01) / ln(0.2/0.1) = ln 5 / ln 2.
        let slope = fit_rate(&[(0.2, 0.05), (0.1, 0.01)]);
        assert_relative_eq!(slope, 5.0_f64.ln() / 2.0_f64.ln(), max_relative = 1e-12);
    }

    #[test]
    fn slope_is_invariant_under_error_scaling_and_sample_order() {
        let base = [(0.2, 0.04), (0.1, 0.011), (0.05, 0.0024)];
        let scaled: Vec<(f64, f64)> = base.iter().map(|&(h, e)| (h, 17.0 * e)).collect();
        let mut shuffled = base.to_vec();
        shuffled.swap(0, 2);
        let reference = fit_rate(&base);
        assert_relative_eq!(fit_rate(&scaled), reference, max_relative = 1e-12);
        assert_relative_eq!(fit_rate(&shuffled), reference, max_relative = 1e-12);
    }

    #[test]
    #[should_panic(expected = "at least two")]
    fn single_sample_is_rejected() {
        fit_rate(&[(0.1, 0.01)]);
    }

    #[test]
    #[should_panic(expected = "positive finite")]
    fn zero_error_is_rejected() {
        fit_rate(&[(0.2, 0.0), (0.1, 0.01)]);
    }
}
