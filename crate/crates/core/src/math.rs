//! Float helpers routed through `libm` so the crate builds without `std`.

pub(crate) fn ln(x: f64) -> f64 {
    libm::log(x)
}

pub(crate) fn exp(x: f64) -> f64 {
    libm::exp(x)
}

pub(crate) fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

pub(crate) fn floor(x: f64) -> f64 {
    libm::floor(x)
}

pub(crate) fn abs(x: f64) -> f64 {
    libm::fabs(x)
}

/// log(sum(exp(terms))) without overflow; `terms` are natural logarithms.
/// Returns -inf for an empty slice.
pub(crate) fn log_sum_exp(terms: &[f64]) -> f64 {
    let mut max = f64::NEG_INFINITY;
    for &t in terms {
        if t > max {
            max = t;
        }
    }
    if max == f64::NEG_INFINITY {
        return f64::NEG_INFINITY;
    }
    let mut acc = 0.0;
    for &t in terms {
        acc += exp(t - max);
    }
    max + ln(acc)
}

/// Wilson 95% score interval for `successes` out of `trials`.
///
/// Stays inside [0, 1] even at the 0/trials endpoints, which a Wald interval
/// does not.
pub fn wilson_interval(successes: u64, trials: u64) -> (f64, f64) {
    assert!(trials >= 1, "wilson_interval needs at least one trial");
    assert!(successes <= trials);
    const Z: f64 = 1.959963984540054; // 97.5% normal quantile
    let n = trials as f64;
    let f = successes as f64 / n;
    let z2 = Z * Z;
    let denom = 1.0 + z2 / n;
    let center = (f + z2 / (2.0 * n)) / denom;
    let half = Z * sqrt(f * (1.0 - f) / n + z2 / (4.0 * n * n)) / denom;
    ((center - half).max(0.0), (center + half).min(1.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn log_sum_exp_matches_direct_sum() {
        let terms = [0.3f64, -1.2, 2.0];
        let direct: f64 = terms.iter().map(|&t| t.exp()).sum();
        assert!((log_sum_exp(&terms) - direct.ln()).abs() < 1e-12);
    }

    #[test]
    fn log_sum_exp_empty_is_neg_inf() {
        assert_eq!(log_sum_exp(&[]), f64::NEG_INFINITY);
    }

    #[test]
    fn wilson_endpoints_stay_in_unit_interval() {
        let (lo, hi) = wilson_interval(0, 10);
        assert!(lo >= 0.0 && hi <= 1.0 && lo <= hi);
        assert!(lo < 1e-12);
        let (lo, hi) = wilson_interval(10, 10);
        assert!(lo >= 0.0 && hi <= 1.0 && lo <= hi);
        assert!(hi > 1.0 - 1e-12);
    }

    #[test]
    fn wilson_contains_point_estimate() {
        for (s, t) in [(3u64, 7u64), (1, 100), (99, 100), (50, 100)] {
            let (lo, hi) = wilson_interval(s, t);
            let f = s as f64 / t as f64;
            assert!(lo <= f && f <= hi);
        }
    }
}
