//! Prime power checks and lifting real traces to the circle |omega| = sqrt(q).

use num_complex::Complex64;

use crate::error::{Error, Result};

/// True when q = p^k for a prime p and an exponent k >= 1.
pub fn is_prime_power(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut smallest = q;
    let mut d = 2u64;
    while d.saturating_mul(d) <= q {
        if q % d == 0 {
            smallest = d;
            break;
        }
        d += 1;
    }
    let mut n = q;
    while n % smallest == 0 {
        n /= smallest;
    }
    n == 1
}

/// A real trace x together with its lift omega: omega + conj(omega) = x and
/// |omega| = sqrt(q).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WeilPair {
    pub trace: f64,
    pub q: u64,
    pub omega: Complex64,
}

/// Lifts x with |x| <= 2 sqrt(q) to omega = x/2 + i sqrt(q - x^2/4), one of
/// the two roots of T^2 - xT + q.
///
/// omega + conj(omega) reproduces x exactly. Traces a few ulps past the
/// boundary, as produced by floating point square roots upstream, are
/// clamped onto it; anything further out is refused.
pub fn lift_to_weil(x: f64, q: u64) -> Result<WeilPair> {
    if !is_prime_power(q) {
        return Err(Error::NotPrimePower(q));
    }
    if !x.is_finite() {
        return Err(Error::Domain(format!("trace {x} is not finite")));
    }
    let bound = 2.0 * (q as f64).sqrt();
    let slack = 8.0 * bound * f64::EPSILON;
    if x.abs() > bound + slack {
        return Err(Error::TraceOutOfRange { x, bound });
    }
    let half = 0.5 * x;
    let disc = (q as f64 - half * half).max(0.0);
    Ok(WeilPair {
        trace: x,
        q,
        omega: Complex64::new(half, disc.sqrt()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_power_table() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 64, 121, 125] {
            assert!(is_prime_power(q), "{q} is a prime power");
        }
        for q in [0u64, 1, 6, 10, 12, 15, 36, 100, 1000] {
            assert!(!is_prime_power(q), "{q} is not a prime power");
        }
    }

    #[test]
    fn lift_of_zero_trace_is_pure_imaginary() {
        let pair = lift_to_weil(0.0, 2).unwrap();
        assert_eq!(pair.omega.re, 0.0);
        assert_eq!(pair.omega.im, 2f64.sqrt());
        assert!((pair.omega.norm_sqr() - 2.0).abs() < 1e-15);
    }

    #[test]
    fn lift_of_unit_trace_matches_closed_form() {
        let pair = lift_to_weil(1.0, 2).unwrap();
        assert_eq!(pair.omega.re, 0.5);
        assert!((pair.omega.im - 7f64.sqrt() / 2.0).abs() < 1e-15);
        assert!((pair.omega.norm_sqr() - 2.0).abs() < 1e-15);
    }

    #[test]
    fn boundary_trace_lifts_to_a_real_point() {
        let x = 2.0 * 2f64.sqrt();
        let pair = lift_to_weil(x, 2).unwrap();
        assert_eq!(pair.omega.im, 0.0);
        assert_eq!(2.0 * pair.omega.re, x);
    }

    #[test]
    fn trace_recombination_is_exact() {
        for &x in &[0.25, -1.75, 2.5, -2.0 * 2f64.sqrt(), 1e-8] {
            let pair = lift_to_weil(x, 2).unwrap();
            assert_eq!(pair.omega.re + pair.omega.re, x);
        }
    }

    #[test]
    fn rejects_traces_outside_the_segment() {
        assert!(matches!(
            lift_to_weil(3.0, 2),
            Err(Error::TraceOutOfRange { .. })
        ));
        assert!(matches!(
            lift_to_weil(-2.9, 2),
            Err(Error::TraceOutOfRange { .. })
        ));
        assert!(lift_to_weil(f64::NAN, 2).is_err());
        assert!(matches!(lift_to_weil(0.0, 6), Err(Error::NotPrimePower(6))));
    }
}
