//! Floating-point digamma and log-gamma evaluation.
//!
//! Both functions shift the argument upward by the recurrence until it is
//! at least 10 and finish with an asymptotic tail whose first dropped term
//! is below 1e-15 there, so `f64` results are accurate to a few ulps over
//! the ranges the inequality checks use.

use num::traits::{Float, FloatConst, FromPrimitive};

/// ln(2 pi) / 2.
const HALF_LN_TWO_PI: f64 = 0.918_938_533_204_672_7;

/// Tail of psi(z) - ln z + 1/(2z) as a series in 1/z^2.
const DIGAMMA_TAIL: [f64; 6] = [
    -1.0 / 12.0,
    1.0 / 120.0,
    -1.0 / 252.0,
    1.0 / 240.0,
    -1.0 / 132.0,
    691.0 / 32760.0,
];

/// Tail of ln Gamma(z) minus the Stirling main term, as (1/z) times a
/// series in 1/z^2.
const LOG_GAMMA_TAIL: [f64; 6] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
];

fn lit<F: FromPrimitive>(v: f64) -> F {
    F::from_f64(v).expect("scalar holds an f64 literal")
}

/// Digamma function psi(x) for x > 0.
///
/// Panics on a non-positive argument.
pub fn digamma<F: Float + FromPrimitive>(x: F) -> F {
    assert!(x > F::zero(), "digamma needs a positive argument");
    let threshold = lit::<F>(10.0);
    let mut z = x;
    let mut shift = F::zero();
    while z < threshold {
        shift = shift + z.recip();
        z = z + F::one();
    }
    let w = (z * z).recip();
    let mut tail = F::zero();
    for &c in DIGAMMA_TAIL.iter().rev() {
        tail = tail * w + lit::<F>(c);
    }
    z.ln() - z.recip() * lit::<F>(0.5) + tail * w - shift
}

/// Natural log of the Gamma function for x > 0.
///
/// Panics on a non-positive argument.
pub fn log_gamma<F: Float + FromPrimitive>(x: F) -> F {
    assert!(x > F::zero(), "log_gamma needs a positive argument");
    let threshold = lit::<F>(10.0);
    let mut z = x;
    let mut shift = F::zero();
    while z < threshold {
        shift = shift + z.ln();
        z = z + F::one();
    }
    let w = (z * z).recip();
    let mut tail = F::zero();
    for &c in LOG_GAMMA_TAIL.iter().rev() {
        tail = tail * w + lit::<F>(c);
    }
    (z - lit::<F>(0.5)) * z.ln() - z + lit::<F>(HALF_LN_TWO_PI) + tail / z - shift
}

/// Reciprocal Gamma function 1/Gamma(x), defined for every real x.
///
/// Exactly zero at zero and the negative integers; elsewhere computed
/// through `log_gamma`, with the reflection formula below 1/2 so the
/// log never sees a small or negative argument.
pub fn recip_gamma<F: Float + FloatConst + FromPrimitive>(x: F) -> F {
    if x <= F::zero() && x == x.floor() {
        return F::zero();
    }
    if x >= lit::<F>(0.5) {
        (-log_gamma(x)).exp()
    } else {
        let pi = F::PI();
        (pi * x).sin() * log_gamma(F::one() - x).exp() / pi
    }
}

/// Digamma extended to negative non-integer arguments by reflection:
/// psi(x) = psi(1 - x) - pi * cot(pi x).
///
/// Panics at the poles (zero and the negative integers).
pub(crate) fn digamma_any<F: Float + FloatConst + FromPrimitive>(x: F) -> F {
    if x > F::zero() {
        return digamma(x);
    }
    assert!(
        x != x.floor(),
        "digamma has a pole at zero and the negative integers"
    );
    let pi = F::PI();
    digamma(F::one() - x) - pi * (pi * x).cos() / (pi * x).sin()
}

#[cfg(test)]
mod tests {
    use super::*;

    const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

    fn close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b} (tol {tol})");
    }

    #[test]
    fn digamma_at_small_integers_and_half() {
        close(digamma(1.0_f64), -EULER_GAMMA, 1e-12);
        close(digamma(2.0_f64), 1.0 - EULER_GAMMA, 1e-12);
        close(digamma(0.5_f64), -EULER_GAMMA - 2.0 * 2.0_f64.ln(), 1e-12);
    }

    #[test]
    fn digamma_at_quarter_offsets() {
        // psi(1/4) = -gamma - 3 ln 2 - pi/2, stepped up to 10.25 by the
        // recurrence psi(x + 1) = psi(x) + 1/x.
        let mut expected = -EULER_GAMMA - 3.0 * 2.0_f64.ln() - std::f64::consts::FRAC_PI_2;
        for i in 0..10 {
            expected += 1.0 / (i as f64 + 0.25);
        }
        close(digamma(10.25_f64), expected, 1e-12);
    }

    #[test]
    fn digamma_recurrence_holds_tightly() {
        for &x in &[0.001_f64, 0.37, 1.0, 2.5, 9.99, 10.01, 42.0] {
            close(
                digamma(x + 1.0) - digamma(x),
                1.0 / x,
                1e-11 * (1.0 + 1.0 / x),
            );
        }
    }

    #[test]
    fn digamma_difference_of_integers_is_harmonic() {
        // psi(5) - psi(3) = 1/3 + 1/4.
        close(digamma(5.0_f64) - digamma(3.0_f64), 7.0 / 12.0, 1e-13);
    }

    #[test]
    fn digamma_approaches_log_at_large_arguments() {
        close(digamma(1.0e6_f64), 1.0e6_f64.ln(), 1e-6);
    }

    #[test]
    fn digamma_is_increasing_and_concave_on_samples() {
        let xs = [0.3_f64, 0.9, 1.7, 3.2, 8.5, 20.0, 47.0];
        for pair in xs.windows(2) {
            assert!(digamma(pair[0]) < digamma(pair[1]));
        }
        for &x in &xs {
            let h = 0.125;
            let mid = digamma(x + h);
            assert!(mid > (digamma(x) + digamma(x + 2.0 * h)) / 2.0);
        }
    }

    #[test]
    #[should_panic(expected = "positive argument")]
    fn digamma_rejects_nonpositive_input() {
        digamma(0.0_f64);
    }

    #[test]
    fn log_gamma_reference_values() {
        close(log_gamma(0.5_f64), std::f64::consts::PI.sqrt().ln(), 1e-12);
        close(log_gamma(1.0_f64), 0.0, 1e-12);
        close(log_gamma(10.0_f64), 362880.0_f64.ln(), 1e-12);
        close(log_gamma(5.5_f64).exp(), 52.342_777_784_553_52, 1e-10);
    }

    #[test]
    fn recip_gamma_vanishes_at_poles_and_reflects() {
        assert_eq!(recip_gamma(0.0_f64), 0.0);
        assert_eq!(recip_gamma(-1.0_f64), 0.0);
        assert_eq!(recip_gamma(-7.0_f64), 0.0);
        close(recip_gamma(3.0_f64), 0.5, 1e-12);
        close(recip_gamma(1.0_f64), 1.0, 1e-12);
        // 1/Gamma(-1/2) = -1/(2 sqrt(pi)).
        close(
            recip_gamma(-0.5_f64),
            -1.0 / (2.0 * std::f64::consts::PI.sqrt()),
            1e-12,
        );
    }

    #[test]
    fn digamma_any_matches_reflection_closed_forms() {
        // psi(-1/2) = 2 - gamma - 2 ln 2 and psi(-3/2) = 8/3 - gamma - 2 ln 2.
        close(
            digamma_any(-0.5_f64),
            2.0 - EULER_GAMMA - 2.0 * 2.0_f64.ln(),
            1e-12,
        );
        close(
            digamma_any(-1.5_f64),
            8.0 / 3.0 - EULER_GAMMA - 2.0 * 2.0_f64.ln(),
            1e-12,
        );
        close(digamma_any(2.5_f64), digamma(2.5_f64), 0.0);
    }

    #[test]
    #[should_panic(expected = "pole")]
    fn digamma_any_rejects_poles() {
        digamma_any(-3.0_f64);
    }

    #[test]
    fn single_precision_instantiation_agrees_loosely() {
        let fine = digamma(4.6_f64);
        let coarse = digamma(4.6_f32);
        assert!((fine - f64::from(coarse)).abs() < 1e-5);
        let fine = log_gamma(4.6_f64);
        let coarse = log_gamma(4.6_f32);
        assert!((fine - f64::from(coarse)).abs() < 1e-4);
    }
}
