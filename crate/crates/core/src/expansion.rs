//! Coefficients of `(1 - T)^r * H(T)` for the power-ideal series, the
//! binomial identity behind their sign pattern, and the closed-form depth.
//!
//! Multiplying the series of `m^s` in `n` variables by `(1 - T)^r`
//! produces coefficients with an explicit regime structure in the degree
//! `k`: zero below `s`, a single binomial at `k = s`, a corrected
//! binomial in the window `s < k < r + s`, and a plain binomial tail.
//! [`expanded_coefficient`] evaluates that structure as displayed;
//! [`expanded_coefficient_oracle`] recomputes the same number by direct
//! convolution against the series coefficients and knows nothing about
//! the regimes.
//!
//! The window formula rests on one identity with three faces,
//! [`lemma4_lhs`], [`lemma4_rhs8`], [`lemma4_rhs9`]; the first two agree
//! for every degree, the third is an equivalent resummation for `k >= s`.
//!
//! The sign pattern pins the depth of `m^s` at `ceil(n / (s+1))`
//! ([`hdepth_power_closed_form`]); the obstruction one level higher is
//! the explicit negative coefficient [`upper_bound_coefficient`].

use crate::catalog::{power_ideal_coefficient, PowerIdealParams};
use crate::poly::{binomial, Coefficient};

/// Degree-`k` coefficient slot of `(1 - T)^r H_{m^s}` with `0 < r < n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExpansionParams {
    pub n: u32,
    pub s: u32,
    pub r: u32,
    pub k: i64,
}

impl ExpansionParams {
    pub fn new(n: u32, s: u32, r: u32, k: i64) -> Self {
        assert!(s >= 1, "exponent must be positive, got s = {s}");
        assert!(
            0 < r && r < n,
            "expansion needs 0 < r < n, got r = {r}, n = {n}"
        );
        assert!(k >= 0, "degree must be nonnegative, got k = {k}");
        ExpansionParams { n, s, r, k }
    }
}

/// Coefficient of `T^k` in `(1 - T)^r H_{m^s}`, by regime:
///
/// * `k < s`: zero;
/// * `k = s`: `C(n+s-1, s)`;
/// * `s < k < r + s`: `C(n+k-1-r, k) + (-1)^{k-1} sum_{j=0}^{s-1} (-1)^j
///   C(r, k-j) C(n+j-1, j)`;
/// * `k >= r + s`: `C(n+k-1-r, k)`.
pub fn expanded_coefficient<T: Coefficient>(p: &ExpansionParams) -> T {
    let (n, s, r, k) = (i64::from(p.n), i64::from(p.s), i64::from(p.r), p.k);
    if k < s {
        return T::zero();
    }
    if k == s {
        return binomial(n + s - 1, s);
    }
    let tail: T = binomial(n + k - 1 - r, k);
    if k >= r + s {
        return tail;
    }
    let mut sum = T::zero();
    for j in 0..s {
        let term: T = binomial::<T>(r, k - j) * binomial::<T>(n + j - 1, j);
        if j % 2 == 0 {
            sum += &term;
        } else {
            sum -= &term;
        }
    }
    if k % 2 == 0 {
        tail - sum
    } else {
        tail + sum
    }
}

/// The same coefficient by direct convolution: `sum_i (-1)^i C(r, i)`
/// times the series coefficient in degree `k - i`.  Independent of the
/// regime formulas; used to check them.
pub fn expanded_coefficient_oracle<T: Coefficient>(p: &ExpansionParams) -> T {
    let ideal = PowerIdealParams::new(p.n, p.s);
    let mut sum = T::zero();
    for i in 0..=i64::from(p.r) {
        let term: T = binomial::<T>(i64::from(p.r), i) * power_ideal_coefficient(&ideal, p.k - i);
        if i % 2 == 0 {
            sum += &term;
        } else {
            sum -= &term;
        }
    }
    sum
}

fn lemma4_check(n: u32, s: u32, r: u32, k: i64) {
    assert!(
        n >= 1 && s >= 1 && r >= 1 && k >= 1,
        "identity needs positive n, s, r, k"
    );
    assert!(
        i64::from(n) + k - i64::from(r) > 0,
        "identity needs n + k - r - 1 >= 0, got n = {n}, r = {r}, k = {k}"
    );
}

/// `sum_{j=s}^{k} (-1)^{k-j} C(n+j-1, j) C(r, k-j)`; empty (zero) for `k < s`.
pub fn lemma4_lhs<T: Coefficient>(n: u32, s: u32, r: u32, k: i64) -> T {
    lemma4_check(n, s, r, k);
    let (n, r) = (i64::from(n), i64::from(r));
    let mut sum = T::zero();
    for j in i64::from(s)..=k {
        let term: T = binomial::<T>(n + j - 1, j) * binomial::<T>(r, k - j);
        if (k - j) % 2 == 0 {
            sum += &term;
        } else {
            sum -= &term;
        }
    }
    sum
}

/// `C(n+k-r-1, k) + (-1)^{k-1} sum_{j=0}^{s-1} (-1)^j C(r, k-j) C(n+j-1, j)`.
/// Equals [`lemma4_lhs`] for every degree `k >= 1`.
pub fn lemma4_rhs8<T: Coefficient>(n: u32, s: u32, r: u32, k: i64) -> T {
    lemma4_check(n, s, r, k);
    let (n, s, r) = (i64::from(n), i64::from(s), i64::from(r));
    let mut sum = T::zero();
    for j in 0..s {
        let term: T = binomial::<T>(r, k - j) * binomial::<T>(n + j - 1, j);
        if j % 2 == 0 {
            sum += &term;
        } else {
            sum -= &term;
        }
    }
    let head: T = binomial(n + k - r - 1, k);
    if k % 2 == 0 {
        head - sum
    } else {
        head + sum
    }
}

/// `C(n+k-r-1, k) + (-1)^{k+s} sum_{t=1}^{r} C(r-t, k-s) C(n-t+s-1, s-1)`.
/// Equals [`lemma4_lhs`] for `k >= s`; below `s` the resummation does not
/// apply and the two sides may differ.
pub fn lemma4_rhs9<T: Coefficient>(n: u32, s: u32, r: u32, k: i64) -> T {
    lemma4_check(n, s, r, k);
    let (n, s, r) = (i64::from(n), i64::from(s), i64::from(r));
    let mut sum = T::zero();
    for t in 1..=r {
        let front: T = binomial(r - t, k - s);
        // For t >= n+s the second factor leaves the binomial domain, but
        // only where the first vanishes (k >= r-n+1 forces k-s > r-t
        // there), so the term is zero.
        if front.is_zero() {
            continue;
        }
        sum += &(front * binomial::<T>(n - t + s - 1, s - 1));
    }
    let head: T = binomial(n + k - r - 1, k);
    if (k + s) % 2 == 0 {
        head + sum
    } else {
        head - sum
    }
}

/// Hilbert depth of `m^s` in `n` variables: `ceil(n / (s+1))`.
pub fn hdepth_power_closed_form(p: &PowerIdealParams) -> u32 {
    (p.n + p.s) / (p.s + 1)
}

/// Coefficient of `T^{s+1}` in `(1 - T)^q H_{m^s}`:
/// `C(n+s, s+1) - q C(n+s-1, s)`.  Negative exactly when
/// `q > ceil(n / (s+1))`, which is the upper-bound half of the depth
/// formula.
pub fn upper_bound_coefficient<T: Coefficient>(p: &PowerIdealParams, q: u32) -> T {
    let (n, s) = (i64::from(p.n), i64::from(p.s));
    let head: T = binomial(n + s, s + 1);
    let step: T = binomial(n + s - 1, s);
    head - step * T::from_u32(q).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Int;

    fn at(n: u32, s: u32, r: u32, k: i64) -> Int {
        expanded_coefficient::<Int>(&ExpansionParams::new(n, s, r, k))
    }

    fn oracle(n: u32, s: u32, r: u32, k: i64) -> Int {
        expanded_coefficient_oracle::<Int>(&ExpansionParams::new(n, s, r, k))
    }

    #[test]
    fn regimes_for_seven_variables_squared() {
        assert_eq!(at(7, 2, 3, 0), Int::from(0));
        assert_eq!(at(7, 2, 3, 1), Int::from(0));
        assert_eq!(at(7, 2, 3, 2), Int::from(28));
        assert_eq!(at(7, 2, 3, 3), Int::from(0));
        assert_eq!(at(7, 2, 3, 4), Int::from(42));
        // Tail regime starts at k = r + s = 5: C(8, 5).
        assert_eq!(at(7, 2, 3, 5), Int::from(56));
        assert_eq!(at(7, 2, 3, 6), Int::from(84));
    }

    #[test]
    fn oracle_convolution_values() {
        assert_eq!(oracle(7, 2, 3, 2), Int::from(28));
        // 84 - 3 * 28.
        assert_eq!(oracle(7, 2, 3, 3), Int::from(0));
        // 462 - 3*210 + 3*84 - 28.
        assert_eq!(oracle(7, 2, 3, 5), Int::from(56));
        assert_eq!(oracle(7, 2, 3, 1), Int::from(0));
    }

    #[test]
    fn regime_formula_matches_oracle_on_a_grid() {
        for n in 2..=8u32 {
            for s in 1..=4u32 {
                for r in 1..n {
                    for k in 0..=i64::from(r + s) + 6 {
                        assert_eq!(
                            at(n, s, r, k),
                            oracle(n, s, r, k),
                            "n={n} s={s} r={r} k={k}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn identity_faces_agree_on_frozen_points() {
        for (n, s, r, k) in [(4, 2, 2, 3i64), (7, 2, 3, 3), (5, 3, 2, 4), (6, 1, 4, 9)] {
            let lhs = lemma4_lhs::<Int>(n, s, r, k);
            let rhs8 = lemma4_rhs8::<Int>(n, s, r, k);
            let rhs9 = lemma4_rhs9::<Int>(n, s, r, k);
            assert_eq!(lhs, rhs8, "n={n} s={s} r={r} k={k}");
            assert_eq!(lhs, rhs9, "n={n} s={s} r={r} k={k}");
        }
        assert_eq!(lemma4_lhs::<Int>(4, 2, 2, 3), Int::from(0));
        assert_eq!(lemma4_lhs::<Int>(7, 2, 3, 3), Int::from(0));
    }

    #[test]
    fn below_s_only_the_first_resummation_applies() {
        // k < s: the sum side is empty and the first face still matches;
        // the second resummation is an identity only from k = s on.
        let lhs = lemma4_lhs::<Int>(2, 3, 1, 1);
        let rhs8 = lemma4_rhs8::<Int>(2, 3, 1, 1);
        let rhs9 = lemma4_rhs9::<Int>(2, 3, 1, 1);
        assert_eq!(lhs, Int::from(0));
        assert_eq!(rhs8, Int::from(0));
        assert_eq!(rhs9, Int::from(1));
    }

    #[test]
    #[should_panic(expected = "n + k - r - 1 >= 0")]
    fn identity_rejects_negative_binomial_top() {
        let _ = lemma4_lhs::<Int>(1, 1, 3, 1);
    }

    #[test]
    fn closed_form_depth_values() {
        assert_eq!(hdepth_power_closed_form(&PowerIdealParams::new(7, 2)), 3);
        assert_eq!(hdepth_power_closed_form(&PowerIdealParams::new(5, 1)), 3);
        for s in 1..10 {
            assert_eq!(hdepth_power_closed_form(&PowerIdealParams::new(1, s)), 1);
        }
        assert_eq!(hdepth_power_closed_form(&PowerIdealParams::new(120, 8)), 14);
        assert_eq!(hdepth_power_closed_form(&PowerIdealParams::new(9, 2)), 3);
        assert_eq!(hdepth_power_closed_form(&PowerIdealParams::new(10, 2)), 4);
    }

    #[test]
    fn upper_bound_witness_values() {
        let p = PowerIdealParams::new(7, 2);
        assert_eq!(upper_bound_coefficient::<Int>(&p, 3), Int::from(0));
        assert_eq!(upper_bound_coefficient::<Int>(&p, 4), Int::from(-28));
        assert_eq!(upper_bound_coefficient::<Int>(&p, 0), Int::from(84));
    }

    #[test]
    fn upper_bound_is_the_coefficient_above_s() {
        for n in 2..=9u32 {
            for s in 1..=4u32 {
                let p = PowerIdealParams::new(n, s);
                for q in 1..n {
                    assert_eq!(
                        upper_bound_coefficient::<Int>(&p, q),
                        oracle(n, s, q, i64::from(s) + 1),
                        "n={n} s={s} q={q}"
                    );
                }
            }
        }
    }

    #[test]
    fn depth_level_keeps_all_coefficients_nonnegative() {
        for n in 2..=10u32 {
            for s in 1..=4u32 {
                let p = PowerIdealParams::new(n, s);
                let r = hdepth_power_closed_form(&p);
                if r == 0 || r >= n {
                    continue;
                }
                for k in 0..=i64::from(r + s) + 10 {
                    assert!(at(n, s, r, k) >= Int::from(0), "n={n} s={s} r={r} k={k}");
                }
                assert!(
                    upper_bound_coefficient::<Int>(&p, r + 1) < Int::from(0),
                    "n={n} s={s}"
                );
            }
        }
    }
}
