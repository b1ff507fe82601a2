//! Closed-form Hilbert data for two module families: powers of the
//! maximal ideal and Koszul syzygy modules.
//!
//! For the ideal `m^s` in `n` variables the Hilbert series is
//! `Q / (1 - T)^n` with `Q = 1 - (1 - T)^n sum_{k<s} C(n+k-1, k) T^k`,
//! and the expansion coefficients are `C(n+k-1, k)` from degree `s` on.
//!
//! For the `u`-th Koszul syzygy module of `R / (X_1, ..., X_r)` the
//! Hilbert function in degree `k` has three closed forms (two Euler
//! characteristic reads and one direct sum over the Koszul strands) that
//! must agree everywhere; [`syzygy_lemma_params`] maps a syzygy point to
//! the binomial-identity parameters `(n, s, r, k)` that the agreement is
//! equivalent to.

use crate::poly::{binomial, Coefficient, LaurentPoly};
use crate::series::RationalSeries;

/// Power `s` of the maximal ideal in `n` variables, both positive.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PowerIdealParams {
    pub n: u32,
    pub s: u32,
}

impl PowerIdealParams {
    pub fn new(n: u32, s: u32) -> Self {
        assert!(
            n >= 1,
            "power ideal needs at least one variable, got n = {n}"
        );
        assert!(s >= 1, "power ideal needs a positive exponent, got s = {s}");
        PowerIdealParams { n, s }
    }
}

/// Degree-`k` slot of the `u`-th Koszul syzygy module of a quotient by
/// `r` of the `n` variables, with `1 <= u <= r <= n` and `k >= 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SyzygyParams {
    pub n: u32,
    pub r: u32,
    pub u: u32,
    pub k: i64,
}

impl SyzygyParams {
    pub fn new(n: u32, r: u32, u: u32, k: i64) -> Self {
        assert!(
            1 <= u && u <= r && r <= n,
            "syzygy params need 1 <= u <= r <= n, got u = {u}, r = {r}, n = {n}"
        );
        assert!(k >= 0, "syzygy degree must be nonnegative, got k = {k}");
        SyzygyParams { n, r, u, k }
    }
}

/// Hilbert series of `m^s`: numerator `1 - (1 - T)^n sum_{k<s} C(n+k-1, k) T^k`
/// over `(1 - T)^n`.  The numerator sums to 1 at `T = 1`.
pub fn power_ideal_series<T: Coefficient>(p: &PowerIdealParams) -> RationalSeries<T> {
    let below: Vec<T> = (0..i64::from(p.s))
        .map(|k| binomial(i64::from(p.n) + k - 1, k))
        .collect();
    let numerator = LaurentPoly::constant(T::one())
        .sub(&LaurentPoly::from_coeffs(0, below).mul_one_minus_t_pow(p.n));
    RationalSeries::new(numerator, p.n)
}

/// Expansion coefficient of the `m^s` series in degree `k`:
/// `C(n+k-1, k)` for `k >= s`, zero below the generation degree.
pub fn power_ideal_coefficient<T: Coefficient>(p: &PowerIdealParams, k: i64) -> T {
    if k >= i64::from(p.s) {
        binomial(i64::from(p.n) + k - 1, k)
    } else {
        T::zero()
    }
}

/// Syzygy Hilbert function read off the Koszul complex of all `n`
/// variables: `(-1)^u (C(n-r+k-1, n-r-1) - sum_{j=k-u+1}^{k} (-1)^{k-j}
/// C(r, k-j) C(n+j-1, j))`.  At `r = n` the first term is
/// `C(k-1, -1) = 0` by the zero convention.
pub fn syzygy_hilbert_right<T: Coefficient>(p: &SyzygyParams) -> T {
    let (n, r, u, k) = (i64::from(p.n), i64::from(p.r), i64::from(p.u), p.k);
    let mut sum = T::zero();
    // Terms with j < 0 vanish through C(n+j-1, j).
    for j in (k - u + 1).max(0)..=k {
        let term: T = binomial::<T>(r, k - j) * binomial::<T>(n + j - 1, j);
        if (k - j) % 2 == 0 {
            sum += &term;
        } else {
            sum -= &term;
        }
    }
    let mut value = binomial::<T>(n - r + k - 1, n - r - 1) - sum;
    if u % 2 != 0 {
        value = -value;
    }
    value
}

/// The same Hilbert function read off the Koszul complex of the `r`
/// quotiented variables: `(-1)^{k-u} sum_{j=0}^{k-u} (-1)^j C(r, k-j)
/// C(n+j-1, j)`.  Zero for `k < u` (empty range).
pub fn syzygy_hilbert_left<T: Coefficient>(p: &SyzygyParams) -> T {
    let (n, r, u, k) = (i64::from(p.n), i64::from(p.r), i64::from(p.u), p.k);
    let mut sum = T::zero();
    for j in 0..=(k - u) {
        let term: T = binomial::<T>(r, k - j) * binomial::<T>(n + j - 1, j);
        if j % 2 == 0 {
            sum += &term;
        } else {
            sum -= &term;
        }
    }
    if (k - u) % 2 != 0 {
        sum = -sum;
    }
    sum
}

/// The same Hilbert function from the strand-by-strand count:
/// `sum_{t=1}^{r} C(r-t, u-1) C(n-t+k-u, k-u)`.
pub fn syzygy_hilbert_closed<T: Coefficient>(p: &SyzygyParams) -> T {
    let (n, r, u, k) = (i64::from(p.n), i64::from(p.r), i64::from(p.u), p.k);
    let mut sum = T::zero();
    for t in 1..=r {
        sum += &(binomial::<T>(r - t, u - 1) * binomial::<T>(n - t + k - u, k - u));
    }
    sum
}

/// The substitution tying the syzygy grid to the binomial-identity grid:
/// a syzygy point `(n, r, u, k)` corresponds to identity parameters
/// `(n, s, r, k)` with `s = k - u + 1`.  `None` when `k < u`, where no
/// positive `s` exists (all three syzygy forms vanish there anyway).
pub fn syzygy_lemma_params(p: &SyzygyParams) -> Option<(u32, u32, u32, i64)> {
    let s = p.k - i64::from(p.u) + 1;
    if s < 1 {
        return None;
    }
    Some((p.n, u32::try_from(s).expect("s bounded by k"), p.r, p.k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::RationalSeries;
    use crate::Int;

    fn ideal(n: u32, s: u32) -> PowerIdealParams {
        PowerIdealParams::new(n, s)
    }

    fn syz(n: u32, r: u32, u: u32, k: i64) -> SyzygyParams {
        SyzygyParams::new(n, r, u, k)
    }

    #[test]
    fn maximal_ideal_in_two_variables() {
        let series: RationalSeries<Int> = power_ideal_series(&ideal(2, 1));
        assert_eq!(series.numerator().to_string(), "1:2,-1");
        assert_eq!(series.denom_exponent(), 2);
    }

    #[test]
    fn single_variable_power_is_a_shifted_free_module() {
        for s in 1..6 {
            let series: RationalSeries<Int> = power_ideal_series(&ideal(1, s));
            assert_eq!(series.numerator().to_string(), format!("{s}:1"));
        }
    }

    #[test]
    fn power_series_numerator_sums_to_one() {
        for n in 1..8 {
            for s in 1..6 {
                let series: RationalSeries<Int> = power_ideal_series(&ideal(n, s));
                assert_eq!(series.numerator().eval_one(), Int::from(1));
            }
        }
    }

    #[test]
    fn power_coefficient_closed_form() {
        assert_eq!(
            power_ideal_coefficient::<Int>(&ideal(4, 1), 1),
            Int::from(4)
        );
        assert_eq!(
            power_ideal_coefficient::<Int>(&ideal(4, 1), 0),
            Int::from(0)
        );
        assert_eq!(
            power_ideal_coefficient::<Int>(&ideal(7, 2), 3),
            Int::from(84)
        );
    }

    #[test]
    fn power_series_expansion_matches_coefficient_formula() {
        for n in 1..7 {
            for s in 1..5 {
                let p = ideal(n, s);
                let series: RationalSeries<Int> = power_ideal_series(&p);
                let prefix = series.expand(12);
                for k in 0..=12 {
                    assert_eq!(
                        prefix.coeff(k),
                        power_ideal_coefficient::<Int>(&p, k),
                        "n = {n}, s = {s}, k = {k}"
                    );
                }
            }
        }
    }

    #[test]
    fn seven_variables_squared_expansion() {
        let series: RationalSeries<Int> = power_ideal_series(&ideal(7, 2));
        let prefix = series.expand(3);
        assert_eq!(prefix.coeff(2), Int::from(28));
        assert_eq!(prefix.coeff(3), Int::from(84));
    }

    #[test]
    fn syzygy_forms_on_frozen_points() {
        // First syzygy of R/(X1, X2) in four variables: the ideal itself,
        // 2 generators in degree 1, 7 elements in degree 2.
        assert_eq!(syzygy_hilbert_right::<Int>(&syz(4, 2, 1, 1)), Int::from(2));
        assert_eq!(syzygy_hilbert_left::<Int>(&syz(4, 2, 1, 1)), Int::from(2));
        assert_eq!(syzygy_hilbert_closed::<Int>(&syz(4, 2, 1, 1)), Int::from(2));
        assert_eq!(syzygy_hilbert_right::<Int>(&syz(4, 2, 1, 2)), Int::from(7));
        assert_eq!(syzygy_hilbert_closed::<Int>(&syz(4, 2, 1, 2)), Int::from(7));
        // Top Koszul module is free of rank 1 generated in degree u.
        assert_eq!(syzygy_hilbert_right::<Int>(&syz(4, 2, 2, 2)), Int::from(1));
        assert_eq!(syzygy_hilbert_left::<Int>(&syz(4, 2, 2, 2)), Int::from(1));
    }

    #[test]
    fn syzygy_vanishes_below_generation_degree() {
        for u in 1..=3 {
            for k in 0..i64::from(u) {
                let p = syz(5, 3, u, k);
                assert_eq!(syzygy_hilbert_left::<Int>(&p), Int::from(0));
                assert_eq!(syzygy_hilbert_closed::<Int>(&p), Int::from(0));
            }
        }
    }

    #[test]
    fn syzygy_triple_agreement_on_a_grid() {
        for n in 1..=6u32 {
            for r in 1..n {
                for u in 1..=r {
                    for k in 0..=10i64 {
                        let p = syz(n, r, u, k);
                        let right = syzygy_hilbert_right::<Int>(&p);
                        let left = syzygy_hilbert_left::<Int>(&p);
                        let closed = syzygy_hilbert_closed::<Int>(&p);
                        assert_eq!(right, left, "n={n} r={r} u={u} k={k}");
                        assert_eq!(left, closed, "n={n} r={r} u={u} k={k}");
                    }
                }
            }
        }
    }

    #[test]
    fn quotient_by_all_variables_stays_total() {
        // r = n hits C(k-1, -1) in the right-hand form; the zero
        // convention keeps the function defined.
        let p = syz(3, 3, 1, 0);
        let _ = syzygy_hilbert_right::<Int>(&p);
        let _ = syzygy_hilbert_left::<Int>(&p);
        let _ = syzygy_hilbert_closed::<Int>(&p);
    }

    #[test]
    fn lemma_bridge_substitutes_s() {
        assert_eq!(syzygy_lemma_params(&syz(4, 2, 1, 3)), Some((4, 3, 2, 3)));
        assert_eq!(syzygy_lemma_params(&syz(4, 2, 2, 2)), Some((4, 1, 2, 2)));
        assert_eq!(syzygy_lemma_params(&syz(4, 2, 2, 1)), None);
    }

    #[test]
    #[should_panic(expected = "1 <= u <= r <= n")]
    fn syzygy_params_reject_u_above_r() {
        let _ = syz(4, 2, 3, 1);
    }
}
