//! Seeded random-series generators shared by the integration suites.

#![allow(dead_code)]

use hilbert_depth::{check_positivity, Int, LaurentPolynomial, Series};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Random Laurent polynomial with small nonnegative coefficients; may be
/// zero when every drawn coefficient is.
fn random_nonneg_poly(rng: &mut ChaCha8Rng) -> LaurentPolynomial {
    let offset = rng.gen_range(-3i64..=4);
    let len = rng.gen_range(1usize..=4);
    let coeffs = (0..len)
        .map(|_| Int::from(rng.gen_range(0i64..=3)))
        .collect();
    LaurentPolynomial::from_coeffs(offset, coeffs)
}

/// Random valid Hilbert series: a nonnegative combination
/// `sum_e Q_e (1 - T)^(n - e)` brought over the common denominator
/// `(1 - T)^n`.  Such a series is positive by construction, with no
/// control over where its depth lands.
pub fn random_positive_series(rng: &mut ChaCha8Rng) -> Series {
    let n = rng.gen_range(0u32..=6);
    let mut numerator = LaurentPolynomial::zero();
    for _ in 0..rng.gen_range(1u32..=3) {
        let level = rng.gen_range(0..=n);
        numerator = numerator.add(&random_nonneg_poly(rng).mul_one_minus_t_pow(n - level));
    }
    if numerator.is_zero() {
        numerator = LaurentPolynomial::constant(Int::from(1));
    }
    Series::new(numerator, n)
}

/// Random signed numerator kept only when the series expands
/// nonnegatively.  Finds positive series that are not an obvious
/// recombination, at the cost of frequent rejections.
pub fn random_filtered_series(rng: &mut ChaCha8Rng) -> Option<Series> {
    let n = rng.gen_range(1u32..=5);
    let offset = rng.gen_range(-3i64..=3);
    let len = rng.gen_range(1usize..=5);
    let coeffs: Vec<Int> = (0..len)
        .map(|_| Int::from(rng.gen_range(-2i64..=4)))
        .collect();
    let series = Series::new(LaurentPolynomial::from_coeffs(offset, coeffs), n);
    if series.numerator().is_zero() {
        return None;
    }
    check_positivity(&series).is_positive().then_some(series)
}

/// A deterministic batch mixing both generators: mostly recombinations,
/// with every third slot upgraded to a filtered signed numerator when one
/// turns up quickly.
pub fn random_positive_batch(rng: &mut ChaCha8Rng, count: usize) -> Vec<Series> {
    (0..count)
        .map(|i| {
            if i % 3 == 0 {
                for _ in 0..20 {
                    if let Some(series) = random_filtered_series(rng) {
                        return series;
                    }
                }
            }
            random_positive_series(rng)
        })
        .collect()
}
