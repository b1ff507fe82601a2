//! Exact decision of coefficientwise nonnegativity for `Q(T) / (1 - T)^m`.
//!
//! Multiplying a series by `1 / (1 - T)` replaces its coefficients with
//! their running prefix sums, so the expansion of `Q / (1 - T)^m` is the
//! `m`-fold iterated prefix sum of the coefficients of `Q`.  Beyond the
//! top degree `b` of `Q` the level-`m` values agree with a polynomial in
//! the distance `t` past `b` of degree at most `m - 1`, whose Newton
//! forward-difference coefficients sit on an antidiagonal of the prefix
//! table: `delta_h = c^(m-h) at degree b + h`.  That turns an infinite
//! coefficientwise question into a finite one:
//!
//! 1. scan the prefix table through degree `b + m` for a negative entry;
//! 2. if all `delta_h >= 0`, the tail is a nonnegative combination of
//!    binomials `C(t, h)` and the series is nonnegative from `b` on;
//! 3. otherwise decide the sign of the tail polynomial over all integers
//!    `t >= 0` exactly, using a Cauchy root bound in rational arithmetic.
//!
//! Every branch is exact; no floating point appears anywhere.

use num::rational::Ratio;
use num::{Signed, Zero};
use serde::{Serialize, Serializer};

use crate::poly::Coefficient;
use crate::series::RationalSeries;

/// Outcome of the nonnegativity decision, carrying a finite witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PositivityCertificate<T> {
    /// Every coefficient is nonnegative; degrees beyond `tail_bound` are
    /// covered by the tail argument, degrees up to it were scanned.
    Positive { tail_bound: i64 },
    /// `degree` is the first degree with a negative coefficient, and
    /// `value` is that coefficient.
    NegativeAt { degree: i64, value: T },
}

impl<T> PositivityCertificate<T> {
    pub fn is_positive(&self) -> bool {
        matches!(self, PositivityCertificate::Positive { .. })
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
enum CertificateRepr {
    #[serde(rename_all = "camelCase")]
    Positive { tail_bound: i64 },
    #[serde(rename_all = "camelCase")]
    NegativeAt { degree: i64, value: String },
}

// The witness coefficient crosses the JSON boundary as a decimal string,
// like every other arbitrary precision value.
impl<T: Coefficient> Serialize for PositivityCertificate<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            PositivityCertificate::Positive { tail_bound } => CertificateRepr::Positive {
                tail_bound: *tail_bound,
            },
            PositivityCertificate::NegativeAt { degree, value } => CertificateRepr::NegativeAt {
                degree: *degree,
                value: value.to_string(),
            },
        }
        .serialize(serializer)
    }
}

/// Decides whether every coefficient of the expansion of `series` is
/// nonnegative and produces the corresponding certificate.
pub fn check_positivity<T: Coefficient>(series: &RationalSeries<T>) -> PositivityCertificate<T> {
    let q = series.numerator();
    let Some((lo, b)) = q.support() else {
        // The zero series is vacuously nonnegative.
        return PositivityCertificate::Positive { tail_bound: 0 };
    };
    let m = series.denom_exponent() as usize;

    if m == 0 {
        for (i, c) in q.coeffs().iter().enumerate() {
            if c.is_negative() {
                return PositivityCertificate::NegativeAt {
                    degree: lo + i as i64,
                    value: c.clone(),
                };
            }
        }
        return PositivityCertificate::Positive { tail_bound: b };
    }

    // Column-by-column prefix table: after processing degree k, col[l]
    // holds the level-l prefix sum c^(l)_k.  Degrees run through b + m so
    // the scan covers every entry the tail argument does not.
    let mut col = vec![T::zero(); m + 1];
    let mut delta = vec![T::zero(); m];
    for k in lo..=b + m as i64 {
        col[0] = q.coeff(k);
        for l in 1..=m {
            let (lower, upper) = col.split_at_mut(l);
            upper[0] += &lower[l - 1];
        }
        if col[m].is_negative() {
            return PositivityCertificate::NegativeAt {
                degree: k,
                value: col[m].clone(),
            };
        }
        let h = k - b;
        if (0..m as i64).contains(&h) {
            delta[h as usize] = col[m - h as usize].clone();
        }
    }

    if delta.iter().all(|d| !d.is_negative()) {
        return PositivityCertificate::Positive { tail_bound: b };
    }
    decide_tail(&delta, b)
}

/// Decides nonnegativity of `p(t) = sum_h delta_h * C(t, h)` over all
/// integers `t >= 0`, reporting witnesses as series degrees `b + t`.
///
/// Called only when some `delta_h` is negative, so `p` is not constant.
pub(crate) fn decide_tail<T: Coefficient>(delta: &[T], b: i64) -> PositivityCertificate<T> {
    let deg = delta
        .iter()
        .rposition(|d| !d.is_zero())
        .expect("tail polynomial is nonzero here");
    debug_assert!(deg >= 1, "a negative delta forces degree >= 1");

    // Monomial coefficients of p over exact rationals, via the falling
    // factorials C(t, h) = t(t-1)...(t-h+1) / h!.
    let mut mono: Vec<Ratio<T>> = vec![Ratio::from_integer(T::zero()); deg + 1];
    let mut falling = vec![T::one()];
    let mut h_factorial = T::one();
    for (h, d) in delta.iter().enumerate().take(deg + 1) {
        if h > 0 {
            let mut next = vec![T::zero(); falling.len() + 1];
            for (i, c) in falling.iter().enumerate() {
                next[i + 1] += c;
                let mut s = c.clone();
                s *= &T::from_usize(h - 1).unwrap();
                next[i] -= &s;
            }
            falling = next;
            h_factorial *= T::from_usize(h).unwrap();
        }
        if !d.is_zero() {
            for (i, c) in falling.iter().enumerate() {
                let mut num = d.clone();
                num *= c;
                mono[i] = mono[i].clone() + Ratio::new(num, h_factorial.clone());
            }
        }
    }
    debug_assert!(!mono[deg].is_zero());

    // Cauchy bound: every real root of p lies in [-bound, bound].
    let lead = mono[deg].clone();
    let mut max_ratio = Ratio::from_integer(T::zero());
    for a in &mono[..deg] {
        let r = (a.clone() / lead.clone()).abs();
        if r > max_ratio {
            max_ratio = r;
        }
    }
    let bound = Ratio::from_integer(T::one()) + max_ratio;
    let t_max = bound
        .ceil()
        .to_integer()
        .to_i64()
        .expect("root bound exceeds practical enumeration range");
    let lead_positive = mono[deg].numer().is_positive();

    // Walk t = 0, 1, 2, ... with running forward differences: diffs[h]
    // holds the h-th difference of p at the current t, so stepping costs
    // additions only.  diffs[0] is p(t) itself.
    let mut diffs: Vec<T> = delta[..=deg].to_vec();
    let mut t = 0i64;
    loop {
        if diffs[0].is_negative() {
            return PositivityCertificate::NegativeAt {
                degree: b + t,
                value: diffs[0].clone(),
            };
        }
        if diffs.iter().all(|d| !d.is_negative()) {
            // All forward differences nonnegative: p stays nonnegative
            // from here on, and no earlier t was negative.
            return PositivityCertificate::Positive { tail_bound: b + t };
        }
        if t > t_max {
            // Beyond the root bound the sign is the leading sign; a
            // negative leading sign would have surfaced at diffs[0].
            assert!(lead_positive, "sign contradiction beyond the root bound");
            return PositivityCertificate::Positive {
                tail_bound: b + t_max,
            };
        }
        for h in 0..deg {
            let (cur, rest) = diffs.split_at_mut(h + 1);
            cur[h] += &rest[0];
        }
        t += 1;
    }
}
