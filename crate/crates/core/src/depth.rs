//! Hilbert depth of a series `Q(T) / (1 - T)^n` and witness decompositions.
//!
//! The depth can be read off two ways, and the two must agree:
//!
//! * `n - q` for the least `q` such that `Q / (1 - T)^q` is nonnegative
//!   (the numerator route, [`hdepth_via_numerator`]);
//! * the largest `p` such that `(1 - T)^p * Q / (1 - T)^n` is nonnegative
//!   (the multiplication route, [`hdepth_via_multiplication`]).
//!
//! Nonnegativity at exponent `q` implies it at `q + 1` (prefix sums of a
//! nonnegative sequence are nonnegative), so both searches are binary
//! searches over a monotone predicate.
//!
//! [`decompose`] turns the depth `d` into an explicit witness: a sum
//! `sum_e Q_e / (1 - T)^e` over levels `d <= e <= n` with nonnegative
//! numerators that recombines exactly to the input.  It works greedily
//! from level `n` down, at each level splitting off the full multiplicity
//! `sigma = N(1)` as a single monomial `sigma * T^j` placed at the
//! smallest degree `j` that keeps the remainder decomposable.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::poly::{binomial, Coefficient, LaurentPoly};
use crate::positivity::{check_positivity, decide_tail, PositivityCertificate};
use crate::series::RationalSeries;

/// Depth value together with the two certificates that pin it down:
/// nonnegativity holds at exponent `n - hdepth` and fails one step lower.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound(serialize = "T: Coefficient"), rename_all = "camelCase")]
pub struct DepthReport<T> {
    pub hdepth: u32,
    /// Certificate for `Q / (1 - T)^(n - hdepth)`; always `Positive`.
    pub certificate_at_d: PositivityCertificate<T>,
    /// Refutation for `Q / (1 - T)^(n - hdepth - 1)`; absent when the
    /// depth equals `n` and there is nothing to refute.
    pub certificate_above_d: Option<PositivityCertificate<T>>,
}

/// One summand `numerator / (1 - T)^level` of a decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound(
    serialize = "T: Coefficient",
    deserialize = "T: Coefficient + std::str::FromStr, <T as std::str::FromStr>::Err: fmt::Display"
))]
pub struct DecompositionPart<T> {
    pub level: u32,
    pub numerator: LaurentPoly<T>,
}

/// A positive splitting `H = sum parts`, with strictly increasing levels
/// starting at the Hilbert depth.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound(
    serialize = "T: Coefficient",
    deserialize = "T: Coefficient + std::str::FromStr, <T as std::str::FromStr>::Err: fmt::Display"
))]
pub struct HilbertDecomposition<T> {
    #[serde(rename = "hdepth")]
    pub min_level: u32,
    pub parts: Vec<DecompositionPart<T>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DepthError<T> {
    /// The expansion has a negative coefficient (witness attached), or the
    /// numerator is zero: no nonzero module has this Hilbert series.
    NotAHilbertSeries(Option<PositivityCertificate<T>>),
    /// An internal guarantee failed; this indicates a bug, never bad input.
    Inconsistency(String),
}

impl<T: Coefficient> fmt::Display for DepthError<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DepthError::NotAHilbertSeries(Some(PositivityCertificate::NegativeAt {
                degree,
                value,
            })) => write!(
                f,
                "not a Hilbert series: coefficient {value} at degree {degree}"
            ),
            DepthError::NotAHilbertSeries(_) => write!(f, "not a Hilbert series: zero numerator"),
            DepthError::Inconsistency(msg) => write!(f, "internal inconsistency: {msg}"),
        }
    }
}

impl<T: Coefficient> std::error::Error for DepthError<T> {}

/// Hilbert depth as `n` minus the least exponent `q` with `Q / (1 - T)^q`
/// nonnegative, located by binary search.
pub fn hdepth_via_numerator<T: Coefficient>(
    series: &RationalSeries<T>,
) -> Result<DepthReport<T>, DepthError<T>> {
    if series.numerator().is_zero() {
        return Err(DepthError::NotAHilbertSeries(None));
    }
    let n = series.denom_exponent();
    let at_q = |q: u32| check_positivity(&RationalSeries::new(series.numerator().clone(), q));

    let full = at_q(n);
    if !full.is_positive() {
        return Err(DepthError::NotAHilbertSeries(Some(full)));
    }

    // Invariants: positivity holds at hi (certificate kept), fails below
    // lo (refutation kept).  On exit lo == hi is the least good exponent.
    let mut lo = 0u32;
    let mut hi = n;
    let mut certificate_at_d = full;
    let mut certificate_above_d = None;
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        let cert = at_q(mid);
        if cert.is_positive() {
            hi = mid;
            certificate_at_d = cert;
        } else {
            lo = mid + 1;
            certificate_above_d = Some(cert);
        }
    }
    Ok(DepthReport {
        hdepth: n - lo,
        certificate_at_d,
        certificate_above_d,
    })
}

/// Hilbert depth as the largest `p` with `(1 - T)^p Q / (1 - T)^n`
/// nonnegative.  An independent route to the same number: it really
/// multiplies out the numerator and re-checks at full exponent `n`.
pub fn hdepth_via_multiplication<T: Coefficient>(
    series: &RationalSeries<T>,
) -> Result<u32, DepthError<T>> {
    if series.numerator().is_zero() {
        return Err(DepthError::NotAHilbertSeries(None));
    }
    let n = series.denom_exponent();
    let at_p = |p: u32| {
        check_positivity(&RationalSeries::new(
            series.numerator().mul_one_minus_t_pow(p),
            n,
        ))
    };

    let base = at_p(0);
    if !base.is_positive() {
        return Err(DepthError::NotAHilbertSeries(Some(base)));
    }
    // Largest p in [0, n] keeping positivity; beyond n the numerator
    // vanishes at T = 1 and a negative coefficient is forced.
    let mut lo = 0u32;
    let mut hi = n;
    while lo < hi {
        let mid = lo + (hi - lo).div_ceil(2);
        if at_p(mid).is_positive() {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    Ok(lo)
}

/// Builds a positive decomposition witnessing the Hilbert depth.
pub fn decompose<T: Coefficient>(
    series: &RationalSeries<T>,
) -> Result<HilbertDecomposition<T>, DepthError<T>> {
    let d = hdepth_via_numerator(series)?.hdepth;
    let n = series.denom_exponent();
    let m = n - d;

    let mut parts: Vec<DecompositionPart<T>> = Vec::new();
    let mut cur = series.numerator().clone();
    let (base, top) = cur
        .support()
        .expect("numerator nonzero after the depth check");
    let mut window = ExpansionWindow::build(&cur, m, base, top + i64::from(m) + 8);
    for i in (1..=m).rev() {
        let sigma = cur.eval_one();
        if sigma.is_negative() {
            return Err(DepthError::Inconsistency(format!(
                "negative multiplicity {sigma} at level {}",
                d + i
            )));
        }
        if sigma.is_zero() {
            // Dividing by (1 - T) leaves the expanded coefficients as they
            // are, so the window carries over unchanged.
            cur = cur.div_one_minus_t();
            continue;
        }
        let j = extraction_degree(&cur, i, &sigma, &mut window)?;
        window.subtract_extraction(&sigma, i, j);
        let part = LaurentPoly::monomial(sigma, j);
        cur = cur.sub(&part).div_one_minus_t();
        parts.push(DecompositionPart {
            level: d + i,
            numerator: part,
        });
    }

    if cur.is_zero() {
        return Err(DepthError::Inconsistency(format!(
            "no numerator left at level {d}"
        )));
    }
    if !check_positivity(&RationalSeries::new(cur.clone(), 0)).is_positive() {
        return Err(DepthError::Inconsistency(format!(
            "numerator at level {d} has a negative coefficient"
        )));
    }
    parts.push(DecompositionPart {
        level: d,
        numerator: cur,
    });
    parts.reverse();
    Ok(HilbertDecomposition {
        min_level: d,
        parts,
    })
}

/// Expansion coefficients of the current level's series on a fixed degree
/// range `base..=horizon`.  Subtracting an extraction and dividing by
/// `1 - T` leaves these values literally unchanged as a function of the
/// degree, so one window serves the whole greedy descent; each candidate
/// extraction is then a closed-form correction against it instead of a
/// fresh prefix-sum table.
struct ExpansionWindow<T> {
    base: i64,
    values: Vec<T>,
}

impl<T: Coefficient> ExpansionWindow<T> {
    /// Growth cap; beyond it candidates are checked the direct way.
    const MAX_ENTRIES: i64 = 1 << 20;

    fn build(numerator: &LaurentPoly<T>, exponent: u32, base: i64, horizon: i64) -> Self {
        let prefix = RationalSeries::new(numerator.clone(), exponent).expand(horizon);
        let values = (base..=horizon).map(|k| prefix.coeff(k)).collect();
        ExpansionWindow { base, values }
    }

    fn horizon(&self) -> i64 {
        self.base + self.values.len() as i64 - 1
    }

    fn value(&self, degree: i64) -> &T {
        &self.values[usize::try_from(degree - self.base).expect("degree within window")]
    }

    /// Grows the window to cover `needed` (doubling, to amortize the
    /// re-expansion); false when that would exceed the cap.
    fn ensure(&mut self, numerator: &LaurentPoly<T>, exponent: u32, needed: i64) -> bool {
        if needed <= self.horizon() {
            return true;
        }
        let doubled = self.horizon() + (self.horizon() - self.base + 1);
        let horizon = needed.max(doubled);
        if horizon - self.base + 1 > Self::MAX_ENTRIES {
            return false;
        }
        *self = Self::build(numerator, exponent, self.base, horizon);
        true
    }

    /// Folds an accepted extraction into the window: subtracts the
    /// expansion of `sigma T^j / (1 - T)^exponent`, i.e. `sigma`
    /// times `C(k - j + exponent - 1, exponent - 1)` from degree `j` on.
    fn subtract_extraction(&mut self, sigma: &T, exponent: u32, j: i64) {
        let e = i64::from(exponent);
        let last = self.horizon();
        let mut corr = sigma.clone();
        for k in j..=last {
            self.values[usize::try_from(k - self.base).unwrap()] -= &corr;
            if k < last {
                corr *= &T::from_i64(k - j + e).unwrap();
                corr /= T::from_i64(k - j + 1).unwrap();
            }
        }
    }
}

/// Replaces `d[t]` by the t-th forward difference of the input sequence.
fn forward_differences<T: Coefficient>(d: &mut [T]) {
    for round in 1..d.len() {
        for t in (round..d.len()).rev() {
            let prev = d[t - 1].clone();
            d[t] -= &prev;
        }
    }
}

/// Decides whether `(N - sigma T^j) / (1 - T)^exponent` is nonnegative,
/// reading `N`'s expansion from the window.  Degrees below `j` keep their
/// already-nonnegative values and need no scan; from `j` to just below the
/// numerator top the corrected values are scanned directly; the tail from
/// the top on is a polynomial in the degree, decided through its Newton
/// coefficients exactly as in the full positivity check.
fn probe_extraction<T: Coefficient>(
    window: &ExpansionWindow<T>,
    top_deltas: &[T],
    top: i64,
    sigma: &T,
    exponent: u32,
    j: i64,
) -> bool {
    let e = i64::from(exponent);
    let count = exponent as usize;
    let mut deltas;
    if j <= top {
        let mut corr = sigma.clone();
        for k in j..top {
            let mut v = window.value(k).clone();
            v -= &corr;
            if v.is_negative() {
                return false;
            }
            corr *= &T::from_i64(k - j + e).unwrap();
            corr /= T::from_i64(k - j + 1).unwrap();
        }
        // Rebase the subtracted binomial into the Newton basis at `top`:
        // C(t + c, e - 1) = sum_h C(c, e - 1 - h) C(t, h) with
        // c = top - j + e - 1, so each tail delta drops by
        // sigma * C(c, e - 1 - h).
        let c = top - j + e - 1;
        deltas = top_deltas.to_vec();
        let mut coeff: T = binomial(c, e - 1);
        coeff *= sigma;
        for (h, delta) in deltas.iter_mut().enumerate() {
            *delta -= &coeff;
            if h + 1 < count {
                let b = e - 1 - h as i64;
                coeff *= &T::from_i64(b).unwrap();
                coeff /= T::from_i64(c - b + 1).unwrap();
            }
        }
    } else {
        // The extraction sits beyond the numerator top, so the corrected
        // tail starts at `j`; take its values and difference them.
        deltas = Vec::with_capacity(count);
        let mut corr = sigma.clone();
        for t in 0..e {
            let mut v = window.value(j + t).clone();
            v -= &corr;
            deltas.push(v);
            corr *= &T::from_i64(t + e).unwrap();
            corr /= T::from_i64(t + 1).unwrap();
        }
        forward_differences(&mut deltas);
    }
    if deltas.iter().all(|d| !d.is_negative()) {
        return true;
    }
    decide_tail(&deltas, top.max(j)).is_positive()
}

/// Smallest degree `j` such that `(N - sigma T^j) / (1 - T)^exponent`
/// stays nonnegative, which by the depth characterization means the
/// remainder is still decomposable down to the same minimal level.
///
/// Subtracting at a larger degree removes weight from later coefficients
/// only, so feasibility is monotone in `j` and binary search applies.  A
/// feasible degree exists for every nonnegative series with positive
/// multiplicity; the search ceiling is a safety net, not a tuning knob.
fn extraction_degree<T: Coefficient>(
    numerator: &LaurentPoly<T>,
    exponent: u32,
    sigma: &T,
    window: &mut ExpansionWindow<T>,
) -> Result<i64, DepthError<T>> {
    let (offset, top) = numerator.support().expect("nonzero numerator");
    let e = i64::from(exponent);
    let slack = {
        let mut v = T::one();
        v += &numerator.max_abs_coeff();
        v *= &T::from_i64(4 * (e + 1)).unwrap();
        v.to_i64().unwrap_or(i64::MAX)
    };
    let ceiling = top.saturating_add(slack);

    let windowed = window.ensure(numerator, exponent, top + e - 1);
    let top_deltas: Vec<T> = if windowed {
        let mut d: Vec<T> = (0..e).map(|t| window.value(top + t).clone()).collect();
        forward_differences(&mut d);
        d
    } else {
        Vec::new()
    };

    let feasible = |j: i64, window: &mut ExpansionWindow<T>| {
        if windowed && window.ensure(numerator, exponent, j.max(top) + e - 1) {
            probe_extraction(window, &top_deltas, top, sigma, exponent, j)
        } else {
            let remainder = numerator.sub(&LaurentPoly::monomial(sigma.clone(), j));
            check_positivity(&RationalSeries::new(remainder, exponent)).is_positive()
        }
    };

    // Any degree below the offset leaves -sigma as the leading coefficient
    // and fails, so the search starts at the offset.
    if feasible(offset, window) {
        return Ok(offset);
    }
    let mut last_bad = offset;
    let mut step = 1i64;
    let mut first_good;
    loop {
        let cand = offset.saturating_add(step).min(ceiling);
        if feasible(cand, window) {
            first_good = cand;
            break;
        }
        if cand == ceiling {
            return Err(DepthError::Inconsistency(format!(
                "no extraction degree up to {ceiling} at exponent {exponent}"
            )));
        }
        last_bad = cand;
        step *= 2;
    }
    while last_bad + 1 < first_good {
        let mid = last_bad + (first_good - last_bad) / 2;
        if feasible(mid, window) {
            first_good = mid;
        } else {
            last_bad = mid;
        }
    }
    Ok(first_good)
}

/// Checks a decomposition against a series: strictly increasing levels
/// within `[min_level, n]`, nonzero nonnegative numerators, and an exact
/// recombination `sum_e Q_e (1 - T)^(n - e) = Q`.
pub fn verify_decomposition<T: Coefficient>(
    decomposition: &HilbertDecomposition<T>,
    series: &RationalSeries<T>,
) -> bool {
    let n = series.denom_exponent();
    let parts = &decomposition.parts;
    if parts.is_empty() || parts[0].level != decomposition.min_level {
        return false;
    }
    for (i, part) in parts.iter().enumerate() {
        if part.level > n
            || (i > 0 && part.level <= parts[i - 1].level)
            || part.numerator.is_zero()
            || part.numerator.coeffs().iter().any(|c| c.is_negative())
        {
            return false;
        }
    }
    let mut sum = LaurentPoly::zero();
    for part in parts {
        sum = sum.add(&part.numerator.mul_one_minus_t_pow(n - part.level));
    }
    sum == *series.numerator()
}
