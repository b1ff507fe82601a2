//! Pointwise forms of the audited identities and inequalities.
//!
//! Each function evaluates one parameter point, exactly for the integer
//! inequalities and in `f64` for the digamma ones, and panics when called
//! outside its hypotheses.  The `check_*` wrappers return the verdict the
//! grid drivers aggregate.

use super::gamma::{digamma, digamma_any, log_gamma, recip_gamma};
use super::{AuditFailure, AuditReport};
use crate::poly::{binomial, Coefficient};
use crate::Int;

/// Ceiling r = ceil(n / (s + 1)) extended to real parameters.
pub fn power_depth_real(n: f64, s: f64) -> f64 {
    (n / (s + 1.0)).ceil()
}

/// Shared hypothesis range for the real-parameter checks: n, t >= 1,
/// s >= 2 and s + 2 <= k <= r + s - t - 1, which keeps every digamma
/// argument strictly positive.  Returns r.
fn real_domain(n: f64, s: f64, t: f64, k: f64) -> f64 {
    assert!(
        n >= 1.0 && t >= 1.0 && s >= 2.0,
        "check needs n >= 1, t >= 1 and s >= 2"
    );
    let r = power_depth_real(n, s);
    assert!(
        k >= s + 2.0 && k <= r + s - t - 1.0,
        "check needs s + 2 <= k <= r + s - t - 1"
    );
    r
}

/// Digamma combination
/// psi(n+k-r) - psi(r-t-k+s+1) + psi(k-s+1) - psi(k+1)
/// with r = ceil(n / (s + 1)); positive throughout the hypothesis range.
pub fn lemma1_value(n: f64, s: f64, t: f64, k: f64) -> f64 {
    let r = real_domain(n, s, t, k);
    digamma(n + k - r) - digamma(r - t - k + s + 1.0) + digamma(k - s + 1.0) - digamma(k + 1.0)
}

pub fn check_lemma1(n: f64, s: f64, t: f64, k: f64, margin: f64) -> bool {
    lemma1_value(n, s, t, k) > margin
}

/// Gap log(s) + psi(3) - psi(s+3), smallest at s = 2 where it equals
/// log 2 - 7/12.
pub fn eq7_value(s: f64) -> f64 {
    assert!(s >= 2.0, "eq7 needs s >= 2");
    s.ln() + digamma(3.0) - digamma(s + 3.0)
}

pub fn check_eq7(s: f64, margin: f64) -> bool {
    eq7_value(s) > margin
}

/// Jump balance psi((l+1)s + 1) - psi((l+1)s + s + 1) + 1/(l - 1); the
/// check asserts it stays positive, i.e. the digamma drop never exceeds
/// 1/(l - 1).
pub fn eq5_value(l: u32, s: u32) -> f64 {
    assert!(l >= 2 && s >= 2, "eq5 needs l >= 2 and s >= 2");
    let base = f64::from((l + 1) * s);
    digamma(base + 1.0) - digamma(base + f64::from(s) + 1.0) + 1.0 / f64::from(l - 1)
}

pub fn check_eq5(l: u32, s: u32, margin: f64) -> bool {
    eq5_value(l, s) > margin
}

/// Quadratic normalizer
/// N(n,s) = (n+s)(n+s+1) - r(n+s)(s+2) + C(r,2)(s+1)(s+2).
pub fn big_n(n: u32, s: u32, r: u32) -> i64 {
    let (n, s, r) = (i64::from(n), i64::from(s), i64::from(r));
    (n + s) * (n + s + 1) - r * (n + s) * (s + 2) + r * (r - 1) / 2 * (s + 1) * (s + 2)
}

/// Real-parameter form of [`big_n`].
pub fn big_n_real(n: f64, s: f64, r: f64) -> f64 {
    (n + s) * (n + s + 1.0) - r * (n + s) * (s + 2.0) + r * (r - 1.0) / 2.0 * (s + 1.0) * (s + 2.0)
}

fn binomial_domain(n: u32, s: u32) -> i64 {
    assert!(s >= 2 && n > 3 * s + 3, "check needs s >= 2 and n > 3s + 3");
    i64::from((n + s) / (s + 1))
}

/// Exact sides of 2 C(n+s-r+1, s+2) >= C(n+s+1, s+2) - r C(n+s, s+1)
/// + C(r,2) C(n+s-1, s) with r = ceil(n / (s + 1)).
pub fn lemma5_sides<T: Coefficient>(n: u32, s: u32) -> (T, T) {
    let r = binomial_domain(n, s);
    let (nl, sl) = (i64::from(n), i64::from(s));
    let mut lhs: T = binomial(nl + sl - r + 1, sl + 2);
    lhs *= &T::from_i64(2).unwrap();
    let mut rhs: T = binomial(nl + sl + 1, sl + 2);
    let mut mid: T = binomial(nl + sl, sl + 1);
    mid *= &T::from_i64(r).unwrap();
    rhs -= &mid;
    let mut last: T = binomial(r, 2);
    last *= &binomial::<T>(nl + sl - 1, sl);
    rhs += &last;
    (lhs, rhs)
}

pub fn check_lemma5(n: u32, s: u32) -> bool {
    let (lhs, rhs) = lemma5_sides::<Int>(n, s);
    lhs >= rhs
}

/// Exact sides of (r-1) N(n,s) >= (n-1)(n+s).
pub fn eq15a_sides(n: u32, s: u32) -> (i64, i64) {
    let r = binomial_domain(n, s);
    let (nl, sl) = (i64::from(n), i64::from(s));
    let lhs = (r - 1) * big_n(n, s, (n + s) / (s + 1));
    (lhs, (nl - 1) * (nl + sl))
}

pub fn check_eq15a(n: u32, s: u32) -> bool {
    let (lhs, rhs) = eq15a_sides(n, s);
    lhs >= rhs
}

/// Exact sides of 2 N(n,s) + ((r-2)s + 1)s >= (n-r+1)(2n+2s+1-r(s+2)).
pub fn eq15b_sides(n: u32, s: u32) -> (i64, i64) {
    let r = binomial_domain(n, s);
    let (nl, sl) = (i64::from(n), i64::from(s));
    let lhs = 2 * big_n(n, s, (n + s) / (s + 1)) + ((r - 2) * sl + 1) * sl;
    let rhs = (nl - r + 1) * (2 * nl + 2 * sl + 1 - r * (sl + 2));
    (lhs, rhs)
}

pub fn check_eq15b(n: u32, s: u32) -> bool {
    let (lhs, rhs) = eq15b_sides(n, s);
    lhs >= rhs
}

/// Exact sides of the factorial-ratio inequality
/// 2 ((l+1)s-1)!/(ls-2)! >= (1/2) ((l+1)(s+1)-2)!/(l(s+1)-2)!
/// with both sides scaled by 2 so the comparison stays in integers; each
/// side is a product of s + 1 consecutive integers.
pub fn eq19_sides<T: Coefficient>(l: u32, s: u32) -> (T, T) {
    assert!(l >= 3 && s >= 2, "eq19 needs l >= 3 and s >= 2");
    let (ll, sl) = (i64::from(l), i64::from(s));
    let mut lhs = T::from_i64(4).unwrap();
    for v in (ll * sl - 1)..=((ll + 1) * sl - 1) {
        lhs *= &T::from_i64(v).unwrap();
    }
    let mut rhs = T::one();
    for v in (ll * (sl + 1) - 1)..=((ll + 1) * (sl + 1) - 2) {
        rhs *= &T::from_i64(v).unwrap();
    }
    (lhs, rhs)
}

pub fn check_eq19(l: u32, s: u32) -> bool {
    let (lhs, rhs) = eq19_sides::<Int>(l, s);
    lhs >= rhs
}

/// Exact sides of C(n+k-r-1, k) >= sum_{t=1}^{r} C(r-t, k-s) C(n-t+s-1, s-1)
/// with r = ceil(n / (s + 1)), for k in s+1 ..= s+r-1.
pub fn prop1_sides<T: Coefficient>(n: u32, s: u32, k: i64) -> (T, T) {
    assert!(n >= 1 && s >= 1, "prop1 needs n >= 1 and s >= 1");
    let r = i64::from((n + s) / (s + 1));
    let (nl, sl) = (i64::from(n), i64::from(s));
    assert!(k > sl && k < sl + r, "prop1 needs s + 1 <= k <= s + r - 1");
    let lhs = binomial(nl + k - r - 1, k);
    let mut rhs = T::zero();
    for t in 1..=r {
        let mut term: T = binomial(r - t, k - sl);
        term *= &binomial::<T>(nl - t + sl - 1, sl - 1);
        rhs += &term;
    }
    (lhs, rhs)
}

/// Sweeps `prop1_sides` over the whole k range at one (n, s), requiring
/// equality at k = s+1 exactly when s+1 divides n+s and strict inequality
/// there otherwise.
pub fn check_prop1(n: u32, s: u32) -> AuditReport {
    assert!(n >= 1 && s >= 1, "prop1 needs n >= 1 and s >= 1");
    let r = (n + s) / (s + 1);
    let first = i64::from(s) + 1;
    let last = i64::from(s + r) - 1;
    let mut failures = Vec::new();
    let mut total_points = 0;
    for k in first..=last {
        total_points += 1;
        let (lhs, rhs) = prop1_sides::<Int>(n, s, k);
        let ok = if k > first {
            lhs >= rhs
        } else if (n + s).is_multiple_of(s + 1) {
            lhs == rhs
        } else {
            lhs > rhs
        };
        if !ok {
            failures.push(AuditFailure {
                parameters: format!("n={n} s={s} k={k}"),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }
    failures.sort_by(|a, b| a.parameters.cmp(&b.parameters));
    AuditReport {
        check_name: "prop1".into(),
        grid_description: format!(
            "k in {first}..={last} at n = {n}, s = {s} (r = {r}); \
             equality at k = {first} exactly when s+1 divides n+s"
        ),
        total_points,
        failures,
    }
}

/// Floating-point sides of
/// psi(n+s-r+2) - psi(n-r) > psi(n+s) - psi(n) + (2n+2s+1-r(s+2))/N(n,s)
/// for real n > 3s + 3.
pub fn eq14_sides(n: f64, s: u32) -> (f64, f64) {
    assert!(s >= 2, "eq14 needs s >= 2");
    let sf = f64::from(s);
    assert!(n > 3.0 * sf + 3.0, "eq14 needs n > 3s + 3");
    let r = power_depth_real(n, sf);
    let lhs = digamma(n + sf - r + 2.0) - digamma(n - r);
    let rhs = digamma(n + sf) - digamma(n)
        + (2.0 * n + 2.0 * sf + 1.0 - r * (sf + 2.0)) / big_n_real(n, sf, r);
    (lhs, rhs)
}

pub fn check_eq14(n: f64, s: u32, margin: f64) -> bool {
    let (lhs, rhs) = eq14_sides(n, s);
    lhs - rhs > margin
}

/// Derivatives in k of the two sides of the gamma-extended binomial
/// inequality at one point, with the central finite differences used to
/// cross-check them.
#[derive(Debug, Clone, Copy)]
pub struct DerivativeComparison {
    pub lhs: f64,
    pub rhs: f64,
    pub lhs_fd: f64,
    pub rhs_fd: f64,
}

fn agrees(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-4 * a.abs().max(b.abs()).max(1e-6)
}

impl DerivativeComparison {
    /// Both analytic derivatives match their finite differences to 1e-4
    /// relative tolerance.
    pub fn fd_consistent(&self) -> bool {
        agrees(self.lhs, self.lhs_fd) && agrees(self.rhs, self.rhs_fd)
    }

    pub fn separated(&self, margin: f64) -> bool {
        self.lhs - self.rhs > margin
    }
}

/// Gamma extension of C(n+k-r-1, k) as a function of k.
fn left_value(n: f64, r: f64, k: f64) -> f64 {
    (log_gamma(n + k - r) - log_gamma(n - r)).exp() * recip_gamma(k + 1.0)
}

/// d/dk of [`left_value`]: (psi(n+k-r) - psi(k+1)) C(n+k-r-1, k).
fn left_derivative(n: f64, r: f64, k: f64) -> f64 {
    (digamma(n + k - r) - digamma(k + 1.0))
        * (log_gamma(n + k - r) - log_gamma(k + 1.0) - log_gamma(n - r)).exp()
}

/// Gamma extension of sum_t C(r-t, k-s) C(n-t+s-1, s-1) as a function of
/// k.  The 1/Gamma factors make every term entire in k, so the sum is
/// smooth even where r-t-k+s+1 crosses a non-positive integer.
fn right_value(n: f64, s: f64, r: f64, k: f64) -> f64 {
    let u = k - s + 1.0;
    let mut sum = 0.0;
    for t in 1..=(r as i64) {
        let tf = t as f64;
        let weight = log_gamma(n - tf + s) - log_gamma(s) - log_gamma(n - tf + 1.0);
        let fact = log_gamma(r - tf + 1.0);
        let v = r - tf - k + s + 1.0;
        // Keep large gamma factors combined in the log domain; only the
        // small-argument reciprocal is evaluated directly.
        sum += if v > 0.0 {
            (fact - log_gamma(u) - log_gamma(v) + weight).exp()
        } else {
            (fact - log_gamma(u) + weight).exp() * recip_gamma(v)
        };
    }
    sum
}

/// d/dk of [`right_value`].  Where v = r-t-k+s+1 is a non-positive
/// integer the 1/Gamma(v) factor passes through its zero with slope
/// (-1)^m m! at v = -m, leaving a single surviving product.
fn right_derivative(n: f64, s: f64, r: f64, k: f64) -> f64 {
    let u = k - s + 1.0;
    let mut sum = 0.0;
    for t in 1..=(r as i64) {
        let tf = t as f64;
        let weight = log_gamma(n - tf + s) - log_gamma(s) - log_gamma(n - tf + 1.0);
        let fact = log_gamma(r - tf + 1.0);
        let v = r - tf - k + s + 1.0;
        sum += if v <= 0.0 && v == v.floor() {
            let sign = if (-v) as i64 % 2 == 0 { 1.0 } else { -1.0 };
            -sign * (fact - log_gamma(u) + weight + log_gamma(1.0 - v)).exp()
        } else if v > 0.0 {
            (digamma(v) - digamma(u)) * (fact - log_gamma(u) - log_gamma(v) + weight).exp()
        } else {
            (digamma_any(v) - digamma(u)) * (fact - log_gamma(u) + weight).exp() * recip_gamma(v)
        };
    }
    sum
}

/// Compares d/dk of the two gamma-extended sides at k = k0 under the same
/// hypotheses as [`lemma1_value`], cross-checking each analytic derivative
/// against a central finite difference with step 1e-6.
pub fn lemma3_derivatives(n: f64, s: f64, k0: f64, t: f64) -> DerivativeComparison {
    let r = real_domain(n, s, t, k0);
    let h = 1e-6;
    DerivativeComparison {
        lhs: left_derivative(n, r, k0),
        rhs: right_derivative(n, s, r, k0),
        lhs_fd: (left_value(n, r, k0 + h) - left_value(n, r, k0 - h)) / (2.0 * h),
        rhs_fd: (right_value(n, s, r, k0 + h) - right_value(n, s, r, k0 - h)) / (2.0 * h),
    }
}

/// True when both finite differences confirm the analytic derivatives and
/// the left derivative exceeds the right one by more than the margin.
pub fn check_lemma3_derivative(n: f64, s: f64, k0: f64, t: f64, margin: f64) -> bool {
    let c = lemma3_derivatives(n, s, k0, t);
    c.fd_consistent() && c.separated(margin)
}
