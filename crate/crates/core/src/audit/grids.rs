//! Named parameter sweeps over the pointwise checks.
//!
//! Each driver walks its grid deterministically (randomized grids draw
//! from a seeded generator), collects counterexamples into an
//! [`AuditReport`], and sorts the failures by their parameter strings so
//! reports are diffable.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::checks;
use super::{AuditFailure, AuditReport};
use crate::catalog::{
    syzygy_hilbert_closed, syzygy_hilbert_left, syzygy_hilbert_right, SyzygyParams,
};
use crate::expansion::{
    expanded_coefficient, expanded_coefficient_oracle, lemma4_lhs, lemma4_rhs8, lemma4_rhs9,
    ExpansionParams,
};
use crate::Int;

/// Optional overrides for the named sweeps; unset fields fall back to each
/// check's verification bounds.
#[derive(Debug, Clone, Copy, Default)]
pub struct GridBounds {
    pub max: Option<u32>,
    pub n_max: Option<u32>,
    pub s_max: Option<u32>,
    pub k_max: Option<i64>,
    pub l_max: Option<u32>,
    pub points: Option<u64>,
}

/// The sweeps the command line can run by name.
pub const CHECK_NAMES: [&str; 12] = [
    "lemma4",
    "syzygy-triple",
    "prop0",
    "prop1",
    "lemma1",
    "lemma5",
    "eq14",
    "eq15",
    "eq19",
    "eq5",
    "eq7",
    "lemma3",
];

/// Runs one named sweep; `None` for an unknown name.
pub fn run_named_check(
    name: &str,
    bounds: &GridBounds,
    margin: f64,
    seed: u64,
) -> Option<AuditReport> {
    let b = bounds;
    Some(match name {
        "lemma4" => lemma4_grid(b.max.unwrap_or(12)),
        "syzygy-triple" => syzygy_grid(b.n_max.unwrap_or(10), b.k_max.unwrap_or(20)),
        "prop0" => prop0_grid(b.n_max.unwrap_or(20), b.s_max.unwrap_or(5)),
        "prop1" => prop1_grid(b.n_max.unwrap_or(150), b.s_max.unwrap_or(10)),
        "lemma1" => lemma1_grid(b.points.unwrap_or(10_000), margin, seed),
        "lemma5" => lemma5_grid(b.n_max.unwrap_or(400), b.s_max.unwrap_or(12)),
        "eq14" => eq14_grid(
            b.points.unwrap_or(10_000),
            b.n_max.unwrap_or(400),
            b.s_max.unwrap_or(12),
            margin,
            seed,
        ),
        "eq15" => eq15_grid(b.n_max.unwrap_or(400), b.s_max.unwrap_or(12)),
        "eq19" => eq19_grid(b.l_max.unwrap_or(50), b.s_max.unwrap_or(12)),
        "eq5" => eq5_grid(b.l_max.unwrap_or(50), b.s_max.unwrap_or(12), margin),
        "eq7" => eq7_grid(
            b.points.unwrap_or(1000),
            b.s_max.unwrap_or(100),
            margin,
            seed,
        ),
        "lemma3" => lemma3_grid(b.n_max.unwrap_or(100), b.s_max.unwrap_or(4), margin),
        _ => return None,
    })
}

/// An inequality point fails when the value does not clear the margin;
/// a NaN from a broken formula must register as a failure, never a pass.
fn fails_margin(value: f64, margin: f64) -> bool {
    value.is_nan() || value <= margin
}

fn report(
    name: &str,
    description: String,
    total_points: u64,
    mut failures: Vec<AuditFailure>,
) -> AuditReport {
    failures.sort_by(|a, b| a.parameters.cmp(&b.parameters));
    AuditReport {
        check_name: name.into(),
        grid_description: description,
        total_points,
        failures,
    }
}

/// Triple identity between the alternating binomial sum and its two
/// closed forms, exact over the full integer grid.
pub fn lemma4_grid(max: u32) -> AuditReport {
    let mut failures = Vec::new();
    let mut total = 0u64;
    for n in 1..=max {
        for s in 1..=max {
            for r in 1..=max {
                for k in i64::from(s)..=(3 * i64::from(r + s)) {
                    if i64::from(n) + k - i64::from(r) - 1 < 0 {
                        continue;
                    }
                    total += 1;
                    let lhs: i128 = lemma4_lhs(n, s, r, k);
                    let rhs8: i128 = lemma4_rhs8(n, s, r, k);
                    let rhs9: i128 = lemma4_rhs9(n, s, r, k);
                    if lhs != rhs8 || lhs != rhs9 {
                        failures.push(AuditFailure {
                            parameters: format!("n={n} s={s} r={r} k={k}"),
                            lhs: lhs.to_string(),
                            rhs: format!("rhs8={rhs8} rhs9={rhs9}"),
                        });
                    }
                }
            }
        }
    }
    report(
        "lemma4",
        format!(
            "alternating sum against both closed forms, exact, for \
             1 <= n, s, r <= {max} and s <= k <= 3(r+s) with n+k-r-1 >= 0"
        ),
        total,
        failures,
    )
}

/// The three coefficient formulas for the syzygy series agree on every
/// grid point.
pub fn syzygy_grid(n_max: u32, k_max: i64) -> AuditReport {
    let mut failures = Vec::new();
    let mut total = 0u64;
    for n in 2..=n_max {
        for r in 1..n {
            for u in 1..=r {
                for k in 0..=k_max {
                    let p = SyzygyParams::new(n, r, u, k);
                    total += 1;
                    let right: Int = syzygy_hilbert_right(&p);
                    let left: Int = syzygy_hilbert_left(&p);
                    let closed: Int = syzygy_hilbert_closed(&p);
                    if right != left || right != closed {
                        failures.push(AuditFailure {
                            parameters: format!("n={n} r={r} u={u} k={k}"),
                            lhs: right.to_string(),
                            rhs: format!("left={left} closed={closed}"),
                        });
                    }
                }
            }
        }
    }
    report(
        "syzygy-triple",
        format!(
            "right, left and closed coefficient forms agree, exact, for \
             2 <= n <= {n_max}, 1 <= r < n, 1 <= u <= r, 0 <= k <= {k_max}"
        ),
        total,
        failures,
    )
}

/// Regime-dispatch coefficients against the convolution oracle, exact.
pub fn prop0_grid(n_max: u32, s_max: u32) -> AuditReport {
    let mut failures = Vec::new();
    let mut total = 0u64;
    for n in 2..=n_max {
        for s in 1..=s_max {
            for r in 1..n {
                for k in 0..=(i64::from(r + s) + 10) {
                    let p = ExpansionParams::new(n, s, r, k);
                    total += 1;
                    let direct: i128 = expanded_coefficient(&p);
                    let oracle: i128 = expanded_coefficient_oracle(&p);
                    if direct != oracle {
                        failures.push(AuditFailure {
                            parameters: format!("n={n} s={s} r={r} k={k}"),
                            lhs: direct.to_string(),
                            rhs: oracle.to_string(),
                        });
                    }
                }
            }
        }
    }
    report(
        "prop0",
        format!(
            "regime-dispatch expansion coefficient against the convolution \
             oracle, exact, for 2 <= n <= {n_max}, 1 <= s <= {s_max}, \
             0 < r < n, 0 <= k <= r+s+10"
        ),
        total,
        failures,
    )
}

/// Binomial inequality with its equality tie at the first k, exact, over
/// an (n, s) rectangle.
pub fn prop1_grid(n_max: u32, s_max: u32) -> AuditReport {
    let mut failures = Vec::new();
    let mut total = 0u64;
    for s in 1..=s_max {
        for n in 1..=n_max {
            let sub = checks::check_prop1(n, s);
            total += sub.total_points;
            failures.extend(sub.failures);
        }
    }
    report(
        "prop1",
        format!(
            "exact inequality over k = s+1 ..= s+r-1 for 1 <= n <= {n_max}, \
             1 <= s <= {s_max}, with equality at k = s+1 exactly when s+1 \
             divides n+s"
        ),
        total,
        failures,
    )
}

/// Digamma inequality on seeded random real points within the hypothesis
/// ranges, weighted toward the arguments where the ceiling r jumps.
pub fn lemma1_grid(points: u64, margin: f64, seed: u64) -> AuditReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for _ in 0..points {
        let s = rng.gen_range(2.0..=12.0);
        let n = if rng.gen_ratio(1, 10) {
            // Just above a multiple of s+1, where r = ceil(n/(s+1)) jumps.
            let m_hi = (399.0_f64 / (s + 1.0)).floor() as i64;
            let m = rng.gen_range(5..=m_hi) as f64;
            m * (s + 1.0) + rng.gen_range(1e-9..=0.5)
        } else {
            rng.gen_range((4.0 * (s + 1.0) + 0.1)..=400.0)
        };
        let r = checks::power_depth_real(n, s);
        let t = rng.gen_range(1.0..=(r - 3.0));
        let k = rng.gen_range((s + 2.0)..=(r + s - t - 1.0));
        let value = checks::lemma1_value(n, s, t, k);
        if fails_margin(value, margin) {
            failures.push(AuditFailure {
                parameters: format!("n={n} s={s} t={t} k={k}"),
                lhs: value.to_string(),
                rhs: format!("margin {margin}"),
            });
        }
    }
    report(
        "lemma1",
        format!(
            "{points} seeded random real points: s in [2, 12], n in \
             (4(s+1), 400] with one in ten just above a multiple of s+1, \
             t in [1, r-3], k in [s+2, r+s-t-1]"
        ),
        points,
        failures,
    )
}

/// Exact binomial inequality across its full hypothesis rectangle.
pub fn lemma5_grid(n_max: u32, s_max: u32) -> AuditReport {
    let mut failures = Vec::new();
    let mut total = 0u64;
    for s in 2..=s_max {
        for n in (3 * s + 4)..=n_max {
            total += 1;
            let (lhs, rhs) = checks::lemma5_sides::<Int>(n, s);
            if lhs < rhs {
                failures.push(AuditFailure {
                    parameters: format!("n={n} s={s}"),
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                });
            }
        }
    }
    report(
        "lemma5",
        format!("exact binomial inequality for 2 <= s <= {s_max}, 3s+4 <= n <= {n_max}"),
        total,
        failures,
    )
}

/// Digamma comparison on seeded random real n, weighted toward points
/// just above multiples of s+1.
pub fn eq14_grid(points: u64, n_max: u32, s_max: u32, margin: f64, seed: u64) -> AuditReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for _ in 0..points {
        let s = rng.gen_range(2..=s_max);
        let sf = f64::from(s);
        let n = if rng.gen_ratio(1, 10) {
            let m_hi = (((f64::from(n_max) - 1.0) / (sf + 1.0)).floor() as u32).max(4);
            let m = rng.gen_range(4..=m_hi);
            f64::from(m) * (sf + 1.0) + rng.gen_range(1e-9..=0.5)
        } else {
            rng.gen_range((3.0 * sf + 4.0)..=f64::from(n_max).max(3.0 * sf + 4.0))
        };
        let (lhs, rhs) = checks::eq14_sides(n, s);
        if fails_margin(lhs - rhs, margin) {
            failures.push(AuditFailure {
                parameters: format!("n={n} s={s}"),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }
    report(
        "eq14",
        format!(
            "{points} seeded random points: integer s in [2, {s_max}], real n \
             in (3s+3, {n_max}] with one in ten just above a multiple of s+1"
        ),
        points,
        failures,
    )
}

/// Both quadratic inequalities, exact, across the hypothesis rectangle.
pub fn eq15_grid(n_max: u32, s_max: u32) -> AuditReport {
    let mut failures = Vec::new();
    let mut total = 0u64;
    for s in 2..=s_max {
        for n in (3 * s + 4)..=n_max {
            let (la, ra) = checks::eq15a_sides(n, s);
            total += 1;
            if la < ra {
                failures.push(AuditFailure {
                    parameters: format!("n={n} s={s} side=A"),
                    lhs: la.to_string(),
                    rhs: ra.to_string(),
                });
            }
            let (lb, rb) = checks::eq15b_sides(n, s);
            total += 1;
            if lb < rb {
                failures.push(AuditFailure {
                    parameters: format!("n={n} s={s} side=B"),
                    lhs: lb.to_string(),
                    rhs: rb.to_string(),
                });
            }
        }
    }
    report(
        "eq15",
        format!(
            "both quadratic inequalities, exact, for 2 <= s <= {s_max}, \
             3s+4 <= n <= {n_max}"
        ),
        total,
        failures,
    )
}

/// Factorial-ratio inequality, exact, over the (l, s) rectangle.
pub fn eq19_grid(l_max: u32, s_max: u32) -> AuditReport {
    let mut failures = Vec::new();
    let mut total = 0u64;
    for l in 3..=l_max {
        for s in 2..=s_max {
            total += 1;
            let (lhs, rhs) = checks::eq19_sides::<Int>(l, s);
            if lhs < rhs {
                failures.push(AuditFailure {
                    parameters: format!("l={l} s={s}"),
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                });
            }
        }
    }
    report(
        "eq19",
        format!(
            "exact factorial-ratio inequality for 3 <= l <= {l_max}, \
             2 <= s <= {s_max}"
        ),
        total,
        failures,
    )
}

/// Digamma jump balance over the integer (l, s) rectangle.
pub fn eq5_grid(l_max: u32, s_max: u32, margin: f64) -> AuditReport {
    let mut failures = Vec::new();
    let mut total = 0u64;
    for l in 2..=l_max {
        for s in 2..=s_max {
            total += 1;
            let value = checks::eq5_value(l, s);
            if fails_margin(value, margin) {
                failures.push(AuditFailure {
                    parameters: format!("l={l} s={s}"),
                    lhs: value.to_string(),
                    rhs: format!("margin {margin}"),
                });
            }
        }
    }
    report(
        "eq5",
        format!("digamma jump balance for 2 <= l <= {l_max}, 2 <= s <= {s_max}"),
        total,
        failures,
    )
}

/// Logarithm-digamma gap on random real s, pinned at the smallest s.
pub fn eq7_grid(points: u64, s_max: u32, margin: f64, seed: u64) -> AuditReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for i in 0..points {
        let s = if i == 0 {
            2.0
        } else {
            rng.gen_range(2.0..=f64::from(s_max))
        };
        let value = checks::eq7_value(s);
        if fails_margin(value, margin) {
            failures.push(AuditFailure {
                parameters: format!("s={s}"),
                lhs: value.to_string(),
                rhs: format!("margin {margin}"),
            });
        }
    }
    report(
        "eq7",
        format!(
            "{points} points with real s in [2, {s_max}], the first pinned at \
             s = 2 where the gap equals log 2 - 7/12; the digamma recurrence \
             gives psi(5) - psi(3) = 1/3 + 1/4 = 7/12, not 1/3 + 4/5"
        ),
        points,
        failures,
    )
}

/// Derivative separation with finite-difference cross-validation on an
/// integer grid inside the real-parameter hypotheses.
pub fn lemma3_grid(n_max: u32, s_max: u32, margin: f64) -> AuditReport {
    let mut failures = Vec::new();
    let mut total = 0u64;
    for s in 2..=s_max {
        for n in (3 * s + 4)..=n_max {
            let r = (n + s) / (s + 1);
            for t in 1..=3.min(r - 3) {
                let k_hi = (r + s - t - 1).min(s + 8);
                for k0 in (s + 2)..=k_hi {
                    total += 1;
                    let c = checks::lemma3_derivatives(
                        f64::from(n),
                        f64::from(s),
                        f64::from(k0),
                        f64::from(t),
                    );
                    if !(c.fd_consistent() && c.separated(margin)) {
                        failures.push(AuditFailure {
                            parameters: format!("n={n} s={s} t={t} k0={k0}"),
                            lhs: format!("{} (fd {})", c.lhs, c.lhs_fd),
                            rhs: format!("{} (fd {})", c.rhs, c.rhs_fd),
                        });
                    }
                }
            }
        }
    }
    report(
        "lemma3",
        format!(
            "derivative separation with finite-difference cross-checks for \
             2 <= s <= {s_max}, 3s+4 <= n <= {n_max}, t <= min(3, r-3), \
             k0 in [s+2, min(r+s-t-1, s+8)]"
        ),
        total,
        failures,
    )
}
