//! End-to-end checks of every advertised guarantee, one test per
//! guarantee.  Each test prints a single `acceptance pass:` line with the
//! quantities it covered; any failure carries the first counterexample.

mod common;

use std::time::Instant;

use hilbert_depth::audit::checks::prop1_sides;
use hilbert_depth::audit::gamma::digamma;
use hilbert_depth::audit::grids::{
    eq14_grid, eq15_grid, eq19_grid, eq7_grid, lemma1_grid, lemma4_grid, lemma5_grid, prop0_grid,
    prop1_grid, syzygy_grid,
};
use hilbert_depth::audit::{AuditReport, DEFAULT_SEED};
use hilbert_depth::{
    decompose, hdepth_power_closed_form, hdepth_via_multiplication, hdepth_via_numerator,
    power_ideal_series, verify_decomposition, Int, PowerIdealParams, Series,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn power_series(n: u32, s: u32) -> Series {
    power_ideal_series(&PowerIdealParams::new(n, s))
}

/// The sweep the depth guarantees quantify over: every power ideal with
/// s <= 8 and n <= 120, extended along s = 1 out to n = 200.
fn sweep_inputs() -> Vec<(u32, u32, Series)> {
    let mut inputs = Vec::new();
    for s in 1..=8u32 {
        for n in 1..=120u32 {
            inputs.push((n, s, power_series(n, s)));
        }
    }
    for n in 121..=200u32 {
        inputs.push((n, 1, power_series(n, 1)));
    }
    inputs
}

fn assert_grid_passes(report: &AuditReport) {
    assert!(
        report.passed(),
        "{} failed at {} of {} points; first: {:?}",
        report.check_name,
        report.failures.len(),
        report.total_points,
        report.failures.first()
    );
    println!(
        "acceptance pass: {} holds at all {} grid points",
        report.check_name, report.total_points
    );
}

#[test]
fn power_ideal_depth_matches_the_ceiling_formula() {
    let start = Instant::now();
    let mut points = 0u64;
    for s in 1..=8u32 {
        for n in 1..=120u32 {
            let depth = hdepth_via_numerator(&power_series(n, s)).unwrap().hdepth;
            assert_eq!(
                depth,
                n.div_ceil(s + 1),
                "depth of the power ideal ({n}, {s})"
            );
            let params = PowerIdealParams::new(n, s);
            assert_eq!(
                depth,
                hdepth_power_closed_form(&params),
                "closed form at ({n}, {s})"
            );
            points += 1;
        }
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs() < 60,
        "sweep took {elapsed:?}, budget is 60 s"
    );
    println!(
        "acceptance pass: depth = ceil(n / (s + 1)) at {points} power ideals in {elapsed:.2?}"
    );
}

#[test]
fn maximal_ideal_depth_is_half_n_rounded_up() {
    for n in 1..=200u32 {
        let depth = hdepth_via_numerator(&power_series(n, 1)).unwrap().hdepth;
        assert_eq!(
            depth,
            n.div_ceil(2),
            "depth of the maximal ideal in {n} variables"
        );
    }
    println!("acceptance pass: maximal ideal depth = ceil(n / 2) for n up to 200");
}

#[test]
fn the_two_depth_routes_agree() {
    let mut checked = 0u64;
    for (n, s, series) in sweep_inputs() {
        let via_numerator = hdepth_via_numerator(&series).unwrap().hdepth;
        let via_multiplication = hdepth_via_multiplication(&series).unwrap();
        assert_eq!(
            via_numerator, via_multiplication,
            "routes disagree at ({n}, {s})"
        );
        checked += 1;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    for series in common::random_positive_batch(&mut rng, 500) {
        let via_numerator = hdepth_via_numerator(&series).unwrap().hdepth;
        let via_multiplication = hdepth_via_multiplication(&series).unwrap();
        assert_eq!(
            via_numerator,
            via_multiplication,
            "routes disagree on {} / (1 - T)^{}",
            series.numerator(),
            series.denom_exponent()
        );
        checked += 1;
    }
    println!("acceptance pass: both depth routes agree on {checked} series");
}

#[test]
fn decompositions_recombine_and_attain_the_depth() {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED + 1);
    let mut inputs = sweep_inputs()
        .into_iter()
        .map(|(_, _, q)| q)
        .collect::<Vec<_>>();
    inputs.extend(common::random_positive_batch(&mut rng, 200));
    let count = inputs.len();
    for series in inputs {
        let depth = hdepth_via_numerator(&series).unwrap().hdepth;
        let decomposition = decompose(&series).unwrap();
        let label = || {
            format!(
                "{} / (1 - T)^{}",
                series.numerator(),
                series.denom_exponent()
            )
        };
        assert!(
            verify_decomposition(&decomposition, &series),
            "recombination fails: {}",
            label()
        );
        assert_eq!(
            decomposition.min_level,
            depth,
            "level above the depth: {}",
            label()
        );
    }
    println!("acceptance pass: {count} decompositions verify and start at the depth");
}

#[test]
fn expanded_coefficients_match_the_convolution_oracle() {
    let start = Instant::now();
    let report = prop0_grid(20, 5);
    let elapsed = start.elapsed();
    assert_grid_passes(&report);
    assert!(
        elapsed.as_secs() < 10,
        "grid took {elapsed:?}, budget is 10 s"
    );
}

#[test]
fn alternating_binomial_sums_match_their_closed_forms() {
    assert_grid_passes(&lemma4_grid(12));
    assert_grid_passes(&syzygy_grid(10, 20));
}

#[test]
fn partial_binomial_sums_dominate_with_exact_ties() {
    let report = prop1_grid(150, 10);
    assert_grid_passes(&report);
    // Landmark tie: both sides count the same 20 at (n, s, k) = (7, 2, 3).
    let (lhs, rhs) = prop1_sides::<Int>(7, 2, 3);
    assert_eq!(lhs, Int::from(20));
    assert_eq!(rhs, Int::from(20));
}

#[test]
fn product_inequalities_hold_on_the_integer_grids() {
    assert_grid_passes(&lemma5_grid(400, 12));
    assert_grid_passes(&eq15_grid(400, 12));
    assert_grid_passes(&eq19_grid(50, 12));
}

#[test]
fn digamma_matches_closed_form_references() {
    const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
    let ln2 = std::f64::consts::LN_2;
    let psi_quarter = -EULER_GAMMA - std::f64::consts::FRAC_PI_2 - 3.0 * ln2;
    let shifted =
        |steps: u32| psi_quarter + (0..steps).map(|k| 1.0 / (0.25 + f64::from(k))).sum::<f64>();
    let references = [
        (1.0, -EULER_GAMMA),
        (2.0, 1.0 - EULER_GAMMA),
        (0.5, -EULER_GAMMA - 2.0 * ln2),
        (10.25, shifted(10)),
        // The same chain carried through all 40 terms, well past the
        // point where the asymptotic expansion takes over.
        (40.25, shifted(40)),
    ];
    for (x, reference) in references {
        let error = (digamma(x) - reference).abs();
        assert!(error <= 1e-10, "digamma({x}) off by {error:e}");
    }

    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    for _ in 0..10_000 {
        let x = rng.gen_range(1e-3..=50.0f64);
        let residual = (digamma(x + 1.0) - digamma(x) - 1.0 / x).abs();
        assert!(
            residual <= 1e-11,
            "recurrence residual {residual:e} at x = {x}"
        );
    }
    println!(
        "acceptance pass: digamma within 1e-10 of 5 references, recurrence within 1e-11 at 10000 points"
    );
}

#[test]
fn asymptotic_inequalities_hold_at_random_points() {
    assert_grid_passes(&lemma1_grid(10_000, 1e-9, DEFAULT_SEED));
    assert_grid_passes(&eq14_grid(10_000, 400, 12, 1e-9, DEFAULT_SEED));
    assert_grid_passes(&eq7_grid(1_000, 100, 1e-9, DEFAULT_SEED));
}
