//! Acceptance gate for the whole library: nine criteria covering figure
//! reproduction, tradeoff constants, identity suites, limit-function
//! properties, and kernel equivalence.
//!
//! Each test evaluates one criterion over its full stated input range,
//! prints exactly one `criterion N: PASS/FAIL — ...` line (visible with
//! `cargo test -- --nocapture`), and then asserts. Every tolerance is pinned
//! as a named constant next to the criterion that uses it.

use std::sync::LazyLock;

use charcorr::asymptotics::{
    appended_limit_coefficients, limit_cdf_fg, limit_df_legendre_rational, omega,
    optimum_constants,
};
use charcorr::checks::{all_passed, run_all, CheckOutcome};
use charcorr::correlation::ExactRatio;
use charcorr::figures::{
    fractional_length_rows, quartic_legendre_rows, quartic_pair_rows, FractionalLengthRow,
    MixedPairRow, ParameterChoice, QuarticPairRow,
};

/// Largest prime (exclusive) in the pair figures under test.
const P_MAX: u64 = 2000;
/// Prime floor (exclusive) for the asymptote-tracking criteria: below it the
/// sequences are short enough that finite-size scatter dominates.
const P_FLOOR: u64 = 250;

static CHECKS: LazyLock<Vec<CheckOutcome>> = LazyLock::new(run_all);
static NATURAL_QUARTIC: LazyLock<Vec<QuarticPairRow>> = LazyLock::new(|| {
    quartic_pair_rows(P_MAX, ParameterChoice::Natural).expect("natural quartic pair rows")
});
static NATURAL_MIXED: LazyLock<Vec<MixedPairRow>> = LazyLock::new(|| {
    quartic_legendre_rows(P_MAX, ParameterChoice::Natural).expect("natural mixed rows")
});
static APPENDED_QUARTIC: LazyLock<Vec<QuarticPairRow>> = LazyLock::new(|| {
    quartic_pair_rows(P_MAX, ParameterChoice::Appended).expect("appended quartic pair rows")
});
static FRACTIONAL: LazyLock<Vec<FractionalLengthRow>> =
    LazyLock::new(|| fractional_length_rows(100).expect("fractional-length rows"));

fn report(criterion: &str, passed: bool, detail: &str) {
    println!("criterion {criterion}: {} — {detail}", if passed { "PASS" } else { "FAIL" });
}

fn median(deviations: &mut [f64]) -> f64 {
    assert!(!deviations.is_empty());
    deviations.sort_by(|a, b| a.total_cmp(b));
    let n = deviations.len();
    if n % 2 == 1 {
        deviations[n / 2]
    } else {
        (deviations[n / 2 - 1] + deviations[n / 2]) / 2.0
    }
}

fn find_check(name: &str) -> &'static CheckOutcome {
    CHECKS.iter().find(|o| o.name == name).unwrap_or_else(|| panic!("missing check {name}"))
}

/// Criterion 1: natural-length quartic pair rows track the limiting values,
/// demerit factor within [`NATURAL_PAIR_TOL`] of `1/2 − cos(2γ)/3` and
/// crosscorrelation demerit factor within the same tolerance of
/// `2/3 + cos(2γ)/3`, with median absolute deviation at most [`MEDIAN_TOL`].
#[test]
fn acceptance_1_natural_quartic_pair_tracks_asymptotes() {
    /// Pointwise gate on each prime's deviation from the limit.
    const NATURAL_PAIR_TOL: f64 = 0.06;
    /// Gate on the median absolute deviation over the whole range.
    const MEDIAN_TOL: f64 = 0.02;

    let rows: Vec<&QuarticPairRow> =
        NATURAL_QUARTIC.iter().filter(|r| P_FLOOR < r.p && r.p < P_MAX).collect();
    assert!(!rows.is_empty(), "no primes in ({P_FLOOR}, {P_MAX})");
    let mut df_devs = Vec::new();
    let mut cdf_devs = Vec::new();
    for row in &rows {
        let c = row.cos_two_gamma;
        df_devs.push((row.df_f - (0.5 - c / 3.0)).abs());
        cdf_devs.push((row.cdf_fg - (2.0 / 3.0 + c / 3.0)).abs());
    }
    let worst_df = df_devs.iter().cloned().fold(0.0f64, f64::max);
    let worst_cdf = cdf_devs.iter().cloned().fold(0.0f64, f64::max);
    let median_df = median(&mut df_devs);
    let median_cdf = median(&mut cdf_devs);
    let passed = worst_df <= NATURAL_PAIR_TOL
        && worst_cdf <= NATURAL_PAIR_TOL
        && median_df <= MEDIAN_TOL
        && median_cdf <= MEDIAN_TOL;
    report(
        "1",
        passed,
        &format!(
            "natural pair vs limits over {} primes in ({P_FLOOR}, {P_MAX}): worst df dev {worst_df:.4}, worst cdf dev {worst_cdf:.4} (gate {NATURAL_PAIR_TOL}), medians {median_df:.4}/{median_cdf:.4} (gate {MEDIAN_TOL})",
            rows.len()
        ),
    );
    assert!(passed);
}

/// Criterion 2: natural-length quartic/Legendre rows — the Legendre demerit
/// factor stays within [`LEGENDRE_DF_TOL`] of `1/6` and the mixed
/// crosscorrelation demerit factor within [`MIXED_CDF_TOL`] of `1`.
///
/// Known to fail: the exact data exceeds the crosscorrelation gate at four
/// short-sequence primes — 257, 277, 281, and 337 — with worst deviation
/// 0.097277 at p = 277 (exact value 84193/76729, confirmed against an
/// independent exact-rational oracle). Every other prime in the range
/// satisfies the gate, and the deviations decay roughly like 1.6/√p. The
/// gate is pinned rather than loosened, so this criterion reports FAIL
/// until it is recalibrated.
#[test]
fn acceptance_2_natural_mixed_pair_tracks_asymptotes() {
    /// Pointwise gate on the Legendre demerit-factor deviation from 1/6.
    const LEGENDRE_DF_TOL: f64 = 0.05;
    /// Pointwise gate on the mixed crosscorrelation deviation from 1.
    const MIXED_CDF_TOL: f64 = 0.08;

    let rows: Vec<&MixedPairRow> =
        NATURAL_MIXED.iter().filter(|r| P_FLOOR < r.p && r.p < P_MAX).collect();
    assert!(!rows.is_empty());
    let worst_df = rows
        .iter()
        .map(|r| (r.df_h - 1.0 / 6.0).abs())
        .fold(0.0f64, f64::max);
    let worst_cdf = rows.iter().map(|r| (r.cdf_fh - 1.0).abs()).fold(0.0f64, f64::max);
    let passed = worst_df <= LEGENDRE_DF_TOL && worst_cdf <= MIXED_CDF_TOL;
    report(
        "2",
        passed,
        &format!(
            "natural mixed pair over {} primes: worst |df_h - 1/6| = {worst_df:.4} (gate {LEGENDRE_DF_TOL}), worst |cdf_fh - 1| = {worst_cdf:.4} (gate {MIXED_CDF_TOL})",
            rows.len()
        ),
    );
    assert!(passed);
}

/// Criterion 3: appended-length quartic pair rows track the angle-split
/// limits `0.510286 − 0.352609·cos(2γ)` (demerit factor) and
/// `0.653368 + 0.352609·cos(2γ)` (crosscorrelation) within
/// [`APPENDED_PAIR_TOL`].
#[test]
fn acceptance_3_appended_quartic_pair_tracks_asymptotes() {
    /// Pointwise gate on each prime's deviation from the appended limits.
    const APPENDED_PAIR_TOL: f64 = 0.07;
    /// Six-decimal limit coefficients used as the published targets.
    const DF_CONSTANT: f64 = 0.510286;
    const CDF_CONSTANT: f64 = 0.653368;
    const COS_COEFFICIENT: f64 = 0.352609;

    // The six-decimal targets must themselves match the computed coefficients.
    let coefficients = appended_limit_coefficients().expect("appended limit coefficients");
    assert!((coefficients.df_constant - DF_CONSTANT).abs() < 1e-6);
    assert!((coefficients.cdf_constant - CDF_CONSTANT).abs() < 1e-6);
    assert!((coefficients.cos_coefficient - COS_COEFFICIENT).abs() < 1e-6);

    let rows: Vec<&QuarticPairRow> =
        APPENDED_QUARTIC.iter().filter(|r| P_FLOOR < r.p && r.p < P_MAX).collect();
    assert!(!rows.is_empty());
    let worst_df = rows
        .iter()
        .map(|r| (r.df_f - (DF_CONSTANT - COS_COEFFICIENT * r.cos_two_gamma)).abs())
        .fold(0.0f64, f64::max);
    let worst_cdf = rows
        .iter()
        .map(|r| (r.cdf_fg - (CDF_CONSTANT + COS_COEFFICIENT * r.cos_two_gamma)).abs())
        .fold(0.0f64, f64::max);
    let passed = worst_df <= APPENDED_PAIR_TOL && worst_cdf <= APPENDED_PAIR_TOL;
    report(
        "3",
        passed,
        &format!(
            "appended pair vs angle-split limits over {} primes: worst df dev {worst_df:.4}, worst cdf dev {worst_cdf:.4} (gate {APPENDED_PAIR_TOL})",
            rows.len()
        ),
    );
    assert!(passed);
}

/// Criterion 4: the combined tradeoff criterion of the natural-length pair
/// stays within [`PSC_TOL`] of its limiting value `7/6` for
/// `500 < p < 2000`.
#[test]
fn acceptance_4_natural_pair_tradeoff_criterion() {
    /// Pointwise gate on the tradeoff-criterion deviation from 7/6.
    const PSC_TOL: f64 = 0.06;
    /// Prime floor (exclusive) for this criterion.
    const PSC_P_FLOOR: u64 = 500;

    let rows: Vec<&QuarticPairRow> =
        NATURAL_QUARTIC.iter().filter(|r| PSC_P_FLOOR < r.p && r.p < P_MAX).collect();
    assert!(!rows.is_empty());
    let worst = rows.iter().map(|r| (r.psc() - 7.0 / 6.0).abs()).fold(0.0f64, f64::max);
    let passed = worst <= PSC_TOL;
    report(
        "4",
        passed,
        &format!(
            "tradeoff criterion vs 7/6 over {} primes in ({PSC_P_FLOOR}, {P_MAX}): worst dev {worst:.4} (gate {PSC_TOL})",
            rows.len()
        ),
    );
    assert!(passed);
}

/// Criterion 5: the fractional-length sweep follows the limiting curve
/// `−2(k/10)/3 + Ω(10/k, 0)` within [`CURVE_TOL`] for `k ≥ 10`, and the
/// final point (`k = 100`, length ratio 10) drops below [`ENDPOINT_CAP`].
#[test]
fn acceptance_5_fractional_length_sweep_follows_curve() {
    /// Pointwise gate on the deviation from the limiting curve for k ≥ 10.
    const CURVE_TOL: f64 = 0.05;
    /// Cap on the measured crosscorrelation demerit factor at k = 100.
    const ENDPOINT_CAP: f64 = 0.10;

    assert_eq!(FRACTIONAL.len(), 100);
    let mut worst = 0.0f64;
    for row in FRACTIONAL.iter().filter(|r| r.k >= 10) {
        let ratio = row.k as f64 / 10.0;
        let curve = -2.0 * ratio / 3.0 + omega(10.0 / row.k as f64, 0.0).expect("omega");
        worst = worst.max((row.cdf - curve).abs());
    }
    let last = FRACTIONAL.last().expect("row k = 100");
    assert_eq!(last.k, 100);
    let passed = worst <= CURVE_TOL && last.cdf <= ENDPOINT_CAP;
    report(
        "5",
        passed,
        &format!(
            "fractional-length sweep: worst curve dev {worst:.4} for k ≥ 10 (gate {CURVE_TOL}); cdf at k=100 is {:.4} (cap {ENDPOINT_CAP}, p = {})",
            last.cdf, last.p
        ),
    );
    assert!(passed);
}

/// Criterion 6: every identity suite passes at its pinned tolerance, and the
/// named core identities run at exactly the tolerances promised here.
#[test]
fn acceptance_6_identity_suites_pass() {
    /// (suite, tolerance) pairs this criterion promises.
    const NAMED_TOLERANCES: [(&str, f64); 9] = [
        ("periodic_mean_square_bridge", 1e-6),
        ("quadruple_sum_identities", 1e-8),
        ("gauss_sum_magnitude_conjugation", 1e-6),
        ("additive_fourier_expansion", 1e-8),
        ("coset_intersection_parameters", 1e-9),
        ("residue_class_reconstruction", 1e-9),
        ("periodic_parseval", 1e-6),
        ("window_zero_counts", 0.0),
        ("pursley_sarwate_bound", 1e-9),
    ];

    let mut passed = all_passed(&CHECKS);
    for (name, tolerance) in NAMED_TOLERANCES {
        let outcome = find_check(name);
        passed &= outcome.passed && outcome.tolerance == tolerance;
    }
    let failures: Vec<&str> =
        CHECKS.iter().filter(|o| !o.passed).map(|o| o.name).collect();
    report(
        "6",
        passed,
        &format!(
            "{} identity suites, all at pinned tolerances; failures: {:?}",
            CHECKS.len(),
            failures
        ),
    );
    assert!(passed, "failing suites: {failures:?}");
}

/// Criterion 7: the tradeoff constants print as `0.157677`, `6.342061`, and
/// `1.057827` at six truncated decimals; the rational limit at unit length
/// ratio and quarter shift is exactly `1/6`; and the crosscorrelation limit
/// at unit length ratio and angle `π/2` is `1/3` within [`LIMIT_TOL`].
#[test]
fn acceptance_7_constants_and_special_values() {
    /// Float gate on the crosscorrelation limit special value.
    const LIMIT_TOL: f64 = 1e-12;

    /// First six decimals of `x`, truncated (not rounded).
    fn truncated_6(x: f64) -> i64 {
        (x * 1e6).floor() as i64
    }

    let constants = optimum_constants();
    let df_ok = truncated_6(constants.df_min) == 157_677;
    let mf_ok = truncated_6(constants.mf_max) == 6_342_061;
    let lambda_ok = truncated_6(constants.lambda_app) == 1_057_827;

    let sixth = limit_df_legendre_rational(ExactRatio::new(1, 1), ExactRatio::new(1, 4))
        .expect("rational limit");
    let rational_ok = sixth == ExactRatio::new(1, 6);

    let angle = std::f64::consts::FRAC_PI_2;
    let unit_cdf = limit_cdf_fg(1.0, (2.0 * angle).cos()).expect("crosscorrelation limit");
    let cdf_ok = (unit_cdf - 1.0 / 3.0).abs() <= LIMIT_TOL;

    let passed = df_ok && mf_ok && lambda_ok && rational_ok && cdf_ok;
    report(
        "7",
        passed,
        &format!(
            "df_min={:.6}, mf_max={:.6}, lambda_app={:.6} (truncated); rational limit {}; unit-ratio crosscorrelation limit {unit_cdf:.15}",
            (constants.df_min * 1e6).floor() / 1e6,
            (constants.mf_max * 1e6).floor() / 1e6,
            (constants.lambda_app * 1e6).floor() / 1e6,
            sixth
        ),
    );
    assert!(passed);
}

/// Criterion 8: window-sum properties — closed forms agree with the direct
/// sum at 1e−10, both sampled bounds hold, and the sampled minimum of the
/// limiting demerit factor never undercuts the proven minimum by more than
/// [`MINIMUM_SLACK`].
#[test]
fn acceptance_8_window_sum_properties() {
    /// Allowed undershoot of the sampled minimum below the proven one.
    const MINIMUM_SLACK: f64 = 1e-9;
    /// Agreement gate between closed forms and the direct window sum.
    const CLOSED_FORM_TOL: f64 = 1e-10;

    let closed = find_check("omega_closed_forms");
    let bound_grid = find_check("omega_bound_grid");
    let half_bound = find_check("omega_half_offset_bound");
    let decay = find_check("omega_zero_offset_decay");
    let minimum = find_check("sampled_limit_minimum");
    let passed = closed.passed
        && closed.tolerance == CLOSED_FORM_TOL
        && bound_grid.passed
        && half_bound.passed
        && decay.passed
        && minimum.passed
        && minimum.tolerance == MINIMUM_SLACK;
    report(
        "8",
        passed,
        &format!(
            "closed forms at {CLOSED_FORM_TOL:.0e} (worst {:.2e}); bounds hold; {}",
            closed.max_residual, minimum.detail
        ),
    );
    assert!(passed);
}

/// Criterion 9: the transform-based correlation kernel agrees exactly, as
/// integers, with direct summation on every family sequence tested at
/// lengths up to the dispatch crossover (4096).
#[test]
fn acceptance_9_kernel_equivalence() {
    let outcome = find_check("kernel_agreement");
    let passed = outcome.passed && outcome.tolerance == 0.0;
    report("9", passed, &outcome.detail);
    assert!(passed);
}
