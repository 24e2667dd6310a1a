//! End-to-end tests of the `charcorr` binary: dataset regeneration contracts
//! (row counts, ordering, determinism, formatting), the pair report in both
//! output modes, the verification subcommand, the constants table, and the
//! exit-code conventions.
//!
//! The fractional-length dataset (`figure cecilia`) is exercised at the
//! library level (dataset oracle tests and the acceptance suite): its final
//! row needs a length-7,464,970 correlation, and regenerating the whole
//! dataset here would repeat a ~40-second computation for no new coverage.

use std::path::Path;
use std::process::{Command, Output};

fn charcorr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_charcorr"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(output: &Output) -> &str {
    std::str::from_utf8(&output.stdout).expect("utf-8 stdout")
}

fn stderr_of(output: &Output) -> &str {
    std::str::from_utf8(&output.stderr).expect("utf-8 stderr")
}

/// Primes p ≡ 1 (mod 4) with 13 ≤ p < limit, by trial division.
fn sweep_primes(limit: u64) -> Vec<u64> {
    (13..limit)
        .filter(|&n| n % 4 == 1 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0))
        .collect()
}

#[test]
fn figure_row_count_matches_prime_count() {
    for (name, pmax) in [("aaron", 100u64), ("edward", 100), ("boris", 150), ("edith", 150)] {
        let output = charcorr(&["figure", name, "--pmax", &pmax.to_string()]);
        assert!(output.status.success(), "{name}: {}", stderr_of(&output));
        let text = stdout_of(&output);
        let lines: Vec<&str> = text.lines().collect();
        let expected = sweep_primes(pmax);
        assert_eq!(lines.len(), expected.len() + 1, "{name}: header + one row per prime");
        assert!(text.ends_with('\n'), "{name}: trailing newline");
        assert!(!text.contains('\r'), "{name}: LF line endings only");
        let primes: Vec<u64> = lines[1..]
            .iter()
            .map(|l| l.split(',').next().unwrap().parse().unwrap())
            .collect();
        assert_eq!(primes, expected, "{name}: ascending primes starting at 13");
    }
}

#[test]
fn figure_headers_match_column_layout() {
    let quartic = "p,cos2gamma,df_f,df_g,cdf_fg,asym_df,asym_cdf";
    let mixed = "p,cos2gamma,df_f,df_h,cdf_fh,asym_df_f,asym_df_h,asym_cdf";
    for (name, header) in
        [("aaron", quartic), ("boris", quartic), ("edward", mixed), ("edith", mixed)]
    {
        let output = charcorr(&["figure", name, "--pmax", "40"]);
        assert!(output.status.success());
        assert_eq!(stdout_of(&output).lines().next().unwrap(), header, "{name}");
    }
}

#[test]
fn figure_output_is_deterministic_and_jobs_independent() {
    let first = charcorr(&["figure", "aaron", "--pmax", "200"]);
    let second = charcorr(&["figure", "aaron", "--pmax", "200"]);
    let serial = charcorr(&["figure", "aaron", "--pmax", "200", "--jobs", "1"]);
    let parallel = charcorr(&["figure", "aaron", "--pmax", "200", "--jobs", "3"]);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout, "same invocation, same bytes");
    assert_eq!(first.stdout, serial.stdout, "--jobs 1 changes nothing");
    assert_eq!(first.stdout, parallel.stdout, "--jobs 3 changes nothing");
}

#[test]
fn figure_out_file_matches_stdout() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("rows.csv");
    let to_file = charcorr(&["figure", "edward", "--pmax", "60", "--out", path.to_str().unwrap()]);
    assert!(to_file.status.success());
    assert!(to_file.stdout.is_empty(), "--out writes the file, not stdout");
    let from_file = std::fs::read(&path).expect("written file");
    let to_stdout = charcorr(&["figure", "edward", "--pmax", "60"]);
    assert_eq!(from_file, to_stdout.stdout);
}

#[test]
fn figure_unwritable_out_is_a_failure_not_a_usage_error() {
    let missing = Path::new("/nonexistent-dir/rows.csv");
    let output = charcorr(&["figure", "aaron", "--pmax", "40", "--out", missing.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(1));
    assert!(stderr_of(&output).contains("error"));
}

#[test]
fn appended_mixed_asymptote_column_is_constant() {
    let output = charcorr(&["figure", "edith", "--pmax", "100"]);
    assert!(output.status.success());
    let values: Vec<&str> = stdout_of(&output)
        .lines()
        .skip(1)
        .map(|l| l.split(',').next_back().unwrap())
        .collect();
    assert!(!values.is_empty());
    assert!(values.iter().all(|&v| v == values[0]), "one shared limit value");
    let limit: f64 = values[0].parse().unwrap();
    assert!((limit - 1.005976885).abs() < 1e-8);
}

#[test]
fn natural_and_appended_quartic_asymptotes_differ() {
    let natural = charcorr(&["figure", "aaron", "--pmax", "40"]);
    let appended = charcorr(&["figure", "boris", "--pmax", "40"]);
    let get = |out: &Output| -> Vec<String> {
        stdout_of(out).lines().skip(1).map(|l| l.split(',').nth(5).unwrap().to_string()).collect()
    };
    assert!(natural.status.success() && appended.status.success());
    assert_ne!(get(&natural), get(&appended), "different parameter choices, different limits");
}

#[test]
fn pair_text_report_shows_both_parameter_routes() {
    let output = charcorr(&["pair", "--p", "13", "--left", "f", "--right", "g"]);
    assert!(output.status.success());
    let text = stdout_of(&output);
    assert!(text.contains("window: natural (shift=3, length=13)"));
    assert!(text.contains("pair parameters (defining route):"));
    assert!(text.contains("pair parameters (family table):"));
    // Quartic pair at natural parameters: no swapped or conjugate component.
    let table = text.split("family table").nth(1).unwrap();
    assert!(table.contains("u         0\n"));
    assert!(table.contains("v         0\n"));
    assert!(text.contains("periodic mean-square bridge residual"));
}

#[test]
fn pair_legendre_autocorrelation_parameters() {
    let output = charcorr(&["pair", "--p", "13", "--left", "h", "--right", "h"]);
    assert!(output.status.success());
    let text = stdout_of(&output);
    assert!(text.contains("s         -2.00000000"), "full-period parameter s = -2");
    assert!(text.contains("u         1.00000000"));
}

#[test]
fn pair_json_report_is_machine_readable() {
    let output =
        charcorr(&["pair", "--p", "13", "--left", "f", "--right", "g", "--json"]);
    assert!(output.status.success());
    let report: serde_json::Value = serde_json::from_str(stdout_of(&output)).expect("valid json");
    assert_eq!(report["p"], 13);
    assert_eq!(report["left"], "f");
    assert_eq!(report["shift"], 3);
    assert_eq!(report["length"], 13);
    // Exact enumeration gives CDF(f, g) = 157/169 at p = 13.
    let cdf = report["merit"]["cdf"].as_f64().unwrap();
    assert!((cdf - 157.0 / 169.0).abs() < 1e-12);
    assert_eq!(report["parameters_table"]["u"].as_f64(), Some(0.0));
    assert!(report["periodic_bridge_residual"].as_f64().unwrap() < 1e-12);
}

#[test]
fn pair_window_modes_resolve_parameters() {
    let appended = charcorr(&["pair", "--p", "29", "--left", "f", "--right", "h", "--appended"]);
    assert!(appended.status.success());
    assert!(stdout_of(&appended).contains("window: appended (shift=6, length=31)"));

    let explicit = charcorr(&[
        "pair", "--p", "7", "--left", "h", "--right", "h", "--shift", "-2", "--length", "9",
    ]);
    assert!(explicit.status.success(), "{}", stderr_of(&explicit));
    assert!(stdout_of(&explicit).contains("window: explicit (shift=-2, length=9)"));
}

#[test]
fn usage_errors_exit_2() {
    let cases: &[&[&str]] = &[
        &["figure", "unknown-name"],
        &["figure", "aaron", "--pmax", "5"],
        &["figure", "aaron", "--jobs", "0"],
        &["pair", "--p", "15", "--left", "f", "--right", "g"],
        &["pair", "--p", "7", "--left", "f", "--right", "g", "--shift", "1", "--length", "7"],
        &["pair", "--p", "7", "--left", "h", "--right", "h"],
        &["pair", "--p", "13", "--left", "f", "--right", "g", "--shift", "1"],
        &["pair", "--p", "13", "--left", "f", "--right", "g", "--natural", "--appended"],
        &["pair", "--p", "13", "--left", "f", "--right", "g", "--shift", "0", "--length", "0"],
    ];
    for args in cases {
        let output = charcorr(args);
        assert_eq!(output.status.code(), Some(2), "args {args:?}: {}", stderr_of(&output));
    }
}

#[test]
fn verify_passes_deterministically() {
    let first = charcorr(&["verify"]);
    assert_eq!(first.status.code(), Some(0), "{}", stderr_of(&first));
    let text = stdout_of(&first);
    assert!(text.contains("27 suites run, 27 passed, 0 failed"));
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS ")).count(), 27);
    assert!(!text.contains("FAIL"));
    let second = charcorr(&["verify"]);
    assert_eq!(first.stdout, second.stdout, "byte-identical summary run to run");
}

#[test]
fn constants_table_prints_expected_values() {
    let output = charcorr(&["constants"]);
    assert!(output.status.success());
    let text = stdout_of(&output);
    for (name, value) in [
        ("df_min", "0.15767743"),
        ("mf_max", "6.3420617"),
        ("lambda_app", "1.0578279"),
        ("psc_natural", "1.1666667"),
        ("psc_appended", "1.1636543"),
        ("appended_df_constant", "0.51028673"),
        ("appended_cdf_constant", "0.65336758"),
        ("appended_cos_coefficient", "0.35260930"),
    ] {
        let line = text.lines().find(|l| l.starts_with(name)).unwrap_or_else(|| {
            panic!("missing row {name}");
        });
        assert!(line.contains(value), "row {name}: {line}");
    }
    let second = charcorr(&["constants"]);
    assert_eq!(output.stdout, second.stdout);
}

#[test]
fn help_documents_the_prime_floor() {
    let output = charcorr(&["figure", "--help"]);
    assert!(output.status.success());
    let text = stdout_of(&output);
    assert!(text.contains("13 ≤ p < pmax"));
    assert!(text.contains("smallest included prime is 13"));
}
