//! The `tvlct` binary: exit codes, JSON reports and schema diagnostics.

mod common;

use std::path::PathBuf;
use std::process::{Command, Output};

use common::fixture_path;
use tvlct::cli::Report;

fn tvlct(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tvlct")).args(args).output().expect("binary runs")
}

fn fixture(name: &str) -> String {
    fixture_path(name).display().to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

/// Writes `contents` to a file unique to this test process.
fn scratch(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("tvlct-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn tvar_check_reports_the_route() {
    let o = tvlct(&["tvar", "check", &fixture("bidegree12.json")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("Kähler–Einstein: certified  [three-non-reduced-fibers]"), "{out}");
    assert!(out.contains("non-reduced fibers: 3"), "{out}");

    let o = tvlct(&["tvar", "check", &fixture("quadric.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("Kähler–Einstein: inconclusive"));
}

#[test]
fn json_reports_round_trip() {
    let runs: [&[&str]; 6] = [
        &["tvar", "check", &fixture("quadric-blowup.json")],
        &["lct", &fixture("two-points.json")],
        &["valuable", &fixture("two-points.json")],
        &["git", "locus", &fixture("blowup-deform.json")],
        &["chow", &fixture("p2-fan.json")],
        &["lattice", "symmetric", &fixture("s3-lattice.json")],
    ];
    for args in runs {
        let mut full = vec!["--json"];
        full.extend_from_slice(args);
        let o = tvlct(&full);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stderr(&o));
        let text = stdout(&o);
        let report = Report::from_json(&text).unwrap();
        assert_eq!(report.report_version, 1);
        assert_eq!(report.to_json(), text.trim_end());
        assert_eq!(Report::from_json(&report.to_json()).unwrap(), report);
    }
}

#[test]
fn tvar_check_is_byte_deterministic() {
    for name in ["bidegree12.json", "quadric.json", "quadric-blowup.json", "p2-cstar.json"] {
        for json in [false, true] {
            let mut args = vec!["tvar", "check"];
            if json {
                args.insert(0, "--json");
            }
            let path = fixture(name);
            args.push(&path);
            let (a, b) = (tvlct(&args), tvlct(&args));
            assert_eq!(a.stdout, b.stdout, "{name}");
            assert_eq!(a.stderr, b.stderr, "{name}");
            assert_eq!(a.status.code(), b.status.code());
        }
    }
}

#[test]
fn git_locus_lists_supports_and_warns_on_the_stated_locus() {
    let o = tvlct(&["git", "locus", &fixture("hyp12-deform.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("polystable supports: [[],[\"alpha\",\"beta\",\"gamma\"]]"), "{}", stdout(&o));
    assert!(!stdout(&o).contains("warning"));

    let o = tvlct(&["--json", "git", "locus", &fixture("blowup-deform.json")]);
    let report = Report::from_json(&stdout(&o)).unwrap();
    assert_eq!(report.warnings.len(), 4);
    assert_eq!(report.verdict("agrees with the stated locus").unwrap().value, serde_json::json!(false));
}

#[test]
fn git_polystable_on_a_named_support() {
    let o = tvlct(&["--json", "git", "polystable", &fixture("blowup-deform.json"), "--support", "gamma,delta"]);
    assert_eq!(o.status.code(), Some(0));
    let report = Report::from_json(&stdout(&o)).unwrap();
    assert_eq!(report.verdict("polystable {gamma,delta}").unwrap().value, serde_json::json!(true));

    let o = tvlct(&["git", "polystable", &fixture("blowup-deform.json"), "--support", "alpha,epsilon"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn exit_codes_partition_outcomes() {
    assert_eq!(tvlct(&["tvar", "check", &fixture("p2-cstar.json")]).status.code(), Some(3));
    assert_eq!(tvlct(&["tvar", "check", "/nonexistent/file.json"]).status.code(), Some(1));
    assert_eq!(tvlct(&["--group-cap", "2", "tvar", "check", &fixture("bidegree12.json")]).status.code(), Some(2));
    assert_eq!(tvlct(&["--pattern-cap", "1", "chow", &fixture("p2-fan.json")]).status.code(), Some(2));
    let broken = scratch("broken.json", "{ not json");
    assert_eq!(tvlct(&["lct", broken.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn json_errors_are_machine_readable() {
    let o = tvlct(&["--json", "tvar", "check", &fixture("p2-cstar.json")]);
    assert_eq!(o.status.code(), Some(3));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v.is_object());
}

#[test]
fn validate_accepts_fixtures_and_names_paths() {
    let o = tvlct(&["validate", &fixture("bidegree12.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("OK"));

    let text = std::fs::read_to_string(fixture_path("quadric.json")).unwrap();
    let dup = scratch("dup.json", &text.replace("\"v2\"", "\"u1\""));
    let o = tvlct(&["validate", dup.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let err = stderr(&o);
    assert!(err.contains("fibers[1].divisors[1].name"), "{err}");

    let zero = scratch("zero.json", &text.replace("\"order\": 2", "\"order\": 0"));
    let o = tvlct(&["validate", zero.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let err = stderr(&o);
    assert!(err.contains("fibers[2].divisors[0].order") && err.contains("order must be ≥ 1"), "{err}");
}

#[test]
fn selftest_passes_with_a_fixed_seed() {
    let o = tvlct(&["selftest", "--seed", "7", "--cases", "50"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}
