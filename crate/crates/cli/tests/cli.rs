use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use qcurves_cli::{run, take_coverage, Fixture, Report, Status, Suite, DEFAULT_FIXTURE};

fn qcurves(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcurves"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    fs::read_to_string(path).expect("golden file")
}

fn scratch(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

#[test]
fn all_passes_as_json() {
    let out = qcurves(&["all", "--format", "json"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );
    let report: Report = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report.suite, "all");
    assert_eq!(report.status, Status::Pass);
    assert!(report.items.iter().all(|i| i.status == Status::Pass));
    for s in Suite::EACH {
        let prefix = format!("{}.", s.name());
        assert!(
            report.items.iter().any(|i| i.name.starts_with(&prefix)),
            "no items for {prefix}"
        );
    }
}

#[test]
fn json_schema_is_stable() {
    let out = qcurves(&["example", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["items", "status", "suite"]);
    let item = v["items"][0].as_object().unwrap();
    let keys: Vec<&String> = item.keys().collect();
    assert_eq!(
        keys,
        ["computed", "expected", "name", "paper_ref", "status"]
    );
}

#[test]
fn tables_markdown_golden() {
    let out = qcurves(&["tables", "--format", "md"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), golden("tables.md"));
}

#[test]
fn poincare_json_golden() {
    let out = qcurves(&["poincare", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        golden("poincare.json")
    );
}

#[test]
fn corrupted_fixture_fails() {
    let bad = DEFAULT_FIXTURE.replacen(
        "expected = \"1+t^2+t^4+t^6\"",
        "expected = \"1+t^2+t^4\"",
        1,
    );
    assert_ne!(bad, DEFAULT_FIXTURE);
    let path = scratch("corrupted.toml");
    fs::write(&path, bad).unwrap();
    let out = qcurves(&[
        "all",
        "--format",
        "json",
        "--expected",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let report: Report = serde_json::from_slice(&out.stdout).unwrap();
    let failed: Vec<&str> = report
        .items
        .iter()
        .filter(|i| i.status == Status::Fail)
        .map(|i| i.name.as_str())
        .collect();
    assert_eq!(failed, ["poincare.S1"]);
}

#[test]
fn fail_fast_stops_at_first_failure() {
    let bad = DEFAULT_FIXTURE.replacen("expected = \"4,2,0,0,-2,-4\"", "expected = \"4,2,0\"", 1);
    let path = scratch("fail_fast.toml");
    fs::write(&path, bad).unwrap();
    let out = qcurves(&[
        "all",
        "--format",
        "json",
        "--fail-fast",
        "--expected",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let report: Report = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report.items.len(), 1);
    assert_eq!(report.items[0].name, "lines.weights of W");
}

#[test]
fn missing_fixture_entry_fails() {
    let mut f = Fixture::embedded();
    f.example.pop();
    let r = run(Suite::Example, &f, false);
    assert_eq!(r.status, Status::Fail);
    assert_eq!(r.items.last().unwrap().expected, "(no expected value)");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(qcurves(&["bogus"]).status.code(), Some(2));
    assert_eq!(
        qcurves(&["lines", "--format", "xml"]).status.code(),
        Some(2)
    );
    assert_eq!(qcurves(&[]).status.code(), Some(2));
    assert_eq!(
        qcurves(&["ring", "--expected", "/nonexistent/expected.toml"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn out_flag_writes_file() {
    let path = scratch("ring.md");
    let _ = fs::remove_file(&path);
    let out = qcurves(&["ring", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("# ring\n"));
    assert!(text.contains("| Hilbert series | 1,2,4,5,6,6,5,4,2,1 |"));
    assert!(text.ends_with("status: pass\n"));
}

#[test]
fn all_covers_every_operation() {
    take_coverage();
    let r = run(Suite::All, &Fixture::embedded(), false);
    assert!(r.passed());
    let covered = take_coverage();
    let ops = [
        "poly_eval_substitute",
        "hilbert_dim",
        "symd_basis",
        "sl2_operator",
        "induced_basis",
        "wedge2_operator_action",
        "invariant_hyperplane",
        "klein_form",
        "on_quadric",
        "fixed_points",
        "fixed_lines",
        "fixed_conics",
        "incidence_graph",
        "count_invariant_cubics",
        "verify_twisted_cubic_family",
        "scroll_fixed_families",
        "catalecticant_check",
        "line_tangent_row",
        "conic_tangent_row",
        "bb_poincare",
        "euler_characteristic",
        "zero_weight_chain",
        "gr24_relations",
        "bundle_rank_arithmetic",
        "grothendieck_relation",
        "hilbert_series_s3",
        "poincare_s3_from_bundle",
    ];
    let missing: Vec<&str> = ops
        .iter()
        .copied()
        .filter(|op| !covered.contains(op))
        .collect();
    assert!(missing.is_empty(), "not exercised: {missing:?}");
}
