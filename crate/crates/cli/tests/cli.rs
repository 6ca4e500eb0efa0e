//! End-to-end tests of the `knotvol` binary: exit codes, report contents,
//! determinism, and batch behaviour.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn knotvol(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_knotvol"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn json_report(args: &[&str], dir: &Path) -> (Value, Output) {
    let out = knotvol(args, dir);
    let v: Value = serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("stdout is json: {e}\n{}", String::from_utf8_lossy(&out.stdout)));
    (v, out)
}

#[test]
fn analyze_9_20_full_report() {
    let dir = tempfile::tempdir().unwrap();
    let (v, out) = json_report(
        &["analyze", "9_20", "--color3", "--format", "json"],
        dir.path(),
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(v["schema_version"], 1);
    let res = &v["prop31_residuals"];
    assert_eq!(res["identity1"], 0);
    assert_eq!(res["identity2"], 0);
    assert_eq!(res["identity3"], 0);
    assert_eq!(res["all_computed_zero"], true);
    let bounds = &v["bounds"];
    assert_eq!(bounds["adams"]["v3_multiple"], 20);
    assert_eq!(bounds["agol_thurston"]["v3_multiple"], 40);
    assert_eq!(bounds["refined"]["v3_multiple"], 21);
    assert_eq!(bounds["refined_delta"]["v3_multiple"], 19);
    assert_eq!(bounds["coefficient"]["v3_multiple"], 28);
    assert_eq!(bounds["volumish"]["v3_multiple"], 40);
    assert_eq!(bounds["best"]["v3_multiple"], 19);
    assert_eq!(v["delta"], 3);
    assert_eq!(v["twist"]["twist_number"], 5);
}

#[test]
fn analyze_figure_eight_slack() {
    let dir = tempfile::tempdir().unwrap();
    let (v, out) = json_report(&["analyze", "4_1", "--format", "json"], dir.path());
    assert!(out.status.success());
    assert_eq!(v["bounds"]["refined_delta"]["v3_multiple"], 4);
    let slack = v["slack"].as_f64().unwrap();
    let two_v3 = 2.0 * 1.0149416064096536;
    assert!((slack - two_v3).abs() < 1e-9, "slack {slack}");
    // Without --color3 the coefficient bound is explicitly unavailable.
    assert_eq!(v["bounds"]["coefficient"]["applicable"], false);
    assert_eq!(v["bounds"]["volumish"]["v3_multiple"], 10);
}

#[test]
fn torus_input_is_rejected_with_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    // A (2,5)-torus diagram as a PD file.
    let pd = "X 5 10 6 1\nX 1 6 2 7\nX 7 2 8 3\nX 3 8 4 9\nX 9 4 10 5\n";
    let path = dir.path().join("torus_2_5.pd");
    std::fs::write(&path, pd).unwrap();
    let out = knotvol(&["analyze", "torus_2_5.pd"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("torus gate"), "stderr: {stderr}");
}

#[test]
fn over_budget_color3_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let out = knotvol(
        &["analyze", "9_20", "--color3", "--max-crossings", "5"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(3));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("resource limit"), "stderr: {stderr}");
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["analyze", "9_20", "--color3", "--format", "json"];
    let a = knotvol(&args, dir.path());
    let b = knotvol(&args, dir.path());
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn analyze_csv_format_is_one_summary_row() {
    let dir = tempfile::tempdir().unwrap();
    let out = knotvol(&["analyze", "5_2", "--format", "csv"], dir.path());
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("name,crossings,status"));
    let row = lines.next().unwrap();
    assert!(row.starts_with("5_2,5,ok,2,"), "row: {row}");
}

#[test]
fn batch_over_bundled_table() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("reports");
    let out = knotvol(
        &[
            "batch",
            "--color3",
            "--max-crossings",
            "7",
            "--jobs",
            "2",
            "--out",
            out_dir.to_str().unwrap(),
        ],
        dir.path(),
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let summary = std::fs::read_to_string(out_dir.join("summary.csv")).unwrap();
    let lines: Vec<&str> = summary.lines().collect();
    assert_eq!(lines.len(), 21, "header + 20 rows");
    // Every hyperbolic row, and every computed residual, came out clean.
    for line in &lines[1..] {
        assert!(
            line.contains(",ok,") || line.contains(",rejected,"),
            "unexpected status: {line}"
        );
        if line.contains(",ok,") {
            assert!(line.contains(",true,"), "residuals not ok: {line}");
        }
    }
    // Per-knot reports exist for analyzable entries.
    assert!(out_dir.join("9_20.json").exists());
    assert!(out_dir.join("4_1.json").exists());
    // J(3) is computed only within the budget.
    let small: Value =
        serde_json::from_str(&std::fs::read_to_string(out_dir.join("6_2.json")).unwrap()).unwrap();
    assert!(small["polynomials"]["jones3"].is_object());
    let big: Value =
        serde_json::from_str(&std::fs::read_to_string(out_dir.join("9_20.json")).unwrap()).unwrap();
    assert!(big["polynomials"]["jones3"].is_null());
}

#[test]
fn batch_with_empty_table_is_fine() {
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("empty.csv");
    std::fs::write(&table, "name,crossings,pd,volume,provenance\n").unwrap();
    let out_dir = dir.path().join("reports");
    let out = knotvol(
        &[
            "batch",
            "--table",
            table.to_str().unwrap(),
            "--out",
            out_dir.to_str().unwrap(),
        ],
        dir.path(),
    );
    assert!(out.status.success());
    let summary = std::fs::read_to_string(out_dir.join("summary.csv")).unwrap();
    assert_eq!(summary.lines().count(), 1, "header only");
}

#[test]
fn batch_with_one_malformed_row_completes_and_flags_it() {
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("mixed.csv");
    std::fs::write(
        &table,
        "name,crossings,pd,volume,provenance\n\
         good,4,\"PD[X[3,8,4,1],X[7,4,8,5],X[1,7,2,6],X[5,3,6,2]]\",,generated\n\
         broken,3,\"PD[X[1,4,2,5]]\",,bad pd\n",
    )
    .unwrap();
    let out_dir = dir.path().join("reports");
    let out = knotvol(
        &[
            "batch",
            "--table",
            table.to_str().unwrap(),
            "--out",
            out_dir.to_str().unwrap(),
        ],
        dir.path(),
    );
    // The failure is noted and the run completes, but the exit is nonzero.
    assert_eq!(out.status.code(), Some(1));
    let summary = std::fs::read_to_string(out_dir.join("summary.csv")).unwrap();
    assert!(summary.contains("good,4,ok"));
    assert!(summary.contains("broken"));
    assert!(summary.contains("table-error"), "{summary}");
    assert!(out_dir.join("good.json").exists());
}

#[test]
fn unknown_input_is_a_clean_error() {
    let dir = tempfile::tempdir().unwrap();
    let out = knotvol(&["analyze", "not_a_knot"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("neither a readable file nor a name"));
}
