use std::process::{Command, Output};

use serde_json::Value;
use znhg::report::AnalysisReport;
use znhg::sweep::SweepReport;

fn znhg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_znhg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let o = znhg(args);
    (
        serde_json::from_str(&stdout(&o)).unwrap(),
        o.status.code().unwrap(),
    )
}

#[test]
fn analyze_thirty_json() {
    let (v, code) = json(&["analyze", "30", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(v["schema"], "znhg/1");
    assert_eq!(
        v["edges"],
        serde_json::json!([[2, 15], [3, 10], [5, 6], [6, 10, 15]])
    );
    assert_eq!(v["computed"]["diameter"], 3);
    assert_eq!(v["computed"]["girth"], "infinite");
    assert_eq!(v["computed"]["star"], false);
    assert_eq!(v["computed"]["hypertree"], "yes");
}

#[test]
fn analyze_report_round_trips() {
    for n in ["8", "12", "60", "1296"] {
        let o = znhg(&["analyze", n, "--json"]);
        let text = stdout(&o);
        let report: AnalysisReport = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_string_pretty(&report).unwrap() + "\n", text);
        let genus = report
            .checks
            .iter()
            .find(|c| c.field == "genus_one")
            .unwrap();
        assert_eq!(
            serde_json::to_value(genus.verified).unwrap(),
            "formula-only"
        );
    }
}

#[test]
fn analyze_twelve_and_eight() {
    let (v, code) = json(&["analyze", "12", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(v["computed"]["star"], true);
    assert_eq!(v["computed"]["planarity"], "planar");

    let o = znhg(&["analyze", "8"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("hypergraph is empty"));
}

#[test]
fn sweep_examples_are_clean() {
    for (hi, checks) in [
        ("2000", "diameter,girth,chromatic"),
        ("500", "iso"),
        ("100", "hypertree"),
    ] {
        let o = znhg(&["sweep", "2", hi, "--checks", checks, "--json"]);
        assert_eq!(o.status.code(), Some(0), "{checks}");
        let r: SweepReport = serde_json::from_str(&stdout(&o)).unwrap();
        assert!(r.findings.is_empty());
        assert!(r.summaries.iter().all(|s| s.unknown == 0 && s.checked > 0));
    }
}

#[test]
fn sweep_output_is_identical_across_job_counts() {
    let a = znhg(&["sweep", "2", "600", "--jobs", "1"]);
    let b = znhg(&["sweep", "2", "600", "--jobs", "4"]);
    let c = znhg(&["sweep", "2", "600", "--jobs", "4"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(b.stdout, c.stdout);
    assert_eq!(a.status.code(), b.status.code());
}

#[test]
fn group_reports() {
    let (v, code) = json(&["group", "dihedral", "4", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(v["intersection"]["edges"].as_array().unwrap().len(), 4);
    assert_eq!(v["comaximal"]["edges"].as_array().unwrap().len(), 5);
    assert_eq!(v["isomorphic"], false);

    let (v, _) = json(&["group", "cyclic", "30", "--json"]);
    assert_eq!(v["isomorphic"], true);

    // With HK taken as the set product, <b><ab> has four elements, so the
    // co-maximal hypergraph of D3 is three edges through the rotations.
    let (v, _) = json(&["group", "dihedral", "3", "--json"]);
    assert_eq!(
        v["intersection"]["edges"],
        serde_json::json!([[0, 1, 2, 3]])
    );
    assert_eq!(v["comaximal"]["edges"].as_array().unwrap().len(), 3);
    assert_eq!(v["isomorphic"], false);

    assert_eq!(znhg(&["group", "cyclic", "1000"]).status.code(), Some(1));
}

#[test]
fn export_examples() {
    let o = znhg(&["export", "6", "--format", "json", "--target", "hypergraph"]);
    assert_eq!(
        stdout(&o).trim(),
        r#"{"schema":"znhg/1","n":6,"vertices":[2,3],"edges":[[2,3]]}"#
    );
    let o = znhg(&["export", "9", "--format", "json"]);
    assert_eq!(
        stdout(&o).trim(),
        r#"{"schema":"znhg/1","n":9,"vertices":[],"edges":[]}"#
    );
    let dot = stdout(&znhg(&[
        "export",
        "30",
        "--format",
        "dot",
        "--target",
        "incidence",
    ]));
    let nodes = dot.lines().filter(|l| l.contains("shape=")).count();
    assert_eq!(nodes, 10);
    assert!(dot.contains("\"v15\" [shape=circle"));
    assert!(dot.contains("\"e3\" [shape=square"));
}

#[test]
fn export_to_file() {
    let dir = std::env::temp_dir().join(format!("znhg-export-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("h.dot");
    let o = znhg(&[
        "export",
        "12",
        "--format",
        "dot",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(std::fs::read_to_string(&path)
        .unwrap()
        .starts_with("graph hypergraph_12 {"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        vec!["export", "30", "--format", "xml"],
        vec!["analyze", "1"],
        vec!["analyze"],
        vec!["sweep", "10", "5"],
        vec!["sweep", "2", "10", "--checks", "colour"],
        vec!["group", "dihedral", "2"],
        vec!["frobnicate"],
    ] {
        assert_eq!(znhg(&args).status.code(), Some(1), "{args:?}");
    }
    assert_eq!(znhg(&["--help"]).status.code(), Some(0));
    assert_eq!(znhg(&["--version"]).status.code(), Some(0));
}
