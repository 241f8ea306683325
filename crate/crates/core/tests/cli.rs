use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_moore-complex"))
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("moore-complex-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn gen(path: &Path, extra: &[&str]) {
    let mut args = vec!["gen"];
    args.extend_from_slice(extra);
    args.extend_from_slice(&["--out", path.to_str().unwrap()]);
    ok(&args);
}

#[test]
fn gen_then_analyze_complete() {
    let file = scratch("complete_5_2.json");
    gen(&file, &["--kind", "complete", "--n", "5", "--d", "2"]);
    let json: serde_json::Value =
        serde_json::from_str(&ok(&["analyze", "--in", file.to_str().unwrap()])).unwrap();
    assert_eq!(json["diameter"], 2);
    assert_eq!(json["degrees"]["regular_r"], 3);
    assert_eq!(json["N"], 10);
    assert_eq!(json["source"]["layer_profile"], serde_json::json!([1, 6, 3]));

    let csv = ok(&["analyze", "--in", file.to_str().unwrap(), "--format", "csv", "--source", "4,5"]);
    assert_eq!(csv.lines().count(), 2);
    assert!(csv.lines().nth(1).unwrap().contains(",4;5,"));
}

#[test]
fn dist_on_complete_6_2() {
    let file = scratch("complete_6_2.json");
    gen(&file, &["--kind", "complete", "--n", "6", "--d", "2"]);
    let f = file.to_str().unwrap();
    assert_eq!(ok(&["dist", "--in", f, "--from", "1,2", "--to", "3,4"]).trim(), "2");
    assert_eq!(ok(&["dist", "--in", f, "--from", "2,1", "--to", "1,3"]).trim(), "1");
}

#[test]
fn dist_unreachable() {
    let file = scratch("single.json");
    std::fs::write(&file, r#"{"format_version":"1","n":4,"d":2,"facets":[[1,2,3]]}"#).unwrap();
    let out = ok(&["dist", "--in", file.to_str().unwrap(), "--from", "1,2", "--to", "1,4"]);
    assert_eq!(out.trim(), "unreachable");
}

#[test]
fn check_bounds_on_prism_reports_violations_with_exit_zero() {
    let file = scratch("prism.json");
    gen(&file, &["--kind", "named", "--name", "circular_ladder(16)"]);
    let json: serde_json::Value =
        serde_json::from_str(&ok(&["check-bounds", "--in", file.to_str().unwrap()])).unwrap();
    let t2 = &json["theorem2"];
    assert_eq!(t2["status"], "checked");
    assert_eq!(t2["theorem2_radius_bound"], 3);
    assert_eq!(t2["theorem2_violations"].as_array().unwrap().len(), 32);
    assert_eq!(json["measured_diameter"], 9);
    assert_eq!(json["theorem1"]["theorem1_satisfied"], true);

    let csv = ok(&["check-bounds", "--in", file.to_str().unwrap(), "--format", "csv"]);
    assert!(csv.starts_with("n,d,N,"));
}

#[test]
fn named_graph_size_from_n() {
    let file = scratch("cycle.json");
    gen(&file, &["--kind", "named", "--name", "cycle", "--n", "7"]);
    let json: serde_json::Value =
        serde_json::from_str(&ok(&["analyze", "--in", file.to_str().unwrap()])).unwrap();
    assert_eq!(json["diameter"], 3);
}

#[test]
fn gen_random_and_near_regular_are_reproducible() {
    let a = ok(&["gen", "--kind", "random", "--n", "7", "--d", "2", "--p", "0.4", "--seed", "9"]);
    let b = ok(&["gen", "--kind", "random", "--n", "7", "--d", "2", "--p", "0.4", "--seed", "9"]);
    assert_eq!(a, b);
    assert!(a.contains("\"seed\":9"));

    let out = run(&["gen", "--kind", "near-regular", "--n", "10", "--d", "1", "--r", "2", "--seed", "1"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("regular_r = Some(2)"));
}

#[test]
fn sweep_complete_csv() {
    let out = ok(&["sweep", "--kind", "complete", "--n-range", "4..6", "--d-range", "1..3", "--format", "csv"]);
    let mut lines = out.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 9);
    let col = |name: &str| header.iter().position(|h| *h == name).unwrap();
    let row = rows.iter().find(|r| r[col("n")] == "5" && r[col("d")] == "2").unwrap();
    assert_eq!(row[col("N")], "10");
    assert_eq!(row[col("regular_r")], "3");
    assert_eq!(row[col("measured_diameter")], "2");
    assert_eq!(row[col("moore_ball_value")], "31");
    assert_eq!(row[col("diameter_lb_int")], "2");
    assert_eq!(row[col("theorem2_radius_bound")], "1");
}

#[test]
fn errors_exit_nonzero() {
    let out = run(&["analyze", "--in", "/nonexistent/complex.json"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));

    let out = run(&["analyze", "--bogus"]);
    assert!(!out.status.success());

    let bad = scratch("bad.json");
    std::fs::write(&bad, r#"{"format_version":"1","n":4,"d":2,"facets":[[1,2,5]]}"#).unwrap();
    let out = run(&["analyze", "--in", bad.to_str().unwrap()]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("invalid simplex"));

    let out = run(&["gen", "--kind", "named", "--name", "heawood"]);
    assert!(!out.status.success());
}

#[test]
fn capacity_env_override() {
    let file = scratch("complete_8_3.json");
    gen(&file, &["--kind", "complete", "--n", "8", "--d", "3"]);
    let out = bin()
        .args(["analyze", "--in", file.to_str().unwrap()])
        .env("MOORE_COMPLEX_CAP", "10")
        .output()
        .unwrap();
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("capacity"));
}

#[test]
fn duplicate_facets_warn_on_stderr() {
    let file = scratch("dup.json");
    std::fs::write(&file, r#"{"format_version":"1","n":4,"d":2,"facets":[[1,2,3],[3,2,1]]}"#).unwrap();
    let out = run(&["analyze", "--in", file.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("duplicate facet"));
}
