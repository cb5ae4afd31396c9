use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mmsieve"))
        .args(args)
        .env_remove("MMSIEVE_MAX_ORDER")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn fixture(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("mmsieve-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

#[test]
fn k6_is_not_apex() {
    let f = fixture("k6.g6", "E~~w\n");
    let o = run(&["check", f.to_str().unwrap(), "--property", "NA"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("NA true"));
}

#[test]
fn failing_property_exits_one_with_witness() {
    let f = fixture("k5.txt", "{(1,2),(1,3),(1,4),(1,5),(2,3),(2,4),(2,5),(3,4),(3,5),(4,5)}\n");
    let o = run(&["check", f.to_str().unwrap(), "--property", "NE", "--json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["holds"], false);
    assert_eq!(v[0]["witness"], "edge (1,2)");
}

#[test]
fn planar_and_apex_checks() {
    let f = fixture("mixed.g6", "D~{\nE~~w\n");
    let o = run(&["check", f.to_str().unwrap(), "--property", "planar"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("K5 subdivision"), "{text}");
    let o = run(&["check", f.to_str().unwrap(), "--property", "apex"]);
    let text = stdout(&o);
    assert!(text.lines().next().unwrap().contains("apex true"));
    assert!(text.lines().nth(1).unwrap().contains("apex false"));
}

#[test]
fn minimal_runs_the_right_decider() {
    let f = fixture("k6b.g6", "E~~w\n");
    // K6 - e is already NE.
    let o = run(&["minimal", f.to_str().unwrap(), "-p", "NE"]);
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));
    let o = run(&["minimal", f.to_str().unwrap(), "-p", "NA", "--json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["minor_minimal"], true);
}

#[test]
fn bad_input_exits_two() {
    let f = fixture("bad.txt", "{(0,1)}\n");
    assert_eq!(run(&["check", f.to_str().unwrap(), "-p", "NA"]).status.code(), Some(2));
    assert_eq!(run(&["search", "--order", "5"]).status.code(), Some(2));
    assert_eq!(run(&["search", "--order", "7..5", "-p", "NE"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    let o = run(&["search", "--order", "11", "-p", "NE"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn env_override_caps_order() {
    let o = Command::new(env!("CARGO_BIN_EXE_mmsieve"))
        .args(["search", "--order", "6", "-p", "NE"])
        .env("MMSIEVE_MAX_ORDER", "5")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn count_only_order_nine() {
    let o = run(&["search", "--order", "9", "--min-degree", "2", "--connected", "--count-only"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("scanned 158505"));
}

fn found_list(jobs: &str) -> Value {
    let o = run(&["search", "--order", "1..8", "-p", "NE", "--jobs", jobs, "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema_version"], 1);
    v
}

#[test]
fn jobs_do_not_change_results() {
    let one = found_list("1");
    let eight = found_list("8");
    assert_eq!(
        serde_json::to_string(&one["found"]).unwrap(),
        serde_json::to_string(&eight["found"]).unwrap()
    );
    assert_eq!(one["per_order"], eight["per_order"]);
    assert_eq!(one["found"].as_array().unwrap().len(), 5);
}

#[test]
fn report_file_is_written() {
    let out = std::env::temp_dir().join(format!("mmsieve-report-{}.json", std::process::id()));
    let o = run(&["search", "--order", "1..6", "-p", "AN", "--output", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["found"].as_array().unwrap().len(), 2);
    assert_eq!(v["filter"]["planarity"], "keep-planar");
    assert!(v["tool_version"].is_string() && v["wall_time_ms"].is_u64());
}

#[test]
fn verify_catalog_passes() {
    let o = run(&["verify-catalog", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], true);
}

#[test]
fn desk_tables_match() {
    let o = run(&["tables", "--scale", "desk", "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 7);
}

#[test]
fn expand_two_sum_seeds() {
    let o = run(&["export-catalog", "-p", "NE"]);
    let seeds: String = stdout(&o)
        .lines()
        .filter(|l| l.contains("K5-e:K5-e") || l.contains("K33:K33"))
        .map(|l| l.split('\t').next().unwrap().to_string() + "\n")
        .collect();
    assert_eq!(seeds.lines().count(), 2);
    let f = fixture("seeds.g6", &seeds);
    let o = run(&["expand", f.to_str().unwrap(), "-p", "NE", "--depth", "1", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["found"].as_array().unwrap().len() >= 2);
    let o = run(&["expand", f.to_str().unwrap(), "-p", "NE", "--depth", "0"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["expand", f.to_str().unwrap(), "-p", "NE", "--moves", "zz"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn export_catalog_edge_lists_parse_back() {
    let o = run(&["export-catalog", "--format", "edge-list", "-p", "NC"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<_> = stdout(&o).lines().map(str::to_string).collect();
    assert_eq!(lines.len(), 34);
    assert!(lines.iter().all(|l| l.starts_with('{') || l.contains(";{")));
}
