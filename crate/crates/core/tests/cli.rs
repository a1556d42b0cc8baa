use std::path::Path;
use std::process::{Command, Output};

use kuramoto_landscape::graph::{read_edge_list, GeneratorSpec};

fn kuramoto(args: &[&str], env_dir: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_kuramoto"));
    cmd.args(args).env_remove("KURAMOTO_OUTPUT_DIR");
    if let Some(d) = env_dir {
        cmd.env("KURAMOTO_OUTPUT_DIR", d);
    }
    cmd.output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn sweep_over_certified_range_succeeds() {
    let o = kuramoto(
        &[
            "sweep", "--alpha-max", "0.0537", "--mu-min", "0.788897", "--mu-max", "0.794", "--eps", "0.5",
            "--delta", "0.88", "--grid", "500",
        ],
        None,
    );
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["config"]["alpha_steps"], 500);
    assert_eq!(v["result"]["sweep"]["margins_met"], true);
    assert_eq!(v["result"]["sweep"]["points"], 250_000);
}

#[test]
fn failing_sweep_exits_two() {
    let o = kuramoto(&["sweep", "--mu-min", "0.78", "--grid", "40"], None);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("sweep fails"));
}

#[test]
fn regime_violation_exits_three() {
    let o = kuramoto(&["verify-certificate", "--mu", "0.75", "--alpha", "0", "--eps", "0.5", "--delta", "0.88"], None);
    assert_eq!(code(&o), 3);
    let err = String::from_utf8_lossy(&o.stderr);
    assert_eq!(err.lines().count(), 1);
    assert!(err.contains("regime violation"));
}

#[test]
fn validation_errors_name_the_field() {
    let o = kuramoto(&["census", "--graph-file", "/nonexistent/g.txt"], None);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("graph-file"));
    let o = kuramoto(&["sweep", "--grid", "1"], None);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("grid"));
    let o = kuramoto(&["optimize", "--mu", "0.75"], None);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("infeasible"));
}

#[test]
fn gen_graph_round_trips_through_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.edges");
    let p = path.to_str().unwrap();
    let o = kuramoto(&["gen-graph", "--graph", "random:40,0.8,9", "--output", p], None);
    assert_eq!(code(&o), 0);
    let text = std::fs::read_to_string(&path).unwrap();
    let loaded = read_edge_list(&text).unwrap();
    let spec: GeneratorSpec = "random:40,0.8,9".parse().unwrap();
    assert_eq!(loaded, spec.build().unwrap());

    let again = kuramoto(&["gen-graph", "--graph-file", p], None);
    assert_eq!(String::from_utf8(again.stdout).unwrap(), text);
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = ["census", "--graph", "circulant:30,6", "--trials", "12", "--seed", "4"];
    let a = kuramoto(&args, None);
    let b = kuramoto(&args, None);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let c = kuramoto(&[&args[..], &["--threads", "2"]].concat(), None);
    assert_eq!(json(&a)["result"], json(&c)["result"]);
}

#[test]
fn output_directory_variable_is_honoured() {
    let dir = tempfile::tempdir().unwrap();
    let o = kuramoto(&["verify-certificate", "--mu", "0.79", "--alpha", "0.01"], Some(dir.path()));
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(dir.path().join("verify-certificate.json")).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["result"]["verdict"]["pass"], true);
    assert!(v["config"]["mu"].is_number());
}

#[test]
fn simulate_writes_trajectory_csv() {
    let dir = tempfile::tempdir().unwrap();
    let traj = dir.path().join("t.csv");
    let o = kuramoto(
        &[
            "simulate", "--graph", "complete:12", "--seed", "2", "--sample-every", "10", "--trajectory",
            traj.to_str().unwrap(),
        ],
        None,
    );
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["result"]["converged"], true);
    let csv = std::fs::read_to_string(&traj).unwrap();
    assert!(csv.starts_with("t,energy,order\n"));
    assert!(csv.lines().count() > 2);
}

#[test]
fn census_finds_classes_on_moderate_circulant() {
    let o = kuramoto(&["census", "--graph", "circulant:100,30", "--trials", "200", "--seed", "42"], None);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    let classes = v["result"]["classes"].as_array().unwrap();
    assert!(!classes.is_empty());
    assert_eq!(classes[0]["report"]["classification"], "global-max");
    let hits: u64 = classes.iter().map(|c| c["hits"].as_u64().unwrap()).sum();
    assert_eq!(hits, 200);
}

#[test]
fn hardened_sweep_reports_boxes() {
    let o = kuramoto(&["sweep", "--grid", "50", "--hardened", "--cells", "20"], None);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["result"]["hardened"]["cells"], 400);
    assert_eq!(v["result"]["hardened"]["pass"], true);
}
