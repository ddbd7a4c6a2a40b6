use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn gintersect(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gintersect"))
        .args(args)
        .env_remove("GINTERSECT_BUDGET")
        .env_remove("GINTERSECT_WORKERS")
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn field<'a>(text: &'a str, key: &str) -> &'a str {
    text.lines()
        .find_map(|l| l.strip_prefix(key).map(str::trim).filter(|_| l.starts_with(&format!("{key} "))))
        .unwrap_or_else(|| panic!("no {key} in\n{text}"))
}

#[test]
fn construct_cycle_extremal_writes_seventy_edges() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c10.txt");
    let out = gintersect(&["construct", "--family", "cycle-extremal", "--n", "10", "--k", "3", "-o", path.to_str().unwrap()]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("size: 70"), "{text}");
    assert!(text.contains("G-intersecting: yes"), "{text}");
    let h = gintersect::Hypergraph::parse(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(h.len(), 70);
    assert_eq!(h.uniform_k(), Some(3));
}

#[test]
fn construct_then_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for (family, graph, k) in [
        ("cycle-extremal", "cycle:9", "3"),
        ("clique", "path:8", "3"),
        ("augmented", "cycle:8", "2"),
        ("clique", "complete:6", "2"),
    ] {
        let path = dir.path().join(format!("{family}-{graph}.txt").replace(':', "_"));
        let p = path.to_str().unwrap();
        let built = gintersect(&["construct", "--family", family, "--graph", graph, "--k", k, "-o", p]);
        assert!(built.status.success(), "{}", stderr(&built));
        let size = field(&stdout(&built).replace(':', " "), "size").to_string();

        let checked = gintersect(&["verify", "--graph", graph, "--hypergraph", p]);
        assert!(checked.status.success(), "{}", stderr(&checked));
        let text = stdout(&checked);
        assert_eq!(field(&text, "G-intersecting"), "yes", "{text}");
        assert_eq!(field(&text, "size"), size);
        assert_eq!(field(&text, "cross_condition"), "yes");
    }
}

#[test]
fn verify_reports_a_negative_verdict_with_success_status() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    // {0,1} and {3,4} are far apart on C8
    fs::write(&path, "8 2 2\n0 1\n3 4\n").unwrap();
    let out = gintersect(&["verify", "--graph", "cycle:8", "--hypergraph", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(field(&stdout(&out), "G-intersecting"), "no");

    let out = gintersect(&["verify", "--graph", "cycle:8", "--hypergraph", path.to_str().unwrap(), "--format", "json"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["g_intersecting"], Value::Bool(false));
    assert_eq!(v["size"], "2");
}

#[test]
fn solve_json_has_string_counts_and_structure() {
    let out = gintersect(&["solve", "--graph", "cycle:9", "--k", "2", "--format", "json"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["value"], "16");
    assert_eq!(v["total_ksets"], "36");
    assert_eq!(v["cycle_formula"], "16");
    assert_eq!(v["witness"].as_array().unwrap().len(), 16);
    for key in ["nodes", "wall_time_ms"] {
        assert!(v["stats"].get(key).is_some(), "missing stats.{key}");
    }
    for key in [
        "omega",
        "delta",
        "maximum_cliques",
        "qualifying_cliques",
        "any_qualifies",
        "theorem2_bound",
        "within_theorem2",
        "lemma1_ok",
        "lemma2_ok",
    ] {
        assert!(v["structure"].get(key).is_some(), "missing structure.{key}");
    }
    assert_eq!(v["structure"]["theorem2_bound"], "16");
}

#[test]
fn bound_json_fields() {
    let out = gintersect(&["bound", "--graph", "cycle:200", "--k", "6", "--format", "json", "--c", "0.5"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    for key in [
        "n",
        "k",
        "delta",
        "omega",
        "ekr",
        "theorem2",
        "cycle_formula",
        "lemma1_ok",
        "lemma2_ok",
        "clique_sep_ok",
        "tau_expression",
    ] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert!(v["theorem2"].is_string());
    assert_eq!(v["theorem2"], v["cycle_formula"]);
    assert_eq!(v["below_c_sqrt_n"], Value::Bool(true));
}

#[test]
fn tau_command() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("h.txt");
    fs::write(&path, "6 3 0\n0 1\n2 3\n4 5\n").unwrap();
    let out = gintersect(&["tau", "--hypergraph", path.to_str().unwrap(), "--format", "json"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["tau"], "3");
    assert_eq!(v["cover"].as_array().unwrap().len(), 3);
}

#[test]
fn graph_file_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.txt");
    // a triangle with a pendant vertex
    fs::write(&path, "# paw\n4 4\n0 1\n1 2\n0 2\n2 3\n").unwrap();
    let out = gintersect(&["solve", "--graph-file", path.to_str().unwrap(), "--k", "1"]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert_eq!(field(&stdout(&out), "value"), "3");
}

#[test]
fn sweep_streams_csv_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sweep.csv");
    let out = gintersect(&["sweep", "--n", "8..9", "--k", "2..3", "--mode", "exact", "-o", path.to_str().unwrap()]);
    assert!(out.status.success(), "{}", stderr(&out));
    let mut reader = csv::Reader::from_path(&path).unwrap();
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 4);
    let c8k2 = rows.iter().find(|r| &r[0] == "8" && &r[1] == "2").unwrap();
    assert_eq!(&c8k2[4], "14");
    assert_eq!(&c8k2[7], "agree");
}

#[test]
fn errors_have_codes_and_exit_statuses() {
    let out = gintersect(&["solve", "--graph", "wheel:5", "--k", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).starts_with("error[bad_input]:"), "{}", stderr(&out));

    let out = gintersect(&["solve", "--graph", "cycle:20", "--k", "9"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).starts_with("error[capacity_exceeded]:"));

    let out = gintersect(&["solve", "--graph", "cycle:8", "--k", "9"]);
    assert_eq!(out.status.code(), Some(2));

    let out = gintersect(&["verify", "--graph", "cycle:8", "--hypergraph", "/nonexistent/h.txt"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn budget_flag_beats_environment() {
    let run = |env: &str, args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_gintersect"))
            .args(args)
            .env("GINTERSECT_BUDGET", env)
            .output()
            .unwrap()
    };
    let base = ["solve", "--graph", "cycle:8", "--k", "2"];
    assert_eq!(run("10", &base).status.code(), Some(3));
    let mut with_flag = base.to_vec();
    with_flag.extend(["--budget", "100"]);
    assert!(run("10", &with_flag).status.success());
}
