use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "examples", "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_straighten")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn ssyt_listing_and_kostka() {
    let o = run(&["ssyt", "--shape", "2,2", "--content", "1,1,1,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "S1\n1 3\n2 4\n\nS2\n1 2\n3 4\n");
    let o = run(&["kostka", "--shape", "3,3,2", "--content", "1,2,1,2,2"]);
    assert_eq!(stdout(&o).trim(), "6");
    let o = run(&["kostka", "--shape", "2,2", "--content", "1,1,1,1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["kostka"], 2);
    assert_eq!(v["format"], 1);
}

#[test]
fn rearrangement_coefficient() {
    let o = run(&["rcoeff", &data("rearrange_f.txt"), &data("rearrange_s.txt")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "1");
}

#[test]
fn straighten_every_method() {
    for m in ["closed", "classical", "chain", "paths", "oracle"] {
        let o = run(&["straighten", &data("dbasis_f.txt"), "--method", m, "--verify"]);
        assert_eq!(o.status.code(), Some(0), "{m}");
        assert!(stdout(&o).ends_with("+1·S5 −1·S4\n"), "{m}: {}", stdout(&o));
    }
    let o = run(&["straighten", &data("column.txt")]);
    assert_eq!(stdout(&o).trim(), "−1·S1");
    let o = run(&["straighten", &data("duplicate.txt")]);
    assert_eq!(stdout(&o).trim(), "0");
}

#[test]
fn straighten_json() {
    let o = run(&["straighten", &data("dbasis_f.txt"), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["method"], "closed");
    let terms = v["terms"].as_array().unwrap();
    let pairs: Vec<(i64, i64)> = terms
        .iter()
        .map(|t| (t["index"].as_i64().unwrap(), t["coeff"].as_i64().unwrap()))
        .collect();
    assert_eq!(pairs, vec![(4, -1), (5, 1)]);
}

#[test]
fn graph_dot_and_json() {
    let o = run(&["graph", "--shape", "3,3,2", "--content", "1,2,1,2,2", "--dot"]);
    let dot = stdout(&o);
    assert!(dot.starts_with("digraph coefficients {"));
    assert_eq!(dot.matches(" -> ").count(), 7);
    assert!(dot.contains("S6 -> S1 [label=\"2\"];"));
    let o = run(&[
        "graph", "--shape", "3,3,2", "--content", "1,2,1,2,2", "--highlight", &data("graph_f.txt"),
    ]);
    assert!(stdout(&o).contains("fillcolor=lightgrey"));
    let o = run(&["graph", "--shape", "3,3,2", "--content", "1,2,1,2,2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["edges"].as_array().unwrap().len(), 7);
}

#[test]
fn exit_codes() {
    // validation
    assert_eq!(run(&["kostka", "--shape", "3", "--content", "4"]).status.code(), Some(2));
    assert_eq!(run(&["ssyt", "--shape", "2,3", "--content", "5"]).status.code(), Some(2));
    assert_eq!(run(&["straighten", "/nonexistent/file"]).status.code(), Some(2));
    assert_eq!(run(&["rcoeff", &data("dbasis_f.txt"), &data("column.txt")]).status.code(), Some(2));
    // cap
    let o = run(&["straighten", &data("dbasis_f.txt"), "--method", "oracle", "--oracle-cap", "3"]);
    assert_eq!(o.status.code(), Some(3));
    let o = run(&["straighten", &data("dbasis_f.txt"), "--method", "classical", "--rewrite-cap", "0"]);
    assert_eq!(o.status.code(), Some(3));
    let o = run(&["straighten", &data("graph_f.txt"), "--method", "paths", "--path-cap", "1"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn bench_runs_and_is_reproducible() {
    let base = ["bench", "--shape", "4,3,2", "--content", "2,2,3,2"];
    let o = run(&[&base[..], &["--trials", "0"]].concat());
    assert_eq!(o.status.code(), Some(0));

    let args = [&base[..], &["--trials", "100", "--no-timing", "--seed", "7"]].concat();
    let a = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert!(stdout(&a).contains("agreement 100/100"), "{}", stdout(&a));
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);

    let o = run(&[&base[..], &["--trials", "5", "--format", "json"]].concat());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["trials"].as_array().unwrap().len(), 5);
}
