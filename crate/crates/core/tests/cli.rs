use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use kfrechet::svg::metadata_component_count;
use serde_json::Value;
use tempfile::TempDir;

fn kfrechet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kfrechet"))
        .args(args)
        .env_remove("KFRECHET_TOL")
        .output()
        .expect("binary runs")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}\nstderr: {}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        )
    })
}

fn write(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, body).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

struct Fixture {
    dir: TempDir,
    p: PathBuf,
    q: PathBuf,
}

fn diagonal() -> Fixture {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "p.txt", "0 0\n1 0\n");
    let q = write(&dir, "q.json", r#"{"vertices": [[0, 1], [1, 1]]}"#);
    Fixture { dir, p, q }
}

#[test]
fn decide_diagonal() {
    let f = diagonal();
    let out = kfrechet(&["decide", "--p", s(&f.p), "--q", s(&f.q), "--eps", "1", "--k", "1", "--algo", "fpt"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["answer"], true);
    assert_eq!(r["selection"], serde_json::json!([0]));
    assert_eq!(r["components"], 1);
    assert_eq!(r["z"], 1);

    let out = kfrechet(&["decide", "--p", s(&f.p), "--q", s(&f.q), "--eps", "0.5", "--k", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(report(&out)["answer"], false);
    assert_eq!(report(&out)["selection"], Value::Null);
}

#[test]
fn output_keys_are_sorted() {
    let f = diagonal();
    let out = kfrechet(&["decide", "--p", s(&f.p), "--q", s(&f.q), "--eps", "1"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.trim(), r#"{"answer":true,"components":1,"selection":[0],"z":1}"#);
}

#[test]
fn algorithms_agree_on_a_corpus() {
    let dir = TempDir::new().unwrap();
    let curves = [
        ("a", "0 0\n2 0\n4 0\n"),
        ("b", "0 0\n1 3\n2 0\n3 3\n4 0\n"),
        ("c", "0 1\n4 1\n0 1.5\n4 1.5\n"),
    ];
    let paths: Vec<PathBuf> = curves.iter().map(|(n, b)| write(&dir, n, b)).collect();
    for p in &paths {
        for q in &paths {
            for eps in ["0.5", "1", "2"] {
                for k in ["1", "2", "3"] {
                    let run = |algo: &str| {
                        let out = kfrechet(&["decide", "--p", s(p), "--q", s(q), "--eps", eps, "--k", k, "--algo", algo]);
                        (out.status.code(), report(&out)["answer"].clone())
                    };
                    assert_eq!(run("brute"), run("fpt"), "{p:?} {q:?} eps={eps} k={k}");
                }
            }
        }
    }
}

#[test]
fn exit_code_follows_answer_for_every_algorithm() {
    let f = diagonal();
    for algo in ["brute", "fpt", "approx", "weak", "hausdorff", "frechet"] {
        for eps in ["0.5", "1"] {
            let out = kfrechet(&["decide", "--p", s(&f.p), "--q", s(&f.q), "--eps", eps, "--algo", algo]);
            let answer = report(&out)["answer"].as_bool().unwrap();
            assert_eq!(out.status.code(), Some(if answer { 0 } else { 1 }), "{algo}");
            assert_eq!(answer, eps == "1", "{algo} at {eps}");
        }
    }
}

#[test]
fn minimize_commands() {
    let f = diagonal();
    let out = kfrechet(&["minimize-k", "--p", s(&f.p), "--q", s(&f.q), "--eps", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["k"], 1);
    assert_eq!(r["selection"], serde_json::json!([0]));

    let out = kfrechet(&["minimize-k", "--p", s(&f.p), "--q", s(&f.q), "--eps", "0.5"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(report(&out)["k"], Value::Null);

    let out = kfrechet(&["minimize-eps", "--p", s(&f.p), "--q", s(&f.q), "--k", "1", "--tol", "1e-4"]);
    assert_eq!(out.status.code(), Some(0));
    let eps = report(&out)["epsilon"].as_f64().unwrap();
    assert!((eps - 1.0).abs() <= 1e-4, "{eps}");

    let out = kfrechet(&["minimize-eps", "--p", s(&f.p), "--q", s(&f.q), "--k", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn svg_output() {
    let f = diagonal();
    let out_path = f.dir.path().join("d.svg");
    let out = kfrechet(&["freespace-svg", "--p", s(&f.p), "--q", s(&f.q), "--eps", "1", "--out", s(&out_path), "--select", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let svg = fs::read_to_string(&out_path).unwrap();
    assert_eq!(svg.matches("<polygon").count(), 1);
    assert_eq!(metadata_component_count(&svg), Some(1));

    let out = kfrechet(&["freespace-svg", "--p", s(&f.p), "--q", s(&f.q), "--eps", "0.5", "--out", s(&out_path)]);
    assert_eq!(out.status.code(), Some(0));
    let svg = fs::read_to_string(&out_path).unwrap();
    assert_eq!(svg.matches("<polygon").count(), 0);
    assert_eq!(metadata_component_count(&svg), Some(0));

    let bad = f.dir.path().join("missing").join("d.svg");
    let out = kfrechet(&["freespace-svg", "--p", s(&f.p), "--q", s(&f.q), "--eps", "1", "--out", s(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn box_commands() {
    let dir = TempDir::new().unwrap();
    let sat = write(&dir, "sat.cnf", "c tautology\np cnf 1 1\n1 -1 0\n");
    let unsat = write(&dir, "unsat.cnf", "p cnf 1 2\n1 0\n-1 0\n");
    let json = dir.path().join("inst.json");

    let out = kfrechet(&["boxgen", "--cnf", s(&sat), "--out", s(&json)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["boxes"], 8);
    let out = kfrechet(&["boxsolve", "--in", s(&json)]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["selection"].as_array().unwrap().len(), 4);

    let out = kfrechet(&["boxgen", "--cnf", s(&unsat), "--out", s(&json)]);
    assert_eq!(report(&out)["k"], 4);
    let out = kfrechet(&["boxsolve", "--in", s(&json)]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(report(&out)["selection"], Value::Null);

    let broken = write(&dir, "broken.cnf", "p cnf 1 1\n2 0\n");
    let out = kfrechet(&["boxgen", "--cnf", s(&broken), "--out", s(&json)]);
    assert_eq!(out.status.code(), Some(2));
    let broken = write(&dir, "broken.json", "{\"bound\": [2, 2]}");
    let out = kfrechet(&["boxsolve", "--in", s(&broken)]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn errors_exit_with_two() {
    let f = diagonal();
    let bad = write(&f.dir, "bad.txt", "0 0\n0 0\n");
    for args in [
        vec!["decide", "--p", "/nonexistent", "--q", s(&f.q), "--eps", "1"],
        vec!["decide", "--p", s(&bad), "--q", s(&f.q), "--eps", "1"],
        vec!["decide", "--p", s(&f.p), "--q", s(&f.q), "--eps", "-1"],
        vec!["decide", "--p", s(&f.p), "--q", s(&f.q), "--eps", "1", "--algo", "magic"],
        vec!["decide", "--p", s(&f.p)],
    ] {
        let out = kfrechet(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn tolerance_from_environment() {
    let f = diagonal();
    // ε = 0.9999 misses the unit gap, but a tolerance of 1e-3 bridges it.
    let run = |tol: Option<&str>| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_kfrechet"));
        cmd.args(["decide", "--p", s(&f.p), "--q", s(&f.q), "--eps", "0.9999"]);
        match tol {
            Some(t) => cmd.env("KFRECHET_TOL", t),
            None => cmd.env_remove("KFRECHET_TOL"),
        };
        cmd.output().unwrap().status.code()
    };
    assert_eq!(run(None), Some(1));
    assert_eq!(run(Some("1e-3")), Some(0));
    assert_eq!(run(Some("not-a-number")), Some(2));
}
