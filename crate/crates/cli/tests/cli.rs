use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

const TABLE1: &str = include_str!("../../core/data/table1.txt");
const EXAMPLE_CNF: &str = include_str!("../../core/data/example.cnf");

fn xclab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_xclab"))
        .args(args)
        .env_remove("XCLAB_GADGET")
        .output()
        .expect("run xclab")
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("bad json ({e}): {}", String::from_utf8_lossy(&out.stdout)))
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn sat2ss_table_matches_golden() {
    let dir = tempfile::tempdir().unwrap();
    let cnf = write(dir.path(), "f.cnf", EXAMPLE_CNF);
    let out = xclab(&["--text", "reduce", "sat2ss", "--cnf", s(&cnf), "--table"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), TABLE1);
}

#[test]
fn report_has_contract_fields() {
    let out = xclab(&["cut", "embed-check", "--n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["command"], "cut embed-check");
    assert_eq!(r["status"], "verified");
    assert_eq!(r["payload"]["result"], "M equals mstar(3)");
    assert!(r["counters"].is_object());
}

#[test]
fn witness_round_trip_and_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let w = dir.path().join("w.json");
    let out = xclab(&["reduce", "phi-m", "--m", "3", "--witness-out", s(&w)]);
    assert_eq!(out.status.code(), Some(0));

    let out = xclab(&["poly", "verify", "--witness", s(&w)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["status"], "verified");

    let mut json: Value = serde_json::from_str(&std::fs::read_to_string(&w).unwrap()).unwrap();
    let cell = &mut json["lifts"][1][3];
    *cell = Value::from(if cell == "0" { "1" } else { "0" });
    let bad = write(dir.path(), "bad.json", &json.to_string());
    let out = xclab(&["poly", "verify", "--witness", s(&bad)]);
    assert_eq!(out.status.code(), Some(1));
    let r = report(&out);
    assert_eq!(r["status"], "failed");
    assert!(!r["payload"]["bad_lift"].is_null());
}

#[test]
fn input_errors_exit_2() {
    assert_eq!(xclab(&["no-such-command"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g.txt", "3 1\na\nb\nc\na z\n");
    let out = xclab(&["graph", "crossings", "--graph", s(&g)]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(report(&out)["status"], "error");
    let out = xclab(&["graph", "crossings", "--graph", "/definitely/not/here"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn selftest_missing_gadget_is_refused() {
    let out = xclab(&["selftest", "--gadget", "/definitely/not/here", "--only", "6"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stdout).contains("[REFUSED]"));
}

#[test]
fn selftest_corrupted_gadget_fails() {
    let dir = tempfile::tempdir().unwrap();
    let good = include_str!("../../core/data/crossing_gadget.txt");
    // Drop the last edge line: the boundary table no longer matches.
    let mut lines: Vec<&str> = good.lines().collect();
    lines.pop();
    let header = lines.iter().position(|l| l.starts_with("22 ")).unwrap();
    let edges: usize = lines[header].split_whitespace().nth(1).unwrap().parse().unwrap();
    let fixed = format!("22 {}", edges - 1);
    lines[header] = &fixed;
    let bad = write(dir.path(), "gadget.txt", &(lines.join("\n") + "\n"));
    let out = xclab(&["selftest", "--gadget", s(&bad), "--only", "6"]);
    assert_eq!(out.status.code(), Some(1), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn planarize_and_cubic_verify() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = write(dir.path(), "k4.txt", "4 6\n1\n2\n3\n4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
    let out = xclab(&["reduce", "planarize", "--graph", s(&k4)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["payload"]["crossings"], 1);

    let star = write(dir.path(), "star.txt", "3 2\nc\na\nb\nc a\nc b\n");
    let out = xclab(&["reduce", "cubic", "--graph", s(&star), "--step", "remove-bridge", "--vertex", "c"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn bounds_report_on_identity() {
    let dir = tempfile::tempdir().unwrap();
    let m = write(dir.path(), "m.txt", "3 3\n1 0 0\n0 1 0\n0 0 1\n");
    let out = xclab(&["bounds", "report", "--matrix", s(&m)]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["payload"]["lower"], 3);
    assert_eq!(r["payload"]["upper"], 3);
}

#[test]
fn clique_point_membership_tracks_clique_number() {
    let dir = tempfile::tempdir().unwrap();
    // K4 minus an edge: omega = 3, so a violation exactly when k < 3.
    let tri = write(dir.path(), "g.txt", "4 5\n1\n2\n3\n4\n1 2\n1 3\n2 3\n2 4\n3 4\n");
    for (k, member) in [(2, false), (3, true), (4, true)] {
        let out = xclab(&["cut", "membership", "--graph", s(&tri), "--suspend", "--k", &k.to_string()]);
        assert_eq!(out.status.code(), Some(0));
        let r = report(&out);
        assert_eq!(r["payload"]["base_clique_number"], 3);
        assert_eq!(r["payload"]["member"], member, "k = {k}");
    }
}
