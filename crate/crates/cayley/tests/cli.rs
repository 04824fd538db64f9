use std::fs;
use std::process::{Command, Output};

use cayley::pgm::split_p5;

fn cayley(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cayley"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = cayley(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn basis_products() {
    assert_eq!(stdout(&["basis-mul", "--product", "P2", "93", "37"]), "-e120\n");
    assert_eq!(stdout(&["basis-mul", "--product", "P0", "1", "2"]), "+e3\n");
    assert_eq!(stdout(&["basis-mul", "--product", "f1g0", "1", "2"]), stdout(&["basis-mul", "--product", "F1G0", "1", "2"]));
}

#[test]
fn tree_trace() {
    assert_eq!(stdout(&["tree", "--p", "93", "--q", "37", "--trace"]), "C -10-> L -01-> MINUS  => -1\n");
    assert_eq!(stdout(&["tree", "--p", "5", "--q", "0"]), "+1\n");
}

#[test]
fn fano_lines() {
    assert_eq!(stdout(&["fano", "--product", "P0"]), "↓ ↺ →\n");
    assert_eq!(stdout(&["fano", "--product", "p3t"]), "↑ ↺ →\n");
    assert_eq!(cayley(&["fano", "--product", "f0g2"]).status.code(), Some(2));
}

#[test]
fn triples_output() {
    let text = stdout(&["triples", "--product", "P0", "--n", "3"]);
    assert_eq!(text.lines().count(), 7);
    assert_eq!(text.lines().next(), Some("1 2 3"));
    let json: Vec<[usize; 3]> = serde_json::from_str(&stdout(&["triples", "--product", "P0", "--n", "3", "--json"])).unwrap();
    assert_eq!(json.len(), 7);
}

#[test]
fn tables_to_files() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("t.csv");
    let pgm = dir.path().join("t.pgm");
    stdout(&["twist-table", "--product", "P2", "--n", "1", "--out", csv.to_str().unwrap()]);
    assert_eq!(fs::read_to_string(&csv).unwrap(), "+1,+1\n+1,-1\n");
    stdout(&["twist-table", "--product", "P2", "--n", "5", "--format", "pgm", "--out", pgm.to_str().unwrap()]);
    let bytes = fs::read(&pgm).unwrap();
    let (side, payload) = split_p5(&bytes).unwrap();
    assert_eq!((side, payload.len()), (32, 1024));
    let ascii = stdout(&["twist-table", "--product", "P2", "--n", "1", "--format", "pgm-ascii", "--minus-gray", "255"]);
    assert_eq!(ascii, "P2\n2 2\n255\n64 64\n64 255\n");
    // The invalid candidates still have sign tables.
    assert_eq!(stdout(&["twist-table", "--product", "f1g0", "--n", "2"]).lines().count(), 4);
}

#[test]
fn multiplication() {
    let dir = tempfile::tempdir().unwrap();
    let x = dir.path().join("x.json");
    let y = dir.path().join("y.json");
    fs::write(&x, r#"{"level":2,"coeffs":["0","1","0","0"]}"#).unwrap();
    fs::write(&y, r#"{"level":2,"coeffs":["0","0","1/2","0"]}"#).unwrap();
    let (xs, ys) = (x.to_str().unwrap(), y.to_str().unwrap());
    let doubling = stdout(&["mul", "--product", "P0", xs, ys]);
    assert_eq!(doubling, "{\"level\":2,\"coeffs\":[\"0\",\"0\",\"0\",\"1/2\"]}\n");
    assert_eq!(stdout(&["mul", "--product", "P0", "--engine", "twist", xs, ys]), doubling);

    fs::write(&y, r#"{"level":1,"coeffs":["0","1"]}"#).unwrap();
    assert_eq!(cayley(&["mul", "--product", "P0", xs, ys]).status.code(), Some(2));
    assert_eq!(
        stdout(&["mul", "--product", "P0", "--promote", xs, ys]),
        "{\"level\":2,\"coeffs\":[\"-1\",\"0\",\"0\",\"0\"]}\n"
    );
    fs::write(&y, r#"{"level":1,"coeffs":["0"]}"#).unwrap();
    assert_eq!(cayley(&["mul", "--product", "P0", xs, ys]).status.code(), Some(2));
    assert_eq!(cayley(&["mul", "--product", "f0g1", "--engine", "twist", xs, xs]).status.code(), Some(2));
}

#[test]
fn usage_errors() {
    assert_eq!(cayley(&["basis-mul", "--product", "P9", "1", "2"]).status.code(), Some(2));
    assert_eq!(cayley(&["basis-mul", "--product", "f8g0", "1", "2"]).status.code(), Some(2));
    assert_eq!(cayley(&["conjecture", "--bound", "99999"]).status.code(), Some(2));
    assert_eq!(cayley(&["verify", "--level", "0"]).status.code(), Some(2));
    assert_eq!(cayley(&["nonsense"]).status.code(), Some(2));
}

#[test]
fn eliminate_and_verify() {
    let text = stdout(&["eliminate"]);
    assert!(text.contains("survivors: P0 P1 P2 P3 P0T P1T P2T P3T"));
    // Too few interior points to separate the candidates: not eight survivors.
    assert_eq!(cayley(&["eliminate", "--n", "2"]).status.code(), Some(1));
    let verify = stdout(&["verify", "--level", "3"]);
    assert!(verify.lines().all(|l| l.starts_with("ok")), "{verify}");
}

#[test]
fn deterministic_output() {
    let a = cayley(&["eliminate", "--json"]).stdout;
    let b = cayley(&["eliminate", "--json"]).stdout;
    assert_eq!(a, b);
    let a = cayley(&["twist-table", "--product", "P1T", "--n", "6", "--format", "pgm"]).stdout;
    let b = cayley(&["twist-table", "--product", "P1T", "--n", "6", "--format", "pgm"]).stdout;
    assert_eq!(a, b);
}
