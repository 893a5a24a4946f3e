//! End-to-end runs of the command-line tool.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn write(name: &str, text: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_xjacobi")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const DEFORMED: &str = "class = D\na = 0\nb = 0\nK = [1]\nL1 = [0]\nt = [\"1\"]\n";

#[test]
fn construct_prints_the_golden_operator() {
    let spec = write("deformed.spec", DEFORMED);
    let o = run(&["construct", spec.to_str().unwrap(), "--window", "3"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["class"], "D");
    assert_eq!(doc["tau"], serde_json::json!(["1", "4", "1"]));
    assert_eq!(doc["eps"], "2");
    assert_eq!(doc["pi"].as_array().unwrap().len(), 3);
}

#[test]
fn verify_exit_code_follows_regularity() {
    let irregular = write("irregular.spec", DEFORMED);
    let o = run(&["verify", irregular.to_str().unwrap(), "--window", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("regularity: FAIL"));

    let regular = write("regular.spec", &DEFORMED.replace("\"1\"", "\"-1\""));
    let o = run(&["verify", regular.to_str().unwrap(), "--window", "3", "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["pass"], true);
}

#[test]
fn render_then_decode_recovers_the_specification() {
    let spec = write("a.spec", "class = A\na = 0\nb = 1/3\nK = [2, 4]\nL = [1, 3]\n");
    let o = run(&["render", spec.to_str().unwrap()]);
    assert!(o.status.success());
    let diagram = write("a.txt", &stdout(&o));
    let o = run(&["decode", diagram.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    assert!(text.contains("K = [2, 4]") && text.contains("L = [1, 3]"), "{text}");
}

#[test]
fn rdt_reports_one_flip() {
    let spec = write("classical.spec", "class = D\na = 1\nb = 1\n");
    let o = run(&["rdt", spec.to_str().unwrap(), "--type", "1", "--index", "0"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["flip"].as_array().unwrap().len(), 1);
    assert_eq!(doc["step"]["type"], 1);

    let o = run(&["rdt", spec.to_str().unwrap(), "--type", "1", "--index", "-1", "--cdt", "-1/2"]);
    assert_eq!(o.status.code(), Some(4), "{}", stdout(&o));
}

#[test]
fn failures_map_to_exit_codes() {
    let bad = write("bad.spec", "class = Q\n");
    assert_eq!(run(&["construct", bad.to_str().unwrap()]).status.code(), Some(2));
    let invalid = write("invalid.spec", "class = G\na = 1/3\nb = 1/5\nK1 = [-1]\n");
    assert_eq!(run(&["construct", invalid.to_str().unwrap()]).status.code(), Some(3));
    let diagram = write("bad.txt", "class G alpha=1/3 beta=1/5\nrow 12 from 0: ?\n");
    assert_eq!(run(&["decode", diagram.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(run(&["construct", "/nonexistent/spec"]).status.code(), Some(2));
}
