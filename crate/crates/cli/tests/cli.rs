use std::process::{Command, Output};

fn uctk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_uctk")).args(args).output().expect("run uctk")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const Q20: &str = "<() -> ({}, (0)); ((0)) -> ({(0)}, -1)>";
const Q21: &str = "<() -> ({}, (0)); ((0)) -> ({(0)}, (0 0))>";

#[test]
fn seed_and_order_type() {
    let o = uctk(&["seed", "{(0) (0 0)}", "()"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("result=u3"), "{}", stdout(&o));
    let o = uctk(&["order-type", "{(0)}"]);
    assert!(stdout(&o).contains("\"w + 1\""), "{}", stdout(&o));
}

#[test]
fn exit_codes() {
    let code = |a: &[&str]| uctk(a).status.code();
    assert_eq!(code(&["validate", "{(0)}"]), Some(0));
    assert_eq!(code(&["respects", Q21, "[2:()=u1, 2:((0))=u1*2]"]), Some(0));
    assert_eq!(code(&["respects", Q20, "[2:()=u1, 2:((0))=u1*2]"]), Some(1));
    assert_eq!(code(&["validate", "{(0 0)}"]), Some(1));
    assert_eq!(code(&["validate", "{(0"]), Some(2));
    assert_eq!(code(&["frobnicate"]), Some(2));
    assert_eq!(code(&["seed", "{(0)}"]), Some(2));
    assert_eq!(code(&["batch", "/nonexistent/queries.txt"]), Some(2));
}

#[test]
fn syntax_errors_are_located() {
    let o = uctk(&["--format", "structured", "validate", "{(0) (0"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["status"], "error");
    assert_eq!(v["error"]["code"], "E_SYNTAX");
    assert_eq!(v["error"]["location"]["arg"], 1);
    assert!(v["error"]["location"]["col"].as_u64().unwrap() > 1);
}

#[test]
fn structured_and_pretty() {
    let o = uctk(&["cfl", "u1*w", "--format", "structured"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["op"], "cfl");
    assert_eq!(v["status"], "ok");
    let p = uctk(&["order-type", "{(0)}", "--pretty"]);
    assert_eq!(p.status.code(), Some(0));
    assert!(stdout(&p).lines().count() > 1);
}

#[test]
fn deterministic_across_runs() {
    let a = uctk(&["enumerate", "level2", "3", "--seed", "7"]);
    let b = uctk(&["enumerate", "level2", "3", "--seed", "7"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), Some(0));
}

#[test]
fn batch_mixes_lines_and_json() {
    let dir = std::path::PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join("mixed.txt");
    std::fs::write(
        &path,
        "# comment\n\nseed {(0) (0 0)} ()\n{\"command\": \"order-type\", \"args\": [\"{(0)}\"]}\nvalidate \"{(0)\"\n",
    )
    .unwrap();
    let o = uctk(&["batch", path.to_str().unwrap()]);
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 3, "{out}");
    assert!(lines[0].contains("result=u3"));
    assert!(lines[1].contains("op=order-type status=ok"));
    assert!(lines[2].contains("code=E_SYNTAX") && lines[2].contains("at=5:"), "{}", lines[2]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn check_lemmas_small_bound() {
    let o = uctk(&["check-lemmas", "--bound", "3", "--seed", "0"]);
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{out}");
    assert!(out.contains("result=true") && !out.contains("=\"fail"), "{out}");
}
