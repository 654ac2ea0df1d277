use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn magma(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_magma"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn read(name: &str) -> String {
    std::fs::read_to_string(golden(name)).unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn eval_matches_golden() {
    let path = golden("session.mg");
    let o = magma(&["eval", "-f", path.to_str().unwrap()], "");
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o), read("session.out"));
}

#[test]
fn demos_match_golden() {
    let o = magma(&["demo", "example-function"], "");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), read("example-function.out"));
    let o = magma(&["demo", "function-clash", "-d", "plane"], "");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), read("function-clash-plane.out"));
}

#[test]
fn printed_output_evaluates_back_to_itself() {
    let first = stdout(&magma(&["eval", "-f", golden("session.mg").to_str().unwrap()], ""));
    let values: String = first.lines().filter(|l| !l.starts_with(';')).map(|l| format!("{l}\n")).collect();
    let second = magma(&["eval"], &values);
    assert!(second.status.success(), "{}", stderr(&second));
    assert_eq!(stdout(&second), values);
}

#[test]
fn exit_codes() {
    assert_eq!(magma(&["eval"], "(subset? x x)").status.code(), Some(1));
    assert_eq!(magma(&["eval"], "(ai (at tag 0 1)").status.code(), Some(2));
    assert_eq!(magma(&["eval", "-d", "reals"], "").status.code(), Some(2));
    assert_eq!(magma(&["check", "no-such-suite"], "").status.code(), Some(2));
    assert_eq!(magma(&["demo", "no-such-demo"], "").status.code(), Some(2));
    assert_eq!(magma(&["oracle", "--atoms", "bogus"], "").status.code(), Some(2));
    assert_eq!(magma(&["demo", "antisymmetry", "-d", "qdup"], "").status.code(), Some(1));
}

#[test]
fn errors_name_position_and_subexpression() {
    let o = magma(&["eval"], "(subset? (ai (at tag 0 1))\n  (pr nope))");
    let err = stderr(&o);
    assert!(err.contains("2:7"), "{err}");
    assert!(err.contains("nope"), "{err}");
}

#[test]
fn check_runs_a_suite() {
    let o = magma(&["check", "pair-theorem", "--seed", "7", "--cases", "200"], "");
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.starts_with("suite pair-theorem seed=7 cases=200"));
    assert!(out.trim_end().ends_with("result pair-theorem PASS"));
}

#[test]
fn oracle_reports_no_mismatches() {
    let o = magma(&["oracle", "--atoms", "plane2", "--depth", "2"], "");
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn repl_keeps_going_after_errors() {
    let o = magma(&["repl"], "(let x (ai (at tag 0 3)))\n(pr\n  x)\n(bogus)\n(subset? x (pr x))\n");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "(ai (at tag 0 3))\n(mi (ai (at tag 0 3)))\nfalse\n");
    assert!(stderr(&o).contains("bogus"));
    assert_eq!(magma(&["repl"], "(pr\n").status.code(), Some(2));
}

#[test]
fn config_file_sets_domain_and_seeds() {
    let dir = std::env::temp_dir().join(format!("magma-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("plane.cfg");
    std::fs::write(&cfg, "# plane with custom seeds\ndomain = plane\na0 = (at plane 0 5)\na1 = (at plane 5 0)\n")
        .unwrap();
    let o = magma(&["eval", "-c", cfg.to_str().unwrap()], "(fst (pair (ai (at plane 1 1)) (ai (at plane 2 2))))");
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o), "(ai (at plane 1 1))\n");
    std::fs::write(&cfg, "colour = blue\n").unwrap();
    assert_eq!(magma(&["eval", "-c", cfg.to_str().unwrap()], "").status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}
