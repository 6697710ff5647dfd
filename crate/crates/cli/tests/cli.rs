//! End-to-end tests of the binary: golden outputs, the pipe round
//! trip, byte determinism, and exit codes.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn colcomp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_colcomp"))
        .args(args)
        .env_remove("COLCOMP_FORMAT")
        .output()
        .expect("binary runs")
}

fn colcomp_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_colcomp"))
        .args(args)
        .env_remove("COLCOMP_FORMAT")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .take()
        .expect("stdin piped")
        .write_all(input.as_bytes())
        .expect("stdin write");
    child.wait_with_output().expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    assert!(
        output.status.success(),
        "command failed: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    String::from_utf8(output.stdout.clone()).expect("utf8 output")
}

#[test]
fn enumerate_count_golden() {
    let out = colcomp(&["enumerate", "--m", "2", "--n", "2", "--format", "count"]);
    assert_eq!(stdout_of(&out), "6\n");
}

#[test]
fn enumerate_text_is_canonical_order() {
    let out = colcomp(&["enumerate", "--m", "2", "--n", "2"]);
    assert_eq!(
        stdout_of(&out),
        "1c0,1c0\n1c0,1c1\n1c1,1c0\n1c1,1c1\n2c0\n2c1\n"
    );
}

#[test]
fn down_covers_golden() {
    let out = colcomp(&["covers", "--down", "--m", "2", "--comp", "1c0,1c1,1c0"]);
    assert_eq!(stdout_of(&out), "1c0,1c0\n1c0,1c1\n1c1,1c0\n2c0\n");
}

#[test]
fn mobius_all_methods_agree() {
    let out = colcomp(&[
        "mobius",
        "--m",
        "2",
        "--to",
        "1c0,1c1,1c0",
        "--method",
        "all",
    ]);
    assert_eq!(stdout_of(&out), "-1 -1 -1\n");
}

#[test]
fn mobius_series_json() {
    let out = colcomp(&[
        "mobius", "--m", "2", "--series", "--n", "4", "--format", "json",
    ]);
    assert_eq!(
        stdout_of(&out),
        "{\"signed\":[1,-2,2,-2,2],\"unsigned\":[1,2,2,2,2]}\n"
    );
}

#[test]
fn perm_chain_round_trip() {
    for perm in ["2c1,1c0,7c0,6c1,3c1,4c1,5c0,8c0", "1c0", "3c2,1c0,2c1", ""] {
        let chain = colcomp(&[
            "perm-to-chain",
            "--m",
            "3",
            "--perm",
            perm,
            "--format",
            "json",
        ]);
        let back = colcomp_with_stdin(&["chain-to-perm"], &stdout_of(&chain));
        assert_eq!(stdout_of(&back), format!("{perm}\n"));
    }
}

#[test]
fn descents_golden() {
    let out = colcomp(&[
        "descents",
        "--m",
        "2",
        "--perm",
        "1c0,2c1,3c1,4c0,8c1,5c1,7c0,6c0",
    ]);
    assert_eq!(stdout_of(&out), "1c0,2c1,1c0,1c1,1c1,1c0,1c0\n");
}

#[test]
fn hasse_golden() {
    let out = colcomp(&["hasse", "--m", "2", "--n", "1"]);
    assert_eq!(
        stdout_of(&out),
        "digraph {\n  rankdir=BT;\n  \"∅\";\n  \"1c0\";\n  \"1c1\";\n  \"∅\" -> \"1c0\";\n  \"∅\" -> \"1c1\";\n}\n"
    );
}

#[test]
fn lex_first_chain_golden() {
    let out = colcomp(&[
        "chains",
        "--m",
        "2",
        "--from",
        "3c0",
        "--to",
        "2c0,2c0,1c1,2c0",
        "--lex-first",
    ]);
    assert_eq!(
        stdout_of(&out),
        "2c0,2c0,1c1,2c0 > 1c0,2c0,1c1,2c0 > 2c0,1c1,2c0 > 1c0,1c1,2c0 > 3c0 | (1,1),(1,1),(2,1),(3,2)\n"
    );
}

#[test]
fn qsym_checks_pass() {
    let out = colcomp(&["qsym", "pieri", "--m", "2", "--comp", "2c0"]);
    assert_eq!(stdout_of(&out), "ok pieri: 2c0 at N=3\n");
    let out = colcomp(&[
        "qsym", "shuffle", "--m", "2", "--u", "1c0", "--v", "1c1,2c1",
    ]);
    assert_eq!(stdout_of(&out), "ok shuffle: 1c0 with 1c1,2c1 at N=3\n");
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = [
        "chains",
        "--m",
        "2",
        "--to",
        "2c0,1c1",
        "--labeled",
        "--format",
        "json",
    ];
    let first = colcomp(&args);
    let second = colcomp(&args);
    assert_eq!(stdout_of(&first), stdout_of(&second));
}

#[test]
fn verify_suite_runs_clean() {
    let out = colcomp(&["verify", "--suite", "mobius", "--m", "2", "--n", "3"]);
    let text = stdout_of(&out);
    assert!(text.starts_with("ok mobius:"), "unexpected output: {text}");
}

#[test]
fn exit_codes() {
    // domain error: incomparable interval
    let out = colcomp(&["mobius", "--m", "2", "--from", "1c1", "--to", "3c0"]);
    assert_eq!(out.status.code(), Some(1));
    // domain error: color out of range in input
    let out = colcomp(&["covers", "--m", "2", "--comp", "1c2"]);
    assert_eq!(out.status.code(), Some(1));
    // usage error: unknown flag (clap)
    let out = colcomp(&["enumerate", "--m", "2", "--n", "2", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));
    // usage error: format not supported by the verb
    let out = colcomp(&["enumerate", "--m", "2", "--n", "2", "--format", "dot"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn env_var_sets_default_format_and_flag_wins() {
    let with_env = Command::new(env!("CARGO_BIN_EXE_colcomp"))
        .args(["enumerate", "--m", "2", "--n", "1"])
        .env("COLCOMP_FORMAT", "count")
        .output()
        .expect("binary runs");
    assert_eq!(stdout_of(&with_env), "2\n");

    let flag_wins = Command::new(env!("CARGO_BIN_EXE_colcomp"))
        .args(["enumerate", "--m", "2", "--n", "1", "--format", "text"])
        .env("COLCOMP_FORMAT", "count")
        .output()
        .expect("binary runs");
    assert_eq!(stdout_of(&flag_wins), "1c0\n1c1\n");
}
