//! End-to-end checks of the command-line front end: values, exit codes,
//! byte-stable output, and the optional table cache.

use std::process::Command;

fn arcword(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_arcword"))
        .args(args)
        .env_remove("ARCWORD_CACHE_DIR")
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap_or(-1),
    )
}

#[test]
fn h_values_and_methods() {
    let (stdout, _, code) = arcword(&["h", "0022"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("h(0022) = 1"));
    let (stdout, _, code) = arcword(&["h", "0"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("h(0) = 0"));
    let (stdout, _, code) = arcword(&["h", "020242", "--certify"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("h(020242) = 2"));
    assert!(stdout.contains("method: symbolic"));
    let (stdout, _, code) = arcword(&["h", "0202024242", "--rules-only"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("unknown"));
}

#[test]
fn parse_errors_exit_2() {
    let (_, stderr, code) = arcword(&["h", "031"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("odd digit"));
    let (_, _, code) = arcword(&["verify", "bogus", "--max-length", "4"]);
    assert_eq!(code, 2);
    let (_, _, code) = arcword(&["dg", "--n", "9"]);
    assert_eq!(code, 2);
}

#[test]
fn confs_listings() {
    let (stdout, _, code) = arcword(&["confs", "20", "--class", "all"]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("0 configurations"));
    let (stdout, _, _) = arcword(&["confs", "0202462424", "--class", "irr"]);
    assert!(stdout.starts_with("1 configurations"));
    let (stdout, _, _) = arcword(&["confs", "0220420422", "--class", "steady"]);
    assert!(stdout.starts_with("2 configurations"));
}

#[test]
fn table_output_is_byte_stable() {
    let (a, _, code) = arcword(&["table", "--length", "6", "--conf-connected"]);
    assert_eq!(code, 0);
    let (b, _, _) = arcword(&["table", "--length", "6", "--conf-connected"]);
    assert_eq!(a, b);
    assert_eq!(
        a,
        "word,h,conf_count,poly\n\
         020242,2,3,x^2 + 2\n\
         000222,1,6,x^3 + 2x^2 + 2x + 1\n\
         002022,1,4,x^2 + 2x + 1\n"
    );
    let (json, _, _) = arcword(&["table", "--length", "4", "--conf-connected", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["rows"][0]["word"], "0022");
    assert_eq!(v["rows"][0]["poly"], serde_json::json!([1, 1]));
}

#[test]
fn verify_exit_codes() {
    let (stdout, _, code) = arcword(&["verify", "sandwich", "--max-length", "4"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("counterexamples: 0"));
    let (stdout, _, code) = arcword(&["verify", "vertex-over", "--max-length", "6"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("counterexamples: 0"));
}

#[test]
fn dg_formats() {
    let (stdout, _, code) = arcword(&["dg", "--n", "2"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("DG(4) has 5 vertices, 4 edges"));
    let (dot, _, _) = arcword(&["dg", "--n", "2", "--format", "dot"]);
    assert!(dot.starts_with("digraph dg {"));
    let (json, _, _) = arcword(&["dg", "--n", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["vertices"].as_array().unwrap().len(), 5);
}

#[test]
fn table_cache_round_trip() {
    let dir = std::env::temp_dir().join("arcword-cache-test");
    let _ = std::fs::remove_dir_all(&dir);
    let run = || {
        let out = Command::new(env!("CARGO_BIN_EXE_arcword"))
            .args(["table", "--length", "4", "--conf-connected"])
            .env("ARCWORD_CACHE_DIR", &dir)
            .output()
            .unwrap();
        (
            String::from_utf8(out.stdout).unwrap(),
            String::from_utf8(out.stderr).unwrap(),
        )
    };
    let (a, _) = run();
    let (b, stderr) = run();
    assert_eq!(a, b);
    assert!(stderr.contains("loaded cached table"));
    let _ = std::fs::remove_dir_all(&dir);
}
