//! The `stabweight` binary: outputs and exit codes.

use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stabweight")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("stabweight-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn params_reports_w_and_w_avg() {
    let g1 = temp_file("g1.txt", "# G1\nXXXI\nIYYY\nZIZZ\n");
    let o = run(&["params", g1.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("[[4,1,2;3]] W=3 W_avg=3\n"), "{}", stdout(&o));

    let g2 = temp_file("g2.txt", "XXXX\nZZZZ\nXXII\n");
    let o = run(&["params", g2.to_str().unwrap(), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["parameters"]["w"], 4);
    assert_eq!(v["parameters"]["w_avg"], "8/3");
}

#[test]
fn usage_and_budget_exit_codes() {
    let empty = temp_file("empty.txt", "# nothing\n");
    assert_eq!(run(&["params", empty.to_str().unwrap()]).status.code(), Some(1));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(1));
    assert_eq!(run(&["table", "--max-n", "3"]).status.code(), Some(1));
    assert_eq!(run(&["--jobs", "0", "arch-bound", "10", "2", "3"]).status.code(), Some(1));
    let five = temp_file("five.txt", "XZZXI\nIXZZX\nXIXZZ\nZXIXZ\n");
    let o = run(&["--max-group-rank", "2", "params", five.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn table_for_n4_has_two_rows() {
    let o = run(&["--jobs", "1", "table", "--max-n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "n,k,d,wlb,wub,wub_computed,source\n4,1,2,3,3,3,rate-rule\n4,2,2,4,4,4,nk-bound\n"
    );
    assert!(String::from_utf8_lossy(&o.stderr).contains("n = 4 done"));
}

#[test]
fn lp_check_verdicts() {
    assert_eq!(stdout(&run(&["lp-check", "8", "3", "3", "5"])), "infeasible (no code with W <= 5)\n");
    assert_eq!(stdout(&run(&["lp-check", "5", "2", "3"])), "infeasible (no code)\n");
    let lp = temp_file("lp.txt", "vars 2\n1 1 >= 3\n1 0 <= 1\n0 1 <= 1\n");
    let o = run(&["lp-check", "--lp", lp.to_str().unwrap(), "--certificate"]);
    assert_eq!(stdout(&o), "infeasible\ncertificate 1 1 1\n");
}

#[test]
fn reduce_agrees_with_the_direct_decision() {
    let mld = temp_file("mld.txt", "1 1 0 0\n0 0 1 1\n1 0\n1\n");
    let o = run(&["reduce", "--from", "mld", mld.to_str().unwrap(), "--decide"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("source YES\nreduced YES\n"), "{text}");
    assert!(text.contains("# MW-SG instance\nZZIIIIII\n"));
}

#[test]
fn verify_catalog_exit_codes() {
    let o = run(&["verify-catalog"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 83);
    assert_eq!(run(&["verify-catalog", "--strict"]).status.code(), Some(3));
    let bad = temp_file("bad.txt", "[[6,4,2;6]] ; optimal ; GENS(XXXXXX,ZZZZII) ;\n");
    assert_eq!(run(&["verify-catalog", "--catalog", bad.to_str().unwrap()]).status.code(), Some(3));
}

#[test]
fn enumerators_json() {
    let g1 = temp_file("g1e.txt", "XXXI\nIYYY\nZIZZ\n");
    let o = run(&["enumerators", g1.to_str().unwrap(), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["A"], serde_json::json!(["1", "0", "0", "4", "3"]));
    assert_eq!(v["distance"], "2");
}
