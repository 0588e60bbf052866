use std::process::{Command, Output};

use hookseries::identities::IdentityReport;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hookseries")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_single_identity() {
    let o = run(&["verify", "--id", "nekrasov-okounkov", "--degree", "8"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("nekrasov-okounkov"));
}

#[test]
fn verify_json_parses() {
    let o = run(&["verify", "--id", "extension", "--degree", "6", "--t", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let reports: Vec<IdentityReport> = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(reports.len(), 1);
    assert!(reports[0].verified);
    assert_eq!(reports[0].degree, 6);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["verify", "--id", "no-such-identity"],
        vec!["verify", "--degree", "-1"],
        vec!["verify", "--degree", "1000"],
        vec!["verify", "--format", "xml"],
        vec!["inspect", "--partition", "3,x"],
        vec!["inspect", "--partition", "1,3", "--t", "2"],
        vec!["frobnicate"],
    ] {
        assert_eq!(run(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn large_degree_needs_opt_in() {
    let o = run(&["verify", "--id", "pentagonal", "--degree", "60", "--allow-large"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn inspect_worked_partition() {
    let o = run(&["inspect", "--partition", "6,5,3,3", "--t", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("…0001110.011010111…"), "{text}");
    assert!(text.contains("(2) (2,2,1)"), "{text}");
}

#[test]
fn inspect_core_codings() {
    let o = run(&["inspect", "--partition", "14,10,6,6,4,4,4,2,2,2", "--t", "5", "--coding", "v"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("5, 16, 2, -12, -11") || text.contains("5,16,2,-12,-11"), "{text}");
}

#[test]
fn coeff_subcommands() {
    let o = run(&["coeff", "revert", "--degree", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("1 1 3 10 38 153 646"));
    let o = run(&["coeff", "tcores", "--t", "2", "--max", "6"]);
    assert!(stdout(&o).contains("1 1 0 1 0 0 1"));
    let o = run(&["coeff", "hook-sum", "--n", "3", "--k", "2"]);
    assert!(stdout(&o).contains("22"));
}
