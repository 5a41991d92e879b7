//! End-to-end tests of the binary: output bytes, formats, and the
//! exit-code contract (0 success, 1 counterexample, 2 usage error).

use std::process::{Command, Output};

fn amnum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_amnum"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = amnum(args);
    assert!(out.status.success(), "{args:?}: {out:?}");
    String::from_utf8(out.stdout).unwrap()
}

fn exit_code(args: &[&str]) -> i32 {
    amnum(args).status.code().expect("exit code")
}

const TABLE_TSV: &str = "\
k\\n\t1\t2\t3\t4\t5\t6\t7\t8\t9\t10
2\t1\t-1\t0\t1\t0\t-3\t0\t17\t0\t-155
3\t1\t-2\t1\t4\t-5\t-26\t49\t328\t-809\t-6710
4\t1\t-3\t3\t9\t-25\t-99\t427\t2193\t-12465\t-79515
5\t1\t-4\t6\t16\t-74\t-264\t1946\t9056\t-88434\t-512024
6\t1\t-5\t10\t25\t-170\t-575\t6370\t28225\t-415826\t-2294975
";

#[test]
fn table_tsv_is_byte_exact() {
    assert_eq!(stdout(&["table", "--k", "2..6", "--n", "1..10"]), TABLE_TSV);
    assert_eq!(
        stdout(&["table", "--k", "2..6", "--n", "1..10", "--format", "tsv"]),
        TABLE_TSV
    );
}

#[test]
fn table_json_row() {
    let out = stdout(&["table", "--k", "2..2", "--n", "1..10", "--format", "json"]);
    let parsed: serde_json::Value = serde_json::from_str(&out).unwrap();
    let cells = parsed.as_array().unwrap();
    assert_eq!(cells.len(), 10);
    assert_eq!(cells[0]["n"], 1);
    assert_eq!(cells[0]["h"], 1);
    assert_eq!(cells[0]["k"], 2);
    assert_eq!(cells[0]["value"], "1");
    assert_eq!(cells[7]["value"], "17");
    assert_eq!(cells[9]["value"], "-155");
}

#[test]
fn value_outputs() {
    assert_eq!(stdout(&["value", "m", "--n", "8", "--h", "1", "--k", "2"]), "17\n");
    assert_eq!(stdout(&["value", "a", "--n", "5", "--k", "3"]), "-5\n");
    assert_eq!(
        stdout(&["value", "gy", "--n", "3", "--j", "2", "--h", "1", "--k", "1"]),
        "3/2\n"
    );
    assert_eq!(stdout(&["value", "fox", "--n", "4", "--r", "1", "--s", "2"]), "5\n");
    assert_eq!(
        stdout(&["value", "m", "--n", "10", "--h", "-3", "--k", "-7"]),
        stdout(&["value", "m", "--n", "10", "--h", "-3", "--k", "-7"])
    );
}

#[test]
fn poly_outputs() {
    assert_eq!(stdout(&["poly", "--n", "2"]), "h^2 - h k\n");
    assert_eq!(stdout(&["poly", "--n", "0"]), "0\n");
    assert_eq!(
        stdout(&["poly", "--n", "6"]),
        "h^6 - 3 h^5 k + 5/2 h^4 k^2 - 1/2 h^2 k^4\n"
    );
}

#[test]
fn seq_bfile_outputs() {
    assert_eq!(
        stdout(&["seq", "--family", "a", "--k", "3", "--n", "1..10", "--format", "bfile"]),
        "1 1\n2 -2\n3 1\n4 4\n5 -5\n6 -26\n7 49\n8 328\n9 -809\n10 -6710\n"
    );
    // Genocchi family is the k = 2 column
    assert_eq!(
        stdout(&["seq", "--family", "genocchi", "--n", "1..8"]),
        "1 1\n2 -1\n3 0\n4 1\n5 0\n6 -3\n7 0\n8 17\n"
    );
    // empty range: empty output, success
    let out = amnum(&["seq", "--family", "genocchi", "--n", "5..4"]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    // scaled Euler values at 0
    assert_eq!(
        stdout(&["seq", "--family", "fox0", "--s", "2", "--n", "0..8"]),
        "0 1\n1 -1\n2 0\n3 2\n4 0\n5 -16\n6 0\n7 272\n8 0\n"
    );
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(exit_code(&["table", "--k", "3..2", "--n", "1..5"]), 2);
    assert_eq!(exit_code(&["table", "--k", "2..6", "--n", "x..3"]), 2);
    assert_eq!(exit_code(&["table", "--k", "-1..1", "--n", "1..4"]), 2);
    assert_eq!(exit_code(&["value", "m", "--n", "3", "--h", "1", "--k", "0"]), 2);
    assert_eq!(exit_code(&["value", "gy", "--n", "3", "--j", "0", "--h", "1", "--k", "1"]), 2);
    assert_eq!(exit_code(&["value", "fox", "--n", "3", "--r", "1", "--s", "0"]), 2);
    assert_eq!(exit_code(&["verify", "--suite", "no-such-suite"]), 2);
    assert_eq!(exit_code(&["seq", "--family", "a", "--n", "1..5"]), 2);
    assert_eq!(exit_code(&["seq", "--family", "fox0", "--n", "1..5"]), 2);
    assert_eq!(exit_code(&["frobnicate"]), 2);
}

#[test]
fn verify_small_suites_pass() {
    let out = amnum(&[
        "verify", "--suite", "am-integrality", "--max-n", "10", "--max-h", "4", "--max-k", "4",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("am-integrality: PASS"), "{text}");
    // progress goes to stderr only
    assert!(String::from_utf8(out.stderr).unwrap().contains("running"));
}

#[test]
fn verify_output_is_identical_across_jobs() {
    let run = |jobs: &str| {
        let out = amnum(&[
            "verify", "--suite", "route-equivalence", "--max-n", "8", "--max-h", "3", "--max-k",
            "3", "--jobs", jobs,
        ]);
        assert!(out.status.success());
        out.stdout
    };
    assert_eq!(run("1"), run("4"));
}
