use std::process::{Command, Output};

fn bary(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bary"))
        .args(args)
        .env_remove("BARY_WORKERS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn binom_values() {
    for (args, want) in [
        (vec!["--n", "-6", "--k", "7"], "-4\n"),
        (vec!["--n", "-6", "--k", "-8"], "3\n"),
        (vec!["--n", "-6", "--k", "-8", "--variant", "star"], "-1\n"),
        (vec!["--n", "-6", "--k", "7", "--variant", "dstar"], "15\n"),
        (vec!["--n", "-6", "--k", "7", "--method", "series"], "-4\n"),
        (vec!["--n", "-6", "--k", "7", "--method", "partition"], "-4\n"),
        (vec!["--n", "6", "--k", "5"], "2\n"),
    ] {
        let mut full = vec!["binom", "--base", "4"];
        full.extend(args.iter().copied());
        let out = bary(&full);
        assert_eq!(code(&out), 0, "{full:?}");
        assert_eq!(stdout(&out), want, "{full:?}");
    }
}

#[test]
fn binom_json_uses_decimal_strings() {
    let out = bary(&["binom", "--base", "2", "--n", "-1", "--k", "-200", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["value"], "-1");
    assert_eq!(v["k"], "-200");
    assert_eq!(v["variant"], "std");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["binom", "--base", "1", "--n", "3", "--k", "1"],
        vec!["binom", "--base", "4", "--n", "6", "--k", "1", "--variant", "star"],
        vec!["binom", "--base", "4", "--n", "0", "--k", "1", "--variant", "dstar"],
        vec!["binom", "--base", "4", "--n", "x", "--k", "1"],
        vec!["expand", "--base", "4", "--n", "-6", "--at", "middle", "--order", "3"],
        vec!["table", "--kind", "table2"],
        vec!["verify", "--suite", "nope"],
        vec!["verify", "--suite", "lucas", "--prime", "4"],
        vec!["frobnicate"],
    ] {
        let out = bary(&args);
        assert_eq!(code(&out), 2, "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn bad_worker_count_is_a_usage_error() {
    let out = Command::new(env!("CARGO_BIN_EXE_bary"))
        .args(["binom", "--base", "4", "--n", "1", "--k", "1"])
        .env("BARY_WORKERS", "zero")
        .output()
        .unwrap();
    assert_eq!(code(&out), 2);
}

#[test]
fn expand_rows() {
    let out = bary(&["expand", "--base", "4", "--n", "-6", "--at", "zero", "--order", "8"]);
    let rows: Vec<String> = stdout(&out).lines().map(String::from).collect();
    assert_eq!(rows[0], "exponent\tcoefficient");
    let coeffs: Vec<&str> = rows[1..].iter().map(|r| r.split('\t').nth(1).unwrap()).collect();
    let exps: Vec<&str> = rows[1..].iter().map(|r| r.split('\t').next().unwrap()).collect();
    assert_eq!(coeffs, ["1", "-2", "3", "-4", "4", "-4", "4", "-4"]);
    assert_eq!(exps, ["0", "1", "2", "3", "4", "5", "6", "7"]);

    let out = bary(&["expand", "--base", "4", "--n", "-6", "--at", "infinity", "--order", "3"]);
    assert_eq!(stdout(&out), "exponent\tcoefficient\n-6\t1\n-7\t-2\n-8\t3\n");

    let out = bary(&["expand", "--base", "2", "--n", "3", "--at", "zero", "--order", "4", "--format", "json"]);
    let coeffs: Vec<String> = stdout(&out)
        .lines()
        .map(|l| serde_json::from_str::<serde_json::Value>(l).unwrap()["coefficient"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(coeffs, ["1", "1", "1", "1"]);
}

#[test]
fn table1_rows() {
    let out = bary(&["table", "--kind", "table1"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let rows: Vec<Vec<&str>> = text.lines().skip(1).map(|l| l.split('\t').skip(1).collect()).collect();
    assert_eq!(rows.len(), 10);
    assert_eq!(rows[0].join(" "), "0 0 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0");
    assert_eq!(rows[9][14], "6");
}

#[test]
fn standard_defects_are_zero_off_multiples_of_the_base() {
    let out = bary(&["table", "--kind", "pascal-defect", "--base", "4", "--variant", "std", "--nmax", "5", "--kmax", "5"]);
    for row in stdout(&out).lines().skip(1) {
        let fields: Vec<&str> = row.split('\t').collect();
        if fields[0] != "4" {
            assert!(fields[1..].iter().all(|&v| v == "0"), "{row}");
        }
    }
}

#[test]
fn verify_passing_suites() {
    for args in [
        vec!["verify", "--suite", "symmetry", "--base", "4", "--nmax", "30", "--kmax", "60"],
        vec!["verify", "--suite", "lucas", "--prime", "5", "--nmax", "40"],
        vec!["verify", "--suite", "cross-oracle", "--base", "3", "--nmax", "40", "--kmax", "80"],
    ] {
        let out = bary(&args);
        assert_eq!(code(&out), 0, "{args:?}");
        let row = stdout(&out).lines().nth(1).unwrap().to_string();
        assert_eq!(row.split('\t').nth(1), Some("PASS"), "{row}");
    }
}

#[test]
fn verify_failures_exit_1_with_witnesses_on_stderr() {
    let out = bary(&["verify", "--suite", "pascal", "--base", "3", "--nmax", "5", "--kmax", "5"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("\tFAIL\t"));
    let err = String::from_utf8(out.stderr).unwrap();
    assert_eq!(err, "pascal\tb=3 n=1 k=0: lhs=2 rhs=1\n");

    let out = bary(&["verify", "--suite", "pascal", "--base", "3", "--nmax", "5", "--kmax", "5", "--format", "json"]);
    assert_eq!(code(&out), 1);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["status"], "FAIL");
    assert_eq!(v["witnesses"][0]["inputs"]["n"], "1");
    assert_eq!(v["witnesses"][0]["lhs"], "2");
}

#[test]
fn output_is_deterministic_across_worker_counts() {
    let args = ["verify", "--suite", "chu-neg", "--nmax", "12", "--kmax", "20", "--format", "json"];
    let one = bary(&args);
    let four = Command::new(env!("CARGO_BIN_EXE_bary")).args(args).env("BARY_WORKERS", "4").output().unwrap();
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(one.status.code(), four.status.code());
    assert_eq!(one.stdout, bary(&args).stdout);
}

#[test]
fn partitions_listing() {
    let out = bary(&["partitions", "--base", "4", "--k", "7", "--len", "2"]);
    assert_eq!(stdout(&out), "partition\n(1,3)\n(0,7)\n");
    let out = bary(&["partitions", "--base", "4", "--k", "8", "--restrict", "6"]);
    assert_eq!(stdout(&out), "partition\n(1,4)\n");
}
