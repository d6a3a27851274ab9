use std::path::Path;
use std::process::{Command, Output};

fn qcong(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcong"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn eval_examples() {
    let out = qcong(&["eval", "qbinom", "4", "2", "1"]);
    assert_eq!(stdout(&out).trim(), "1 1 2 1 1");
    assert_eq!(out.status.code(), Some(0));

    let out = qcong(&["eval", "qint", "3", "--at", "2"]);
    assert_eq!(stdout(&out).trim(), "7");

    let out = qcong(&["eval", "qfermat", "3", "2"]);
    assert_eq!(stdout(&out).trim(), "0 1");
    let out = qcong(&["eval", "qfermat", "3", "2", "--pretty"]);
    assert_eq!(stdout(&out).trim(), "q");

    let out = qcong(&["eval", "qpoch", "qq", "3"]);
    assert_eq!(stdout(&out).trim(), "1 -1 -1 0 1 1 -1");

    let out = qcong(&["eval", "qint", "5", "--at", "1/2"]);
    assert_eq!(stdout(&out).trim(), "31/16");
}

#[test]
fn eval_domain_errors_exit_two() {
    // base divisible by the prime
    let out = qcong(&["eval", "qfermat", "5", "10"]);
    assert_eq!(out.status.code(), Some(2));
    // not a prime
    let out = qcong(&["eval", "qfermat", "6", "2"]);
    assert_eq!(out.status.code(), Some(2));
    // m > n
    let out = qcong(&["eval", "qbinom", "3", "5", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_table_sweep() {
    let out = qcong(&[
        "verify",
        "--statements",
        "WOLSTQ",
        "--primes",
        "3..19",
        "--format",
        "table",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    // primes 3, 5, 7, 11, 13, 17, 19 give one row each
    assert_eq!(text.lines().filter(|l| l.starts_with("WOLSTQ")).count(), 7);
    assert!(text.contains("7 instances: 7 hold"));
}

#[test]
fn verify_mutation_self_test_exits_one() {
    let out = qcong(&[
        "verify",
        "--statements",
        "LEHMERQ",
        "--primes",
        "3..31",
        "--mutate",
        "--format",
        "csv",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    for line in text.lines().skip(1) {
        assert!(line.contains("violated"), "unexpected row: {}", line);
    }
}

#[test]
fn verify_rejects_primeless_range() {
    let out = qcong(&["verify", "--primes", "4..4"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("no primes"), "stderr was: {}", err);
}

#[test]
fn verify_rejects_unknown_statement() {
    let out = qcong(&["verify", "--statements", "NOPE"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn report_round_trip() {
    let dir = std::env::temp_dir().join(format!("qcong-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let json_path = dir.join("report.json");

    let out = qcong(&[
        "verify",
        "--statements",
        "L21A,L52",
        "--primes",
        "3..13",
        "--m-values",
        "1..4",
        "--format",
        "json",
        "--output",
        json_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));

    let records = {
        let text = std::fs::read_to_string(&json_path).unwrap();
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(value["version"], "1");
        value["records"].as_array().unwrap().len()
    };

    let table = qcong(&["report", json_path.to_str().unwrap(), "--format", "table"]);
    assert_eq!(table.status.code(), Some(0));
    // header + rule + one line per record
    assert_eq!(stdout(&table).lines().count(), records + 2);

    let csv = qcong(&["report", json_path.to_str().unwrap(), "--format", "csv"]);
    let csv_text = stdout(&csv);
    assert_eq!(csv_text.lines().count(), records + 1);
    assert_eq!(
        csv_text.lines().next().unwrap(),
        "id,p,m,kind,verdict,oracle,limit_check,millis"
    );

    let truncated = dir.join("truncated.json");
    let full = std::fs::read_to_string(&json_path).unwrap();
    std::fs::write(&truncated, &full[..40]).unwrap();
    let bad = qcong(&["report", truncated.to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(2));

    std::fs::remove_dir_all(&dir).ok();
    assert!(!Path::new(&json_path).exists());
}

#[test]
fn list_covers_catalog() {
    let out = qcong(&["list"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for id in [
        "FLTQ",
        "WOLSTQ",
        "LEHMERQ",
        "MORLEYQ",
        "GRANVILLEQ",
        "L21A",
        "L22",
        "L52",
        "LEHMER",
        "GLAISHER",
    ] {
        assert!(
            text.lines().any(|l| l.starts_with(id)),
            "{} missing from list output",
            id
        );
    }
}
