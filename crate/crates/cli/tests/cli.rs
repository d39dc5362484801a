use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use evenzeta::{e_sum_theorem1, PiValue, Rational};
use serde_json::Value;

fn evenzeta() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_evenzeta"));
    cmd.env_remove("EVENZETA_PI_DIGITS");
    cmd
}

fn run(args: &[&str]) -> Output {
    evenzeta().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn golden(name: &str) -> String {
    let path: PathBuf = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("golden")
        .join(name);
    fs::read_to_string(path).expect("golden file")
}

#[test]
fn theorem3_value_prints_exact_form() {
    let out = run(&["value", "--n", "3", "--k", "3", "--method", "theorem3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().next(), Some("1/5040*pi^6"));
}

#[test]
fn json_value_matches_golden() {
    let out = run(&[
        "value", "--n", "2", "--k", "2", "--method", "series", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), golden("value_n2_k2_series.json"));

    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["coeff_num"], "1");
    assert_eq!(v["coeff_den"], "120");
    assert_eq!(v["pi_power"], 4);
    assert_eq!(v["weight"], 4);
    assert_eq!(v["depth"], 2);
    assert_eq!(v["method"], "series");
}

#[test]
fn json_key_set_is_the_same_for_every_method() {
    let expected = [
        "coeff_den",
        "coeff_num",
        "depth",
        "float_value",
        "method",
        "pi_power",
        "weight",
    ];
    for method in ["theorem1", "theorem3", "series", "symfunc", "oracle"] {
        let out = run(&[
            "value", "--n", "2", "--k", "1", "--method", method, "--format", "json",
        ]);
        assert_eq!(out.status.code(), Some(0), "{method}");
        let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
        let mut keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        keys.sort_unstable();
        assert_eq!(keys, expected, "{method}");
        if method == "oracle" {
            assert!(v["coeff_num"].is_null());
            assert!(v["coeff_den"].is_null());
        } else {
            assert_eq!(v["coeff_den"], "90", "{method}");
        }
    }
}

#[test]
fn exact_methods_agree_through_the_cli() {
    for (n, k) in [(1, 1), (4, 2), (5, 3), (5, 5)] {
        let (n, k) = (n.to_string(), k.to_string());
        let lines: Vec<String> = ["theorem1", "theorem3", "series", "symfunc"]
            .iter()
            .map(|m| {
                let out = run(&["value", "--n", &n, "--k", &k, "--method", m]);
                assert_eq!(out.status.code(), Some(0));
                stdout(&out).lines().next().unwrap().to_string()
            })
            .collect();
        assert!(lines.windows(2).all(|w| w[0] == w[1]), "{lines:?}");
    }
}

#[test]
fn csv_table_matches_golden_and_round_trips() {
    let out = run(&["table", "--max", "3", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text, golden("table_max3.csv"));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.csv");
    fs::write(&path, &text).unwrap();
    let mut reader = csv::Reader::from_path(&path).unwrap();
    let mut rows = 0;
    for record in reader.records() {
        let record = record.unwrap();
        let weight: u32 = record[0].parse().unwrap();
        let depth: u32 = record[1].parse().unwrap();
        let exact = format!("{}/{}*pi^{}", &record[3], &record[4], &record[2]);
        let parsed: PiValue = exact.parse().unwrap();
        let n = weight / 2;
        if depth > 0 {
            assert_eq!(parsed, e_sum_theorem1(n, depth).unwrap().value().clone());
        }
        let float: f64 = record[5].parse().unwrap();
        assert!((float - parsed.to_f64()).abs() < 1e-12 * float);
        rows += 1;
    }
    assert_eq!(rows, 9);
}

#[test]
fn single_row_table_has_row_sum() {
    let out = run(&["table", "--max", "1", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[1].starts_with("2,1,2,1,6,"));
    assert!(lines[2].starts_with("2,0,2,1,6,"));
}

#[test]
fn human_table_matches_golden() {
    let out = run(&["table", "--max", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), golden("table_max2.txt"));
}

#[test]
fn row_sum_equals_sum_of_row() {
    let mut sums = vec![Rational::from_integer(0.into()); 5];
    let mut row_sums = vec![None; 5];
    let out = run(&["table", "--max", "4", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let records: Vec<Value> = serde_json::from_str(&stdout(&out)).unwrap();
    for r in records {
        let n = r["weight"].as_u64().unwrap() as usize / 2;
        let c = Rational::new(
            r["coeff_num"].as_str().unwrap().parse().unwrap(),
            r["coeff_den"].as_str().unwrap().parse().unwrap(),
        );
        if r["depth"] == 0 {
            row_sums[n] = Some(c);
        } else {
            sums[n] += c;
        }
    }
    for n in 1..=4 {
        assert_eq!(row_sums[n].as_ref(), Some(&sums[n]), "n={n}");
    }
}

#[test]
fn usage_errors_exit_with_two() {
    let cases: &[&[&str]] = &[
        &["value", "--n", "1", "--k", "2"],
        &["value", "--n", "0", "--k", "0"],
        &["value", "--n", "2", "--k", "1", "--method", "bogus"],
        &["verify", "--suite", "bogus"],
        &["value", "--n", "13", "--k", "3", "--method", "symfunc"],
        &["frobnicate"],
    ];
    for args in cases {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn pi_digits_env_var() {
    let out = evenzeta()
        .env("EVENZETA_PI_DIGITS", "50")
        .args(["value", "--n", "1", "--k", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("1.6449340668482264364724151666460251892189499012068"));

    for bad in ["0", "101", "many"] {
        let out = evenzeta()
            .env("EVENZETA_PI_DIGITS", bad)
            .args(["value", "--n", "1", "--k", "1"])
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(2), "{bad}");
    }
}

#[test]
fn passing_suite_exits_zero() {
    for suite in ["bernoulli-identity", "pq-recurrence", "infprod", "newton"] {
        let out = run(&["verify", "--suite", suite, "--max", "8"]);
        assert_eq!(out.status.code(), Some(0), "{suite}");
        assert!(stdout(&out).contains("0 failed"), "{suite}");
    }
}

#[test]
fn failing_suite_exits_one() {
    let out = run(&[
        "verify",
        "--suite",
        "oracle",
        "--max",
        "3",
        "--limit",
        "10",
        "--no-extrapolate",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL"));
}
