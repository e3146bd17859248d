mod schema_check;

use std::process::Command;

use permquot::classifier::ClassificationReport;
use permquot_cli::{run, Outcome, EXIT_INVALID, EXIT_OK};
use serde_json::Value;

fn invoke(args: &[&str]) -> Outcome {
    run(std::iter::once("permquot").chain(args.iter().copied()))
}

fn ok(args: &[&str]) -> String {
    let out = invoke(args);
    assert_eq!(out.code, EXIT_OK, "{args:?}: {}", out.stderr);
    out.stdout
}

#[test]
fn dim_examples() {
    assert_eq!(ok(&["dim", "--n", "2", "--d", "4", "--p", "2"]), "2\n");
    assert_eq!(ok(&["dim", "--n", "1", "--d", "0", "--p", "3"]), "0\n");
    assert_eq!(ok(&["dim", "--n", "3", "--d", "4", "--p", "3"]), "1\n");
    assert_eq!(ok(&["dim", "--n", "2", "--d", "3", "--p", "2"]), "-inf\n");
}

#[test]
fn dim_json_marks_infinity() {
    let v: Value = serde_json::from_str(&ok(&[
        "dim", "--n", "2", "--d", "3", "--p", "2", "--format", "json",
    ]))
    .unwrap();
    assert_eq!(
        v["dim"],
        serde_json::json!({"finite": false, "value": null})
    );
}

#[test]
fn classify_s2_char_two() {
    let out = ok(&["classify", "--n", "2", "--p", "2", "--group", "(1 2)"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["canonical"], "CERTIFIED");
    assert_eq!(v["pair_klt"], "FALSE");
    assert_eq!(v["pair_lc"], "TRUE");
    assert_eq!(
        v["gorenstein"]["boundary_coefficient"],
        serde_json::json!({"num": 1, "den": 1})
    );
}

#[test]
fn classify_presets() {
    let v: Value = serde_json::from_str(&ok(&[
        "classify",
        "--n",
        "4",
        "--p",
        "2",
        "--group-name",
        "A4",
    ]))
    .unwrap();
    assert_eq!(v["canonical"], "CERTIFIED");
    assert_eq!(v["group_order"], 12);
    for name in ["Sn", "An", "cyclic:3", "klein4", "trivial", "S4"] {
        ok(&["classify", "--n", "4", "--p", "3", "--group-name", name]);
    }
}

#[test]
fn classify_round_trips_and_matches_schema() {
    let schema = schema_check::load_schema();
    let cases: &[&[&str]] = &[
        &["--n", "2", "--p", "2", "--group", "(1 2)"],
        &["--n", "1", "--p", "3", "--group", ""],
        &["--n", "3", "--p", "3", "--group", "(1 2 3)"],
        &["--n", "4", "--p", "0", "--group-name", "klein4"],
        &["--n", "5", "--p", "5", "--group-name", "Sn"],
        &["--n", "4", "--p", "2", "--group", "(1 2);(3 4)"],
    ];
    for case in cases {
        let mut args = vec!["classify"];
        args.extend_from_slice(case);
        let out = ok(&args);
        let v: Value = serde_json::from_str(&out).unwrap();
        schema_check::validate(&schema, &v).unwrap_or_else(|e| panic!("{case:?}: {e}"));
        for entry in v["trace"].as_array().unwrap() {
            assert!(!entry["anchor"].as_str().unwrap().is_empty());
        }
        let report: ClassificationReport = serde_json::from_str(&out).unwrap();
        let again = serde_json::to_string_pretty(&report).unwrap() + "\n";
        assert_eq!(again, out);
    }
}

#[test]
fn schema_rejects_tampered_reports() {
    let schema = schema_check::load_schema();
    let good: Value = serde_json::from_str(&ok(&[
        "classify", "--n", "2", "--p", "2", "--group", "(1 2)",
    ]))
    .unwrap();
    let mut bad = good.clone();
    bad["canonical"] = "MAYBE".into();
    assert!(schema_check::validate(&schema, &bad).is_err());
    let mut bad = good.clone();
    bad["trace"][0]["anchor"] = "".into();
    assert!(schema_check::validate(&schema, &bad).is_err());
    let mut bad = good;
    bad["extra"] = 1.into();
    assert!(schema_check::validate(&schema, &bad).is_err());
}

#[test]
fn table_csv_respects_dimension_bound() {
    let out = ok(&[
        "table", "--max-n", "4", "--max-d", "12", "--p", "2", "--csv",
    ]);
    let mut reader = csv::Reader::from_reader(out.as_bytes());
    assert_eq!(
        reader.headers().unwrap(),
        vec!["n", "d", "p", "dim", "excess"]
    );
    let mut finite = 0;
    let mut rows = 0;
    for record in reader.records() {
        let record = record.unwrap();
        rows += 1;
        let d: i64 = record[1].parse().unwrap();
        let dim: permquot::ExtHalf = record[3].parse().unwrap();
        let excess: permquot::ExtHalf = record[4].parse().unwrap();
        if let Some(dim) = dim.finite() {
            finite += 1;
            let computed = dim - permquot::HalfInt::from_halves(d);
            assert_eq!(excess, permquot::ExtHalf::Finite(computed));
            assert!(computed.twice() <= 0, "{record:?}");
        } else {
            assert_eq!(&record[4], "-inf");
        }
    }
    assert_eq!(rows, 4 * 13);
    assert!(finite > 0);
}

#[test]
fn strata_and_sup() {
    let out = ok(&[
        "strata",
        "--n",
        "3",
        "--d",
        "4",
        "--p",
        "3",
        "--no-transposition",
    ]);
    assert!(out.contains("((3),(4))  dim=1  excess=-1  bound=-1 (galois-cubic)"));
    let out = ok(&["sup", "--n", "4", "--p", "2", "--no-transposition"]);
    assert!(out.starts_with("sup: -1\nlimit_minus_infinity: false\nworst: (2,2)\n"));
    let v: Value =
        serde_json::from_str(&ok(&["sup", "--n", "2", "--p", "7", "--format", "json"])).unwrap();
    assert_eq!(
        v["sup"],
        serde_json::json!({"finite": true, "value": {"num": -1, "den": 2}})
    );
}

#[test]
fn oracle_commands() {
    assert_eq!(
        ok(&["oracle", "as-count", "--p", "2", "--q", "4", "--jump", "3"]),
        "12\n"
    );
    assert_eq!(ok(&["oracle", "tame", "--q", "4", "--n", "3"]), "3\n");
    let out = ok(&[
        "oracle", "verify", "--p", "2", "--n", "2", "--d", "4", "--q", "2,4",
    ]);
    assert!(out.ends_with("ok: true\n"), "{out}");
    let csv_out = ok(&[
        "oracle", "verify", "--p", "3", "--n", "3", "--d", "4", "--q", "3,9", "--format", "csv",
    ]);
    assert_eq!(
        csv_out,
        "q,count,measured_dimension,predicted\n3,2,1,1\n9,8,1,1\n"
    );
}

#[test]
fn invalid_input_exits_two() {
    let cases: &[&[&str]] = &[
        &["dim", "--n", "2", "--d", "4", "--p", "4"],
        &["dim", "--n", "2", "--d", "-1", "--p", "2"],
        &["dim", "--n", "0", "--d", "1", "--p", "2"],
        &["frobnicate"],
        &["dim", "--n", "2", "--d", "4", "--p", "2", "--bogus"],
        &["classify", "--n", "2", "--p", "2", "--group", "(1 3)"],
        &["classify", "--n", "2", "--p", "2", "--group", "(1 2"],
        &["classify", "--n", "2", "--p", "2"],
        &[
            "classify",
            "--n",
            "2",
            "--p",
            "2",
            "--group",
            "(1 2)",
            "--group-name",
            "S2",
        ],
        &[
            "classify",
            "--n",
            "3",
            "--p",
            "2",
            "--group-name",
            "dihedral",
        ],
        &["oracle", "as-count", "--p", "2", "--q", "4", "--jump", "2"],
        &["oracle", "as-count", "--p", "5", "--q", "5", "--jump", "1"],
        &[
            "oracle", "verify", "--p", "5", "--n", "5", "--d", "4", "--q", "5",
        ],
        &["oracle", "tame", "--q", "4", "--n", "2"],
    ];
    for case in cases {
        let out = invoke(case);
        assert_eq!(out.code, EXIT_INVALID, "{case:?}");
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn help_succeeds() {
    let out = invoke(&["--help"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("classify"));
}

#[test]
fn binary_is_deterministic_and_reports_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_permquot");
    let args = ["classify", "--n", "4", "--p", "2", "--group-name", "A4"];
    let a = Command::new(bin).args(args).output().unwrap();
    let b = Command::new(bin).args(args).output().unwrap();
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);

    let table = [
        "table", "--max-n", "6", "--max-d", "20", "--p", "3", "--format", "json",
    ];
    let a = Command::new(bin).args(table).output().unwrap();
    let b = Command::new(bin).args(table).output().unwrap();
    assert_eq!(a.stdout, b.stdout);

    let bad = Command::new(bin)
        .args(["dim", "--n", "2", "--d", "4", "--p", "6"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
    let bad = Command::new(bin).args(["nope"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
