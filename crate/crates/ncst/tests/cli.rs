use std::f64::consts::PI;
use std::process::{Command, Output};

fn ncst(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ncst"))
        .args(args)
        .output()
        .expect("binary runs")
}

/// Data lines of a CSV report: header first, `#` metadata skipped.
fn table(out: &Output) -> Vec<Vec<String>> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .comment(Some(b'#'))
        .from_reader(out.stdout.as_slice());
    rdr.records()
        .map(|r| r.unwrap().iter().map(str::to_owned).collect())
        .collect()
}

fn column(t: &[Vec<String>], name: &str) -> Vec<String> {
    let i = t[0]
        .iter()
        .position(|c| c == name)
        .unwrap_or_else(|| panic!("no column {name}"));
    t[1..].iter().map(|r| r[i].clone()).collect()
}

#[test]
fn spectra_lattice_example() {
    let out = ncst(&[
        "spectra",
        "--epsilon",
        "-1",
        "--ell",
        "1",
        "--mass",
        "1",
        "--k",
        "4",
        "--format",
        "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let t = table(&out);
    assert_eq!(
        t[0],
        [
            "case",
            "epsilon",
            "ell",
            "mass",
            "delta",
            "n",
            "E_analytic",
            "E_numeric",
            "abs_diff"
        ]
    );
    assert_eq!(t.len(), 4);
    let e: Vec<f64> = column(&t, "E_analytic")
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    for (got, want) in e.iter().zip([0.25, 0.5, 0.25]) {
        assert!((got - want).abs() <= 1e-15);
    }
    for d in column(&t, "abs_diff") {
        assert!(d.parse::<f64>().unwrap() <= 1e-12);
    }
}

#[test]
fn counting_undeformed_cells_are_pi() {
    let out = ncst(&[
        "counting", "--ell", "0", "--delta", "3.14159", "--levels", "5",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let t = table(&out);
    assert_eq!(t.len(), 6);
    for c in column(&t, "cell_closed_form") {
        assert_eq!(c.parse::<f64>().unwrap(), PI);
    }
    for c in column(&t, "cell") {
        assert!((c.parse::<f64>().unwrap() - PI).abs() <= 1e-12);
    }
}

#[test]
fn uncertainty_schema() {
    let out = ncst(&[
        "uncertainty",
        "--alpha-start",
        "0.5",
        "--alpha-stop",
        "2",
        "--steps",
        "4",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let t = table(&out);
    assert_eq!(
        t[0][..8],
        [
            "alpha",
            "ell",
            "dx",
            "dp",
            "product",
            "bound",
            "bound_kind",
            "satisfied"
        ]
    );
    assert!(t[0].iter().any(|c| c == "p2_deviation"));
    assert_eq!(t.len(), 5);
    assert!(column(&t, "satisfied").iter().all(|s| s == "true"));
}

#[test]
fn json_rows_carry_the_csv_columns() {
    let csv = table(&ncst(&["dos", "--ell", "0.1"]));
    let out = ncst(&["dos", "--ell", "0.1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let keys: Vec<&String> = doc["rows"][0].as_object().unwrap().keys().collect();
    assert_eq!(keys, csv[0].iter().collect::<Vec<_>>());
    assert_eq!(doc["meta"]["command"], "dos");
    let product: f64 = column(&csv, "product")[0].parse().unwrap();
    assert_eq!(doc["rows"][0]["product"].as_f64().unwrap(), product);
}

#[test]
fn verify_passes() {
    let out = ncst(&["verify"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let t = table(&out);
    assert!(column(&t, "status").iter().all(|s| s == "PASS"));
    assert!(String::from_utf8_lossy(&out.stderr).contains(" 0 FAIL"));
}

#[test]
fn reports_are_byte_identical() {
    for args in [
        &["spectra", "--epsilon", "-1", "--k", "12"][..],
        &["momstats", "--steps", "7", "--format", "json"],
        &["gup", "--c", "0.5"],
        &["measures", "--tau", "3"],
    ] {
        let a = ncst(args);
        let b = ncst(args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.csv");
    let out = ncst(&["measures", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("z_flat"));
}

#[test]
fn argument_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let bad_path = dir.path().join("missing").join("r.csv");
    for args in [
        &["frobnicate"][..],
        &["spectra", "--epsilon", "2", "--k", "4"],
        &["spectra", "--k", "4", "--delta", "4"],
        &["spectra", "--epsilon", "-1"],
        &["spectra", "--epsilon", "-1", "--ell", "1", "--delta", "4.5"],
        &["spectra", "--epsilon", "-1", "--k", "4", "--levels", "4"],
        &["uncertainty", "--alpha-start", "2", "--alpha-stop", "1"],
        &["momstats", "--steps", "0"],
        &["dos", "--ell", "3"],
        &["gup", "--dp-min", "0"],
        &["measures", "--format", "xml"],
        &["measures", "--out", bad_path.to_str().unwrap()],
    ] {
        assert_eq!(ncst(args).status.code(), Some(1), "{args:?}");
    }
    assert_eq!(ncst(&["--help"]).status.code(), Some(0));
    assert_eq!(ncst(&["--version"]).status.code(), Some(0));
}
