//! One PASS/FAIL line per acceptance criterion. Criteria 1–7 are the
//! invariant suites; criterion 8 runs the `verify` binary twice.

use std::process::Command;

use ncst::suites::{Check, SUITES};

fn report(id: usize, title: &str, checks: &[Check]) -> bool {
    let ok = !checks.is_empty() && checks.iter().all(|c| c.passed);
    println!(
        "{} criterion {id}: {title}",
        if ok { "PASS" } else { "FAIL" }
    );
    for c in checks.iter().filter(|c| !c.passed) {
        println!(
            "    failing check: {} = {:e} (threshold {:e})",
            c.name, c.value, c.threshold
        );
    }
    ok
}

fn verify_is_deterministic() -> bool {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_ncst"))
            .args(["verify", "--format", "json"])
            .output()
            .expect("binary runs")
    };
    let (a, b) = (run(), run());
    let ok = a.status.code() == Some(0) && b.status.code() == Some(0) && a.stdout == b.stdout;
    println!(
        "{} criterion 8: verify exits 0 with byte-identical reports",
        if ok { "PASS" } else { "FAIL" }
    );
    ok
}

fn main() {
    let mut all = true;
    for suite in &SUITES {
        all &= report(suite.id, suite.name, &(suite.run)());
    }
    all &= verify_is_deterministic();
    if !all {
        eprintln!("at least one acceptance criterion failed");
        std::process::exit(1);
    }
}
