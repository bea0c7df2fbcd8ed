//! One PASS/FAIL line per acceptance criterion.

use std::process::{Command, Output};

use arthur_core::checks::{self, CheckConfig, CHECK_COUNT};

const BIN: &str = env!("CARGO_BIN_EXE_arthur");

fn arthur(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("spawn arthur")
}

/// Byte-stable output and exit codes of the binary.
fn binary_checks() -> Vec<String> {
    let stable: &[&[&str]] = &[
        &["packet", "--group", "Sp(6)", "--param", "V(0,9)xR[2] + V(0,6)xR[1] + W(0,1)xR[1]"],
        &["packet", "--group", "SO(3,2)", "--param", "V(0,3)xR[1] + V(0,1)xR[1]"],
        &["compgroup", "--group", "Sp(10)", "--param", "V(0,9)xR[2] + V(0,9)xR[2] + V(0,6)xR[1] + W(0,1)xR[1]"],
        &["decompose", "--group", "Sp(4)", "--param", "V(1,2)xR[1] + V(-1,2)xR[1] + W(0,0)xR[1]"],
        &["endoscopy", "--group", "SO(4,4)"],
        &["levi", "--group", "SO(5,4)", "--c", "2"],
        &["check", "--max-rank", "4", "--samples", "40", "--only", "3"],
    ];
    let mut failures = Vec::new();
    for args in stable {
        let a = arthur(args);
        let b = arthur(args);
        if a.status.code() != Some(0) || a.stdout != b.stdout || serde_json::from_slice::<serde_json::Value>(&a.stdout).is_err() {
            failures.push(format!("unstable or failing: {}", args.join(" ")));
        }
    }
    let codes: &[(&[&str], i32)] = &[
        (&["packet", "--group", "Sp(2)", "--param", "V(0,2)xR1"], 1),
        (&["packet", "--group", "Sp(3)", "--param", "W(0,0)xR[1]"], 1),
        (&["packet", "--group", "Sp(2)", "--param", "W(0,0)xR[2]"], 2),
        (&["packet", "--group", "Sp(4)", "--param", "V(1,2)xR[1] + V(-1,2)xR[1] + W(0,0)xR[1]"], 3),
        (&["packet", "--group", "U(1,1)", "--param", "V(0,1)xR[1]"], 3),
    ];
    for (args, want) in codes {
        let got = arthur(args).status.code();
        if got != Some(*want) {
            failures.push(format!("exit {got:?} != {want}: {}", args.join(" ")));
        }
    }
    failures
}

fn main() {
    let cfg = CheckConfig::default();
    let mut all = true;
    for id in 1..=CHECK_COUNT {
        let outcome = checks::run(id, &cfg).expect("known check id");
        let mut passed = outcome.passed();
        let mut extra = Vec::new();
        if id == CHECK_COUNT {
            extra = binary_checks();
            passed &= extra.is_empty();
        }
        all &= passed;
        println!(
            "{} {:>2} {:<22} cases={} failures={} elapsed={:.2?} budget={:?}",
            if passed { "PASS" } else { "FAIL" },
            id,
            outcome.name,
            outcome.cases,
            outcome.failure_count + extra.len(),
            outcome.elapsed,
            outcome.budget,
        );
        for f in outcome.failures.iter().map(String::as_str).chain(extra.iter().map(String::as_str)) {
            println!("     {f}");
        }
    }
    if !all {
        std::process::exit(1);
    }
}
