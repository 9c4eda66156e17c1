//! The acceptance criteria, one line per criterion on stdout
//! (`cargo test --test acceptance -- --nocapture`).

use std::process::Command;

use moufang_core::acceptance::{run_criterion, SelftestOptions, CRITERIA};

#[test]
fn acceptance_criteria() {
    let opts = SelftestOptions::default();
    let mut failed = Vec::new();
    for (id, name) in CRITERIA {
        let result = run_criterion(id, &opts).unwrap_or_else(|e| panic!("criterion {id} {name}: {e}"));
        println!("{}", result.summary_line());
        for check in &result.checks {
            println!(
                "    {:<36} {:.3e} {:?} {:.1e} {}",
                check.name,
                check.max_residual,
                check.comparison,
                check.tolerance,
                if check.pass { "ok" } else { "FAILED" }
            );
        }
        if !result.pass {
            failed.push(name);
        }
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}

#[test]
fn selftest_binary_is_byte_deterministic() {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_moufang"))
            .args(["selftest", "--seed", "99"])
            .output()
            .unwrap()
    };
    let (a, b) = (run(), run());
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stderr));
    assert!(!a.stdout.is_empty());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn malformed_fixture_exits_2() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures/truncated_table.txt");
    let out = Command::new(env!("CARGO_BIN_EXE_moufang"))
        .args(["check-table", path])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
