//! Acceptance: the full verification run through the binary must pass,
//! exit 0, and finish well inside its wall-time budget.

use std::process::Command;
use std::time::{Duration, Instant};

#[test]
fn criterion_10_verify_end_to_end() {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_dualsim"))
        .args(["verify", "--max-n", "3", "--format", "json"])
        .output()
        .expect("binary runs");
    let elapsed = start.elapsed();

    let passed = out.status.success() && elapsed < Duration::from_secs(30);
    let verdict = if passed { "PASS" } else { "FAIL" };
    println!("{verdict} criterion 10: cmd_verify --max-n 3 end-to-end ({elapsed:.2?})");

    assert!(out.status.success(), "verify exited nonzero: {}", String::from_utf8_lossy(&out.stderr));
    assert!(elapsed < Duration::from_secs(30), "took {elapsed:?}");

    let v: serde_json::Value =
        serde_json::from_str(&String::from_utf8_lossy(&out.stdout)).expect("json report");
    assert_eq!(v["results"]["all_passed"], true);
    assert_eq!(v["results"]["passed"], v["results"]["total"]);
}
