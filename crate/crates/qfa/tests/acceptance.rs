//! Full acceptance gate: runs the complete verification battery and prints
//! one pass/fail line per check.  Every comparison inside the suite is
//! exact; there are no tolerances.

use std::io::Write;

use qfa::verify::run_suite;

#[test]
fn full_verification_suite() {
    let checks = run_suite(true, 11);
    assert_eq!(checks.len(), 11);
    // write straight to stdout so the per-check lines are visible even
    // under the default harness output capture
    let mut out = std::io::stdout();
    let mut failed = Vec::new();
    for c in &checks {
        writeln!(out, "{} {} — {}", if c.pass { "PASS" } else { "FAIL" }, c.name, c.detail).unwrap();
        if !c.pass {
            failed.push(format!("{}: {}", c.name, c.detail));
        }
    }
    out.flush().unwrap();
    assert!(failed.is_empty(), "failed checks:\n{}", failed.join("\n"));
}
