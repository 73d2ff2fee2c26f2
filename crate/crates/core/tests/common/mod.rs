#![allow(dead_code)]

pub mod props;

use std::io::Write;
use std::time::Duration;

/// Writes one verdict line straight to stderr, so it shows up even when the
/// harness captures test output.
pub fn verdict(criterion: u32, pass: bool, detail: &str, elapsed: Duration) {
    let tag = if pass { "PASS" } else { "FAIL" };
    let line = format!("{tag} criterion {criterion:>2}: {detail} [{:.1?}]\n", elapsed);
    let _ = std::io::stderr().write_all(line.as_bytes());
}

pub fn note(text: &str) {
    let _ = std::io::stderr().write_all(format!("    {text}\n").as_bytes());
}
