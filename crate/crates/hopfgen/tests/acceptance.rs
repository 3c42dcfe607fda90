//! Runs the fourteen acceptance criteria and prints one PASS/FAIL line each.
//!
//! Two criteria state values that exact computation contradicts, so they
//! fail on every run. They are listed below with the computed values; the
//! target exits non-zero only when some other criterion fails.

use std::process::ExitCode;

use hopfgen::selftest;

const KNOWN_FAILURES: [(usize, &str); 2] = [
    (5, "the stated minor for taft(4) is -2*t[x^3]/t[x]^5; exact expansion gives 4*t[x^3]/t[x]^5, and n*t[x^(n-1)]/t[x]^((n-2)(n+1)/2) in general"),
    (10, "x*y_{1..n} is central in E(n) for even n, so the center has dimension 2^(n-1)+1 for n = 2 and 4"),
];

fn main() -> ExitCode {
    let seed = std::env::var("HOPFGEN_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(1);
    let jobs = std::thread::available_parallelism().map_or(1, |n| n.get());
    let results = selftest::run(&[], seed, jobs);
    let mut unexpected = 0;
    for r in &results {
        println!("{}", r.line());
        if !r.passed {
            match KNOWN_FAILURES.iter().find(|(id, _)| *id == r.id) {
                Some((_, why)) => println!("    known discrepancy: {why}"),
                None => unexpected += 1,
            }
        }
    }
    for (id, _) in KNOWN_FAILURES {
        if results.iter().any(|r| r.id == id && r.passed) {
            println!("    criterion {id} now passes; remove it from the known discrepancies");
            unexpected += 1;
        }
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    println!("{} passed, {failed} failed, {unexpected} unexpected", results.len() - failed);
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
