//! Acceptance criteria 1-10: one summary line per criterion, then every
//! failing check with its expected and computed values. Exits non-zero if
//! any check fails.

use std::time::Instant;

use cherednik::chars::TableProvider;
use cherednik::verify::{run_criterion, Status, GROUPS};

fn main() {
    let provider = TableProvider::default();
    let mut failures = Vec::new();
    println!("acceptance criteria");
    for &(name, n, what) in GROUPS {
        let start = Instant::now();
        let checks = run_criterion(&provider, n);
        let count = |s| checks.iter().filter(|c| c.status == s).count();
        let status = if checks.is_empty() {
            Status::Fail
        } else {
            checks.iter().map(|c| c.status).max().unwrap_or(Status::Fail)
        };
        println!(
            "criterion {n:>2} {status} {name:<18} {} passed, {} failed, {} skipped  ({what}, {:.1} s)",
            count(Status::Pass),
            count(Status::Fail),
            count(Status::Skip),
            start.elapsed().as_secs_f64()
        );
        failures.extend(checks.into_iter().filter(|c| c.status == Status::Fail));
    }
    for c in &failures {
        println!("  {c}");
    }
    if !failures.is_empty() {
        println!("{} failing checks", failures.len());
        std::process::exit(1);
    }
}
