//! Runs the built-in identity checklist: every algebraic law the library
//! claims, replayed on deterministic seeded samples. The same registry backs
//! `eph verify`; here we run it in-process and show the per-suite summary.

use std::collections::BTreeMap;

use eph::verify::{run_all, run_suites, Suite};

fn main() {
    let reports = run_all();

    let mut per_suite: BTreeMap<Suite, (usize, usize)> = BTreeMap::new();
    for r in &reports {
        let slot = per_suite.entry(r.suite).or_default();
        slot.0 += usize::from(r.passed);
        slot.1 += 1;
    }
    for (suite, (passed, total)) in &per_suite {
        println!("{:12} {passed:2}/{total}", suite.label());
    }
    let failed: Vec<_> = reports.iter().filter(|r| !r.passed).collect();
    println!("total        {}/{}", reports.len() - failed.len(), reports.len());
    for r in failed {
        println!("  {r}");
    }

    // Single suites run on their own; each report carries the measured
    // deviation and the tolerance it was judged against.
    println!();
    for r in run_suites(&[Suite::Ladder]) {
        println!("{r}");
    }
}
