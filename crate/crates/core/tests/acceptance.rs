//! One line per acceptance criterion. Seeds and sample sizes are fixed below.

use unitary_weights::suites::{run, SuiteConfig, SUITES};

const SEED: u64 = 20240611;
const DISJOINT_RADIUS: i64 = 2;
/// Every check is an exact set or integer comparison.
const MAX_FAILURES_PER_ROW: u64 = 0;

fn config() -> SuiteConfig {
    SuiteConfig { seed: SEED, radius: DISJOINT_RADIUS, ..SuiteConfig::default() }
}

fn main() {
    let cfg = config();
    let mut failed = Vec::new();
    for (i, name) in SUITES.iter().enumerate() {
        let rep = run(name, &cfg).expect("known suite");
        let ok = rep.passed() && rep.rows.iter().all(|r| r.failures <= MAX_FAILURES_PER_ROW);
        let status = if ok { "PASS" } else { "FAIL" };
        println!("criterion {:>2} [{}] {}", i + 1, name, status);
        for row in &rep.rows {
            match &row.vacuous {
                Some(why) => println!("    {}: vacuous ({})", row.label, why),
                None => println!("    {}: {} checked, {} failed", row.label, row.checked, row.failures),
            }
        }
        if !ok {
            failed.push(*name);
        }
    }
    if !failed.is_empty() {
        eprintln!("failing criteria: {failed:?}");
        std::process::exit(1);
    }
    println!("all {} criteria passed", SUITES.len());
}
