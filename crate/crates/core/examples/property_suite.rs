//! Runs every registered property over random piecewise functions.
//!
//! `cargo run --example property_suite -- [seed] [cases]`

use geninv::properties::{registry, run_suite, GeneratorConfig};

fn main() {
    let mut args = std::env::args().skip(1);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(42);
    let cases = args.next().and_then(|s| s.parse().ok()).unwrap_or(200);
    let config = GeneratorConfig::with_seed(seed);
    let results = run_suite(&config, cases);
    let mut failed = 0;
    for (def, r) in registry().iter().zip(&results) {
        let status = if r.passed() { "ok" } else { "FAIL" };
        println!(
            "{:<10} {:<4} checks {:>8} hits {:>8} skips {:>5}  {}",
            r.property_id, status, r.checks, r.hypothesis_hits, r.skips, def.summary
        );
        if let Some(v) = r.violations.first() {
            failed += 1;
            println!("    {}: expected {}, got {}", v.witness, v.expected, v.got);
        }
    }
    println!("{} of {} properties hold on {cases} functions (seed {seed})", results.len() - failed, results.len());
}
