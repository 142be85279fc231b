//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use transversal_lab::bench::{run_acceptance, BenchConfig};

fn main() {
    // `cargo test -- --list` and filters are not meaningful here; run everything.
    let results = run_acceptance(&BenchConfig::default(), &[]);
    for r in &results {
        println!("{}", r.line());
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
