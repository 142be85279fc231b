//! Run a subset of the acceptance suite and print one line per criterion.

use transversal_lab::bench::{run_acceptance, BenchConfig};

fn main() {
    let ids: Vec<u8> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let ids = if ids.is_empty() { vec![1, 2, 3, 7] } else { ids };
    for r in run_acceptance(&BenchConfig::default(), &ids) {
        println!("{}", r.line());
    }
}
