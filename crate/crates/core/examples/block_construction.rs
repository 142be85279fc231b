//! Paired-block constructions with no independent transversal.

use transversal_lab::constructions::{build_prop4, build_prop7};
use transversal_lab::solvers::solve_exact;

fn main() {
    let c = build_prop4(2, false).unwrap();
    let out = solve_exact(&c.instance, 1_000_000);
    println!("paired-block cover, k=2: profile {:?}, {}", c.declared, out.status.as_str());

    for d in [8, 16] {
        let c = build_prop7(d, false).unwrap();
        let out = solve_exact(&c.instance, u64::MAX);
        println!(
            "d={d}: {} base vertices, {} after {} nodes in {:.2?}",
            c.instance.num_base(),
            out.status.as_str(),
            out.stats.nodes,
            out.stats.elapsed
        );
    }
}
