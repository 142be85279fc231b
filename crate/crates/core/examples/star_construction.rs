//! Star construction: one A-vertex per B-transversal, each blocking it.

use transversal_lab::constructions::build_prop6;
use transversal_lab::solvers::{solve_exact, solve_moser_tardos};

fn main() {
    for k in 2..=3 {
        let c = build_prop6(k, false).unwrap();
        let exact = solve_exact(&c.instance, 1_000_000);
        let mt = solve_moser_tardos(&c.instance, 0, Some(10_000));
        println!(
            "k={k}: {} base vertices, exact {} ({} nodes), resampling {}",
            c.instance.num_base(),
            exact.status.as_str(),
            exact.stats.nodes,
            mt.status.as_str()
        );
    }
}
