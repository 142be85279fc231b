//! Solve a random cover exactly and compare with brute force.

use transversal_lab::constructions::{random_cover, BaseModel, RandomCoverParams};
use transversal_lab::oracle::brute_force_feasible;
use transversal_lab::solvers::solve_exact;

fn main() {
    for seed in 0..8 {
        let params = RandomCoverParams::uniform(4, 4, 2, 2, BaseModel::ErdosRenyi { p: 0.6 }, 0.6, seed);
        let inst = random_cover(&params).unwrap();
        let out = solve_exact(&inst, 1_000_000);
        println!(
            "seed {seed}: {} after {} nodes, brute force feasible: {}",
            out.status.as_str(),
            out.stats.nodes,
            brute_force_feasible(&inst)
        );
    }
}
