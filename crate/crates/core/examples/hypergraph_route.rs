//! Reduce a cover to a hypergraph on the B-parts and solve it there.

use transversal_lab::constructions::{random_cover, BaseModel, RandomCoverParams};
use transversal_lab::solvers::{lift_hyper_transversal, reduce_to_hypergraph, solve_hypergraph_it, HyperMode};

fn main() {
    let mut params = RandomCoverParams::uniform(6, 6, 2, 11, BaseModel::ErdosRenyi { p: 0.6 }, 0.8, 2);
    params.cover_degree_cap = Some((1, 2));
    let inst = random_cover(&params).unwrap();
    let hg = reduce_to_hypergraph(&inst, 100_000).unwrap();
    println!(
        "{}-uniform hypergraph: {} vertices, {} parts, {} edges, max degree {}, lemma holds: {}",
        hg.uniformity(),
        hg.num_vertices(),
        hg.num_parts(),
        hg.edges().len(),
        hg.max_degree(),
        hg.local_lemma_holds()
    );
    let out = solve_hypergraph_it(&hg, HyperMode::Randomized { seed: 1, round_cap: None });
    println!("hypergraph search: {} in {} rounds", out.status.as_str(), out.stats.rounds);
    if let Some(choice) = out.solution {
        let t = lift_hyper_transversal(&inst, &hg, &choice).unwrap();
        println!("lifted transversal independent: {}", inst.is_independent_transversal(&t));
    }
}
