//! Exact event probabilities and the negative correlation check.

use transversal_lab::analysis::{event_probabilities, uniform_block_bound, verify_negative_correlation};
use transversal_lab::constructions::{random_cover, BaseModel, RandomCoverParams};

fn main() {
    let params = RandomCoverParams::uniform(3, 5, 3, 3, BaseModel::Complete, 0.7, 11);
    let inst = random_cover(&params).unwrap();
    let p = inst.degree_profile();
    println!("uniform bound on a block probability: {}", uniform_block_bound(p.k_a as u64, p.k_b as u64, p.d_a as u64));
    for v in inst.a_vertices() {
        let ev = event_probabilities(&inst, v).unwrap();
        let corr = verify_negative_correlation(&inst, v).unwrap();
        println!(
            "vertex {}: Pr(all blocked) = {}, product = {}, {} subsets checked, passes {}",
            inst.base_id(v),
            ev.pr_all_blocked,
            ev.product,
            corr.subsets_checked,
            corr.passes()
        );
    }
}
