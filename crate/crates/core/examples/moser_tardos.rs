//! Resampling search in a regime where the coupon condition holds and in a
//! tighter one where it does not.

use transversal_lab::conditions::cond_coupon;
use transversal_lab::constructions::{random_cover, BaseModel, RandomCoverParams};
use transversal_lab::solvers::solve_moser_tardos;

fn main() {
    for k in [8, 3] {
        let mut params = RandomCoverParams::uniform(200, 200, k, k, BaseModel::BoundedDegree { delta: 4 }, 1.0, 7);
        params.cover_degree_cap = Some((3, 3));
        let inst = random_cover(&params).unwrap();
        let p = inst.degree_profile();
        let c2 = cond_coupon(p.k_a as u64, p.k_b as u64, p.d_a as u64, p.d_b as u64).unwrap();
        println!("k={k} d_A={} d_B={}, cond2 holds: {}", p.d_a, p.d_b, c2.holds);

        let runs: Vec<_> = (0..20).map(|seed| solve_moser_tardos(&inst, seed, Some(100_000))).collect();
        let mut rounds: Vec<u64> = runs.iter().map(|o| o.stats.rounds).collect();
        rounds.sort_unstable();
        let found = runs.iter().filter(|o| o.is_found()).count();
        println!("  {found}/20 found, rounds min {} median {} max {}", rounds[0], rounds[10], rounds[19]);
    }
}
