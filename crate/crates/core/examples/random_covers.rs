//! Random covers over the three base models.

use transversal_lab::constructions::{random_cover, BaseModel, RandomCoverParams};
use transversal_lab::solvers::solve_exact;

fn main() {
    for base in [BaseModel::Complete, BaseModel::ErdosRenyi { p: 0.3 }, BaseModel::BoundedDegree { delta: 3 }] {
        let params = RandomCoverParams::uniform(12, 12, 3, 3, base.clone(), 0.8, 5);
        let inst = random_cover(&params).unwrap();
        let out = solve_exact(&inst, 1_000_000);
        println!("{base:?}: {:?} -> {}", inst.degree_profile(), out.status.as_str());
    }
}
