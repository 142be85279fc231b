#![allow(dead_code)]

use proptest::prelude::*;
use transversal_lab::constructions::{random_cover, BaseModel, RandomCoverParams};
use transversal_lab::cover::CoverInstance;

/// Random covers with `1..=max_a` A-vertices, `0..=max_b` B-vertices and
/// parts of size `1..=max_part`.
pub fn small_cover(max_a: usize, max_b: usize, max_part: usize) -> impl Strategy<Value = CoverInstance> {
    (1..=max_a, 0..=max_b, 1..=max_part, 0.0..=1.0f64, 0.3..=1.0f64, any::<u64>()).prop_map(
        move |(a_count, b_count, top, p, density, seed)| {
            random_cover(&RandomCoverParams {
                a_count,
                b_count,
                a_part_sizes: 1..=top,
                b_part_sizes: 1..=max_part,
                base: BaseModel::ErdosRenyi { p },
                density,
                cover_degree_cap: None,
                seed,
            })
            .expect("valid parameters")
        },
    )
}

/// All B-side choices of `inst`, indexed by base vertex, in mixed-radix order.
pub fn b_choices(inst: &CoverInstance) -> Vec<Vec<Option<usize>>> {
    let mut out = vec![vec![None; inst.num_base()]];
    for w in inst.b_vertices() {
        out = out
            .into_iter()
            .flat_map(|c| {
                inst.part(w).iter().map(move |&x| {
                    let mut c = c.clone();
                    c[w] = Some(x);
                    c
                })
            })
            .collect();
    }
    out
}
