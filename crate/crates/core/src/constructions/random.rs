use std::ops::RangeInclusive;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::constructions::{invalid, ConstructionError};
use crate::cover::{CoverBuilder, CoverInstance, Side};

#[derive(Clone, Debug, PartialEq)]
pub enum BaseModel {
    Complete,
    /// Each A–B pair is an edge independently with probability `p`.
    ErdosRenyi { p: f64 },
    /// Union of `delta` random maximum matchings between A and B, so every
    /// base vertex has degree at most `delta`.
    BoundedDegree { delta: usize },
}

#[derive(Clone, Debug, PartialEq)]
pub struct RandomCoverParams {
    pub a_count: usize,
    pub b_count: usize,
    pub a_part_sizes: RangeInclusive<usize>,
    pub b_part_sizes: RangeInclusive<usize>,
    pub base: BaseModel,
    /// Probability of keeping each pair of the random matching placed on a base edge.
    pub density: f64,
    /// Skip a pair when its A-endpoint already has the first number of cover
    /// neighbours or its B-endpoint the second.
    pub cover_degree_cap: Option<(usize, usize)>,
    pub seed: u64,
}

impl RandomCoverParams {
    pub fn uniform(a_count: usize, b_count: usize, k_a: usize, k_b: usize, base: BaseModel, density: f64, seed: u64) -> Self {
        RandomCoverParams {
            a_count,
            b_count,
            a_part_sizes: k_a..=k_a,
            b_part_sizes: k_b..=k_b,
            base,
            density,
            cover_degree_cap: None,
            seed,
        }
    }
}

/// Random correspondence cover. On every base edge a uniformly random
/// maximum matching between the two parts is drawn and each of its pairs is
/// kept with probability `density`. Deterministic per seed.
pub fn random_cover(params: &RandomCoverParams) -> Result<CoverInstance, ConstructionError> {
    if !(0.0..=1.0).contains(&params.density) {
        return Err(invalid("density must lie in [0, 1]"));
    }
    if *params.a_part_sizes.start() == 0 || *params.b_part_sizes.start() == 0 {
        return Err(invalid("part sizes must be positive"));
    }
    if params.a_part_sizes.is_empty() || params.b_part_sizes.is_empty() {
        return Err(invalid("empty part size range"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut b = CoverBuilder::new();
    let a_base: Vec<usize> = (0..params.a_count).map(|_| b.add_base(Side::A)).collect();
    let b_base: Vec<usize> = (0..params.b_count).map(|_| b.add_base(Side::B)).collect();
    let mut parts = Vec::with_capacity(a_base.len() + b_base.len());
    for &v in &a_base {
        let size = rng.gen_range(params.a_part_sizes.clone());
        parts.push(b.add_part(v, size));
    }
    for &w in &b_base {
        let size = rng.gen_range(params.b_part_sizes.clone());
        parts.push(b.add_part(w, size));
    }

    let mut edges: Vec<(usize, usize)> = match params.base {
        BaseModel::Complete => a_base.iter().flat_map(|&v| b_base.iter().map(move |&w| (v, w))).collect(),
        BaseModel::ErdosRenyi { p } => {
            if !(0.0..=1.0).contains(&p) {
                return Err(invalid("edge probability must lie in [0, 1]"));
            }
            let mut out = Vec::new();
            for &v in &a_base {
                for &w in &b_base {
                    if rng.gen_bool(p) {
                        out.push((v, w));
                    }
                }
            }
            out
        }
        BaseModel::BoundedDegree { delta } => {
            let mut out = Vec::new();
            for _ in 0..delta {
                let mut xs = a_base.clone();
                let mut ys = b_base.clone();
                xs.shuffle(&mut rng);
                ys.shuffle(&mut rng);
                out.extend(xs.into_iter().zip(ys));
            }
            out.sort_unstable();
            out.dedup();
            out
        }
    };
    edges.sort_unstable();

    let (cap_a, cap_b) = params.cover_degree_cap.unwrap_or((usize::MAX, usize::MAX));
    let mut degree = vec![0usize; parts.iter().map(Vec::len).sum()];
    for &(v, w) in &edges {
        b.add_base_edge(v, w);
        let mut xs = parts[v].clone();
        let mut ys = parts[w].clone();
        xs.shuffle(&mut rng);
        ys.shuffle(&mut rng);
        for (x, y) in xs.into_iter().zip(ys) {
            if rng.gen_bool(params.density) && degree[x] < cap_a && degree[y] < cap_b {
                degree[x] += 1;
                degree[y] += 1;
                b.add_cover_edge(x, y);
            }
        }
    }
    Ok(b.build().expect("random matchings give a valid cover"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn density_extremes() {
        let p = RandomCoverParams::uniform(3, 4, 2, 2, BaseModel::Complete, 0.0, 7);
        let inst = random_cover(&p).unwrap();
        assert!(inst.cover_edges().is_empty());
        let p = RandomCoverParams { density: 1.0, ..p };
        let inst = random_cover(&p).unwrap();
        // perfect matching on each of the 12 base edges
        assert_eq!(inst.cover_edges().len(), 12 * 2);
        for c in 0..inst.num_cover() {
            assert_eq!(inst.cover_neighbours(c).len(), inst.base_neighbours(inst.owner(c)).len());
        }
    }

    #[test]
    fn bounded_degree_model() {
        let p = RandomCoverParams::uniform(50, 50, 10, 10, BaseModel::BoundedDegree { delta: 2 }, 1.0, 3);
        let inst = random_cover(&p).unwrap();
        let prof = inst.degree_profile();
        assert!(prof.delta_a <= 2 && prof.delta_b <= 2);
        assert_eq!((prof.k_a, prof.k_b), (10, 10));
    }

    #[test]
    fn same_seed_same_instance() {
        let p = RandomCoverParams {
            a_count: 4,
            b_count: 5,
            a_part_sizes: 1..=3,
            b_part_sizes: 2..=3,
            base: BaseModel::ErdosRenyi { p: 0.5 },
            density: 0.7,
            cover_degree_cap: None,
            seed: 11,
        };
        assert_eq!(random_cover(&p).unwrap().to_file(), random_cover(&p).unwrap().to_file());
        assert!(random_cover(&RandomCoverParams { density: 1.5, ..p.clone() }).is_err());
        let capped = RandomCoverParams { cover_degree_cap: Some((1, 2)), density: 1.0, ..p };
        let prof = random_cover(&capped).unwrap().degree_profile();
        assert!(prof.d_a <= 1 && prof.d_b <= 2);
    }
}
