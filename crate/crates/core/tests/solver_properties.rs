mod common;

use std::collections::BTreeSet;

use common::{b_choices, small_cover};
use proptest::prelude::*;
use transversal_lab::constructions::{build_prop4, build_prop6};
use transversal_lab::cover::{CoverBuilder, CoverInstance, Side};
use transversal_lab::oracle::brute_force_feasible;
use transversal_lab::solvers::{
    extend_partial, lift_hyper_transversal, reduce_to_hypergraph, solve_exact, solve_hypergraph_it,
    solve_moser_tardos, ExtendError, HyperMode, Hypergraph, SolveStatus, DEFAULT_NODE_BUDGET,
};

const MAX_EDGES: usize = 1_000_000;

/// Hyperedges of the truncated instance by brute force: for every A-vertex,
/// every tuple of one neighbour per vertex of `L(v)` with all owners
/// distinct, as a sorted list of cover vertices of `trunc`.
fn brute_hyperedges(trunc: &CoverInstance) -> BTreeSet<(usize, Vec<usize>)> {
    let mut out = BTreeSet::new();
    for v in trunc.a_vertices() {
        let mut tuples: Vec<Vec<usize>> = vec![vec![]];
        for &c in trunc.part(v) {
            tuples = tuples
                .into_iter()
                .flat_map(|t| trunc.cover_neighbours(c).iter().map(move |&n| [t.clone(), vec![n]].concat()))
                .collect();
        }
        for mut t in tuples {
            let owners: BTreeSet<usize> = t.iter().map(|&x| trunc.owner(x)).collect();
            if owners.len() == t.len() {
                t.sort_unstable();
                out.insert((v, t));
            }
        }
    }
    out
}

/// Hypergraph vertex -> cover vertex of the truncated instance.
fn vertex_map(trunc: &CoverInstance, hg: &Hypergraph) -> Vec<usize> {
    let mut map = vec![usize::MAX; hg.num_vertices()];
    for (p, w) in trunc.b_vertices().enumerate() {
        for (j, &x) in hg.part(p).iter().enumerate() {
            map[x] = trunc.part(w)[j];
        }
    }
    map
}

fn truncated(inst: &CoverInstance) -> CoverInstance {
    let p = inst.degree_profile();
    inst.truncated(p.k_a, p.k_b)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn exact_agrees_with_brute_force(inst in small_cover(4, 4, 3)) {
        let out = solve_exact(&inst, DEFAULT_NODE_BUDGET);
        prop_assert_ne!(out.status, SolveStatus::GaveUp);
        prop_assert_eq!(out.is_found(), brute_force_feasible(&inst));
        if let Some(t) = &out.solution {
            prop_assert!(inst.is_independent_transversal(t));
        }
    }

    #[test]
    fn every_found_outcome_is_independent(inst in small_cover(5, 5, 4), seed in any::<u64>()) {
        let mt = solve_moser_tardos(&inst, seed, Some(2000));
        if let Some(t) = &mt.solution {
            prop_assert!(inst.is_independent_transversal(t));
        }
        if let Ok(hg) = reduce_to_hypergraph(&inst, MAX_EDGES) {
            for mode in [HyperMode::Exact { node_budget: DEFAULT_NODE_BUDGET }, HyperMode::Randomized { seed, round_cap: Some(2000) }] {
                let out = solve_hypergraph_it(&hg, mode);
                if let Some(choice) = &out.solution {
                    prop_assert!(hg.first_contained_edge(choice).is_none());
                    let t = lift_hyper_transversal(&inst, &hg, choice).unwrap();
                    prop_assert!(inst.is_independent_transversal(&t));
                }
            }
        }
    }

    #[test]
    fn moser_tardos_is_deterministic(inst in small_cover(5, 5, 4), seed in any::<u64>()) {
        let a = solve_moser_tardos(&inst, seed, Some(500));
        let b = solve_moser_tardos(&inst, seed, Some(500));
        prop_assert_eq!(a.status, b.status);
        prop_assert_eq!(a.solution, b.solution);
        prop_assert_eq!(a.stats.rounds, b.stats.rounds);
    }

    #[test]
    fn exact_search_is_deterministic(inst in small_cover(4, 4, 3)) {
        let a = solve_exact(&inst, DEFAULT_NODE_BUDGET);
        let b = solve_exact(&inst, DEFAULT_NODE_BUDGET);
        prop_assert_eq!(a.solution, b.solution);
        prop_assert_eq!(a.stats.nodes, b.stats.nodes);
    }

    #[test]
    fn avoiding_hyperedges_iff_extendable(inst in small_cover(4, 3, 3)) {
        let trunc = truncated(&inst);
        let hg = reduce_to_hypergraph(&inst, MAX_EDGES).unwrap();
        let map = vertex_map(&trunc, &hg);
        let back: std::collections::HashMap<usize, usize> = map.iter().enumerate().map(|(h, &c)| (c, h)).collect();
        for b in b_choices(&trunc) {
            let choice: Vec<usize> = trunc.b_vertices().map(|w| back[&b[w].unwrap()]).collect();
            let avoids = hg.first_contained_edge(&choice).is_none();
            prop_assert_eq!(avoids, extend_partial(&trunc, &b).is_ok());
        }
    }

    #[test]
    fn reduction_matches_brute_force_enumeration(inst in small_cover(4, 4, 3)) {
        let trunc = truncated(&inst);
        let hg = reduce_to_hypergraph(&inst, MAX_EDGES).unwrap();
        let map = vertex_map(&trunc, &hg);
        let got: BTreeSet<(usize, Vec<usize>)> = hg.edges().iter().map(|e| {
            let mut vs: Vec<usize> = e.vertices.iter().map(|&x| map[x]).collect();
            vs.sort_unstable();
            (e.origin.unwrap(), vs)
        }).collect();
        prop_assert_eq!(got.len(), hg.edges().len());
        prop_assert_eq!(got, brute_hyperedges(&trunc));
        let p = trunc.degree_profile();
        prop_assert!(hg.max_degree() <= p.d_b * p.d_a.pow(p.k_a.saturating_sub(1) as u32));
    }
}

#[test]
fn single_a_vertex_into_three_parts() {
    let mut b = CoverBuilder::new();
    let v = b.add_base(Side::A);
    let lv = b.add_part(v, 2);
    for _ in 0..3 {
        let w = b.add_base(Side::B);
        let lw = b.add_part(w, 2);
        b.add_base_edge(v, w);
        b.add_cover_edge(lv[0], lw[0]);
        b.add_cover_edge(lv[1], lw[1]);
    }
    let inst = b.build().unwrap();
    let hg = reduce_to_hypergraph(&inst, MAX_EDGES).unwrap();
    // an ordered pair of distinct parts for (c_1, c_2): 3 * 2
    assert_eq!(hg.edges().len(), 6);
    assert_eq!(hg.edges().len(), brute_hyperedges(&inst).len());
}

#[test]
fn star_construction_k2_route() {
    let inst = build_prop6(2, false).unwrap().instance;
    let exact = solve_exact(&inst, DEFAULT_NODE_BUDGET);
    assert_eq!(exact.status, SolveStatus::Infeasible);
    // no more search nodes than the k^k B-transversals and their A-completions
    assert!(exact.stats.nodes <= 4, "{} nodes", exact.stats.nodes);

    let mt = solve_moser_tardos(&inst, 7, Some(10_000));
    assert_eq!(mt.status, SolveStatus::GaveUp);
    assert_eq!(mt.stats.rounds, 10_000);

    let hg = reduce_to_hypergraph(&inst, MAX_EDGES).unwrap();
    assert_eq!((hg.edges().len(), hg.num_vertices(), hg.num_parts()), (4, 4, 2));
    let origins: BTreeSet<usize> = hg.edges().iter().filter_map(|e| e.origin).collect();
    assert_eq!(origins.len(), 4);
    let out = solve_hypergraph_it(&hg, HyperMode::Exact { node_budget: DEFAULT_NODE_BUDGET });
    assert_eq!(out.status, SolveStatus::Infeasible);
}

#[test]
fn block_construction_blocks_every_sampled_b_choice() {
    use rand::{Rng, SeedableRng};
    let inst = build_prop4(2, false).unwrap().instance;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
    for _ in 0..200 {
        let mut b = vec![None; inst.num_base()];
        for w in inst.b_vertices() {
            b[w] = Some(inst.part(w)[rng.gen_range(0..2)]);
        }
        assert!(matches!(extend_partial(&inst, &b), Err(ExtendError::Blocked(_))));
    }
}

#[test]
fn lemma_regime_hypergraph_is_solved_by_both_modes() {
    // 2-uniform, parts of size 3, every part degree sum at most 2:
    // 3^2 = 9 >= e (2 (2 - 1) + 1) = 8.15
    let edges = vec![vec![0, 3], vec![4, 6], vec![7, 9], vec![1, 10]];
    let hg = Hypergraph::new(2, &[3, 3, 3, 3], edges).unwrap();
    assert!(hg.max_part_degree_sum() <= 2);
    assert!(hg.local_lemma_holds());
    for seed in 0..20 {
        let r = solve_hypergraph_it(&hg, HyperMode::Randomized { seed, round_cap: None });
        assert!(r.is_found());
        assert!(hg.first_contained_edge(r.solution.as_ref().unwrap()).is_none());
    }
    assert!(solve_hypergraph_it(&hg, HyperMode::Exact { node_budget: 1000 }).is_found());
}
