use proptest::prelude::*;
use transversal_lab::constructions::{
    build_prop4, build_prop6, build_prop7, build_prop8_greedy, dp_cover, for_each_dp_cover, prop4_pair_check,
    random_cover, BaseModel, ConstructionError, RandomCoverParams,
};
use transversal_lab::cover::validate_cover;
use transversal_lab::solvers::{solve_exact, SolveStatus, DEFAULT_NODE_BUDGET};

fn self_checks(c: &transversal_lab::constructions::Construction) {
    let again = validate_cover(&c.instance.to_file()).expect("generator output validates");
    assert_eq!(again.degree_profile(), c.declared);
}

#[test]
fn extremal_generators_validate_with_declared_profiles() {
    for k in 2..=3 {
        self_checks(&build_prop4(k, false).unwrap());
    }
    for k in 2..=4 {
        self_checks(&build_prop6(k, false).unwrap());
    }
    for d in [8, 16, 32] {
        let c = build_prop7(d, false).unwrap();
        self_checks(&c);
        assert!(c.declared.d_a.max(c.declared.d_b) <= d);
    }
    for k in 2..=3 {
        for a in 0..=16 {
            self_checks(&build_prop8_greedy(k, a, false).unwrap().0);
        }
    }
}

#[test]
fn star_constructions_are_infeasible() {
    for k in 2..=3 {
        let out = solve_exact(&build_prop6(k, false).unwrap().instance, DEFAULT_NODE_BUDGET);
        assert_eq!(out.status, SolveStatus::Infeasible, "k={k}");
    }
}

#[test]
fn smallest_degree_block_construction_is_infeasible() {
    let out = solve_exact(&build_prop7(8, false).unwrap().instance, DEFAULT_NODE_BUDGET);
    assert_eq!(out.status, SolveStatus::Infeasible);
}

#[test]
fn size_guards_and_force() {
    assert!(matches!(build_prop6(5, false), Err(ConstructionError::SizeGuard { .. })));
    assert!(matches!(build_prop8_greedy(4, 2, false), Err(ConstructionError::SizeGuard { .. })));
    assert!(matches!(build_prop7(64, false), Err(ConstructionError::SizeGuard { .. })));
    assert!(build_prop8_greedy(4, 1, true).is_ok());
}

#[test]
fn greedy_traces_shrink_by_the_fraction() {
    for k in 2..=3 {
        for a in 1..=20 {
            let (_, trace) = build_prop8_greedy(k, a, false).unwrap();
            assert!(trace.is_non_increasing(), "k={k} a={a}");
            assert!(trace.respects_fraction(), "k={k} a={a}: {:?}", trace.remaining);
        }
    }
    let (c, trace) = build_prop8_greedy(2, 1, false).unwrap();
    assert_eq!(trace.final_remaining(), 2);
    assert!(solve_exact(&c.instance, DEFAULT_NODE_BUDGET).is_found());
}

#[test]
fn reduced_and_full_dp_enumerations_agree() {
    // k = 3, two A-vertices: 216^2 covers in full, far fewer up to symmetry
    let mut full = (0u64, true);
    for_each_dp_cover(3, 2, false, |s| {
        let inst = dp_cover(3, &s.iter().cloned().map(Some).collect::<Vec<_>>());
        full.0 += 1;
        full.1 &= solve_exact(&inst, DEFAULT_NODE_BUDGET).is_found();
    });
    let mut reduced = (0u64, true);
    for_each_dp_cover(3, 2, true, |s| {
        let inst = dp_cover(3, &s.iter().cloned().map(Some).collect::<Vec<_>>());
        reduced.0 += 1;
        reduced.1 &= solve_exact(&inst, DEFAULT_NODE_BUDGET).is_found();
    });
    assert_eq!(full.0, 216 * 216);
    assert_eq!(reduced.0, 36);
    assert!(full.1 && reduced.1);

    let mut n = 0;
    for_each_dp_cover(2, 1, false, |s| {
        n += 1;
        assert!(solve_exact(&dp_cover(2, &[Some(s[0].clone())]), DEFAULT_NODE_BUDGET).is_found());
    });
    assert_eq!(n, 4);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn block_pairs_open_at_most_twice(bits in any::<u16>()) {
        let inst = build_prop4(2, false).unwrap().instance;
        let mut b = vec![None; inst.num_base()];
        for (t, w) in inst.b_vertices().enumerate() {
            b[w] = Some(inst.part(w)[(bits >> t & 1) as usize]);
        }
        prop_assert!(prop4_pair_check(&inst, &b).unwrap() <= 2);
    }

    #[test]
    fn random_covers_are_valid_and_reproducible(
        a in 0usize..8, b in 0usize..8, lo in 1usize..4, extra in 0usize..3, p in 0.0f64..=1.0, density in 0.0f64..=1.0, seed in any::<u64>()
    ) {
        let params = RandomCoverParams {
            a_count: a, b_count: b,
            a_part_sizes: lo..=lo + extra, b_part_sizes: lo..=lo + extra,
            base: BaseModel::ErdosRenyi { p }, density, cover_degree_cap: None, seed,
        };
        let x = random_cover(&params).unwrap();
        prop_assert!(validate_cover(&x.to_file()).is_ok());
        prop_assert_eq!(x.to_file(), random_cover(&params).unwrap().to_file());
    }

    #[test]
    fn density_zero_is_found_by_every_solver(a in 1usize..6, b in 1usize..6, seed in any::<u64>()) {
        let x = random_cover(&RandomCoverParams::uniform(a, b, 2, 2, BaseModel::Complete, 0.0, seed)).unwrap();
        prop_assert!(solve_exact(&x, DEFAULT_NODE_BUDGET).is_found());
        let mt = transversal_lab::solvers::solve_moser_tardos(&x, seed, None);
        prop_assert!(mt.is_found());
        prop_assert_eq!(mt.stats.rounds, 0);
    }
}
