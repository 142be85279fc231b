//! The acceptance suite: ten end-to-end checks, each verified against an
//! independent oracle. Used by `transversal-lab bench` and by the
//! `acceptance` test target.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::analysis::verify_negative_correlation;
use crate::conditions::{cond_coupon, cond_coupon_dp, cond_transversals, prop8_bounds, ConditionReport};
use crate::constructions::{
    build_prop4, build_prop6, build_prop7, build_prop8_greedy, for_each_small_cover, prop4_pair_check, random_cover,
    verify_counting_direction, BaseModel, Construction, RandomCoverParams,
};
use crate::cover::{validate_cover, CoverInstance, Side};
use crate::oracle::{brute_force_feasible, cond1_exact, cond2_exact, cond3_exact, OracleValue};
use crate::report::{float, int};
use crate::solvers::{
    lift_hyper_transversal, reduce_to_hypergraph, solve_exact, solve_hypergraph_it, solve_moser_tardos,
    unblocked_a_parts, HyperMode, SolveStatus, DEFAULT_NODE_BUDGET,
};

pub const CRITERIA: [(u8, &str); 10] = [
    (1, "star construction"),
    (2, "paired-block construction, Delta = 16"),
    (3, "DP counting direction"),
    (4, "DP greedy direction"),
    (5, "paired-block construction, max degree 16"),
    (6, "negative correlation"),
    (7, "condition checkers vs exact evaluation"),
    (8, "Moser-Tardos solver"),
    (9, "hypergraph route"),
    (10, "exact solver vs brute force"),
];

#[derive(Clone, Debug)]
pub struct BenchConfig {
    /// Base seed; instance `i` of a seeded sweep uses `seed + i`.
    pub seed: u64,
    /// Node budget for the degree-16 block construction.
    pub prop7_node_budget: u64,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig { seed: 0, prop7_node_budget: 100_000_000_000 }
    }
}

#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub summary: String,
    pub details: Value,
    pub seeds: Vec<u64>,
    pub elapsed: Duration,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "criterion {:>2} {} {}: {} ({:.2}s)",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.summary,
            self.elapsed.as_secs_f64()
        )
    }

    pub fn to_json(&self) -> Value {
        json!({
            "id": self.id,
            "name": self.name,
            "passed": self.passed,
            "summary": self.summary,
            "details": self.details,
            "seeds": self.seeds.iter().map(|&s| int(s)).collect::<Vec<_>>(),
            "elapsed_seconds": float(self.elapsed.as_secs_f64()),
        })
    }
}

struct Outcome {
    passed: bool,
    summary: String,
    details: Value,
    seeds: Vec<u64>,
}

/// Collects failed checks so that a criterion reports all of them.
#[derive(Default)]
struct Checks(Vec<String>);

impl Checks {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.0.push(what());
        }
    }

    fn finish(self, summary: String, details: Value, seeds: Vec<u64>) -> Outcome {
        let passed = self.0.is_empty();
        let summary = if passed { summary } else { format!("{summary}; failed: {}", self.0.join("; ")) };
        Outcome { passed, summary, details, seeds }
    }
}

fn validates(inst: &CoverInstance) -> bool {
    validate_cover(&inst.to_file()).is_ok()
}

fn constructed(c: &Result<Construction, impl std::fmt::Display>, checks: &mut Checks, what: &str) -> Option<Construction> {
    match c {
        Ok(c) => Some(c.clone()),
        Err(e) => {
            checks.check(false, || format!("{what}: {e}"));
            None
        }
    }
}

fn criterion_1(_: &BenchConfig) -> Outcome {
    let mut checks = Checks::default();
    let mut details = Vec::new();
    for k in [2usize, 3] {
        let start = Instant::now();
        let Some(c) = constructed(&build_prop6(k, false), &mut checks, "build") else { continue };
        let inst = &c.instance;
        let prof = inst.degree_profile();
        let out = solve_exact(inst, DEFAULT_NODE_BUDGET);
        let elapsed = start.elapsed();
        checks.check(validates(inst), || format!("k={k} does not validate"));
        checks.check(prof == c.declared, || format!("k={k} profile {prof:?} differs from declared"));
        checks.check(prof.d_a == 1, || format!("k={k} d_A = {}", prof.d_a));
        checks.check(prof.d_b == k.pow(k as u32 - 1), || format!("k={k} d_B = {}", prof.d_b));
        checks.check(prof.k_a == k && prof.k_b == k, || format!("k={k} part sizes {} {}", prof.k_a, prof.k_b));
        checks.check(out.status == SolveStatus::Infeasible, || format!("k={k} solver says {}", out.status.as_str()));
        checks.check(elapsed < Duration::from_secs(1), || format!("k={k} took {elapsed:?}"));
        details.push(json!({
            "k": k, "d_A": prof.d_a, "d_B": prof.d_b, "status": out.status.as_str(),
            "nodes": int(out.stats.nodes), "seconds": float(elapsed.as_secs_f64()),
        }));
    }
    checks.finish("k=2,3 validate with d_A=1, d_B=k^(k-1), no independent transversal".into(), json!(details), vec![])
}

fn criterion_2(_: &BenchConfig) -> Outcome {
    let mut checks = Checks::default();
    let start = Instant::now();
    let Some(c) = constructed(&build_prop4(2, false), &mut checks, "build") else {
        return checks.finish(String::new(), Value::Null, vec![]);
    };
    let inst = &c.instance;
    let prof = inst.degree_profile();
    checks.check(validates(inst) && prof == c.declared, || "profile or validation mismatch".into());
    checks.check(prof.delta_a == 16 && prof.delta_b == 16, || format!("Delta = {} / {}", prof.delta_a, prof.delta_b));
    checks.check(prof.k_a == 8 && prof.k_b == 2, || format!("part sizes {} {}", prof.k_a, prof.k_b));
    let bs: Vec<usize> = inst.b_vertices().collect();
    let mut b_choice = vec![None; inst.num_base()];
    let (mut worst, mut worst_pairs) = (0usize, 0usize);
    for mask in 0u32..1 << bs.len() {
        for (t, &w) in bs.iter().enumerate() {
            b_choice[w] = Some(inst.part(w)[(mask >> t & 1) as usize]);
        }
        worst = worst.max(unblocked_a_parts(inst, &b_choice).expect("complete choice"));
        worst_pairs = worst_pairs.max(prop4_pair_check(inst, &b_choice).expect("block layout"));
    }
    let elapsed = start.elapsed();
    checks.check(worst <= 8, || format!("a B-transversal leaves {worst} A-parts unblocked"));
    checks.check(worst_pairs <= 2, || format!("a block leaves {worst_pairs} pairs open"));
    checks.check(elapsed < Duration::from_secs(10), || format!("took {elapsed:?}"));
    let details = json!({
        "b_transversals": int(1u64 << bs.len()),
        "max_unblocked_a_parts": worst,
        "bound": 8,
        "max_open_pairs_per_block": worst_pairs,
    });
    checks.finish(format!("all 65536 B-transversals leave at most {worst} of 16 A-parts unblocked"), details, vec![])
}

fn criterion_3(_: &BenchConfig) -> Outcome {
    let mut checks = Checks::default();
    let mut details = Vec::new();
    for (k, a, limit) in [(2usize, 1usize, 600u64), (3, 4, 600)] {
        let start = Instant::now();
        let res = verify_counting_direction(k, a, DEFAULT_NODE_BUDGET);
        let elapsed = start.elapsed();
        match res {
            Ok(out) => {
                checks.check(out.verified(), || format!("k={k}, |A|={a}: {out:?}"));
                details.push(json!({ "k": k, "a_size": a, "outcome": format!("{out:?}"), "seconds": float(elapsed.as_secs_f64()) }));
            }
            Err(e) => checks.check(false, || format!("k={k}, |A|={a}: {e}")),
        }
        checks.check(elapsed < Duration::from_secs(limit), || format!("k={k} took {elapsed:?}"));
    }
    checks.finish("every cover of K_{1,2} and K_{4,3} (up to symmetry) has an independent transversal".into(), json!(details), vec![])
}

fn criterion_4(_: &BenchConfig) -> Outcome {
    let mut checks = Checks::default();
    let mut details = Vec::new();
    let upper3 = prop8_bounds(3).map(|b| b.upper.ceil() as usize).unwrap_or(0);
    checks.check(upper3 == 15, || format!("ceil(13.5 ln 3) computed as {upper3}"));
    for (k, a) in [(2usize, 3usize), (3, upper3)] {
        let start = Instant::now();
        let (c, trace) = match build_prop8_greedy(k, a, false) {
            Ok(r) => r,
            Err(e) => {
                checks.check(false, || format!("k={k}: {e}"));
                continue;
            }
        };
        let out = solve_exact(&c.instance, DEFAULT_NODE_BUDGET);
        let elapsed = start.elapsed();
        checks.check(validates(&c.instance) && c.instance.degree_profile() == c.declared, || format!("k={k} profile mismatch"));
        checks.check(trace.is_non_increasing() && trace.respects_fraction(), || format!("k={k} trace {:?}", trace.remaining));
        checks.check(trace.final_remaining() == 0, || format!("k={k} ends with {} permissible", trace.final_remaining()));
        checks.check(out.status == SolveStatus::Infeasible, || format!("k={k} solver says {}", out.status.as_str()));
        checks.check(elapsed < Duration::from_secs(300), || format!("k={k} took {elapsed:?}"));
        details.push(json!({
            "k": k, "a_size": a, "remaining": trace.remaining, "status": out.status.as_str(),
            "seconds": float(elapsed.as_secs_f64()),
        }));
    }
    checks.finish("greedy traces reach 0 and respect k!/k^k; instances infeasible".into(), json!(details), vec![])
}

fn criterion_5(cfg: &BenchConfig) -> Outcome {
    let mut checks = Checks::default();
    let start = Instant::now();
    let Some(c) = constructed(&build_prop7(16, false), &mut checks, "build") else {
        return checks.finish(String::new(), Value::Null, vec![]);
    };
    let inst = &c.instance;
    let prof = inst.degree_profile();
    checks.check(validates(inst) && prof == c.declared, || "profile or validation mismatch".into());
    checks.check(prof.d_a.max(prof.d_b) <= 16, || format!("cover max degree {}", prof.d_a.max(prof.d_b)));
    let out = solve_exact(inst, cfg.prop7_node_budget);
    let elapsed = start.elapsed();
    checks.check(out.status == SolveStatus::Infeasible, || format!("solver says {}", out.status.as_str()));
    checks.check(elapsed < Duration::from_secs(600), || format!("took {elapsed:?}"));
    let details = json!({
        "profile": crate::report::profile(&prof),
        "status": out.status.as_str(),
        "nodes": int(out.stats.nodes),
        "seconds": float(elapsed.as_secs_f64()),
    });
    checks.finish(format!("d=16 infeasible after {} search nodes", out.stats.nodes), details, vec![])
}

/// Random instance for the correlation sweep: at most 3 A- and 6 B-vertices,
/// parts of size at most 3, so the joint outcome space stays below 3^6.
fn correlation_instance(seed: u64) -> CoverInstance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let params = RandomCoverParams {
        a_count: rng.gen_range(1..=3),
        b_count: rng.gen_range(1..=6),
        a_part_sizes: 1..=3,
        b_part_sizes: 1..=3,
        base: BaseModel::ErdosRenyi { p: rng.gen_range(0.5..=1.0) },
        density: rng.gen_range(0.5..=1.0),
        cover_degree_cap: None,
        seed,
    };
    random_cover(&params).expect("valid parameters")
}

fn criterion_6(cfg: &BenchConfig) -> Outcome {
    let mut checks = Checks::default();
    let start = Instant::now();
    let seeds: Vec<u64> = (0..1000).map(|i| cfg.seed.wrapping_add(i)).collect();
    let (mut events, mut subsets, mut violations, mut max_outcomes) = (0u64, 0u64, 0u64, 0u64);
    for &seed in &seeds {
        let inst = correlation_instance(seed);
        for v in inst.vertices_on(Side::A) {
            match verify_negative_correlation(&inst, v) {
                Ok(r) => {
                    events += 1;
                    subsets += r.subsets_checked;
                    violations += r.violations;
                    max_outcomes = max_outcomes.max(r.outcomes);
                }
                Err(e) => checks.check(false, || format!("seed {seed}: {e}")),
            }
        }
    }
    let elapsed = start.elapsed();
    checks.check(violations == 0, || format!("{violations} violated subsets"));
    checks.check(max_outcomes <= 10_000, || format!("outcome space {max_outcomes} above 10^4"));
    checks.check(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"));
    let details = json!({
        "instances": seeds.len(), "a_vertices": int(events), "subsets_checked": int(subsets),
        "violations": int(violations), "max_outcomes": int(max_outcomes),
    });
    checks.finish(format!("{subsets} subset inequalities over {events} A-vertices, 0 violations"), details, vec![cfg.seed])
}

/// `|x - y| / |y|` between two values given by their natural logs.
fn rel_error_ln(ln_x: f64, ln_y: f64) -> f64 {
    if ln_x == ln_y {
        0.0
    } else {
        (ln_x - ln_y).exp_m1().abs()
    }
}

fn compare(r: &ConditionReport, reported_ln: f64, o: &OracleValue, checks: &mut Checks, at: &str) -> f64 {
    let err = rel_error_ln(reported_ln, o.ln_value);
    checks.check(err <= 1e-6, || format!("{:?} at {at}: relative error {err:e}", r.condition));
    if let Some(h) = o.holds {
        checks.check(h == r.holds, || format!("{:?} at {at}: holds={} but exact says {h}", r.condition, r.holds));
    }
    err
}

fn criterion_7(cfg: &BenchConfig) -> Outcome {
    let mut checks = Checks::default();
    // (condition, inputs, expected value, expected verdict)
    let worked: [(u8, [u64; 4], f64, bool); 9] = [
        (1, [3, 3, 1, 1], 2.8556690083721423, true),
        (1, [2, 4, 1, 2], 10.87312731383618, false),
        (1, [2, 6, 1, 1], 5.43656365691809, true),
        (2, [1, 1, 1, 1], std::f64::consts::E, false),
        (2, [10, 10, 2, 2], 6.349733045108008e-05, true),
        (2, [2, 2, 2, 2], 19.877435870606767, false),
        (3, [1, 1, 1, 1], std::f64::consts::E, false),
        (3, [10, 10, 2, 2], 4.999789799297658e-07, true),
        (3, [20, 10, 2, 2], 8.154845485377146e-20, true),
    ];
    let mut worked_json = Vec::new();
    for (cond, [a, b, c, d], expected, verdict) in worked {
        let r = match cond {
            1 => cond_transversals(a, b, c, d),
            2 => cond_coupon(a, b, c, d),
            _ => cond_coupon_dp(a, b, c, d),
        }
        .expect("valid inputs");
        // condition 1 compares k_B with its right-hand side, the others a value with 1
        let got = if cond == 1 { r.rhs_log.exp() } else { r.lhs_log.exp() };
        let err = (got - expected).abs() / expected;
        checks.check(err <= 1e-6 && r.holds == verdict, || format!("worked COND{cond} {:?}: {got} holds={}", [a, b, c, d], r.holds));
        worked_json.push(json!({ "condition": cond, "inputs": [a, b, c, d], "value": float(got), "holds": r.holds }));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut worst: f64 = 0.0;
    let mut decided = 0u64;
    for _ in 0..200 {
        let [a, b, c, d]: [u64; 4] = std::array::from_fn(|_| rng.gen_range(1..=20));
        let at = format!("{:?}", [a, b, c, d]);
        if a >= 2 {
            let r = cond_transversals(a, b, c, d).expect("valid");
            let o = cond1_exact(a, b, c, d);
            decided += u64::from(o.holds.is_some());
            worst = worst.max(compare(&r, (a - 1) as f64 * (r.lhs_log - r.rhs_log), &o, &mut checks, &at));
        }
        let r = cond_coupon(a, b, c, d).expect("valid");
        let o = cond2_exact(a, b, c, d);
        decided += u64::from(o.holds.is_some());
        worst = worst.max(compare(&r, r.lhs_log, &o, &mut checks, &at));
        let r = cond_coupon_dp(a, b, c, d).expect("valid");
        let o = cond3_exact(a, b, c, d);
        decided += u64::from(o.holds.is_some());
        worst = worst.max(compare(&r, r.lhs_log, &o, &mut checks, &at));
    }
    let details = json!({
        "worked": worked_json,
        "grid_points": 200,
        "exactly_decided_verdicts": int(decided),
        "max_relative_error": float(worst),
    });
    checks.finish(format!("worked values reproduced; 200 grid points, max relative error {worst:.1e}"), details, vec![cfg.seed])
}

fn median(xs: &mut [u64]) -> f64 {
    xs.sort_unstable();
    let n = xs.len();
    if n == 0 {
        0.0
    } else if n % 2 == 1 {
        xs[n / 2] as f64
    } else {
        (xs[n / 2 - 1] + xs[n / 2]) as f64 / 2.0
    }
}

fn criterion_8(cfg: &BenchConfig) -> Outcome {
    let mut checks = Checks::default();
    let seeds: Vec<u64> = (0..100).map(|i| cfg.seed.wrapping_add(i)).collect();
    let mut rounds = Vec::new();
    for &seed in &seeds {
        let params = RandomCoverParams::uniform(50, 50, 10, 10, BaseModel::BoundedDegree { delta: 2 }, 1.0, seed);
        let inst = random_cover(&params).expect("valid parameters");
        let prof = inst.degree_profile();
        let cond = cond_coupon(prof.k_a as u64, prof.k_b as u64, prof.d_a.max(1) as u64, prof.d_b.max(1) as u64);
        checks.check(cond.is_ok_and(|r| r.holds), || format!("seed {seed}: condition 2 fails for {prof:?}"));
        let cap = 1000 * 50;
        let out = solve_moser_tardos(&inst, seed, Some(cap));
        checks.check(out.is_found(), || format!("seed {seed}: {}", out.status.as_str()));
        if let Some(t) = &out.solution {
            checks.check(inst.is_independent_transversal(t), || format!("seed {seed}: output not independent"));
        }
        rounds.push(out.stats.rounds);
    }
    let max = rounds.iter().copied().max().unwrap_or(0);
    let med = median(&mut rounds);
    let details = json!({ "instances": seeds.len(), "median_rounds": float(med), "max_rounds": int(max), "round_cap": int(50_000u64) });
    checks.finish(format!("100/100 FOUND, median {med} rounds, max {max}"), details, seeds)
}

/// Instances with `k_A = 2` whose cover degrees are capped so that
/// condition 1 holds: `k_B >= 2e D_A D_B`.
fn hyper_instance(seed: u64, i: u64) -> CoverInstance {
    let (cap, k_b) = match i % 3 {
        0 => ((1, 1), 6),
        1 => ((1, 2), 11),
        _ => ((2, 1), 11),
    };
    let params = RandomCoverParams {
        a_count: 6,
        b_count: 6,
        a_part_sizes: 2..=2,
        b_part_sizes: k_b..=k_b + 1,
        base: BaseModel::ErdosRenyi { p: 0.6 },
        density: 0.8,
        cover_degree_cap: Some(cap),
        seed,
    };
    random_cover(&params).expect("valid parameters")
}

fn criterion_9(cfg: &BenchConfig) -> Outcome {
    let mut checks = Checks::default();
    let seeds: Vec<u64> = (0..50).map(|i| cfg.seed.wrapping_add(i)).collect();
    let (mut edges, mut found) = (0usize, 0usize);
    for (i, &seed) in seeds.iter().enumerate() {
        let inst = hyper_instance(seed, i as u64);
        let prof = inst.degree_profile();
        let c1 = cond_transversals(prof.k_a as u64, prof.k_b as u64, prof.d_a.max(1) as u64, prof.d_b.max(1) as u64);
        checks.check(prof.k_a == 2 && c1.is_ok_and(|r| r.holds), || format!("seed {seed}: condition 1 fails for {prof:?}"));
        let truth = solve_exact(&inst, DEFAULT_NODE_BUDGET).status;
        found += usize::from(truth == SolveStatus::Found);
        let hg = match reduce_to_hypergraph(&inst, crate::solvers::hypergraph::DEFAULT_MAX_EDGES) {
            Ok(hg) => hg,
            Err(e) => {
                checks.check(false, || format!("seed {seed}: {e}"));
                continue;
            }
        };
        edges += hg.edges().len();
        checks.check(hg.local_lemma_holds(), || format!("seed {seed}: hypergraph lemma hypothesis fails"));
        for mode in [HyperMode::Exact { node_budget: DEFAULT_NODE_BUDGET }, HyperMode::Randomized { seed, round_cap: None }] {
            let out = solve_hypergraph_it(&hg, mode);
            checks.check(out.status == truth, || format!("seed {seed} {mode:?}: {} vs {}", out.status.as_str(), truth.as_str()));
            if let Some(choice) = &out.solution {
                let ok = lift_hyper_transversal(&inst, &hg, choice).is_ok_and(|t| inst.is_independent_transversal(&t));
                checks.check(ok, || format!("seed {seed} {mode:?}: lift failed"));
            }
        }
    }
    let details = json!({ "instances": seeds.len(), "feasible": found, "hyperedges": int(edges as u64) });
    checks.finish(format!("{} instances, both modes agree with exact search, {edges} hyperedges", seeds.len()), details, seeds)
}

fn criterion_10(_: &BenchConfig) -> Outcome {
    let mut checks = Checks::default();
    let (mut total, mut feasible) = (0u64, 0u64);
    for_each_small_cover(2, 2, |inst| {
        total += 1;
        let out = solve_exact(inst, DEFAULT_NODE_BUDGET);
        let truth = brute_force_feasible(inst);
        feasible += u64::from(truth);
        let agrees = match out.status {
            SolveStatus::Found => truth && out.solution.as_ref().is_some_and(|t| inst.is_independent_transversal(t)),
            SolveStatus::Infeasible => !truth,
            SolveStatus::GaveUp => false,
        };
        if !agrees && checks.0.len() < 5 {
            checks.check(false, || format!("disagreement on {:?}", inst.to_file()));
        }
    });
    let details = json!({ "instances": int(total), "feasible": int(feasible) });
    checks.finish(format!("{total} covers ({feasible} feasible), full agreement"), details, vec![])
}

pub fn run_criterion(id: u8, cfg: &BenchConfig) -> CriterionResult {
    let start = Instant::now();
    let out = match id {
        1 => criterion_1(cfg),
        2 => criterion_2(cfg),
        3 => criterion_3(cfg),
        4 => criterion_4(cfg),
        5 => criterion_5(cfg),
        6 => criterion_6(cfg),
        7 => criterion_7(cfg),
        8 => criterion_8(cfg),
        9 => criterion_9(cfg),
        10 => criterion_10(cfg),
        _ => panic!("no acceptance criterion {id}"),
    };
    CriterionResult {
        id,
        name: CRITERIA[id as usize - 1].1,
        passed: out.passed,
        summary: out.summary,
        details: out.details,
        seeds: out.seeds,
        elapsed: start.elapsed(),
    }
}

/// Run the selected criteria (all when `only` is empty), one thread each,
/// and return results in criterion order.
pub fn run_acceptance(cfg: &BenchConfig, only: &[u8]) -> Vec<CriterionResult> {
    let ids: Vec<u8> = CRITERIA.iter().map(|c| c.0).filter(|id| only.is_empty() || only.contains(id)).collect();
    std::thread::scope(|s| {
        let handles: Vec<_> = ids.iter().map(|&id| s.spawn(move || run_criterion(id, cfg))).collect();
        handles.into_iter().map(|h| h.join().expect("criterion panicked")).collect()
    })
}

pub fn summary_json(cfg: &BenchConfig, results: &[CriterionResult]) -> Value {
    json!({
        "suite": "acceptance",
        "seed": int(cfg.seed),
        "passed": results.iter().all(|r| r.passed),
        "criteria": results.iter().map(CriterionResult::to_json).collect::<Vec<_>>(),
    })
}
