//! Reduction to independent transversals of a partitioned hypergraph.
//!
//! After truncating every A-part to `k_A` vertices and every B-part to `k_B`
//! vertices, a choice of one vertex per B-part extends to the A-side unless
//! some A-part `L(v)` is fully blocked. By the matching condition, blocking
//! all of `L(v)` needs `k_A` chosen vertices in distinct B-parts, matched
//! perfectly onto `L(v)`. Each such `k_A`-set becomes a hyperedge, and a
//! transversal of the B-parts avoiding every hyperedge is exactly a choice
//! that extends.

use std::collections::BTreeSet;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::cover::{CoverInstance, Side, Transversal};
use crate::solvers::moser_tardos::draw;
use crate::solvers::{extend_partial, ExtendError, SolveOutcome, SolveStats, SolveStatus};

pub const DEFAULT_MAX_EDGES: usize = 5_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum HypergraphError {
    #[error("reduction would produce more than {limit} hyperedges")]
    ExplosionGuard { limit: usize },
    #[error("invalid hyperedge: {0}")]
    InvalidEdge(String),
    #[error("hypergraph was not produced from a cover instance")]
    NoSource,
    #[error("choice has {got} entries, hypergraph has {expected} parts")]
    WrongLength { expected: usize, got: usize },
    #[error(transparent)]
    Extend(#[from] ExtendError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperEdge {
    /// Sorted hypergraph vertex indices, one per part.
    pub vertices: Vec<usize>,
    /// The A-side base vertex whose part this edge blocks, for reduced hypergraphs.
    pub origin: Option<usize>,
}

#[derive(Clone, Debug)]
struct Source {
    part_base: Vec<usize>,
    vertex_cover: Vec<usize>,
    truncated: bool,
}

/// A uniform hypergraph whose vertex set is partitioned into parts.
#[derive(Clone, Debug)]
pub struct Hypergraph {
    uniformity: usize,
    parts: Vec<Vec<usize>>,
    vertex_part: Vec<usize>,
    edges: Vec<HyperEdge>,
    incidence: Vec<Vec<usize>>,
    source: Option<Source>,
}

impl Hypergraph {
    /// Parts get consecutive vertex indices: part 0 owns `0..part_sizes[0]`, and so on.
    pub fn new(uniformity: usize, part_sizes: &[usize], edges: Vec<Vec<usize>>) -> Result<Self, HypergraphError> {
        let mut parts = Vec::with_capacity(part_sizes.len());
        let mut vertex_part = Vec::new();
        for (p, &size) in part_sizes.iter().enumerate() {
            let start = vertex_part.len();
            parts.push((start..start + size).collect());
            vertex_part.extend(std::iter::repeat(p).take(size));
        }
        let mut hg = Hypergraph {
            uniformity,
            parts,
            incidence: vec![Vec::new(); vertex_part.len()],
            vertex_part,
            edges: Vec::new(),
            source: None,
        };
        for e in edges {
            hg.push_edge(e, None)?;
        }
        Ok(hg)
    }

    fn push_edge(&mut self, mut vertices: Vec<usize>, origin: Option<usize>) -> Result<(), HypergraphError> {
        if vertices.len() != self.uniformity {
            return Err(HypergraphError::InvalidEdge(format!(
                "{} vertices, expected {}",
                vertices.len(),
                self.uniformity
            )));
        }
        vertices.sort_unstable();
        let mut seen = BTreeSet::new();
        for &x in &vertices {
            let part = *self
                .vertex_part
                .get(x)
                .ok_or_else(|| HypergraphError::InvalidEdge(format!("unknown vertex {x}")))?;
            if !seen.insert(part) {
                return Err(HypergraphError::InvalidEdge(format!("two vertices in part {part}")));
            }
        }
        let id = self.edges.len();
        for &x in &vertices {
            self.incidence[x].push(id);
        }
        self.edges.push(HyperEdge { vertices, origin });
        Ok(())
    }

    pub fn uniformity(&self) -> usize {
        self.uniformity
    }

    pub fn num_vertices(&self) -> usize {
        self.vertex_part.len()
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn part(&self, p: usize) -> &[usize] {
        &self.parts[p]
    }

    pub fn part_of(&self, x: usize) -> usize {
        self.vertex_part[x]
    }

    pub fn edges(&self) -> &[HyperEdge] {
        &self.edges
    }

    pub fn degree(&self, x: usize) -> usize {
        self.incidence[x].len()
    }

    pub fn max_degree(&self) -> usize {
        self.incidence.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn part_degree_sum(&self, p: usize) -> usize {
        self.parts[p].iter().map(|&x| self.degree(x)).sum()
    }

    pub fn max_part_degree_sum(&self) -> usize {
        (0..self.num_parts()).map(|p| self.part_degree_sum(p)).max().unwrap_or(0)
    }

    pub fn min_part_size(&self) -> usize {
        self.parts.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// `ℓ^k >= e (k (Δ - 1) + 1)` with `ℓ` the smallest part, `k` the
    /// uniformity and `Δ` the largest part degree sum.
    pub fn local_lemma_holds(&self) -> bool {
        let delta = self.max_part_degree_sum();
        if delta == 0 {
            return true;
        }
        let k = self.uniformity as f64;
        let count = k * (delta as f64 - 1.0) + 1.0;
        k * (self.min_part_size() as f64).ln() >= 1.0 + count.ln() - crate::conditions::TOLERANCE
    }

    /// Whether the source instance lost vertices to truncation.
    pub fn is_truncated(&self) -> bool {
        self.source.as_ref().is_some_and(|s| s.truncated)
    }

    /// Does `choice` (one vertex per part) contain a hyperedge?
    pub fn first_contained_edge(&self, choice: &[usize]) -> Option<usize> {
        let chosen: BTreeSet<usize> = choice.iter().copied().collect();
        self.edges
            .iter()
            .position(|e| e.vertices.iter().all(|x| chosen.contains(x)))
    }
}

/// Build the blocking hypergraph of `inst`.
///
/// Parts are truncated to the minimum part size on their side, keeping the
/// lowest-indexed vertices. Hypergraph parts are the B-side base vertices in
/// ascending order; hypergraph vertices are the kept B cover vertices in
/// ascending order.
pub fn reduce_to_hypergraph(inst: &CoverInstance, max_edges: usize) -> Result<Hypergraph, HypergraphError> {
    let profile = inst.degree_profile();
    let (k_a, k_b) = (profile.k_a, profile.k_b);

    let part_base: Vec<usize> = inst.b_vertices().collect();
    let mut hyper_of_cover = vec![usize::MAX; inst.num_cover()];
    let mut vertex_cover = Vec::new();
    let mut sizes = Vec::with_capacity(part_base.len());
    for &w in &part_base {
        let kept = &inst.part(w)[..k_b];
        for &c in kept {
            hyper_of_cover[c] = vertex_cover.len();
            vertex_cover.push(c);
        }
        sizes.push(kept.len());
    }
    let truncated = inst.a_vertices().any(|v| inst.part(v).len() > k_a)
        || part_base.iter().any(|&w| inst.part(w).len() > k_b);

    let mut hg = Hypergraph::new(k_a, &sizes, Vec::new())?;
    // `Hypergraph::new` numbers vertices part by part, which is the order used above.
    debug_assert_eq!(hg.num_vertices(), vertex_cover.len());

    let vertex_part = hg.vertex_part.clone();
    for v in inst.a_vertices() {
        let kept = &inst.part(v)[..k_a];
        let options: Vec<Vec<usize>> = kept
            .iter()
            .map(|&c| {
                inst.cover_neighbours(c)
                    .iter()
                    .map(|&n| hyper_of_cover[n])
                    .filter(|&x| x != usize::MAX)
                    .collect()
            })
            .collect();
        if options.iter().any(Vec::is_empty) {
            continue;
        }
        let mut stack = Vec::with_capacity(k_a);
        let mut used_parts = BTreeSet::new();
        enumerate_matchings(&vertex_part, &options, &mut stack, &mut used_parts, &mut |edge| {
            if hg.edges.len() >= max_edges {
                return Err(HypergraphError::ExplosionGuard { limit: max_edges });
            }
            hg.push_edge(edge.to_vec(), Some(v))
        })?;
    }

    let bound = (profile.d_b as u128).saturating_mul((profile.d_a as u128).saturating_pow(k_a.saturating_sub(1) as u32));
    debug_assert!(
        (0..hg.num_vertices()).all(|x| hg.degree(x) as u128 <= bound),
        "hypergraph degree exceeds D_B * D_A^(k_A - 1)"
    );

    hg.source = Some(Source { part_base, vertex_cover, truncated });
    Ok(hg)
}

fn enumerate_matchings(
    vertex_part: &[usize],
    options: &[Vec<usize>],
    stack: &mut Vec<usize>,
    used_parts: &mut BTreeSet<usize>,
    emit: &mut dyn FnMut(&[usize]) -> Result<(), HypergraphError>,
) -> Result<(), HypergraphError> {
    let i = stack.len();
    if i == options.len() {
        return emit(stack);
    }
    for &x in &options[i] {
        if used_parts.insert(vertex_part[x]) {
            stack.push(x);
            enumerate_matchings(vertex_part, options, stack, used_parts, emit)?;
            stack.pop();
            used_parts.remove(&vertex_part[x]);
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HyperMode {
    /// Backtracking over parts with a node budget.
    Exact { node_budget: u64 },
    /// Resampling: while some hyperedge is fully chosen, redraw its parts.
    Randomized { seed: u64, round_cap: Option<u64> },
}

/// Find one vertex per part such that no hyperedge is fully chosen.
pub fn solve_hypergraph_it(hg: &Hypergraph, mode: HyperMode) -> SolveOutcome<Vec<usize>> {
    let start = Instant::now();
    let mut out = match mode {
        HyperMode::Exact { node_budget } => exact(hg, node_budget),
        HyperMode::Randomized { seed, round_cap } => randomized(hg, seed, round_cap),
    };
    out.stats.elapsed = start.elapsed();
    if let Some(choice) = &out.solution {
        debug_assert!(hg.first_contained_edge(choice).is_none());
    }
    out
}

struct Selection<'a> {
    hg: &'a Hypergraph,
    count: Vec<usize>,
    full: BTreeSet<usize>,
}

impl<'a> Selection<'a> {
    fn new(hg: &'a Hypergraph) -> Self {
        Selection { hg, count: vec![0; hg.edges.len()], full: BTreeSet::new() }
    }

    fn select(&mut self, x: usize) {
        for &e in &self.hg.incidence[x] {
            self.count[e] += 1;
            if self.count[e] == self.hg.uniformity {
                self.full.insert(e);
            }
        }
    }

    fn deselect(&mut self, x: usize) {
        for &e in &self.hg.incidence[x] {
            if self.count[e] == self.hg.uniformity {
                self.full.remove(&e);
            }
            self.count[e] -= 1;
        }
    }
}

fn exact(hg: &Hypergraph, budget: u64) -> SolveOutcome<Vec<usize>> {
    let mut order: Vec<usize> = (0..hg.num_parts()).collect();
    order.sort_by_key(|&p| (hg.parts[p].len(), p));
    let mut sel = Selection::new(hg);
    let mut choice = vec![usize::MAX; hg.num_parts()];
    let mut nodes = 0u64;

    fn go(
        depth: usize,
        order: &[usize],
        sel: &mut Selection<'_>,
        choice: &mut [usize],
        nodes: &mut u64,
        budget: u64,
    ) -> Option<bool> {
        let Some(&p) = order.get(depth) else {
            return Some(true);
        };
        for &x in &sel.hg.parts[p] {
            if *nodes >= budget {
                return None;
            }
            *nodes += 1;
            sel.select(x);
            if sel.full.is_empty() {
                choice[p] = x;
                match go(depth + 1, order, sel, choice, nodes, budget) {
                    Some(false) => {}
                    other => return other,
                }
            }
            sel.deselect(x);
        }
        Some(false)
    }

    let result = go(0, &order, &mut sel, &mut choice, &mut nodes, budget);
    let stats = SolveStats { nodes, ..SolveStats::default() };
    match result {
        Some(true) => SolveOutcome::found(choice, stats),
        Some(false) => SolveOutcome::without_solution(SolveStatus::Infeasible, stats),
        None => SolveOutcome::without_solution(SolveStatus::GaveUp, stats),
    }
}

fn randomized(hg: &Hypergraph, seed: u64, round_cap: Option<u64>) -> SolveOutcome<Vec<usize>> {
    let cap = round_cap.unwrap_or(1000 * hg.num_parts().max(1) as u64);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sel = Selection::new(hg);
    let mut choice = Vec::with_capacity(hg.num_parts());
    for part in &hg.parts {
        if part.is_empty() {
            let stats = SolveStats::default();
            return SolveOutcome::without_solution(SolveStatus::Infeasible, stats);
        }
        let x = part[draw(&mut rng, part.len())];
        sel.select(x);
        choice.push(x);
    }
    let mut rounds = 0;
    while let Some(&e) = sel.full.iter().next() {
        if rounds >= cap {
            let stats = SolveStats { rounds, ..SolveStats::default() };
            return SolveOutcome::without_solution(SolveStatus::GaveUp, stats);
        }
        rounds += 1;
        for x in hg.edges[e].vertices.clone() {
            let p = hg.vertex_part[x];
            sel.deselect(choice[p]);
            let part = &hg.parts[p];
            choice[p] = part[draw(&mut rng, part.len())];
            sel.select(choice[p]);
        }
    }
    SolveOutcome::found(choice, SolveStats { rounds, ..SolveStats::default() })
}

/// Turn a hyperedge-free choice back into an independent transversal of the
/// instance the hypergraph was reduced from.
pub fn lift_hyper_transversal(
    inst: &CoverInstance,
    hg: &Hypergraph,
    choice: &[usize],
) -> Result<Transversal, HypergraphError> {
    let src = hg.source.as_ref().ok_or(HypergraphError::NoSource)?;
    if choice.len() != hg.num_parts() {
        return Err(HypergraphError::WrongLength { expected: hg.num_parts(), got: choice.len() });
    }
    let mut b_choice = vec![None; inst.num_base()];
    for (p, &x) in choice.iter().enumerate() {
        debug_assert_eq!(inst.side(src.part_base[p]), Side::B);
        b_choice[src.part_base[p]] = Some(src.vertex_cover[x]);
    }
    Ok(extend_partial(inst, &b_choice)?)
}
