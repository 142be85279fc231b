//! Resampling solver.
//!
//! Every B-part holds one uniformly random vertex. The bad event for an
//! A-part `v` is that each vertex of `L(v)` has a chosen neighbour. While a
//! bad event holds, the lowest-indexed violated `v` is taken and every B-part
//! adjacent to `v` in the base graph is redrawn, whether or not its current
//! vertex blocks anything. Once no bad event holds, the A-side is completed
//! with [`extend_partial`].

use std::collections::BTreeSet;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cover::{CoverInstance, Side};
use crate::solvers::{extend_partial, SolveOutcome, SolveStats, SolveStatus};

pub fn default_round_cap(inst: &CoverInstance) -> u64 {
    1000 * inst.a_vertices().count() as u64
}

pub(crate) fn draw(rng: &mut ChaCha8Rng, len: usize) -> usize {
    rng.gen_range(0..len as u64) as usize
}

struct State<'a> {
    inst: &'a CoverInstance,
    chosen: Vec<Option<usize>>,
    block: Vec<u32>,
    free: Vec<u32>,
    violated: BTreeSet<usize>,
}

impl<'a> State<'a> {
    fn set(&mut self, w: usize, b: usize) {
        let inst = self.inst;
        if let Some(old) = self.chosen[w].replace(b) {
            for &a in inst.cover_neighbours(old) {
                self.block[a] -= 1;
                if self.block[a] == 0 {
                    let p = inst.owner(a);
                    self.free[p] += 1;
                    if self.free[p] == 1 {
                        self.violated.remove(&p);
                    }
                }
            }
        }
        for &a in inst.cover_neighbours(b) {
            self.block[a] += 1;
            if self.block[a] == 1 {
                let p = inst.owner(a);
                self.free[p] -= 1;
                if self.free[p] == 0 {
                    self.violated.insert(p);
                }
            }
        }
    }
}

/// Run the resampling loop with a seeded ChaCha8 generator.
///
/// Gives up after `round_cap` resampling rounds (default
/// [`default_round_cap`]); the round count is only bounded when the
/// instance satisfies one of the local-lemma conditions.
pub fn solve_moser_tardos(inst: &CoverInstance, seed: u64, round_cap: Option<u64>) -> SolveOutcome {
    let start = Instant::now();
    let cap = round_cap.unwrap_or_else(|| default_round_cap(inst));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut free = vec![0u32; inst.num_base()];
    for v in inst.a_vertices() {
        free[v] = inst.part(v).len() as u32;
    }
    let mut st = State {
        inst,
        chosen: vec![None; inst.num_base()],
        block: vec![0; inst.num_cover()],
        free,
        violated: BTreeSet::new(),
    };
    for w in inst.b_vertices() {
        let part = inst.part(w);
        st.set(w, part[draw(&mut rng, part.len())]);
    }

    let mut rounds = 0u64;
    while let Some(&v) = st.violated.iter().next() {
        if rounds >= cap {
            let stats = SolveStats { nodes: 0, rounds, elapsed: start.elapsed() };
            return SolveOutcome::without_solution(SolveStatus::GaveUp, stats);
        }
        rounds += 1;
        for &w in inst.base_neighbours(v) {
            debug_assert_eq!(inst.side(w), Side::B);
            let part = inst.part(w);
            st.set(w, part[draw(&mut rng, part.len())]);
        }
    }

    let t = extend_partial(inst, &st.chosen).expect("no bad event holds");
    debug_assert!(inst.is_independent_transversal(&t));
    let stats = SolveStats { nodes: 0, rounds, elapsed: start.elapsed() };
    SolveOutcome::found(t, stats)
}
