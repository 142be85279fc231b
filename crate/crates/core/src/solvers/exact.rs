//! Complete backtracking search over B-side choices.
//!
//! Only B-parts are branched on; A-parts are filled in at the leaves. The
//! search keeps, for every A-part, the number of its vertices that have no
//! chosen neighbour yet. When that number drops to one, the surviving vertex
//! becomes *critical* and all of its B-neighbours are removed from their
//! parts' domains (forward checking). A branch dies as soon as an A-part is
//! fully blocked or an unassigned B-part runs out of values.
//!
//! Branching picks the unassigned B-part with the fewest remaining values,
//! breaking ties by part size and then index, and tries values in ascending
//! order. Everything is deterministic given the instance.

use std::time::Instant;

use crate::cover::{CoverInstance, Side};
use crate::solvers::{extend_partial, SolveOutcome, SolveStats, SolveStatus};

pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

#[derive(Clone, Copy, Debug)]
enum Change {
    Chose(usize),
    Blocked(usize),
    Critical(usize),
}

enum Step {
    Found,
    Exhausted,
    OutOfBudget,
}

struct Search<'a> {
    inst: &'a CoverInstance,
    b_parts: Vec<usize>,
    /// Per A cover vertex: number of chosen neighbours.
    block: Vec<u32>,
    /// Per A base vertex: vertices with no chosen neighbour.
    free: Vec<u32>,
    critical: Vec<bool>,
    /// Per B cover vertex: critical neighbours.
    forbid: Vec<u32>,
    /// Per B base vertex: values with `forbid == 0`.
    dom: Vec<u32>,
    chosen: Vec<Option<usize>>,
    trail: Vec<Change>,
    nodes: u64,
    budget: u64,
}

impl<'a> Search<'a> {
    fn new(inst: &'a CoverInstance, budget: u64) -> Self {
        let n = inst.num_base();
        let mut free = vec![0; n];
        let mut dom = vec![0; n];
        for v in 0..n {
            let len = inst.part(v).len() as u32;
            match inst.side(v) {
                Side::A => free[v] = len,
                Side::B => dom[v] = len,
            }
        }
        Search {
            inst,
            b_parts: inst.b_vertices().collect(),
            block: vec![0; inst.num_cover()],
            free,
            critical: vec![false; inst.num_cover()],
            forbid: vec![0; inst.num_cover()],
            dom,
            chosen: vec![None; n],
            trail: Vec::new(),
            nodes: 0,
            budget,
        }
    }

    /// Mark A-parts of size one as critical. Returns false on an immediate wipeout.
    fn init(&mut self) -> bool {
        let mut ok = true;
        for v in self.inst.a_vertices().collect::<Vec<_>>() {
            if self.free[v] == 1 {
                ok &= self.mark_critical(self.inst.part(v)[0]);
            }
        }
        self.trail.clear();
        ok
    }

    fn mark_critical(&mut self, a: usize) -> bool {
        self.critical[a] = true;
        self.trail.push(Change::Critical(a));
        let mut ok = true;
        for &b in self.inst.cover_neighbours(a) {
            self.forbid[b] += 1;
            if self.forbid[b] == 1 {
                let w = self.inst.owner(b);
                self.dom[w] -= 1;
                if self.dom[w] == 0 && self.chosen[w].is_none() {
                    ok = false;
                }
            }
        }
        ok
    }

    fn assign(&mut self, w: usize, b: usize) -> bool {
        self.chosen[w] = Some(b);
        self.trail.push(Change::Chose(w));
        let inst = self.inst;
        for &a in inst.cover_neighbours(b) {
            self.block[a] += 1;
            self.trail.push(Change::Blocked(a));
            if self.block[a] != 1 {
                continue;
            }
            let p = inst.owner(a);
            self.free[p] -= 1;
            match self.free[p] {
                0 => return false,
                1 => {
                    let last = *inst
                        .part(p)
                        .iter()
                        .find(|&&x| self.block[x] == 0)
                        .expect("one free vertex remains");
                    if !self.critical[last] && !self.mark_critical(last) {
                        return false;
                    }
                }
                _ => {}
            }
        }
        true
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            match self.trail.pop().expect("trail above mark") {
                Change::Chose(w) => self.chosen[w] = None,
                Change::Blocked(a) => {
                    self.block[a] -= 1;
                    if self.block[a] == 0 {
                        self.free[self.inst.owner(a)] += 1;
                    }
                }
                Change::Critical(a) => {
                    self.critical[a] = false;
                    for &b in self.inst.cover_neighbours(a) {
                        self.forbid[b] -= 1;
                        if self.forbid[b] == 0 {
                            self.dom[self.inst.owner(b)] += 1;
                        }
                    }
                }
            }
        }
    }

    fn pick_part(&self) -> Option<usize> {
        self.b_parts
            .iter()
            .copied()
            .filter(|&w| self.chosen[w].is_none())
            .min_by_key(|&w| (self.dom[w], self.inst.part(w).len(), w))
    }

    fn search(&mut self) -> Step {
        let Some(w) = self.pick_part() else {
            return Step::Found;
        };
        let inst = self.inst;
        for &b in inst.part(w) {
            if self.forbid[b] != 0 {
                continue;
            }
            if self.nodes >= self.budget {
                return Step::OutOfBudget;
            }
            self.nodes += 1;
            let mark = self.trail.len();
            if self.assign(w, b) {
                match self.search() {
                    Step::Exhausted => {}
                    other => return other,
                }
            }
            self.undo_to(mark);
        }
        Step::Exhausted
    }
}

/// Complete search for an independent transversal with a node budget.
///
/// `INFEASIBLE` is only reported after the whole space has been ruled out.
pub fn solve_exact(inst: &CoverInstance, node_budget: u64) -> SolveOutcome {
    let start = Instant::now();
    let mut s = Search::new(inst, node_budget);
    let step = if s.init() { s.search() } else { Step::Exhausted };
    let stats = SolveStats {
        nodes: s.nodes,
        rounds: 0,
        elapsed: start.elapsed(),
    };
    match step {
        Step::Found => {
            let t = extend_partial(inst, &s.chosen).expect("search leaves every A-part unblocked");
            debug_assert!(inst.is_independent_transversal(&t));
            SolveOutcome::found(t, stats)
        }
        Step::Exhausted => SolveOutcome::without_solution(SolveStatus::Infeasible, stats),
        Step::OutOfBudget => SolveOutcome::without_solution(SolveStatus::GaveUp, stats),
    }
}
