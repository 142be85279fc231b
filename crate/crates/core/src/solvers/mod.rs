//! Independent transversal search.
//!
//! All three solvers share one observation: once a cover vertex has been
//! chosen in every B-part, the choice extends to an independent transversal
//! exactly when every A-part still contains a vertex with no chosen
//! neighbour. `H` has no edges inside `A_H` or inside `B_H`, so the A-side
//! choices never interact with each other.

use std::time::Duration;

use thiserror::Error;

use crate::cover::{CoverInstance, Side, Transversal};

pub mod exact;
pub mod hypergraph;
pub mod moser_tardos;

pub use exact::{solve_exact, DEFAULT_NODE_BUDGET};
pub use hypergraph::{
    lift_hyper_transversal, reduce_to_hypergraph, solve_hypergraph_it, HyperEdge, HyperMode, Hypergraph,
    HypergraphError,
};
pub use moser_tardos::{default_round_cap, solve_moser_tardos};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SolveStatus {
    Found,
    Infeasible,
    GaveUp,
}

impl SolveStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            SolveStatus::Found => "FOUND",
            SolveStatus::Infeasible => "INFEASIBLE",
            SolveStatus::GaveUp => "GAVE_UP",
        }
    }

    /// Process exit code used by the command line front end.
    pub fn exit_code(self) -> i32 {
        match self {
            SolveStatus::Found => 0,
            SolveStatus::Infeasible => 1,
            SolveStatus::GaveUp => 2,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SolveStats {
    /// Search nodes (one per tentative assignment).
    pub nodes: u64,
    /// Resampling rounds.
    pub rounds: u64,
    pub elapsed: Duration,
}

/// Result of a solver run. `T` is the solution type: a [`Transversal`] for
/// cover solvers, a per-part vertex choice for hypergraph solvers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveOutcome<T = Transversal> {
    pub status: SolveStatus,
    pub solution: Option<T>,
    pub stats: SolveStats,
    pub notes: Vec<String>,
}

impl<T> SolveOutcome<T> {
    pub(crate) fn found(solution: T, stats: SolveStats) -> Self {
        SolveOutcome {
            status: SolveStatus::Found,
            solution: Some(solution),
            stats,
            notes: Vec::new(),
        }
    }

    pub(crate) fn without_solution(status: SolveStatus, stats: SolveStats) -> Self {
        SolveOutcome {
            status,
            solution: None,
            stats,
            notes: Vec::new(),
        }
    }

    pub fn is_found(&self) -> bool {
        self.status == SolveStatus::Found
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Error)]
pub enum ExtendError {
    /// Every vertex of this A-part has a chosen neighbour.
    #[error("every vertex in the part of base vertex {0} has a chosen neighbour")]
    Blocked(usize),
    #[error("no choice given for B-side base vertex {0}")]
    MissingChoice(usize),
    #[error("choice {cover} for base vertex {base} is outside its part")]
    ChoiceOutsidePart { base: usize, cover: usize },
}

fn check_b_choice(inst: &CoverInstance, b_choice: &[Option<usize>]) -> Result<(), ExtendError> {
    for w in inst.b_vertices() {
        match b_choice.get(w).copied().flatten() {
            None => return Err(ExtendError::MissingChoice(w)),
            Some(c) if c >= inst.num_cover() || inst.owner(c) != w => {
                return Err(ExtendError::ChoiceOutsidePart { base: w, cover: c })
            }
            Some(_) => {}
        }
    }
    Ok(())
}

fn has_chosen_neighbour(inst: &CoverInstance, b_choice: &[Option<usize>], a: usize) -> bool {
    inst.cover_neighbours(a)
        .iter()
        .any(|&n| b_choice[inst.owner(n)] == Some(n))
}

/// Complete a choice over all B-parts (indexed by base vertex; A entries are
/// ignored) by taking, in every A-part, the lowest-indexed vertex without a
/// chosen neighbour.
pub fn extend_partial(inst: &CoverInstance, b_choice: &[Option<usize>]) -> Result<Transversal, ExtendError> {
    check_b_choice(inst, b_choice)?;
    let mut choice = vec![0; inst.num_base()];
    for v in 0..inst.num_base() {
        choice[v] = match inst.side(v) {
            Side::B => b_choice[v].expect("checked above"),
            Side::A => *inst
                .part(v)
                .iter()
                .find(|&&a| !has_chosen_neighbour(inst, b_choice, a))
                .ok_or(ExtendError::Blocked(v))?,
        };
    }
    Ok(Transversal::new(choice))
}

/// Number of A-parts that keep at least one vertex without a chosen neighbour.
pub fn unblocked_a_parts(inst: &CoverInstance, b_choice: &[Option<usize>]) -> Result<usize, ExtendError> {
    check_b_choice(inst, b_choice)?;
    Ok(inst
        .a_vertices()
        .filter(|&v| inst.part(v).iter().any(|&a| !has_chosen_neighbour(inst, b_choice, a)))
        .count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::CoverBuilder;

    /// L(v) = {a1, a2}, L(w) = {b1, b2}, edges a1b1, a2b2.
    fn two_by_two() -> CoverInstance {
        let mut b = CoverBuilder::new();
        let v = b.add_base(Side::A);
        let w = b.add_base(Side::B);
        let a = b.add_part(v, 2);
        let bs = b.add_part(w, 2);
        b.add_base_edge(v, w);
        b.add_cover_edge(a[0], bs[0]);
        b.add_cover_edge(a[1], bs[1]);
        b.build().unwrap()
    }

    #[test]
    fn extends_past_blocked_vertex() {
        let inst = two_by_two();
        // choose b2 (cover index 3): a2 is blocked, a1 is free
        let t = extend_partial(&inst, &[None, Some(3)]).unwrap();
        assert_eq!(t.choice, vec![0, 3]);
        assert!(inst.is_independent_transversal(&t));
    }

    #[test]
    fn no_edges_takes_first_vertex() {
        let mut b = CoverBuilder::new();
        let v = b.add_base(Side::A);
        let w = b.add_base(Side::B);
        b.add_part(v, 3);
        b.add_part(w, 2);
        let inst = b.build().unwrap();
        assert_eq!(extend_partial(&inst, &[None, Some(4)]).unwrap().choice, vec![0, 4]);
    }

    #[test]
    fn fully_blocked_part_is_named() {
        let mut b = CoverBuilder::new();
        let v = b.add_base(Side::A);
        let w = b.add_base(Side::B);
        let a = b.add_part(v, 1);
        let bs = b.add_part(w, 1);
        b.add_base_edge(v, w);
        b.add_cover_edge(a[0], bs[0]);
        let inst = b.build().unwrap();
        assert_eq!(extend_partial(&inst, &[None, Some(1)]), Err(ExtendError::Blocked(0)));
        assert_eq!(unblocked_a_parts(&inst, &[None, Some(1)]), Ok(0));
    }

    #[test]
    fn malformed_b_choice() {
        let inst = two_by_two();
        assert_eq!(extend_partial(&inst, &[None, None]), Err(ExtendError::MissingChoice(1)));
        assert_eq!(
            extend_partial(&inst, &[None, Some(0)]),
            Err(ExtendError::ChoiceOutsidePart { base: 1, cover: 0 })
        );
    }
}
