//! Independent transversals of bipartite correspondence covers.
//!
//! A cover `(G, H, L)` assigns every vertex `v` of a bipartite base graph `G`
//! a part `L(v)` of cover vertices; cover edges run only between parts of
//! adjacent base vertices and form a matching there. An independent
//! transversal picks one vertex per part with no cover edge among the picks.
//!
//! - [`cover`]: data model, validation, degree profile, transversal checks.
//! - [`conditions`]: log-domain sufficiency checkers.
//! - [`solvers`]: exact search, Moser–Tardos resampling, hypergraph route.
//! - [`constructions`]: extremal and random instance generators.
//! - [`analysis`]: exact blocking probabilities and dependency counts.
//! - [`oracle`]: brute-force and exact-rational reference implementations.
//! - [`bench`]: the acceptance suite, shared by the CLI and the tests.

pub mod analysis;
pub mod bench;
pub mod cli;
pub mod conditions;
pub mod constructions;
pub mod cover;
pub mod oracle;
pub mod report;
pub mod solvers;
