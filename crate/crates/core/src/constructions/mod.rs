//! Instance generators.
//!
//! The extremal generators build covers that have no independent transversal.
//! Every choice the constructions leave open is fixed deterministically:
//! blocks and pairs use ascending ids, matchings use index order, and
//! transversals of a group of parts are enumerated in mixed-radix order with
//! the first part most significant. Infeasibility is never taken on trust;
//! callers verify it with an independent solver.

use thiserror::Error;

use crate::cover::{CoverInstance, DegreeProfile};

mod blocks;
mod dp;
mod random;
mod small;
mod star;

pub use blocks::{build_prop4, build_prop7, prop4_pair_check};
pub use dp::{
    build_prop8_greedy, dp_cover, for_each_dp_cover, verify_counting_direction, CountingOutcome, GreedyTrace,
    MatchingSystem,
};
pub use random::{random_cover, BaseModel, RandomCoverParams};
pub use small::for_each_small_cover;
pub use star::build_prop6;

/// Environment variable that lifts size guards, like `--force`.
pub const FORCE_ENV: &str = "TRANSVERSAL_LAB_FORCE";

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("{what} exceeds the default size limit; pass --force to build it anyway")]
    SizeGuard { what: String },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// A generated instance together with the degree profile the construction
/// promises.
#[derive(Clone, Debug)]
pub struct Construction {
    pub instance: CoverInstance,
    pub declared: DegreeProfile,
}

fn guard(exceeded: bool, force: bool, what: impl Into<String>) -> Result<(), ConstructionError> {
    if exceeded && !force {
        Err(ConstructionError::SizeGuard { what: what.into() })
    } else {
        Ok(())
    }
}

fn invalid(msg: impl Into<String>) -> ConstructionError {
    ConstructionError::InvalidParameter(msg.into())
}
