//! Correspondence covers of `K_{a,k}` with every part of size `k`.
//!
//! Such a cover is described by one [`MatchingSystem`] per A-vertex: for
//! every B-part `w_i` a permutation `σ_i` joining vertex `j` of `L(v)` to
//! vertex `σ_i(j)` of `L(w_i)`. A B-transversal `t` blocks all of `L(v)`
//! exactly when `t_i = σ_i(π(i))` for some permutation `π`, so each system
//! forbids `k!` of the `k^k` B-transversals.

use itertools::Itertools;
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::conditions::factorial;
use crate::constructions::{guard, invalid, Construction, ConstructionError};
use crate::cover::{CoverBuilder, CoverInstance, DegreeProfile, Side};
use crate::solvers::{solve_exact, SolveStatus};

/// `σ_i` for each B-part `i`, as index permutations.
pub type MatchingSystem = Vec<Vec<usize>>;

fn permutations(k: usize) -> Vec<Vec<usize>> {
    (0..k).permutations(k).collect()
}

/// All `(k!)^k` systems, mixed radix over `(σ_0, …, σ_{k-1})` with `σ_0`
/// most significant and each `σ_i` in lexicographic order.
fn all_systems(k: usize) -> Vec<MatchingSystem> {
    let perms = permutations(k);
    (0..k)
        .map(|_| perms.iter().cloned())
        .multi_cartesian_product()
        .collect()
}

fn encode(t: &[usize], k: usize) -> usize {
    t.iter().fold(0, |acc, &x| acc * k + x)
}

/// Build the cover of `K_{a,k}` given by `systems`; `None` leaves that
/// A-vertex without cover edges. A-vertices come first, then B-vertices.
pub fn dp_cover(k: usize, systems: &[Option<MatchingSystem>]) -> CoverInstance {
    let mut b = CoverBuilder::new();
    let a_base: Vec<usize> = systems.iter().map(|_| b.add_base(Side::A)).collect();
    let b_base: Vec<usize> = (0..k).map(|_| b.add_base(Side::B)).collect();
    let a_parts: Vec<Vec<usize>> = a_base.iter().map(|&v| b.add_part(v, k)).collect();
    let b_parts: Vec<Vec<usize>> = b_base.iter().map(|&w| b.add_part(w, k)).collect();
    for (x, &v) in a_base.iter().enumerate() {
        for (i, &w) in b_base.iter().enumerate() {
            b.add_base_edge(v, w);
            if let Some(sys) = &systems[x] {
                for j in 0..k {
                    b.add_cover_edge(a_parts[x][j], b_parts[i][sys[i][j]]);
                }
            }
        }
    }
    b.build().expect("permutation systems give a valid cover")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreedyTrace {
    pub k: usize,
    /// Remaining permissible B-transversals: `k^k` first, then after each
    /// installed A-vertex.
    pub remaining: Vec<u64>,
    /// Enumeration index of the system installed at each step.
    pub chosen: Vec<usize>,
    /// `k!/k^k`, the fraction of B-transversals one system forbids.
    pub fraction: BigRational,
}

impl GreedyTrace {
    pub fn is_non_increasing(&self) -> bool {
        self.remaining.windows(2).all(|w| w[1] <= w[0])
    }

    /// Every step with something left removes at least `⌈p · remaining⌉`.
    pub fn respects_fraction(&self) -> bool {
        let num = self.fraction.numer().to_u64().expect("small");
        let den = self.fraction.denom().to_u64().expect("small");
        self.remaining.windows(2).all(|w| {
            let need = (w[0] * num).div_ceil(den);
            w[0] == 0 || w[0] - w[1] >= need
        })
    }

    pub fn final_remaining(&self) -> u64 {
        *self.remaining.last().expect("trace starts with k^k")
    }
}

/// Greedy lower-bound construction: process A-vertices in order and give
/// each the system that forbids the most still-permissible B-transversals
/// (lowest index on ties). Once none remain, later A-vertices get no cover
/// edges.
pub fn build_prop8_greedy(
    k: usize,
    a_size: usize,
    force: bool,
) -> Result<(Construction, GreedyTrace), ConstructionError> {
    if k < 2 {
        return Err(invalid("k must be at least 2"));
    }
    if k > 5 {
        return Err(invalid("k > 5 is beyond addressable size"));
    }
    guard(k >= 4, force, format!("prop8 greedy with k={k} enumerates (k!)^k systems per vertex"))?;
    let total = k.pow(k as u32);
    let perms = permutations(k);
    let systems = all_systems(k);
    // Forbidden B-transversals per system.
    let forbidden: Vec<Vec<usize>> = systems
        .iter()
        .map(|sys| {
            perms
                .iter()
                .map(|pi| {
                    let t: Vec<usize> = (0..k).map(|i| sys[i][pi[i]]).collect();
                    encode(&t, k)
                })
                .collect()
        })
        .collect();

    let mut alive = vec![true; total];
    let mut left = total as u64;
    let mut trace = GreedyTrace {
        k,
        remaining: vec![left],
        chosen: Vec::new(),
        fraction: BigRational::new(factorial(k as u64).into(), BigUint::from(total).into()),
    };
    let mut installed = Vec::with_capacity(a_size);
    for _ in 0..a_size {
        if left == 0 {
            installed.push(None);
            continue;
        }
        let (best, _) = forbidden
            .iter()
            .enumerate()
            .map(|(s, ts)| (s, ts.iter().filter(|&&t| alive[t]).count()))
            .fold((0, 0), |acc, cur| if cur.1 > acc.1 { cur } else { acc });
        for &t in &forbidden[best] {
            if alive[t] {
                alive[t] = false;
                left -= 1;
            }
        }
        trace.remaining.push(left);
        trace.chosen.push(best);
        installed.push(Some(systems[best].clone()));
    }

    let instance = dp_cover(k, &installed);
    let active = trace.chosen.len();
    let declared = DegreeProfile {
        delta_a: if a_size > 0 { k } else { 0 },
        delta_b: a_size,
        d_a: if active > 0 { k } else { 0 },
        d_b: active,
        k_a: if a_size > 0 { k } else { 0 },
        k_b: k,
    };
    Ok((Construction { instance, declared }, trace))
}

/// Visit covers of `K_{a,k}` as lists of systems.
///
/// With `reduced`, one representative per class under relabelling inside
/// parts and permuting A-vertices is visited: A-vertex 0 gets the identity
/// system, every other A-vertex has `σ_0 = id`, and those systems appear as
/// a non-decreasing sequence of indices.
pub fn for_each_dp_cover(k: usize, a: usize, reduced: bool, mut visit: impl FnMut(&[MatchingSystem])) {
    let systems = all_systems(k);
    if a == 0 {
        visit(&[]);
        return;
    }
    if reduced {
        let identity: MatchingSystem = vec![(0..k).collect(); k];
        let normal: Vec<&MatchingSystem> = systems.iter().filter(|s| s[0] == identity[0]).collect();
        let mut buf = Vec::with_capacity(a);
        for combo in (0..normal.len()).combinations_with_replacement(a - 1) {
            buf.clear();
            buf.push(identity.clone());
            buf.extend(combo.iter().map(|&i| normal[i].clone()));
            visit(&buf);
        }
    } else {
        for combo in (0..a).map(|_| 0..systems.len()).multi_cartesian_product() {
            let buf: Vec<MatchingSystem> = combo.iter().map(|&i| systems[i].clone()).collect();
            visit(&buf);
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountingOutcome {
    /// `a_size >= k^k/k!`: the counting bound says nothing.
    OutOfRange,
    Checked { covers: u64, all_feasible: bool },
}

impl CountingOutcome {
    pub fn verified(self) -> bool {
        matches!(self, CountingOutcome::Checked { all_feasible: true, .. })
    }
}

/// Check that every cover of `K_{a_size,k}` with parts of size `k` has an
/// independent transversal when `a_size < k^k/k!`, by exhaustive search over
/// symmetry classes.
pub fn verify_counting_direction(k: usize, a_size: usize, node_budget: u64) -> Result<CountingOutcome, ConstructionError> {
    if k < 2 {
        return Err(invalid("k must be at least 2"));
    }
    guard(k > 3 || a_size > 4, false, format!("counting check with k={k}, a_size={a_size}"))?;
    let kk = k.pow(k as u32) as u64;
    if a_size as u64 * factorial(k as u64).to_u64().expect("small") >= kk {
        return Ok(CountingOutcome::OutOfRange);
    }
    let mut covers = 0u64;
    let mut all_feasible = true;
    for_each_dp_cover(k, a_size, true, |systems| {
        if !all_feasible {
            return;
        }
        covers += 1;
        let owned: Vec<Option<MatchingSystem>> = systems.iter().cloned().map(Some).collect();
        let inst = dp_cover(k, &owned);
        let out = solve_exact(&inst, node_budget);
        if out.status != SolveStatus::Found {
            all_feasible = false;
        }
    });
    Ok(CountingOutcome::Checked { covers, all_feasible })
}
