//! Exact probabilities of the blocking events under a uniform random choice
//! of one vertex in every B-part.
//!
//! `T_{v,c}` is the event that `c ∈ L(v)` has a chosen neighbour and `T_v`
//! the event that every vertex of `L(v)` does. Only B-parts holding a
//! neighbour of some `c ∈ L(v)` influence these events, so enumeration runs
//! over those parts alone, mixed radix by ascending part index.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::cover::{CoverInstance, Side};

/// Enumeration limit on joint outcomes of the relevant B-parts.
pub const MAX_OUTCOMES: u64 = 10_000_000;
/// Limit on `|L(v)|`, since every subset of `L(v)` is checked.
pub const MAX_PART_FOR_SUBSETS: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("{what} exceeds the enumeration limit")]
    SizeGuard { what: String },
    #[error("base vertex {0} is not on side A")]
    NotOnSideA(usize),
}

fn ratio(num: BigUint, den: BigUint) -> BigRational {
    BigRational::new(num.into(), den.into())
}

/// `Pr(T_{v,c}) = 1 - Π_w (1 - m_w/|L(w)|)` over the parts `w` holding a
/// neighbour of `c`; `m_w` is 0 or 1 by the matching condition.
pub fn exact_block_probability(inst: &CoverInstance, c: usize) -> BigRational {
    let mut miss = BigRational::one();
    for &n in inst.cover_neighbours(c) {
        let size = inst.part(inst.owner(n)).len();
        miss *= ratio(BigUint::from(size - 1), BigUint::from(size));
    }
    BigRational::one() - miss
}

/// `(1 - (1 - 1/k_B)^{D_A})^{k_A}`, the bound on `Pr(T_v)` for uniform part sizes.
pub fn uniform_block_bound(k_a: u64, k_b: u64, d_a: u64) -> BigRational {
    let q = ratio(BigUint::from(k_b - 1), BigUint::from(k_b));
    let one = BigRational::one();
    num_traits::pow(one.clone() - num_traits::pow(q, d_a as usize), k_a as usize)
}

/// Relevant B-parts of an A-vertex and, for each of their vertices, the
/// bitmask of `L(v)` vertices it blocks.
fn block_masks(inst: &CoverInstance, v: usize) -> Vec<Vec<u32>> {
    let list = inst.part(v);
    let mut parts: Vec<usize> = list
        .iter()
        .flat_map(|&c| inst.cover_neighbours(c).iter().map(|&n| inst.owner(n)))
        .collect();
    parts.sort_unstable();
    parts.dedup();
    parts
        .iter()
        .map(|&w| {
            inst.part(w)
                .iter()
                .map(|&x| {
                    list.iter()
                        .enumerate()
                        .filter(|(_, &c)| inst.cover_neighbours(c).contains(&x))
                        .fold(0u32, |m, (i, _)| m | 1 << i)
                })
                .collect()
        })
        .collect()
}

/// Number of joint outcomes in which exactly the vertices in `mask` are
/// blocked, for every mask, plus the total number of outcomes.
fn outcome_counts(inst: &CoverInstance, v: usize) -> Result<(Vec<u64>, u64), AnalysisError> {
    let k = inst.part(v).len();
    if k > MAX_PART_FOR_SUBSETS {
        return Err(AnalysisError::SizeGuard { what: format!("part of size {k}") });
    }
    let masks = block_masks(inst, v);
    let total = masks
        .iter()
        .try_fold(1u64, |acc, p| acc.checked_mul(p.len() as u64).filter(|&t| t <= MAX_OUTCOMES))
        .ok_or_else(|| AnalysisError::SizeGuard { what: "product of adjacent part sizes".into() })?;
    let mut counts = vec![0u64; 1 << k];
    let mut digits = vec![0usize; masks.len()];
    for _ in 0..total {
        let m = masks.iter().zip(&digits).fold(0u32, |m, (p, &d)| m | p[d]);
        counts[m as usize] += 1;
        for i in (0..digits.len()).rev() {
            digits[i] += 1;
            if digits[i] < masks[i].len() {
                break;
            }
            digits[i] = 0;
        }
    }
    Ok((counts, total))
}

/// `joint[I]` = number of outcomes in which every vertex of `I` is blocked.
fn superset_sums(mut counts: Vec<u64>, k: usize) -> Vec<u64> {
    for bit in 0..k {
        for m in 0..counts.len() {
            if m & (1 << bit) == 0 {
                counts[m] += counts[m | 1 << bit];
            }
        }
    }
    counts
}

fn require_a(inst: &CoverInstance, v: usize) -> Result<(), AnalysisError> {
    if inst.side(v) == Side::A {
        Ok(())
    } else {
        Err(AnalysisError::NotOnSideA(v))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CorrelationReport {
    pub vertex: usize,
    pub outcomes: u64,
    pub subsets_checked: u64,
    pub violations: u64,
    /// Largest `Pr(∩_{c∈I} T_{v,c}) / Π_{c∈I} Pr(T_{v,c})` over subsets with
    /// nonzero product, with the subset as a bitmask over `L(v)`.
    pub worst_ratio: Option<(BigRational, u32)>,
    pub pr_all_blocked: BigRational,
    pub product_of_marginals: BigRational,
}

impl CorrelationReport {
    pub fn passes(&self) -> bool {
        self.violations == 0
    }
}

/// Check `Pr(∩_{c∈I} T_{v,c}) <= Π_{c∈I} Pr(T_{v,c})` exactly for every
/// nonempty `I ⊆ L(v)`.
pub fn verify_negative_correlation(inst: &CoverInstance, v: usize) -> Result<CorrelationReport, AnalysisError> {
    require_a(inst, v)?;
    let k = inst.part(v).len();
    let (counts, total) = outcome_counts(inst, v)?;
    let joint = superset_sums(counts, k);
    let total_big = BigUint::from(total);
    let mut report = CorrelationReport {
        vertex: v,
        outcomes: total,
        subsets_checked: 0,
        violations: 0,
        worst_ratio: None,
        pr_all_blocked: ratio(joint[(1 << k) - 1].into(), total_big.clone()),
        product_of_marginals: (0..k)
            .map(|i| ratio(joint[1 << i].into(), total_big.clone()))
            .fold(BigRational::one(), |acc, p| acc * p),
    };
    for set in 1u32..(1 << k) {
        report.subsets_checked += 1;
        let size = set.count_ones();
        // joint/total <= Π (marg/total)  ⇔  joint · total^{|I|-1} <= Π marg
        let lhs = BigUint::from(joint[set as usize]) * num_traits::pow(total_big.clone(), size as usize - 1);
        let rhs = (0..k)
            .filter(|i| set & (1 << i) != 0)
            .fold(BigUint::one(), |acc, i| acc * joint[1 << i]);
        if lhs > rhs {
            report.violations += 1;
        }
        if !rhs.is_zero() {
            let r = ratio(lhs, rhs);
            if report.worst_ratio.as_ref().is_none_or(|(w, _)| r > *w) {
                report.worst_ratio = Some((r, set));
            }
        }
    }
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DependencyMode {
    /// Events sharing a B-part that holds a neighbour of both parts.
    Cond2,
    /// Events of A-vertices sharing a base neighbour.
    Cond3,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DependencyCount {
    pub vertex: usize,
    pub mode: DependencyMode,
    pub count: u64,
    /// `k_A D_A (k_B D_B - 1)` or `Δ_A (Δ_B - 1)`, with the largest part
    /// sizes standing in for `k_A`, `k_B` when parts are ragged.
    pub bound: u128,
}

impl DependencyCount {
    pub fn within_bound(&self) -> bool {
        u128::from(self.count) <= self.bound
    }
}

fn touched_b_parts(inst: &CoverInstance, u: usize) -> Vec<usize> {
    let mut parts: Vec<usize> = inst
        .part(u)
        .iter()
        .flat_map(|&c| inst.cover_neighbours(c).iter().map(|&n| inst.owner(n)))
        .collect();
    parts.sort_unstable();
    parts.dedup();
    parts
}

/// Number of A-vertices `u ≠ v` whose blocking event depends on the same
/// random choices as `T_v`.
pub fn dependency_count(inst: &CoverInstance, v: usize, mode: DependencyMode) -> Result<DependencyCount, AnalysisError> {
    require_a(inst, v)?;
    let prof = inst.degree_profile();
    let (count, bound) = match mode {
        DependencyMode::Cond3 => {
            let mut others: Vec<usize> = inst
                .base_neighbours(v)
                .iter()
                .flat_map(|&w| inst.base_neighbours(w).iter().copied())
                .filter(|&u| u != v)
                .collect();
            others.sort_unstable();
            others.dedup();
            let bound = prof.delta_a as u128 * (prof.delta_b as u128).saturating_sub(1);
            (others.len() as u64, bound)
        }
        DependencyMode::Cond2 => {
            let mine = touched_b_parts(inst, v);
            let count = inst
                .a_vertices()
                .filter(|&u| u != v)
                .filter(|&u| touched_b_parts(inst, u).iter().any(|w| mine.binary_search(w).is_ok()))
                .count();
            let k_a = inst.max_part_size(Side::A) as u128;
            let k_b = inst.max_part_size(Side::B) as u128;
            let bound = k_a * prof.d_a as u128 * (k_b * prof.d_b as u128).saturating_sub(1);
            (count as u64, bound)
        }
    };
    Ok(DependencyCount { vertex: v, mode, count, bound })
}

/// Everything the event analysis knows about one A-vertex.
#[derive(Clone, Debug, PartialEq)]
pub struct EventProbabilities {
    pub vertex: usize,
    /// `(c, Pr(T_{v,c}))` for `c ∈ L(v)`.
    pub block: Vec<(usize, BigRational)>,
    pub pr_all_blocked: BigRational,
    pub product: BigRational,
    pub dependency_cond2: DependencyCount,
    pub dependency_cond3: DependencyCount,
}

pub fn event_probabilities(inst: &CoverInstance, v: usize) -> Result<EventProbabilities, AnalysisError> {
    let corr = verify_negative_correlation(inst, v)?;
    Ok(EventProbabilities {
        vertex: v,
        block: inst.part(v).iter().map(|&c| (c, exact_block_probability(inst, c))).collect(),
        pr_all_blocked: corr.pr_all_blocked,
        product: corr.product_of_marginals,
        dependency_cond2: dependency_count(inst, v, DependencyMode::Cond2)?,
        dependency_cond3: dependency_count(inst, v, DependencyMode::Cond3)?,
    })
}
