//! Block constructions with B-parts of size two.
//!
//! `B_G` is cut into blocks of `m` consecutive parts. A block has `2^m`
//! transversals; the `j`-th one picks vertex `bit_{m-1-t}(j)` of its `t`-th
//! part. Every A-part is a sequence of pairs `(p, p̄)`, one pair per block.
//! For A-vertex `v_j` and block `i`, `p` is joined to the vertices the `j`-th
//! transversal picks and `p̄` to the ones it leaves out. A block choice `S`
//! leaves a vertex of the pair for `v_j` unblocked only if `S` is the `j`-th
//! transversal or its complement, so each block rescues at most two A-parts.

use crate::constructions::{guard, invalid, Construction, ConstructionError};
use crate::cover::{CoverBuilder, CoverInstance, DegreeProfile, Side};

fn paired_blocks(a_count: usize, blocks: usize, m: usize) -> CoverInstance {
    debug_assert_eq!(a_count, 1 << m);
    let mut b = CoverBuilder::new();
    let a_base: Vec<usize> = (0..a_count).map(|_| b.add_base(Side::A)).collect();
    let b_base: Vec<usize> = (0..blocks * m).map(|_| b.add_base(Side::B)).collect();
    let a_parts: Vec<Vec<usize>> = a_base.iter().map(|&v| b.add_part(v, 2 * blocks)).collect();
    let b_parts: Vec<Vec<usize>> = b_base.iter().map(|&w| b.add_part(w, 2)).collect();
    for &v in &a_base {
        for &w in &b_base {
            b.add_base_edge(v, w);
        }
    }
    for i in 0..blocks {
        for t in 0..m {
            let part = &b_parts[i * m + t];
            for (j, list) in a_parts.iter().enumerate() {
                let bit = (j >> (m - 1 - t)) & 1;
                b.add_cover_edge(list[2 * i], part[bit]);
                b.add_cover_edge(list[2 * i + 1], part[1 - bit]);
            }
        }
    }
    b.build().expect("block construction is a valid cover")
}

/// `Δ = 2^{2^k}`, `G = K_{Δ,Δ}`, `|L(v)| = Δ/log_4 Δ` on A and `|L(w)| = 2` on B.
///
/// Any B-choice leaves at most `2Δ/log_2 Δ < Δ` A-parts unblocked.
pub fn build_prop4(k: u32, force: bool) -> Result<Construction, ConstructionError> {
    if k < 2 {
        return Err(invalid("k must be at least 2"));
    }
    if k > 4 {
        return Err(invalid("k > 4 is beyond addressable size"));
    }
    guard(k >= 4, force, format!("prop4 with k={k} (Delta = 2^{})", 1u32 << k))?;
    let m = 1usize << k; // log2 Δ
    let delta = 1usize << m;
    let blocks = delta / m;
    let instance = paired_blocks(delta, blocks, m);
    let declared = DegreeProfile {
        delta_a: delta,
        delta_b: delta,
        d_a: m,
        d_b: delta,
        k_a: 2 * blocks,
        k_b: 2,
    };
    Ok(Construction { instance, declared })
}

/// Maximum-degree analogue: `|A_G| = d`, `d/2 - 1` blocks of `log_2 d` parts,
/// `|L(v)| = d - 2`. Every cover vertex has degree at most `d`.
pub fn build_prop7(d: usize, force: bool) -> Result<Construction, ConstructionError> {
    if d < 8 || !d.is_power_of_two() {
        return Err(invalid("d must be a power of two, at least 8"));
    }
    if d > 1024 {
        return Err(invalid("d > 1024 is beyond addressable size"));
    }
    guard(d > 32, force, format!("prop7 with d={d}"))?;
    let m = d.trailing_zeros() as usize;
    let blocks = d / 2 - 1;
    let instance = paired_blocks(d, blocks, m);
    let declared = DegreeProfile {
        delta_a: blocks * m,
        delta_b: d,
        d_a: m,
        d_b: d,
        k_a: d - 2,
        k_b: 2,
    };
    Ok(Construction { instance, declared })
}

/// For a block construction and a full B-choice, the largest number of
/// (A-vertex, block) pairs within one block that keep an unblocked vertex.
/// Returns `None` if the instance does not have the block layout.
pub fn prop4_pair_check(inst: &CoverInstance, b_choice: &[Option<usize>]) -> Option<usize> {
    let a: Vec<usize> = inst.a_vertices().collect();
    let first = *a.first()?;
    let pairs = inst.part(first).len() / 2;
    let mut worst = 0;
    for i in 0..pairs {
        let mut open = 0;
        for &v in &a {
            let list = inst.part(v);
            let pair = list.get(2 * i..2 * i + 2)?;
            let free = pair.iter().any(|&c| {
                inst.cover_neighbours(c)
                    .iter()
                    .all(|&n| b_choice[inst.owner(n)] != Some(n))
            });
            open += usize::from(free);
        }
        worst = worst.max(open);
    }
    Some(worst)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prop4_k2_parameters() {
        let c = build_prop4(2, false).unwrap();
        let inst = &c.instance;
        assert_eq!(inst.a_vertices().count(), 16);
        assert_eq!(inst.b_vertices().count(), 16);
        assert_eq!(c.declared.k_a, 8);
        assert_eq!(c.declared.k_b, 2);
        assert_eq!(inst.degree_profile(), c.declared);
        // every A cover vertex has one neighbour in each part of its block
        assert_eq!(inst.cover_edges().len(), 16 * 8 * 4);
    }

    #[test]
    fn prop7_d16_parameters() {
        let c = build_prop7(16, false).unwrap();
        let inst = &c.instance;
        assert_eq!(inst.a_vertices().count(), 16);
        assert_eq!(inst.b_vertices().count(), 28);
        assert_eq!(c.declared.k_a, 14);
        assert_eq!(inst.degree_profile(), c.declared);
        assert!(c.declared.d_a.max(c.declared.d_b) <= 16);
    }

    #[test]
    fn guards_and_parameters() {
        assert!(matches!(build_prop4(1, false), Err(ConstructionError::InvalidParameter(_))));
        assert!(matches!(build_prop4(4, false), Err(ConstructionError::SizeGuard { .. })));
        assert!(matches!(build_prop7(12, false), Err(ConstructionError::InvalidParameter(_))));
        assert!(matches!(build_prop7(64, false), Err(ConstructionError::SizeGuard { .. })));
        assert!(build_prop7(64, true).is_ok());
    }
}
