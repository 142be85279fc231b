use crate::constructions::{guard, invalid, Construction, ConstructionError};
use crate::cover::{CoverBuilder, DegreeProfile, Side};

/// `|A_G| = k^k`, `|B_G| = k`, all parts of size `k`. The `t`-th B-transversal
/// (mixed radix, first B-part most significant) is matched onto the part of
/// the `t`-th A-vertex, vertex `i` of `L(v_t)` to the pick in B-part `i`.
///
/// Every B-transversal blocks the whole part of its own A-vertex.
pub fn build_prop6(k: usize, force: bool) -> Result<Construction, ConstructionError> {
    if k < 2 {
        return Err(invalid("k must be at least 2"));
    }
    if k > 7 {
        return Err(invalid("k > 7 is beyond addressable size"));
    }
    guard(k >= 5, force, format!("prop6 with k={k}"))?;
    let tuples = k.pow(k as u32);

    let mut b = CoverBuilder::new();
    let a_base: Vec<usize> = (0..tuples).map(|_| b.add_base(Side::A)).collect();
    let b_base: Vec<usize> = (0..k).map(|_| b.add_base(Side::B)).collect();
    let a_parts: Vec<Vec<usize>> = a_base.iter().map(|&v| b.add_part(v, k)).collect();
    let b_parts: Vec<Vec<usize>> = b_base.iter().map(|&w| b.add_part(w, k)).collect();
    for (t, &v) in a_base.iter().enumerate() {
        let mut rest = t;
        let mut digits = vec![0; k];
        for i in (0..k).rev() {
            digits[i] = rest % k;
            rest /= k;
        }
        for (i, &w) in b_base.iter().enumerate() {
            b.add_base_edge(v, w);
            b.add_cover_edge(a_parts[t][i], b_parts[i][digits[i]]);
        }
    }
    let instance = b.build().expect("star construction is a valid cover");
    let declared = DegreeProfile {
        delta_a: k,
        delta_b: tuples,
        d_a: 1,
        d_b: tuples / k,
        k_a: k,
        k_b: k,
    };
    Ok(Construction { instance, declared })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k2_and_k3_parameters() {
        let c = build_prop6(2, false).unwrap();
        let a_cover: usize = c.instance.a_vertices().map(|v| c.instance.part(v).len()).sum();
        let b_cover: usize = c.instance.b_vertices().map(|v| c.instance.part(v).len()).sum();
        assert_eq!((a_cover, b_cover), (8, 4));
        assert_eq!(c.declared.d_b, 2);
        assert_eq!(c.instance.degree_profile(), c.declared);

        let c = build_prop6(3, false).unwrap();
        assert_eq!(c.instance.a_vertices().count(), 27);
        assert_eq!(c.declared.d_b, 9);
        assert_eq!(c.instance.degree_profile(), c.declared);
    }

    #[test]
    fn size_guard() {
        assert!(matches!(build_prop6(5, false), Err(ConstructionError::SizeGuard { .. })));
        assert!(build_prop6(1, false).is_err());
    }
}
