use itertools::Itertools;

use crate::cover::{CoverBuilder, CoverInstance, Side};

/// All matchings between `0..s` and `0..t`, including the empty one.
fn matchings(s: usize, t: usize) -> Vec<Vec<(usize, usize)>> {
    let mut out = vec![Vec::new()];
    for size in 1..=s.min(t) {
        for xs in (0..s).combinations(size) {
            for ys in (0..t).permutations(size) {
                out.push(xs.iter().copied().zip(ys).collect());
            }
        }
    }
    out
}

/// Visit every cover with `1..=max_per_side` base vertices on one side and
/// `0..=max_per_side` on the other (at least one vertex overall), parts of
/// size `1..=max_part`, any base edge set and any matching on each base edge.
///
/// Covers are canonical in the sense that base and cover vertices are
/// numbered A-side first and part by part; isomorphic copies are not merged.
pub fn for_each_small_cover(max_per_side: usize, max_part: usize, mut visit: impl FnMut(&CoverInstance)) {
    for n_a in 0..=max_per_side {
        for n_b in 0..=max_per_side {
            if n_a + n_b == 0 {
                continue;
            }
            let sizes = (0..n_a + n_b).map(|_| 1..=max_part).multi_cartesian_product();
            for sizes in sizes {
                let pairs: Vec<(usize, usize)> = (0..n_a).cartesian_product(n_a..n_a + n_b).collect();
                // per pair: None = no base edge, Some(m) = base edge with matching m
                let options: Vec<Vec<Option<Vec<(usize, usize)>>>> = pairs
                    .iter()
                    .map(|&(v, w)| {
                        std::iter::once(None)
                            .chain(matchings(sizes[v], sizes[w]).into_iter().map(Some))
                            .collect()
                    })
                    .collect();
                let combos: Box<dyn Iterator<Item = Vec<&Option<Vec<(usize, usize)>>>>> = if options.is_empty() {
                    Box::new(std::iter::once(Vec::new()))
                } else {
                    Box::new(options.iter().map(|o| o.iter()).multi_cartesian_product())
                };
                for combo in combos {
                    let mut b = CoverBuilder::new();
                    for i in 0..n_a + n_b {
                        b.add_base(if i < n_a { Side::A } else { Side::B });
                    }
                    let parts: Vec<Vec<usize>> = (0..n_a + n_b).map(|v| b.add_part(v, sizes[v])).collect();
                    for (&(v, w), choice) in pairs.iter().zip(combo) {
                        if let Some(m) = choice {
                            b.add_base_edge(v, w);
                            for &(x, y) in m {
                                b.add_cover_edge(parts[v][x], parts[w][y]);
                            }
                        }
                    }
                    visit(&b.build().expect("enumerated covers are valid"));
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matching_counts() {
        assert_eq!(matchings(1, 1).len(), 2);
        assert_eq!(matchings(1, 2).len(), 3);
        assert_eq!(matchings(2, 2).len(), 7);
        assert_eq!(matchings(2, 3).len(), 13);
    }

    #[test]
    fn one_per_side_count() {
        let mut n = 0;
        for_each_small_cover(1, 1, |_| n += 1);
        // (1,0), (0,1): one each; (1,1): no edge, or edge with 0 or 1 cover edges
        assert_eq!(n, 1 + 1 + 3);
    }
}
