//! Bipartite correspondence covers.
//!
//! A [`CoverInstance`] bundles the base graph `G`, the cover graph `H` and the
//! partition map `L` sending every base vertex to its part of cover vertices.
//! Instances only exist in validated form: every constructor goes through
//! [`validate_cover`], which checks the five cover axioms
//!
//! * `G` is bipartite with respect to the declared sides,
//! * every part `L(v)` is nonempty,
//! * cover vertices sit on the side of their owner,
//! * cover edges only run between parts of adjacent base vertices,
//! * between two adjacent parts the cover edges form a matching.
//!
//! Ids in the file format are arbitrary integers; internally vertices are
//! dense indices assigned in file order.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::A => f.write_str("A"),
            Side::B => f.write_str("B"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseVertexRecord {
    pub id: u64,
    pub side: Side,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverVertexRecord {
    pub id: u64,
    pub owner: u64,
    /// Optional explicit side; when present it must agree with the owner's side.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub side: Option<Side>,
}

/// The on-disk JSON layout of an instance.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceFile {
    pub base_vertices: Vec<BaseVertexRecord>,
    pub base_edges: Vec<[u64; 2]>,
    pub cover_vertices: Vec<CoverVertexRecord>,
    pub cover_edges: Vec<[u64; 2]>,
}

impl InstanceFile {
    pub fn from_json(text: &str) -> Result<InstanceFile, serde_json::Error> {
        serde_json::from_str(text)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("duplicate base vertex id {0}")]
    DuplicateBaseId(u64),
    #[error("duplicate cover vertex id {0}")]
    DuplicateCoverId(u64),
    #[error("unknown base vertex id {0}")]
    UnknownBaseVertex(u64),
    #[error("unknown cover vertex id {0}")]
    UnknownCoverVertex(u64),
    #[error("duplicate base edge {0}-{1}")]
    DuplicateBaseEdge(u64, u64),
    #[error("duplicate cover edge {0}-{1}")]
    DuplicateCoverEdge(u64, u64),
    #[error("base edge {0}-{1} does not join an A-side vertex to a B-side vertex")]
    NonBipartiteBaseEdge(u64, u64),
    #[error("base vertex {0} owns no cover vertices")]
    EmptyPart(u64),
    #[error("cover vertex {cover} declared on side {declared} but its owner is on side {owner_side}")]
    SideMismatch {
        cover: u64,
        declared: Side,
        owner_side: Side,
    },
    #[error("cover edge {0}-{1} joins parts whose owners are not adjacent in the base graph")]
    StrayEdge(u64, u64),
    #[error("cover vertex {cover} has two neighbours {first} and {second} in the part of base vertex {part}")]
    MatchingViolation {
        cover: u64,
        part: u64,
        first: u64,
        second: u64,
    },
}

impl CoverError {
    /// True for errors about ids and duplicates rather than the cover axioms.
    pub fn is_structural(&self) -> bool {
        matches!(
            self,
            CoverError::DuplicateBaseId(_)
                | CoverError::DuplicateCoverId(_)
                | CoverError::UnknownBaseVertex(_)
                | CoverError::UnknownCoverVertex(_)
                | CoverError::DuplicateBaseEdge(..)
                | CoverError::DuplicateCoverEdge(..)
        )
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CoverError::DuplicateBaseId(_) => "DuplicateBaseId",
            CoverError::DuplicateCoverId(_) => "DuplicateCoverId",
            CoverError::UnknownBaseVertex(_) => "UnknownBaseVertex",
            CoverError::UnknownCoverVertex(_) => "UnknownCoverVertex",
            CoverError::DuplicateBaseEdge(..) => "DuplicateBaseEdge",
            CoverError::DuplicateCoverEdge(..) => "DuplicateCoverEdge",
            CoverError::NonBipartiteBaseEdge(..) => "NonBipartiteBaseEdge",
            CoverError::EmptyPart(_) => "EmptyPart",
            CoverError::SideMismatch { .. } => "SideMismatch",
            CoverError::StrayEdge(..) => "StrayEdge",
            CoverError::MatchingViolation { .. } => "MatchingViolation",
        }
    }
}

/// The six parameters a sufficiency condition is phrased in.
///
/// `delta_*` are maximum degrees of `G` over each side, `d_*` maximum degrees of
/// `H` over each side of the cover, and `k_*` minimum part sizes. A side with
/// no base vertices reports zero everywhere.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DegreeProfile {
    pub delta_a: usize,
    pub delta_b: usize,
    pub d_a: usize,
    pub d_b: usize,
    pub k_a: usize,
    pub k_b: usize,
}

/// One chosen cover vertex per base vertex, indexed by base vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Transversal {
    pub choice: Vec<usize>,
}

impl Transversal {
    pub fn new(choice: Vec<usize>) -> Self {
        Transversal { choice }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Independence {
    Independent,
    /// A cover edge with both endpoints chosen.
    Conflict(usize, usize),
}

impl Independence {
    pub fn is_independent(self) -> bool {
        matches!(self, Independence::Independent)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TransversalError {
    #[error("transversal has {got} choices, instance has {expected} base vertices")]
    WrongLength { expected: usize, got: usize },
    #[error("choice for base vertex {base} is outside its part")]
    ChoiceOutsidePart { base: usize, cover: usize },
}

/// A validated, immutable bipartite correspondence cover.
#[derive(Clone, Debug)]
pub struct CoverInstance {
    base_ids: Vec<u64>,
    sides: Vec<Side>,
    base_adj: Vec<Vec<usize>>,
    base_edges: Vec<(usize, usize)>,
    cover_ids: Vec<u64>,
    owner: Vec<usize>,
    parts: Vec<Vec<usize>>,
    cover_adj: Vec<Vec<usize>>,
    cover_edges: Vec<(usize, usize)>,
    base_index: HashMap<u64, usize>,
    cover_index: HashMap<u64, usize>,
}

/// Check the cover axioms and build the indexed instance.
///
/// Structural problems (unknown or duplicate ids, duplicate edges) are reported
/// first; after that the axioms are checked in the order listed in the module
/// docs and the first violation is returned with its witnesses.
pub fn validate_cover(raw: &InstanceFile) -> Result<CoverInstance, CoverError> {
    let mut base_index = HashMap::with_capacity(raw.base_vertices.len());
    for (i, rec) in raw.base_vertices.iter().enumerate() {
        if base_index.insert(rec.id, i).is_some() {
            return Err(CoverError::DuplicateBaseId(rec.id));
        }
    }
    let mut cover_index = HashMap::with_capacity(raw.cover_vertices.len());
    for (i, rec) in raw.cover_vertices.iter().enumerate() {
        if cover_index.insert(rec.id, i).is_some() {
            return Err(CoverError::DuplicateCoverId(rec.id));
        }
    }
    let sides: Vec<Side> = raw.base_vertices.iter().map(|r| r.side).collect();
    let mut owner = Vec::with_capacity(raw.cover_vertices.len());
    for rec in &raw.cover_vertices {
        let o = *base_index
            .get(&rec.owner)
            .ok_or(CoverError::UnknownBaseVertex(rec.owner))?;
        owner.push(o);
    }

    let mut base_edges = Vec::with_capacity(raw.base_edges.len());
    let mut seen = HashSet::new();
    for &[x, y] in &raw.base_edges {
        let u = *base_index.get(&x).ok_or(CoverError::UnknownBaseVertex(x))?;
        let v = *base_index.get(&y).ok_or(CoverError::UnknownBaseVertex(y))?;
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(CoverError::DuplicateBaseEdge(x, y));
        }
        base_edges.push((u, v));
    }
    let mut cover_edges = Vec::with_capacity(raw.cover_edges.len());
    seen.clear();
    for &[x, y] in &raw.cover_edges {
        let a = *cover_index.get(&x).ok_or(CoverError::UnknownCoverVertex(x))?;
        let b = *cover_index.get(&y).ok_or(CoverError::UnknownCoverVertex(y))?;
        if !seen.insert((a.min(b), a.max(b))) {
            return Err(CoverError::DuplicateCoverEdge(x, y));
        }
        cover_edges.push((a, b));
    }

    let base_ids: Vec<u64> = raw.base_vertices.iter().map(|r| r.id).collect();
    let cover_ids: Vec<u64> = raw.cover_vertices.iter().map(|r| r.id).collect();

    for &(u, v) in &base_edges {
        if sides[u] == sides[v] {
            return Err(CoverError::NonBipartiteBaseEdge(base_ids[u], base_ids[v]));
        }
    }

    let mut parts = vec![Vec::new(); base_ids.len()];
    for (c, &o) in owner.iter().enumerate() {
        parts[o].push(c);
    }
    if let Some(v) = parts.iter().position(Vec::is_empty) {
        return Err(CoverError::EmptyPart(base_ids[v]));
    }

    for (c, rec) in raw.cover_vertices.iter().enumerate() {
        if let Some(declared) = rec.side {
            let owner_side = sides[owner[c]];
            if declared != owner_side {
                return Err(CoverError::SideMismatch {
                    cover: rec.id,
                    declared,
                    owner_side,
                });
            }
        }
    }

    let mut base_adj = vec![Vec::new(); base_ids.len()];
    let mut adjacent = HashSet::with_capacity(base_edges.len());
    for &(u, v) in &base_edges {
        base_adj[u].push(v);
        base_adj[v].push(u);
        adjacent.insert((u.min(v), u.max(v)));
    }
    for &(a, b) in &cover_edges {
        let (u, v) = (owner[a], owner[b]);
        if !adjacent.contains(&(u.min(v), u.max(v))) {
            return Err(CoverError::StrayEdge(cover_ids[a], cover_ids[b]));
        }
    }

    let mut cover_adj = vec![Vec::new(); cover_ids.len()];
    for &(a, b) in &cover_edges {
        cover_adj[a].push(b);
        cover_adj[b].push(a);
    }
    // Matching condition, reported in cover-edge file order.
    let mut first_in_part: HashMap<(usize, usize), usize> = HashMap::new();
    for &(a, b) in &cover_edges {
        for (x, y) in [(a, b), (b, a)] {
            if let Some(&prev) = first_in_part.get(&(x, owner[y])) {
                return Err(CoverError::MatchingViolation {
                    cover: cover_ids[x],
                    part: base_ids[owner[y]],
                    first: cover_ids[prev],
                    second: cover_ids[y],
                });
            }
            first_in_part.insert((x, owner[y]), y);
        }
    }

    for list in base_adj.iter_mut().chain(cover_adj.iter_mut()) {
        list.sort_unstable();
    }

    Ok(CoverInstance {
        base_ids,
        sides,
        base_adj,
        base_edges,
        cover_ids,
        owner,
        parts,
        cover_adj,
        cover_edges,
        base_index,
        cover_index,
    })
}

impl CoverInstance {
    pub fn from_file(raw: &InstanceFile) -> Result<CoverInstance, CoverError> {
        validate_cover(raw)
    }

    pub fn num_base(&self) -> usize {
        self.sides.len()
    }

    pub fn num_cover(&self) -> usize {
        self.owner.len()
    }

    pub fn side(&self, v: usize) -> Side {
        self.sides[v]
    }

    pub fn cover_side(&self, c: usize) -> Side {
        self.sides[self.owner[c]]
    }

    /// Cover vertices owned by `v`, ascending.
    pub fn part(&self, v: usize) -> &[usize] {
        &self.parts[v]
    }

    pub fn owner(&self, c: usize) -> usize {
        self.owner[c]
    }

    pub fn base_neighbours(&self, v: usize) -> &[usize] {
        &self.base_adj[v]
    }

    pub fn cover_neighbours(&self, c: usize) -> &[usize] {
        &self.cover_adj[c]
    }

    pub fn base_edges(&self) -> &[(usize, usize)] {
        &self.base_edges
    }

    pub fn cover_edges(&self) -> &[(usize, usize)] {
        &self.cover_edges
    }

    pub fn base_id(&self, v: usize) -> u64 {
        self.base_ids[v]
    }

    pub fn cover_id(&self, c: usize) -> u64 {
        self.cover_ids[c]
    }

    pub fn base_index(&self, id: u64) -> Option<usize> {
        self.base_index.get(&id).copied()
    }

    pub fn cover_index(&self, id: u64) -> Option<usize> {
        self.cover_index.get(&id).copied()
    }

    pub fn vertices_on(&self, side: Side) -> impl Iterator<Item = usize> + '_ {
        (0..self.num_base()).filter(move |&v| self.sides[v] == side)
    }

    pub fn a_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.vertices_on(Side::A)
    }

    pub fn b_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.vertices_on(Side::B)
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let mut p = DegreeProfile {
            delta_a: 0,
            delta_b: 0,
            d_a: 0,
            d_b: 0,
            k_a: usize::MAX,
            k_b: usize::MAX,
        };
        for v in 0..self.num_base() {
            let (delta, d, k) = match self.sides[v] {
                Side::A => (&mut p.delta_a, &mut p.d_a, &mut p.k_a),
                Side::B => (&mut p.delta_b, &mut p.d_b, &mut p.k_b),
            };
            *delta = (*delta).max(self.base_adj[v].len());
            *k = (*k).min(self.parts[v].len());
            for &c in &self.parts[v] {
                *d = (*d).max(self.cover_adj[c].len());
            }
        }
        if p.k_a == usize::MAX {
            p.k_a = 0;
        }
        if p.k_b == usize::MAX {
            p.k_b = 0;
        }
        debug_assert!(p.d_a <= p.delta_a && p.d_b <= p.delta_b);
        p
    }

    /// Largest part size on one side (zero if the side is empty).
    pub fn max_part_size(&self, side: Side) -> usize {
        self.vertices_on(side)
            .map(|v| self.parts[v].len())
            .max()
            .unwrap_or(0)
    }

    /// Check that `t` picks one vertex from every part, then look for a cover
    /// edge inside it.
    pub fn check_transversal(&self, t: &Transversal) -> Result<Independence, TransversalError> {
        if t.choice.len() != self.num_base() {
            return Err(TransversalError::WrongLength {
                expected: self.num_base(),
                got: t.choice.len(),
            });
        }
        for (v, &c) in t.choice.iter().enumerate() {
            if c >= self.num_cover() || self.owner[c] != v {
                return Err(TransversalError::ChoiceOutsidePart { base: v, cover: c });
            }
        }
        for &c in &t.choice {
            for &n in &self.cover_adj[c] {
                if n > c && t.choice[self.owner[n]] == n {
                    return Ok(Independence::Conflict(c, n));
                }
            }
        }
        Ok(Independence::Independent)
    }

    pub fn is_independent_transversal(&self, t: &Transversal) -> bool {
        matches!(self.check_transversal(t), Ok(Independence::Independent))
    }

    /// Serialize back to the file layout, preserving ids and edge order.
    pub fn to_file(&self) -> InstanceFile {
        InstanceFile {
            base_vertices: (0..self.num_base())
                .map(|v| BaseVertexRecord {
                    id: self.base_ids[v],
                    side: self.sides[v],
                })
                .collect(),
            base_edges: self
                .base_edges
                .iter()
                .map(|&(u, v)| [self.base_ids[u], self.base_ids[v]])
                .collect(),
            cover_vertices: (0..self.num_cover())
                .map(|c| CoverVertexRecord {
                    id: self.cover_ids[c],
                    owner: self.base_ids[self.owner[c]],
                    side: None,
                })
                .collect(),
            cover_edges: self
                .cover_edges
                .iter()
                .map(|&(a, b)| [self.cover_ids[a], self.cover_ids[b]])
                .collect(),
        }
    }

    /// Keep only the lowest-indexed `keep_a` / `keep_b` vertices of every part
    /// on side A / B, dropping incident cover edges.
    pub fn truncated(&self, keep_a: usize, keep_b: usize) -> CoverInstance {
        let mut b = CoverBuilder::new();
        let base: Vec<usize> = (0..self.num_base()).map(|v| b.add_base(self.sides[v])).collect();
        let mut map = vec![None; self.num_cover()];
        for v in 0..self.num_base() {
            let keep = match self.sides[v] {
                Side::A => keep_a,
                Side::B => keep_b,
            };
            for &c in self.parts[v].iter().take(keep.max(1)) {
                map[c] = Some(b.add_cover(base[v]));
            }
        }
        for &(u, v) in &self.base_edges {
            b.add_base_edge(base[u], base[v]);
        }
        for &(x, y) in &self.cover_edges {
            if let (Some(x), Some(y)) = (map[x], map[y]) {
                b.add_cover_edge(x, y);
            }
        }
        b.build().expect("truncating a valid cover keeps it valid")
    }
}

/// Incremental construction of instances with dense ids, used by the generators.
#[derive(Clone, Debug, Default)]
pub struct CoverBuilder {
    file: InstanceFile,
}

impl CoverBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_base(&mut self, side: Side) -> usize {
        let id = self.file.base_vertices.len();
        self.file.base_vertices.push(BaseVertexRecord {
            id: id as u64,
            side,
        });
        id
    }

    pub fn add_cover(&mut self, owner: usize) -> usize {
        let id = self.file.cover_vertices.len();
        self.file.cover_vertices.push(CoverVertexRecord {
            id: id as u64,
            owner: owner as u64,
            side: None,
        });
        id
    }

    /// Add a part of `size` fresh cover vertices for `owner`, returning their ids.
    pub fn add_part(&mut self, owner: usize, size: usize) -> Vec<usize> {
        (0..size).map(|_| self.add_cover(owner)).collect()
    }

    pub fn add_base_edge(&mut self, u: usize, v: usize) {
        self.file.base_edges.push([u as u64, v as u64]);
    }

    pub fn add_cover_edge(&mut self, a: usize, b: usize) {
        self.file.cover_edges.push([a as u64, b as u64]);
    }

    pub fn file(&self) -> &InstanceFile {
        &self.file
    }

    pub fn build(self) -> Result<CoverInstance, CoverError> {
        validate_cover(&self.file)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn single_edge(cover_edges: Vec<[u64; 2]>, part_w: usize) -> InstanceFile {
        let mut f = InstanceFile {
            base_vertices: vec![
                BaseVertexRecord { id: 0, side: Side::A },
                BaseVertexRecord { id: 1, side: Side::B },
            ],
            base_edges: vec![[0, 1]],
            cover_vertices: vec![CoverVertexRecord { id: 10, owner: 0, side: None }],
            cover_edges,
        };
        for i in 0..part_w {
            f.cover_vertices.push(CoverVertexRecord {
                id: 20 + i as u64,
                owner: 1,
                side: None,
            });
        }
        f
    }

    #[test]
    fn smallest_instance_validates() {
        let inst = validate_cover(&single_edge(vec![], 1)).unwrap();
        assert_eq!(inst.num_base(), 2);
        let p = inst.degree_profile();
        assert_eq!(
            (p.delta_a, p.delta_b, p.d_a, p.d_b, p.k_a, p.k_b),
            (1, 1, 0, 0, 1, 1)
        );
    }

    #[test]
    fn two_neighbours_in_one_part_is_rejected() {
        let err = validate_cover(&single_edge(vec![[10, 20], [10, 21]], 2)).unwrap_err();
        assert_eq!(
            err,
            CoverError::MatchingViolation { cover: 10, part: 1, first: 20, second: 21 }
        );
    }

    #[test]
    fn empty_part_is_rejected() {
        let mut f = single_edge(vec![], 1);
        f.base_vertices.push(BaseVertexRecord { id: 7, side: Side::B });
        assert_eq!(validate_cover(&f).unwrap_err(), CoverError::EmptyPart(7));
    }

    #[test]
    fn same_side_base_edge_is_rejected() {
        let mut f = single_edge(vec![], 1);
        f.base_vertices.push(BaseVertexRecord { id: 2, side: Side::B });
        f.cover_vertices.push(CoverVertexRecord { id: 30, owner: 2, side: None });
        f.base_edges.push([1, 2]);
        assert_eq!(validate_cover(&f).unwrap_err(), CoverError::NonBipartiteBaseEdge(1, 2));
    }

    #[test]
    fn cover_edge_between_non_adjacent_parts_is_stray() {
        let mut f = single_edge(vec![], 1);
        f.base_vertices.push(BaseVertexRecord { id: 2, side: Side::B });
        f.cover_vertices.push(CoverVertexRecord { id: 30, owner: 2, side: None });
        f.cover_edges.push([10, 30]);
        assert_eq!(validate_cover(&f).unwrap_err(), CoverError::StrayEdge(10, 30));
        // An edge inside one part is stray as well.
        let mut g = single_edge(vec![[20, 21]], 2);
        g.cover_edges.truncate(1);
        assert_eq!(validate_cover(&g).unwrap_err(), CoverError::StrayEdge(20, 21));
    }

    #[test]
    fn declared_side_must_match_owner() {
        let mut f = single_edge(vec![], 1);
        f.cover_vertices[0].side = Some(Side::B);
        assert!(matches!(validate_cover(&f), Err(CoverError::SideMismatch { cover: 10, .. })));
        f.cover_vertices[0].side = Some(Side::A);
        assert!(validate_cover(&f).is_ok());
    }

    #[test]
    fn structural_errors() {
        let mut f = single_edge(vec![[10, 20]], 1);
        f.cover_edges.push([20, 10]);
        assert_eq!(validate_cover(&f).unwrap_err(), CoverError::DuplicateCoverEdge(20, 10));
        let mut g = single_edge(vec![[10, 99]], 1);
        assert_eq!(validate_cover(&g).unwrap_err(), CoverError::UnknownCoverVertex(99));
        g.cover_edges.clear();
        g.base_edges.push([1, 0]);
        assert_eq!(validate_cover(&g).unwrap_err(), CoverError::DuplicateBaseEdge(1, 0));
        assert!(CoverError::DuplicateBaseEdge(1, 0).is_structural());
        assert!(!CoverError::EmptyPart(1).is_structural());
    }

    #[test]
    fn transversal_checks() {
        let free = validate_cover(&single_edge(vec![], 1)).unwrap();
        let t = Transversal::new(vec![0, 1]);
        assert_eq!(free.check_transversal(&t), Ok(Independence::Independent));

        let clash = validate_cover(&single_edge(vec![[10, 20]], 1)).unwrap();
        assert_eq!(clash.check_transversal(&t), Ok(Independence::Conflict(0, 1)));

        let bad = Transversal::new(vec![1, 1]);
        assert_eq!(
            clash.check_transversal(&bad),
            Err(TransversalError::ChoiceOutsidePart { base: 0, cover: 1 })
        );
        assert!(matches!(
            clash.check_transversal(&Transversal::new(vec![0])),
            Err(TransversalError::WrongLength { .. })
        ));
    }

    #[test]
    fn file_round_trip_preserves_ids() {
        let f = single_edge(vec![[10, 21]], 2);
        let inst = validate_cover(&f).unwrap();
        assert_eq!(inst.to_file(), f);
        let text = serde_json::to_string(&f).unwrap();
        assert_eq!(InstanceFile::from_json(&text).unwrap(), f);
    }

    #[test]
    fn truncation_keeps_lowest_vertices() {
        let inst = validate_cover(&single_edge(vec![[10, 21]], 3)).unwrap();
        let t = inst.truncated(1, 2);
        assert_eq!(t.part(1).len(), 2);
        assert_eq!(t.cover_edges().len(), 1);
        let t = inst.truncated(1, 1);
        assert_eq!(t.cover_edges().len(), 0);
    }
}
