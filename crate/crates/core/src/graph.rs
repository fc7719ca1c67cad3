//! Disjointness graphs of segments, Kneser graphs, and the plain bit-matrix
//! graph the solver runs on.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::geometry::{
    crossing_pairs, in_general_position, relation_unchecked, segments_of, PointSet, SegmentId, SegmentRelation,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    Degenerate,
    TooFewPoints { n: usize },
    KOutOfRange { n: usize, k: usize },
    UnknownPoint { index: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::Degenerate => write!(f, "point set is not in general position"),
            GraphError::TooFewPoints { n } => write!(f, "need at least 2 points, got {n}"),
            GraphError::KOutOfRange { n, k } => write!(f, "k = {k} out of range for n = {n}"),
            GraphError::UnknownPoint { index } => {
                write!(f, "point {index} is not in the owner set")
            }
        }
    }
}

impl core::error::Error for GraphError {}

/// Undirected simple graph stored as a symmetric bit matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Graph { n, words, rows: vec![0; n * words] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn words(&self) -> usize {
        self.words
    }

    /// Ignores self-loops.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u == v {
            return;
        }
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn row(&self, u: usize) -> &[u64] {
        &self.rows[u * self.words..(u + 1) * self.words]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(u).iter().enumerate().flat_map(|(wi, &w)| BitIter(w).map(move |b| wi * 64 + b))
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Subgraph induced by `keep` (in the given order).
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut g = Graph::new(keep.len());
        for (a, &u) in keep.iter().enumerate() {
            for (b, &v) in keep.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(a, b);
                }
            }
        }
        g
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }
}

/// Iterates the set bit positions of a word.
pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let b = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(b)
        }
    }
}

/// `D(P)` restricted to the segments spanned by `members`.
///
/// Vertices are the spanned segments in lexicographic `(i, j)` order; their
/// endpoints are indices into the owner point set, so colorings of induced
/// graphs can be compared with colorings of the whole.
#[derive(Clone, Debug)]
pub struct DisjointnessGraph {
    points: PointSet,
    members: Vec<usize>,
    segments: Vec<SegmentId>,
    lookup: Vec<u32>,
    graph: Graph,
}

const NO_VERTEX: u32 = u32::MAX;

impl DisjointnessGraph {
    pub fn points(&self) -> &PointSet {
        &self.points
    }

    /// Point indices (sorted) whose segments are vertices.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn segments(&self) -> &[SegmentId] {
        &self.segments
    }

    pub fn segment(&self, v: usize) -> SegmentId {
        self.segments[v]
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.segments.len()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    /// Vertex index of `e`, if both endpoints are members.
    pub fn vertex_of(&self, e: SegmentId) -> Option<usize> {
        let n = self.points.len();
        if e.i >= n || e.j >= n {
            return None;
        }
        let v = self.lookup[e.i * n + e.j];
        (v != NO_VERTEX).then_some(v as usize)
    }

    pub fn vertex_between(&self, a: usize, b: usize) -> Option<usize> {
        SegmentId::new(a, b).and_then(|e| self.vertex_of(e))
    }

    pub fn is_member(&self, p: usize) -> bool {
        self.members.binary_search(&p).is_ok()
    }

    pub fn adjacent(&self, e: SegmentId, f: SegmentId) -> bool {
        match (self.vertex_of(e), self.vertex_of(f)) {
            (Some(u), Some(v)) => self.graph.has_edge(u, v),
            _ => false,
        }
    }
}

/// Builds `D(P)` over all points of `ps`.
pub fn build_disjointness(ps: &PointSet) -> Result<DisjointnessGraph, GraphError> {
    if ps.len() < 2 {
        return Err(GraphError::TooFewPoints { n: ps.len() });
    }
    if !in_general_position(ps) {
        return Err(GraphError::Degenerate);
    }
    let members: Vec<usize> = (0..ps.len()).collect();
    Ok(build_on(ps, members))
}

fn build_on(ps: &PointSet, members: Vec<usize>) -> DisjointnessGraph {
    let n = ps.len();
    let segments = segments_of(&members);
    let mut lookup = vec![NO_VERTEX; n * n];
    for (v, e) in segments.iter().enumerate() {
        lookup[e.i * n + e.j] = v as u32;
        lookup[e.j * n + e.i] = v as u32;
    }
    let mut graph = Graph::new(segments.len());
    for (u, &e) in segments.iter().enumerate() {
        for (v, &f) in segments.iter().enumerate().skip(u + 1) {
            if relation_unchecked(ps, e, f) == SegmentRelation::Disjoint {
                graph.add_edge(u, v);
            }
        }
    }
    DisjointnessGraph { points: ps.clone(), members, segments, lookup, graph }
}

/// The subgraph of `g` on segments with both endpoints in `q`.
pub fn induced(g: &DisjointnessGraph, q: &[usize]) -> Result<DisjointnessGraph, GraphError> {
    let mut members = q.to_vec();
    members.sort_unstable();
    members.dedup();
    if members.len() < 2 {
        return Err(GraphError::TooFewPoints { n: members.len() });
    }
    if let Some(&p) = members.iter().find(|&&p| !g.is_member(p)) {
        return Err(GraphError::UnknownPoint { index: p });
    }
    let n = g.points.len();
    let segments = segments_of(&members);
    let mut lookup = vec![NO_VERTEX; n * n];
    let old: Vec<usize> = segments.iter().map(|&e| g.vertex_of(e).expect("member segment")).collect();
    for (v, e) in segments.iter().enumerate() {
        lookup[e.i * n + e.j] = v as u32;
        lookup[e.j * n + e.i] = v as u32;
    }
    let graph = g.graph.induced(&old);
    Ok(DisjointnessGraph { points: g.points.clone(), members, segments, lookup, graph })
}

/// Convenience: `D(P[q])` built directly from the owner set.
pub fn disjointness_on(ps: &PointSet, q: &[usize]) -> Result<DisjointnessGraph, GraphError> {
    let mut members = q.to_vec();
    members.sort_unstable();
    members.dedup();
    if members.len() < 2 {
        return Err(GraphError::TooFewPoints { n: members.len() });
    }
    if let Some(&p) = members.iter().find(|&&p| p >= ps.len()) {
        return Err(GraphError::UnknownPoint { index: p });
    }
    if !in_general_position(&ps.subset(&members)) {
        return Err(GraphError::Degenerate);
    }
    Ok(build_on(ps, members))
}

/// `KG(n, k)` on the k-subsets of `{0..n}` in lexicographic order.
#[derive(Clone, Debug)]
pub struct KneserGraph {
    pub n: usize,
    pub k: usize,
    subsets: Vec<Vec<usize>>,
    graph: Graph,
}

impl KneserGraph {
    pub fn subsets(&self) -> &[Vec<usize>] {
        &self.subsets
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.subsets.len()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }
}

pub fn build_kneser(n: usize, k: usize) -> Result<KneserGraph, GraphError> {
    if k < 1 || 2 * k > n {
        return Err(GraphError::KOutOfRange { n, k });
    }
    let mut subsets = Vec::new();
    crate::geometry::for_each_subset(n, k, |s| {
        subsets.push(s.to_vec());
        false
    });
    let masks: Vec<u64> = subsets.iter().map(|s| s.iter().fold(0u64, |m, &i| m | 1 << i)).collect();
    let mut graph = Graph::new(subsets.len());
    for u in 0..masks.len() {
        for v in u + 1..masks.len() {
            if masks[u] & masks[v] == 0 {
                graph.add_edge(u, v);
            }
        }
    }
    Ok(KneserGraph { n, k, subsets, graph })
}

/// `|E(KG(n,2))| - |E(D(P))|`, after checking that every edge of `D(P)` is
/// an edge of `KG(n,2)` under `i -> p_i`. Equals the number of crossings.
pub fn kg_embedding_gap(ps: &PointSet) -> Result<usize, GraphError> {
    let d = build_disjointness(ps)?;
    let n = ps.len();
    if n < 4 {
        return Ok(0);
    }
    let kg = build_kneser(n, 2)?;
    // Both vertex lists are lexicographic 2-subsets, so indices coincide.
    for (u, v) in d.graph().edges() {
        assert!(kg.graph().has_edge(u, v), "D(P) edge missing from KG(n,2)");
    }
    let gap = kg.edge_count() - d.edge_count();
    debug_assert_eq!(gap, crossing_pairs(ps).len());
    Ok(gap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::make_convex;

    #[test]
    fn convex_small_counts() {
        let c3 = build_disjointness(&make_convex(3).unwrap()).unwrap();
        assert_eq!((c3.vertex_count(), c3.edge_count()), (3, 0));
        let c4 = build_disjointness(&make_convex(4).unwrap()).unwrap();
        assert_eq!((c4.vertex_count(), c4.edge_count()), (6, 2));
        let c5 = build_disjointness(&make_convex(5).unwrap()).unwrap();
        assert_eq!((c5.vertex_count(), c5.edge_count()), (10, 10));
    }

    #[test]
    fn kneser_counts() {
        let k = build_kneser(5, 2).unwrap();
        assert_eq!((k.vertex_count(), k.edge_count()), (10, 15));
        let k = build_kneser(4, 2).unwrap();
        assert_eq!((k.vertex_count(), k.edge_count()), (6, 3));
        let k = build_kneser(2, 1).unwrap();
        assert_eq!((k.vertex_count(), k.edge_count()), (2, 1));
        assert!(build_kneser(5, 3).is_err());
        assert!(build_kneser(5, 0).is_err());
        let k = build_kneser(7, 3).unwrap();
        // C(7,3) * C(4,3) / 2
        assert_eq!(k.edge_count(), 35 * 4 / 2);
    }

    #[test]
    fn embedding_gap_examples() {
        assert_eq!(kg_embedding_gap(&make_convex(3).unwrap()), Ok(0));
        assert_eq!(kg_embedding_gap(&make_convex(4).unwrap()), Ok(1));
        assert_eq!(kg_embedding_gap(&make_convex(5).unwrap()), Ok(5));
    }

    #[test]
    fn induced_matches_direct_build() {
        let p = make_convex(7).unwrap();
        let g = build_disjointness(&p).unwrap();
        let same = induced(&g, &[0, 1, 2, 3, 4, 5, 6]).unwrap();
        assert_eq!(same.graph(), g.graph());
        let tri = induced(&g, &[1, 3, 5]).unwrap();
        assert_eq!((tri.vertex_count(), tri.edge_count()), (3, 0));
        let q = [0, 2, 3, 6];
        let direct = disjointness_on(&p, &q).unwrap();
        assert_eq!(induced(&g, &q).unwrap().graph(), direct.graph());
        assert!(induced(&g, &[4]).is_err());
    }

    #[test]
    fn degenerate_rejected() {
        let p = PointSet::from_coords(&[(0, 0), (1, 1), (2, 2)]).unwrap();
        assert_eq!(build_disjointness(&p).err(), Some(GraphError::Degenerate));
    }
}
