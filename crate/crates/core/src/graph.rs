//! Undirected simple graphs on dense vertex ids `0..n`, with bitset
//! adjacency rows. Everything downstream (pattern search, clique
//! branch-and-bound, partition construction) leans on cheap row
//! intersections, so the representation is a plain `Vec<u64>` per vertex.

use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

const WORD_BITS: usize = 64;

/// A set of vertex ids backed by machine words.
///
/// The set has no fixed universe; operations that need one (complement)
/// take it explicitly. Equality ignores trailing zero words.
#[derive(Clone, Default, Eq)]
pub struct VertexSet {
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new() -> Self {
        Self { words: Vec::new() }
    }

    /// Set containing every id in `0..n`.
    pub fn full(n: usize) -> Self {
        let mut words = vec![u64::MAX; n.div_ceil(WORD_BITS)];
        if n % WORD_BITS != 0 {
            if let Some(last) = words.last_mut() {
                *last = (1u64 << (n % WORD_BITS)) - 1;
            }
        }
        Self { words }
    }

    pub fn singleton(v: usize) -> Self {
        let mut s = Self::new();
        s.insert(v);
        s
    }

    pub fn insert(&mut self, v: usize) {
        let w = v / WORD_BITS;
        if w >= self.words.len() {
            self.words.resize(w + 1, 0);
        }
        self.words[w] |= 1u64 << (v % WORD_BITS);
    }

    pub fn remove(&mut self, v: usize) {
        let w = v / WORD_BITS;
        if w < self.words.len() {
            self.words[w] &= !(1u64 << (v % WORD_BITS));
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        let w = v / WORD_BITS;
        w < self.words.len() && self.words[w] & (1u64 << (v % WORD_BITS)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Smallest member, if any.
    pub fn min(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * WORD_BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * WORD_BITS + b)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        for (i, w) in self.words.iter_mut().enumerate() {
            *w &= other.words.get(i).copied().unwrap_or(0);
        }
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        if other.words.len() > self.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (i, &w) in other.words.iter().enumerate() {
            self.words[i] |= w;
        }
    }

    pub fn subtract(&mut self, other: &VertexSet) {
        for (i, w) in self.words.iter_mut().enumerate() {
            *w &= !other.words.get(i).copied().unwrap_or(0);
        }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.subtract(other);
        out
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & b == 0)
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .enumerate()
            .all(|(i, &w)| w & !other.words.get(i).copied().unwrap_or(0) == 0)
    }
}

impl PartialEq for VertexSet {
    fn eq(&self, other: &Self) -> bool {
        let n = self.words.len().max(other.words.len());
        (0..n).all(|i| {
            self.words.get(i).copied().unwrap_or(0) == other.words.get(i).copied().unwrap_or(0)
        })
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = Self::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let ids = Vec::<usize>::deserialize(deserializer)?;
        Ok(ids.into_iter().collect())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge endpoint {vertex} out of range for graph on {n} vertices")]
    EndpointOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("sets overlap at vertex {0}")]
    OverlappingSets(usize),
}

/// An immutable, undirected, simple graph.
///
/// Adjacency is symmetric and irreflexive by construction; duplicate
/// edges in the input are silently collapsed, self-loops are rejected.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            adj: vec![VertexSet::new(); n],
        }
    }

    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::EndpointOutOfRange { vertex: w, n });
                }
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    /// Neighbors of `v` inside `s`.
    pub fn neighbors_in(&self, v: usize, s: &VertexSet) -> VertexSet {
        self.adj[v].intersection(s)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` pairs with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n);
        let mut adj = Vec::with_capacity(self.n);
        for v in 0..self.n {
            let mut row = full.clone();
            row.subtract(&self.adj[v]);
            row.remove(v);
            adj.push(row);
        }
        Graph { n: self.n, adj }
    }

    /// Subgraph induced by `s`, re-indexed to `0..|s|`.
    ///
    /// Returns the subgraph and the index map from new ids to the ids in
    /// `self` (ascending, so the map is order-preserving).
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        let map = s.to_vec();
        if let Some(&v) = map.iter().find(|&&v| v >= self.n) {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        let mut g = Graph::empty(map.len());
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.adj[i].insert(j);
                    g.adj[j].insert(i);
                }
            }
        }
        Ok((g, map))
    }

    pub fn is_independent_set(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        let k = s.len();
        s.iter().all(|v| self.neighbors_in(v, s).len() == k - 1)
    }

    /// True iff every `s`–`t` pair is an edge. The sets must be disjoint.
    pub fn is_complete_between(&self, s: &VertexSet, t: &VertexSet) -> Result<bool, GraphError> {
        if let Some(v) = s.intersection(t).min() {
            return Err(GraphError::OverlappingSets(v));
        }
        Ok(s.iter().all(|v| t.is_subset_of(&self.adj[v])))
    }

    /// True iff at least one edge runs between `s` and `t`.
    pub fn has_edge_between(&self, s: &VertexSet, t: &VertexSet) -> bool {
        s.iter().any(|v| !self.adj[v].is_disjoint(t))
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n, self.edge_count(), self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c5() -> Graph {
        Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()
    }

    #[test]
    fn from_edge_list_path() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2) && !g.has_edge(0, 2));
    }

    #[test]
    fn from_edge_list_cycle() {
        let g = c5();
        assert_eq!(g.edge_count(), 5);
        assert!(g.vertices().all(|v| g.degree(v) == 2));
    }

    #[test]
    fn from_edge_list_rejects_self_loop() {
        assert_eq!(
            Graph::from_edge_list(4, &[(0, 0)]),
            Err(GraphError::SelfLoop(0))
        );
    }

    #[test]
    fn from_edge_list_rejects_out_of_range() {
        assert!(matches!(
            Graph::from_edge_list(3, &[(0, 3)]),
            Err(GraphError::EndpointOutOfRange { vertex: 3, n: 3 })
        ));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn complement_of_complete_is_edgeless() {
        let k4 = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
            .unwrap();
        assert_eq!(k4.complement().edge_count(), 0);
    }

    #[test]
    fn complement_of_c5_is_two_regular() {
        // C5 is self-complementary: the complement is again a connected
        // 2-regular graph on 5 vertices, which can only be C5.
        let h = c5().complement();
        assert_eq!(h.n(), 5);
        assert!(h.vertices().all(|v| h.degree(v) == 2));
        assert_eq!(h.edge_count(), 5);
    }

    #[test]
    fn induced_subgraph_of_cycle_is_path() {
        let (p, map) = c5().induced_subgraph(&[0usize, 1, 2].into_iter().collect()).unwrap();
        assert_eq!(map, vec![0, 1, 2]);
        assert_eq!(p.edge_count(), 2);
        assert!(p.has_edge(0, 1) && p.has_edge(1, 2) && !p.has_edge(0, 2));
    }

    #[test]
    fn induced_subgraph_full_set_is_identity() {
        let g = c5();
        let (h, map) = g.induced_subgraph(&g.vertex_set()).unwrap();
        assert_eq!(map, vec![0, 1, 2, 3, 4]);
        assert_eq!(h, g);
    }

    #[test]
    fn induced_subgraph_rejects_out_of_range() {
        let g = c5();
        assert!(matches!(
            g.induced_subgraph(&VertexSet::singleton(9)),
            Err(GraphError::VertexOutOfRange { vertex: 9, .. })
        ));
    }

    #[test]
    fn predicates() {
        let k5 = Graph::from_edge_list(
            5,
            &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)],
        )
        .unwrap();
        assert!(k5.is_clique(&k5.vertex_set()));
        assert!(c5().is_independent_set(&[0usize, 2].into_iter().collect()));

        // K_{2,3}
        let k23 = Graph::from_edge_list(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
            .unwrap();
        let side1: VertexSet = [0usize, 1].into_iter().collect();
        let side2: VertexSet = [2usize, 3, 4].into_iter().collect();
        assert!(k23.is_complete_between(&side1, &side2).unwrap());
        assert!(matches!(
            k23.is_complete_between(&side1, &side1),
            Err(GraphError::OverlappingSets(0))
        ));
    }

    #[test]
    fn vertex_set_basics() {
        let mut s = VertexSet::new();
        s.insert(3);
        s.insert(70);
        s.insert(3);
        assert_eq!(s.len(), 2);
        assert_eq!(s.to_vec(), vec![3, 70]);
        assert_eq!(s.min(), Some(3));
        s.remove(3);
        assert_eq!(s.to_vec(), vec![70]);
        assert!(VertexSet::full(65).contains(64));
        assert_eq!(VertexSet::full(65).len(), 65);
    }
}
