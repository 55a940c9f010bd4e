//! Exact ground-truth oracles: chromatic number and independence number
//! with certificates, plus the bounded `k`-coloring search the
//! constructive coloring engine uses for its sub-coloring steps.
//!
//! The chromatic search is branch-and-bound over color classes: the
//! lexicographically least maximum clique is pre-colored, vertices are
//! picked in saturation (DSATUR) order, and `max(ω, ⌈n/α⌉)` seeds the
//! lower bound. Everything here is exhaustive with sound pruning; there
//! are no heuristics that can return a wrong value.

use crate::graph::{Graph, VertexSet};
use crate::partition::{max_clique, max_clique_size};
use serde::Serialize;
use thiserror::Error;

/// Default vertex-count cap for the exponential oracles.
pub const DEFAULT_SIZE_CAP: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph has {n} vertices, above the oracle cap {cap}")]
    SizeCapExceeded { n: usize, cap: usize },
}

/// An exact value together with the object attaining it.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct OracleResult {
    pub value: usize,
    pub certificate: Certificate,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum Certificate {
    /// A proper coloring, vertex -> color (1-based).
    Coloring(Vec<usize>),
    /// A vertex set (maximum independent set).
    VertexSet(Vec<usize>),
}

/// Greedy DSATUR coloring; an upper bound, also used as the fallback
/// certificate when it meets the lower bound.
pub(crate) fn dsatur_greedy(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colors = vec![0usize; n];
    for _ in 0..n {
        // pick the uncolored vertex with most distinct neighbor colors,
        // tie-broken by degree then id
        let mut pick = None;
        for v in 0..n {
            if colors[v] != 0 {
                continue;
            }
            let sat = saturation(g, &colors, v);
            let key = (sat, g.degree(v), std::cmp::Reverse(v));
            if pick.map_or(true, |(best_key, _)| key > best_key) {
                pick = Some((key, v));
            }
        }
        let (_, v) = pick.expect("an uncolored vertex remains");
        let mut c = 1;
        while g.neighbors(v).iter().any(|u| colors[u] == c) {
            c += 1;
        }
        colors[v] = c;
    }
    colors
}

fn saturation(g: &Graph, colors: &[usize], v: usize) -> usize {
    let mut seen: Vec<usize> = g.neighbors(v).iter().map(|u| colors[u]).filter(|&c| c != 0).collect();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

struct KColoring<'a> {
    g: &'a Graph,
    k: usize,
    colors: Vec<usize>,
    uncolored: usize,
}

impl<'a> KColoring<'a> {
    fn solve(mut self) -> Option<Vec<usize>> {
        if self.search() {
            Some(self.colors)
        } else {
            None
        }
    }

    fn search(&mut self) -> bool {
        if self.uncolored == 0 {
            return true;
        }
        // most saturated first; fail fast on vertices with no choice
        let mut pick = None;
        for v in 0..self.g.n() {
            if self.colors[v] != 0 {
                continue;
            }
            let sat = saturation(self.g, &self.colors, v);
            if sat >= self.k {
                return false;
            }
            let key = (sat, self.g.degree(v), std::cmp::Reverse(v));
            if pick.map_or(true, |(best, _)| key > best) {
                pick = Some((key, v));
            }
        }
        let (_, v) = pick.expect("uncolored vertex exists");
        let max_used = self.colors.iter().copied().max().unwrap_or(0);
        // trying more than one fresh color only permutes color names
        let limit = self.k.min(max_used + 1);
        for c in 1..=limit {
            if self.g.neighbors(v).iter().any(|u| self.colors[u] == c) {
                continue;
            }
            self.colors[v] = c;
            self.uncolored -= 1;
            if self.search() {
                return true;
            }
            self.colors[v] = 0;
            self.uncolored += 1;
        }
        false
    }
}

/// Exhaustive `k`-colorability test. Returns a proper coloring with at
/// most `k` colors (1-based) or `None`. The lexicographically least
/// maximum clique is pre-colored, which is sound: some optimal coloring
/// assigns it distinct colors.
pub fn k_coloring(g: &Graph, k: usize) -> Option<Vec<usize>> {
    if g.n() == 0 {
        return Some(Vec::new());
    }
    let clique = max_clique(g).expect("non-empty graph");
    if clique.len() > k {
        return None;
    }
    let mut colors = vec![0usize; g.n()];
    for (c, &v) in clique.iter().enumerate() {
        colors[v] = c + 1;
    }
    let uncolored = g.n() - clique.len();
    KColoring { g, k, colors, uncolored }.solve()
}

fn check_cap(g: &Graph, cap: usize) -> Result<(), OracleError> {
    if g.n() > cap {
        return Err(OracleError::SizeCapExceeded { n: g.n(), cap });
    }
    Ok(())
}

/// Exact chromatic number with an optimal coloring, for graphs within
/// `cap` vertices.
pub fn exact_chromatic_number_capped(g: &Graph, cap: usize) -> Result<OracleResult, OracleError> {
    check_cap(g, cap)?;
    if g.n() == 0 {
        return Ok(OracleResult { value: 0, certificate: Certificate::Coloring(Vec::new()) });
    }
    let omega = max_clique_size(g);
    let alpha = max_clique_size(&g.complement());
    let lower = omega.max(g.n().div_ceil(alpha));
    let greedy = dsatur_greedy(g);
    let upper = greedy.iter().copied().max().unwrap_or(0);
    if upper == lower {
        return Ok(OracleResult { value: upper, certificate: Certificate::Coloring(greedy) });
    }
    for k in lower..upper {
        if let Some(colors) = k_coloring(g, k) {
            return Ok(OracleResult { value: k, certificate: Certificate::Coloring(colors) });
        }
    }
    Ok(OracleResult { value: upper, certificate: Certificate::Coloring(greedy) })
}

pub fn exact_chromatic_number(g: &Graph) -> Result<OracleResult, OracleError> {
    exact_chromatic_number_capped(g, DEFAULT_SIZE_CAP)
}

/// Exact independence number with a maximum independent set, computed as
/// a maximum clique of the complement.
pub fn independence_number_capped(g: &Graph, cap: usize) -> Result<OracleResult, OracleError> {
    check_cap(g, cap)?;
    if g.n() == 0 {
        return Ok(OracleResult { value: 0, certificate: Certificate::VertexSet(Vec::new()) });
    }
    let witness = max_clique(&g.complement()).expect("non-empty graph");
    Ok(OracleResult { value: witness.len(), certificate: Certificate::VertexSet(witness) })
}

pub fn independence_number(g: &Graph) -> Result<OracleResult, OracleError> {
    independence_number_capped(g, DEFAULT_SIZE_CAP)
}

/// True iff `colors` assigns every vertex a positive color and no edge
/// is monochromatic.
pub fn is_proper_coloring(g: &Graph, colors: &[usize]) -> bool {
    colors.len() == g.n()
        && colors.iter().all(|&c| c > 0)
        && g.edges().iter().all(|&(u, v)| colors[u] != colors[v])
}

#[allow(dead_code)]
pub(crate) fn color_classes(colors: &[usize]) -> Vec<VertexSet> {
    let k = colors.iter().copied().max().unwrap_or(0);
    let mut classes = vec![VertexSet::new(); k];
    for (v, &c) in colors.iter().enumerate() {
        if c > 0 {
            classes[c - 1].insert(v);
        }
    }
    classes
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edge_list(n, &edges).unwrap()
    }

    fn petersen() -> Graph {
        let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
        edges.extend((0..5).map(|i| (i, 5 + i)));
        Graph::from_edge_list(10, &edges).unwrap()
    }

    fn assert_chi(g: &Graph, expected: usize) {
        let r = exact_chromatic_number(g).unwrap();
        assert_eq!(r.value, expected);
        match r.certificate {
            Certificate::Coloring(c) => {
                assert!(is_proper_coloring(g, &c));
                assert_eq!(c.iter().copied().max().unwrap_or(0), expected);
            }
            _ => panic!("coloring certificate expected"),
        }
    }

    #[test]
    fn chi_examples() {
        assert_chi(&cycle(5), 3);
        assert_chi(&cycle(6), 2);
        assert_chi(&complete(7), 7);
        assert_chi(&Graph::empty(4), 1);
        assert_chi(&petersen(), 3);
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(independence_number(&complete(6)).unwrap().value, 1);
        assert_eq!(independence_number(&cycle(5)).unwrap().value, 2);
        let r = independence_number(&petersen()).unwrap();
        assert_eq!(r.value, 4);
        match r.certificate {
            Certificate::VertexSet(s) => {
                let set: VertexSet = s.iter().copied().collect();
                assert!(petersen().is_independent_set(&set));
                assert_eq!(set.len(), 4);
            }
            _ => panic!("set certificate expected"),
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            exact_chromatic_number(&Graph::empty(21)),
            Err(OracleError::SizeCapExceeded { n: 21, cap: 20 })
        ));
        assert!(exact_chromatic_number_capped(&Graph::empty(21), 30).is_ok());
    }

    #[test]
    fn k_coloring_boundaries() {
        assert!(k_coloring(&cycle(5), 2).is_none());
        let c = k_coloring(&cycle(5), 3).unwrap();
        assert!(is_proper_coloring(&cycle(5), &c));
        assert!(c.iter().all(|&x| x <= 3));
    }
}
