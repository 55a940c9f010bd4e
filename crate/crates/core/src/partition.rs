//! Exact maximum clique and the two-level vertex partition every
//! structural check and coloring case consumes.
//!
//! Around a maximum clique `A = [v_0, .., v_{ω-1}]` (0-based positions
//! throughout), each outside vertex either misses exactly one clique
//! vertex — landing in the near-dominating class `I_k` — or misses at
//! least two, landing in `C_{i,j}` for the lexicographically least pair
//! `(i, j)` of missed positions. `V1` collects the parts
//! `U_k = {v_k} ∪ I_k`; `V2` collects the `C` classes and is partitioned
//! once more by the same rule, giving `X1 = V1`,
//! `X2 = A' ∪ ⋃I'`, `X3 = ⋃C'`.
//!
//! All tie-breaking is fixed: `A` is the lexicographically least maximum
//! clique ordered ascending, and the same rule applies to `A'` inside
//! `⟨V2⟩` (whose re-indexing is order-preserving), so identical inputs
//! produce identical partitions.

use crate::graph::{Graph, VertexSet};
use serde::Serialize;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("supplied vertex list is not a clique: {0:?}")]
    NotAClique(Vec<usize>),
    #[error("supplied clique has size {got} but the maximum is {maximum}")]
    NotMaximum { got: usize, maximum: usize },
}

// ---------------------------------------------------------------------------
// exact maximum clique (branch and bound over bitsets)
// ---------------------------------------------------------------------------

/// Greedy coloring of `cand`, returned as (vertex, color) with colors
/// ascending; used as the branch-and-bound upper bound.
fn color_sort(g: &Graph, cand: &VertexSet) -> Vec<(usize, usize)> {
    let mut classes: Vec<VertexSet> = Vec::new();
    let mut out = Vec::with_capacity(cand.len());
    for v in cand.iter() {
        let mut placed = false;
        for (ci, class) in classes.iter_mut().enumerate() {
            if g.neighbors(v).is_disjoint(class) {
                class.insert(v);
                out.push((v, ci + 1));
                placed = true;
                break;
            }
        }
        if !placed {
            classes.push(VertexSet::singleton(v));
            out.push((v, classes.len()));
        }
    }
    out.sort_by_key(|&(v, c)| (c, v));
    out
}

fn expand(g: &Graph, size: usize, cand: &VertexSet, best: &mut usize) {
    let order = color_sort(g, cand);
    let mut cand = cand.clone();
    for &(v, color) in order.iter().rev() {
        if size + color <= *best {
            return;
        }
        let next = g.neighbors_in(v, &cand);
        if next.is_empty() {
            if size + 1 > *best {
                *best = size + 1;
            }
        } else {
            expand(g, size + 1, &next, best);
        }
        cand.remove(v);
    }
}

/// Size of a maximum clique. Zero only for the empty graph.
pub fn max_clique_size(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    let mut best = 1;
    expand(g, 0, &g.vertex_set(), &mut best);
    best
}

/// True iff `cand ∪ fixed` extends to a clique with `need` more vertices
/// taken from `cand`.
fn exists_clique(g: &Graph, cand: &VertexSet, need: usize) -> bool {
    if need == 0 {
        return true;
    }
    if cand.len() < need {
        return false;
    }
    let order = color_sort(g, cand);
    if order.last().map(|&(_, c)| c).unwrap_or(0) < need {
        return false;
    }
    let mut cand = cand.clone();
    for &(v, color) in order.iter().rev() {
        if color < need {
            return false;
        }
        if exists_clique(g, &g.neighbors_in(v, &cand), need - 1) {
            return true;
        }
        cand.remove(v);
    }
    false
}

/// The lexicographically least maximum clique, ascending.
///
/// Among all maximum cliques, the returned vertex sequence is minimal in
/// lexicographic order; this fixes `v_0..v_{ω-1}` deterministically.
pub fn max_clique(g: &Graph) -> Result<Vec<usize>, PartitionError> {
    if g.n() == 0 {
        return Err(PartitionError::EmptyGraph);
    }
    let omega = max_clique_size(g);
    let mut chosen: Vec<usize> = Vec::with_capacity(omega);
    let mut cand = g.vertex_set();
    while chosen.len() < omega {
        let mut advanced = false;
        for v in cand.clone().iter() {
            let rest = g.neighbors_in(v, &cand);
            if exists_clique(g, &rest, omega - chosen.len() - 1) {
                chosen.push(v);
                cand = rest;
                advanced = true;
                break;
            }
            cand.remove(v);
        }
        debug_assert!(advanced, "maximum clique extraction cannot stall");
        if !advanced {
            break;
        }
    }
    chosen.sort_unstable();
    Ok(chosen)
}

// ---------------------------------------------------------------------------
// first-level partition
// ---------------------------------------------------------------------------

/// The partition of `V(G)` around an ordered maximum clique.
///
/// Class indices are 0-based positions into `a`: `i_classes[k]` misses
/// exactly `a[k]`; `c_classes[(i, j)]` misses `a[i]` and `a[j]` as its
/// least missed pair.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct WagonPartition {
    pub a: Vec<usize>,
    pub i_classes: Vec<VertexSet>,
    pub c_classes: BTreeMap<(usize, usize), VertexSet>,
}

impl WagonPartition {
    pub fn omega(&self) -> usize {
        self.a.len()
    }

    /// `U_k = {v_k} ∪ I_k`.
    pub fn u_class(&self, k: usize) -> VertexSet {
        let mut u = self.i_classes[k].clone();
        u.insert(self.a[k]);
        u
    }

    /// Union of all `U_k`.
    pub fn v1(&self) -> VertexSet {
        let mut out: VertexSet = self.a.iter().copied().collect();
        for i in &self.i_classes {
            out.union_with(i);
        }
        out
    }

    /// Union of all `C_{i,j}`.
    pub fn v2(&self) -> VertexSet {
        let mut out = VertexSet::new();
        for c in self.c_classes.values() {
            out.union_with(c);
        }
        out
    }

    pub fn c_class(&self, i: usize, j: usize) -> VertexSet {
        self.c_classes.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// Indices `k` with `I_k` non-empty.
    pub fn nonempty_i(&self) -> Vec<usize> {
        (0..self.omega()).filter(|&k| !self.i_classes[k].is_empty()).collect()
    }
}

/// Classifies every vertex outside `a` by its set of missed clique
/// positions. `a` must be a maximum clique of `g`.
pub fn build_partition(g: &Graph, a: &[usize]) -> Result<WagonPartition, PartitionError> {
    let a_set: VertexSet = a.iter().copied().collect();
    if a_set.len() != a.len() || !g.is_clique(&a_set) {
        return Err(PartitionError::NotAClique(a.to_vec()));
    }
    let maximum = max_clique_size(g);
    if a.len() != maximum {
        return Err(PartitionError::NotMaximum { got: a.len(), maximum });
    }
    let omega = a.len();
    let mut i_classes = vec![VertexSet::new(); omega];
    let mut c_classes: BTreeMap<(usize, usize), VertexSet> = BTreeMap::new();
    for v in g.vertices() {
        if a_set.contains(v) {
            continue;
        }
        let missed: Vec<usize> =
            (0..omega).filter(|&k| !g.has_edge(v, a[k])).collect();
        match missed.as_slice() {
            [] => {
                // adjacent to all of A: A was not maximum after all
                return Err(PartitionError::NotMaximum { got: omega, maximum: omega + 1 });
            }
            [k] => i_classes[*k].insert(v),
            [i, j, ..] => c_classes.entry((*i, *j)).or_default().insert(v),
        }
    }
    Ok(WagonPartition { a: a.to_vec(), i_classes, c_classes })
}

// ---------------------------------------------------------------------------
// two-level partition
// ---------------------------------------------------------------------------

/// First-level partition plus the same construction applied to `⟨V2⟩`.
///
/// All vertex ids, including those of the second level, refer to the
/// original graph; the canonical `A'` is computed in `⟨V2⟩`'s
/// re-indexed order, which agrees with the original order.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct TwoLevelPartition {
    pub first: WagonPartition,
    pub v1: VertexSet,
    pub v2: VertexSet,
    /// Partition of `⟨V2⟩` in original ids; `None` iff `V2 = ∅`.
    pub second: Option<WagonPartition>,
    pub x1: VertexSet,
    pub x2: VertexSet,
    pub x3: VertexSet,
}

impl TwoLevelPartition {
    pub fn omega(&self) -> usize {
        self.first.omega()
    }

    /// `ω(⟨V2⟩) = |A'|`.
    pub fn omega_v2(&self) -> usize {
        self.second.as_ref().map_or(0, WagonPartition::omega)
    }

    /// `U'_t` in original ids.
    pub fn u_prime(&self, t: usize) -> VertexSet {
        self.second.as_ref().map(|s| s.u_class(t)).unwrap_or_default()
    }
}

pub fn build_two_level(g: &Graph) -> Result<TwoLevelPartition, PartitionError> {
    let a = max_clique(g)?;
    build_two_level_with_clique(g, &a)
}

/// Same as [`build_two_level`] but takes the first-level clique, so
/// alternate maximum cliques can be explored.
pub fn build_two_level_with_clique(
    g: &Graph,
    a: &[usize],
) -> Result<TwoLevelPartition, PartitionError> {
    let first = build_partition(g, a)?;
    let v1 = first.v1();
    let v2 = first.v2();
    let second = if v2.is_empty() {
        None
    } else {
        let (sub, map) = g.induced_subgraph(&v2).expect("V2 is within range");
        let a2 = max_clique(&sub).expect("V2 is non-empty");
        let local = build_partition(&sub, &a2).expect("A' is a verified maximum clique");
        Some(relabel(&local, &map))
    };
    let x2 = second.as_ref().map(WagonPartition::v1).unwrap_or_default();
    let x3 = second.as_ref().map(WagonPartition::v2).unwrap_or_default();
    Ok(TwoLevelPartition { first, v1: v1.clone(), v2, second, x1: v1, x2, x3 })
}

fn relabel(p: &WagonPartition, map: &[usize]) -> WagonPartition {
    let relabel_set = |s: &VertexSet| s.iter().map(|v| map[v]).collect::<VertexSet>();
    WagonPartition {
        a: p.a.iter().map(|&v| map[v]).collect(),
        i_classes: p.i_classes.iter().map(relabel_set).collect(),
        c_classes: p
            .c_classes
            .iter()
            .map(|(&k, s)| (k, relabel_set(s)))
            .collect(),
    }
}

// ---------------------------------------------------------------------------
// partition axioms
// ---------------------------------------------------------------------------

/// A violated partition axiom; data, not an error.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct AxiomViolation {
    pub axiom: &'static str,
    pub detail: String,
    pub vertices: Vec<usize>,
}

fn violation(axiom: &'static str, detail: String, vertices: Vec<usize>) -> AxiomViolation {
    AxiomViolation { axiom, detail, vertices }
}

/// Checks the defining properties of both partition levels exactly:
/// `A` is a maximum clique, each `I_k` is independent and misses exactly
/// `v_k`, each `C_{i,j}` member has `(i, j)` as its least missed pair
/// (hence is adjacent to every earlier clique vertex other than `v_i`),
/// all classes are pairwise disjoint, and the classes cover `V(G)`.
pub fn verify_partition_axioms(g: &Graph, p: &TwoLevelPartition) -> Vec<AxiomViolation> {
    let mut out = verify_level(g, &p.first, &g.vertex_set(), "");
    // level assembly
    if p.first.v1() != p.v1 || p.first.v2() != p.v2 {
        out.push(violation("assembly", "V1/V2 do not match the first level".into(), vec![]));
    }
    if p.x1 != p.v1 {
        out.push(violation("assembly", "X1 != V1".into(), vec![]));
    }
    match &p.second {
        None => {
            if !p.v2.is_empty() {
                out.push(violation("assembly", "V2 non-empty but no second level".into(), vec![]));
            }
            if !p.x2.is_empty() || !p.x3.is_empty() {
                out.push(violation("assembly", "X2/X3 non-empty without a second level".into(), vec![]));
            }
        }
        Some(second) => {
            let (sub, map) = g.induced_subgraph(&p.v2).expect("V2 in range");
            // verify the second level inside ⟨V2⟩ by translating back
            let inverse: BTreeMap<usize, usize> =
                map.iter().enumerate().map(|(new, &old)| (old, new)).collect();
            let pull = |s: &VertexSet| -> Option<VertexSet> {
                s.iter().map(|v| inverse.get(&v).copied()).collect::<Option<VertexSet>>()
            };
            let local_a: Option<Vec<usize>> =
                second.a.iter().map(|v| inverse.get(v).copied()).collect();
            let local_i: Option<Vec<VertexSet>> = second.i_classes.iter().map(pull).collect();
            let local_c: Option<BTreeMap<(usize, usize), VertexSet>> = second
                .c_classes
                .iter()
                .map(|(&k, s)| pull(s).map(|s| (k, s)))
                .collect();
            match (local_a, local_i, local_c) {
                (Some(a), Some(i_classes), Some(c_classes)) => {
                    let local = WagonPartition { a, i_classes, c_classes };
                    for mut v in verify_level(&sub, &local, &sub.vertex_set(), "'") {
                        v.vertices = v.vertices.into_iter().map(|x| map[x]).collect();
                        v.detail = format!("(inside ⟨V2⟩) {}", v.detail);
                        out.push(v);
                    }
                }
                _ => out.push(violation(
                    "assembly",
                    "second level contains vertices outside V2".into(),
                    vec![],
                )),
            }
            let mut x2 = second.v1();
            let x3 = second.v2();
            if x2 != p.x2 || x3 != p.x3 {
                out.push(violation("assembly", "X2/X3 do not match the second level".into(), vec![]));
            }
            x2.union_with(&x3);
            if x2 != p.v2 {
                out.push(violation("assembly", "X2 ∪ X3 != V2".into(), vec![]));
            }
        }
    }
    out
}

/// Axioms for one partition level over the full vertex set `universe`
/// of the (sub)graph `g`.
fn verify_level(
    g: &Graph,
    p: &WagonPartition,
    universe: &VertexSet,
    tag: &str,
) -> Vec<AxiomViolation> {
    let mut out = Vec::new();
    let omega = p.omega();
    let a_set: VertexSet = p.a.iter().copied().collect();
    if a_set.len() != omega || !g.is_clique(&a_set) {
        out.push(violation("clique", format!("A{tag} is not a clique"), p.a.clone()));
        return out;
    }
    let maximum = max_clique_size(g);
    if omega != maximum {
        out.push(violation(
            "clique",
            format!("A{tag} has size {omega} but ω = {maximum}"),
            p.a.clone(),
        ));
    }
    // disjointness and coverage
    let mut seen = a_set.clone();
    let mut classes: Vec<(String, &VertexSet)> = Vec::new();
    for (k, i) in p.i_classes.iter().enumerate() {
        classes.push((format!("I{tag}_{k}"), i));
    }
    for (&(i, j), c) in &p.c_classes {
        classes.push((format!("C{tag}_{{{i},{j}}}"), c));
    }
    for (name, class) in &classes {
        if !class.is_disjoint(&seen) {
            let overlap = class.intersection(&seen);
            out.push(violation(
                "disjoint",
                format!("{name} overlaps another class"),
                overlap.to_vec(),
            ));
        }
        seen.union_with(class);
    }
    if &seen != universe {
        let missing = universe.difference(&seen);
        out.push(violation("coverage", format!("classes{tag} do not cover V"), missing.to_vec()));
    }
    if p.i_classes.len() != omega {
        out.push(violation("shape", format!("expected {omega} I{tag} classes"), vec![]));
    }
    // I_k: independent, misses exactly v_k
    for (k, class) in p.i_classes.iter().enumerate() {
        if !g.is_independent_set(class) {
            out.push(violation(
                "independent",
                format!("I{tag}_{k} is not independent"),
                class.to_vec(),
            ));
        }
        for v in class.iter() {
            let missed: Vec<usize> = (0..omega).filter(|&m| !g.has_edge(v, p.a[m])).collect();
            if missed != [k] {
                out.push(violation(
                    "i-rule",
                    format!("vertex {v} in I{tag}_{k} misses positions {missed:?}"),
                    vec![v],
                ));
            }
        }
    }
    // C_{i,j}: least missed pair is exactly (i, j); observation (iv)
    // (adjacency to the earlier clique vertices) follows from it.
    for (&(i, j), class) in &p.c_classes {
        if i >= j || j >= omega {
            out.push(violation("shape", format!("bad C{tag} index ({i},{j})"), vec![]));
            continue;
        }
        for v in class.iter() {
            let missed: Vec<usize> = (0..omega).filter(|&m| !g.has_edge(v, p.a[m])).collect();
            if missed.len() < 2 || missed[0] != i || missed[1] != j {
                out.push(violation(
                    "c-rule",
                    format!("vertex {v} in C{tag}_{{{i},{j}}} misses positions {missed:?}"),
                    vec![v],
                ));
            }
        }
    }
    out
}
