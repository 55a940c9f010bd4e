//! Shared fixtures for the integration suites: hand-wired member graphs
//! that exercise each branch of the coloring construction, plus the
//! independent naive oracles the agreement criteria compare against.
#![allow(dead_code)]

use chibound::generators::{gnp, random_class_graph, structured_class_graph};
use chibound::graph::Graph;
use chibound::partition::max_clique_size;
use chibound::patterns::is_class_member;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn complete_block(edges: &mut Vec<(usize, usize)>, vs: &[usize]) {
    for (i, &u) in vs.iter().enumerate() {
        for &v in &vs[i + 1..] {
            edges.push((u, v));
        }
    }
}

fn join(edges: &mut Vec<(usize, usize)>, u: usize, vs: &[usize]) {
    for &v in vs {
        edges.push((u, v));
    }
}

/// Base layout shared by the tight-configuration fixtures, ω = 4:
/// `A = {0,1,2,3}` (maximum clique), `w = 4` in the `I` class of
/// position 0, `Y = {5,6,7}` (clique), `z1 = 8`, `z2 = 9`,
/// `H = {10,11,12,13}` (clique). The second level puts
/// `A' = {5,6,7,8}`, `I'_3 = {9}`, `X3 = H`.
fn tight_base() -> Vec<(usize, usize)> {
    let mut e = Vec::new();
    complete_block(&mut e, &[0, 1, 2, 3]);
    join(&mut e, 4, &[1, 2, 3]);
    complete_block(&mut e, &[5, 6, 7]);
    complete_block(&mut e, &[10, 11, 12, 13]);
    join(&mut e, 8, &[5, 6, 7]);
    join(&mut e, 9, &[5, 6, 7]);
    join(&mut e, 8, &[10, 11, 12]);
    e.push((9, 13));
    e
}

/// `V2 ⊆ N(U_p)` with `|U_p| = 2`: `w` is the `y1` vertex (complete to
/// `Y` and to `h_1..h_3`), `v_0` covers `z1`, `z2` and `h_4`.
pub fn up2_instance() -> Graph {
    let mut e = tight_base();
    join(&mut e, 4, &[5, 6, 7]);
    join(&mut e, 4, &[10, 11, 12]);
    join(&mut e, 0, &[8, 9, 13]);
    Graph::from_edge_list(14, &e).unwrap()
}

/// `V2 ⊆ N(U_p)` with `|U_p| = 3`: vertex 14 joins the `I` class of
/// position 0 as the `y2` vertex (neighbors `h_1..h_3` and `z2`), `w`
/// becomes `y1` with the single X3 neighbor `h_4`, `v_0` is `y3`.
pub fn up3_instance() -> Graph {
    let mut e = tight_base();
    join(&mut e, 4, &[5, 6, 7]);
    e.push((4, 13));
    join(&mut e, 0, &[8, 9, 13]);
    join(&mut e, 14, &[1, 2, 3]);
    join(&mut e, 14, &[10, 11, 12]);
    e.push((14, 9));
    Graph::from_edge_list(15, &e).unwrap()
}

/// `X3 ⊆ N(U_p)` but vertices of `X2 \ U'_t` escape `N(U_p)`: compared
/// to up2, `w` keeps only `Y3` among the `Y` vertices (dropping exactly
/// one would leave `w` with two neighbors in the `Y ∪ z1` clique, which
/// the class forbids).
pub fn case3211_instance() -> Graph {
    let mut e = tight_base();
    e.push((4, 7));
    join(&mut e, 4, &[10, 11, 12]);
    join(&mut e, 0, &[8, 9, 13]);
    Graph::from_edge_list(14, &e).unwrap()
}

/// `X2 \ U'_t ⊆ N(U_p)` with `z1` escaping: the up2 fixture without the
/// `v_0`–`z1` edge.
pub fn case3212_instance() -> Graph {
    let mut e = tight_base();
    join(&mut e, 4, &[5, 6, 7]);
    join(&mut e, 4, &[10, 11, 12]);
    join(&mut e, 0, &[9, 13]);
    Graph::from_edge_list(14, &e).unwrap()
}

/// `X3 ⊄ N(U_p)`: `h_4` hangs off `v_1` instead of `v_0`, so it escapes
/// `U_0` while keeping an X1 neighbor.
pub fn subcase_a_instance() -> Graph {
    let mut e = tight_base();
    join(&mut e, 4, &[5, 6, 7]);
    join(&mut e, 4, &[10, 11, 12]);
    join(&mut e, 0, &[8, 9]);
    e.push((1, 13));
    Graph::from_edge_list(14, &e).unwrap()
}

/// `[X3, X2] = ∅`: one `z` vertex (no `I'` class either) and a clique
/// `H = {9..12}` that touches `X1` but not `X2`.
pub fn eo1_instance() -> Graph {
    let mut e = Vec::new();
    complete_block(&mut e, &[0, 1, 2, 3]);
    join(&mut e, 4, &[1, 2, 3]);
    complete_block(&mut e, &[5, 6, 7]);
    complete_block(&mut e, &[9, 10, 11, 12]);
    join(&mut e, 8, &[5, 6, 7]);
    join(&mut e, 4, &[5, 6, 7]);
    join(&mut e, 4, &[9, 10, 11]);
    e.push((0, 8));
    e.push((0, 12));
    Graph::from_edge_list(13, &e).unwrap()
}

/// A vertex of X3 without X1 neighbors: the up2 fixture without the
/// `v_0`–`h_4` edge.
pub fn eo2_instance() -> Graph {
    let mut e = tight_base();
    join(&mut e, 4, &[5, 6, 7]);
    join(&mut e, 4, &[10, 11, 12]);
    join(&mut e, 0, &[8, 9]);
    Graph::from_edge_list(14, &e).unwrap()
}

/// All `I'` classes empty: no `z2`, `H = {9,10,11,12}`, and the last
/// clique vertex attaches to `Y3` so every X3 vertex keeps an X2
/// neighbor.
pub fn eo3_instance() -> Graph {
    let mut e = Vec::new();
    complete_block(&mut e, &[0, 1, 2, 3]);
    join(&mut e, 4, &[1, 2, 3]);
    complete_block(&mut e, &[5, 6, 7]);
    complete_block(&mut e, &[9, 10, 11, 12]);
    join(&mut e, 8, &[5, 6, 7]);
    join(&mut e, 8, &[9, 10, 11]);
    e.push((7, 12));
    join(&mut e, 4, &[5, 6, 7]);
    join(&mut e, 4, &[9, 10, 11]);
    e.push((0, 8));
    e.push((0, 12));
    Graph::from_edge_list(13, &e).unwrap()
}

/// Several non-empty `I'` classes: a `K4` plus a detached complete
/// multipartite `K(2,2,2,2)` on `{4..11}`.
pub fn case2_instance() -> Graph {
    let mut e = Vec::new();
    complete_block(&mut e, &[0, 1, 2, 3]);
    for u in 4..12 {
        for v in u + 1..12 {
            if (u - 4) / 2 != (v - 4) / 2 {
                e.push((u, v));
            }
        }
    }
    Graph::from_edge_list(12, &e).unwrap()
}

/// Non-empty `V2` with `ω(⟨V2⟩) < ω`: a `K4` plus one vertex adjacent to
/// `v_2` only.
pub fn case1_instance() -> Graph {
    let mut e = Vec::new();
    complete_block(&mut e, &[0, 1, 2, 3]);
    e.push((4, 2));
    Graph::from_edge_list(5, &e).unwrap()
}

// ---------------------------------------------------------------------------
// independent naive oracles
// ---------------------------------------------------------------------------

/// Isomorphism by brute-force permutation, written independently of the
/// library's matcher: no degree or subset pruning, just textbook
/// backtracking that checks each extension against the mapped prefix.
pub fn naive_is_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() {
        return false;
    }
    let n = a.n();
    let mut perm: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(a: &Graph, b: &Graph, perm: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let next = perm.len();
        if next == a.n() {
            return true;
        }
        for cand in 0..a.n() {
            if used[cand] {
                continue;
            }
            if (0..next).all(|prev| a.has_edge(next, prev) == b.has_edge(cand, perm[prev])) {
                used[cand] = true;
                perm.push(cand);
                if rec(a, b, perm, used) {
                    return true;
                }
                perm.pop();
                used[cand] = false;
            }
        }
        false
    }
    rec(a, b, &mut perm, &mut used)
}

/// All-subsets induced-pattern search. Returns the lexicographically
/// least witness set, like the library, but by exhaustive enumeration.
pub fn naive_find_induced(g: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    let k = pattern.n();
    if g.n() < k {
        return None;
    }
    let mut subset: Vec<usize> = Vec::with_capacity(k);
    fn rec(
        g: &Graph,
        pattern: &Graph,
        from: usize,
        subset: &mut Vec<usize>,
    ) -> Option<Vec<usize>> {
        if subset.len() == pattern.n() {
            let set = subset.iter().copied().collect();
            let (sub, _) = g.induced_subgraph(&set).unwrap();
            if naive_is_isomorphic(&sub, pattern) {
                return Some(subset.clone());
            }
            return None;
        }
        for v in from..g.n() {
            subset.push(v);
            if let Some(found) = rec(g, pattern, v + 1, subset) {
                return Some(found);
            }
            subset.pop();
        }
        None
    }
    rec(g, pattern, 0, &mut subset)
}

/// Chromatic number by plain backtracking in vertex id order; no clique
/// seeding, no saturation ordering. For cross-checking the main oracle
/// on small graphs.
pub fn naive_chromatic_number(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    fn feasible(g: &Graph, k: usize, colors: &mut Vec<usize>, v: usize) -> bool {
        if v == g.n() {
            return true;
        }
        let max_used = colors[..v].iter().copied().max().unwrap_or(0);
        for c in 1..=k.min(max_used + 1) {
            if (0..v).all(|u| colors[u] != c || !g.has_edge(u, v)) {
                colors[v] = c;
                if feasible(g, k, colors, v + 1) {
                    return true;
                }
                colors[v] = 0;
            }
        }
        false
    }
    for k in 1..=g.n() {
        let mut colors = vec![0; g.n()];
        if feasible(g, k, &mut colors, 0) {
            return k;
        }
    }
    unreachable!("n colors always suffice")
}

// ---------------------------------------------------------------------------
// corpora
// ---------------------------------------------------------------------------

/// Deterministic stream of `G(n, p)` draws for oracle-agreement and
/// axiom corpora, cycling over the given sizes and densities.
pub fn random_graph_corpus(count: usize, sizes: &[usize], densities: &[f64], seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| gnp(sizes[i % sizes.len()], densities[i % densities.len()], &mut rng))
        .collect()
}

/// Collects class members with a prescribed clique number. Draws from
/// the rejection sampler over a deterministic seed sequence, then tops
/// up from the structured sampler for the larger clique numbers.
pub fn members_with_omega(
    target: usize,
    count: usize,
    sizes: &[usize],
    density: f64,
    seed_base: u64,
) -> Vec<Graph> {
    let mut out = Vec::new();
    let mut seed = seed_base;
    let mut misses = 0usize;
    // rejection yield collapses for large clique numbers; the structured
    // sampler tops up whatever the budget below does not cover
    while out.len() < count && misses < 2_000 {
        let n = sizes[(seed as usize) % sizes.len()];
        seed += 1;
        if let Some(g) = random_class_graph(n, density, seed, 40) {
            if max_clique_size(&g) == target {
                out.push(g);
                continue;
            }
        }
        misses += 1;
    }
    let mut sseed = seed_base.wrapping_mul(31).wrapping_add(7);
    while out.len() < count {
        sseed += 1;
        let extra = 2 + (sseed as usize) % 7;
        if let Some(g) = structured_class_graph(target, extra, sseed, 200) {
            debug_assert!(is_class_member(&g).in_class);
            out.push(g);
        }
    }
    out
}
