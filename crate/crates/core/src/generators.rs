//! Constructors for the tight witness families and seeded random
//! samplers of class members.
//!
//! Randomness comes exclusively through explicit `u64` seeds feeding
//! ChaCha8 (`rand_chacha::ChaCha8Rng`), a fixed, portable algorithm, so
//! corpora reproduce bit-for-bit across platforms and runs.

use crate::graph::Graph;
use crate::patterns::is_class_member;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeneratorError {
    #[error("the tight family needs omega >= 4, got {0}")]
    OmegaTooSmall(usize),
    #[error("chord length {length} invalid for a circulant on {n} vertices")]
    InvalidLength { n: usize, length: usize },
    #[error("part list must be non-empty with all parts >= 1")]
    EmptyPartList,
}

/// The tight example for clique number `omega >= 4`: an `omega`-clique
/// `h_1..h_omega`, an `(omega-1)`-clique `y_1..y_{omega-1}`, and two
/// vertices `z_1, z_2` joined to every `y`; `z_1` additionally sees
/// `h_1..h_{omega-1}` and `z_2` sees only `h_omega`. `z_1 z_2` is a
/// non-edge. The graph has `2*omega + 1` vertices, independence number 2
/// and chromatic number `omega + 1`.
///
/// Vertex layout: `h_r = r - 1`, `z_1 = omega`, `z_2 = omega + 1`,
/// `y_r = omega + 1 + r`.
pub fn g_star(omega: usize) -> Result<Graph, GeneratorError> {
    if omega < 4 {
        return Err(GeneratorError::OmegaTooSmall(omega));
    }
    let z1 = omega;
    let z2 = omega + 1;
    let y = |r: usize| omega + 1 + r; // r in 1..=omega-1
    let mut edges = Vec::new();
    for i in 0..omega {
        for j in i + 1..omega {
            edges.push((i, j));
        }
    }
    for r in 1..omega {
        for s in r + 1..omega {
            edges.push((y(r), y(s)));
        }
        edges.push((z1, y(r)));
        edges.push((z2, y(r)));
    }
    for s in 1..omega {
        edges.push((z1, s - 1));
    }
    edges.push((z2, omega - 1));
    Ok(Graph::from_edge_list(2 * omega + 1, &edges).expect("layout is in range"))
}

/// Circulant graph: `i ~ j` iff the circular distance between them is in
/// `lengths`. Each length must satisfy `1 <= l <= n/2`.
pub fn circulant(n: usize, lengths: &[usize]) -> Result<Graph, GeneratorError> {
    for &l in lengths {
        if l == 0 || 2 * l > n {
            return Err(GeneratorError::InvalidLength { n, length: l });
        }
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let d = (j - i).min(n - (j - i));
            if lengths.contains(&d) {
                edges.push((i, j));
            }
        }
    }
    Ok(Graph::from_edge_list(n, &edges).expect("ids in range"))
}

/// Complete multipartite graph with the given part sizes; parts occupy
/// consecutive id blocks and edges run exactly between distinct parts.
pub fn complete_multipartite(sizes: &[usize]) -> Result<Graph, GeneratorError> {
    if sizes.is_empty() || sizes.iter().any(|&s| s == 0) {
        return Err(GeneratorError::EmptyPartList);
    }
    let n: usize = sizes.iter().sum();
    let mut part = Vec::with_capacity(n);
    for (p, &s) in sizes.iter().enumerate() {
        part.extend(std::iter::repeat(p).take(s));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if part[u] != part[v] {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::from_edge_list(n, &edges).expect("ids in range"))
}

/// One draw from the Erdős–Rényi-style model `G(n, p)`: each pair is an
/// edge independently with probability `p`, consumed in the fixed order
/// `(0,1), (0,2), .., (n-2,n-1)`.
pub fn gnp(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).expect("ids in range")
}

/// Rejection-samples a class member from `G(n, p)`. Returns `None` when
/// `max_tries` consecutive draws all contain a forbidden pattern.
/// Identical `(n, p, seed, max_tries)` always return the same graph.
pub fn random_class_graph(n: usize, p: f64, seed: u64, max_tries: usize) -> Option<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..max_tries {
        let g = gnp(n, p, &mut rng);
        if is_class_member(&g).in_class {
            return Some(g);
        }
    }
    None
}

/// Heuristic sampler for members with a prescribed clique number: a
/// complete multipartite core on `omega` parts with randomized part
/// sizes, plus `extra` attachment vertices wired either to all but one
/// part (an `I`-style attachment) or to a random subset of parts, with
/// random edges among the extras. Draws failing membership or the
/// clique-number target are rejected.
///
/// This enriches the corpus with non-trivial `V2` structure; it is not a
/// uniform sampler over the class.
pub fn structured_class_graph(
    omega: usize,
    extra: usize,
    seed: u64,
    max_tries: usize,
) -> Option<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..max_tries {
        let sizes: Vec<usize> = (0..omega).map(|_| rng.gen_range(1..=2)).collect();
        let core: usize = sizes.iter().sum();
        let n = core + extra;
        let mut part = Vec::with_capacity(core);
        for (p, &s) in sizes.iter().enumerate() {
            part.extend(std::iter::repeat(p).take(s));
        }
        let mut edges = Vec::new();
        for u in 0..core {
            for v in u + 1..core {
                if part[u] != part[v] {
                    edges.push((u, v));
                }
            }
        }
        for x in core..n {
            if rng.gen_bool(0.5) {
                // adjacent to every part except one
                let skip = rng.gen_range(0..omega);
                for u in 0..core {
                    if part[u] != skip {
                        edges.push((x, u));
                    }
                }
            } else {
                for u in 0..core {
                    if rng.gen_bool(0.4) {
                        edges.push((x, u));
                    }
                }
            }
            for y in core..x {
                if rng.gen_bool(0.5) {
                    edges.push((x, y));
                }
            }
        }
        let g = Graph::from_edge_list(n, &edges).expect("ids in range");
        if is_class_member(&g).in_class && crate::partition::max_clique_size(&g) == omega {
            return Some(g);
        }
    }
    None
}
