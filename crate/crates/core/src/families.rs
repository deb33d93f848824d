//! Seeded graph families for tests and benchmarks.

use std::collections::HashSet;

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, Instance, Vertex, VertexSet};

/// Largest order accepted by the isomorphism-class enumeration.
pub const SMALL_GRAPH_MAX: usize = 6;

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i, i + 1))).expect("valid path")
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs 3 vertices");
    Graph::from_edges(n, (1..=n).map(|i| (i, i % n + 1))).expect("valid cycle")
}

/// `rows × cols` grid, vertex `(r, c)` numbered `r·cols + c + 1`.
pub fn grid(rows: usize, cols: usize) -> Graph {
    let id = |r: usize, c: usize| r * cols + c + 1;
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < rows {
                edges.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    Graph::from_edges(rows * cols, edges).expect("valid grid")
}

/// Random recursive tree: vertex `v > 1` hangs off a uniform earlier vertex.
pub fn random_tree(n: usize, rng: &mut impl Rng) -> Graph {
    let edges: Vec<(Vertex, Vertex)> = (2..=n).map(|v| (rng.gen_range(1..v), v)).collect();
    Graph::from_edges(n, edges).expect("valid tree")
}

/// Series-parallel graph grown from one edge: each new vertex either
/// subdivides a random edge or forms a parallel path beside it.
pub fn random_series_parallel(n: usize, rng: &mut impl Rng) -> Graph {
    if n < 2 {
        return Graph::empty(n);
    }
    let mut edges = vec![(1, 2)];
    for w in 3..=n {
        let i = rng.gen_range(0..edges.len());
        let (u, v) = edges[i];
        if rng.gen_bool(0.5) {
            edges.swap_remove(i);
        }
        edges.push((u, w));
        edges.push((w, v));
    }
    Graph::from_edges(n, edges).expect("valid series-parallel graph")
}

pub fn gnp(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("valid gnp")
}

/// Greedy maximal independent set over a random order, cut to `size`.
pub fn random_independent_set(g: &Graph, size: usize, rng: &mut impl Rng) -> VertexSet {
    let mut order: Vec<Vertex> = g.vertices().collect();
    order.shuffle(rng);
    let mut set = VertexSet::new();
    for v in order {
        if set.len() == size {
            break;
        }
        if g.neighbors(v).iter().all(|&w| !set.contains(w)) {
            set.insert(v);
        }
    }
    set
}

/// Instance with two greedy random independent sets of at most `size`.
pub fn random_instance(g: Graph, size: usize, rng: &mut impl Rng) -> Instance {
    let ini = random_independent_set(&g, size, rng);
    let tar = random_independent_set(&g, size, rng);
    Instance::new(g, ini, tar).expect("greedy sets are independent")
}

fn pair_index(n: usize) -> Vec<(usize, usize)> {
    (0..n).array_combinations().map(|[a, b]| (a, b)).collect()
}

fn permuted_mask(pairs: &[(usize, usize)], perm: &[usize], mask: u32) -> u32 {
    let mut out = 0;
    for (bit, &(a, b)) in pairs.iter().enumerate() {
        if mask >> bit & 1 == 1 {
            let (x, y) = (perm[a].min(perm[b]), perm[a].max(perm[b]));
            out |= 1 << pairs.iter().position(|&p| p == (x, y)).expect("pair present");
        }
    }
    out
}

/// One representative per isomorphism class of graphs on `n` vertices, in
/// order of the smallest edge mask of the class.
pub fn nonisomorphic_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > SMALL_GRAPH_MAX {
        return Err(Error::Capacity {
            what: "order for isomorphism-class enumeration",
            found: n,
            limit: SMALL_GRAPH_MAX,
        });
    }
    let pairs = pair_index(n);
    let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    let mut seen = vec![false; 1 << pairs.len()];
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        if seen[mask as usize] {
            continue;
        }
        for p in &perms {
            seen[permuted_mask(&pairs, p, mask) as usize] = true;
        }
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|&(bit, _)| mask >> bit & 1 == 1)
            .map(|(_, &(a, b))| (a + 1, b + 1));
        out.push(Graph::from_edges(n, edges)?);
    }
    Ok(out)
}

/// Vertex permutations preserving the edge set, as `perm[v - 1]`.
pub fn automorphisms(g: &Graph) -> Vec<Vec<Vertex>> {
    (1..=g.n())
        .permutations(g.n())
        .filter(|p| g.edges().all(|(u, v)| g.has_edge(p[u - 1], p[v - 1])))
        .collect()
}

/// Every independent set, in increasing mask order. Needs `n ≤ 20`.
pub fn independent_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    if g.n() > 20 {
        return Err(Error::Capacity {
            what: "order for independent-set enumeration",
            found: g.n(),
            limit: 20,
        });
    }
    let adj = g.adjacency_masks().expect("n <= 20");
    Ok((0u64..1 << g.n())
        .filter(|&s| (0..g.n()).all(|i| s >> i & 1 == 0 || adj[i] & s == 0))
        .map(VertexSet::from_mask)
        .collect())
}

/// Ordered pairs of independent sets, one per orbit of the automorphism
/// group acting on both sets at once.
pub fn independent_pairs_up_to_symmetry(g: &Graph) -> Result<Vec<(VertexSet, VertexSet)>> {
    let sets = independent_sets(g)?;
    let autos = automorphisms(g);
    let image = |p: &[Vertex], s: &VertexSet| -> u64 { s.iter().map(|v| 1u64 << (p[v - 1] - 1)).sum() };
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for a in &sets {
        for b in &sets {
            let key = (a.to_mask(), b.to_mask());
            if seen.contains(&key) {
                continue;
            }
            for p in &autos {
                seen.insert((image(p, a), image(p, b)));
            }
            out.push((a.clone(), b.clone()));
        }
    }
    Ok(out)
}
