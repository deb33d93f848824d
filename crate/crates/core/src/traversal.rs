use std::collections::{BTreeSet, VecDeque};

use crate::graph::{Graph, Vertex};

/// Result of min-degree peeling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Degeneracy {
    pub order: Vec<Vertex>,
    pub d: usize,
}

/// Repeatedly removes a minimum-degree vertex (lowest id on ties). `d` is
/// the largest degree seen at removal time, which is the degeneracy.
pub fn degeneracy_ordering(g: &Graph) -> Degeneracy {
    let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut queue: BTreeSet<(usize, Vertex)> = g.vertices().map(|v| (deg[v - 1], v)).collect();
    let mut removed = vec![false; g.n()];
    let mut order = Vec::with_capacity(g.n());
    let mut d = 0;
    while let Some((dv, v)) = queue.pop_first() {
        d = d.max(dv);
        removed[v - 1] = true;
        order.push(v);
        for &u in g.neighbors(v) {
            if !removed[u - 1] {
                queue.remove(&(deg[u - 1], u));
                deg[u - 1] -= 1;
                queue.insert((deg[u - 1], u));
            }
        }
    }
    Degeneracy { order, d }
}

/// BFS depth of every vertex (index `v - 1`), each component rooted at its
/// lowest-id vertex.
pub fn bfs_layers(g: &Graph) -> Vec<usize> {
    let mut layer = vec![usize::MAX; g.n()];
    let mut queue = VecDeque::new();
    for root in g.vertices() {
        if layer[root - 1] != usize::MAX {
            continue;
        }
        layer[root - 1] = 0;
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            for &u in g.neighbors(v) {
                if layer[u - 1] == usize::MAX {
                    layer[u - 1] = layer[v - 1] + 1;
                    queue.push_back(u);
                }
            }
        }
    }
    layer
}

/// Connected components as sorted vertex lists, ordered by lowest member.
pub fn components(g: &Graph) -> Vec<Vec<Vertex>> {
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for root in g.vertices() {
        if seen[root - 1] {
            continue;
        }
        seen[root - 1] = true;
        let mut comp = vec![root];
        let mut i = 0;
        while i < comp.len() {
            let v = comp[i];
            i += 1;
            for &u in g.neighbors(v) {
                if !seen[u - 1] {
                    seen[u - 1] = true;
                    comp.push(u);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn complete(n: usize) -> Graph {
        let edges = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v)));
        Graph::from_edges(n, edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (1..=n).map(|i| (i, i % n + 1))).unwrap()
    }

    #[test]
    fn degeneracy_examples() {
        let tree = Graph::from_edges(5, [(1, 2), (1, 3), (3, 4), (3, 5)]).unwrap();
        assert_eq!(degeneracy_ordering(&tree).d, 1);
        assert_eq!(degeneracy_ordering(&cycle(4)).d, 2);
        assert_eq!(degeneracy_ordering(&complete(4)).d, 3);
        assert_eq!(degeneracy_ordering(&Graph::empty(3)).d, 0);
    }

    #[test]
    fn bfs_layer_examples() {
        let p3 = Graph::from_edges(3, [(1, 2), (2, 3)]).unwrap();
        assert_eq!(bfs_layers(&p3), vec![0, 1, 2]);
        assert_eq!(bfs_layers(&Graph::empty(2)), vec![0, 0]);
        assert_eq!(bfs_layers(&cycle(4)), vec![0, 1, 2, 1]);
    }

    // max over induced subgraphs of the minimum degree
    fn exhaustive_degeneracy(g: &Graph) -> usize {
        let masks = g.adjacency_masks().unwrap();
        (1u64..(1 << g.n()))
            .map(|sub| {
                (0..g.n())
                    .filter(|&i| sub >> i & 1 == 1)
                    .map(|i| (masks[i] & sub).count_ones() as usize)
                    .min()
                    .unwrap()
            })
            .max()
            .unwrap_or(0)
    }

    proptest! {
        #[test]
        fn degeneracy_matches_exhaustive(n in 1usize..=8, bits in any::<u64>()) {
            let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))).collect();
            let edges = pairs.iter().enumerate().filter(|(i, _)| bits >> (i % 64) & 1 == 1).map(|(_, &e)| e);
            let g = Graph::from_edges(n, edges).unwrap();
            let deg = degeneracy_ordering(&g);
            prop_assert_eq!(deg.d, exhaustive_degeneracy(&g));
            let mut order = deg.order.clone();
            order.sort_unstable();
            prop_assert_eq!(order, (1..=n).collect::<Vec<_>>());
        }
    }
}
