use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// Graphs up to this size get an exact decomposition by subset DP.
pub const EXACT_TD_MAX_VERTICES: usize = 10;

/// Bags plus tree edges between bag indices (0-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    pub bags: Vec<VertexSet>,
    pub tree_edges: Vec<(usize, usize)>,
}

/// The decomposition condition that failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TdViolation {
    UnknownVertex(Vertex),
    NotATree,
    VertexNotCovered(Vertex),
    EdgeNotCovered(Vertex, Vertex),
    SubtreeDisconnected(Vertex),
}

impl fmt::Display for TdViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TdViolation::UnknownVertex(v) => write!(f, "bag vertex {v} not in graph"),
            TdViolation::NotATree => f.write_str("tree edges do not form a tree"),
            TdViolation::VertexNotCovered(v) => write!(f, "vertex not covered: {v}"),
            TdViolation::EdgeNotCovered(u, v) => write!(f, "edge not covered: {u}-{v}"),
            TdViolation::SubtreeDisconnected(v) => {
                write!(f, "bags containing vertex {v} are not connected")
            }
        }
    }
}

impl TreeDecomposition {
    pub fn width(&self) -> usize {
        self.bags.iter().map(VertexSet::len).max().unwrap_or(1).saturating_sub(1)
    }

    pub fn bag_count(&self) -> usize {
        self.bags.len()
    }

    pub(crate) fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.bags.len()];
        for &(a, b) in &self.tree_edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Checks the tree shape, vertex cover, edge cover and per-vertex
    /// connectivity conditions, in that order.
    pub fn validate(&self, g: &Graph) -> std::result::Result<(), TdViolation> {
        let b = self.bags.len();
        for bag in &self.bags {
            if let Some(v) = bag.iter().find(|&v| v == 0 || v > g.n()) {
                return Err(TdViolation::UnknownVertex(v));
            }
        }
        if b == 0 {
            return match g.vertices().next() {
                Some(v) => Err(TdViolation::VertexNotCovered(v)),
                None => Ok(()),
            };
        }
        if self.tree_edges.len() != b - 1
            || self.tree_edges.iter().any(|&(x, y)| x >= b || y >= b || x == y)
        {
            return Err(TdViolation::NotATree);
        }
        let adj = self.adjacency();
        if reachable_bags(&adj, 0, |_| true).len() != b {
            return Err(TdViolation::NotATree);
        }

        let mut holders: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
        for (i, bag) in self.bags.iter().enumerate() {
            for v in bag.iter() {
                holders[v - 1].push(i);
            }
        }
        if let Some(v) = g.vertices().find(|&v| holders[v - 1].is_empty()) {
            return Err(TdViolation::VertexNotCovered(v));
        }
        for (u, v) in g.edges() {
            if !holders[u - 1].iter().any(|&i| self.bags[i].contains(v)) {
                return Err(TdViolation::EdgeNotCovered(u, v));
            }
        }
        for v in g.vertices() {
            let start = holders[v - 1][0];
            let reached = reachable_bags(&adj, start, |i| self.bags[i].contains(v));
            if reached.len() != holders[v - 1].len() {
                return Err(TdViolation::SubtreeDisconnected(v));
            }
        }
        Ok(())
    }

    /// Decomposition of `G[keep]`: bags intersected with `keep`, empty bags
    /// contracted into their nearest non-empty ancestor. Width never grows.
    pub fn restrict(&self, keep: &VertexSet) -> TreeDecomposition {
        let bags: Vec<VertexSet> = self.bags.iter().map(|b| b.intersection(keep)).collect();
        let Some(root) = bags.iter().position(|b| !b.is_empty()) else {
            return TreeDecomposition {
                bags: Vec::new(),
                tree_edges: Vec::new(),
            };
        };
        let adj = self.adjacency();
        let (order, parent) = bfs_tree(&adj, root);
        let mut new_index = vec![usize::MAX; bags.len()];
        // nearest non-empty ancestor (or self) for every bag, in BFS order
        let mut anchor = vec![usize::MAX; bags.len()];
        let mut out = TreeDecomposition {
            bags: Vec::new(),
            tree_edges: Vec::new(),
        };
        for &i in &order {
            if bags[i].is_empty() {
                anchor[i] = anchor[parent[i]];
                continue;
            }
            new_index[i] = out.bags.len();
            out.bags.push(bags[i].clone());
            anchor[i] = i;
            if i != root {
                let up = anchor[parent[i]];
                out.tree_edges.push((new_index[up], new_index[i]));
            }
        }
        out.simplify()
    }

    /// Contracts every tree edge whose one bag is contained in the other.
    pub fn simplify(&self) -> TreeDecomposition {
        let b = self.bags.len();
        let mut alive = vec![true; b];
        let mut nbrs: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); b];
        for &(x, y) in &self.tree_edges {
            nbrs[x].insert(y);
            nbrs[y].insert(x);
        }
        let mut changed = true;
        while changed {
            changed = false;
            for a in 0..b {
                if !alive[a] {
                    continue;
                }
                let into = nbrs[a]
                    .iter()
                    .copied()
                    .find(|&c| self.bags[a].is_subset(&self.bags[c]));
                if let Some(c) = into {
                    let moved: Vec<usize> = nbrs[a].iter().copied().filter(|&x| x != c).collect();
                    for x in moved {
                        nbrs[x].remove(&a);
                        nbrs[x].insert(c);
                        nbrs[c].insert(x);
                    }
                    nbrs[c].remove(&a);
                    nbrs[a].clear();
                    alive[a] = false;
                    changed = true;
                }
            }
        }
        let mut index = vec![usize::MAX; b];
        let mut bags = Vec::new();
        for i in (0..b).filter(|&i| alive[i]) {
            index[i] = bags.len();
            bags.push(self.bags[i].clone());
        }
        let mut tree_edges = Vec::new();
        for i in (0..b).filter(|&i| alive[i]) {
            for &j in nbrs[i].iter().filter(|&&j| j > i) {
                tree_edges.push((index[i], index[j]));
            }
        }
        TreeDecomposition { bags, tree_edges }
    }

    /// Builds the decomposition induced by eliminating vertices in `order`.
    pub fn from_elimination_order(g: &Graph, order: &[Vertex]) -> TreeDecomposition {
        let n = g.n();
        let mut position = vec![0usize; n];
        for (i, &v) in order.iter().enumerate() {
            position[v - 1] = i;
        }
        let mut adj: Vec<BTreeSet<Vertex>> = g
            .vertices()
            .map(|v| g.neighbors(v).iter().copied().collect())
            .collect();
        let mut bags = Vec::with_capacity(n);
        let mut parent_vertex = Vec::with_capacity(n);
        for &v in order {
            let nbrs: Vec<Vertex> = adj[v - 1].iter().copied().collect();
            for (i, &a) in nbrs.iter().enumerate() {
                adj[a - 1].remove(&v);
                for &c in &nbrs[i + 1..] {
                    adj[a - 1].insert(c);
                    adj[c - 1].insert(a);
                }
            }
            let mut bag: VertexSet = nbrs.iter().copied().collect();
            bag.insert(v);
            bags.push(bag);
            parent_vertex.push(nbrs.iter().copied().min_by_key(|&u| position[u - 1]));
        }
        let mut tree_edges = Vec::new();
        let mut roots = Vec::new();
        for (i, p) in parent_vertex.iter().enumerate() {
            match p {
                Some(u) => tree_edges.push((i, position[u - 1])),
                None => roots.push(i),
            }
        }
        for w in roots.windows(2) {
            tree_edges.push((w[0], w[1]));
        }
        TreeDecomposition { bags, tree_edges }.simplify()
    }

    /// Min-fill elimination heuristic, lowest id on ties.
    pub fn min_fill(g: &Graph) -> TreeDecomposition {
        let mut adj: Vec<BTreeSet<Vertex>> = g
            .vertices()
            .map(|v| g.neighbors(v).iter().copied().collect())
            .collect();
        let mut alive: BTreeSet<Vertex> = g.vertices().collect();
        let mut order = Vec::with_capacity(g.n());
        while !alive.is_empty() {
            let mut best: Option<(usize, Vertex)> = None;
            for &v in &alive {
                let fill = fill_in(&adj, v, best.map(|b| b.0));
                if let Some(f) = fill {
                    if best.is_none_or(|(bf, _)| f < bf) {
                        best = Some((f, v));
                        if f == 0 {
                            break;
                        }
                    }
                }
            }
            let (_, v) = best.expect("alive vertices remain");
            let nbrs: Vec<Vertex> = adj[v - 1].iter().copied().collect();
            for (i, &a) in nbrs.iter().enumerate() {
                adj[a - 1].remove(&v);
                for &c in &nbrs[i + 1..] {
                    adj[a - 1].insert(c);
                    adj[c - 1].insert(a);
                }
            }
            adj[v - 1].clear();
            alive.remove(&v);
            order.push(v);
        }
        TreeDecomposition::from_elimination_order(g, &order)
    }

    /// Optimal-width decomposition via the subset DP over elimination prefixes.
    pub fn exact(g: &Graph) -> Result<TreeDecomposition> {
        let n = g.n();
        if n > EXACT_TD_MAX_VERTICES {
            return Err(Error::Capacity {
                what: "vertices for exact tree decomposition",
                found: n,
                limit: EXACT_TD_MAX_VERTICES,
            });
        }
        let adj = g.adjacency_masks().expect("small graph");
        let full = (1usize << n) - 1;
        let mut tw = vec![usize::MAX; full + 1];
        let mut choice = vec![0usize; full + 1];
        tw[0] = 0;
        for s in 1..=full {
            for v in (0..n).filter(|&v| s >> v & 1 == 1) {
                let rest = s & !(1 << v);
                let q = trapped_neighbourhood(&adj, rest as u64, v);
                let cand = tw[rest].max(q);
                if cand < tw[s] {
                    tw[s] = cand;
                    choice[s] = v;
                }
            }
        }
        let mut order = Vec::with_capacity(n);
        let mut s = full;
        while s != 0 {
            let v = choice[s];
            order.push(v + 1);
            s &= !(1 << v);
        }
        order.reverse();
        Ok(TreeDecomposition::from_elimination_order(g, &order))
    }
}

/// Validates `given` against `g`, or computes a decomposition: exact for
/// small graphs, min-fill otherwise.
pub fn obtain_td(g: &Graph, given: Option<TreeDecomposition>) -> Result<TreeDecomposition> {
    match given {
        Some(td) => {
            td.validate(g).map_err(Error::InvalidDecomposition)?;
            Ok(td)
        }
        None if g.n() <= EXACT_TD_MAX_VERTICES => TreeDecomposition::exact(g),
        None => Ok(TreeDecomposition::min_fill(g)),
    }
}

// fill-in count of eliminating v; None once it exceeds `cap`
fn fill_in(adj: &[BTreeSet<Vertex>], v: Vertex, cap: Option<usize>) -> Option<usize> {
    let nbrs: Vec<Vertex> = adj[v - 1].iter().copied().collect();
    let mut fill = 0;
    for (i, &a) in nbrs.iter().enumerate() {
        for &c in &nbrs[i + 1..] {
            if !adj[a - 1].contains(&c) {
                fill += 1;
                if cap.is_some_and(|c| fill >= c) {
                    return None;
                }
            }
        }
    }
    Some(fill)
}

// vertices outside `rest ∪ {v}` reachable from v through `rest`
fn trapped_neighbourhood(adj: &[u64], rest: u64, v: usize) -> usize {
    let mut reached = 1u64 << v;
    let mut frontier = reached;
    while frontier != 0 {
        let mut next = 0u64;
        let mut f = frontier;
        while f != 0 {
            let i = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[i] & rest;
        }
        frontier = next & !reached;
        reached |= next;
    }
    let mut boundary = 0u64;
    let mut r = reached;
    while r != 0 {
        let i = r.trailing_zeros() as usize;
        r &= r - 1;
        boundary |= adj[i];
    }
    (boundary & !reached & !rest).count_ones() as usize
}

fn reachable_bags(adj: &[Vec<usize>], start: usize, allowed: impl Fn(usize) -> bool) -> Vec<usize> {
    let mut seen = vec![false; adj.len()];
    let mut out = vec![start];
    seen[start] = true;
    let mut i = 0;
    while i < out.len() {
        let x = out[i];
        i += 1;
        for &y in &adj[x] {
            if !seen[y] && allowed(y) {
                seen[y] = true;
                out.push(y);
            }
        }
    }
    out
}

/// BFS order and parent array (root is its own parent).
pub(crate) fn bfs_tree(adj: &[Vec<usize>], root: usize) -> (Vec<usize>, Vec<usize>) {
    let mut parent = vec![usize::MAX; adj.len()];
    parent[root] = root;
    let mut order = Vec::with_capacity(adj.len());
    let mut queue = VecDeque::from([root]);
    while let Some(x) = queue.pop_front() {
        order.push(x);
        for &y in &adj[x] {
            if parent[y] == usize::MAX {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    (order, parent)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i, i + 1))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let edges = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v)));
        Graph::from_edges(n, edges).unwrap()
    }

    fn td(bags: &[&[usize]], edges: &[(usize, usize)]) -> TreeDecomposition {
        TreeDecomposition {
            bags: bags.iter().map(|b| VertexSet::from(*b)).collect(),
            tree_edges: edges.to_vec(),
        }
    }

    #[test]
    fn given_path_decomposition_validates() {
        let d = td(&[&[1, 2], &[2, 3], &[3, 4]], &[(0, 1), (1, 2)]);
        let got = obtain_td(&path(4), Some(d)).unwrap();
        assert_eq!(got.width(), 1);
    }

    #[test]
    fn violations_are_named() {
        let g = path(4);
        let missing_edge = td(&[&[1, 2], &[3, 4]], &[(0, 1)]);
        let err = obtain_td(&g, Some(missing_edge)).unwrap_err();
        assert_eq!(err, Error::InvalidDecomposition(TdViolation::EdgeNotCovered(2, 3)));
        assert!(err.to_string().contains("edge not covered"));

        let uncovered = td(&[&[1, 2], &[2, 3]], &[(0, 1)]);
        assert_eq!(uncovered.validate(&g), Err(TdViolation::VertexNotCovered(4)));

        let split = td(&[&[1, 2], &[2, 3], &[3, 4], &[1]], &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(split.validate(&g), Err(TdViolation::SubtreeDisconnected(1)));

        let forest = td(&[&[1, 2], &[2, 3], &[3, 4]], &[(0, 1)]);
        assert_eq!(forest.validate(&g), Err(TdViolation::NotATree));
    }

    #[test]
    fn complete_graph_gets_single_bag() {
        let k4 = complete(4);
        for d in [TreeDecomposition::min_fill(&k4), TreeDecomposition::exact(&k4).unwrap()] {
            assert_eq!(d.width(), 3);
            assert_eq!(d.bag_count(), 1);
            d.validate(&k4).unwrap();
        }
    }

    #[test]
    fn heuristics_on_trees_and_cycles() {
        let tree = Graph::from_edges(7, [(1, 2), (1, 3), (2, 4), (2, 5), (3, 6), (3, 7)]).unwrap();
        let d = TreeDecomposition::min_fill(&tree);
        d.validate(&tree).unwrap();
        assert_eq!(d.width(), 1);
        let c6 = Graph::from_edges(6, (1..=6).map(|i| (i, i % 6 + 1))).unwrap();
        let e = TreeDecomposition::exact(&c6).unwrap();
        e.validate(&c6).unwrap();
        assert_eq!(e.width(), 2);
        let disconnected = Graph::from_edges(5, [(1, 2), (4, 5)]).unwrap();
        for d in [TreeDecomposition::min_fill(&disconnected), TreeDecomposition::exact(&disconnected).unwrap()] {
            d.validate(&disconnected).unwrap();
            assert_eq!(d.width(), 1);
        }
    }

    #[test]
    fn exact_width_on_grid() {
        // 3x3 grid has treewidth 3
        let id = |r: usize, c: usize| r * 3 + c + 1;
        let mut edges = Vec::new();
        for r in 0..3 {
            for c in 0..3 {
                if c + 1 < 3 {
                    edges.push((id(r, c), id(r, c + 1)));
                }
                if r + 1 < 3 {
                    edges.push((id(r, c), id(r + 1, c)));
                }
            }
        }
        let g = Graph::from_edges(9, edges).unwrap();
        let d = TreeDecomposition::exact(&g).unwrap();
        d.validate(&g).unwrap();
        assert_eq!(d.width(), 3);
    }

    #[test]
    fn restriction_stays_valid() {
        let g = path(6);
        let d = td(
            &[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[5, 6]],
            &[(0, 1), (1, 2), (2, 3), (3, 4)],
        );
        let keep: VertexSet = [1, 2, 5, 6].into();
        let r = d.restrict(&keep);
        let (sub, map) = g.induced(&keep);
        assert!(r.width() <= d.width());
        // map bags to the relabelled subgraph and validate there
        let relabel = TreeDecomposition {
            bags: r
                .bags
                .iter()
                .map(|b| b.iter().map(|v| map.iter().position(|&o| o == v).unwrap() + 1).collect())
                .collect(),
            tree_edges: r.tree_edges.clone(),
        };
        relabel.validate(&sub).unwrap();
        assert!(d.restrict(&VertexSet::new()).bags.is_empty());
    }
}
