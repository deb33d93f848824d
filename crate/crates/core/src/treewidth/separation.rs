use num_traits::Num;

use crate::graph::{Graph, Vertex, VertexSet};
use crate::treewidth::decomposition::{bfs_tree, TreeDecomposition};

/// `(A, B)` with `A ∪ B` the vertices covered by the decomposition and no
/// edge between `A \ B` and `B \ A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Separation {
    pub a: VertexSet,
    pub b: VertexSet,
}

impl Separation {
    pub fn separator(&self) -> VertexSet {
        self.a.intersection(&self.b)
    }

    pub fn a_only(&self) -> VertexSet {
        self.a.difference(&self.b)
    }

    pub fn b_only(&self) -> VertexSet {
        self.b.difference(&self.a)
    }
}

/// Unit weight on `set`, zero elsewhere, indexed by `v - 1`.
pub fn indicator_weights(n: usize, set: &VertexSet) -> Vec<u32> {
    let mut w = vec![0; n];
    set.iter().for_each(|v| w[v - 1] = 1);
    w
}

fn sum<W: Num + Copy>(weight: &[W], vs: impl Iterator<Item = Vertex>) -> W {
    vs.fold(W::zero(), |acc, v| acc + weight[v - 1])
}

// 3·part ≤ 2·total without division
fn within_two_thirds<W: Num + Copy + PartialOrd>(part: W, total: W) -> bool {
    let two = W::one() + W::one();
    part * (two + W::one()) <= total * two
}

/// 2/3-balanced separation whose separator is contained in one bag.
///
/// Walks from bag 0 towards any child subtree holding more than half the
/// weight, takes the stopping bag as separator, packs the remaining tree
/// components into two sides by descending weight (lighter side first),
/// then moves separator vertices with no neighbour across into the lighter
/// side while the bound allows. `weight` is indexed by `v - 1`.
pub fn balanced_separation<W>(g: &Graph, td: &TreeDecomposition, weight: &[W]) -> Separation
where
    W: Num + Copy + PartialOrd,
{
    let nb = td.bags.len();
    if nb == 0 {
        return Separation {
            a: VertexSet::new(),
            b: VertexSet::new(),
        };
    }
    let adj = td.adjacency();
    let (order, parent) = bfs_tree(&adj, 0);
    let mut depth = vec![0usize; nb];
    for &x in order.iter().skip(1) {
        depth[x] = depth[parent[x]] + 1;
    }
    // each vertex is charged to its bag closest to the root
    let mut top: Vec<Option<usize>> = vec![None; g.n() + 1];
    for (i, bag) in td.bags.iter().enumerate() {
        for v in bag.iter() {
            if top[v].is_none_or(|j| depth[i] < depth[j]) {
                top[v] = Some(i);
            }
        }
    }
    let mut sub = vec![W::zero(); nb];
    for (v, t) in top.iter().enumerate() {
        if let Some(i) = t {
            sub[*i] = sub[*i] + weight[v - 1];
        }
    }
    for &x in order.iter().rev() {
        if x != 0 {
            sub[parent[x]] = sub[parent[x]] + sub[x];
        }
    }
    let total = sub[0];
    let two = W::one() + W::one();

    let mut t = 0;
    loop {
        let heavy = adj[t]
            .iter()
            .copied()
            .find(|&c| parent[c] == t && c != t && sub[c] * two > total);
        match heavy {
            Some(c) => t = c,
            None => break,
        }
    }

    let sep = td.bags[t].clone();
    // label bags by component of T - t
    let mut comp = vec![usize::MAX; nb];
    let mut comps = 0;
    for &start in &adj[t] {
        if comp[start] != usize::MAX {
            continue;
        }
        let mut stack = vec![start];
        comp[start] = comps;
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if y != t && comp[y] == usize::MAX {
                    comp[y] = comps;
                    stack.push(y);
                }
            }
        }
        comps += 1;
    }
    let mut members: Vec<VertexSet> = vec![VertexSet::new(); comps];
    for (i, bag) in td.bags.iter().enumerate() {
        if i == t {
            continue;
        }
        for v in bag.iter().filter(|&v| !sep.contains(v)) {
            members[comp[i]].insert(v);
        }
    }
    let mut weighted: Vec<(W, usize)> = members
        .iter()
        .enumerate()
        .map(|(i, m)| (sum(weight, m.iter()), i))
        .collect();
    weighted.sort_by(|x, y| {
        y.0.partial_cmp(&x.0)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(x.1.cmp(&y.1))
    });
    let (mut a_only, mut b_only) = (VertexSet::new(), VertexSet::new());
    let (mut wa, mut wb) = (W::zero(), W::zero());
    for (w, i) in weighted {
        if wa <= wb {
            a_only = a_only.union(&members[i]);
            wa = wa + w;
        } else {
            b_only = b_only.union(&members[i]);
            wb = wb + w;
        }
    }

    let mut sep_left = sep.clone();
    for s in sep.iter() {
        let touches = |side: &VertexSet| g.neighbors(s).iter().any(|&u| side.contains(u));
        let ws = weight[s - 1];
        let into_a = !touches(&b_only) && within_two_thirds(wa + ws, total);
        let into_b = !touches(&a_only) && within_two_thirds(wb + ws, total);
        let choice = match (into_a, into_b) {
            (true, true) if wb < wa => Some(false),
            (true, _) => Some(true),
            (false, true) => Some(false),
            (false, false) => None,
        };
        match choice {
            Some(true) => {
                a_only.insert(s);
                wa = wa + ws;
            }
            Some(false) => {
                b_only.insert(s);
                wb = wb + ws;
            }
            None => continue,
        }
        sep_left.remove(s);
    }
    Separation {
        a: a_only.union(&sep_left),
        b: b_only.union(&sep_left),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn check<W: Num + Copy + PartialOrd>(g: &Graph, td: &TreeDecomposition, w: &[W], s: &Separation) {
        let covered: VertexSet = td.bags.iter().flat_map(|b| b.iter()).collect();
        assert_eq!(s.a.union(&s.b), covered);
        let (ao, bo) = (s.a_only(), s.b_only());
        for u in ao.iter() {
            assert!(g.neighbors(u).iter().all(|&v| !bo.contains(v)), "edge across at {u}");
        }
        let total = sum(w, covered.iter());
        assert!(within_two_thirds(sum(w, ao.iter()), total));
        assert!(within_two_thirds(sum(w, bo.iter()), total));
        assert!(s.separator().len() <= td.width() + 1);
    }

    #[test]
    fn p4_weighted_ends() {
        let g = Graph::from_edges(4, [(1, 2), (2, 3), (3, 4)]).unwrap();
        let td = TreeDecomposition {
            bags: vec![[1, 2].into(), [2, 3].into(), [3, 4].into()],
            tree_edges: vec![(0, 1), (1, 2)],
        };
        let w = indicator_weights(4, &[1, 4].into());
        let s = balanced_separation(&g, &td, &w);
        check(&g, &td, &w, &s);
        assert_eq!(s.separator(), VertexSet::from([2]));
        let sides = [s.a.clone(), s.b.clone()];
        assert!(sides.contains(&[1, 2].into()) && sides.contains(&[2, 3, 4].into()));
    }

    #[test]
    fn single_vertex() {
        let g = Graph::empty(1);
        let td = TreeDecomposition::min_fill(&g);
        let s = balanced_separation(&g, &td, &[1u32]);
        assert_eq!((s.a.len(), s.b.len()), (1, 1));
    }

    #[test]
    fn star_splits_leaves() {
        let g = Graph::from_edges(5, [(1, 2), (1, 3), (1, 4), (1, 5)]).unwrap();
        let td = TreeDecomposition::min_fill(&g);
        let w = indicator_weights(5, &[2, 3, 4, 5].into());
        let s = balanced_separation(&g, &td, &w);
        check(&g, &td, &w, &s);
        assert_eq!(s.separator(), VertexSet::from([1]));
        assert_eq!((s.a_only().len(), s.b_only().len()), (2, 2));
    }

    #[test]
    fn real_weights() {
        let g = Graph::from_edges(4, [(1, 2), (2, 3), (3, 4)]).unwrap();
        let td = TreeDecomposition::min_fill(&g);
        let w = [0.5f64, 0.25, 2.0, 0.1];
        check(&g, &td, &w, &balanced_separation(&g, &td, &w));
    }

    proptest! {
        #[test]
        fn random_trees_and_weights(n in 1usize..40, seed in any::<u64>()) {
            let mut x = seed | 1;
            let mut next = move || { x ^= x << 13; x ^= x >> 7; x ^= x << 17; x };
            let edges: Vec<_> = (2..=n).map(|v| ((next() as usize % (v - 1)) + 1, v)).collect();
            let mut g_edges = edges.clone();
            // a few chords keep the width above one
            for _ in 0..n / 4 {
                let (u, v) = ((next() as usize % n) + 1, (next() as usize % n) + 1);
                if u != v { g_edges.push((u, v)); }
            }
            let g = Graph::from_edges(n, g_edges).unwrap();
            let td = TreeDecomposition::min_fill(&g);
            let w: Vec<u32> = (0..n).map(|_| (next() % 4) as u32).collect();
            let s = balanced_separation(&g, &td, &w);
            check(&g, &td, &w, &s);
        }
    }
}
