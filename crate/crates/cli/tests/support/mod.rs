#![allow(dead_code)]

use std::collections::HashMap;

use mmisr::{Graph, Instance, VertexSet};
use rand::Rng;

pub fn independent_masks(g: &Graph) -> Vec<u64> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    (0u64..1 << g.n())
        .filter(|s| edges.iter().all(|&(u, v)| s >> (u - 1) & 1 == 0 || s >> (v - 1) & 1 == 0))
        .collect()
}

pub fn alpha_by_masks(g: &Graph) -> usize {
    independent_masks(g).iter().map(|s| s.count_ones() as usize).max().unwrap_or(0)
}

/// Largest `s` with `S ⊆ L`, `T ⊆ R`, `|S| = |T| = s` and every `S × T`
/// pair an edge.
pub fn biclique_by_masks(g: &Graph) -> usize {
    let (l, r) = g.bipartition().expect("tagged");
    let (lv, rv): (Vec<usize>, Vec<usize>) = (l.iter().collect(), r.iter().collect());
    let mut best = 0;
    for s in 1u64..1 << lv.len() {
        let common = rv
            .iter()
            .filter(|&&w| (0..lv.len()).all(|i| s >> i & 1 == 0 || g.has_edge(lv[i], w)))
            .count();
        best = best.max(common.min(s.count_ones() as usize));
    }
    best
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Bottleneck reachability over the full state graph: sets enter a
/// union-find by decreasing size, each joined to its independent supersets
/// one vertex larger; the answer is the size at which ini and tar meet.
pub fn bottleneck_opt(inst: &Instance) -> usize {
    let g = &inst.graph;
    let mut sets = independent_masks(g);
    sets.sort_by_key(|s| std::cmp::Reverse(s.count_ones()));
    let index: HashMap<u64, usize> = sets.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let mut parent: Vec<usize> = (0..sets.len()).collect();
    let (a, b) = (index[&inst.ini.to_mask()], index[&inst.tar.to_mask()]);
    let mut i = 0;
    while i < sets.len() {
        let size = sets[i].count_ones();
        let mut j = i;
        while j < sets.len() && sets[j].count_ones() == size {
            for v in 0..g.n() {
                if let Some(&k) = index.get(&(sets[j] | 1 << v)) {
                    let (x, y) = (find(&mut parent, j), find(&mut parent, k));
                    parent[x] = y;
                }
            }
            j += 1;
        }
        if j > a.max(b) && find(&mut parent, a) == find(&mut parent, b) {
            return size as usize;
        }
        i = j;
    }
    unreachable!("the empty set joins everything")
}

/// Every ordered pair of independent sets on every graph with at most `n`
/// vertices, one graph per isomorphism class.
pub fn exhaustive_instances(n: usize) -> Vec<Instance> {
    let mut out = Vec::new();
    for k in 0..=n {
        for g in mmisr::families::nonisomorphic_graphs(k).unwrap() {
            let sets: Vec<VertexSet> = independent_masks(&g).into_iter().map(VertexSet::from_mask).collect();
            for a in &sets {
                for b in &sets {
                    out.push(Instance::new(g.clone(), a.clone(), b.clone()).unwrap());
                }
            }
        }
    }
    out
}

pub fn random_instances(count: usize, max_n: usize, seed: u64) -> Vec<Instance> {
    let mut rng = mmisr::families::rng(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_n);
            let p = rng.gen_range(0.1..0.6);
            let g = mmisr::families::gnp(n, p, &mut rng);
            let size = rng.gen_range(0..=n.div_ceil(2));
            mmisr::families::random_instance(g, size, &mut rng)
        })
        .collect()
}
