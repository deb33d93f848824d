//! Small exact subroutines used to audit gadgets and cross-check solvers.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const DEFAULT_ALPHA_LIMIT: usize = 32;
pub const DEFAULT_BICLIQUE_SIDE_LIMIT: usize = 16;

/// Maximum independent set by branch and bound, refusing graphs with more
/// than `DEFAULT_ALPHA_LIMIT` vertices.
pub fn alpha_bruteforce(g: &Graph) -> Result<(usize, VertexSet)> {
    alpha_bruteforce_limited(g, DEFAULT_ALPHA_LIMIT)
}

pub fn alpha_bruteforce_limited(g: &Graph, limit: usize) -> Result<(usize, VertexSet)> {
    let limit = limit.min(64);
    if g.n() > limit {
        return Err(Error::Capacity {
            what: "vertices for exact independence number",
            found: g.n(),
            limit,
        });
    }
    let adj = g.adjacency_masks().expect("n <= 64");
    let all = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };

    let greedy = greedy_mask(&adj, all);
    let mut best = (greedy.count_ones() as usize, greedy);
    branch(&adj, all, 0, &mut best);
    Ok((best.0, VertexSet::from_mask(best.1)))
}

// min-degree greedy, lowest id on ties
fn greedy_mask(adj: &[u64], mut cands: u64) -> u64 {
    let mut picked = 0u64;
    while cands != 0 {
        let mut choice = None;
        let mut rest = cands;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let d = (adj[i] & cands).count_ones();
            if choice.is_none_or(|(bd, _)| d < bd) {
                choice = Some((d, i));
            }
        }
        let (_, i) = choice.expect("non-empty candidates");
        picked |= 1 << i;
        cands &= !(adj[i] | (1 << i));
    }
    picked
}

fn branch(adj: &[u64], mut cands: u64, mut cur: u64, best: &mut (usize, u64)) {
    // vertices isolated within the candidates are always taken
    loop {
        let mut isolated = 0u64;
        let mut rest = cands;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if adj[i] & cands == 0 {
                isolated |= 1 << i;
            }
        }
        if isolated == 0 {
            break;
        }
        cur |= isolated;
        cands &= !isolated;
    }
    let size = cur.count_ones() as usize;
    if cands == 0 {
        if size > best.0 {
            *best = (size, cur);
        }
        return;
    }
    if size + (cands.count_ones() as usize) <= best.0 {
        return;
    }
    let mut pivot = (0u32, 0usize);
    let mut rest = cands;
    while rest != 0 {
        let i = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let d = (adj[i] & cands).count_ones();
        if d > pivot.0 {
            pivot = (d, i);
        }
    }
    let v = pivot.1;
    branch(adj, cands & !(adj[v] | (1 << v)), cur | (1 << v), best);
    branch(adj, cands & !(1 << v), cur, best);
}

/// Largest `s` such that some `S ⊆ L`, `T ⊆ R` with `|S| = |T| = s` span a
/// complete bipartite subgraph.
pub fn balanced_biclique_bruteforce(g: &Graph) -> Result<usize> {
    balanced_biclique_limited(g, DEFAULT_BICLIQUE_SIDE_LIMIT)
}

pub fn balanced_biclique_limited(g: &Graph, side_limit: usize) -> Result<usize> {
    let (left, right) = g.bipartition().ok_or(Error::NotBipartite)?;
    let side = left.len().max(right.len());
    if side > side_limit.min(63) {
        return Err(Error::Capacity {
            what: "bipartition side for biclique search",
            found: side,
            limit: side_limit,
        });
    }
    let lv: Vec<_> = left.iter().collect();
    let rv: Vec<_> = right.iter().collect();
    // nbr[i] = neighbours of left vertex i as a mask over right positions
    let nbr: Vec<u64> = lv
        .iter()
        .map(|&u| {
            rv.iter()
                .enumerate()
                .filter(|&(_, &w)| g.has_edge(u, w))
                .fold(0u64, |m, (j, _)| m | (1 << j))
        })
        .collect();
    let full_right = (1u64 << rv.len()) - 1;
    let mut best = 0usize;
    for sub in 1u64..(1u64 << lv.len()) {
        let size = sub.count_ones() as usize;
        if size <= best {
            continue;
        }
        let mut common = full_right;
        let mut rest = sub;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            common &= nbr[i];
        }
        best = best.max(size.min(common.count_ones() as usize));
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn complete(n: usize) -> Graph {
        let edges = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v)));
        Graph::from_edges(n, edges).unwrap()
    }

    fn bipartite(l: usize, r: usize, edges: Vec<(usize, usize)>) -> Graph {
        Graph::from_edges(l + r, edges)
            .unwrap()
            .with_bipartition(VertexSet::range(1, l), VertexSet::range(l + 1, l + r))
            .unwrap()
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha_bruteforce(&complete(3)).unwrap().0, 1);
        assert_eq!(alpha_bruteforce(&Graph::empty(5)).unwrap().0, 5);
        let c5 = Graph::from_edges(5, (1..=5).map(|i| (i, i % 5 + 1))).unwrap();
        let (a, w) = alpha_bruteforce(&c5).unwrap();
        assert_eq!(a, 2);
        assert!(c5.is_independent(&w).unwrap());
        assert!(alpha_bruteforce(&Graph::empty(33)).unwrap_err().is_capacity());
    }

    #[test]
    fn biclique_examples() {
        let k33 = bipartite(3, 3, (1..=3).flat_map(|u| (4..=6).map(move |v| (u, v))).collect());
        assert_eq!(balanced_biclique_bruteforce(&k33).unwrap(), 3);
        let matching = bipartite(3, 3, vec![(1, 4), (2, 5), (3, 6)]);
        assert_eq!(balanced_biclique_bruteforce(&matching).unwrap(), 1);
        assert_eq!(balanced_biclique_bruteforce(&bipartite(2, 2, vec![])).unwrap(), 0);
        assert_eq!(balanced_biclique_bruteforce(&complete(3)), Err(Error::NotBipartite));
    }

    fn alpha_enumerate(g: &Graph) -> usize {
        let adj = g.adjacency_masks().unwrap();
        (0u64..(1 << g.n()))
            .filter(|&s| (0..g.n()).all(|i| s >> i & 1 == 0 || adj[i] & s == 0))
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap()
    }

    proptest! {
        #[test]
        fn alpha_matches_enumeration(n in 0usize..=12, seed in any::<u64>(), density in 0u32..100) {
            let mut x = seed | 1;
            let mut edges = Vec::new();
            for u in 1..=n {
                for v in u + 1..=n {
                    x ^= x << 13; x ^= x >> 7; x ^= x << 17;
                    if (x % 100) < density as u64 {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, edges).unwrap();
            let (a, w) = alpha_bruteforce(&g).unwrap();
            prop_assert_eq!(a, alpha_enumerate(&g));
            prop_assert_eq!(w.len(), a);
            prop_assert!(g.is_independent(&w).unwrap());
        }
    }
}
