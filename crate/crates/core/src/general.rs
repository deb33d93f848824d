//! The partition-based approximation for arbitrary graphs: search for a
//! γ-sequence in the auxiliary graph of small independent pieces.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, Instance, ReconfigSequence, VertexSet};

/// Slack allowed above `2⌈log₂ n⌉` before enumeration is refused.
pub const PART_SIZE_SLACK: usize = 4;
pub const MAX_AUX_NODES: usize = 1 << 15;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    pub parts: Vec<VertexSet>,
}

impl Partition {
    pub fn ell(&self) -> usize {
        self.parts.len()
    }

    pub fn max_part(&self) -> usize {
        self.parts.iter().map(VertexSet::len).max().unwrap_or(0)
    }
}

/// A chain of independent sets of size at least `gamma`, starting inside
/// ini, ending inside tar, with independent consecutive unions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaSequence {
    pub gamma: usize,
    pub sets: Vec<VertexSet>,
}

impl GammaSequence {
    pub fn check(&self, inst: &Instance) -> Result<()> {
        let (Some(first), Some(last)) = (self.sets.first(), self.sets.last()) else {
            return Err(Error::invalid("empty gamma-sequence"));
        };
        if !first.is_subset(&inst.ini) || !last.is_subset(&inst.tar) {
            return Err(Error::invalid("gamma-sequence must start inside ini and end inside tar"));
        }
        if let Some(i) = self.sets.iter().position(|s| s.len() < self.gamma) {
            return Err(Error::invalid(format!("set {i} is smaller than gamma = {}", self.gamma)));
        }
        for s in &self.sets {
            inst.graph.check_set(s)?;
        }
        if !inst.graph.is_independent_unchecked(first) {
            return Err(Error::invalid("set 0 is not independent"));
        }
        for (i, w) in self.sets.windows(2).enumerate() {
            if !inst.graph.is_independent_unchecked(&w[0].union(&w[1])) {
                return Err(Error::invalid(format!("union of sets {i} and {} is not independent", i + 1)));
            }
        }
        Ok(())
    }
}

/// Nodes are independent pieces of single parts; edges join pieces whose
/// union is independent.
#[derive(Clone, Debug)]
pub struct AuxGraph {
    pub nodes: Vec<(usize, VertexSet)>,
    pub adj: Vec<Vec<usize>>,
}

/// Contiguous id chunks, `⌊n / log₂ n⌋` of them, the remainder going to the
/// first parts.
pub fn partition_vertices(g: &Graph) -> Partition {
    let n = g.n();
    if n < 2 {
        return Partition {
            parts: vec![g.vertex_set()],
        };
    }
    let ell = ((n as f64) / (n as f64).log2()).floor().max(1.0) as usize;
    let base = n / ell;
    let extra = n % ell;
    let mut parts = Vec::with_capacity(ell);
    let mut next = 1;
    for i in 0..ell {
        let size = base + usize::from(i < extra);
        parts.push(VertexSet::range(next, next + size - 1));
        next += size;
    }
    let lg = (n as f64).log2();
    debug_assert!(parts
        .iter()
        .all(|p| p.len() >= lg.floor() as usize && p.len() <= 2 * lg.ceil() as usize));
    Partition { parts }
}

// fixed-width bitset over vertex ids
#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn of(n: usize, vs: impl Iterator<Item = usize>) -> Bits {
        let mut words = vec![0u64; n / 64 + 1];
        for v in vs {
            words[v / 64] |= 1 << (v % 64);
        }
        Bits(words)
    }

    fn meets(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).any(|(a, b)| a & b != 0)
    }
}

pub fn build_aux_graph(g: &Graph, p: &Partition, gamma: usize) -> Result<AuxGraph> {
    let n = g.n();
    let guard = if n < 2 { n } else { 2 * (n as f64).log2().ceil() as usize + PART_SIZE_SLACK };
    let mut nodes: Vec<(usize, VertexSet)> = Vec::new();
    let mut seen_empty = false;
    for (idx, part) in p.parts.iter().enumerate() {
        if part.len() > guard.max(PART_SIZE_SLACK) || part.len() >= 63 {
            return Err(Error::Capacity {
                what: "part size for subset enumeration",
                found: part.len(),
                limit: guard.max(PART_SIZE_SLACK),
            });
        }
        let members: Vec<_> = part.iter().collect();
        for mask in 0u64..(1u64 << members.len()) {
            if (mask.count_ones() as usize) < gamma {
                continue;
            }
            if mask == 0 {
                if seen_empty {
                    continue;
                }
                seen_empty = true;
            }
            let set: VertexSet = (0..members.len())
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| members[i])
                .collect();
            if g.is_independent_unchecked(&set) {
                nodes.push((idx, set));
                if nodes.len() > MAX_AUX_NODES {
                    return Err(Error::Capacity {
                        what: "auxiliary graph nodes",
                        found: nodes.len(),
                        limit: MAX_AUX_NODES,
                    });
                }
            }
        }
    }
    let members: Vec<Bits> = nodes.iter().map(|(_, s)| Bits::of(n, s.iter())).collect();
    let closed: Vec<Bits> = nodes
        .iter()
        .map(|(_, s)| Bits::of(n, s.iter().flat_map(|v| g.neighbors(v).iter().copied())))
        .collect();
    let mut adj = vec![Vec::new(); nodes.len()];
    for i in 0..nodes.len() {
        for j in i + 1..nodes.len() {
            if !closed[i].meets(&members[j]) {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
    }
    Ok(AuxGraph { nodes, adj })
}

/// Remove down to the first set, then alternate unions and the next set,
/// then add up to tar.
pub fn gamma_to_reconfig(inst: &Instance, gs: &GammaSequence) -> Result<ReconfigSequence> {
    gs.check(inst)?;
    let mut seq = ReconfigSequence::single(inst.ini.clone());
    seq.push(gs.sets[0].clone());
    for w in gs.sets.windows(2) {
        seq.push(w[0].union(&w[1]));
        seq.push(w[1].clone());
    }
    seq.push(inst.tar.clone());
    Ok(seq)
}

fn find_gamma_path(aux: &AuxGraph, inst: &Instance) -> Option<Vec<usize>> {
    let k = aux.nodes.len();
    let mut pred = vec![usize::MAX; k];
    let mut queue = VecDeque::new();
    for (i, (_, s)) in aux.nodes.iter().enumerate() {
        if s.is_subset(&inst.ini) {
            pred[i] = i;
            queue.push_back(i);
        }
    }
    while let Some(x) = queue.pop_front() {
        if aux.nodes[x].1.is_subset(&inst.tar) {
            let mut path = vec![x];
            let mut cur = x;
            while pred[cur] != cur {
                cur = pred[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for &y in &aux.adj[x] {
            if pred[y] == usize::MAX {
                pred[y] = x;
                queue.push_back(y);
            }
        }
    }
    None
}

#[derive(Clone, Debug)]
pub struct GeneralSolution {
    pub seq: ReconfigSequence,
    pub gamma: usize,
    pub ell: usize,
}

pub fn solve_general(inst: &Instance) -> Result<GeneralSolution> {
    let partition = partition_vertices(&inst.graph);
    let ell = partition.ell();
    if inst.ini == inst.tar {
        return Ok(GeneralSolution {
            seq: ReconfigSequence::single(inst.ini.clone()),
            gamma: inst.ini.len(),
            ell,
        });
    }
    let top = partition.max_part().min(inst.phi());
    for gamma in (0..=top).rev() {
        let aux = build_aux_graph(&inst.graph, &partition, gamma)?;
        if let Some(path) = find_gamma_path(&aux, inst) {
            let gs = GammaSequence {
                gamma,
                sets: path.into_iter().map(|i| aux.nodes[i].1.clone()).collect(),
            };
            let seq = gamma_to_reconfig(inst, &gs)?.remove_redundant();
            return Ok(GeneralSolution { seq, gamma, ell });
        }
    }
    unreachable!("the empty piece joins ini to tar at gamma = 0")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::validate_sequence;

    fn p4() -> Instance {
        let g = Graph::from_edges(4, [(1, 2), (2, 3), (3, 4)]).unwrap();
        Instance::new(g, [1, 3].into(), [2, 4].into()).unwrap()
    }

    #[test]
    fn partition_examples() {
        let p = partition_vertices(&Graph::empty(8));
        assert_eq!(p.parts, vec![VertexSet::range(1, 4), VertexSet::range(5, 8)]);
        let p = partition_vertices(&Graph::empty(2));
        assert_eq!(p.parts, vec![VertexSet::from([1]), VertexSet::from([2])]);
        let p = partition_vertices(&Graph::empty(16));
        assert_eq!(p.ell(), 4);
        assert!(p.parts.iter().all(|s| s.len() == 4));
        assert_eq!(partition_vertices(&Graph::empty(1)).ell(), 1);
    }

    #[test]
    fn aux_graph_examples() {
        let g = p4().graph;
        let p = Partition {
            parts: vec![[1, 2].into(), [3, 4].into()],
        };
        let aux = build_aux_graph(&g, &p, 1).unwrap();
        let sets: Vec<_> = aux.nodes.iter().map(|(_, s)| s.clone()).collect();
        assert_eq!(sets, vec![[1].into(), [2].into(), [3].into(), [4].into()]);
        let mut edges = Vec::new();
        for (i, list) in aux.adj.iter().enumerate() {
            edges.extend(list.iter().filter(|&&j| j > i).map(|&j| (i + 1, j + 1)));
        }
        assert_eq!(edges, vec![(1, 3), (1, 4), (2, 4)]);
        assert!(build_aux_graph(&g, &p, 3).unwrap().nodes.is_empty());

        let aux = build_aux_graph(&Graph::empty(4), &p, 2).unwrap();
        assert_eq!(aux.nodes.len(), 2);
        assert_eq!(aux.adj[0], vec![1]);
        let aux = build_aux_graph(&Graph::empty(4), &p, 0).unwrap();
        assert_eq!(aux.nodes.iter().filter(|(_, s)| s.is_empty()).count(), 1);
    }

    #[test]
    fn gamma_conversion_examples() {
        let inst = p4();
        let gs = GammaSequence {
            gamma: 1,
            sets: vec![[1].into(), [4].into()],
        };
        let seq = gamma_to_reconfig(&inst, &gs).unwrap();
        let expect: Vec<VertexSet> = vec![[1, 3].into(), [1].into(), [1, 4].into(), [4].into(), [2, 4].into()];
        assert_eq!(seq.steps(), &expect[..]);
        let empty = GammaSequence {
            gamma: 0,
            sets: vec![VertexSet::new()],
        };
        let seq = gamma_to_reconfig(&inst, &empty).unwrap();
        assert_eq!(seq.steps(), &[[1, 3].into(), VertexSet::new(), [2, 4].into()]);
        let bad = GammaSequence {
            gamma: 1,
            sets: vec![[1].into(), [3].into()],
        };
        assert!(gamma_to_reconfig(&inst, &bad).is_err());
        let nested = Instance::new(Graph::empty(3), [1, 2].into(), [1, 2, 3].into()).unwrap();
        let starts_at_ini = GammaSequence {
            gamma: 2,
            sets: vec![[1, 2].into()],
        };
        let seq = gamma_to_reconfig(&nested, &starts_at_ini).unwrap();
        assert_eq!(seq.steps(), &[[1, 2].into(), [1, 2, 3].into()]);
    }

    #[test]
    fn solve_examples() {
        let inst = p4();
        let sol = solve_general(&inst).unwrap();
        assert_eq!(sol.gamma, 1);
        assert!(validate_sequence(&inst, &sol.seq).ok());
        assert!(sol.seq.value().unwrap() >= 1);

        let inst = Instance::new(Graph::empty(8), [1, 2, 5, 6].into(), [3, 4, 7, 8].into()).unwrap();
        let sol = solve_general(&inst).unwrap();
        assert!(sol.gamma >= 2);
        assert!(validate_sequence(&inst, &sol.seq).ok());

        let inst = Instance::new(Graph::empty(3), VertexSet::new(), [1, 2].into()).unwrap();
        let sol = solve_general(&inst).unwrap();
        assert_eq!(sol.gamma, 0);
        assert_eq!(sol.seq.steps(), &[VertexSet::new(), [1, 2].into()]);
    }
}
