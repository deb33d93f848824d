use crate::graph::{Graph, ReconfigSequence, VertexSet};
use crate::treewidth::decomposition::TreeDecomposition;
use crate::treewidth::separation::{balanced_separation, indicator_weights};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Op {
    Add(VertexSet),
    Remove(VertexSet),
}

impl Op {
    fn inverted(self) -> Op {
        match self {
            Op::Add(s) => Op::Remove(s),
            Op::Remove(s) => Op::Add(s),
        }
    }
}

#[derive(Clone, Debug)]
pub struct AlgorithmTResult {
    pub seq: ReconfigSequence,
    /// Nesting depth of calls that computed a separation.
    pub max_depth: usize,
}

/// Recursive separator algorithm. `td` must decompose `G[P]` where `P` is
/// the set of vertices it covers, and `ini`, `tar` must lie in `P`.
pub fn algorithm_t(g: &Graph, td: &TreeDecomposition, ini: &VertexSet, tar: &VertexSet) -> AlgorithmTResult {
    let mut ops = Vec::new();
    let mut max_depth = 0;
    recurse(g, td, ini, tar, 1, &mut ops, &mut max_depth);
    let mut cur = ini.clone();
    let mut seq = ReconfigSequence::single(cur.clone());
    for op in ops {
        match op {
            Op::Add(s) => cur = cur.union(&s),
            Op::Remove(s) => cur = cur.difference(&s),
        }
        seq.push(cur.clone());
    }
    AlgorithmTResult { seq, max_depth }
}

fn recurse(
    g: &Graph,
    td: &TreeDecomposition,
    ini: &VertexSet,
    tar: &VertexSet,
    depth: usize,
    ops: &mut Vec<Op>,
    max_depth: &mut usize,
) {
    if ini.is_empty() {
        if !tar.is_empty() {
            ops.push(Op::Add(tar.clone()));
        }
        return;
    }
    if ini.len() > tar.len() {
        // run from tar to ini and play the moves backwards
        let mut rev = Vec::new();
        recurse(g, td, tar, ini, depth, &mut rev, max_depth);
        ops.extend(rev.into_iter().rev().map(Op::inverted));
        return;
    }
    *max_depth = (*max_depth).max(depth);
    let sep = balanced_separation(g, td, &indicator_weights(g.n(), ini));
    let s = sep.separator();
    let x = sep.a_only();
    let y = sep.b_only();

    let removed = s.intersection(ini);
    if !removed.is_empty() {
        ops.push(Op::Remove(removed));
    }
    let gain = |side: &VertexSet| tar.intersection(side).len() as i64 - ini.intersection(side).len() as i64;
    let (p, q) = if gain(&x) >= gain(&y) { (x, y) } else { (y, x) };
    for part in [p, q] {
        if part.is_empty() {
            continue;
        }
        let sub = td.restrict(&part);
        recurse(g, &sub, &ini.intersection(&part), &tar.intersection(&part), depth + 1, ops, max_depth);
    }
    let added = s.intersection(tar);
    if !added.is_empty() {
        ops.push(Op::Add(added));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{validate_sequence, Instance};

    #[test]
    fn empty_ini_adds_everything() {
        let g = Graph::empty(3);
        let td = TreeDecomposition::min_fill(&g);
        let r = algorithm_t(&g, &td, &VertexSet::new(), &[1, 2].into());
        assert_eq!(r.seq.steps(), &[VertexSet::new(), [1, 2].into()]);
        assert_eq!(r.max_depth, 0);
    }

    #[test]
    fn p4_is_valid() {
        let g = Graph::from_edges(4, [(1, 2), (2, 3), (3, 4)]).unwrap();
        let td = TreeDecomposition::min_fill(&g);
        let inst = Instance::new(g.clone(), [1, 3].into(), [2, 4].into()).unwrap();
        let r = algorithm_t(&g, &td, &inst.ini, &inst.tar);
        assert!(validate_sequence(&inst, &r.seq).ok());
        assert!(r.seq.value().unwrap() <= 1);
    }

    #[test]
    fn swap_when_ini_is_larger() {
        let g = Graph::from_edges(5, [(1, 4), (2, 5)]).unwrap();
        let td = TreeDecomposition::min_fill(&g);
        let inst = Instance::new(g.clone(), [1, 2, 3].into(), [4, 5].into()).unwrap();
        let r = algorithm_t(&g, &td, &inst.ini, &inst.tar);
        assert!(validate_sequence(&inst, &r.seq).ok());
    }
}
