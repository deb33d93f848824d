//! Layered approximation scheme for planar inputs: drop one BFS layer class,
//! solve the rest by Algorithm T, or solve exactly when the set is small.

use crate::bounds::{layer_count_k, layered_margin};
use crate::error::Result;
use crate::exact::equalize;
use crate::graph::{Instance, ReconfigSequence, VertexSet};
use crate::oracle::OracleLimits;
use crate::traversal::bfs_layers;
use crate::treewidth::{algorithm_t, check_eps, exact_or_advise, obtain_td, Branch, TreeDecomposition};

/// Vertices grouped by BFS layer modulo `k + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayerPartition {
    pub k: usize,
    pub classes: Vec<VertexSet>,
}

pub fn layer_partition(g: &crate::graph::Graph, k: usize) -> LayerPartition {
    let layers = bfs_layers(g);
    let mut classes = vec![VertexSet::new(); k + 1];
    for v in g.vertices() {
        classes[layers[v - 1] % (k + 1)].insert(v);
    }
    LayerPartition { k, classes }
}

#[derive(Clone, Debug)]
pub struct BakerSolution {
    pub seq: ReconfigSequence,
    pub branch: Branch,
    pub k: usize,
    /// Index of the dropped class.
    pub j: usize,
    /// `|(ini' ∪ tar') ∩ V_j|` for the equalized sets.
    pub class_hits: usize,
    pub eta: usize,
    /// `min(|ini' \ V_j|, |tar' \ V_j|)`.
    pub residual_phi: usize,
    /// Width of the heuristic decomposition of `G − V_j`.
    pub residual_width: usize,
}

pub fn solve_baker(inst: &Instance, eps: f64, limits: &OracleLimits) -> Result<BakerSolution> {
    check_eps(eps)?;
    let g = &inst.graph;
    let eps_prime = eps / 2.0;
    let k = layer_count_k(eps, eps_prime);
    let (ini, tar) = equalize(&inst.ini, &inst.tar);
    let eta = ini.len();
    let parts = layer_partition(g, k);
    let both = ini.union(&tar);
    let (j, class_hits) = parts
        .classes
        .iter()
        .map(|c| c.intersection(&both).len())
        .enumerate()
        .min_by_key(|&(i, hits)| (hits, i))
        .expect("k + 1 >= 1 classes");

    let keep = g.vertex_set().difference(&parts.classes[j]);
    let (sub, map) = g.induced(&keep);
    let local = obtain_td(&sub, None)?;
    let td = TreeDecomposition {
        bags: local.bags.iter().map(|b| b.iter().map(|v| map[v - 1]).collect()).collect(),
        tree_edges: local.tree_edges.clone(),
    };
    let (ini_j, tar_j) = (ini.intersection(&keep), tar.intersection(&keep));
    let residual_phi = ini_j.len().min(tar_j.len());
    let t = td.width() + 1;

    let mut out = BakerSolution {
        seq: ReconfigSequence::single(inst.ini.clone()),
        branch: Branch::Exact,
        k,
        j,
        class_hits,
        eta,
        residual_phi,
        residual_width: td.width(),
    };
    if inst.ini == inst.tar {
        return Ok(out);
    }
    let separator_ok = layered_margin(residual_phi as f64, t as f64, eps_prime).is_some_and(|m| m >= 0.0);
    if separator_ok {
        let inner = algorithm_t(g, &td, &ini_j, &tar_j).seq;
        let mut seq = ReconfigSequence::single(inst.ini.clone());
        seq.push(ini.clone());
        seq.extend(inner.into_steps());
        seq.push(tar.clone());
        seq.push(inst.tar.clone());
        out.seq = seq.remove_redundant();
        out.branch = Branch::AlgorithmT;
    } else {
        out.seq = exact_or_advise(inst, limits)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{validate_sequence, Graph};

    #[test]
    fn edgeless_keeps_min_size() {
        let inst = Instance::new(Graph::empty(6), [1, 2, 3].into(), [4, 5].into()).unwrap();
        let sol = solve_baker(&inst, 1.0, &OracleLimits::default()).unwrap();
        assert!(validate_sequence(&inst, &sol.seq).ok());
        assert_eq!(sol.seq.value().unwrap(), 2);
        assert_eq!(sol.k, 7);
    }

    #[test]
    fn empty_ini() {
        let g = Graph::from_edges(3, [(1, 2), (2, 3)]).unwrap();
        let inst = Instance::new(g, VertexSet::new(), [1, 3].into()).unwrap();
        let sol = solve_baker(&inst, 1.0, &OracleLimits::default()).unwrap();
        assert_eq!(sol.seq.steps(), &[VertexSet::new(), [1, 3].into()]);
    }

    #[test]
    fn layer_classes_cover() {
        let g = Graph::from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        let p = layer_partition(&g, 2);
        assert_eq!(p.classes, vec![[1, 4].into(), [2, 5].into(), [3].into()]);
    }
}
