//! Graph, vertex-set and reconfiguration-sequence data model.
//!
//! Vertices are 1-indexed. Every set is kept sorted so that serialized output
//! and tie-breaking are deterministic.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// A sorted set of vertex ids.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(BTreeSet<Vertex>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(BTreeSet::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.contains(&v)
    }

    pub fn insert(&mut self, v: Vertex) -> bool {
        self.0.insert(v)
    }

    pub fn remove(&mut self, v: Vertex) -> bool {
        self.0.remove(&v)
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn first(&self) -> Option<Vertex> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Vertex> {
        self.0.last().copied()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.union(&other.0).copied().collect())
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.intersection(&other.0).copied().collect())
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.difference(&other.0).copied().collect())
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_superset(&self, other: &VertexSet) -> bool {
        self.0.is_superset(&other.0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    /// Nested in either direction.
    pub fn is_comparable(&self, other: &VertexSet) -> bool {
        self.is_subset(other) || other.is_subset(self)
    }

    /// The `k` lowest-id members.
    pub fn lowest(&self, k: usize) -> VertexSet {
        self.iter().take(k).collect()
    }

    /// Members shifted by `offset`.
    pub fn shifted(&self, offset: usize) -> VertexSet {
        self.iter().map(|v| v + offset).collect()
    }

    /// Bitmask with bit `v - 1` set for each member. Callers guarantee ids ≤ 64.
    pub fn to_mask(&self) -> u64 {
        self.iter().fold(0u64, |m, v| m | (1u64 << (v - 1)))
    }

    pub fn from_mask(mask: u64) -> VertexSet {
        let mut out = VertexSet::new();
        let mut rest = mask;
        while rest != 0 {
            let b = rest.trailing_zeros() as usize;
            out.insert(b + 1);
            rest &= rest - 1;
        }
        out
    }

    pub fn range(lo: Vertex, hi: Vertex) -> VertexSet {
        (lo..=hi).collect()
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        VertexSet(iter.into_iter().collect())
    }
}

impl<const N: usize> From<[Vertex; N]> for VertexSet {
    fn from(vs: [Vertex; N]) -> Self {
        vs.into_iter().collect()
    }
}

impl From<&[Vertex]> for VertexSet {
    fn from(vs: &[Vertex]) -> Self {
        vs.iter().copied().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in self.iter() {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

/// Simple undirected graph on vertices `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    // adj[v - 1] is the sorted neighbor list of v
    adj: Vec<Vec<Vertex>>,
    edge_count: usize,
    bipartition: Option<(VertexSet, VertexSet)>,
}

impl Graph {
    pub fn empty(n: usize) -> Graph {
        Graph {
            n,
            adj: vec![Vec::new(); n],
            edge_count: 0,
            bipartition: None,
        }
    }

    /// Builds a simple graph. Parallel edges are collapsed; self-loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut sets: Vec<BTreeSet<Vertex>> = vec![BTreeSet::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            sets[u - 1].insert(v);
            sets[v - 1].insert(u);
        }
        let adj: Vec<Vec<Vertex>> = sets.into_iter().map(|s| s.into_iter().collect()).collect();
        let edge_count = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Ok(Graph {
            n,
            adj,
            edge_count,
            bipartition: None,
        })
    }

    /// Tags the graph with a bipartition after checking it.
    pub fn with_bipartition(mut self, left: VertexSet, right: VertexSet) -> Result<Graph> {
        if !left.is_disjoint(&right) {
            return Err(Error::invalid("bipartition sides overlap"));
        }
        if left.len() + right.len() != self.n {
            return Err(Error::invalid("bipartition does not cover every vertex"));
        }
        for v in left.iter().chain(right.iter()) {
            self.check_vertex(v)?;
        }
        for (u, v) in self.edges() {
            if left.contains(u) == left.contains(v) {
                return Err(Error::invalid(format!("edge {u}-{v} does not cross the bipartition")));
            }
        }
        self.bipartition = Some((left, right));
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        1..=self.n
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices().collect()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v - 1]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v - 1].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u >= 1 && u <= self.n && self.adj[u - 1].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj.iter().enumerate().flat_map(|(i, nbrs)| {
            let u = i + 1;
            nbrs.iter().copied().filter(move |&v| v > u).map(move |v| (u, v))
        })
    }

    pub fn bipartition(&self) -> Option<(&VertexSet, &VertexSet)> {
        self.bipartition.as_ref().map(|(l, r)| (l, r))
    }

    pub fn is_bipartite_tagged(&self) -> bool {
        self.bipartition.is_some()
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v == 0 || v > self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn check_set(&self, s: &VertexSet) -> Result<()> {
        s.iter().try_for_each(|v| self.check_vertex(v))
    }

    /// True iff no edge has both endpoints in `s`.
    pub fn is_independent(&self, s: &VertexSet) -> Result<bool> {
        self.check_set(s)?;
        Ok(self.is_independent_unchecked(s))
    }

    pub(crate) fn is_independent_unchecked(&self, s: &VertexSet) -> bool {
        s.iter()
            .all(|v| self.neighbors(v).iter().all(|&u| u < v || !s.contains(u)))
    }

    /// Neighbors of `v` that lie in `s`.
    pub fn neighbors_in(&self, v: Vertex, s: &VertexSet) -> VertexSet {
        self.neighbors(v).iter().copied().filter(|&u| s.contains(u)).collect()
    }

    /// `(ids, adjacency bitmasks)` for graphs with at most 64 vertices.
    pub fn adjacency_masks(&self) -> Option<Vec<u64>> {
        if self.n > 64 {
            return None;
        }
        Some(
            self.adj
                .iter()
                .map(|nbrs| nbrs.iter().fold(0u64, |m, &u| m | (1u64 << (u - 1))))
                .collect(),
        )
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    /// Bipartition tags survive only if both operands carry one.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let offset = self.n;
        let edges: Vec<(Vertex, Vertex)> = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + offset, v + offset)))
            .collect();
        let g = Graph::from_edges(self.n + other.n, edges).expect("union of valid graphs");
        match (&self.bipartition, &other.bipartition) {
            (Some((l1, r1)), Some((l2, r2))) => g
                .with_bipartition(l1.union(&l2.shifted(offset)), r1.union(&r2.shifted(offset)))
                .expect("union of bipartitions"),
            _ => g,
        }
    }

    /// Induced subgraph on `keep`, relabelled to `1..=keep.len()` in id order.
    /// Returns the graph and the map from new ids (index `new - 1`) to old ids.
    pub fn induced(&self, keep: &VertexSet) -> (Graph, Vec<Vertex>) {
        let old: Vec<Vertex> = keep.iter().collect();
        let new_of: HashMap<Vertex, Vertex> = old.iter().enumerate().map(|(i, &v)| (v, i + 1)).collect();
        let edges = self
            .edges()
            .filter_map(|(u, v)| Some((*new_of.get(&u)?, *new_of.get(&v)?)));
        let g = Graph::from_edges(old.len(), edges).expect("induced subgraph of a valid graph");
        (g, old)
    }
}

/// A graph with two independent sets to reconfigure between.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub ini: VertexSet,
    pub tar: VertexSet,
}

impl Instance {
    pub fn new(graph: Graph, ini: VertexSet, tar: VertexSet) -> Result<Instance> {
        for (name, s) in [("ini", &ini), ("tar", &tar)] {
            if !graph.is_independent(s)? {
                return Err(Error::invalid(format!("{name} is not an independent set")));
            }
        }
        Ok(Instance { graph, ini, tar })
    }

    /// `min(|ini|, |tar|)`, the trivial upper bound on the optimum.
    pub fn phi(&self) -> usize {
        self.ini.len().min(self.tar.len())
    }
}

/// Ordered list of independent sets, consecutive sets nested.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReconfigSequence {
    steps: Vec<VertexSet>,
}

impl ReconfigSequence {
    pub fn new(steps: Vec<VertexSet>) -> Self {
        ReconfigSequence { steps }
    }

    pub fn single(set: VertexSet) -> Self {
        ReconfigSequence { steps: vec![set] }
    }

    pub fn steps(&self) -> &[VertexSet] {
        &self.steps
    }

    pub fn into_steps(self) -> Vec<VertexSet> {
        self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn first(&self) -> Option<&VertexSet> {
        self.steps.first()
    }

    pub fn last(&self) -> Option<&VertexSet> {
        self.steps.last()
    }

    /// Appends `set` unless it equals the current last step.
    pub fn push(&mut self, set: VertexSet) {
        if self.steps.last() != Some(&set) {
            self.steps.push(set);
        }
    }

    pub fn extend(&mut self, other: impl IntoIterator<Item = VertexSet>) {
        for s in other {
            self.push(s);
        }
    }

    pub fn reversed(&self) -> ReconfigSequence {
        ReconfigSequence {
            steps: self.steps.iter().rev().cloned().collect(),
        }
    }

    /// Minimum step size.
    pub fn value(&self) -> Result<usize> {
        self.steps
            .iter()
            .map(VertexSet::len)
            .min()
            .ok_or_else(|| Error::invalid("empty reconfiguration sequence"))
    }

    /// Removes loops: whenever a set reappears, everything between its two
    /// occurrences is cut. The result has pairwise distinct steps, the same
    /// endpoints, and a value no smaller than before.
    pub fn remove_redundant(&self) -> ReconfigSequence {
        let mut out: Vec<VertexSet> = Vec::with_capacity(self.steps.len());
        let mut index: HashMap<VertexSet, usize> = HashMap::new();
        for s in &self.steps {
            if let Some(&i) = index.get(s) {
                for dropped in out.drain(i + 1..) {
                    index.remove(&dropped);
                }
            } else {
                index.insert(s.clone(), out.len());
                out.push(s.clone());
            }
        }
        ReconfigSequence { steps: out }
    }
}

impl FromIterator<VertexSet> for ReconfigSequence {
    fn from_iter<I: IntoIterator<Item = VertexSet>>(iter: I) -> Self {
        ReconfigSequence {
            steps: iter.into_iter().collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    NotIndependent,
    NotNested,
    WrongEndpoints,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ViolationKind::NotIndependent => "NotIndependent",
            ViolationKind::NotNested => "NotNested",
            ViolationKind::WrongEndpoints => "WrongEndpoints",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Violation {
    pub index: usize,
    pub kind: ViolationKind,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.kind, self.index)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub first_violation: Option<Violation>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.first_violation.is_none()
    }
}

/// Checks endpoints, independence of every step and nesting of consecutive
/// steps, reporting the lowest-index violation.
pub fn validate_sequence(inst: &Instance, seq: &ReconfigSequence) -> ValidationReport {
    let fail = |index, kind| ValidationReport {
        first_violation: Some(Violation { index, kind }),
    };
    let steps = seq.steps();
    if steps.first() != Some(&inst.ini) {
        return fail(0, ViolationKind::WrongEndpoints);
    }
    for (i, s) in steps.iter().enumerate() {
        let independent = inst.graph.is_independent(s).unwrap_or(false);
        if !independent {
            return fail(i, ViolationKind::NotIndependent);
        }
        if i > 0 && !steps[i - 1].is_comparable(s) {
            return fail(i, ViolationKind::NotNested);
        }
    }
    if steps.last() != Some(&inst.tar) {
        return fail(steps.len() - 1, ViolationKind::WrongEndpoints);
    }
    ValidationReport { first_violation: None }
}
