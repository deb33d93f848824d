//! The X/Y/Z peeling algorithm for graphs of bounded degeneracy.

use std::collections::BTreeSet;

use crate::graph::{Instance, ReconfigSequence, Vertex, VertexSet};

/// Snapshots of X, Y and Z before each iteration and after the last one.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PeelTrace {
    pub xs: Vec<VertexSet>,
    pub ys: Vec<VertexSet>,
    pub zs: Vec<VertexSet>,
}

impl PeelTrace {
    pub fn iterations(&self) -> usize {
        self.xs.len().saturating_sub(1)
    }
}

#[derive(Clone, Debug)]
pub struct DegeneracySolution {
    pub seq: ReconfigSequence,
    pub trace: PeelTrace,
}

/// Repeatedly moves a minimum-degree vertex of `G[X, Y]` (lowest id on ties)
/// into Z, discarding its neighbours on the other side.
pub fn peel(inst: &Instance) -> PeelTrace {
    let g = &inst.graph;
    let mut z = inst.ini.intersection(&inst.tar);
    let mut x = inst.ini.difference(&z);
    let mut y = inst.tar.difference(&z);
    let mut in_x = vec![false; g.n() + 1];
    let mut in_y = vec![false; g.n() + 1];
    x.iter().for_each(|v| in_x[v] = true);
    y.iter().for_each(|v| in_y[v] = true);
    let other = |v: Vertex, in_x: &[bool], in_y: &[bool]| -> Vec<Vertex> {
        let side = if in_x[v] { in_y } else { in_x };
        g.neighbors(v).iter().copied().filter(|&u| side[u]).collect()
    };
    let mut deg = vec![0usize; g.n() + 1];
    let mut queue = BTreeSet::new();
    for v in x.iter().chain(y.iter()) {
        deg[v] = other(v, &in_x, &in_y).len();
        queue.insert((deg[v], v));
    }

    let mut trace = PeelTrace::default();
    let snapshot = |t: &mut PeelTrace, x: &VertexSet, y: &VertexSet, z: &VertexSet| {
        t.xs.push(x.clone());
        t.ys.push(y.clone());
        t.zs.push(z.clone());
    };
    snapshot(&mut trace, &x, &y, &z);
    // drops u from X ∪ Y and updates degrees of its remaining neighbours
    let drop = |u: Vertex, in_x: &mut [bool], in_y: &mut [bool], deg: &mut [usize], queue: &mut BTreeSet<(usize, Vertex)>| {
        for w in other(u, in_x, in_y) {
            queue.remove(&(deg[w], w));
            deg[w] -= 1;
            queue.insert((deg[w], w));
        }
        queue.remove(&(deg[u], u));
        in_x[u] = false;
        in_y[u] = false;
    };
    while let Some(&(_, v)) = queue.first() {
        let v_in_x = in_x[v];
        for u in other(v, &in_x, &in_y) {
            drop(u, &mut in_x, &mut in_y, &mut deg, &mut queue);
            if v_in_x {
                y.remove(u);
            } else {
                x.remove(u);
            }
        }
        drop(v, &mut in_x, &mut in_y, &mut deg, &mut queue);
        if v_in_x {
            x.remove(v);
        } else {
            y.remove(v);
        }
        z.insert(v);
        snapshot(&mut trace, &x, &y, &z);
    }
    trace
}

/// Forward half from ini, backward half from tar, meeting at `Z^(t)`.
pub fn assemble(trace: &PeelTrace) -> ReconfigSequence {
    let t = trace.xs.len();
    let half = |sides: &[VertexSet]| -> Vec<VertexSet> {
        let mut out = Vec::with_capacity(2 * t - 1);
        for i in 0..t - 1 {
            out.push(sides[i].union(&trace.zs[i]));
            out.push(sides[i + 1].union(&trace.zs[i]));
        }
        out.push(sides[t - 1].union(&trace.zs[t - 1]));
        out
    };
    let mut steps = half(&trace.xs);
    let mut back = half(&trace.ys);
    back.pop();
    back.reverse();
    steps.extend(back);
    ReconfigSequence::new(steps)
}

/// Runs the peeling. With `collapse`, repeated sets are cut out of the
/// assembled sequence.
pub fn solve_degenerate_with(inst: &Instance, collapse: bool) -> DegeneracySolution {
    let trace = peel(inst);
    let raw = assemble(&trace);
    let seq = if collapse { raw.remove_redundant() } else { raw };
    DegeneracySolution { seq, trace }
}

pub fn solve_degenerate(inst: &Instance) -> ReconfigSequence {
    solve_degenerate_with(inst, true).seq
}
