//! Exhaustive ground truth over the state space of independent sets.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::exact::{TjDecider, TjSequence};
use crate::graph::{Graph, Instance, ReconfigSequence, VertexSet};

/// Masks are `u64`, so no configuration can exceed this many vertices.
pub const HARD_VERTEX_CAP: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_vertices: usize,
    pub max_states: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_vertices: 20,
            max_states: 1 << 22,
        }
    }
}

impl OracleLimits {
    pub fn admits(&self, g: &Graph) -> bool {
        g.n() <= self.max_vertices.min(HARD_VERTEX_CAP)
    }

    fn masks(&self, g: &Graph) -> Result<Vec<u64>> {
        let limit = self.max_vertices.min(HARD_VERTEX_CAP);
        if g.n() > limit {
            return Err(Error::Capacity {
                what: "vertices for exhaustive search",
                found: g.n(),
                limit,
            });
        }
        Ok(g.adjacency_masks().expect("n within mask width"))
    }

    fn check_states(&self, seen: usize) -> Result<()> {
        if seen > self.max_states {
            return Err(Error::Capacity {
                what: "states explored",
                found: seen,
                limit: self.max_states,
            });
        }
        Ok(())
    }
}

fn blocked_by(adj: &[u64], s: u64) -> u64 {
    let mut blocked = s;
    let mut rest = s;
    while rest != 0 {
        let i = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        blocked |= adj[i];
    }
    blocked
}

fn path_to(pred: &HashMap<u64, u64>, end: u64) -> Vec<VertexSet> {
    let mut path = vec![end];
    let mut cur = end;
    while let Some(&p) = pred.get(&cur) {
        if p == cur {
            break;
        }
        path.push(p);
        cur = p;
    }
    path.reverse();
    path.into_iter().map(VertexSet::from_mask).collect()
}

/// BFS over independent sets of size at least `gamma`, one vertex added or
/// removed per move. `None` if `tar` is unreachable or `gamma` exceeds
/// `min(|ini|, |tar|)`.
pub fn reachable_at_threshold(
    inst: &Instance,
    gamma: usize,
    limits: &OracleLimits,
) -> Result<Option<ReconfigSequence>> {
    let adj = limits.masks(&inst.graph)?;
    if gamma > inst.phi() {
        return Ok(None);
    }
    let start = inst.ini.to_mask();
    let goal = inst.tar.to_mask();
    if start == goal {
        return Ok(Some(ReconfigSequence::single(inst.ini.clone())));
    }
    let all = if adj.len() == 64 { u64::MAX } else { (1u64 << adj.len()) - 1 };
    let mut pred = HashMap::from([(start, start)]);
    let mut queue = VecDeque::from([start]);
    while let Some(s) = queue.pop_front() {
        let size = s.count_ones() as usize;
        let mut moves = Vec::new();
        if size > gamma {
            let mut rest = s;
            while rest != 0 {
                let i = rest.trailing_zeros();
                rest &= rest - 1;
                moves.push(s & !(1 << i));
            }
        }
        let mut free = all & !blocked_by(&adj, s);
        while free != 0 {
            let i = free.trailing_zeros();
            free &= free - 1;
            moves.push(s | (1 << i));
        }
        for t in moves {
            if pred.contains_key(&t) {
                continue;
            }
            pred.insert(t, s);
            if t == goal {
                return Ok(Some(ReconfigSequence::new(path_to(&pred, goal))));
            }
            queue.push_back(t);
        }
        limits.check_states(pred.len())?;
    }
    Ok(None)
}

/// Optimal value and a witness, by binary search on the threshold.
pub fn opt_exact(inst: &Instance, limits: &OracleLimits) -> Result<(usize, ReconfigSequence)> {
    limits.masks(&inst.graph)?;
    if inst.ini == inst.tar {
        return Ok((inst.ini.len(), ReconfigSequence::single(inst.ini.clone())));
    }
    // passing through ini ∩ tar is always possible
    let common = inst.ini.intersection(&inst.tar);
    let mut witness: ReconfigSequence = [inst.ini.clone(), common.clone(), inst.tar.clone()]
        .into_iter()
        .collect();
    let (mut lo, mut hi) = (common.len(), inst.phi());
    while lo < hi {
        let mid = (lo + hi).div_ceil(2);
        match reachable_at_threshold(inst, mid, limits)? {
            Some(seq) => {
                lo = mid;
                witness = seq;
            }
            None => hi = mid - 1,
        }
    }
    Ok((lo, witness))
}

/// Token-jumping reachability between equal-size independent sets.
pub fn isr_tj_decide(
    g: &Graph,
    from: &VertexSet,
    to: &VertexSet,
    limits: &OracleLimits,
) -> Result<Option<TjSequence>> {
    let adj = limits.masks(g)?;
    if from.len() != to.len() {
        return Err(Error::invalid(format!(
            "token jumping needs equal sizes, got {} and {}",
            from.len(),
            to.len()
        )));
    }
    for s in [from, to] {
        if !g.is_independent(s)? {
            return Err(Error::invalid(format!("{{{s}}} is not independent")));
        }
    }
    let start = from.to_mask();
    let goal = to.to_mask();
    if start == goal {
        return Ok(Some(TjSequence::new_unchecked(vec![from.clone()])));
    }
    let all = if adj.len() == 64 { u64::MAX } else { (1u64 << adj.len()) - 1 };
    let mut pred = HashMap::from([(start, start)]);
    let mut queue = VecDeque::from([start]);
    while let Some(s) = queue.pop_front() {
        let mut rest = s;
        while rest != 0 {
            let i = rest.trailing_zeros();
            rest &= rest - 1;
            let base = s & !(1 << i);
            let mut free = all & !blocked_by(&adj, base) & !(1 << i);
            while free != 0 {
                let j = free.trailing_zeros();
                free &= free - 1;
                let t = base | (1 << j);
                if pred.contains_key(&t) {
                    continue;
                }
                pred.insert(t, s);
                if t == goal {
                    return Ok(Some(TjSequence::new_unchecked(path_to(&pred, goal))));
                }
                queue.push_back(t);
            }
        }
        limits.check_states(pred.len())?;
    }
    Ok(None)
}

/// The exhaustive BFS behind the token-jumping decision seam.
#[derive(Clone, Copy, Debug, Default)]
pub struct BfsTjDecider {
    pub limits: OracleLimits,
}

impl TjDecider for BfsTjDecider {
    fn decide(&mut self, g: &Graph, from: &VertexSet, to: &VertexSet) -> Result<Option<TjSequence>> {
        isr_tj_decide(g, from, to, &self.limits)
    }
}
