//! Exact solving by binary search over a token-jumping decision procedure.

use crate::error::{Error, Result};
use crate::graph::{Graph, Instance, ReconfigSequence, VertexSet};
use crate::oracle::{BfsTjDecider, OracleLimits};

/// Equal-size sets, consecutive ones differing by a single swap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TjSequence {
    steps: Vec<VertexSet>,
}

impl TjSequence {
    pub fn new(steps: Vec<VertexSet>) -> Result<TjSequence> {
        if steps.is_empty() {
            return Err(Error::invalid("empty token-jumping sequence"));
        }
        for (i, w) in steps.windows(2).enumerate() {
            let out = w[0].difference(&w[1]).len();
            let inn = w[1].difference(&w[0]).len();
            if out != 1 || inn != 1 {
                return Err(Error::invalid(format!("steps {i} and {} are not one swap apart", i + 1)));
            }
        }
        Ok(TjSequence { steps })
    }

    pub(crate) fn new_unchecked(steps: Vec<VertexSet>) -> TjSequence {
        TjSequence { steps }
    }

    pub fn steps(&self) -> &[VertexSet] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

/// Decision procedure for token-jumping reachability. Implementations must
/// return a certificate on yes-instances.
pub trait TjDecider {
    fn decide(&mut self, g: &Graph, from: &VertexSet, to: &VertexSet) -> Result<Option<TjSequence>>;
}

/// How Algorithm B updates its window after a yes answer.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum BinarySearchRule {
    /// `s := p - 1, l := p`. Converges to the largest yes.
    #[default]
    Inclusive,
    /// `s := p - 1, l := p + 1`. Can step past the answer.
    StepPast,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactSolution {
    pub value: usize,
    pub seq: ReconfigSequence,
    pub tj_calls: usize,
    /// Largest set size passed to the decider.
    pub max_call_size: usize,
}

/// Trims the larger set by dropping its highest ids.
pub fn equalize(ini: &VertexSet, tar: &VertexSet) -> (VertexSet, VertexSet) {
    let k = ini.len().min(tar.len());
    (ini.lowest(k), tar.lowest(k))
}

/// Inserts `X ∩ Y` between consecutive sets.
pub fn tj_to_tar(tj: &TjSequence) -> ReconfigSequence {
    let mut out = ReconfigSequence::single(tj.steps[0].clone());
    for w in tj.steps.windows(2) {
        out.push(w[0].intersection(&w[1]));
        out.push(w[1].clone());
    }
    out
}

// lowest-id greedy extension by one vertex
fn extend_by_one(g: &Graph, s: &VertexSet) -> Option<VertexSet> {
    let v = g
        .vertices()
        .find(|&v| !s.contains(v) && g.neighbors(v).iter().all(|&u| !s.contains(u)))?;
    let mut out = s.clone();
    out.insert(v);
    Some(out)
}

fn around(inst: &Instance, from: &VertexSet, middle: ReconfigSequence, to: &VertexSet) -> ReconfigSequence {
    let mut seq = ReconfigSequence::single(inst.ini.clone());
    seq.push(from.clone());
    seq.extend(middle.into_steps());
    seq.push(to.clone());
    seq.push(inst.tar.clone());
    seq
}

/// Algorithm B over an arbitrary decider.
pub fn solve_exact_via_tj<D: TjDecider>(
    inst: &Instance,
    decider: &mut D,
    rule: BinarySearchRule,
) -> Result<ExactSolution> {
    let mut calls = 0;
    let mut max_call_size = 0;
    if inst.ini == inst.tar {
        return Ok(ExactSolution {
            value: inst.ini.len(),
            seq: ReconfigSequence::single(inst.ini.clone()),
            tj_calls: 0,
            max_call_size: 0,
        });
    }
    let g = &inst.graph;
    let phi = inst.phi();
    let (ini, tar) = equalize(&inst.ini, &inst.tar);
    let mut ask = |a: &VertexSet, b: &VertexSet| {
        calls += 1;
        max_call_size = max_call_size.max(a.len());
        decider.decide(g, a, b)
    };

    if let (Some(i1), Some(i2)) = (extend_by_one(g, &ini), extend_by_one(g, &tar)) {
        if let Some(tj) = ask(&i1, &i2)? {
            let mut seq = ReconfigSequence::single(inst.ini.clone());
            seq.push(ini.clone());
            seq.extend(tj_to_tar(&tj).into_steps());
            seq.push(tar.clone());
            seq.push(inst.tar.clone());
            return Ok(ExactSolution {
                value: phi,
                seq: seq.remove_redundant(),
                tj_calls: calls,
                max_call_size,
            });
        }
    }

    let (mut lo, mut hi, mut s) = (1usize, phi, 0usize);
    let mut best: Option<(VertexSet, VertexSet, TjSequence)> = None;
    while lo < hi {
        let p = (lo + hi).div_ceil(2);
        let (a, b) = (ini.lowest(p), tar.lowest(p));
        match ask(&a, &b)? {
            Some(tj) => {
                s = p - 1;
                lo = match rule {
                    BinarySearchRule::Inclusive => p,
                    BinarySearchRule::StepPast => p + 1,
                };
                best = Some((a, b, tj));
            }
            None => hi = p - 1,
        }
    }
    let seq = match best {
        Some((a, b, tj)) => around(inst, &a, tj_to_tar(&tj), &b),
        _ => {
            let common = inst.ini.intersection(&inst.tar);
            around(inst, &common, ReconfigSequence::new(Vec::new()), &common)
        }
    };
    Ok(ExactSolution {
        value: s,
        seq: seq.remove_redundant(),
        tj_calls: calls,
        max_call_size,
    })
}

/// Algorithm B backed by the exhaustive decider.
pub fn solve_exact(inst: &Instance, limits: &OracleLimits) -> Result<ExactSolution> {
    solve_exact_via_tj(inst, &mut BfsTjDecider { limits: *limits }, BinarySearchRule::default())
}
