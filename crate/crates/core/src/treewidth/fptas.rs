use crate::bounds::treewidth_bound;
use crate::degeneracy::solve_degenerate;
use crate::error::{Error, Result};
use crate::exact::solve_exact;
use crate::graph::{Graph, Instance, ReconfigSequence, VertexSet};
use crate::oracle::OracleLimits;
use crate::treewidth::algorithm_t::algorithm_t;
use crate::treewidth::decomposition::TreeDecomposition;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    AlgorithmT,
    Exact,
    Degeneracy,
}

#[derive(Clone, Debug)]
pub struct SchemeSolution {
    pub seq: ReconfigSequence,
    pub branch: Branch,
}

pub(crate) fn check_eps(eps: f64) -> Result<()> {
    if !(eps.is_finite() && eps > 0.0) {
        return Err(Error::invalid(format!("eps must be a positive real, got {eps}")));
    }
    Ok(())
}

/// True when Algorithm T alone certifies the `1 + eps` ratio.
pub fn separator_branch_suffices(phi: usize, t: usize, eps: f64) -> bool {
    match treewidth_bound(phi as f64, t as f64) {
        Some(b) if b > 0.0 => phi as f64 / b <= 1.0 + eps,
        _ => false,
    }
}

pub(crate) fn exact_or_advise(inst: &Instance, limits: &OracleLimits) -> Result<ReconfigSequence> {
    match solve_exact(inst, limits) {
        Ok(sol) => Ok(sol.seq),
        Err(Error::Capacity { found, limit, .. }) => Err(Error::Capacity {
            what: "exact branch size (a larger eps may avoid it)",
            found,
            limit,
        }),
        Err(e) => Err(e),
    }
}

/// Algorithm T when its guarantee reaches `opt / (1 + eps)`, the exact
/// solver otherwise.
pub fn solve_fptas(
    inst: &Instance,
    td: &TreeDecomposition,
    eps: f64,
    limits: &OracleLimits,
) -> Result<SchemeSolution> {
    check_eps(eps)?;
    if inst.ini == inst.tar {
        return Ok(SchemeSolution {
            seq: ReconfigSequence::single(inst.ini.clone()),
            branch: Branch::Exact,
        });
    }
    if separator_branch_suffices(inst.phi(), td.width() + 1, eps) {
        let r = algorithm_t(&inst.graph, td, &inst.ini, &inst.tar);
        return Ok(SchemeSolution {
            seq: r.seq,
            branch: Branch::AlgorithmT,
        });
    }
    Ok(SchemeSolution {
        seq: exact_or_advise(inst, limits)?,
        branch: Branch::Exact,
    })
}

/// Runs Algorithm T and the degeneracy algorithm, keeping the better value
/// (Algorithm T on ties).
pub fn solve_tw_combined(g: &Graph, td: &TreeDecomposition, ini: &VertexSet, tar: &VertexSet) -> Result<SchemeSolution> {
    let inst = Instance::new(g.clone(), ini.clone(), tar.clone())?;
    let t_seq = algorithm_t(g, td, ini, tar).seq;
    let d_seq = solve_degenerate(&inst);
    if d_seq.value()? > t_seq.value()? {
        Ok(SchemeSolution {
            seq: d_seq,
            branch: Branch::Degeneracy,
        })
    } else {
        Ok(SchemeSolution {
            seq: t_seq,
            branch: Branch::AlgorithmT,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::validate_sequence;

    #[test]
    fn branch_choice() {
        // 60 - 2(log_{1.5} 30 + 1) ≈ 41.2, ratio ≈ 1.46
        assert!(separator_branch_suffices(60, 2, 0.5));
        assert!(!separator_branch_suffices(2, 2, 0.1));
        assert!(!separator_branch_suffices(1, 2, 10.0));
    }

    #[test]
    fn rejects_bad_eps() {
        let inst = Instance::new(Graph::empty(2), [1].into(), [2].into()).unwrap();
        let td = TreeDecomposition::min_fill(&inst.graph);
        for eps in [0.0, -1.0, f64::NAN] {
            assert!(solve_fptas(&inst, &td, eps, &OracleLimits::default()).is_err());
        }
    }

    #[test]
    fn small_instances_go_exact() {
        let g = Graph::from_edges(4, [(1, 2), (2, 3), (3, 4)]).unwrap();
        let inst = Instance::new(g, [1, 3].into(), [2, 4].into()).unwrap();
        let td = TreeDecomposition::min_fill(&inst.graph);
        let sol = solve_fptas(&inst, &td, 0.1, &OracleLimits::default()).unwrap();
        assert_eq!(sol.branch, Branch::Exact);
        assert!(validate_sequence(&inst, &sol.seq).ok());
        assert_eq!(sol.seq.value().unwrap(), 1);
        let same = Instance::new(Graph::empty(2), [1, 2].into(), [1, 2].into()).unwrap();
        let sol = solve_fptas(&same, &TreeDecomposition::min_fill(&same.graph), 0.5, &OracleLimits::default()).unwrap();
        assert_eq!(sol.seq.value().unwrap(), 2);
    }

    #[test]
    fn combined_empty_ini() {
        let g = Graph::from_edges(3, [(1, 2)]).unwrap();
        let td = TreeDecomposition::min_fill(&g);
        let sol = solve_tw_combined(&g, &td, &VertexSet::new(), &[1, 3].into()).unwrap();
        assert_eq!(sol.seq.value().unwrap(), 0);
    }
}
