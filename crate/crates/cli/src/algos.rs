use clap::ValueEnum;
use mmisr::baker::solve_baker;
use mmisr::bounds::{degeneracy_bound, scheme_bound, treewidth_bound};
use mmisr::degeneracy::solve_degenerate;
use mmisr::exact::solve_exact;
use mmisr::general::solve_general;
use mmisr::oracle::{opt_exact, OracleLimits};
use mmisr::traversal::degeneracy_ordering;
use mmisr::treewidth::{algorithm_t, obtain_td, solve_fptas, solve_tw_combined, Branch, TreeDecomposition};
use mmisr::{Instance, ReconfigSequence};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, ValueEnum)]
pub enum Algo {
    Auto,
    General,
    Degeneracy,
    Treewidth,
    Combined,
    Fptas,
    Baker,
    Exact,
    Oracle,
}

impl Algo {
    pub const CONCRETE: [Algo; 8] = [
        Algo::General,
        Algo::Degeneracy,
        Algo::Treewidth,
        Algo::Combined,
        Algo::Fptas,
        Algo::Baker,
        Algo::Exact,
        Algo::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algo::Auto => "auto",
            Algo::General => "general",
            Algo::Degeneracy => "degeneracy",
            Algo::Treewidth => "treewidth",
            Algo::Combined => "combined",
            Algo::Fptas => "fptas",
            Algo::Baker => "baker",
            Algo::Exact => "exact",
            Algo::Oracle => "oracle",
        }
    }
}

/// What the algorithm promises, in terms of `opt` where that is needed.
#[derive(Clone, Copy, Debug)]
pub enum Guarantee {
    Optimal,
    General { ell: usize, gamma: usize },
    Degeneracy { phi: usize, d: usize },
    Treewidth { phi: usize, t: usize },
    Combined { phi: usize, t: usize, d: usize },
    /// `certified` is what the chosen branch proves without knowing `opt`.
    Scheme { eps: f64, certified: Option<f64> },
}

impl Guarantee {
    /// Lower bound on the returned value: from `opt` when it is known,
    /// otherwise from quantities the run itself certifies.
    pub fn bound(&self, value: usize, opt: Option<usize>) -> Option<f64> {
        let tw = |phi: usize, t: usize| treewidth_bound(phi as f64, t as f64);
        match *self {
            Guarantee::Optimal => Some(opt.unwrap_or(value) as f64),
            Guarantee::General { ell, gamma } => {
                Some(opt.map_or(gamma, |o| o.div_ceil(ell.max(1))) as f64)
            }
            Guarantee::Degeneracy { phi, d } => {
                Some(degeneracy_bound(opt.unwrap_or(phi) as f64, d as f64))
            }
            Guarantee::Treewidth { phi, t } => tw(phi, t),
            Guarantee::Combined { phi, t, d } => {
                let deg = degeneracy_bound(opt.unwrap_or(phi) as f64, d as f64);
                Some(tw(phi, t).map_or(deg, |b| b.max(deg)))
            }
            Guarantee::Scheme { eps, certified } => match opt {
                Some(o) => Some(scheme_bound(o as f64, eps)),
                None => certified,
            },
        }
    }
}

#[derive(Clone, Debug)]
pub struct Options {
    pub eps: f64,
    pub td: Option<TreeDecomposition>,
    pub limits: OracleLimits,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            eps: 1.0,
            td: None,
            limits: OracleLimits::default(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Outcome {
    /// The algorithm that produced `seq`; never `Auto`.
    pub algo: Algo,
    pub seq: ReconfigSequence,
    pub guarantee: Guarantee,
}

impl Outcome {
    pub fn value(&self) -> usize {
        self.seq.value().expect("solver output is non-empty")
    }
}

fn td_for(inst: &Instance, opts: &Options) -> mmisr::Result<TreeDecomposition> {
    obtain_td(&inst.graph, opts.td.clone())
}

pub fn run(inst: &Instance, algo: Algo, opts: &Options) -> mmisr::Result<Outcome> {
    let phi = inst.phi();
    let degeneracy = || degeneracy_ordering(&inst.graph).d;
    let out = |algo, seq, guarantee| Outcome { algo, seq, guarantee };
    Ok(match algo {
        Algo::Auto => return run_auto(inst, opts),
        Algo::General => {
            let sol = solve_general(inst)?;
            let g = Guarantee::General {
                ell: sol.ell,
                gamma: sol.gamma,
            };
            out(algo, sol.seq, g)
        }
        Algo::Degeneracy => out(algo, solve_degenerate(inst), Guarantee::Degeneracy { phi, d: degeneracy() }),
        Algo::Treewidth => {
            let td = td_for(inst, opts)?;
            let t = td.width() + 1;
            let seq = algorithm_t(&inst.graph, &td, &inst.ini, &inst.tar).seq;
            out(algo, seq, Guarantee::Treewidth { phi, t })
        }
        Algo::Combined => {
            let td = td_for(inst, opts)?;
            let t = td.width() + 1;
            let sol = solve_tw_combined(&inst.graph, &td, &inst.ini, &inst.tar)?;
            out(algo, sol.seq, Guarantee::Combined { phi, t, d: degeneracy() })
        }
        Algo::Fptas => {
            let td = td_for(inst, opts)?;
            let t = td.width() + 1;
            let sol = solve_fptas(inst, &td, opts.eps, &opts.limits)?;
            let certified = match sol.branch {
                Branch::AlgorithmT => treewidth_bound(phi as f64, t as f64),
                _ => sol.seq.value().ok().map(|v| v as f64),
            };
            out(algo, sol.seq, Guarantee::Scheme { eps: opts.eps, certified })
        }
        Algo::Baker => {
            let sol = solve_baker(inst, opts.eps, &opts.limits)?;
            let certified = match sol.branch {
                Branch::AlgorithmT => treewidth_bound(sol.residual_phi as f64, (sol.residual_width + 1) as f64),
                _ => sol.seq.value().ok().map(|v| v as f64),
            };
            out(algo, sol.seq, Guarantee::Scheme { eps: opts.eps, certified })
        }
        Algo::Exact => out(algo, solve_exact(inst, &opts.limits)?.seq, Guarantee::Optimal),
        Algo::Oracle => out(algo, opt_exact(inst, &opts.limits)?.1, Guarantee::Optimal),
    })
}

fn run_auto(inst: &Instance, opts: &Options) -> mmisr::Result<Outcome> {
    if opts.limits.admits(&inst.graph) {
        match run(inst, Algo::Exact, opts) {
            Err(e) if e.is_capacity() => {}
            other => return other,
        }
    }
    match run(inst, Algo::Combined, opts) {
        Err(e) if e.is_capacity() => run(inst, Algo::Degeneracy, opts),
        other => other,
    }
}
