use anyhow::{Context, Result};
use clap::{Args, Subcommand};
use mmisr::families::{gnp, grid, random_instance, random_tree, rng, SeededRng};
use mmisr::format::{parse_graph, parse_instance, write_graph, write_instance};
use mmisr::gadgets::{gen_bandwidth_padding, gen_bipartite_complement, gen_degree_gadget, gen_union_biclique};
use mmisr::Graph;

use crate::UsageError;

#[derive(Subcommand, Debug)]
pub enum GenKind {
    /// G plus K_{k,k}, with ini and tar the biclique sides.
    UnionBiclique {
        #[arg(long)]
        input: String,
        #[arg(long)]
        k: usize,
    },
    /// Bipartite complement of a balanced tagged bipartite graph.
    BipartiteComplement {
        #[arg(long)]
        input: String,
    },
    /// G plus ceil(n^(1-2 delta)) disjoint copies of K_n.
    BandwidthPad {
        #[arg(long)]
        input: String,
        #[arg(long)]
        delta: f64,
    },
    /// G plus a random Delta-regular bipartite graph.
    DegreeGadget {
        #[arg(long)]
        input: String,
        #[arg(long = "delta-reg")]
        delta_reg: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
    RandomGnp {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        seed: Option<u64>,
        #[command(flatten)]
        sets: SetArgs,
    },
    RandomTree {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: Option<u64>,
        #[command(flatten)]
        sets: SetArgs,
    },
    Grid {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        #[arg(long)]
        seed: Option<u64>,
        #[command(flatten)]
        sets: SetArgs,
    },
}

#[derive(Args, Debug)]
pub struct SetArgs {
    /// Emit an instance with random ini/tar of at most this size instead
    /// of a bare graph.
    #[arg(long)]
    set_size: Option<usize>,
}

fn read_graph(path: &str) -> Result<Graph> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
    let is_instance = text.lines().any(|l| l.split_whitespace().take(2).eq(["p", "misr"]));
    let g = if is_instance {
        parse_instance(&text).map(|i| i.graph)
    } else {
        parse_graph(&text)
    };
    g.with_context(|| format!("parsing {path}"))
}

fn need_seed(seed: Option<u64>) -> Result<u64> {
    seed.ok_or_else(|| UsageError("--seed is required for randomized generators".into()).into())
}

fn graph_or_instance(g: Graph, sets: &SetArgs, r: Option<&mut SeededRng>) -> Result<String> {
    match (sets.set_size, r) {
        (None, _) => Ok(write_graph(&g)),
        (Some(size), Some(r)) => Ok(write_instance(&random_instance(g, size, r))),
        (Some(_), None) => need_seed(None).map(|_| String::new()),
    }
}

pub fn generate(kind: &GenKind) -> Result<String> {
    Ok(match kind {
        GenKind::UnionBiclique { input, k } => write_instance(&gen_union_biclique(&read_graph(input)?, *k)?),
        GenKind::BipartiteComplement { input } => write_instance(&gen_bipartite_complement(&read_graph(input)?)?),
        GenKind::BandwidthPad { input, delta } => write_graph(&gen_bandwidth_padding(&read_graph(input)?, *delta)?),
        GenKind::DegreeGadget { input, delta_reg, seed } => {
            if *delta_reg < 3 {
                return Err(UsageError(format!("--delta-reg must be at least 3, got {delta_reg}")).into());
            }
            let seed = need_seed(*seed)?;
            write_instance(&gen_degree_gadget(&read_graph(input)?, *delta_reg, seed)?.instance)
        }
        GenKind::RandomGnp { n, p, seed, sets } => {
            if !(0.0..=1.0).contains(p) {
                return Err(UsageError(format!("--p must lie in [0, 1], got {p}")).into());
            }
            let mut r = rng(need_seed(*seed)?);
            let g = gnp(*n, *p, &mut r);
            graph_or_instance(g, sets, Some(&mut r))?
        }
        GenKind::RandomTree { n, seed, sets } => {
            let mut r = rng(need_seed(*seed)?);
            let g = random_tree(*n, &mut r);
            graph_or_instance(g, sets, Some(&mut r))?
        }
        GenKind::Grid { rows, cols, seed, sets } => {
            let mut r = seed.map(rng);
            graph_or_instance(grid(*rows, *cols), sets, r.as_mut())?
        }
    })
}
