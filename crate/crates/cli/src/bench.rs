use std::collections::BTreeMap;
use std::time::Instant;

use anyhow::{Context, Result};
use mmisr::exact::equalize;
use mmisr::families::{independent_pairs_up_to_symmetry, nonisomorphic_graphs, random_independent_set, random_tree, rng};
use mmisr::format::parse_instance;
use mmisr::oracle::opt_exact;
use mmisr::{validate_sequence, Instance};
use rayon::prelude::*;

use crate::algos::{self, Algo, Options};

pub const HEADER: [&str; 10] = [
    "instance",
    "n",
    "m",
    "algorithm",
    "value",
    "opt",
    "bound",
    "valid",
    "runtime_ms",
    "seed",
];

pub const SMALL_EXHAUSTIVE_MAX_N: usize = 6;
pub const TREES_COUNT: usize = 20;
pub const TREES_N: usize = 200;
pub const TREES_SET_SIZE: usize = 60;

#[derive(Clone, Debug)]
pub struct BenchInstance {
    pub id: String,
    pub inst: Instance,
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub instance: String,
    pub n: usize,
    pub m: usize,
    pub algorithm: Algo,
    pub value: Option<usize>,
    pub opt: Option<usize>,
    pub bound: Option<f64>,
    /// Validation verdict, or the error that stopped the run.
    pub valid: std::result::Result<bool, String>,
    pub runtime_ms: Option<f64>,
    pub seed: Option<u64>,
}

/// All graphs up to isomorphism with `n ≤ 6`, each with one ordered
/// `(ini, tar)` pair per automorphism orbit.
pub fn small_exhaustive() -> Vec<BenchInstance> {
    let mut out = Vec::new();
    for n in 0..=SMALL_EXHAUSTIVE_MAX_N {
        for (gi, g) in nonisomorphic_graphs(n).expect("n within enumeration cap").into_iter().enumerate() {
            for (a, b) in independent_pairs_up_to_symmetry(&g).expect("small graph") {
                let id = format!("n{n}-g{gi:03}-{:02x}-{:02x}", a.to_mask(), b.to_mask());
                let inst = Instance::new(g.clone(), a, b).expect("independent pair");
                out.push(BenchInstance { id, inst, seed: None });
            }
        }
    }
    out
}

/// Random trees on 200 vertices with equal-size random independent sets.
pub fn trees_200(seed: u64) -> Vec<BenchInstance> {
    (0..TREES_COUNT)
        .map(|i| {
            let s = seed.wrapping_add(i as u64);
            let mut r = rng(s);
            let g = random_tree(TREES_N, &mut r);
            let ini = random_independent_set(&g, TREES_SET_SIZE, &mut r);
            let tar = random_independent_set(&g, TREES_SET_SIZE, &mut r);
            let (ini, tar) = equalize(&ini, &tar);
            BenchInstance {
                id: format!("tree200-{i:02}"),
                inst: Instance::new(g, ini, tar).expect("independent sets"),
                seed: Some(s),
            }
        })
        .collect()
}

pub fn from_glob(pattern: &str) -> Result<Vec<BenchInstance>> {
    let mut out = Vec::new();
    for entry in glob::glob(pattern).with_context(|| format!("bad glob pattern {pattern:?}"))? {
        let path = entry?;
        let text = std::fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
        let inst = parse_instance(&text).with_context(|| format!("parsing {}", path.display()))?;
        out.push(BenchInstance {
            id: path.display().to_string(),
            inst,
            seed: None,
        });
    }
    Ok(out)
}

pub fn suite(name: &str, seed: u64) -> Result<Vec<BenchInstance>> {
    match name {
        "small-exhaustive" => Ok(small_exhaustive()),
        "trees-200" => Ok(trees_200(seed)),
        pattern => from_glob(pattern),
    }
}

pub fn default_algos(suite: &str) -> Vec<Algo> {
    match suite {
        "trees-200" => vec![Algo::Degeneracy, Algo::Treewidth, Algo::Combined],
        _ => Algo::CONCRETE.to_vec(),
    }
}

fn rows_for(b: &BenchInstance, algos: &[Algo], opts: &Options, timing: bool) -> Vec<BenchRow> {
    let inst = &b.inst;
    let opt = opts
        .limits
        .admits(&inst.graph)
        .then(|| opt_exact(inst, &opts.limits).ok().map(|(o, _)| o))
        .flatten();
    algos
        .iter()
        .map(|&algo| {
            let start = Instant::now();
            let result = algos::run(inst, algo, opts);
            let elapsed = start.elapsed().as_secs_f64() * 1000.0;
            let mut row = BenchRow {
                instance: b.id.clone(),
                n: inst.graph.n(),
                m: inst.graph.edge_count(),
                algorithm: algo,
                value: None,
                opt,
                bound: None,
                valid: Err(String::new()),
                runtime_ms: timing.then_some(elapsed),
                seed: b.seed,
            };
            match result {
                Ok(out) => {
                    let value = out.value();
                    row.value = Some(value);
                    row.bound = out.guarantee.bound(value, opt);
                    row.valid = Ok(validate_sequence(inst, &out.seq).ok());
                }
                Err(e) => row.valid = Err(e.to_string()),
            }
            row
        })
        .collect()
}

/// Runs every algorithm on every instance; rows come back sorted by
/// instance id, then algorithm.
pub fn run_rows(instances: &[BenchInstance], algos: &[Algo], opts: &Options, timing: bool) -> Vec<BenchRow> {
    let mut rows: Vec<BenchRow> = instances
        .par_iter()
        .flat_map_iter(|b| rows_for(b, algos, opts, timing))
        .collect();
    rows.sort_by(|a, b| (&a.instance, a.algorithm.name()).cmp(&(&b.instance, b.algorithm.name())));
    rows
}

fn fmt_f64(x: f64) -> String {
    if x.fract() == 0.0 && x.abs() < 1e15 {
        format!("{}", x as i64)
    } else {
        format!("{x:.4}")
    }
}

fn opt_field<T: ToString>(x: Option<T>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

/// `opt / value` per algorithm, over rows where both are known.
pub fn worst_ratios(rows: &[BenchRow]) -> BTreeMap<&'static str, f64> {
    let mut worst = BTreeMap::new();
    for row in rows {
        let (Some(v), Some(o)) = (row.value, row.opt) else {
            continue;
        };
        let ratio = match (o, v) {
            (0, _) => 1.0,
            (_, 0) => f64::INFINITY,
            _ => o as f64 / v as f64,
        };
        let e = worst.entry(row.algorithm.name()).or_insert(1.0f64);
        *e = e.max(ratio);
    }
    worst
}

pub fn to_csv(rows: &[BenchRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(HEADER)?;
    for r in rows {
        let valid = match &r.valid {
            Ok(v) => v.to_string(),
            Err(e) => format!("error: {e}"),
        };
        w.write_record([
            r.instance.clone(),
            r.n.to_string(),
            r.m.to_string(),
            r.algorithm.name().to_owned(),
            opt_field(r.value),
            opt_field(r.opt),
            r.bound.map(fmt_f64).unwrap_or_default(),
            valid,
            r.runtime_ms.map(|t| format!("{t:.3}")).unwrap_or_default(),
            opt_field(r.seed),
        ])?;
    }
    let mut out = String::from_utf8(w.into_inner()?)?;
    if !rows.is_empty() {
        for (algo, ratio) in worst_ratios(rows) {
            out.push_str(&format!("# worst_ratio {algo} {}\n", fmt_f64(ratio)));
        }
    }
    Ok(out)
}
