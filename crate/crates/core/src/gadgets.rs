//! Instance generators from the hardness reductions, with the brute-force
//! and spectral audits used to check them.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bounds;
use crate::error::{Error, Result};
use crate::graph::{Graph, Instance, Vertex, VertexSet};

pub const DEFAULT_SIDE_LIMIT: usize = 14;
pub const DEFAULT_POWER_ITERATIONS: usize = 500;
pub const REJECTION_CAP: usize = 100_000;

const CEIL_TOLERANCE: f64 = 1e-9;

fn tolerant_ceil(x: f64) -> usize {
    (x - CEIL_TOLERANCE).ceil().max(0.0) as usize
}

pub fn complete(n: usize) -> Graph {
    let edges = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v)));
    Graph::from_edges(n, edges).expect("valid clique")
}

/// `K_{l,r}` with sides `1..=l` and `l+1..=l+r`.
pub fn complete_bipartite(l: usize, r: usize) -> Graph {
    let edges = (1..=l).flat_map(|u| (l + 1..=l + r).map(move |v| (u, v)));
    Graph::from_edges(l + r, edges)
        .and_then(|g| g.with_bipartition(VertexSet::range(1, l), VertexSet::range(l + 1, l + r)))
        .expect("valid biclique")
}

/// `G ⊎ K_{k,k}` with ini and tar the two biclique sides.
pub fn gen_union_biclique(g: &Graph, k: usize) -> Result<Instance> {
    if k == 0 {
        return Err(Error::invalid("biclique side k must be at least 1"));
    }
    let n = g.n();
    let h = g.disjoint_union(&complete_bipartite(k, k));
    Instance::new(h, VertexSet::range(n + 1, n + k), VertexSet::range(n + k + 1, n + 2 * k))
}

/// `⌈n^{1−2δ}⌉`.
pub fn padding_copies(n: usize, delta: f64) -> usize {
    tolerant_ceil((n as f64).powf(1.0 - 2.0 * delta))
}

/// `G` plus `⌈n^{1−2δ}⌉` disjoint copies of `K_n`.
pub fn gen_bandwidth_padding(g: &Graph, delta: f64) -> Result<Graph> {
    if !(delta > 0.0 && delta < 0.5) {
        return Err(Error::invalid(format!("delta must lie in (0, 1/2), got {delta}")));
    }
    if g.n() == 0 {
        return Err(Error::invalid("padding needs a non-empty graph"));
    }
    let clique = complete(g.n());
    let mut h = g.clone();
    for _ in 0..padding_copies(g.n(), delta) {
        h = h.disjoint_union(&clique);
    }
    Ok(h)
}

fn balanced_sides(g: &Graph) -> Result<(VertexSet, VertexSet)> {
    let (l, r) = g.bipartition().ok_or(Error::NotBipartite)?;
    if l.len() != r.len() {
        return Err(Error::invalid(format!("bipartition is unbalanced: {} vs {}", l.len(), r.len())));
    }
    Ok((l.clone(), r.clone()))
}

/// `(L, R, (L × R) \ E)` with ini = L and tar = R.
pub fn gen_bipartite_complement(g: &Graph) -> Result<Instance> {
    let (l, r) = balanced_sides(g)?;
    let edges: Vec<(Vertex, Vertex)> = l
        .iter()
        .flat_map(|u| r.iter().map(move |v| (u, v)))
        .filter(|&(u, v)| !g.has_edge(u, v))
        .collect();
    let h = Graph::from_edges(g.n(), edges)?.with_bipartition(l.clone(), r.clone())?;
    Instance::new(h, l, r)
}

fn configuration_pairing(m: usize, d: usize, rng: &mut ChaCha8Rng) -> Result<Vec<(Vertex, Vertex)>> {
    let left: Vec<Vertex> = (1..=m).flat_map(|u| std::iter::repeat_n(u, d)).collect();
    let mut right: Vec<Vertex> = (m + 1..=2 * m).flat_map(|v| std::iter::repeat_n(v, d)).collect();
    for _ in 0..REJECTION_CAP {
        right.shuffle(rng);
        let mut edges: Vec<(Vertex, Vertex)> = left.iter().copied().zip(right.iter().copied()).collect();
        edges.sort_unstable();
        if edges.windows(2).all(|w| w[0] != w[1]) {
            return Ok(edges);
        }
    }
    Err(Error::invalid(format!(
        "no simple {d}-regular pairing on {m}+{m} vertices within {REJECTION_CAP} draws"
    )))
}

/// Seeded `d`-regular bipartite graph on sides `1..=m` and `m+1..=2m` from
/// the configuration model, redrawn until simple. For `d > m/2` the
/// complement of an `(m−d)`-regular draw is returned.
pub fn gen_random_regular_bipartite(m: usize, d: usize, seed: u64) -> Result<Graph> {
    if m == 0 || d > m {
        return Err(Error::invalid(format!("need 1 <= m and d <= m, got m = {m}, d = {d}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sides = (VertexSet::range(1, m), VertexSet::range(m + 1, 2 * m));
    if 2 * d > m {
        let base = Graph::from_edges(2 * m, configuration_pairing(m, m - d, &mut rng)?)?
            .with_bipartition(sides.0.clone(), sides.1.clone())?;
        let flipped = gen_bipartite_complement(&base)?;
        return Ok(flipped.graph);
    }
    Graph::from_edges(2 * m, configuration_pairing(m, d, &mut rng)?)?.with_bipartition(sides.0, sides.1)
}

/// `2.01·√(Δ−1)/Δ` for `Δ ≥ 3`.
pub fn epsilon_delta(delta: usize) -> Result<f64> {
    if delta < 3 {
        return Err(Error::invalid(format!("regular degree must be at least 3, got {delta}")));
    }
    Ok(bounds::epsilon_delta(delta as f64))
}

fn side_masks(x: &Graph, limit: usize) -> Result<(Vec<Vertex>, Vec<Vertex>, Vec<u64>)> {
    let (l, r) = x.bipartition().ok_or(Error::NotBipartite)?;
    let side = l.len().max(r.len());
    if side > limit.min(63) {
        return Err(Error::Capacity {
            what: "bipartition side for exhaustive audit",
            found: side,
            limit,
        });
    }
    let lv: Vec<Vertex> = l.iter().collect();
    let rv: Vec<Vertex> = r.iter().collect();
    let nbr = lv
        .iter()
        .map(|&u| {
            rv.iter()
                .enumerate()
                .filter(|&(_, &w)| x.has_edge(u, w))
                .fold(0u64, |acc, (j, _)| acc | (1 << j))
        })
        .collect();
    Ok((lv, rv, nbr))
}

fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = u64> {
    (0u64..(1u64 << n)).filter(move |s| s.count_ones() as usize == k)
}

/// True iff no `S ⊆ L`, `T ⊆ R` with `|S|, |T| ≥ threshold` make `S ∪ T`
/// independent. Only `|S| = threshold` needs checking since the property
/// is monotone.
pub fn check_no_large_balanced_indep(x: &Graph, threshold: usize) -> Result<bool> {
    check_no_large_balanced_indep_limited(x, threshold, DEFAULT_SIDE_LIMIT)
}

pub fn check_no_large_balanced_indep_limited(x: &Graph, threshold: usize, limit: usize) -> Result<bool> {
    let (lv, rv, nbr) = side_masks(x, limit)?;
    if threshold > lv.len() || threshold > rv.len() {
        return Ok(true);
    }
    let full_r = (1u64 << rv.len()) - 1;
    for s in subsets_of_size(lv.len(), threshold) {
        let mut free = full_r;
        let mut rest = s;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            free &= !nbr[i];
        }
        if free.count_ones() as usize >= threshold {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq)]
pub struct MixingReport {
    pub holds: bool,
    pub violations: usize,
    /// Largest `|e(S,T) − d|S||T|/m| − λ√(|S||T|)` seen.
    pub worst_excess: f64,
}

/// Checks `|e(S,T) − d|S||T|/m| ≤ λ√(|S||T|)` over all non-empty `S ⊆ L`,
/// `T ⊆ R`. For fixed `S` and `|T|` the extremes of `e(S,T)` come from the
/// largest and smallest per-vertex counts, so only those are tested.
pub fn mixing_bound_check(x: &Graph, lambda: f64) -> Result<MixingReport> {
    let (lv, rv, nbr) = side_masks(x, DEFAULT_SIDE_LIMIT)?;
    let m = lv.len();
    if m == 0 || rv.len() != m {
        return Err(Error::invalid("mixing check needs two equal non-empty sides"));
    }
    let d = x.degree(lv[0]);
    if x.vertices().any(|v| x.degree(v) != d) {
        return Err(Error::invalid("mixing check needs a regular graph"));
    }
    let mut report = MixingReport {
        holds: true,
        violations: 0,
        worst_excess: f64::NEG_INFINITY,
    };
    let mut counts = vec![0usize; m];
    for s in 1u64..(1u64 << m) {
        counts.iter_mut().for_each(|c| *c = 0);
        let mut rest = s;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let mut hit = nbr[i];
            while hit != 0 {
                let j = hit.trailing_zeros() as usize;
                hit &= hit - 1;
                counts[j] += 1;
            }
        }
        counts.sort_unstable();
        let ss = s.count_ones() as f64;
        let (mut low, mut high) = (0usize, 0usize);
        for t in 1..=m {
            low += counts[t - 1];
            high += counts[m - t];
            let expected = d as f64 * ss * t as f64 / m as f64;
            let allowed = lambda * (ss * t as f64).sqrt();
            for e in [low, high] {
                let excess = (e as f64 - expected).abs() - allowed;
                report.worst_excess = report.worst_excess.max(excess);
                if excess > CEIL_TOLERANCE {
                    report.violations += 1;
                    report.holds = false;
                }
            }
        }
    }
    Ok(report)
}

/// Second-largest adjacency eigenvalue magnitude of a regular bipartite
/// graph, by power iteration on `A²` orthogonal to the two trivial
/// eigenvectors. A diagnostic estimate only.
pub fn estimate_lambda(x: &Graph, iterations: usize) -> Result<f64> {
    let (l, _) = x.bipartition().ok_or(Error::NotBipartite)?;
    let n = x.n();
    let sign: Vec<f64> = (1..=n).map(|v| if l.contains(v) { 1.0 } else { -1.0 }).collect();
    let ones = vec![1.0; n];
    let deflate = |v: &mut Vec<f64>| {
        for basis in [&ones, &sign] {
            let dot: f64 = v.iter().zip(basis.iter()).map(|(a, b)| a * b).sum();
            let norm: f64 = basis.iter().map(|b| b * b).sum();
            v.iter_mut().zip(basis.iter()).for_each(|(a, b)| *a -= dot / norm * b);
        }
    };
    let apply = |v: &[f64]| -> Vec<f64> {
        (1..=n).map(|u| x.neighbors(u).iter().map(|&w| v[w - 1]).sum()).collect()
    };
    let norm = |v: &[f64]| v.iter().map(|a| a * a).sum::<f64>().sqrt();
    let mut v: Vec<f64> = (0..n).map(|i| ((i * 7919 + 13) % 1009) as f64 / 1009.0 - 0.5).collect();
    deflate(&mut v);
    let mut estimate = 0.0;
    for _ in 0..iterations.max(1) {
        let len = norm(&v);
        if len < 1e-300 {
            return Ok(0.0);
        }
        v.iter_mut().for_each(|a| *a /= len);
        let av = apply(&v);
        estimate = norm(&av);
        let mut next = apply(&av);
        deflate(&mut next);
        v = next;
    }
    Ok(estimate)
}

#[derive(Clone, Debug)]
pub struct DegreeGadget {
    pub instance: Instance,
    pub m: usize,
}

/// `m = max(Δ, ⌈(log₂Δ/√Δ)·n⌉)`.
pub fn degree_gadget_side(n: usize, delta: usize) -> usize {
    let d = delta as f64;
    delta.max(tolerant_ceil(d.log2() / d.sqrt() * n as f64))
}

/// `G ⊎ X` with `X` a random `Δ`-regular bipartite graph on `m + m`
/// vertices; ini and tar are the two sides of `X`.
pub fn gen_degree_gadget(g: &Graph, delta: usize, seed: u64) -> Result<DegreeGadget> {
    epsilon_delta(delta)?;
    let n = g.n();
    let m = degree_gadget_side(n, delta);
    let x = gen_random_regular_bipartite(m, delta, seed)?;
    let h = g.disjoint_union(&x);
    let instance = Instance::new(h, VertexSet::range(n + 1, n + m), VertexSet::range(n + m + 1, n + 2 * m))?;
    Ok(DegreeGadget { instance, m })
}
