//! Line-oriented text formats for instances, graphs, tree decompositions and
//! reconfiguration sequences.
//!
//! All parsers skip blank lines and `c` comment lines and report the 1-based
//! line number of the first malformed line.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, Instance, ReconfigSequence, Vertex, VertexSet};
use crate::treewidth::TreeDecomposition;

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines {
            inner: text.lines().enumerate(),
        }
    }
}

impl<'a> Iterator for Lines<'a> {
    type Item = (usize, Vec<&'a str>);

    fn next(&mut self) -> Option<Self::Item> {
        for (i, line) in self.inner.by_ref() {
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match tokens.first() {
                None => continue,
                Some(&"c") => continue,
                Some(_) => return Some((i + 1, tokens)),
            }
        }
        None
    }
}

fn number(line: usize, tok: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::parse(line, format!("expected a non-negative integer, found {tok:?}")))
}

fn vertex(line: usize, tok: &str, n: usize) -> Result<Vertex> {
    let v = number(line, tok)?;
    if v == 0 || v > n {
        return Err(Error::parse(line, format!("vertex {v} out of range 1..={n}")));
    }
    Ok(v)
}

fn vertex_list(line: usize, toks: &[&str], n: usize) -> Result<VertexSet> {
    let mut set = VertexSet::new();
    for tok in toks {
        if !set.insert(vertex(line, tok, n)?) {
            return Err(Error::parse(line, format!("duplicate vertex {tok}")));
        }
    }
    Ok(set)
}

fn join(set: &VertexSet) -> String {
    set.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn keyword_line(out: &mut String, key: &str, set: &VertexSet) {
    if set.is_empty() {
        out.push_str(key);
    } else {
        let _ = write!(out, "{key} {}", join(set));
    }
    out.push('\n');
}

// shared body of the instance and graph grammars
struct GraphText {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    bip: Option<(usize, usize)>,
    ini: Option<(usize, VertexSet)>,
    tar: Option<(usize, VertexSet)>,
}

fn parse_graph_body(text: &str, kind: &str, allow_sets: bool) -> Result<GraphText> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut body = GraphText {
        n: 0,
        edges: Vec::new(),
        bip: None,
        ini: None,
        tar: None,
    };
    let mut last_line = 0;
    for (line, toks) in Lines::new(text) {
        last_line = line;
        if header.is_none() {
            if toks.len() != 4 || toks[0] != "p" || toks[1] != kind {
                return Err(Error::parse(line, format!("expected header `p {kind} <n> <m>`")));
            }
            let n = number(line, toks[2])?;
            let m = number(line, toks[3])?;
            header = Some((n, m, line));
            body.n = n;
            continue;
        }
        let n = body.n;
        match toks[0] {
            "e" => {
                if toks.len() != 3 {
                    return Err(Error::parse(line, "edge line needs exactly two endpoints"));
                }
                let u = vertex(line, toks[1], n)?;
                let v = vertex(line, toks[2], n)?;
                if u == v {
                    return Err(Error::parse(line, format!("self-loop on vertex {u}")));
                }
                body.edges.push((u, v));
            }
            "bip" => {
                if toks.len() != 2 || body.bip.is_some() {
                    return Err(Error::parse(line, "expected a single `bip <|L|>` line"));
                }
                let l = number(line, toks[1])?;
                if l > n {
                    return Err(Error::parse(line, format!("bipartition side {l} exceeds n = {n}")));
                }
                body.bip = Some((line, l));
            }
            "ini" | "tar" if allow_sets => {
                let set = vertex_list(line, &toks[1..], n)?;
                let slot = if toks[0] == "ini" { &mut body.ini } else { &mut body.tar };
                if slot.is_some() {
                    return Err(Error::parse(line, format!("duplicate `{}` line", toks[0])));
                }
                *slot = Some((line, set));
            }
            other => return Err(Error::parse(line, format!("unexpected line type {other:?}"))),
        }
    }
    let Some((_, m, header_line)) = header else {
        return Err(Error::parse(last_line.max(1), format!("missing `p {kind}` header")));
    };
    if body.edges.len() != m {
        return Err(Error::parse(
            header_line,
            format!("header declares {m} edges but {} edge lines follow", body.edges.len()),
        ));
    }
    Ok(body)
}

fn build_graph(body: &GraphText) -> Result<Graph> {
    let g = Graph::from_edges(body.n, body.edges.iter().copied())?;
    match body.bip {
        None => Ok(g),
        Some((line, l)) => g
            .with_bipartition(VertexSet::range(1, l), VertexSet::range(l + 1, body.n))
            .map_err(|e| Error::parse(line, e.to_string())),
    }
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    build_graph(&parse_graph_body(text, "gr", false)?)
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let body = parse_graph_body(text, "misr", true)?;
    let g = build_graph(&body)?;
    let mut sets = Vec::with_capacity(2);
    for (key, slot) in [("ini", &body.ini), ("tar", &body.tar)] {
        let Some((line, set)) = slot else {
            return Err(Error::parse(text.lines().count().max(1), format!("missing `{key}` line")));
        };
        if !g.is_independent_unchecked(set) {
            return Err(Error::parse(*line, format!("`{key}` is not an independent set")));
        }
        sets.push(set.clone());
    }
    let tar = sets.pop().expect("two sets");
    let ini = sets.pop().expect("two sets");
    Instance::new(g, ini, tar)
}

// `bip` is only expressible when L = {1..|L|}
fn bip_prefix(g: &Graph) -> Option<usize> {
    let (l, _) = g.bipartition()?;
    (l.last().unwrap_or(0) == l.len()).then_some(l.len())
}

fn write_graph_body(out: &mut String, g: &Graph, kind: &str) {
    let _ = writeln!(out, "p {kind} {} {}", g.n(), g.edge_count());
    if let Some(l) = bip_prefix(g) {
        let _ = writeln!(out, "bip {l}");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {u} {v}");
    }
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    write_graph_body(&mut out, g, "gr");
    out
}

pub fn write_instance(inst: &Instance) -> String {
    let mut out = String::new();
    write_graph_body(&mut out, &inst.graph, "misr");
    keyword_line(&mut out, "ini", &inst.ini);
    keyword_line(&mut out, "tar", &inst.tar);
    out
}

/// Parses a PACE-style decomposition. Vertex ids are checked against the
/// declared vertex count only; coverage is checked by `validate`.
pub fn parse_td(text: &str) -> Result<TreeDecomposition> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut bags: Vec<Option<VertexSet>> = Vec::new();
    let mut tree_edges = Vec::new();
    let mut last_line = 0;
    for (line, toks) in Lines::new(text) {
        last_line = line;
        let Some((count, declared, n)) = header else {
            if toks.len() != 5 || toks[0] != "s" || toks[1] != "td" {
                return Err(Error::parse(line, "expected header `s td <#bags> <width+1> <n>`"));
            }
            let count = number(line, toks[2])?;
            header = Some((count, number(line, toks[3])?, number(line, toks[4])?));
            bags = vec![None; count];
            continue;
        };
        if toks[0] == "b" {
            if toks.len() < 2 {
                return Err(Error::parse(line, "bag line needs an id"));
            }
            let id = number(line, toks[1])?;
            if id == 0 || id > count {
                return Err(Error::parse(line, format!("bag id {id} out of range 1..={count}")));
            }
            if bags[id - 1].is_some() {
                return Err(Error::parse(line, format!("bag {id} defined twice")));
            }
            let bag = vertex_list(line, &toks[2..], n)?;
            if bag.len() > declared {
                return Err(Error::parse(
                    line,
                    format!("bag {id} has {} vertices, header allows {declared}", bag.len()),
                ));
            }
            bags[id - 1] = Some(bag);
        } else {
            if toks.len() != 2 {
                return Err(Error::parse(line, "tree edge line needs exactly two bag ids"));
            }
            let a = number(line, toks[0])?;
            let b = number(line, toks[1])?;
            for x in [a, b] {
                if x == 0 || x > count {
                    return Err(Error::parse(line, format!("bag id {x} out of range 1..={count}")));
                }
            }
            tree_edges.push((a - 1, b - 1));
        }
    }
    if header.is_none() {
        return Err(Error::parse(last_line.max(1), "missing `s td` header"));
    }
    let bags = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or_else(|| Error::parse(last_line, format!("bag {} never defined", i + 1))))
        .collect::<Result<Vec<_>>>()?;
    Ok(TreeDecomposition { bags, tree_edges })
}

pub fn write_td(td: &TreeDecomposition, n: usize) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "s td {} {} {}", td.bags.len(), td.width() + 1, n);
    for (i, bag) in td.bags.iter().enumerate() {
        if bag.is_empty() {
            let _ = writeln!(out, "b {}", i + 1);
        } else {
            let _ = writeln!(out, "b {} {}", i + 1, join(bag));
        }
    }
    for &(a, b) in &td.tree_edges {
        let _ = writeln!(out, "{} {}", a + 1, b + 1);
    }
    out
}

/// Parses `step` lines. Vertex ranges are checked later against an instance.
pub fn parse_sequence(text: &str) -> Result<ReconfigSequence> {
    let mut steps = Vec::new();
    for (line, toks) in Lines::new(text) {
        if toks[0] != "step" {
            return Err(Error::parse(line, format!("expected `step`, found {:?}", toks[0])));
        }
        let mut set = VertexSet::new();
        for tok in &toks[1..] {
            let v = number(line, tok)?;
            if v == 0 || !set.insert(v) {
                return Err(Error::parse(line, format!("bad or duplicate vertex {tok}")));
            }
        }
        steps.push(set);
    }
    Ok(ReconfigSequence::new(steps))
}

pub fn write_sequence(seq: &ReconfigSequence) -> String {
    let mut out = String::new();
    for step in seq.steps() {
        keyword_line(&mut out, "step", step);
    }
    out
}
