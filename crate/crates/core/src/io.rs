//! Graph file formats: plain edge lists and DIMACS.

use crate::error::{Error, Result};
use crate::graph::Graph;
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Dimacs,
}

pub fn parse_graph(text: &str, format: Format) -> Result<Graph> {
    match format {
        Format::EdgeList => parse_edge_list(text),
        Format::Dimacs => parse_dimacs(text),
    }
}

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// One `u v` pair per line, whitespace-separated non-negative integer labels,
/// `#` comments. Dense ids follow ascending numeric label order.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut label_edges: Vec<(u64, u64, usize)> = Vec::new();
    let mut labels: BTreeMap<u64, ()> = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut it = line.split_whitespace();
        let u: u64 = it
            .next()
            .unwrap()
            .parse()
            .map_err(|_| err(lineno, "expected non-negative integer vertex label"))?;
        let v: u64 = it
            .next()
            .ok_or_else(|| err(lineno, "expected two vertex labels"))?
            .parse()
            .map_err(|_| err(lineno, "expected non-negative integer vertex label"))?;
        if it.next().is_some() {
            return Err(err(lineno, "trailing tokens after edge"));
        }
        if u == v {
            return Err(err(lineno, format!("self-loop at vertex {u}")));
        }
        labels.insert(u, ());
        labels.insert(v, ());
        label_edges.push((u, v, lineno));
    }
    let label_list: Vec<u64> = labels.into_keys().collect();
    let id_of: BTreeMap<u64, usize> = label_list
        .iter()
        .enumerate()
        .map(|(i, &l)| (l, i))
        .collect();
    let n = label_list.len();
    let mut seen = std::collections::HashSet::new();
    let mut edges = Vec::with_capacity(label_edges.len());
    for (u, v, lineno) in label_edges {
        let (a, b) = (id_of[&u], id_of[&v]);
        let key = (a.min(b), a.max(b));
        if !seen.insert(key) {
            return Err(err(lineno, format!("duplicate edge {u} {v}")));
        }
        edges.push(key);
    }
    Ok(Graph::from_edges(n, &edges).with_labels(label_list))
}

/// Header `p edge n m`, edge lines `e u v` with 1-based ids, `c` comments.
pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut m_declared = 0usize;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks[0] {
            "p" => {
                if n.is_some() {
                    return Err(err(lineno, "duplicate problem line"));
                }
                if toks.len() != 4 || toks[1] != "edge" {
                    return Err(err(lineno, "expected 'p edge n m'"));
                }
                n = Some(
                    toks[2]
                        .parse()
                        .map_err(|_| err(lineno, "bad vertex count"))?,
                );
                m_declared = toks[3].parse().map_err(|_| err(lineno, "bad edge count"))?;
            }
            "e" => {
                let nn = n.ok_or_else(|| err(lineno, "edge before problem line"))?;
                if toks.len() != 3 {
                    return Err(err(lineno, "expected 'e u v'"));
                }
                let u: usize = toks[1].parse().map_err(|_| err(lineno, "bad vertex id"))?;
                let v: usize = toks[2].parse().map_err(|_| err(lineno, "bad vertex id"))?;
                if u == 0 || v == 0 || u > nn || v > nn {
                    return Err(err(lineno, format!("vertex out of range 1..={nn}")));
                }
                if u == v {
                    return Err(err(lineno, format!("self-loop at vertex {u}")));
                }
                let key = (u.min(v) - 1, u.max(v) - 1);
                if !seen.insert(key) {
                    return Err(err(lineno, format!("duplicate edge {u} {v}")));
                }
                edges.push(key);
            }
            other => return Err(err(lineno, format!("unknown line type '{other}'"))),
        }
    }
    let n = n.ok_or_else(|| err(0, "missing problem line"))?;
    if edges.len() != m_declared {
        return Err(err(
            0,
            format!("declared {m_declared} edges, found {}", edges.len()),
        ));
    }
    let labels = (1..=n as u64).collect();
    Ok(Graph::from_edges(n, &edges).with_labels(labels))
}

/// Emits `label_u label_v` lines sorted numerically with the smaller label
/// first, so parse . serialize is the identity on canonical inputs.
pub fn to_edge_list(g: &Graph) -> String {
    let mut lines: Vec<(u64, u64)> = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (g.label_of(u), g.label_of(v));
            (a.min(b), a.max(b))
        })
        .collect();
    lines.sort();
    let mut out = String::new();
    for (a, b) in lines {
        out.push_str(&format!("{a} {b}\n"));
    }
    out
}

/// Bit-exact DIMACS with sorted edge lines and 1-based ids.
pub fn to_dimacs(g: &Graph) -> String {
    let mut edges = g.edges();
    edges.sort();
    let mut out = format!("p edge {} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}
