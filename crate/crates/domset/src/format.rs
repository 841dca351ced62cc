//! Text formats.
//!
//! Graphs use a line-oriented edge list:
//!
//! ```text
//! c optional comment
//! p <n> <m>
//! b <n1>          (optional: parts 0..n1-1 and n1..n-1)
//! e <u> <v>       (exactly m lines, 0-based, u < v)
//! ```
//!
//! Vertex sets (witnesses) are one decimal id per line.

use std::fmt::Write as _;

use domset_core::gadgets::{Construction, GadgetReduction};
use domset_core::graph::{Bipartition, Graph, VertexSet};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Line { line: usize, msg: String },
    #[error("missing `p <n> <m>` header")]
    MissingHeader,
    #[error("header declares {declared} edges, found {found}")]
    EdgeCount { declared: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] domset_core::Error),
}

fn line_err(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Line { line, msg: msg.into() }
}

/// A parsed graph file; `left_part` is `Some(n1)` when a `b` line was present.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedGraph {
    pub graph: Graph,
    pub left_part: Option<usize>,
}

impl ParsedGraph {
    pub fn bipartition(&self) -> Option<Result<Bipartition, domset_core::Error>> {
        self.left_part.map(|n1| Bipartition::from_prefix(self.graph.n(), n1))
    }
}

fn numbers<const N: usize>(line: usize, rest: &[&str]) -> Result<[usize; N], FormatError> {
    if rest.len() != N {
        return Err(line_err(line, format!("expected {N} fields, found {}", rest.len())));
    }
    let mut out = [0; N];
    for (slot, tok) in out.iter_mut().zip(rest) {
        *slot = tok.parse().map_err(|_| line_err(line, format!("`{tok}` is not a vertex count or id")))?;
    }
    Ok(out)
}

pub fn parse_edge_list(text: &str) -> Result<ParsedGraph, FormatError> {
    let mut header: Option<(usize, usize)> = None;
    let mut left_part = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let fields: Vec<&str> = raw.split_whitespace().collect();
        let Some((&tag, rest)) = fields.split_first() else { continue };
        match tag {
            "c" => {}
            "p" => {
                if header.is_some() {
                    return Err(line_err(line, "second `p` line"));
                }
                let [n, m] = numbers(line, rest)?;
                header = Some((n, m));
            }
            "b" => {
                let Some((n, _)) = header else { return Err(line_err(line, "`b` before `p`")) };
                if left_part.is_some() {
                    return Err(line_err(line, "second `b` line"));
                }
                let [n1] = numbers(line, rest)?;
                if n1 > n {
                    return Err(line_err(line, format!("part size {n1} exceeds n = {n}")));
                }
                left_part = Some(n1);
            }
            "e" => {
                let Some((n, _)) = header else { return Err(line_err(line, "`e` before `p`")) };
                let [u, v] = numbers(line, rest)?;
                if u >= n || v >= n {
                    return Err(line_err(line, format!("endpoint out of range for n = {n}")));
                }
                if u >= v {
                    return Err(line_err(line, format!("edge endpoints must satisfy u < v, got {u} {v}")));
                }
                edges.push((u, v));
            }
            other => return Err(line_err(line, format!("unknown line type `{other}`"))),
        }
    }
    let (n, m) = header.ok_or(FormatError::MissingHeader)?;
    if edges.len() != m {
        return Err(FormatError::EdgeCount { declared: m, found: edges.len() });
    }
    let graph = Graph::new(n, edges)?;
    if let Some(n1) = left_part {
        Bipartition::from_prefix(n, n1)?.validate(&graph)?;
    }
    Ok(ParsedGraph { graph, left_part })
}

pub fn read_edge_list(text: &str) -> Result<Graph, FormatError> {
    parse_edge_list(text).map(|p| p.graph)
}

pub fn write_edge_list(g: &Graph) -> String {
    write_edge_list_with_parts(g, None)
}

/// Edges are written in lexicographic order, so equal graphs give equal text.
pub fn write_edge_list_with_parts(g: &Graph, left_part: Option<usize>) -> String {
    let mut out = format!("p {} {}\n", g.n(), g.m());
    if let Some(n1) = left_part {
        writeln!(out, "b {n1}").unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    out
}

/// One vertex id per line; blank lines and `c` comments are skipped.
pub fn parse_vertex_list(text: &str, n: usize) -> Result<VertexSet, FormatError> {
    let mut ids = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let t = raw.trim();
        if t.is_empty() || t.starts_with('c') {
            continue;
        }
        ids.push(t.parse().map_err(|_| line_err(i + 1, format!("`{t}` is not a vertex id")))?);
    }
    Ok(VertexSet::new(n, ids)?)
}

pub fn write_vertex_list(set: &VertexSet) -> String {
    set.iter().map(|v| format!("{v}\n")).collect()
}

/// One non-negative integer per line.
pub fn parse_demand_vector(text: &str) -> Result<Vec<u32>, FormatError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            l.trim()
                .parse()
                .map_err(|_| line_err(i + 1, format!("`{}` is not a non-negative integer", l.trim())))
        })
        .collect()
}

/// `key=value` description of a reduction. Group ranges are half-open:
/// `group.K1=6..8` means ids 6 and 7.
pub fn write_metadata(red: &GadgetReduction) -> String {
    let mut out = String::new();
    let mut kv = |k: &str, v: String| writeln!(out, "{k}={v}").unwrap();
    kv("construction", red.construction.id().into());
    kv("source_n", red.source.n().to_string());
    kv("source_m", red.source.m().to_string());
    kv("gadget_n", red.gadget.n().to_string());
    kv("gadget_m", red.gadget.m().to_string());
    kv("source_range", format!("0..{}", red.source.n()));
    kv("gadget_spec", red.gadget_spec().to_string());
    match &red.construction {
        Construction::Pendant { k } => kv("k", k.to_string()),
        Construction::BipartiteK { k, .. } => kv("k", k.to_string()),
        Construction::AlphaBipartite { alpha, n_mult, set_size, k_v, .. } => {
            kv("alpha", alpha.to_string());
            kv("N", n_mult.to_string());
            kv("set_size", set_size.to_string());
            kv("k_v", k_v.iter().map(u64::to_string).collect::<Vec<_>>().join(","));
        }
        Construction::Fdm { f, x, y } => {
            kv("f", f.to_string());
            kv("x", x.to_string());
            kv("y", y.to_string());
            let n = red.source.n();
            kv("W", format!("{}..{}", n, n + *y as usize + 1));
        }
    }
    for group in &red.groups {
        kv(&format!("group.{}", group.label), format!("{}..{}", group.range.start, group.range.end));
    }
    for w in &red.warnings {
        kv("warning", w.clone());
    }
    out
}
