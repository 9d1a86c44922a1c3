//! Text formats for graphs and embeddings.
//!
//! Edge list:
//!
//! ```text
//! # defcolor-edgelist v1
//! 3 3
//! 0 1
//! 1 2
//! 0 2
//! label 0 u
//! ```
//!
//! Vertices are `0..n`. Lines starting with `#` after the header are
//! comments. An embedding file has its own header, the same graph section,
//! then one `rot i: j k l` line per vertex listing its neighbors clockwise.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use defcolor_core::{EmbeddingError, Graph, GraphError, PlaneEmbedding, VertexId};

pub const EDGELIST_HEADER: &str = "# defcolor-edgelist v1";
pub const EMBEDDING_HEADER: &str = "# defcolor-embedding v1";

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing header line `{0}`")]
    MissingHeader(&'static str),
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

fn syntax(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, msg: msg.into() }
}

/// Non-empty, non-comment lines after the header, with 1-based line numbers.
fn body<'a>(text: &'a str, header: &'static str) -> Result<Vec<(usize, &'a str)>, FormatError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
    match lines.by_ref().find(|(_, l)| !l.is_empty()) {
        Some((_, l)) if l == header => {}
        _ => return Err(FormatError::MissingHeader(header)),
    }
    Ok(lines.filter(|(_, l)| !l.is_empty() && !l.starts_with('#')).collect())
}

fn number(line: usize, tok: Option<&str>, what: &str) -> Result<usize, FormatError> {
    let tok = tok.ok_or_else(|| syntax(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| syntax(line, format!("bad {what} `{tok}`")))
}

/// Parses the graph section; returns the graph and the remaining lines.
fn parse_graph_section<'a>(
    lines: &[(usize, &'a str)],
) -> Result<(Graph, Vec<(usize, &'a str)>), FormatError> {
    let (first, head) = *lines.first().ok_or_else(|| syntax(0, "missing `n m` line"))?;
    let mut toks = head.split_whitespace();
    let n = number(first, toks.next(), "vertex count")?;
    let m = number(first, toks.next(), "edge count")?;
    if toks.next().is_some() {
        return Err(syntax(first, "expected `n m`"));
    }
    if lines.len() < 1 + m {
        return Err(syntax(first, format!("expected {m} edge lines")));
    }
    let mut g = Graph::from_edges(n, &[]).map_err(|source| FormatError::Graph { line: first, source })?;
    for &(line, text) in &lines[1..=m] {
        let mut toks = text.split_whitespace();
        let i = number(line, toks.next(), "endpoint")?;
        let j = number(line, toks.next(), "endpoint")?;
        if toks.next().is_some() {
            return Err(syntax(line, "expected `i j`"));
        }
        for x in [i, j] {
            if x >= n {
                return Err(FormatError::Graph { line, source: GraphError::IndexOutOfRange { index: x, n } });
            }
        }
        if g.has_edge(VertexId(i as u32), VertexId(j as u32)) {
            return Err(syntax(line, format!("duplicate edge {i} {j}")));
        }
        g.add_edge(VertexId(i as u32), VertexId(j as u32))
            .map_err(|source| FormatError::Graph { line, source })?;
    }
    let mut rest = Vec::new();
    for &(line, text) in &lines[1 + m..] {
        if let Some(spec) = text.strip_prefix("label ") {
            let (idx, name) = spec.trim().split_once(char::is_whitespace).ok_or_else(|| syntax(line, "expected `label i name`"))?;
            let i = number(line, Some(idx), "vertex")?;
            if i >= n {
                return Err(FormatError::Graph { line, source: GraphError::IndexOutOfRange { index: i, n } });
            }
            g.set_label(VertexId(i as u32), name.trim())
                .map_err(|source| FormatError::Graph { line, source })?;
        } else {
            rest.push((line, text));
        }
    }
    Ok((g, rest))
}

pub fn parse_edgelist(text: &str) -> Result<Graph, FormatError> {
    let lines = body(text, EDGELIST_HEADER)?;
    let (g, rest) = parse_graph_section(&lines)?;
    if let Some(&(line, text)) = rest.first() {
        return Err(syntax(line, format!("unexpected `{text}`")));
    }
    Ok(g)
}

pub fn parse_embedding(text: &str) -> Result<PlaneEmbedding, FormatError> {
    let lines = body(text, EMBEDDING_HEADER)?;
    let (g, rest) = parse_graph_section(&lines)?;
    let mut rotation = BTreeMap::new();
    for (line, text) in rest {
        let spec = text.strip_prefix("rot ").ok_or_else(|| syntax(line, format!("unexpected `{text}`")))?;
        let (v, ns) = spec.split_once(':').ok_or_else(|| syntax(line, "expected `rot i: j k ...`"))?;
        let v = number(line, Some(v.trim()), "vertex")?;
        let ns = ns
            .split_whitespace()
            .map(|t| number(line, Some(t), "neighbor").map(|x| VertexId(x as u32)))
            .collect::<Result<Vec<_>, _>>()?;
        if rotation.insert(VertexId(v as u32), ns).is_some() {
            return Err(syntax(line, format!("second rotation for vertex {v}")));
        }
    }
    Ok(PlaneEmbedding::new(g, rotation)?)
}

/// Renumbers to `0..n` if needed, so identifiers can be written as indices.
fn compacted(g: &Graph) -> Graph {
    if g.vertices().enumerate().all(|(i, v)| v.0 as usize == i) {
        g.clone()
    } else {
        g.compact().0
    }
}

fn write_graph_section(out: &mut String, g: &Graph) {
    let _ = writeln!(out, "{} {}", g.vertex_count(), g.edge_count());
    for (a, b) in g.edges() {
        let _ = writeln!(out, "{a} {b}");
    }
    for (v, l) in g.labels() {
        let _ = writeln!(out, "label {v} {l}");
    }
}

pub fn write_edgelist(g: &Graph) -> String {
    let g = compacted(g);
    let mut out = format!("{EDGELIST_HEADER}\n");
    write_graph_section(&mut out, &g);
    out
}

pub fn write_embedding(emb: &PlaneEmbedding) -> String {
    let (emb, _) = emb.compact();
    let mut out = format!("{EMBEDDING_HEADER}\n");
    write_graph_section(&mut out, emb.graph());
    for v in emb.graph().vertices() {
        let ns: Vec<String> = emb.rotation(v).iter().map(|w| w.to_string()).collect();
        let _ = writeln!(out, "rot {v}: {}", ns.join(" "));
    }
    out
}

pub fn read_file(path: &Path) -> Result<String, FormatError> {
    std::fs::read_to_string(path).map_err(|source| FormatError::Io { path: path.display().to_string(), source })
}

/// Reads either format: an embedding file also yields its graph.
pub fn read_graph(path: &Path) -> Result<Graph, FormatError> {
    let text = read_file(path)?;
    if text.trim_start().starts_with(EMBEDDING_HEADER) {
        Ok(parse_embedding(&text)?.graph().clone())
    } else {
        parse_edgelist(&text)
    }
}

pub fn read_embedding(path: &Path) -> Result<PlaneEmbedding, FormatError> {
    parse_embedding(&read_file(path)?)
}
