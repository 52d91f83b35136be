//! File formats: a hypergraph format (`p hg n m` header, `e v1 v2 ...`
//! lines, `#` comments) and a DIMACS-like graph format (`p edge n m`,
//! `e u v`, `c` comments). Vertex ids are 1-based on disk and converted at
//! this boundary. Emission is canonical: parse ∘ emit is the identity on
//! canonical files.

use hyperconf::{Graph, Hypergraph};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

fn parse_id(token: &str, n: usize, line: usize) -> Result<u32, ParseError> {
    let id: u64 = token.parse().map_err(|_| ParseError {
        line,
        message: format!("invalid vertex id {token:?}"),
    })?;
    if id == 0 || id > n as u64 {
        return err(line, format!("vertex id {id} out of range 1..={n}"));
    }
    Ok((id - 1) as u32)
}

pub fn parse_hg(text: &str) -> Result<Hypergraph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<Vec<u32>> = Vec::new();
    let mut edge_lines: Vec<usize> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let mut parts = content.split_whitespace();
        match parts.next() {
            Some("p") => {
                if header.is_some() {
                    return err(line, "duplicate header");
                }
                if parts.next() != Some("hg") {
                    return err(line, "expected header \"p hg <n> <m>\"");
                }
                let n = parts
                    .next()
                    .and_then(|t| t.parse::<usize>().ok())
                    .ok_or_else(|| ParseError {
                        line,
                        message: "invalid vertex count".into(),
                    })?;
                let m = parts
                    .next()
                    .and_then(|t| t.parse::<usize>().ok())
                    .ok_or_else(|| ParseError {
                        line,
                        message: "invalid edge count".into(),
                    })?;
                if parts.next().is_some() {
                    return err(line, "trailing tokens after header");
                }
                header = Some((n, m));
            }
            Some("e") => {
                let Some((n, _)) = header else {
                    return err(line, "edge line before header");
                };
                let ids = parts
                    .map(|t| parse_id(t, n, line))
                    .collect::<Result<Vec<u32>, _>>()?;
                edges.push(ids);
                edge_lines.push(line);
            }
            _ => return err(line, format!("unrecognized line {content:?}")),
        }
    }

    let Some((n, m)) = header else {
        return err(text.lines().count() + 1, "missing header \"p hg <n> <m>\"");
    };
    if edges.len() != m {
        return err(
            text.lines().count() + 1,
            format!("header declares {m} edges, found {}", edges.len()),
        );
    }
    let allow_empty = edges.iter().any(Vec::is_empty);
    let built = if allow_empty {
        Hypergraph::build_with_empty_edges(n, &edges)
    } else {
        Hypergraph::build(n, &edges)
    };
    built.map_err(|e| match e {
        hyperconf::Error::DuplicateVertexInEdge { edge, vertex } => ParseError {
            line: edge_lines[edge],
            message: format!("vertex {} repeated within the edge", vertex + 1),
        },
        hyperconf::Error::DuplicateEdge { first, second } => ParseError {
            line: edge_lines[second],
            message: format!("duplicate of the edge on line {}", edge_lines[first]),
        },
        other => ParseError {
            line: 0,
            message: other.to_string(),
        },
    })
}

pub fn emit_hg(h: &Hypergraph) -> String {
    let mut out = format!("p hg {} {}\n", h.vertex_count(), h.edge_count());
    for e in h.edges() {
        out.push('e');
        for v in e.iter() {
            out.push_str(&format!(" {}", v.0 + 1));
        }
        out.push('\n');
    }
    out
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(u32, u32)> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('c') || content.starts_with('#') {
            continue;
        }
        let mut parts = content.split_whitespace();
        match parts.next() {
            Some("p") => {
                if header.is_some() {
                    return err(line, "duplicate header");
                }
                if parts.next() != Some("edge") {
                    return err(line, "expected header \"p edge <n> <m>\"");
                }
                let n = parts
                    .next()
                    .and_then(|t| t.parse::<usize>().ok())
                    .ok_or_else(|| ParseError {
                        line,
                        message: "invalid vertex count".into(),
                    })?;
                let m = parts
                    .next()
                    .and_then(|t| t.parse::<usize>().ok())
                    .ok_or_else(|| ParseError {
                        line,
                        message: "invalid edge count".into(),
                    })?;
                if parts.next().is_some() {
                    return err(line, "trailing tokens after header");
                }
                header = Some((n, m));
            }
            Some("e") => {
                let Some((n, _)) = header else {
                    return err(line, "edge line before header");
                };
                let tokens: Vec<&str> = parts.collect();
                if tokens.len() != 2 {
                    return err(line, "edge lines take exactly two endpoints");
                }
                let u = parse_id(tokens[0], n, line)?;
                let v = parse_id(tokens[1], n, line)?;
                if u == v {
                    return err(line, format!("self-loop at vertex {}", u + 1));
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return err(line, "duplicate edge");
                }
                edges.push((u, v));
            }
            _ => return err(line, format!("unrecognized line {content:?}")),
        }
    }

    let Some((n, m)) = header else {
        return err(
            text.lines().count() + 1,
            "missing header \"p edge <n> <m>\"",
        );
    };
    if edges.len() != m {
        return err(
            text.lines().count() + 1,
            format!("header declares {m} edges, found {}", edges.len()),
        );
    }
    Graph::from_edges(n, &edges).map_err(|e| ParseError {
        line: 0,
        message: e.to_string(),
    })
}

pub fn emit_graph(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("p edge {} {}\n", g.vertex_count(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("e {} {}\n", u.0 + 1, v.0 + 1));
    }
    out
}
