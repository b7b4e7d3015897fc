//! The `HGR` text format.
//!
//! ```text
//! # comment lines start with '#'
//! n m
//! w v1 v2 ... vk     (one line per edge, m lines)
//! ```
//!
//! Weights are decimal, vertex ids 1-based. The writer emits edges in id
//! order with Rust's shortest round-trip float formatting, so output is
//! byte-stable for a given instance.

use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::Path;

use thiserror::Error;

use crate::hypergraph::{Hyperedge, Hypergraph, HypergraphError};

#[derive(Debug, Error)]
pub enum HgrError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid hypergraph: {0}")]
    Invalid(#[from] HypergraphError),
    #[error(transparent)]
    Io(#[from] io::Error),
}

fn parse_error(line: usize, message: impl Into<String>) -> HgrError {
    HgrError::Parse { line, message: message.into() }
}

pub fn parse_hgr(text: &str) -> Result<Hypergraph, HgrError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or_else(|| parse_error(1, "missing `n m` header"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let [n, m] = fields[..] else {
        return Err(parse_error(header_line, "header must be `n m`"));
    };
    let n: usize = n.parse().map_err(|_| parse_error(header_line, format!("bad vertex count `{n}`")))?;
    let m: usize = m.parse().map_err(|_| parse_error(header_line, format!("bad edge count `{m}`")))?;

    let mut edges = Vec::with_capacity(m);
    for (line, content) in lines {
        if edges.len() == m {
            return Err(parse_error(line, format!("more than the declared {m} edges")));
        }
        let mut tokens = content.split_whitespace();
        let w = tokens.next().expect("non-empty line has a token");
        let weight: f64 = w.parse().map_err(|_| parse_error(line, format!("bad weight `{w}`")))?;
        let vertices = tokens
            .map(|t| {
                t.parse::<u32>()
                    .map_err(|_| parse_error(line, format!("bad vertex id `{t}`")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if vertices.is_empty() {
            return Err(parse_error(line, "edge has no vertices"));
        }
        edges.push(Hyperedge::new(vertices, weight));
    }
    if edges.len() != m {
        return Err(parse_error(
            text.lines().count().max(1),
            format!("declared {m} edges, found {}", edges.len()),
        ));
    }
    Ok(Hypergraph::new(n, edges)?)
}

pub fn write_hgr(h: &Hypergraph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", h.n(), h.m()).unwrap();
    for edge in h.edges() {
        write!(out, "{}", edge.weight()).unwrap();
        for v in edge.vertices() {
            write!(out, " {}", v.get()).unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn read_hgr_file(path: impl AsRef<Path>) -> Result<Hypergraph, HgrError> {
    parse_hgr(&fs::read_to_string(path)?)
}

pub fn write_hgr_file(h: &Hypergraph, path: impl AsRef<Path>) -> Result<(), HgrError> {
    Ok(fs::write(path, write_hgr(h))?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments() {
        let h = parse_hgr("# triangle\n3 3\n1 1 2\n\n2.5 2 3\n# mid\n1 3 1\n").unwrap();
        assert_eq!(h.n(), 3);
        assert_eq!(h.m(), 3);
        assert_eq!(h.edges()[1].weight(), 2.5);
        assert_eq!(write_hgr(&h), "3 3\n1 1 2\n2.5 2 3\n1 1 3\n");
    }

    #[test]
    fn reports_line_numbers() {
        let err = parse_hgr("2 1\n1 1 x\n").unwrap_err();
        assert!(matches!(err, HgrError::Parse { line: 2, .. }), "{err}");
        let err = parse_hgr("# c\n2\n").unwrap_err();
        assert!(matches!(err, HgrError::Parse { line: 2, .. }), "{err}");
        let err = parse_hgr("2 1\nabc 1 2\n").unwrap_err();
        assert!(matches!(err, HgrError::Parse { line: 2, .. }), "{err}");
        let err = parse_hgr("2 1\n1 1 2\n1 1\n").unwrap_err();
        assert!(matches!(err, HgrError::Parse { line: 3, .. }), "{err}");
        let err = parse_hgr("2 2\n1 1 2\n").unwrap_err();
        assert!(matches!(err, HgrError::Parse { .. }), "{err}");
        let err = parse_hgr("2 1\n1\n").unwrap_err();
        assert!(matches!(err, HgrError::Parse { line: 2, .. }), "{err}");
        assert!(matches!(parse_hgr(""), Err(HgrError::Parse { .. })));
    }

    #[test]
    fn rejects_invalid_hypergraphs() {
        assert!(matches!(
            parse_hgr("3 1\n1 1 2\n"),
            Err(HgrError::Invalid(HypergraphError::UncoveredVertex(_)))
        ));
        assert!(matches!(
            parse_hgr("2 1\n0 1 2\n"),
            Err(HgrError::Invalid(HypergraphError::NonPositiveWeight { .. }))
        ));
        assert!(matches!(
            parse_hgr("2 1\n1 1 2 3\n"),
            Err(HgrError::Invalid(HypergraphError::VertexOutOfRange { .. }))
        ));
    }

    #[test]
    fn file_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("g.hgr");
        let h = parse_hgr("4 2\n1 1 2\n0.1 3 4 1\n").unwrap();
        write_hgr_file(&h, &path).unwrap();
        assert_eq!(read_hgr_file(&path).unwrap(), h);
    }
}
