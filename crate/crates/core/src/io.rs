//! Graph file formats.
//!
//! Two plain-text formats are supported:
//! * DIMACS `.col`: `c` comment lines, one `p edge <n> <m>` line, then
//!   `e <u> <v>` lines with 1-indexed endpoints. The writer emits edges
//!   with `u < v` in lexicographic order.
//! * Edge list: first line `n`, then one `u v` pair per line, 0-indexed.

use crate::graph::{Graph, GraphError};
use std::io::{BufRead, Write};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid graph: {0}")]
    Graph(#[from] GraphError),
}

fn parse_err<T>(line: usize, msg: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError::Parse { line, msg: msg.into() })
}

pub fn read_dimacs<R: BufRead>(reader: R) -> Result<Graph, FormatError> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let fields: Vec<&str> = line.split_ascii_whitespace().collect();
        match fields[0] {
            "p" => {
                if fields.len() < 4 || fields[1] != "edge" {
                    return parse_err(lineno, "expected `p edge <n> <m>`");
                }
                let count = fields[2]
                    .parse()
                    .map_err(|_| FormatError::Parse { line: lineno, msg: "bad vertex count".into() })?;
                n = Some(count);
            }
            "e" => {
                if fields.len() != 3 {
                    return parse_err(lineno, "expected `e <u> <v>`");
                }
                let u: usize = fields[1]
                    .parse()
                    .map_err(|_| FormatError::Parse { line: lineno, msg: "bad endpoint".into() })?;
                let v: usize = fields[2]
                    .parse()
                    .map_err(|_| FormatError::Parse { line: lineno, msg: "bad endpoint".into() })?;
                if u == 0 || v == 0 {
                    return parse_err(lineno, "DIMACS vertices are 1-indexed");
                }
                edges.push((u - 1, v - 1));
            }
            other => return parse_err(lineno, format!("unknown record `{other}`")),
        }
    }
    match n {
        Some(n) => Ok(Graph::from_edge_list(n, &edges)?),
        None => parse_err(0, "missing `p edge` line"),
    }
}

pub fn write_dimacs<W: Write>(mut writer: W, g: &Graph) -> std::io::Result<()> {
    writeln!(writer, "p edge {} {}", g.n(), g.edge_count())?;
    for (u, v) in g.edges() {
        writeln!(writer, "e {} {}", u + 1, v + 1)?;
    }
    Ok(())
}

pub fn read_edge_list<R: BufRead>(reader: R) -> Result<Graph, FormatError> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if n.is_none() {
            n = Some(line.parse().map_err(|_| FormatError::Parse {
                line: lineno,
                msg: "first line must be the vertex count".into(),
            })?);
            continue;
        }
        let fields: Vec<&str> = line.split_ascii_whitespace().collect();
        if fields.len() != 2 {
            return parse_err(lineno, "expected `<u> <v>`");
        }
        let u = fields[0]
            .parse()
            .map_err(|_| FormatError::Parse { line: lineno, msg: "bad endpoint".into() })?;
        let v = fields[1]
            .parse()
            .map_err(|_| FormatError::Parse { line: lineno, msg: "bad endpoint".into() })?;
        edges.push((u, v));
    }
    match n {
        Some(n) => Ok(Graph::from_edge_list(n, &edges)?),
        None => parse_err(0, "empty input"),
    }
}

pub fn write_edge_list<W: Write>(mut writer: W, g: &Graph) -> std::io::Result<()> {
    writeln!(writer, "{}", g.n())?;
    for (u, v) in g.edges() {
        writeln!(writer, "{u} {v}")?;
    }
    Ok(())
}
