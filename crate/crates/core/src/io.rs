//! Plain-text instance format.
//!
//! ```text
//! p <vc|fvst|oct> <n> <m> <k>
//! c free-form comment
//! e <u> <v>
//! ```
//!
//! Vertex ids are 0-based. For tournaments `e u v` is the arc `u -> v`.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{GraphError, Tournament, UndirectedGraph};
use crate::problems::{InstanceGraph, ProblemError, ProblemInstance, ProblemKind};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing `p` header line")]
    MissingHeader,
    #[error("header declares {declared} edges, found {found}")]
    EdgeCount { declared: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Problem(#[from] ProblemError),
}

/// A parsed instance together with its comment lines (without the `c ` prefix).
#[derive(Debug, Clone)]
pub struct InstanceFile {
    pub instance: ProblemInstance,
    pub comments: Vec<String>,
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

pub fn read_instance(text: &str) -> Result<InstanceFile, ParseError> {
    let mut header: Option<(ProblemKind, usize, usize, usize)> = None;
    let mut comments = Vec::new();
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim_end_matches('\r');
        if line.trim().is_empty() {
            continue;
        }
        if line == "c" || line.starts_with("c ") {
            comments.push(line.get(2..).unwrap_or("").to_string());
            continue;
        }
        let mut fields = line.split_whitespace();
        let num = |s: Option<&str>, what: &str| -> Result<usize, ParseError> {
            s.ok_or_else(|| syntax(line_no, format!("missing {what}")))?
                .parse()
                .map_err(|_| syntax(line_no, format!("invalid {what}")))
        };
        match fields.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(syntax(line_no, "duplicate header"));
                }
                let kind: ProblemKind = fields
                    .next()
                    .ok_or_else(|| syntax(line_no, "missing problem kind"))?
                    .parse()?;
                let n = num(fields.next(), "vertex count")?;
                let m = num(fields.next(), "edge count")?;
                let k = num(fields.next(), "parameter k")?;
                header = Some((kind, n, m, k));
            }
            Some("e") => {
                if header.is_none() {
                    return Err(ParseError::MissingHeader);
                }
                let u = num(fields.next(), "edge endpoint")?;
                let v = num(fields.next(), "edge endpoint")?;
                edges.push((u, v));
            }
            Some(other) => return Err(syntax(line_no, format!("unknown line type `{other}`"))),
            None => unreachable!("blank lines are skipped"),
        }
        if fields.next().is_some() {
            return Err(syntax(line_no, "trailing fields"));
        }
    }
    let (kind, n, m, k) = header.ok_or(ParseError::MissingHeader)?;
    if edges.len() != m {
        return Err(ParseError::EdgeCount {
            declared: m,
            found: edges.len(),
        });
    }
    let graph = match kind {
        ProblemKind::Fvst => InstanceGraph::Tournament(Tournament::new(n, edges)?),
        _ => InstanceGraph::Undirected(UndirectedGraph::new(n, edges)?),
    };
    Ok(InstanceFile {
        instance: ProblemInstance::new(kind, graph, k)?,
        comments,
    })
}

/// Serializes `inst`, placing `comments` directly after the header line.
pub fn write_instance(inst: &ProblemInstance, comments: &[String]) -> String {
    let g = inst.graph();
    let mut out = String::new();
    let _ = writeln!(out, "p {} {} {} {}", inst.kind(), g.n(), g.m(), inst.k());
    for c in comments {
        let _ = writeln!(out, "c {c}");
    }
    match g {
        InstanceGraph::Undirected(g) => {
            for (u, v) in g.edges() {
                let _ = writeln!(out, "e {u} {v}");
            }
        }
        InstanceGraph::Tournament(t) => {
            for (u, v) in t.arcs() {
                let _ = writeln!(out, "e {u} {v}");
            }
        }
    }
    out
}
