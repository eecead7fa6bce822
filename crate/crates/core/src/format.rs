//! Plain-text instance files.
//!
//! ```text
//! c optional comment
//! p sep 3 2
//! e 1 2
//! e 2 3
//! x 1
//! y 3
//! ```
//!
//! Vertex ids run from 1 to `n`. `x`, `y` and `t` lines name the source set,
//! target set and terminals; each may appear at most once. Blank lines and
//! lines starting with `c` are ignored.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, VertexSet};

/// A parsed instance file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphFile {
    pub graph: Graph,
    pub x: Option<VertexSet>,
    pub y: Option<VertexSet>,
    pub terminals: Option<VertexSet>,
}

fn fail<T>(line: usize, reason: impl Into<String>) -> Result<T> {
    Err(Error::Parse { line, reason: reason.into() })
}

fn ids(line: usize, fields: &[&str], n: u32) -> Result<Vec<VertexId>> {
    fields
        .iter()
        .map(|f| match f.parse::<VertexId>() {
            Ok(v) if (1..=n).contains(&v) => Ok(v),
            Ok(v) => fail(line, format!("vertex id {v} out of range 1..={n}")),
            Err(_) => fail(line, format!("expected a vertex id, found {f:?}")),
        })
        .collect()
}

fn set_once(slot: &mut Option<(usize, VertexSet)>, line: usize, kind: &str, v: Vec<VertexId>) -> Result<()> {
    if slot.is_some() {
        return fail(line, format!("repeated {kind} line"));
    }
    if v.is_empty() {
        return fail(line, format!("empty {kind} line"));
    }
    *slot = Some((line, v.into_iter().collect()));
    Ok(())
}

impl GraphFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut header: Option<(usize, u32, usize)> = None;
        let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
        let mut seen: BTreeSet<(VertexId, VertexId)> = BTreeSet::new();
        let (mut x, mut y, mut t) = (None, None, None);
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let fields: Vec<&str> = raw.split_whitespace().collect();
            let Some((&kind, rest)) = fields.split_first() else {
                continue;
            };
            if kind == "c" {
                continue;
            }
            let Some((_, n, _)) = header else {
                match (kind, rest) {
                    ("p", ["sep", n, m]) => match (n.parse::<u32>(), m.parse::<usize>()) {
                        (Ok(n), Ok(m)) => {
                            header = Some((line, n, m));
                            continue;
                        }
                        _ => return fail(line, "malformed header, expected `p sep <n> <m>`"),
                    },
                    _ => return fail(line, "malformed header, expected `p sep <n> <m>`"),
                }
            };
            match kind {
                "p" => return fail(line, "repeated header"),
                "e" => {
                    let [u, v] = ids(line, rest, n)?[..] else {
                        return fail(line, "an edge line has exactly two ids");
                    };
                    if u == v {
                        return fail(line, format!("self-loop at vertex {u}"));
                    }
                    if !seen.insert((u.min(v), u.max(v))) {
                        return fail(line, format!("duplicate edge {u} {v}"));
                    }
                    edges.push((u, v));
                }
                "x" => set_once(&mut x, line, "x", ids(line, rest, n)?)?,
                "y" => set_once(&mut y, line, "y", ids(line, rest, n)?)?,
                "t" => {
                    let v = ids(line, rest, n)?;
                    set_once(&mut t, line, "t", v)?;
                    if t.as_ref().is_some_and(|(_, s)| s.len() < 2) {
                        return fail(line, "at least two distinct terminals are required");
                    }
                }
                other => return fail(line, format!("unknown line type {other:?}")),
            }
        }
        let Some((header_line, n, m)) = header else {
            return fail(text.lines().count().max(1), "missing header `p sep <n> <m>`");
        };
        if edges.len() != m {
            return fail(header_line, format!("header declares {m} edges but {} were given", edges.len()));
        }
        if let (Some((lx, sx)), Some((ly, sy))) = (&x, &y) {
            if !sx.is_disjoint(sy) {
                return fail(*lx.max(ly), "x and y overlap");
            }
        }
        let graph = Graph::with_vertices(n, &edges)?;
        Ok(GraphFile {
            graph,
            x: x.map(|(_, s)| s),
            y: y.map(|(_, s)| s),
            terminals: t.map(|(_, s)| s),
        })
    }

    /// The `x` and `y` sets, or an error naming the missing line.
    pub fn source_target(&self) -> Result<(&VertexSet, &VertexSet)> {
        match (&self.x, &self.y) {
            (Some(x), Some(y)) => Ok((x, y)),
            _ => Err(Error::invalid("the file needs both an `x` and a `y` line")),
        }
    }

    pub fn terminal_set(&self) -> Result<&VertexSet> {
        self.terminals.as_ref().ok_or_else(|| Error::invalid("the file needs a `t` line"))
    }
}

fn write_set(f: &mut fmt::Formatter<'_>, kind: &str, s: &Option<VertexSet>) -> fmt::Result {
    if let Some(s) = s {
        write!(f, "{kind}")?;
        for v in s {
            write!(f, " {v}")?;
        }
        writeln!(f)?;
    }
    Ok(())
}

/// Writes the file format back; parsing the output yields an equal value
/// provided the vertex ids are `1..=n`.
impl fmt::Display for GraphFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.graph.vertices().max().unwrap_or(0);
        writeln!(f, "p sep {n} {}", self.graph.edge_count())?;
        for (u, v) in self.graph.edges() {
            writeln!(f, "e {u} {v}")?;
        }
        write_set(f, "x", &self.x)?;
        write_set(f, "y", &self.y)?;
        write_set(f, "t", &self.terminals)
    }
}
