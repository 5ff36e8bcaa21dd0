//! Line-oriented text formats.
//!
//! `.mg` (mixed graph):
//! ```text
//! # comment
//! v NAME        optional declaration
//! e U V         undirected edge, ids 0, 1, ... in order of `e` lines
//! a U V         arc U -> V, ids 0, 1, ... in order of `a` lines
//! ```
//! `.or` (orientation): `o EDGEID U V`, one line per edge.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Direction, LinkId, MixedGraph, Orientation};

/// Splits a line into tokens, dropping `#` comments. Returns `None` for blank lines.
pub(crate) fn tokens(line: &str) -> Option<Vec<&str>> {
    let line = line.split('#').next().unwrap_or("");
    let toks: Vec<&str> = line.split_whitespace().collect();
    if toks.is_empty() {
        None
    } else {
        Some(toks)
    }
}

pub fn parse_mg(text: &str) -> Result<MixedGraph> {
    let mut g = MixedGraph::new();
    let mut next_edge = 0u32;
    let mut next_arc = 0u32;
    for (i, line) in text.lines().enumerate() {
        let lineno = i + 1;
        let Some(toks) = tokens(line) else { continue };
        match toks.as_slice() {
            ["v", name] => {
                g.vertex(name);
            }
            ["e", u, v] => {
                let (a, b) = (g.vertex(u), g.vertex(v));
                g.add_edge_with_id(next_edge, a, b).map_err(|e| Error::parse(lineno, e.to_string()))?;
                next_edge += 1;
            }
            ["a", u, v] => {
                let (t, h) = (g.vertex(u), g.vertex(v));
                g.push_arc(crate::graph::Arc { id: LinkId::Arc(next_arc), tail: t, head: h })
                    .map_err(|e| Error::parse(lineno, e.to_string()))?;
                next_arc += 1;
            }
            _ => return Err(Error::parse(lineno, format!("unrecognised line `{}`", line.trim()))),
        }
    }
    Ok(g)
}

/// Writes every vertex as a `v` line, then edges and arcs in id order.
///
/// Ids are implicit in the format, so a graph whose ids are not `0..n`
/// comes back renumbered (in the same order) when parsed.
pub fn write_mg(g: &MixedGraph) -> String {
    let mut out = String::new();
    for name in g.names() {
        let _ = writeln!(out, "v {name}");
    }
    let mut edges: Vec<_> = g.edges().iter().collect();
    edges.sort_by_key(|e| e.id);
    for e in edges {
        let _ = writeln!(out, "e {} {}", g.name(e.a), g.name(e.b));
    }
    let mut arcs: Vec<_> = g.arcs().iter().collect();
    arcs.sort_by_key(|a| a.id);
    for a in arcs {
        let _ = writeln!(out, "a {} {}", g.name(a.tail), g.name(a.head));
    }
    out
}

pub fn parse_or(text: &str, g: &MixedGraph) -> Result<Orientation> {
    let mut o = Orientation::new();
    let mut seen = BTreeSet::new();
    for (i, line) in text.lines().enumerate() {
        let lineno = i + 1;
        let Some(toks) = tokens(line) else { continue };
        let ["o", id, u, v] = toks.as_slice() else {
            return Err(Error::parse(lineno, format!("expected `o EDGEID U V`, got `{}`", line.trim())));
        };
        let id: u32 = id.parse().map_err(|_| Error::parse(lineno, format!("bad edge id `{id}`")))?;
        let edge = g.edge(id).ok_or_else(|| Error::parse(lineno, format!("unknown edge {id}")))?;
        if !seen.insert(id) {
            return Err(Error::parse(lineno, format!("edge {id} oriented twice")));
        }
        let (a, b) = (g.name(edge.a), g.name(edge.b));
        let dir = if (*u, *v) == (a, b) {
            Direction::Forward
        } else if (*u, *v) == (b, a) {
            Direction::Backward
        } else {
            return Err(Error::parse(lineno, format!("edge {id} joins {a} and {b}, not {u} and {v}")));
        };
        o.set(id, dir);
    }
    if let Some(e) = g.edges().iter().find(|e| o.get(e.id).is_none()) {
        return Err(Error::parse(text.lines().count(), format!("edge {} not oriented", e.id)));
    }
    Ok(o)
}

pub fn write_or(g: &MixedGraph, o: &Orientation) -> Result<String> {
    let mut out = String::new();
    for (id, _) in o.iter() {
        let e = g.edge(id).ok_or(Error::UnknownEdge(id))?;
        let (t, h) = o.ends(e).expect("present");
        let _ = writeln!(out, "o {id} {} {}", g.name(t), g.name(h));
    }
    if let Some(e) = g.edges().iter().find(|e| o.get(e.id).is_none()) {
        return Err(Error::MissingEdge(e.id));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_mixed_graph() {
        let g = parse_mg("# demo\nv lonely\ne a b\ne a b # parallel\na b c\n\na c a\n").unwrap();
        assert_eq!(g.names(), &["lonely", "a", "b", "c"]);
        assert_eq!(g.edges().iter().map(|e| e.id).collect::<Vec<_>>(), vec![0, 1]);
        assert_eq!(g.arcs().iter().map(|a| a.id).collect::<Vec<_>>(), vec![LinkId::Arc(0), LinkId::Arc(1)]);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        assert_eq!(parse_mg("e a b\nx y\n").unwrap_err(), Error::parse(2, "unrecognised line `x y`"));
        assert!(matches!(parse_mg("e a a\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_mg("e a\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn writer_round_trips() {
        let src = "v a\nv b\nv c\ne a b\ne b c\na c a\n";
        let g = parse_mg(src).unwrap();
        assert_eq!(write_mg(&g), src);
    }

    #[test]
    fn orientation_file() {
        let g = parse_mg("e u v\ne v w\n").unwrap();
        let o = parse_or("o 0 u v\no 1 w v\n", &g).unwrap();
        assert_eq!(o.get(0), Some(Direction::Forward));
        assert_eq!(o.get(1), Some(Direction::Backward));
        assert_eq!(write_or(&g, &o).unwrap(), "o 0 u v\no 1 w v\n");
        assert!(parse_or("o 0 u v\n", &g).is_err());
        assert!(parse_or("o 0 u v\no 0 v u\no 1 v w\n", &g).is_err());
        assert!(parse_or("o 0 u w\no 1 v w\n", &g).is_err());
    }
}
