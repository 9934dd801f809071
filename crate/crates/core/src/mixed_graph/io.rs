//! The `mg1` text format and DOT export.
//!
//! ```text
//! mg1 <n> <#edges> <#arcs>
//! L <m> <b> | P <x> <y> | N <id>      (n lines, in vertex order)
//! E <i> <j>                           (#edges lines, i < j)
//! A <tail> <head>                     (#arcs lines)
//! ```
//!
//! Field elements appear as their integer encoding; indices are 0-based
//! positions in the vertex list.

use std::fmt::Write as _;
use std::io::{self, Write};

use super::{GraphBuilder, MixedGraph, Vertex};
use crate::error::{Error, Result};
use crate::gf::FieldElem;

pub fn write_mg1<W: Write>(g: &MixedGraph, mut w: W) -> io::Result<()> {
    writeln!(w, "mg1 {} {} {}", g.order(), g.edges().len(), g.arcs().len())?;
    for v in g.vertices() {
        match v {
            Vertex::Line(m, b) => writeln!(w, "L {m} {b}")?,
            Vertex::Point(x, y) => writeln!(w, "P {x} {y}")?,
            Vertex::Node(id) => writeln!(w, "N {id}")?,
        }
    }
    for (i, j) in g.edges() {
        writeln!(w, "E {i} {j}")?;
    }
    for (i, j) in g.arcs() {
        writeln!(w, "A {i} {j}")?;
    }
    Ok(())
}

impl MixedGraph {
    pub fn to_mg1(&self) -> String {
        let mut buf = Vec::new();
        write_mg1(self, &mut buf).expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("mg1 output is ASCII")
    }
}

fn malformed(line: usize, reason: impl Into<String>) -> Error {
    Error::MalformedFile { line, reason: reason.into() }
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    /// Next non-blank line as (1-based line number, tokens).
    fn next_tokens(&mut self, what: &str) -> Result<(usize, Vec<&'a str>)> {
        for (i, line) in self.inner.by_ref() {
            self.last = i + 1;
            let toks: Vec<&str> = line.split_whitespace().collect();
            if !toks.is_empty() {
                return Ok((i + 1, toks));
            }
        }
        Err(malformed(self.last + 1, format!("unexpected end of file, expected {what}")))
    }
}

fn num<T: std::str::FromStr>(line: usize, tok: &str) -> Result<T> {
    tok.parse().map_err(|_| malformed(line, format!("bad number {tok:?}")))
}

fn pair(line: usize, toks: &[&str], tag: &str) -> Result<(usize, usize)> {
    match toks {
        [t, a, b] if *t == tag => Ok((num(line, a)?, num(line, b)?)),
        _ => Err(malformed(line, format!("expected `{tag} <i> <j>`"))),
    }
}

pub fn parse_mg1(text: &str) -> Result<MixedGraph> {
    let mut lines = Lines { inner: text.lines().enumerate(), last: 0 };
    let (hl, header) = lines.next_tokens("header")?;
    let (n, ne, na): (usize, usize, usize) = match header.as_slice() {
        ["mg1", n, e, a] => (num(hl, n)?, num(hl, e)?, num(hl, a)?),
        _ => return Err(malformed(hl, "expected header `mg1 <n> <#edges> <#arcs>`")),
    };
    let mut b = GraphBuilder::new();
    for _ in 0..n {
        let (l, toks) = lines.next_tokens("vertex line")?;
        let v = match toks.as_slice() {
            ["L", m, bb] => Vertex::Line(
                FieldElem::from_encoding(num(l, m)?),
                FieldElem::from_encoding(num(l, bb)?),
            ),
            ["P", x, y] => Vertex::Point(
                FieldElem::from_encoding(num(l, x)?),
                FieldElem::from_encoding(num(l, y)?),
            ),
            ["N", id] => Vertex::Node(num(l, id)?),
            _ => return Err(malformed(l, "expected vertex line `L|P <a> <b>` or `N <id>`")),
        };
        b.add_vertex(v);
    }
    for _ in 0..ne {
        let (l, toks) = lines.next_tokens("edge line")?;
        let (i, j) = pair(l, &toks, "E")?;
        if i >= j {
            return Err(malformed(l, "edge indices must satisfy i < j"));
        }
        b.add_edge(i, j);
    }
    for _ in 0..na {
        let (l, toks) = lines.next_tokens("arc line")?;
        let (i, j) = pair(l, &toks, "A")?;
        b.add_arc(i, j);
    }
    if let Ok((l, _)) = lines.next_tokens("") {
        return Err(malformed(l, "trailing content after declared edges and arcs"));
    }
    let end = lines.last;
    let g = b.build().map_err(|e| malformed(end, e.to_string()))?;
    if g.edges().len() != ne || g.arcs().len() != na {
        return Err(malformed(end, "duplicate edge or arc lines"));
    }
    Ok(g)
}

/// DOT rendering as a `digraph`: arcs are directed, edges use `dir=none`.
pub fn to_dot(g: &MixedGraph) -> String {
    let mut s = String::from("digraph G {\n");
    for (i, v) in g.vertices().iter().enumerate() {
        let shape = match v {
            Vertex::Line(..) => "box",
            _ => "ellipse",
        };
        let _ = writeln!(s, "  {i} [label=\"{v}\", shape={shape}];");
    }
    for (i, j) in g.edges() {
        let _ = writeln!(s, "  {i} -> {j} [dir=none];");
    }
    for (i, j) in g.arcs() {
        let _ = writeln!(s, "  {i} -> {j};");
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> MixedGraph {
        let e = FieldElem::from_encoding;
        let mut b = GraphBuilder::with_vertices(vec![
            Vertex::Line(e(0), e(1)),
            Vertex::Point(e(2), e(0)),
            Vertex::Node(7),
        ]);
        b.add_edge(1, 0).add_arc(2, 0).add_arc(0, 2);
        b.build().unwrap()
    }

    #[test]
    fn exact_text() {
        let text = sample().to_mg1();
        assert_eq!(text, "mg1 3 1 2\nL 0 1\nP 2 0\nN 7\nE 0 1\nA 0 2\nA 2 0\n");
        assert_eq!(parse_mg1(&text).unwrap(), sample());
    }

    #[test]
    fn truncated_file() {
        let err = parse_mg1("mg1 3 1 2\nL 0 1\nP 2 0\nN 7\nE 0 1\nA 0 2\n").unwrap_err();
        assert!(matches!(err, Error::MalformedFile { .. }), "{err}");
    }

    #[test]
    fn malformed_lines() {
        for text in [
            "",
            "mg2 1 0 0\nN 0\n",
            "mg1 1 0 0\nX 0\n",
            "mg1 2 1 0\nN 0\nN 1\nE 1 0\n",
            "mg1 2 1 0\nN 0\nN 1\nE 0 one\n",
            "mg1 1 0 0\nN 0\nN 1\n",
            "mg1 2 1 1\nN 0\nN 1\nE 0 1\nA 0 1\n",
            "mg1 2 2 0\nN 0\nN 1\nE 0 1\nE 0 1\n",
        ] {
            assert!(matches!(parse_mg1(text), Err(Error::MalformedFile { .. })), "{text:?}");
        }
    }

    #[test]
    fn dot_marks_edges_undirected() {
        let dot = to_dot(&sample());
        assert!(dot.starts_with("digraph G {"));
        assert!(dot.contains("0 -> 1 [dir=none];"));
        assert!(dot.contains("2 -> 0;"));
        assert!(dot.contains("label=\"[0,1]\""));
    }
}
