//! Text formats for graphs, plane graphs and list / correspondence
//! assignments. Every rejection carries a 1-based line and column.
//!
//! * Edge list: `n m`, then `m` lines `u v`.
//! * Plane graph: `n`, then `n` lines `v: w1 w2 ... wd` giving the clockwise
//!   rotation at `v`.
//! * Assignment: header `lists n` or `corr n`. List files have lines
//!   `v : c1 c2 ...`. Correspondence files have capacity lines `v : f` and
//!   matching lines `u v : a1-b1 a2-b2 ...` pairing color `a` at `u` with
//!   color `b` at `v`.
//!
//! `#` starts a comment anywhere on a line.

use std::collections::BTreeMap;
use std::fmt::Write;

use thiserror::Error;

use crate::color::{CorrespondenceAssignment, ListAssignment};
use crate::graph::Graph;
use crate::kernel::Digraph;
use crate::plane::PlaneGraph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, column {column}: {message}")]
pub struct FormatError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Clone, Copy, Debug)]
struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

impl Token<'_> {
    fn error(&self, message: impl Into<String>) -> FormatError {
        FormatError { line: self.line, column: self.column, message: message.into() }
    }

    fn number(&self) -> Result<usize, FormatError> {
        self.text.parse().map_err(|_| self.error(format!("expected a nonnegative integer, found `{}`", self.text)))
    }
}

/// Non-empty lines after comment stripping, each split into tokens.
/// Colons become tokens of their own.
fn lines(text: &str) -> Vec<Vec<Token<'_>>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut start = None;
        for (j, ch) in content.char_indices().chain([(content.len(), ' ')]) {
            let boundary = ch.is_whitespace() || ch == ':';
            match (start, boundary) {
                (None, false) => start = Some(j),
                (Some(s), true) => {
                    tokens.push(Token { text: &content[s..j], line: i + 1, column: s + 1 });
                    start = None;
                }
                _ => {}
            }
            if ch == ':' {
                tokens.push(Token { text: ":", line: i + 1, column: j + 1 });
            }
        }
        if !tokens.is_empty() {
            out.push(tokens);
        }
    }
    out
}

fn end_of_input(text: &str) -> FormatError {
    missing(text, "unexpected end of input".into())
}

fn missing(text: &str, message: String) -> FormatError {
    FormatError { line: text.lines().count() + 1, column: 1, message }
}

fn vertex(tok: &Token<'_>, n: usize) -> Result<usize, FormatError> {
    let v = tok.number()?;
    if v >= n {
        return Err(tok.error(format!("vertex {v} out of range for n = {n}")));
    }
    Ok(v)
}

pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    let ls = lines(text);
    let header = ls.first().ok_or_else(|| end_of_input(text))?;
    if header.len() != 2 {
        return Err(header[0].error("header must be `n m`"));
    }
    let n = header[0].number()?;
    let m = header[1].number()?;
    let mut g = Graph::new(n);
    if ls.len() - 1 != m {
        let at = ls.last().unwrap()[0];
        return Err(at.error(format!("expected {m} edge lines, found {}", ls.len() - 1)));
    }
    for line in &ls[1..] {
        if line.len() != 2 {
            return Err(line[0].error("edge line must be `u v`"));
        }
        let u = vertex(&line[0], n)?;
        let v = vertex(&line[1], n)?;
        match g.try_add_edge(u, v) {
            Ok(true) => {}
            Ok(false) => return Err(line[0].error(format!("duplicate edge {u} {v}"))),
            Err(e) => return Err(line[0].error(e.to_string())),
        }
    }
    Ok(g)
}

pub fn parse_plane(text: &str) -> Result<PlaneGraph, FormatError> {
    let ls = lines(text);
    let header = ls.first().ok_or_else(|| end_of_input(text))?;
    if header.len() != 1 {
        return Err(header[0].error("header must be `n`"));
    }
    let n = header[0].number()?;
    let mut rotation: Vec<Option<Vec<usize>>> = vec![None; n];
    let mut tokens_at: Vec<Vec<Token<'_>>> = vec![Vec::new(); n];
    for line in &ls[1..] {
        if line.len() < 2 || line[1].text != ":" {
            return Err(line[0].error("rotation line must be `v: w1 w2 ...`"));
        }
        let v = vertex(&line[0], n)?;
        if rotation[v].is_some() {
            return Err(line[0].error(format!("rotation of {v} given twice")));
        }
        let mut rot = Vec::new();
        for tok in &line[2..] {
            let w = vertex(tok, n)?;
            if w == v || rot.contains(&w) {
                return Err(tok.error(format!("neighbor {w} of {v} is a loop or repeated")));
            }
            rot.push(w);
        }
        rotation[v] = Some(rot);
        tokens_at[v] = line[2..].to_vec();
    }
    if let Some(v) = rotation.iter().position(Option::is_none) {
        return Err(missing(text, format!("missing rotation line for vertex {v}")));
    }
    let rotation: Vec<Vec<usize>> = rotation.into_iter().map(Option::unwrap).collect();
    for u in 0..n {
        for (i, &v) in rotation[u].iter().enumerate() {
            if !rotation[v].contains(&u) {
                return Err(tokens_at[u][i].error(format!("half-edge {u}->{v} has no reverse {v}->{u}")));
            }
        }
    }
    let pg = PlaneGraph::from_rotation(rotation).map_err(|e| header[0].error(e.to_string()))?;
    if !pg.euler_check_components() {
        return Err(header[0].error("rotation system fails Euler's formula; it is not a plane embedding"));
    }
    Ok(pg)
}

/// Digraph in edge-list layout: `n m`, then `m` arc lines `u v` for
/// `u -> v`.
pub fn parse_digraph(text: &str) -> Result<Digraph, FormatError> {
    let ls = lines(text);
    let header = ls.first().ok_or_else(|| end_of_input(text))?;
    if header.len() != 2 {
        return Err(header[0].error("header must be `n m`"));
    }
    let n = header[0].number()?;
    let m = header[1].number()?;
    if ls.len() - 1 != m {
        let at = ls.last().unwrap()[0];
        return Err(at.error(format!("expected {m} arc lines, found {}", ls.len() - 1)));
    }
    let mut arcs = Vec::with_capacity(m);
    for line in &ls[1..] {
        if line.len() != 2 {
            return Err(line[0].error("arc line must be `u v`"));
        }
        let u = vertex(&line[0], n)?;
        let v = vertex(&line[1], n)?;
        if u == v || arcs.contains(&(u, v)) {
            return Err(line[0].error(format!("arc {u} {v} is a loop or repeated")));
        }
        arcs.push((u, v));
    }
    Digraph::new(n, arcs).map_err(|e| header[0].error(e.to_string()))
}

pub fn write_digraph(d: &Digraph) -> String {
    let mut s = format!("{} {}\n", d.n(), d.arcs().len());
    for &(u, v) in d.arcs() {
        writeln!(s, "{u} {v}").unwrap();
    }
    s
}

/// A graph file in either format, told apart by the header.
pub fn parse_any(text: &str) -> Result<(Graph, Option<PlaneGraph>), FormatError> {
    let ls = lines(text);
    match ls.first() {
        Some(h) if h.len() == 1 => {
            let pg = parse_plane(text)?;
            Ok((pg.graph().clone(), Some(pg)))
        }
        _ => Ok((parse_graph(text)?, None)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Assignment {
    Lists(ListAssignment),
    Corr(CorrespondenceAssignment),
}

pub fn parse_assignment(text: &str, g: &Graph) -> Result<Assignment, FormatError> {
    let ls = lines(text);
    let header = ls.first().ok_or_else(|| end_of_input(text))?;
    if header.len() != 2 || !matches!(header[0].text, "lists" | "corr") {
        return Err(header[0].error("header must be `lists n` or `corr n`"));
    }
    let n = header[1].number()?;
    if n != g.n() {
        return Err(header[1].error(format!("assignment is for {n} vertices, graph has {}", g.n())));
    }
    if header[0].text == "lists" {
        let mut lists: Vec<Option<Vec<usize>>> = vec![None; n];
        for line in &ls[1..] {
            if line.len() < 2 || line[1].text != ":" {
                return Err(line[0].error("list line must be `v : c1 c2 ...`"));
            }
            let v = vertex(&line[0], n)?;
            if lists[v].is_some() {
                return Err(line[0].error(format!("list of {v} given twice")));
            }
            lists[v] = Some(line[2..].iter().map(Token::number).collect::<Result<_, _>>()?);
        }
        if let Some(v) = lists.iter().position(Option::is_none) {
            return Err(missing(text, format!("missing list for vertex {v}")));
        }
        return Ok(Assignment::Lists(ListAssignment::new(lists.into_iter().map(Option::unwrap).collect())));
    }

    let mut caps: Vec<Option<usize>> = vec![None; n];
    let mut matchings: Vec<(&[Token<'_>], usize, usize)> = Vec::new();
    for line in &ls[1..] {
        match line.iter().position(|t| t.text == ":") {
            Some(1) if line.len() == 3 => {
                let v = vertex(&line[0], n)?;
                if caps[v].is_some() {
                    return Err(line[0].error(format!("capacity of {v} given twice")));
                }
                caps[v] = Some(line[2].number()?);
            }
            Some(2) => {
                let u = vertex(&line[0], n)?;
                let v = vertex(&line[1], n)?;
                if !g.has_edge(u, v) {
                    return Err(line[0].error(format!("{u} {v} is not an edge")));
                }
                matchings.push((&line[3..], u, v));
            }
            _ => return Err(line[0].error("expected `v : f` or `u v : a-b ...`")),
        }
    }
    if let Some(v) = caps.iter().position(Option::is_none) {
        return Err(missing(text, format!("missing capacity for vertex {v}")));
    }
    let caps: Vec<usize> = caps.into_iter().map(Option::unwrap).collect();
    let mut pairs: BTreeMap<(usize, usize), Vec<(usize, usize)>> = BTreeMap::new();
    for (tokens, u, v) in matchings {
        if pairs.contains_key(&(u.min(v), u.max(v))) {
            return Err(tokens.first().map_or_else(|| end_of_input(text), |t| t.error("matching given twice")));
        }
        let mut list = Vec::new();
        for tok in tokens {
            let (a, b) = tok.text.split_once('-').ok_or_else(|| tok.error("pair must be `a-b`"))?;
            let a: usize = a.parse().map_err(|_| tok.error("pair must be `a-b`"))?;
            let b: usize = b.parse().map_err(|_| tok.error("pair must be `a-b`"))?;
            if a == 0 || a > caps[u] {
                return Err(tok.error(format!("color {a} exceeds f({u}) = {}", caps[u])));
            }
            if b == 0 || b > caps[v] {
                return Err(tok.error(format!("color {b} exceeds f({v}) = {}", caps[v])));
            }
            list.push(if u < v { (a, b) } else { (b, a) });
        }
        pairs.insert((u.min(v), u.max(v)), list);
    }
    CorrespondenceAssignment::new(g, caps, &pairs)
        .map(Assignment::Corr)
        .map_err(|e| header[0].error(e.to_string()))
}

pub fn write_graph(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        writeln!(s, "{u} {v}").unwrap();
    }
    s
}

pub fn write_plane(pg: &PlaneGraph) -> String {
    let mut s = format!("{}\n", pg.graph().n());
    for v in 0..pg.graph().n() {
        let rot: Vec<String> = pg.rotation(v).iter().map(usize::to_string).collect();
        writeln!(s, "{v}: {}", rot.join(" ")).unwrap();
    }
    s
}

pub fn write_assignment(a: &Assignment) -> String {
    match a {
        Assignment::Lists(l) => {
            let mut s = format!("lists {}\n", l.lists.len());
            for (v, list) in l.lists.iter().enumerate() {
                let cs: Vec<String> = list.iter().map(usize::to_string).collect();
                writeln!(s, "{v} : {}", cs.join(" ")).unwrap();
            }
            s
        }
        Assignment::Corr(c) => {
            let mut s = format!("corr {}\n", c.capacities.len());
            for (v, f) in c.capacities.iter().enumerate() {
                writeln!(s, "{v} : {f}").unwrap();
            }
            for (&(u, v), m) in &c.matchings {
                let ps: Vec<String> = m.pairs().map(|(a, b)| format!("{a}-{b}")).collect();
                writeln!(s, "{u} {v} : {}", ps.join(" ")).unwrap();
            }
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cube, cycle};

    #[test]
    fn graph_round_trip() {
        let g = cycle(5);
        assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
        let with_comments = "# a path\n3 2\n0 1 # first\n\n1 2\n";
        assert_eq!(parse_graph(with_comments).unwrap().m(), 2);
    }

    #[test]
    fn graph_errors_have_locations() {
        let e = parse_graph("3 2\n0 1\n1 7\n").unwrap_err();
        assert_eq!((e.line, e.column), (3, 3));
        let e = parse_graph("3 1\n0 x\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 3));
        let e = parse_graph("3 2\n0 1\n1 0\n").unwrap_err();
        assert_eq!(e.line, 3);
    }

    #[test]
    fn plane_round_trip_and_asymmetry() {
        let pg = cube();
        let back = parse_plane(&write_plane(&pg)).unwrap();
        assert_eq!(back.face_count(), 6);
        let e = parse_plane("3\n0: 1 2\n1: 0 2\n2: 1\n").unwrap_err();
        assert!(e.message.contains("0->2"), "{e}");
        assert_eq!((e.line, e.column), (2, 6));
        // K4 with a non-planar rotation system.
        let bad = "4\n0: 1 2 3\n1: 0 2 3\n2: 0 1 3\n3: 0 1 2\n";
        assert!(parse_plane(bad).unwrap_err().message.contains("Euler"));
    }

    #[test]
    fn digraph_round_trip() {
        let d = parse_digraph("3 3\n0 1\n1 2\n2 0\n").unwrap();
        assert_eq!(parse_digraph(&write_digraph(&d)).unwrap(), d);
        assert_eq!(parse_digraph("2 2\n0 1\n0 1\n").unwrap_err().line, 3);
    }

    #[test]
    fn assignments() {
        let g = cycle(3);
        let a = parse_assignment("lists 3\n0 : 1 2\n1 : 2 3\n2 : 1 3\n", &g).unwrap();
        assert_eq!(parse_assignment(&write_assignment(&a), &g).unwrap(), a);
        let text = "corr 3\n0 : 2\n1 : 2\n2 : 2\n0 1 : 1-2 2-1\n2 1 : 1-1\n";
        let c = parse_assignment(text, &g).unwrap();
        let Assignment::Corr(ref corr) = c else { panic!() };
        assert!(corr.conflicts(1, 1, 2, 1));
        assert!(corr.conflicts(0, 1, 1, 2));
        assert_eq!(parse_assignment(&write_assignment(&c), &g).unwrap(), c);
        let e = parse_assignment("corr 3\n0 : 2\n1 : 2\n2 : 2\n0 1 : 1-3\n", &g).unwrap_err();
        assert_eq!((e.line, e.column), (5, 7));
        assert!(e.message.contains("f(1)"));
    }
}
