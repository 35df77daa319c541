//! Text formats for distance matrices and edge lists.
//!
//! Matrix files hold `N` followed by `N * N` whitespace-separated entries in
//! row-major order. `INF` (or `X`, the output spelling) denotes infinity.
//! Edge-list files use the shortest-path problem layout:
//!
//! ```text
//! c optional comment lines
//! p sp <N> <M>
//! a <src> <dst> <weight>      (M lines, 1-based vertex ids)
//! ```

use std::collections::HashSet;
use std::io::{self, Read, Write};

use crate::error::{GraphError, ParseError, ParseErrorKind, ReadError};
use crate::graph::{Edge, EdgeListGraph};
use crate::matrix::DistanceMatrix;
use crate::weight::Weight;

/// Infinity value used by the legacy C input format.
pub const LEGACY_INFINITY: i64 = 9999;

/// How numeric tokens map to infinity when reading a matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum InfMode {
    /// Only the `INF` / `X` tokens are infinite; the diagonal must be exactly 0.
    #[default]
    Canonical,
    /// Additionally the given numeric value means infinity, and non-negative
    /// or infinite diagonal entries are forced to 0.
    Legacy(i64),
}

impl InfMode {
    pub fn legacy() -> Self {
        InfMode::Legacy(LEGACY_INFINITY)
    }
}

struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

fn tokens(input: &str) -> impl Iterator<Item = Token<'_>> {
    input.lines().enumerate().flat_map(|(li, line)| {
        let mut rest = line;
        let mut offset = 0;
        std::iter::from_fn(move || {
            let start = rest.find(|c: char| !c.is_whitespace())?;
            let len = rest[start..].find(char::is_whitespace).unwrap_or(rest.len() - start);
            let tok = Token {
                text: &rest[start..start + len],
                line: li + 1,
                column: line[..offset + start].chars().count() + 1,
            };
            offset += start + len;
            rest = &rest[start + len..];
            Some(tok)
        })
    })
}

impl Token<'_> {
    fn error(&self, kind: ParseErrorKind) -> ParseError {
        ParseError { line: self.line, column: self.column, kind }
    }

    fn bad(&self) -> ParseError {
        self.error(ParseErrorKind::BadToken(self.text.to_string()))
    }

    fn parse<T: std::str::FromStr>(&self) -> Result<T, ParseError> {
        self.text.parse().map_err(|_| self.bad())
    }
}

fn eof_position(input: &str) -> (usize, usize) {
    let line = input.lines().count().max(1);
    let column = input.lines().last().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}

fn eof(input: &str, what: &'static str) -> ParseError {
    let (line, column) = eof_position(input);
    ParseError { line, column, kind: ParseErrorKind::UnexpectedEof(what) }
}

/// Reads a matrix file.
pub fn read_matrix<R: Read>(mut source: R, inf_mode: InfMode) -> Result<DistanceMatrix, ReadError> {
    let mut text = String::new();
    source.read_to_string(&mut text)?;
    Ok(parse_matrix(&text, inf_mode)?)
}

/// Parses matrix text; see [`read_matrix`].
pub fn parse_matrix(text: &str, inf_mode: InfMode) -> Result<DistanceMatrix, ParseError> {
    let mut toks = tokens(text);
    let head = toks.next().ok_or_else(|| eof(text, "vertex count"))?;
    let n: usize = head.parse()?;
    if n == 0 {
        return Err(head.error(GraphError::Empty.into()));
    }
    let mut m = DistanceMatrix::unconnected(n).expect("n >= 1");
    for idx in 0..n * n {
        let (i, j) = (idx / n, idx % n);
        let tok = toks.next().ok_or_else(|| eof(text, "matrix entry"))?;
        let w = match tok.text {
            "INF" | "X" => Weight::Infinity,
            t => match (t.parse::<i64>().map_err(|_| tok.bad())?, inf_mode) {
                (v, InfMode::Legacy(inf)) if v == inf => Weight::Infinity,
                (v, _) => Weight::Finite(v),
            },
        };
        if i == j {
            let accepted = match (inf_mode, w) {
                (_, Weight::Finite(0)) => true,
                (InfMode::Canonical, _) => false,
                (InfMode::Legacy(_), Weight::Infinity) => true,
                (InfMode::Legacy(_), Weight::Finite(v)) => v > 0,
            };
            if !accepted {
                let err = match inf_mode {
                    InfMode::Canonical => GraphError::NonZeroDiagonal { vertex: i, weight: w },
                    InfMode::Legacy(_) => GraphError::SelfLoop { vertex: i },
                };
                return Err(tok.error(err.into()));
            }
            continue;
        }
        if !w.within_load_bound() {
            return Err(tok.error(GraphError::WeightOutOfBounds { src: i, dst: j, weight: w }.into()));
        }
        m.set(i, j, w);
    }
    if let Some(extra) = toks.next() {
        return Err(extra.error(ParseErrorKind::TrailingToken(extra.text.to_string())));
    }
    Ok(m)
}

/// Writes `N`, then one line per row with entries separated by single spaces.
/// Infinity is written as `X`.
pub fn write_matrix<W: Write>(m: &DistanceMatrix, mut sink: W) -> io::Result<()> {
    let mut line = String::new();
    writeln!(sink, "{}", m.n())?;
    for i in 0..m.n() {
        line.clear();
        for (j, w) in m.row(i).enumerate() {
            if j > 0 {
                line.push(' ');
            }
            match w {
                Weight::Finite(v) => {
                    use std::fmt::Write as _;
                    let _ = write!(line, "{v}");
                }
                Weight::Infinity => line.push('X'),
            }
        }
        line.push('\n');
        sink.write_all(line.as_bytes())?;
    }
    sink.flush()
}

pub fn matrix_to_string(m: &DistanceMatrix) -> String {
    let mut buf = Vec::new();
    write_matrix(m, &mut buf).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("matrix text is ASCII")
}

/// Reads an edge-list file.
pub fn read_edge_list<R: Read>(mut source: R) -> Result<EdgeListGraph, ReadError> {
    let mut text = String::new();
    source.read_to_string(&mut text)?;
    Ok(parse_edge_list(&text)?)
}

pub fn parse_edge_list(text: &str) -> Result<EdgeListGraph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    let mut last_line = 0;

    for (li, line) in text.lines().enumerate() {
        last_line = li + 1;
        let toks: Vec<Token<'_>> = tokens(line).map(|t| Token { line: li + 1, ..t }).collect();
        let Some(first) = toks.first() else { continue };
        let field = |idx: usize, what: &'static str| {
            toks.get(idx).ok_or(ParseError {
                line: li + 1,
                column: line.chars().count() + 1,
                kind: ParseErrorKind::UnexpectedEof(what),
            })
        };
        match first.text {
            t if t.starts_with('c') => continue,
            "p" => {
                let kind = field(1, "problem type")?;
                if kind.text != "sp" {
                    return Err(kind.bad());
                }
                let n_tok = field(2, "vertex count")?;
                let n: usize = n_tok.parse()?;
                if n == 0 {
                    return Err(n_tok.error(GraphError::Empty.into()));
                }
                let m: usize = field(3, "edge count")?.parse()?;
                if header.is_some() {
                    return Err(first.bad());
                }
                header = Some((n, m));
                edges.reserve(m);
                if let Some(extra) = toks.get(4) {
                    return Err(extra.error(ParseErrorKind::TrailingToken(extra.text.to_string())));
                }
            }
            "a" => {
                let (n, _) = header.ok_or_else(|| first.error(ParseErrorKind::MissingHeader))?;
                let src_tok = field(1, "source vertex")?;
                let dst_tok = field(2, "target vertex")?;
                let w_tok = field(3, "weight")?;
                let vertex = |tok: &Token<'_>| -> Result<usize, ParseError> {
                    let v: usize = tok.parse()?;
                    if v == 0 || v > n {
                        return Err(tok.error(GraphError::VertexOutOfRange { vertex: v.wrapping_sub(1), n }.into()));
                    }
                    Ok(v - 1)
                };
                let (src, dst) = (vertex(src_tok)?, vertex(dst_tok)?);
                let weight: i64 = w_tok.parse()?;
                if src == dst {
                    return Err(first.error(GraphError::SelfLoop { vertex: src }.into()));
                }
                if !Weight::Finite(weight).within_load_bound() {
                    return Err(
                        w_tok.error(GraphError::WeightOutOfBounds { src, dst, weight: Weight::Finite(weight) }.into())
                    );
                }
                if !seen.insert((src, dst)) {
                    return Err(first.error(GraphError::DuplicateEdge { src, dst }.into()));
                }
                if let Some(extra) = toks.get(4) {
                    return Err(extra.error(ParseErrorKind::TrailingToken(extra.text.to_string())));
                }
                edges.push(Edge::new(src, dst, weight));
            }
            other => return Err(first.error(ParseErrorKind::UnknownLine(other.to_string()))),
        }
    }

    let (n, m) = header.ok_or(ParseError { line: last_line.max(1), column: 1, kind: ParseErrorKind::MissingHeader })?;
    if edges.len() != m {
        let (line, column) = eof_position(text);
        return Err(ParseError { line, column, kind: ParseErrorKind::EdgeCount { expected: m, found: edges.len() } });
    }
    EdgeListGraph::new(n, edges).map_err(|e| ParseError { line: 1, column: 1, kind: e.into() })
}

/// Writes an edge-list file. Each entry of `comments` becomes a `c` line
/// ahead of the problem line.
pub fn write_edge_list<W: Write>(g: &EdgeListGraph, comments: &[String], mut sink: W) -> io::Result<()> {
    let mut out = io::BufWriter::new(&mut sink);
    for c in comments {
        writeln!(out, "c {c}")?;
    }
    writeln!(out, "p sp {} {}", g.n(), g.m())?;
    for e in g.edges() {
        writeln!(out, "a {} {} {}", e.src + 1, e.dst + 1, e.weight)?;
    }
    out.flush()
}
