//! Plain-text graph formats.
//!
//! Edge list: a header line `n m`, then `m` lines `u v` with 0-based ids.
//! DIMACS: `p edge n m`, then `e u v` lines with 1-based ids. Blank lines and
//! lines starting with `#` are ignored in both; DIMACS also skips `c` lines.

use std::collections::HashSet;
use std::fmt::Write;
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Dimacs,
}

impl Format {
    /// Guesses the format from the first non-comment line.
    pub fn detect(text: &str) -> Format {
        for line in text.lines() {
            let t = line.trim();
            if t.is_empty() || t.starts_with('#') || t.starts_with('c') {
                continue;
            }
            return if t.starts_with('p') {
                Format::Dimacs
            } else {
                Format::EdgeList
            };
        }
        Format::EdgeList
    }

    /// Offset added to internal ids when printing in this format.
    pub fn id_offset(self) -> usize {
        match self {
            Format::EdgeList => 0,
            Format::Dimacs => 1,
        }
    }
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edgelist" | "edge-list" => Ok(Format::EdgeList),
            "dimacs" => Ok(Format::Dimacs),
            other => Err(Error::InvalidParameter(format!("unknown format '{other}'"))),
        }
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn number(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| parse_err(line, format!("invalid {what} '{tok}'")))
}

fn data_lines(text: &str, format: Format) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(move |(i, l)| {
        let t = l.trim();
        let skip = t.is_empty()
            || t.starts_with('#')
            || (format == Format::Dimacs && (t == "c" || t.starts_with("c ")));
        (!skip).then_some((i + 1, t))
    })
}

pub fn parse_graph(text: &str, format: Format) -> Result<Graph> {
    let mut lines = data_lines(text, format);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing header line"))?;
    let mut toks = header.split_whitespace();
    if format == Format::Dimacs {
        if toks.next() != Some("p") {
            return Err(parse_err(hline, "expected 'p edge n m'"));
        }
        match toks.next() {
            Some("edge") | Some("col") => {}
            _ => return Err(parse_err(hline, "expected problem type 'edge'")),
        }
    }
    let n = number(toks.next(), hline, "vertex count")?;
    let m = number(toks.next(), hline, "edge count")?;
    if toks.next().is_some() {
        return Err(parse_err(hline, "trailing tokens in header"));
    }

    let mut g = Graph::empty(n);
    let mut seen = HashSet::with_capacity(m);
    let mut read = 0;
    for (ln, line) in lines {
        if read == m {
            return Err(parse_err(ln, format!("more than the declared {m} edges")));
        }
        let mut toks = line.split_whitespace();
        if format == Format::Dimacs && toks.next() != Some("e") {
            return Err(parse_err(ln, "expected 'e u v'"));
        }
        let mut u = number(toks.next(), ln, "endpoint")?;
        let mut v = number(toks.next(), ln, "endpoint")?;
        if toks.next().is_some() {
            return Err(parse_err(ln, "trailing tokens"));
        }
        if format == Format::Dimacs {
            if u == 0 || v == 0 {
                return Err(parse_err(ln, "DIMACS vertex ids start at 1"));
            }
            u -= 1;
            v -= 1;
        }
        g.push_edge(u, v, &mut seen).map_err(|e| Error::AtLine {
            line: ln,
            source: Box::new(e),
        })?;
        read += 1;
    }
    if read < m {
        return Err(parse_err(
            text.lines().count(),
            format!("expected {m} edges, found {read}"),
        ));
    }
    Ok(g)
}

pub fn write_graph(g: &Graph, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::EdgeList => {
            writeln!(out, "{} {}", g.n(), g.m()).unwrap();
            for &(u, v) in g.edges() {
                writeln!(out, "{u} {v}").unwrap();
            }
        }
        Format::Dimacs => {
            writeln!(out, "p edge {} {}", g.n(), g.m()).unwrap();
            for &(u, v) in g.edges() {
                writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
            }
        }
    }
    out
}
