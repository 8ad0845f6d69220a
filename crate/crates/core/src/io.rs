//! Text formats: `.gr` graphs and `.td` tree decompositions.
//!
//! Graphs are read from the usual challenge format — optional `c` comment
//! lines, an optional `p tw <n> <m>` header, then one edge per line with
//! 1-indexed endpoints. A bare edge list without a header is accepted too;
//! the vertex count is then inferred from the largest endpoint.

use crate::decomposition::TreeDecomposition;
use crate::graph::Graph;
use crate::set::VertexSet;
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {0}: malformed header `{1}`")]
    MalformedHeader(usize, String),
    #[error("line {0}: expected two integers, got `{1}`")]
    BadEdgeLine(usize, String),
    #[error("line {0}: vertex {1} out of range 1..={2}")]
    VertexOutOfRange(usize, usize, usize),
    #[error("line {0}: vertex ids are 1-indexed, found 0")]
    ZeroVertex(usize),
    #[error("line {0}: self-loop at vertex {1}")]
    SelfLoop(usize, usize),
    #[error("line {0}: malformed bag line `{1}`")]
    BadBagLine(usize, String),
    #[error("missing solution line")]
    MissingSolutionLine,
}

fn parse_endpoint(tok: &str, line_no: usize, n: Option<usize>) -> Result<usize, ParseError> {
    let raw: usize = tok
        .parse()
        .map_err(|_| ParseError::BadEdgeLine(line_no, tok.to_string()))?;
    if raw == 0 {
        return Err(ParseError::ZeroVertex(line_no));
    }
    if let Some(n) = n {
        if raw > n {
            return Err(ParseError::VertexOutOfRange(line_no, raw, n));
        }
    }
    Ok(raw - 1)
}

/// Parse a `.gr` graph. Duplicate edges are collapsed; self-loops are
/// rejected.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut declared_n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut max_seen = 0usize;

    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('p') {
            let mut it = line.split_whitespace();
            let _p = it.next();
            let _desc = it.next();
            let n = it.next().and_then(|t| t.parse::<usize>().ok());
            let m = it.next().and_then(|t| t.parse::<usize>().ok());
            if n.is_none() || m.is_none() || it.next().is_some() || declared_n.is_some() {
                return Err(ParseError::MalformedHeader(line_no, line.to_string()));
            }
            declared_n = n;
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(ParseError::BadEdgeLine(line_no, line.to_string()));
        }
        let u = parse_endpoint(toks[0], line_no, declared_n)?;
        let v = parse_endpoint(toks[1], line_no, declared_n)?;
        if u == v {
            return Err(ParseError::SelfLoop(line_no, u + 1));
        }
        max_seen = max_seen.max(u + 1).max(v + 1);
        edges.push((u, v));
    }

    let n = declared_n.unwrap_or(max_seen);
    Ok(Graph::from_edges(n, edges).expect("endpoints validated above"))
}

/// Render a graph in `.gr` form.
pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p tw {} {}", g.n(), g.m()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{} {}", u + 1, v + 1).unwrap();
    }
    out
}

/// Render a decomposition in `.td` form: solution line, bag lines, then the
/// tree edges between 1-indexed bag ids.
pub fn write_decomposition(td: &TreeDecomposition) -> String {
    let mut out = String::new();
    let max_bag = td.bags().iter().map(VertexSet::len).max().unwrap_or(0);
    writeln!(out, "s td {} {} {}", td.bags().len(), max_bag, td.n()).unwrap();
    for (i, bag) in td.bags().iter().enumerate() {
        write!(out, "b {}", i + 1).unwrap();
        for v in bag.iter() {
            write!(out, " {}", v + 1).unwrap();
        }
        out.push('\n');
    }
    for &(x, y) in td.edges() {
        writeln!(out, "{} {}", x + 1, y + 1).unwrap();
    }
    out
}

/// Parse a `.td` decomposition (used for round-trips and external checks).
pub fn parse_decomposition(text: &str) -> Result<TreeDecomposition, ParseError> {
    let mut header: Option<(usize, usize)> = None; // (bag count, n)
    let mut bags: Vec<VertexSet> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();

    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("s td") {
            let nums: Vec<usize> = rest
                .split_whitespace()
                .map(|t| t.parse::<usize>())
                .collect::<Result<_, _>>()
                .map_err(|_| ParseError::MalformedHeader(line_no, line.to_string()))?;
            if nums.len() != 3 || header.is_some() {
                return Err(ParseError::MalformedHeader(line_no, line.to_string()));
            }
            header = Some((nums[0], nums[2]));
            continue;
        }
        let (bag_count, n) = header.ok_or(ParseError::MissingSolutionLine)?;
        if let Some(rest) = line.strip_prefix('b') {
            let mut it = rest.split_whitespace();
            let id: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| ParseError::BadBagLine(line_no, line.to_string()))?;
            if id == 0 || id > bag_count {
                return Err(ParseError::BadBagLine(line_no, line.to_string()));
            }
            let mut bag = VertexSet::empty(n);
            for tok in it {
                bag.insert(parse_endpoint(tok, line_no, Some(n))?);
            }
            while bags.len() < id {
                bags.push(VertexSet::empty(n));
            }
            bags[id - 1] = bag;
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(ParseError::BadEdgeLine(line_no, line.to_string()));
        }
        let x = parse_endpoint(toks[0], line_no, Some(bag_count))?;
        let y = parse_endpoint(toks[1], line_no, Some(bag_count))?;
        edges.push((x, y));
    }

    let (bag_count, n) = header.ok_or(ParseError::MissingSolutionLine)?;
    while bags.len() < bag_count {
        bags.push(VertexSet::empty(n));
    }
    Ok(TreeDecomposition::new(n, bags, edges))
}
