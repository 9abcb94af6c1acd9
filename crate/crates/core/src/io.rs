//! Graph file formats: plain edge lists, DIMACS `.col`, JSON, and DOT export.
//!
//! Edge list:
//!
//! ```text
//! n m
//! u v        (m lines, 0 <= u < v < n)
//! ```
//!
//! DIMACS: `c` comment lines, one `p edge n m` header, `e u v` lines with
//! 1-based vertices. JSON: either a bare graph `{"n", "edges"}` or an instance
//! bundle `{"p", "graph", "alpha", "beta"}`.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use crate::colouring::Colouring;
use crate::construction::PaperInstance;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Dimacs,
    Json,
}

impl GraphFormat {
    /// `.col`/`.dimacs` are DIMACS, `.json` is JSON, anything else an edge list.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()).map(str::to_ascii_lowercase).as_deref() {
            Some("col") | Some("dimacs") => GraphFormat::Dimacs,
            Some("json") => GraphFormat::Json,
            _ => GraphFormat::EdgeList,
        }
    }
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "edgelist" | "edge-list" | "el" => Ok(GraphFormat::EdgeList),
            "dimacs" | "col" => Ok(GraphFormat::Dimacs),
            "json" => Ok(GraphFormat::Json),
            other => Err(Error::invalid(format!("unknown graph format {other:?}"))),
        }
    }
}

/// A parsed graph file: either a bare graph or a full instance bundle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphInput {
    Graph(Graph),
    Instance(PaperInstance),
}

impl GraphInput {
    pub fn graph(&self) -> &Graph {
        match self {
            GraphInput::Graph(g) => g,
            GraphInput::Instance(inst) => &inst.graph,
        }
    }

    pub fn into_graph(self) -> Graph {
        match self {
            GraphInput::Graph(g) => g,
            GraphInput::Instance(inst) => inst.graph,
        }
    }
}

pub fn read_graph_file(path: &Path, format: Option<GraphFormat>) -> Result<GraphInput> {
    let text = std::fs::read_to_string(path)?;
    parse_graph(&text, format.unwrap_or_else(|| GraphFormat::from_path(path)))
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<GraphInput> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text).map(GraphInput::Graph),
        GraphFormat::Dimacs => parse_dimacs(text).map(GraphInput::Graph),
        GraphFormat::Json => parse_json(text),
    }
}

fn parse_json(text: &str) -> Result<GraphInput> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| Error::parse(e.line(), e.column(), e.to_string()))?;
    if value.get("graph").is_some() {
        Ok(GraphInput::Instance(serde_json::from_value(value)?))
    } else {
        Ok(GraphInput::Graph(serde_json::from_value(value)?))
    }
}

/// Splits a line into tokens with their 1-based starting columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

fn number(line_no: usize, (column, tok): (usize, &str)) -> Result<usize> {
    tok.parse::<usize>()
        .map_err(|_| Error::parse(line_no, column, format!("expected a non-negative integer, found {tok:?}")))
}

fn expect_fields<'a>(line_no: usize, line: &'a str, count: usize, what: &str) -> Result<Vec<(usize, &'a str)>> {
    let toks = tokens(line);
    if toks.len() != count {
        let column = toks.get(count).map_or(line.len().max(1), |t| t.0);
        return Err(Error::parse(line_no, column, format!("expected {what}, found {:?}", line.trim())));
    }
    Ok(toks)
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (line_no, header) = lines
        .by_ref()
        .find(|(_, l)| !l.trim().is_empty())
        .ok_or_else(|| Error::parse(1, 1, "empty edge list: missing \"n m\" header"))?;
    let fields = expect_fields(line_no, header, 2, "header \"n m\"")?;
    let n = number(line_no, fields[0])?;
    let m = number(line_no, fields[1])?;

    let mut edges = BTreeSet::new();
    let mut seen = 0;
    let mut last_line = line_no;
    for (line_no, line) in lines {
        last_line = line_no;
        if line.trim().is_empty() {
            continue;
        }
        let fields = expect_fields(line_no, line, 2, "edge \"u v\"")?;
        let u = number(line_no, fields[0])?;
        let v = number(line_no, fields[1])?;
        if !(u < v && v < n) {
            return Err(Error::parse(line_no, fields[0].0, format!("edge \"{u} {v}\" must satisfy 0 <= u < v < {n}")));
        }
        if !edges.insert((u, v)) {
            return Err(Error::parse(line_no, fields[0].0, format!("repeated edge \"{u} {v}\"")));
        }
        seen += 1;
        if seen > m {
            return Err(Error::parse(line_no, 1, format!("more than the {m} edges declared in the header")));
        }
    }
    if seen != m {
        return Err(Error::parse(last_line, 1, format!("header declares {m} edges but {seen} were listed")));
    }
    Graph::from_edges(n, edges)
}

pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut graph: Option<(usize, BTreeSet<(usize, usize)>)> = None;
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let toks = tokens(line);
        match toks.first().map(|t| t.1) {
            None | Some("c") => continue,
            Some("p") => {
                if graph.is_some() {
                    return Err(Error::parse(line_no, 1, "second problem line"));
                }
                let fields = expect_fields(line_no, line, 4, "\"p edge n m\"")?;
                if !matches!(fields[1].1, "edge" | "col") {
                    return Err(Error::parse(line_no, fields[1].0, format!("unsupported problem type {:?}", fields[1].1)));
                }
                let n = number(line_no, fields[2])?;
                number(line_no, fields[3])?;
                graph = Some((n, BTreeSet::new()));
            }
            Some("e") => {
                let (n, edges) = graph
                    .as_mut()
                    .ok_or_else(|| Error::parse(line_no, 1, "edge line before the \"p edge n m\" header"))?;
                let fields = expect_fields(line_no, line, 3, "\"e u v\"")?;
                let u = number(line_no, fields[1])?;
                let v = number(line_no, fields[2])?;
                let n = *n;
                for (val, field) in [(u, fields[1]), (v, fields[2])] {
                    if val == 0 || val > n {
                        return Err(Error::parse(line_no, field.0, format!("vertex {val} outside 1..={n}")));
                    }
                }
                if u == v {
                    return Err(Error::parse(line_no, fields[1].0, format!("self-loop at vertex {u}")));
                }
                // both orientations of an edge are common in the wild
                edges.insert((u.min(v) - 1, u.max(v) - 1));
            }
            Some(other) => {
                return Err(Error::parse(line_no, toks[0].0, format!("unknown line type {other:?}")));
            }
        }
    }
    let (n, edges) = graph.ok_or_else(|| Error::parse(1, 1, "missing \"p edge n m\" header"))?;
    Graph::from_edges(n, edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

/// Graphviz rendering; vertices are labelled with their colour when one is given.
pub fn write_dot(g: &Graph, colouring: Option<&Colouring>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        match colouring {
            Some(c) => writeln!(out, "  {v} [label=\"{v}:{}\"];", c.colour(v)).unwrap(),
            None => writeln!(out, "  {v};").unwrap(),
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}
