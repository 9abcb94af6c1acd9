//! Induced-subgraph search for paths, 2K2 and arbitrary small patterns.

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::bitset::VertexSet;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum PatternKind {
    /// Path on `t` vertices.
    PathP(usize),
    /// Two disjoint edges with no edges between them.
    TwoK2,
    Custom(Graph),
}

impl PatternKind {
    pub fn vertex_count(&self) -> usize {
        match self {
            PatternKind::PathP(t) => *t,
            PatternKind::TwoK2 => 4,
            PatternKind::Custom(g) => g.n(),
        }
    }

    /// The pattern as a graph, with vertices in witness order.
    pub fn to_graph(&self) -> Graph {
        match self {
            PatternKind::PathP(t) => Graph::path(*t),
            PatternKind::TwoK2 => Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap(),
            PatternKind::Custom(g) => g.clone(),
        }
    }
}

impl std::str::FromStr for PatternKind {
    type Err = Error;

    /// Accepts `2k2`, `p5`, `P<t>`.
    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        if lower == "2k2" {
            return Ok(PatternKind::TwoK2);
        }
        if let Some(t) = lower.strip_prefix('p') {
            if let Ok(t) = t.parse::<usize>() {
                if t >= 1 {
                    return Ok(PatternKind::PathP(t));
                }
            }
        }
        Err(Error::invalid(format!("unknown pattern {s:?}; expected 2k2 or P<t> with t >= 1")))
    }
}

/// Finds vertices of `g` inducing `pattern`.
///
/// The witness lists graph vertices in the pattern's vertex order: for
/// `PathP(t)` consecutive entries are adjacent, for `TwoK2` the witness is
/// `(a, b, c, d)` with edges `ab` and `cd`. Returns `Ok(None)` when `g` is
/// pattern-free.
pub fn find_induced(g: &Graph, pattern: &PatternKind) -> Result<Option<Vec<usize>>> {
    let size = pattern.vertex_count();
    if size > g.n() {
        return Err(Error::invalid(format!(
            "pattern has {size} vertices but the graph only has {}",
            g.n()
        )));
    }
    Ok(match pattern {
        PatternKind::PathP(0) => return Err(Error::invalid("P0 is not a pattern")),
        PatternKind::PathP(t) => find_path(g, *t),
        PatternKind::TwoK2 => find_two_k2(g),
        PatternKind::Custom(p) => find_custom(g, p),
    })
}

fn closed(g: &Graph, v: usize) -> VertexSet {
    let mut s = g.neighbours(v).clone();
    s.insert(v);
    s
}

fn find_path(g: &Graph, t: usize) -> Option<Vec<usize>> {
    if t == 1 {
        return (g.n() > 0).then(|| vec![0]);
    }
    let mut path = Vec::with_capacity(t);
    for start in 0..g.n() {
        path.push(start);
        // vertices that may no longer appear: closed neighbourhoods of all but the last path vertex
        let blocked = VertexSet::new(g.n());
        if extend_path(g, t, &mut path, blocked) {
            return Some(path);
        }
        path.pop();
    }
    None
}

fn extend_path(g: &Graph, t: usize, path: &mut Vec<usize>, blocked: VertexSet) -> bool {
    let last = *path.last().unwrap();
    let mut candidates = g.neighbours(last).clone();
    candidates.difference_with(&blocked);
    for &p in path.iter() {
        candidates.remove(p);
    }
    if path.len() + 1 == t {
        // reversal symmetry: report each path once, with the smaller endpoint first
        if let Some(end) = candidates.iter().find(|&w| w > path[0]) {
            path.push(end);
            return true;
        }
        return false;
    }
    let mut next_blocked = blocked;
    for v in closed(g, last).iter() {
        next_blocked.insert(v);
    }
    for w in candidates.iter() {
        path.push(w);
        if extend_path(g, t, path, next_blocked.clone()) {
            return true;
        }
        path.pop();
    }
    false
}

fn find_two_k2(g: &Graph) -> Option<Vec<usize>> {
    for (a, b) in g.edges() {
        let mut free = VertexSet::full(g.n());
        free.difference_with(&closed(g, a));
        free.difference_with(&closed(g, b));
        for c in free.iter().filter(|&c| c > a) {
            if let Some(d) = g.neighbours(c).intersection(&free).iter().find(|&d| d > c) {
                return Some(vec![a, b, c, d]);
            }
        }
    }
    None
}

fn find_custom(g: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    let mut image = Vec::with_capacity(pattern.n());
    map_next(g, pattern, &mut image).then_some(image)
}

fn map_next(g: &Graph, pattern: &Graph, image: &mut Vec<usize>) -> bool {
    let i = image.len();
    if i == pattern.n() {
        return true;
    }
    let mut candidates = VertexSet::full(g.n());
    for (j, &u) in image.iter().enumerate() {
        if pattern.has_edge(i, j) {
            candidates.intersect_with(g.neighbours(u));
        } else {
            candidates.difference_with(&closed(g, u));
        }
    }
    for w in candidates.iter() {
        image.push(w);
        if map_next(g, pattern, image) {
            return true;
        }
        image.pop();
    }
    false
}
