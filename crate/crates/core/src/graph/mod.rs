//! Simple undirected graphs on vertices `0..n` with bitset adjacency.

mod chromatic;
mod clique;
mod pattern;

pub use chromatic::{chromatic_number, is_k_colourable, ChromaticSearch};
pub use clique::{clique_number, max_clique};
pub use pattern::{find_induced, PatternKind};

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// Simple undirected graph. Immutable once built; all builders return new values.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "EdgeList", into = "EdgeList")]
pub struct Graph {
    adj: Vec<VertexSet>,
    m: usize,
}

/// Wire form of a graph: vertex count plus sorted `u < v` pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeList {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl TryFrom<EdgeList> for Graph {
    type Error = Error;

    fn try_from(list: EdgeList) -> Result<Self> {
        Graph::from_edges(list.n, list.edges.iter().map(|&[u, v]| (u, v)))
    }
}

impl From<Graph> for EdgeList {
    fn from(g: Graph) -> Self {
        EdgeList {
            n: g.n(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![VertexSet::new(n); n],
            m: 0,
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert_edge(u, v);
            }
        }
        g
    }

    /// Path on `n` vertices `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        let mut g = Self::empty(n);
        for v in 1..n {
            g.insert_edge(v - 1, v);
        }
        g
    }

    /// The cycle `C_n` with edges `{i, i+1 mod n}`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::invalid(format!("a cycle needs at least 3 vertices, got {n}")));
        }
        let mut g = Self::path(n);
        g.insert_edge(0, n - 1);
        Ok(g)
    }

    /// Builds a graph from an edge list, rejecting self-loops, out-of-range
    /// endpoints and repeated edges.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::invalid(format!("edge {{{u}, {v}}} has an endpoint outside 0..{n}")));
            }
            if u == v {
                return Err(Error::invalid(format!("self-loop at vertex {u}")));
            }
            if !g.insert_edge(u, v) {
                return Err(Error::invalid(format!("repeated edge {{{u}, {v}}}")));
            }
        }
        Ok(g)
    }

    /// Graph on `0..n` with `u ~ v` iff `adjacent(u, v)`; the predicate is queried for `u < v`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    g.insert_edge(u, v);
                }
            }
        }
        g
    }

    fn insert_edge(&mut self, u: usize, v: usize) -> bool {
        if self.adj[u].contains(v) {
            return false;
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        self.m += 1;
        true
    }

    /// Copy of this graph with the edge `{u, v}` added (no-op if present).
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.check_pair(u, v)?;
        let mut g = self.clone();
        g.insert_edge(u, v);
        Ok(g)
    }

    /// Copy of this graph with the edge `{u, v}` removed (no-op if absent).
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.check_pair(u, v)?;
        let mut g = self.clone();
        if g.adj[u].contains(v) {
            g.adj[u].remove(v);
            g.adj[v].remove(u);
            g.m -= 1;
        }
        Ok(g)
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        if u >= self.n() || v >= self.n() || u == v {
            return Err(Error::invalid(format!("{{{u}, {v}}} is not a vertex pair of a graph on {} vertices", self.n())));
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbours(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// BFS distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for w in self.adj[u].iter() {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// The `d`-th power: `u ~ v` iff their distance in `self` lies in `1..=d`.
    pub fn power(&self, d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::invalid("graph power requires d >= 1"));
        }
        let mut g = Self::empty(self.n());
        for u in 0..self.n() {
            for (v, dist) in self.distances_from(u).into_iter().enumerate() {
                if v > u && matches!(dist, Some(x) if x <= d) {
                    g.insert_edge(u, v);
                }
            }
        }
        Ok(g)
    }

    /// Complete join: `self` on `0..n_a`, `other` shifted to `n_a..n_a+n_b`,
    /// plus every edge between the two parts.
    pub fn join(&self, other: &Graph) -> Self {
        let (na, nb) = (self.n(), other.n());
        let mut g = Self::empty(na + nb);
        for (u, v) in self.edges() {
            g.insert_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.insert_edge(na + u, na + v);
        }
        for u in 0..na {
            for v in 0..nb {
                g.insert_edge(u, na + v);
            }
        }
        g
    }

    /// Disjoint union, `other` shifted past `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Self {
        let na = self.n();
        let mut g = Self::empty(na + other.n());
        for (u, v) in self.edges() {
            g.insert_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.insert_edge(na + u, na + v);
        }
        g
    }

    pub fn complement(&self) -> Self {
        Self::from_fn(self.n(), |u, v| !self.has_edge(u, v))
    }

    /// Subgraph induced by `vertices`, relabelled `0..vertices.len()` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        Self::from_fn(vertices.len(), |i, j| self.has_edge(vertices[i], vertices[j]))
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.distances_from(0).iter().all(Option::is_some)
    }

    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.n() == other.n() && self.edges().all(|(u, v)| other.has_edge(u, v))
    }

    pub fn to_edge_list(&self) -> EdgeList {
        self.clone().into()
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_basics() {
        let c3 = Graph::cycle(3).unwrap();
        assert_eq!((c3.n(), c3.m()), (3, 3));
        assert_eq!(c3, Graph::complete(3));

        let c16 = Graph::cycle(16).unwrap();
        assert_eq!((c16.n(), c16.m()), (16, 16));
        assert!((0..16).all(|v| c16.degree(v) == 2));

        let c4 = Graph::cycle(4).unwrap();
        assert!(!c4.has_edge(0, 2));
        assert!(c4.has_edge(3, 0));
    }

    #[test]
    fn cycle_rejects_short() {
        for n in 0..3 {
            assert!(matches!(Graph::cycle(n), Err(Error::InvalidInput(_))));
        }
    }

    #[test]
    fn fourth_power_of_c16() {
        let h = Graph::cycle(16).unwrap().power(4).unwrap();
        assert_eq!(h.m(), 64);
        assert!((0..16).all(|v| h.degree(v) == 8));
        assert!(h.has_edge(0, 4) && h.has_edge(0, 12) && !h.has_edge(0, 5));
    }

    #[test]
    fn power_identity_and_saturation() {
        let g = Graph::cycle(7).unwrap();
        assert_eq!(g.power(1).unwrap(), g);
        assert_eq!(Graph::cycle(5).unwrap().power(2).unwrap(), Graph::complete(5));
        assert!(g.power(0).is_err());
    }

    #[test]
    fn power_ignores_disconnected_pairs() {
        let g = Graph::path(2).disjoint_union(&Graph::path(2));
        assert_eq!(g.power(5).unwrap(), g);
    }

    #[test]
    fn join_small_cases() {
        let k1 = Graph::empty(1);
        assert_eq!(k1.join(&k1), Graph::complete(2));

        let k22 = Graph::empty(2).join(&Graph::empty(2));
        assert_eq!(k22.edges().collect::<Vec<_>>(), vec![(0, 2), (0, 3), (1, 2), (1, 3)]);
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
        assert!(Graph::from_edges(3, [(1, 1)]).is_err());
        assert!(Graph::from_edges(3, [(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn edge_list_serde_round_trip() {
        let g = Graph::cycle(5).unwrap();
        let json = serde_json::to_string(&g).unwrap();
        assert_eq!(json, r#"{"n":5,"edges":[[0,1],[0,4],[1,2],[2,3],[3,4]]}"#);
        let back: Graph = serde_json::from_str(&json).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn edge_removal() {
        let g = Graph::complete(4).without_edge(1, 2).unwrap();
        assert_eq!(g.m(), 5);
        assert!(!g.has_edge(2, 1));
        assert_eq!(g.with_edge(2, 1).unwrap(), Graph::complete(4));
    }
}
