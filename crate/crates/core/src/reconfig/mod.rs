//! The reconfiguration graph `R_k(G)`: proper `k`-colourings joined when they
//! differ on exactly one vertex.
//!
//! Explicit construction ([`build_reconfig`], [`is_mixing`]) enumerates every
//! proper colouring and is bounded by [`Limits::node_cap`]. The lazy
//! operations ([`neighbours`], [`component_of`]) and [`find_frozen`] never
//! materialise the full node set and are bounded by a node budget instead.

mod frozen;
mod lazy;
mod union_find;

pub use frozen::{find_frozen, FrozenSearch};
pub use lazy::{component_members, component_of, neighbours, ComponentExploration, PackedColouring};
pub use union_find::UnionFind;

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::colouring::{enumerate_colourings, is_frozen, Colouring};
use crate::config::Limits;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Explicit reconfiguration graph.
#[derive(Debug, Clone)]
pub struct ReconfigGraph {
    pub base: Graph,
    pub k: u32,
    /// All proper k-colourings, lexicographically sorted.
    pub nodes: Vec<Colouring>,
    /// Pairs `(a, b)` of node indices, `a < b`, sorted.
    pub edges: Vec<(usize, usize)>,
}

impl ReconfigGraph {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn index_of(&self, c: &Colouring) -> Option<usize> {
        self.nodes.binary_search(c).ok()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.nodes.len()];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    /// Indices of nodes with no neighbours, i.e. the frozen colourings.
    pub fn isolated_nodes(&self) -> Vec<usize> {
        self.degrees()
            .into_iter()
            .enumerate()
            .filter(|&(_, d)| d == 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// Component label of every node (smallest node index in its component).
    pub fn component_labels(&self) -> Vec<usize> {
        let mut uf = UnionFind::new(self.nodes.len());
        for &(a, b) in &self.edges {
            uf.union(a, b);
        }
        uf.canonical_labels()
    }
}

fn enumerate_nodes(g: &Graph, k: u32, limits: &Limits) -> Result<Vec<Colouring>> {
    let mut nodes = Vec::new();
    for c in enumerate_colourings(g, k, limits.enumeration_cap)? {
        nodes.push(c?);
        if nodes.len() as u64 > limits.node_cap {
            return Err(Error::Resource {
                what: format!("number of proper {k}-colourings"),
                limit: limits.node_cap,
                hint: "; use the lazy operations (component_of, find_frozen) instead",
            });
        }
    }
    Ok(nodes)
}

/// Orders colourings as if vertex `skip` were erased.
fn cmp_without(a: &Colouring, b: &Colouring, skip: usize) -> Ordering {
    let (a, b) = (a.assignment(), b.assignment());
    a[..skip].cmp(&b[..skip]).then_with(|| a[skip + 1..].cmp(&b[skip + 1..]))
}

/// Groups of node indices that agree everywhere except possibly at `vertex`.
/// Nodes in a group are pairwise adjacent in R_k.
fn buckets(nodes: &[Colouring], vertex: usize) -> Vec<Vec<usize>> {
    let mut order: Vec<usize> = (0..nodes.len()).collect();
    order.sort_by(|&x, &y| cmp_without(&nodes[x], &nodes[y], vertex).then(x.cmp(&y)));
    let mut groups = Vec::new();
    let mut start = 0;
    for i in 1..=order.len() {
        if i == order.len() || cmp_without(&nodes[order[start]], &nodes[order[i]], vertex) != Ordering::Equal {
            if i - start > 1 {
                groups.push(order[start..i].to_vec());
            }
            start = i;
        }
    }
    groups
}

/// Builds `R_k(g)` explicitly.
pub fn build_reconfig(g: &Graph, k: u32, limits: &Limits) -> Result<ReconfigGraph> {
    let nodes = enumerate_nodes(g, k, limits)?;
    let mut edges = Vec::new();
    for v in 0..g.n() {
        for group in buckets(&nodes, v) {
            for (i, &a) in group.iter().enumerate() {
                for &b in &group[i + 1..] {
                    edges.push((a.min(b), a.max(b)));
                }
            }
        }
    }
    edges.sort_unstable();
    Ok(ReconfigGraph {
        base: g.clone(),
        k,
        nodes,
        edges,
    })
}

/// Certificate that `R_k` is disconnected.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Witness {
    /// An isolated node of R_k.
    Frozen(Colouring),
    /// Two colourings in different components.
    Separated([Colouring; 2]),
}

/// Answer to "is `G` `k`-mixing?".
///
/// An empty `R_k` (no proper `k`-colouring) is reported as not connected with
/// zero components.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MixingVerdict {
    pub connected: bool,
    pub components: Option<usize>,
    pub witness: Option<Witness>,
    pub exhaustive: bool,
}

/// Decides connectivity of `R_k(g)` with union-find over the bucketed edges.
pub fn is_mixing(g: &Graph, k: u32, limits: &Limits) -> Result<MixingVerdict> {
    let nodes = enumerate_nodes(g, k, limits)?;
    let mut uf = UnionFind::new(nodes.len());
    for v in 0..g.n() {
        for group in buckets(&nodes, v) {
            for pair in group.windows(2) {
                uf.union(pair[0], pair[1]);
            }
        }
    }
    let components = uf.set_count();
    let connected = components == 1;
    let witness = if components <= 1 {
        None
    } else {
        let mut frozen = None;
        for (i, c) in nodes.iter().enumerate() {
            if uf.set_size(i) == 1 && is_frozen(g, c)? {
                frozen = Some(c.clone());
                break;
            }
        }
        Some(match frozen {
            Some(c) => Witness::Frozen(c),
            None => {
                let first = uf.find(0);
                let other = (1..nodes.len()).find(|&i| uf.find(i) != first).expect("at least two components");
                Witness::Separated([nodes[0].clone(), nodes[other].clone()])
            }
        })
    };
    Ok(MixingVerdict {
        connected,
        components: Some(components),
        witness,
        exhaustive: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn limits() -> Limits {
        Limits::default()
    }

    /// All pairs of colourings compared directly.
    fn brute_force_edges(nodes: &[Colouring]) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        for i in 0..nodes.len() {
            for j in i + 1..nodes.len() {
                let diff = nodes[i]
                    .assignment()
                    .iter()
                    .zip(nodes[j].assignment())
                    .filter(|(a, b)| a != b)
                    .count();
                if diff == 1 {
                    edges.push((i, j));
                }
            }
        }
        edges
    }

    #[test]
    fn triangle_with_three_colours_is_all_isolated() {
        let r = build_reconfig(&Graph::complete(3), 3, &limits()).unwrap();
        assert_eq!((r.node_count(), r.edge_count()), (6, 0));
        let v = is_mixing(&Graph::complete(3), 3, &limits()).unwrap();
        assert!(!v.connected);
        assert_eq!(v.components, Some(6));
        assert!(matches!(v.witness, Some(Witness::Frozen(_))));
    }

    #[test]
    fn k2_with_three_colours_is_a_hexagon() {
        let r = build_reconfig(&Graph::complete(2), 3, &limits()).unwrap();
        assert_eq!(r.node_count(), 6);
        assert_eq!(r.edges, brute_force_edges(&r.nodes));
        assert_eq!(r.edge_count(), 6);
        assert!(r.degrees().iter().all(|&d| d == 2));
        let v = is_mixing(&Graph::complete(2), 3, &limits()).unwrap();
        assert!(v.connected);
        assert_eq!(v.components, Some(1));
        assert_eq!(v.witness, None);
    }

    #[test]
    fn c4_two_colourings_are_isolated() {
        let r = build_reconfig(&Graph::cycle(4).unwrap(), 2, &limits()).unwrap();
        assert_eq!((r.node_count(), r.edge_count()), (2, 0));
        assert_eq!(r.isolated_nodes(), vec![0, 1]);
    }

    #[test]
    fn separated_witness_without_frozen_node() {
        // two disjoint K2 copies with 3 colours are connected; the 5-cycle with 3 colours is not
        let c5 = Graph::cycle(5).unwrap();
        let r = build_reconfig(&c5, 3, &limits()).unwrap();
        assert_eq!(r.edges, brute_force_edges(&r.nodes));
        let v = is_mixing(&c5, 3, &limits()).unwrap();
        assert!(!v.connected);
        if r.isolated_nodes().is_empty() {
            assert!(matches!(v.witness, Some(Witness::Separated(_))));
        }
    }

    #[test]
    fn uncolourable_graph_has_empty_reconfiguration_graph() {
        let v = is_mixing(&Graph::complete(4), 3, &limits()).unwrap();
        assert_eq!((v.connected, v.components, v.witness), (false, Some(0), None));
    }

    #[test]
    fn node_cap_is_enforced() {
        let tight = Limits {
            node_cap: 5,
            ..Limits::default()
        };
        let err = build_reconfig(&Graph::complete(2), 3, &tight).unwrap_err();
        assert!(err.to_string().contains("lazy"));
    }

    #[test]
    fn verdict_json_shape() {
        let v = is_mixing(&Graph::complete(2), 3, &limits()).unwrap();
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            r#"{"connected":true,"components":1,"witness":null,"exhaustive":true}"#
        );
    }
}
