//! Backtracking search for frozen colourings.

use serde::{Deserialize, Serialize};

use crate::colouring::Colouring;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Result of [`find_frozen`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrozenSearch {
    /// `false` when a frozen colouring with `k >= 2` was found: it is an
    /// isolated node, and swapping two colours gives a second node. `None`
    /// when the search proves nothing about connectivity.
    pub connected: Option<bool>,
    pub components: Option<usize>,
    pub witness: Option<Colouring>,
    /// The whole search tree was explored; `frozen` is then the complete set.
    pub exhaustive: bool,
    /// Frozen colourings found, lexicographically sorted.
    pub frozen: Vec<Colouring>,
    /// Search nodes (tentative vertex colourings) spent.
    pub nodes: u64,
}

/// Finds up to `limit` frozen `k`-colourings of `g`.
///
/// Vertices are coloured in order of decreasing degree. A branch is cut when
/// the colour clashes with an already coloured neighbour, or when some closed
/// neighbourhood is missing more colours than it has uncoloured vertices left.
/// The search stops early after `limit` hits or `node_budget` search nodes.
pub fn find_frozen(g: &Graph, k: u32, limit: usize, node_budget: u64) -> Result<FrozenSearch> {
    if k == 0 {
        return Err(Error::invalid("palette size k must be positive"));
    }
    if limit == 0 {
        return Err(Error::invalid("limit must be positive"));
    }
    let mut search = Search::new(g, k as usize, limit, node_budget);
    let complete = search.run(0);
    let mut frozen = search.found;
    frozen.sort();
    let witness = frozen.first().cloned();
    Ok(FrozenSearch {
        connected: (witness.is_some() && k >= 2).then_some(false),
        components: None,
        witness,
        exhaustive: complete,
        frozen,
        nodes: search.nodes,
    })
}

struct Search<'g> {
    g: &'g Graph,
    k: usize,
    order: Vec<usize>,
    colour: Vec<usize>,
    /// present[v][c]: vertices of N[v] currently coloured c.
    present: Vec<Vec<u32>>,
    missing: Vec<usize>,
    uncoloured_closed: Vec<usize>,
    limit: usize,
    budget: u64,
    nodes: u64,
    found: Vec<Colouring>,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph, k: usize, limit: usize, budget: u64) -> Self {
        let n = g.n();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        Search {
            g,
            k,
            order,
            colour: vec![0; n],
            present: vec![vec![0; k + 1]; n],
            missing: vec![k; n],
            uncoloured_closed: (0..n).map(|v| g.degree(v) + 1).collect(),
            limit,
            budget,
            nodes: 0,
            found: Vec::new(),
        }
    }

    /// Colours `v` with `c`; returns false if some closed neighbourhood can no longer collect every colour.
    fn assign(&mut self, v: usize, c: usize) -> bool {
        let g = self.g;
        self.colour[v] = c;
        let mut feasible = true;
        for w in std::iter::once(v).chain(g.neighbours(v).iter()) {
            self.uncoloured_closed[w] -= 1;
            self.present[w][c] += 1;
            if self.present[w][c] == 1 {
                self.missing[w] -= 1;
            }
            if self.missing[w] > self.uncoloured_closed[w] {
                feasible = false;
            }
        }
        feasible
    }

    fn unassign(&mut self, v: usize) {
        let g = self.g;
        let c = self.colour[v];
        self.colour[v] = 0;
        for w in std::iter::once(v).chain(g.neighbours(v).iter()) {
            self.uncoloured_closed[w] += 1;
            self.present[w][c] -= 1;
            if self.present[w][c] == 0 {
                self.missing[w] += 1;
            }
        }
    }

    /// Returns true if the subtree was explored completely.
    fn run(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            if self.missing.iter().all(|&m| m == 0) {
                let assignment = self.colour.iter().map(|&c| c as u32).collect();
                self.found.push(Colouring::new(self.k as u32, assignment).unwrap());
            }
            return self.found.len() < self.limit;
        }
        let v = self.order[depth];
        for c in 1..=self.k {
            if self.g.neighbours(v).iter().any(|u| self.colour[u] == c) {
                continue;
            }
            if self.nodes >= self.budget {
                return false;
            }
            self.nodes += 1;
            let feasible = self.assign(v, c);
            let complete = !feasible || self.run(depth + 1);
            self.unassign(v);
            if !complete {
                return false;
            }
        }
        true
    }
}
