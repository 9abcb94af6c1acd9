//! Lazy exploration of `R_k(G)` from a single colouring.

use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::colouring::{is_proper, Colouring};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Colouring packed base-2^b into `u64` words, `b` the bit width of `k - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PackedColouring(Box<[u64]>);

fn bits_per_colour(k: u32) -> usize {
    (32 - (k.max(2) - 1).leading_zeros()) as usize
}

impl PackedColouring {
    pub fn pack(c: &Colouring) -> Self {
        let bits = bits_per_colour(c.k());
        let per_word = 64 / bits;
        let mut words = vec![0u64; c.len().div_ceil(per_word).max(1)];
        for (v, &col) in c.assignment().iter().enumerate() {
            words[v / per_word] |= ((col - 1) as u64) << (bits * (v % per_word));
        }
        PackedColouring(words.into_boxed_slice())
    }

    pub fn unpack(&self, k: u32, n: usize) -> Colouring {
        let bits = bits_per_colour(k);
        let per_word = 64 / bits;
        let mask = (1u64 << bits) - 1;
        let assignment = (0..n)
            .map(|v| ((self.0[v / per_word] >> (bits * (v % per_word))) & mask) as u32 + 1)
            .collect();
        Colouring::new(k, assignment).expect("packed colours stay within the palette")
    }
}

/// Every proper colouring at Hamming distance one from `c`, ordered by
/// (vertex, new colour). `c` must be proper.
pub fn neighbours<'a>(g: &'a Graph, c: &'a Colouring) -> Result<impl Iterator<Item = Colouring> + 'a> {
    if !is_proper(g, c)? {
        return Err(Error::invalid("neighbours requires a proper colouring"));
    }
    Ok(recolourings(g, c).map(move |(v, col)| c.recoloured(v, col).expect("colour within palette")))
}

/// `(vertex, colour)` moves that keep `c` proper.
fn recolourings<'a>(g: &'a Graph, c: &'a Colouring) -> impl Iterator<Item = (usize, u32)> + 'a {
    (0..g.n()).flat_map(move |v| {
        (1..=c.k()).filter_map(move |col| {
            let free = col != c.colour(v) && g.neighbours(v).iter().all(|u| c.colour(u) != col);
            free.then_some((v, col))
        })
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ComponentExploration {
    ExploredFully { size: u64, frozen: bool },
    BudgetExhausted { visited: u64 },
}

fn bfs(g: &Graph, start: &Colouring, node_budget: u64) -> Result<std::result::Result<HashSet<PackedColouring>, u64>> {
    if !is_proper(g, start)? {
        return Err(Error::invalid("component exploration requires a proper colouring"));
    }
    let mut visited = HashSet::from([PackedColouring::pack(start)]);
    let mut frontier = VecDeque::from([start.clone()]);
    while let Some(c) = frontier.pop_front() {
        for (v, col) in recolourings(g, &c) {
            let next = c.recoloured(v, col)?;
            let packed = PackedColouring::pack(&next);
            if !visited.contains(&packed) {
                if visited.len() as u64 >= node_budget {
                    return Ok(Err(visited.len() as u64));
                }
                visited.insert(packed);
                frontier.push_back(next);
            }
        }
    }
    Ok(Ok(visited))
}

/// Breadth-first search of the component of `c` in `R_k(g)`, visiting at most
/// `node_budget` colourings.
pub fn component_of(g: &Graph, c: &Colouring, node_budget: u64) -> Result<ComponentExploration> {
    Ok(match bfs(g, c, node_budget)? {
        Ok(visited) => ComponentExploration::ExploredFully {
            size: visited.len() as u64,
            frozen: visited.len() == 1,
        },
        Err(visited) => ComponentExploration::BudgetExhausted { visited },
    })
}

/// The colourings of the component of `c`, sorted, or `None` if the budget ran out.
pub fn component_members(g: &Graph, c: &Colouring, node_budget: u64) -> Result<Option<Vec<Colouring>>> {
    Ok(match bfs(g, c, node_budget)? {
        Ok(visited) => {
            let mut members: Vec<Colouring> = visited.iter().map(|p| p.unpack(c.k(), g.n())).collect();
            members.sort();
            Some(members)
        }
        Err(_) => None,
    })
}
