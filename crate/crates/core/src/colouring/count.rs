//! Proper-colouring counts through the chromatic polynomial.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const COUNT_VERTEX_CAP: usize = 12;

/// Number of proper `k`-colourings of `g`, evaluated by deletion-contraction.
///
/// Sparse graphs branch on an edge, `P(G) = P(G - e) - P(G / e)`; dense ones on
/// a non-edge, `P(G) = P(G + e) + P(G / e)`. Edgeless and complete graphs are
/// closed forms. Intermediate graphs are memoised by adjacency.
pub fn count_colourings(g: &Graph, k: u32) -> Result<u128> {
    if g.n() > COUNT_VERTEX_CAP {
        return Err(Error::resource(
            format!("deletion-contraction on a graph with {} vertices", g.n()),
            COUNT_VERTEX_CAP as u64,
        ));
    }
    let mut memo = HashMap::new();
    let adj: Vec<u16> = (0..g.n())
        .map(|v| g.neighbours(v).iter().fold(0u16, |m, u| m | 1 << u))
        .collect();
    polynomial_at(&adj, k as u128, &mut memo)
        .ok_or_else(|| Error::invalid(format!("colouring count overflows u128 for k = {k}")))
}

fn polynomial_at(adj: &[u16], k: u128, memo: &mut HashMap<Vec<u16>, u128>) -> Option<u128> {
    let n = adj.len();
    let m: usize = adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2;
    let pairs = n * n.saturating_sub(1) / 2;
    if m == 0 {
        return k.checked_pow(n as u32);
    }
    if m == pairs {
        // falling factorial k (k-1) ... (k-n+1)
        return (0..n as u128).try_fold(1u128, |acc, i| acc.checked_mul(k.saturating_sub(i)));
    }
    if let Some(&hit) = memo.get(adj) {
        return Some(hit);
    }
    let value = if 2 * m <= pairs {
        let (u, v) = first_pair(adj, true);
        let deleted = polynomial_at(&toggled(adj, u, v), k, memo)?;
        let contracted = polynomial_at(&contract(adj, u, v), k, memo)?;
        deleted - contracted
    } else {
        let (u, v) = first_pair(adj, false);
        let added = polynomial_at(&toggled(adj, u, v), k, memo)?;
        let contracted = polynomial_at(&contract(adj, u, v), k, memo)?;
        added.checked_add(contracted)?
    };
    memo.insert(adj.to_vec(), value);
    Some(value)
}

fn first_pair(adj: &[u16], edge: bool) -> (usize, usize) {
    let n = adj.len();
    for (u, row) in adj.iter().enumerate() {
        for v in u + 1..n {
            if (row >> v & 1 == 1) == edge {
                return (u, v);
            }
        }
    }
    unreachable!("caller checked that such a pair exists")
}

fn toggled(adj: &[u16], u: usize, v: usize) -> Vec<u16> {
    let mut out = adj.to_vec();
    out[u] ^= 1 << v;
    out[v] ^= 1 << u;
    out
}

/// Identifies `v` into `u` (u < v) and drops `v`, relabelling later vertices down by one.
fn contract(adj: &[u16], u: usize, v: usize) -> Vec<u16> {
    let squeeze = |mask: u16| (mask & ((1u16 << v) - 1)) | ((mask >> (v + 1)) << v);
    let merged = (adj[u] | adj[v]) & !(1 << u) & !(1 << v);
    adj.iter()
        .enumerate()
        .filter(|&(w, _)| w != v)
        .map(|(w, &mask)| {
            let mask = if w == u {
                merged
            } else if mask >> v & 1 == 1 {
                (mask | 1 << u) & !(1 << v)
            } else {
                mask
            };
            squeeze(mask)
        })
        .collect()
}
