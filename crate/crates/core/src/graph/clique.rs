//! Exact maximum clique by branch and bound with greedy-colouring bounds.

use super::Graph;
use crate::bitset::VertexSet;
use crate::error::{Error, Result};

pub(crate) fn check_cap(g: &Graph, cap: usize, what: &str) -> Result<()> {
    if g.n() > cap {
        return Err(Error::resource(
            format!("{what} on a graph with {} vertices", g.n()),
            cap as u64,
        ));
    }
    Ok(())
}

/// A maximum clique of `g`, vertices in increasing order.
pub fn max_clique(g: &Graph, search_cap: usize) -> Result<Vec<usize>> {
    check_cap(g, search_cap, "maximum clique search")?;
    let mut best = Vec::new();
    let mut current = Vec::new();
    expand(g, &mut current, VertexSet::full(g.n()), &mut best);
    best.sort_unstable();
    Ok(best)
}

pub fn clique_number(g: &Graph, search_cap: usize) -> Result<usize> {
    max_clique(g, search_cap).map(|c| c.len())
}

fn expand(g: &Graph, current: &mut Vec<usize>, mut candidates: VertexSet, best: &mut Vec<usize>) {
    let (order, bounds) = colour_sort(g, &candidates);
    for (&v, &bound) in order.iter().zip(&bounds).rev() {
        if current.len() + bound <= best.len() {
            return;
        }
        current.push(v);
        let next = candidates.intersection(g.neighbours(v));
        if next.is_empty() {
            if current.len() > best.len() {
                best.clone_from(current);
            }
        } else {
            expand(g, current, next, best);
        }
        current.pop();
        candidates.remove(v);
    }
}

/// Greedy colour classes over `candidates`. Returns vertices in class order
/// and, for each, the number of classes used up to and including it, which
/// bounds the clique size attainable among that prefix.
fn colour_sort(g: &Graph, candidates: &VertexSet) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(candidates.count());
    let mut bounds = Vec::with_capacity(order.capacity());
    let mut uncoloured = candidates.clone();
    let mut class = 0;
    while !uncoloured.is_empty() {
        class += 1;
        let mut open = uncoloured.clone();
        while let Some(v) = open.first() {
            open.remove(v);
            open.difference_with(g.neighbours(v));
            uncoloured.remove(v);
            order.push(v);
            bounds.push(class);
        }
    }
    (order, bounds)
}
