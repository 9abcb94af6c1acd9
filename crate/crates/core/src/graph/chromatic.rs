//! Exact chromatic number: sequential k from the clique bound, DSATUR backtracking.

use serde::{Deserialize, Serialize};

use super::clique::{check_cap, max_clique};
use super::Graph;
use crate::colouring::Colouring;
use crate::error::Result;

/// Outcome of an exact chromatic-number search, with certificates for both bounds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChromaticSearch {
    pub chromatic_number: usize,
    /// Maximum clique used as the lower bound and pre-coloured `1..=ω`.
    pub clique: Vec<usize>,
    /// A proper colouring with `chromatic_number` colours.
    pub colouring: Colouring,
}

pub fn chromatic_number(g: &Graph, search_cap: usize) -> Result<usize> {
    ChromaticSearch::run(g, search_cap).map(|s| s.chromatic_number)
}

impl ChromaticSearch {
    pub fn run(g: &Graph, search_cap: usize) -> Result<Self> {
        check_cap(g, search_cap, "chromatic number search")?;
        let clique = max_clique(g, search_cap)?;
        let mut k = clique.len();
        loop {
            if let Some(colouring) = colour_with(g, k, &clique) {
                return Ok(ChromaticSearch {
                    chromatic_number: k,
                    clique,
                    colouring,
                });
            }
            k += 1;
        }
    }
}

/// Proper `k`-colouring of `g` if one exists.
pub fn is_k_colourable(g: &Graph, k: usize, search_cap: usize) -> Result<Option<Colouring>> {
    check_cap(g, search_cap, "k-colourability search")?;
    let clique = max_clique(g, search_cap)?;
    if clique.len() > k {
        return Ok(None);
    }
    Ok(colour_with(g, k, &clique))
}

fn colour_with(g: &Graph, k: usize, clique: &[usize]) -> Option<Colouring> {
    let n = g.n();
    if n == 0 {
        return Some(Colouring::new(k.max(1) as u32, Vec::new()).unwrap());
    }
    let mut state = Dsatur::new(g, k);
    for (i, &v) in clique.iter().enumerate() {
        state.assign(v, i + 1);
    }
    if state.search(clique.len()) {
        let assignment = state.colour.iter().map(|&c| c as u32).collect();
        Some(Colouring::new(k as u32, assignment).unwrap())
    } else {
        None
    }
}

struct Dsatur<'g> {
    g: &'g Graph,
    k: usize,
    /// 0 = uncoloured.
    colour: Vec<usize>,
    /// neighbour_colours[v][c] = number of neighbours of v coloured c.
    neighbour_colours: Vec<Vec<u32>>,
    saturation: Vec<usize>,
    uncoloured: usize,
}

impl<'g> Dsatur<'g> {
    fn new(g: &'g Graph, k: usize) -> Self {
        Dsatur {
            g,
            k,
            colour: vec![0; g.n()],
            neighbour_colours: vec![vec![0; k + 1]; g.n()],
            saturation: vec![0; g.n()],
            uncoloured: g.n(),
        }
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.colour[v] = c;
        self.uncoloured -= 1;
        for w in self.g.neighbours(v).iter() {
            let slot = &mut self.neighbour_colours[w][c];
            if *slot == 0 {
                self.saturation[w] += 1;
            }
            *slot += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.colour[v];
        self.colour[v] = 0;
        self.uncoloured += 1;
        for w in self.g.neighbours(v).iter() {
            let slot = &mut self.neighbour_colours[w][c];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[w] -= 1;
            }
        }
    }

    /// Max saturation, then max uncoloured degree, then lowest index.
    fn pick(&self) -> usize {
        let mut best = usize::MAX;
        let mut key = (0, 0);
        for v in 0..self.g.n() {
            if self.colour[v] != 0 {
                continue;
            }
            let free_degree = self.g.neighbours(v).iter().filter(|&w| self.colour[w] == 0).count();
            let cand = (self.saturation[v], free_degree);
            if best == usize::MAX || cand > key {
                best = v;
                key = cand;
            }
        }
        best
    }

    /// `used` is the highest colour appearing so far; colours above it are interchangeable.
    fn search(&mut self, used: usize) -> bool {
        if self.uncoloured == 0 {
            return true;
        }
        let v = self.pick();
        if self.saturation[v] >= self.k {
            return false;
        }
        for c in 1..=self.k.min(used + 1) {
            if self.neighbour_colours[v][c] != 0 {
                continue;
            }
            self.assign(v, c);
            if self.search(used.max(c)) {
                return true;
            }
            self.unassign(v);
        }
        false
    }
}
