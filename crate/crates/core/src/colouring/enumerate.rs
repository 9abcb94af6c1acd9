use super::Colouring;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Lexicographic stream of every proper `k`-colouring of a graph.
///
/// Produced by backtracking in vertex order. Each colour tried at a vertex
/// counts as one search step; once `cap` steps have been spent the stream
/// yields a single resource error and ends.
pub struct Colourings<'g> {
    g: &'g Graph,
    k: u32,
    partial: Vec<u32>,
    depth: usize,
    resume: bool,
    finished: bool,
    steps: u64,
    cap: u64,
}

pub fn enumerate_colourings(g: &Graph, k: u32, cap: u64) -> Result<Colourings<'_>> {
    if k == 0 {
        return Err(Error::invalid("palette size k must be positive"));
    }
    Ok(Colourings {
        g,
        k,
        partial: vec![0; g.n()],
        depth: 0,
        resume: false,
        finished: false,
        steps: 0,
        cap,
    })
}

/// All proper `k`-colourings, or the resource error if the cap was hit.
pub fn collect_colourings(g: &Graph, k: u32, cap: u64) -> Result<Vec<Colouring>> {
    enumerate_colourings(g, k, cap)?.collect()
}

impl Colourings<'_> {
    pub fn steps(&self) -> u64 {
        self.steps
    }

    fn clashes(&self, v: usize, c: u32) -> bool {
        self.g.neighbours(v).iter().take_while(|&u| u < v).any(|u| self.partial[u] == c)
    }
}

impl Iterator for Colourings<'_> {
    type Item = Result<Colouring>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.finished {
            return None;
        }
        let n = self.g.n();
        if n == 0 {
            self.finished = true;
            return Some(Ok(Colouring { k: self.k, assignment: Vec::new() }));
        }
        if self.resume {
            self.depth = n - 1;
            self.resume = false;
        }
        loop {
            let v = self.depth;
            let mut c = self.partial[v] + 1;
            while c <= self.k {
                self.steps += 1;
                if self.steps > self.cap {
                    self.finished = true;
                    return Some(Err(Error::resource("colouring enumeration (search steps)", self.cap)));
                }
                if !self.clashes(v, c) {
                    break;
                }
                c += 1;
            }
            if c > self.k {
                self.partial[v] = 0;
                if v == 0 {
                    self.finished = true;
                    return None;
                }
                self.depth -= 1;
                continue;
            }
            self.partial[v] = c;
            if v + 1 == n {
                self.resume = true;
                return Some(Ok(Colouring { k: self.k, assignment: self.partial.clone() }));
            }
            self.depth += 1;
            self.partial[self.depth] = 0;
        }
    }
}
