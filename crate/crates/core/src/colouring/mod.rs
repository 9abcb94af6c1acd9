//! Vertex colourings with a fixed palette `{1..k}`.
//!
//! A [`Colouring`] is only a total map from vertices to colours; whether it
//! is proper or frozen depends on the graph it is checked against.

mod count;
mod enumerate;

pub use count::{count_colourings, COUNT_VERTEX_CAP};
pub use enumerate::{collect_colourings, enumerate_colourings, Colourings};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Assignment of colours in `1..=k` to vertices `0..n`. Colours are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawColouring")]
pub struct Colouring {
    k: u32,
    assignment: Vec<u32>,
}

#[derive(Deserialize)]
struct RawColouring {
    k: u32,
    assignment: Vec<u32>,
}

impl TryFrom<RawColouring> for Colouring {
    type Error = Error;

    fn try_from(raw: RawColouring) -> Result<Self> {
        Colouring::new(raw.k, raw.assignment)
    }
}

impl Colouring {
    pub fn new(k: u32, assignment: Vec<u32>) -> Result<Self> {
        if k == 0 {
            return Err(Error::invalid("palette size k must be positive"));
        }
        if let Some((v, &c)) = assignment.iter().enumerate().find(|(_, &c)| c == 0 || c > k) {
            return Err(Error::invalid(format!("vertex {v} has colour {c}, outside 1..={k}")));
        }
        Ok(Colouring { k, assignment })
    }

    /// Parses the compact text form: colours separated by whitespace, or a
    /// run of digits when `k <= 9` (as in `1234572345123467`).
    pub fn parse(text: &str, k: u32) -> Result<Self> {
        let text = text.trim();
        let assignment = if text.contains(char::is_whitespace) {
            text.split_whitespace()
                .map(|tok| {
                    tok.parse::<u32>()
                        .map_err(|_| Error::invalid(format!("bad colour {tok:?} in colouring")))
                })
                .collect::<Result<Vec<_>>>()?
        } else if k <= 9 {
            text.chars()
                .map(|ch| {
                    ch.to_digit(10)
                        .ok_or_else(|| Error::invalid(format!("bad colour {ch:?} in colouring")))
                })
                .collect::<Result<Vec<_>>>()?
        } else if text.is_empty() {
            Vec::new()
        } else {
            // a single token with k > 9 is a one-vertex colouring
            vec![text
                .parse::<u32>()
                .map_err(|_| Error::invalid(format!("bad colour {text:?} in colouring")))?]
        };
        Self::new(k, assignment)
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn assignment(&self) -> &[u32] {
        &self.assignment
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    #[inline]
    pub fn colour(&self, v: usize) -> u32 {
        self.assignment[v]
    }

    /// Same assignment viewed with a larger palette.
    pub fn with_palette(&self, k: u32) -> Result<Self> {
        Self::new(k, self.assignment.clone())
    }

    /// Copy with vertex `v` recoloured to `c`.
    pub fn recoloured(&self, v: usize, c: u32) -> Result<Self> {
        if v >= self.len() {
            return Err(Error::invalid(format!("vertex {v} out of range")));
        }
        let mut assignment = self.assignment.clone();
        assignment[v] = c;
        Self::new(self.k, assignment)
    }

    /// Relabels colours: colour `c` becomes `perm[c - 1]`. `perm` must be a
    /// permutation of `1..=k`.
    pub fn permute_colours(&self, perm: &[u32]) -> Result<Self> {
        let mut seen = vec![false; self.k as usize + 1];
        let valid = perm.len() == self.k as usize
            && perm.iter().all(|&c| {
                (1..=self.k).contains(&c) && !std::mem::replace(&mut seen[c as usize], true)
            });
        if !valid {
            return Err(Error::invalid("colour relabelling is not a permutation of the palette"));
        }
        Self::new(self.k, self.assignment.iter().map(|&c| perm[c as usize - 1]).collect())
    }

    /// Space-separated colours (always valid input to [`Colouring::parse`]).
    pub fn to_text(&self) -> String {
        self.assignment.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
    }

    fn check_length(&self, g: &Graph) -> Result<()> {
        if self.len() != g.n() {
            return Err(Error::invalid(format!(
                "colouring has {} entries but the graph has {} vertices",
                self.len(),
                g.n()
            )));
        }
        Ok(())
    }
}

impl fmt::Display for Colouring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k <= 9 {
            for c in &self.assignment {
                write!(f, "{c}")?;
            }
            Ok(())
        } else {
            f.write_str(&self.to_text())
        }
    }
}

/// True iff no edge of `g` is monochromatic under `c`.
pub fn is_proper(g: &Graph, c: &Colouring) -> Result<bool> {
    c.check_length(g)?;
    Ok(g.edges().all(|(u, v)| c.colour(u) != c.colour(v)))
}

/// True iff every colour of the palette appears in every closed
/// neighbourhood. Improper colourings are rejected.
pub fn is_frozen(g: &Graph, c: &Colouring) -> Result<bool> {
    if !is_proper(g, c)? {
        return Err(Error::invalid("frozenness is only defined for proper colourings"));
    }
    let k = c.k() as usize;
    let mut seen = vec![false; k + 1];
    for v in 0..g.n() {
        seen.iter_mut().for_each(|s| *s = false);
        seen[c.colour(v) as usize] = true;
        let mut distinct = 1;
        for u in g.neighbours(v).iter() {
            let col = c.colour(u) as usize;
            if !seen[col] {
                seen[col] = true;
                distinct += 1;
            }
        }
        if distinct < k {
            return Ok(false);
        }
    }
    Ok(true)
}
