//! Colouring reconfiguration toolkit.
//!
//! * [`graph`]: bitset graphs, cycle powers and joins, induced-pattern search,
//!   exact clique and chromatic numbers.
//! * [`colouring`]: proper and frozen colourings, enumeration and counting.
//! * [`reconfig`]: the reconfiguration graph `R_k(G)`, k-mixing, lazy
//!   component exploration and frozen-colouring search.
//! * [`construction`]: a 7-chromatic 2K2-free graph with a frozen
//!   8-colouring, its p-fold joins, and a checker for the claims about them.
//! * [`io`]: edge-list, DIMACS, JSON and DOT formats.
//! * [`cli`]: the `recolour` command line.

pub mod bitset;
pub mod cli;
pub mod colouring;
pub mod config;
pub mod construction;
pub mod error;
pub mod graph;
pub mod io;
pub mod reconfig;

pub use colouring::{is_frozen, is_proper, Colouring};
pub use config::Limits;
pub use error::{Error, Result};
pub use graph::{Graph, PatternKind};
