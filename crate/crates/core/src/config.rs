//! Search caps and budgets shared by the exact and exhaustive operations.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const ENV_NODE_CAP: &str = "RECOLOUR_NODE_CAP";
pub const ENV_LAZY_BUDGET: &str = "RECOLOUR_LAZY_BUDGET";
pub const ENV_SEARCH_CAP: &str = "RECOLOUR_SEARCH_CAP";
pub const ENV_ENUMERATION_CAP: &str = "RECOLOUR_ENUMERATION_CAP";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Maximum number of proper colourings materialised for an explicit R_k.
    pub node_cap: u64,
    /// Node budget for lazy exploration and frozen-colouring search.
    pub lazy_budget: u64,
    /// Maximum vertex count for exact clique and chromatic-number search.
    pub search_cap: usize,
    /// Maximum backtracking steps spent enumerating colourings.
    pub enumeration_cap: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            node_cap: 1_000_000,
            lazy_budget: 10_000_000,
            search_cap: 64,
            enumeration_cap: 10_000_000,
        }
    }
}

impl Limits {
    /// Defaults overridden by any of the `RECOLOUR_*` environment variables that are set.
    pub fn from_env() -> Result<Self> {
        let mut limits = Limits::default();
        if let Some(v) = read_env(ENV_NODE_CAP)? {
            limits.node_cap = v;
        }
        if let Some(v) = read_env(ENV_LAZY_BUDGET)? {
            limits.lazy_budget = v;
        }
        if let Some(v) = read_env(ENV_SEARCH_CAP)? {
            limits.search_cap = v as usize;
        }
        if let Some(v) = read_env(ENV_ENUMERATION_CAP)? {
            limits.enumeration_cap = v;
        }
        limits.validate()?;
        Ok(limits)
    }

    pub fn validate(&self) -> Result<()> {
        if self.node_cap == 0 || self.lazy_budget == 0 || self.search_cap == 0 || self.enumeration_cap == 0 {
            return Err(Error::invalid("all caps and budgets must be positive"));
        }
        Ok(())
    }
}

fn read_env(name: &str) -> Result<Option<u64>> {
    match std::env::var(name) {
        Ok(raw) => raw
            .trim()
            .parse::<u64>()
            .map(Some)
            .map_err(|_| Error::invalid(format!("{name}={raw:?} is not a non-negative integer"))),
        Err(_) => Ok(None),
    }
}
