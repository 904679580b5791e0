//! Enumeration caps.
//!
//! Every exhaustive search in the engine is bounded by one of these limits so
//! that an oversized input fails fast with [`Error::CapExceeded`] instead of
//! running for hours.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const DEFAULT_MAX_ORDER: usize = 4096;
pub const MAX_ORDER_ENV: &str = "NILRING_MAX_ORDER";

/// Absolute ceiling for the order cap; tables beyond this do not fit in memory anyway.
pub const HARD_MAX_ORDER: usize = 1 << 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Limits {
    /// Largest ring order any constructor or lattice enumeration accepts.
    pub max_order: usize,
    /// Largest ring order for which endomorphisms are enumerated.
    pub endo_max_order: usize,
    /// Largest number of module generators of a hom source.
    pub hom_max_rank: usize,
    /// Largest hom target ideal.
    pub hom_max_target: usize,
    /// Largest number of multiplicative sets enumerated per ring.
    pub max_multiplicative_sets: usize,
}

impl Limits {
    /// Defaults, with `NILRING_MAX_ORDER` applied when set to a valid integer.
    pub fn from_env() -> Self {
        let mut limits = Self::default();
        if let Some(n) = std::env::var(MAX_ORDER_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
        {
            limits.max_order = n.clamp(1, HARD_MAX_ORDER);
        }
        limits
    }

    pub fn with_max_order(mut self, max_order: usize) -> Self {
        self.max_order = max_order.clamp(1, HARD_MAX_ORDER);
        self
    }

    pub(crate) fn check_order(&self, order: usize) -> Result<()> {
        check("ring order", order, self.max_order)
    }
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_order: DEFAULT_MAX_ORDER,
            endo_max_order: 256,
            hom_max_rank: 4,
            hom_max_target: 256,
            max_multiplicative_sets: 4096,
        }
    }
}

pub(crate) fn check(what: &'static str, actual: usize, limit: usize) -> Result<()> {
    if actual > limit {
        Err(Error::CapExceeded {
            what,
            limit,
            actual,
        })
    } else {
        Ok(())
    }
}
