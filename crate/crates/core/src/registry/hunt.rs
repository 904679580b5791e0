use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::checks::{self, Finding, Run, Stop};
use super::witness::{replay, Witness};
use super::{CheckId, RingContext};
use crate::corpus::RingSpec;
use crate::error::{Error, Result};
use crate::limits::Limits;

/// A statement to search counterexamples for: any registered check (for the
/// existence checks this is the claim they refute), or a converse probe.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HuntClaim {
    Check(CheckId),
    /// `I ⊴nil J ⊴nil K ⇒ I ⊴nil K`.
    P206Converse,
}

impl fmt::Display for HuntClaim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HuntClaim::Check(c) => write!(f, "{c}"),
            HuntClaim::P206Converse => f.write_str("P206-converse"),
        }
    }
}

impl FromStr for HuntClaim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().eq_ignore_ascii_case("P206-converse") {
            Ok(HuntClaim::P206Converse)
        } else {
            s.parse().map(HuntClaim::Check)
        }
    }
}

impl Serialize for HuntClaim {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for HuntClaim {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HuntWitness {
    pub ring: String,
    pub detail: String,
    pub witness: Witness,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HuntResult {
    pub claim: HuntClaim,
    /// Rings examined, in corpus order.
    pub searched: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<HuntWitness>,
    /// No witness in the searched rings.
    pub exhausted: bool,
    /// The search stopped because the budget ran out.
    pub budget_spent: bool,
    pub budget: u64,
    /// Instances evaluated.
    pub consumed: u64,
}

/// Walks the corpus in order, evaluating at most `budget` instances, and
/// returns the first witness after replaying it.
pub fn hunt_counterexample(
    claim: HuntClaim,
    rings: &[RingSpec],
    budget: u64,
    limits: &Limits,
    base_dir: Option<&Path>,
) -> Result<HuntResult> {
    let mut result = HuntResult {
        claim,
        searched: Vec::new(),
        witness: None,
        exhausted: true,
        budget_spent: false,
        budget,
        consumed: 0,
    };
    for spec in rings {
        if result.consumed >= budget {
            result.budget_spent = true;
            break;
        }
        let ctx = match RingContext::from_spec(spec, limits, base_dir) {
            Ok(ctx) => ctx,
            Err(e) if e.is_cap() => continue,
            Err(e) => return Err(e),
        };
        result.searched.push(ctx.label().to_string());
        let mut run = Run::new(Some(budget - result.consumed));
        let side = ctx.default_sidedness();
        let outcome = match claim {
            HuntClaim::Check(id) => checks::dispatch(&ctx, id, side, &mut run),
            HuntClaim::P206Converse => checks::p206_converse(&ctx, side, &mut run),
        };
        result.consumed += run.instances;
        match outcome {
            Ok(Finding::Violated(witness, detail)) => {
                replay(&witness, ctx.ring(), limits)?;
                result.exhausted = false;
                result.witness = Some(HuntWitness {
                    ring: ctx.label().to_string(),
                    detail,
                    witness,
                });
                return Ok(result);
            }
            Ok(_) => {}
            Err(Stop::Budget) => {
                result.budget_spent = true;
                break;
            }
            Err(Stop::Error(e)) if e.is_cap() => {}
            Err(Stop::Error(e)) => return Err(e),
        }
    }
    Ok(result)
}
