use std::collections::HashMap;
use std::sync::Arc;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hom::{is_nil_essential_mono, preimage_ideal, ModuleHom, RingHom};
use crate::ideal::{
    enumerate_ideals, ideal_intersection, ideal_power, ideal_product, ideal_quotient, ideal_sum,
    radical_of_ideal, Ideal, IdealLattice, Sidedness,
};
use crate::limits::Limits;
use crate::localization::{localize_ideal, localize_ring, multiplicative_closure};
use crate::predicates::{
    is_essential, is_nil_essential, is_nilpotent_ideal, is_semisimple, jacobson_radical,
    nil_essential_by_element_criterion,
};
use crate::ring::{Elem, FiniteRing};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessIdeal {
    pub label: String,
    pub sidedness: Sidedness,
    pub generators: Vec<String>,
    pub members: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessHom {
    pub source: usize,
    pub target: usize,
    pub pairs: Vec<(String, String)>,
}

/// A self-contained record of the ideals, maps and predicate values that
/// establish a refutation or a confirmed counterexample.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Sidedness of the ideals `μ` quantified over in essentiality facts.
    pub sidedness: Sidedness,
    pub ideals: Vec<WitnessIdeal>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multiplicative_set: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub endomorphism: Option<Vec<(String, String)>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub homs: Vec<WitnessHom>,
    pub facts: Vec<Fact>,
}

/// One predicate call and its value. Ideal and hom fields index into the
/// witness's lists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "fact", rename_all = "snake_case")]
pub enum Fact {
    NilEssential {
        ideal: usize,
        within: Option<usize>,
        holds: bool,
    },
    Essential {
        ideal: usize,
        within: Option<usize>,
        holds: bool,
    },
    Nilpotent {
        ideal: usize,
        holds: bool,
    },
    Intersection {
        left: usize,
        right: usize,
        result: usize,
    },
    Sum {
        left: usize,
        right: usize,
        result: usize,
    },
    Product {
        left: usize,
        right: usize,
        result: usize,
    },
    Power {
        ideal: usize,
        exponent: usize,
        result: usize,
    },
    Contains {
        outer: usize,
        inner: usize,
        holds: bool,
    },
    Maximal {
        ideal: usize,
        holds: bool,
    },
    Prime {
        ideal: usize,
        holds: bool,
    },
    Semisimple {
        holds: bool,
    },
    JacobsonRadical {
        result: usize,
    },
    Radical {
        ideal: usize,
        result: usize,
    },
    Quotient {
        ideal: usize,
        element: String,
        result: usize,
    },
    ElementCriterion {
        ideal: usize,
        within: Option<usize>,
        holds: bool,
    },
    /// `S⁻¹I` is nil-essential in `S⁻¹R`, with `S` the witness's multiplicative set.
    LocalizedNilEssential {
        ideal: usize,
        holds: bool,
    },
    /// The preimage of `ideal` under the witness's endomorphism.
    Preimage {
        ideal: usize,
        result: usize,
    },
    Kernel {
        hom: usize,
        result: usize,
    },
    Image {
        hom: usize,
        result: usize,
    },
    NilEssentialMono {
        hom: usize,
        holds: bool,
    },
    IdealCount {
        count: usize,
    },
}

pub(crate) fn ideal_label(i: &Ideal) -> String {
    i.label()
}

pub(crate) struct WitnessBuilder<'a> {
    ring: &'a FiniteRing,
    witness: Witness,
    index: HashMap<(FixedBitSet, Sidedness), usize>,
}

impl<'a> WitnessBuilder<'a> {
    pub(crate) fn new(ring: &'a FiniteRing, sidedness: Sidedness) -> Self {
        WitnessBuilder {
            ring,
            witness: Witness {
                sidedness,
                ideals: Vec::new(),
                multiplicative_set: None,
                endomorphism: None,
                homs: Vec::new(),
                facts: Vec::new(),
            },
            index: HashMap::new(),
        }
    }

    pub(crate) fn ideal(&mut self, i: &Ideal) -> usize {
        let key = (i.member_set().clone(), i.sidedness());
        if let Some(&k) = self.index.get(&key) {
            return k;
        }
        self.witness.ideals.push(WitnessIdeal {
            label: ideal_label(i),
            sidedness: i.sidedness(),
            generators: i.generator_names(),
            members: i.member_names(),
        });
        let k = self.witness.ideals.len() - 1;
        self.index.insert(key, k);
        k
    }

    pub(crate) fn fact(&mut self, fact: Fact) -> &mut Self {
        self.witness.facts.push(fact);
        self
    }

    pub(crate) fn hom(&mut self, f: &ModuleHom) -> usize {
        let source = self.ideal(f.source());
        let target = self.ideal(f.target());
        let pairs = f
            .pairs()
            .map(|(x, y)| (self.name(x), self.name(y)))
            .collect();
        self.witness.homs.push(WitnessHom {
            source,
            target,
            pairs,
        });
        self.witness.homs.len() - 1
    }

    pub(crate) fn multiplicative_set(&mut self, members: impl Iterator<Item = Elem>) {
        self.witness.multiplicative_set = Some(members.map(|x| self.name(x)).collect());
    }

    pub(crate) fn endomorphism(&mut self, f: &RingHom) {
        self.witness.endomorphism = Some(
            self.ring
                .elements()
                .map(|x| (self.name(x), self.name(f.apply(x))))
                .collect(),
        );
    }

    fn name(&self, x: Elem) -> String {
        self.ring.name(x).to_string()
    }

    pub(crate) fn finish(self) -> Witness {
        self.witness
    }
}

struct Replayer<'a> {
    ring: &'a Arc<FiniteRing>,
    limits: &'a Limits,
    ideals: Vec<Ideal>,
    lattice: IdealLattice,
}

impl Replayer<'_> {
    fn ideal(&self, k: usize) -> Result<&Ideal> {
        self.ideals
            .get(k)
            .ok_or_else(|| Error::InvalidParameter(format!("witness has no ideal {k}")))
    }

    fn within(&self, k: Option<usize>) -> Result<Option<&Ideal>> {
        k.map(|k| self.ideal(k)).transpose()
    }

    fn same(&self, computed: &Ideal, k: usize) -> Result<bool> {
        Ok(computed.member_set() == self.ideal(k)?.member_set())
    }

    fn is_maximal(&self, i: &Ideal) -> Result<bool> {
        let k = self
            .lattice
            .position_of_set(i.member_set())
            .ok_or_else(|| Error::InvalidParameter("ideal is not in the witness lattice".into()))?;
        Ok(self.lattice.maximal_proper_indices().contains(&k))
    }

    fn is_prime(&self, i: &Ideal) -> bool {
        let r = self.ring;
        !i.is_whole()
            && r.elements().all(|a| {
                i.contains(a)
                    || r.elements()
                        .all(|b| i.contains(b) || !i.contains(r.mul(a, b)))
            })
    }

    fn module_hom(&self, w: &Witness, h: usize) -> Result<ModuleHom> {
        let wh = w
            .homs
            .get(h)
            .ok_or_else(|| Error::InvalidParameter(format!("witness has no hom {h}")))?;
        let pairs = wh
            .pairs
            .iter()
            .map(|(x, y)| Ok((self.ring.parse_element(x)?, self.ring.parse_element(y)?)))
            .collect::<Result<Vec<_>>>()?;
        ModuleHom::new(
            self.ideal(wh.source)?.clone(),
            self.ideal(wh.target)?.clone(),
            &pairs,
        )
    }

    fn check(&self, w: &Witness, fact: &Fact) -> Result<bool> {
        Ok(match fact {
            Fact::NilEssential {
                ideal,
                within,
                holds,
            } => {
                is_nil_essential(&self.lattice, self.ideal(*ideal)?, self.within(*within)?)?.holds
                    == *holds
            }
            Fact::Essential {
                ideal,
                within,
                holds,
            } => {
                is_essential(&self.lattice, self.ideal(*ideal)?, self.within(*within)?)?.holds
                    == *holds
            }
            Fact::Nilpotent { ideal, holds } => {
                is_nilpotent_ideal(self.ideal(*ideal)?).nilpotent == *holds
            }
            Fact::Intersection {
                left,
                right,
                result,
            } => self.same(
                &ideal_intersection(self.ideal(*left)?, self.ideal(*right)?)?,
                *result,
            )?,
            Fact::Sum {
                left,
                right,
                result,
            } => self.same(
                &ideal_sum(self.ideal(*left)?, self.ideal(*right)?)?,
                *result,
            )?,
            Fact::Product {
                left,
                right,
                result,
            } => self.same(
                &ideal_product(self.ideal(*left)?, self.ideal(*right)?)?,
                *result,
            )?,
            Fact::Power {
                ideal,
                exponent,
                result,
            } => self.same(&ideal_power(self.ideal(*ideal)?, *exponent)?, *result)?,
            Fact::Contains {
                outer,
                inner,
                holds,
            } => self.ideal(*inner)?.is_subset(self.ideal(*outer)?) == *holds,
            Fact::Maximal { ideal, holds } => self.is_maximal(self.ideal(*ideal)?)? == *holds,
            Fact::Prime { ideal, holds } => self.is_prime(self.ideal(*ideal)?) == *holds,
            Fact::Semisimple { holds } => is_semisimple(self.ring, self.limits)? == *holds,
            Fact::JacobsonRadical { result } => {
                self.same(&jacobson_radical(self.ring, self.limits)?, *result)?
            }
            Fact::Radical { ideal, result } => {
                self.same(&radical_of_ideal(self.ideal(*ideal)?)?, *result)?
            }
            Fact::Quotient {
                ideal,
                element,
                result,
            } => self.same(
                &ideal_quotient(self.ideal(*ideal)?, self.ring.parse_element(element)?)?,
                *result,
            )?,
            Fact::ElementCriterion {
                ideal,
                within,
                holds,
            } => {
                nil_essential_by_element_criterion(self.ideal(*ideal)?, self.within(*within)?)?
                    == *holds
            }
            Fact::LocalizedNilEssential { ideal, holds } => {
                let seed = w
                    .multiplicative_set
                    .as_ref()
                    .ok_or_else(|| {
                        Error::InvalidParameter("witness has no multiplicative set".into())
                    })?
                    .iter()
                    .map(|x| self.ring.parse_element(x))
                    .collect::<Result<Vec<_>>>()?;
                let s = multiplicative_closure(self.ring, &seed)?;
                if s.len() != seed.len() {
                    return Ok(false);
                }
                let l = localize_ring(&s)?;
                let li = localize_ideal(&l, self.ideal(*ideal)?)?;
                let lattice = enumerate_ideals(l.result(), Sidedness::TwoSided, self.limits)?;
                is_nil_essential(&lattice, &li, None)?.holds == *holds
            }
            Fact::Preimage { ideal, result } => {
                let pairs = w
                    .endomorphism
                    .as_ref()
                    .ok_or_else(|| Error::InvalidParameter("witness has no endomorphism".into()))?;
                let mut map = vec![usize::MAX; self.ring.order()];
                for (x, y) in pairs {
                    map[self.ring.parse_element(x)?] = self.ring.parse_element(y)?;
                }
                if map.contains(&usize::MAX) {
                    return Ok(false);
                }
                let f = RingHom::new(self.ring.clone(), self.ring.clone(), map)?;
                f.is_unital() && self.same(&preimage_ideal(&f, self.ideal(*ideal)?)?, *result)?
            }
            Fact::Kernel { hom, result } => {
                self.module_hom(w, *hom)?.kernel_set() == *self.ideal(*result)?.member_set()
            }
            Fact::Image { hom, result } => {
                self.module_hom(w, *hom)?.image_set() == *self.ideal(*result)?.member_set()
            }
            Fact::NilEssentialMono { hom, holds } => {
                let f = self.module_hom(w, *hom)?;
                f.is_injective() && is_nil_essential_mono(&f, &self.lattice)? == *holds
            }
            Fact::IdealCount { count } => self.lattice.len() == *count,
        })
    }
}

/// Rebuilds every ideal and map of `witness` in `ring` and re-evaluates each
/// fact from scratch.
pub fn replay(witness: &Witness, ring: &Arc<FiniteRing>, limits: &Limits) -> Result<()> {
    let mut ideals = Vec::with_capacity(witness.ideals.len());
    for wi in &witness.ideals {
        let members = wi
            .members
            .iter()
            .map(|x| ring.parse_element(x))
            .collect::<Result<Vec<_>>>()?;
        let ideal = Ideal::from_members(ring, members, wi.sidedness)?;
        let gens = wi
            .generators
            .iter()
            .map(|x| ring.parse_element(x))
            .collect::<Result<Vec<_>>>()?;
        if Ideal::generate(ring, &gens, wi.sidedness) != ideal {
            return Err(Error::InternalInconsistency(format!(
                "generators of {} do not generate its members",
                wi.label
            )));
        }
        ideals.push(ideal);
    }
    let replayer = Replayer {
        ring,
        limits,
        ideals,
        lattice: enumerate_ideals(ring, witness.sidedness, limits)?,
    };
    for (k, fact) in witness.facts.iter().enumerate() {
        if !replayer.check(witness, fact)? {
            return Err(Error::InternalInconsistency(format!(
                "witness fact {k} does not replay: {fact:?}"
            )));
        }
    }
    Ok(())
}
