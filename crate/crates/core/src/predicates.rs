//! Nilpotency, essentiality and nil-essentiality of ideals, and the radicals
//! and socle built on top of them.
//!
//! Essentiality questions quantify over the ideals of an [`IdealLattice`]; the
//! sidedness of the lattice decides which `μ` are considered. In the zero ring
//! every ideal is `0 = R`: it is nilpotent, essential and nil-essential, since
//! no nonzero `μ` exists.

use std::sync::Arc;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{enumerate_ideals, ideal_product, Ideal, IdealLattice, Sidedness};
use crate::limits::Limits;
use crate::ring::FiniteRing;
use crate::span::AdditiveSpan;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NilpotencyResult {
    pub nilpotent: bool,
    /// Least `k` with `Iᵏ = 0`.
    pub index: Option<usize>,
    /// The power where the descending chain `I ⊇ I² ⊇ ...` stops, when it is not zero.
    pub stable_power: Option<Ideal>,
}

/// Iterates `I, I², I³, ...` until the power vanishes or repeats. The chain is
/// descending, so this takes at most `|I|` steps.
pub fn is_nilpotent_ideal(i: &Ideal) -> NilpotencyResult {
    let mut power = i.clone();
    let mut k = 1;
    loop {
        if power.is_zero() {
            return NilpotencyResult {
                nilpotent: true,
                index: Some(k),
                stable_power: None,
            };
        }
        let next = ideal_product(&power, i).expect("powers share ring and sidedness");
        if next == power {
            return NilpotencyResult {
                nilpotent: false,
                index: None,
                stable_power: Some(power),
            };
        }
        power = next;
        k += 1;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    /// The canonically first `μ` that breaks the property.
    pub witness: Option<Ideal>,
}

/// `I` is essential in `within` (default `R`): every nonzero lattice ideal
/// `μ ⊆ within` meets `I` nontrivially.
pub fn is_essential(lattice: &IdealLattice, i: &Ideal, within: Option<&Ideal>) -> Result<Verdict> {
    verdict(lattice, i, within, false)
}

/// `I` is nil-essential in `within` (default `R`): every lattice ideal
/// `μ ⊆ within` with `I ∩ μ = 0` is nilpotent.
pub fn is_nil_essential(
    lattice: &IdealLattice,
    i: &Ideal,
    within: Option<&Ideal>,
) -> Result<Verdict> {
    verdict(lattice, i, within, true)
}

fn verdict(
    lattice: &IdealLattice,
    i: &Ideal,
    within: Option<&Ideal>,
    nil: bool,
) -> Result<Verdict> {
    if !Arc::ptr_eq(lattice.ring(), &i.ring_arc()) {
        return Err(Error::MixedRing);
    }
    let within_set = match within {
        Some(w) => {
            if !w.same_ring(i) {
                return Err(Error::MixedRing);
            }
            if !i.is_subset(w) {
                return Err(Error::NotContained);
            }
            w.member_set().clone()
        }
        None => lattice.whole().member_set().clone(),
    };
    let witness = first_escape(lattice, i.member_set(), &within_set, nil);
    Ok(Verdict {
        holds: witness.is_none(),
        witness: witness.map(|k| lattice.get(k).clone()),
    })
}

/// Index of the first lattice ideal `μ ⊆ within` with `I ∩ μ = 0` that is
/// nonzero (`nil = false`) or non-nilpotent (`nil = true`).
pub(crate) fn first_escape(
    lattice: &IdealLattice,
    i: &FixedBitSet,
    within: &FixedBitSet,
    nil: bool,
) -> Option<usize> {
    lattice.iter().enumerate().position(|(k, mu)| {
        mu.member_set().is_subset(within)
            && mu.member_set().intersection_count(i) == 1
            && if nil {
                !lattice.is_nilpotent_at(k)
            } else {
                !mu.is_zero()
            }
    })
}

/// Element-level test for nil-essentiality in a commutative ring: for every
/// non-nilpotent `x ∈ within` there is an `r` with `rx ∈ I` and `rx ≠ 0`.
pub fn nil_essential_by_element_criterion(i: &Ideal, within: Option<&Ideal>) -> Result<bool> {
    let r = i.ring();
    if !r.is_commutative() {
        return Err(Error::NotCommutative);
    }
    if i.is_zero() {
        return Err(Error::ZeroIdealNotCovered);
    }
    if let Some(w) = within {
        if !w.same_ring(i) {
            return Err(Error::MixedRing);
        }
        if !i.is_subset(w) {
            return Err(Error::NotContained);
        }
    }
    let in_within = |x| within.is_none_or(|w| w.contains(x));
    Ok(r.elements()
        .filter(|&x| in_within(x) && !r.is_nilpotent(x))
        .all(|x| {
            r.elements().any(|s| {
                let y = r.mul(s, x);
                y != r.zero() && i.contains(y)
            })
        }))
}

fn sum_of(ring: &Arc<FiniteRing>, ideals: &[&Ideal], sidedness: Sidedness) -> Ideal {
    let mut span = AdditiveSpan::new(ring);
    for i in ideals {
        for x in i.members() {
            span.extend(x);
        }
    }
    let mut gens: Vec<_> = ideals
        .iter()
        .flat_map(|i| i.generators().to_vec())
        .collect();
    gens.sort_unstable();
    gens.dedup();
    Ideal::from_parts(ring.clone(), span.into_set(), sidedness, gens)
}

fn intersection_of<'a>(
    ring: &Arc<FiniteRing>,
    ideals: impl Iterator<Item = &'a Ideal>,
    sidedness: Sidedness,
) -> Result<Ideal> {
    let mut set = FixedBitSet::with_capacity(ring.order());
    set.insert_range(..);
    for i in ideals {
        set.intersect_with(i.member_set());
    }
    Ideal::from_set_checked(ring, set, sidedness)
}

/// Sum of the minimal nonzero ideals, cross-checked against the intersection
/// of all essential ideals.
pub fn socle(lattice: &IdealLattice) -> Result<Ideal> {
    let ring = lattice.ring();
    let mins: Vec<&Ideal> = lattice
        .minimal_nonzero_indices()
        .into_iter()
        .map(|i| lattice.get(i))
        .collect();
    let by_sum = sum_of(ring, &mins, lattice.sidedness());
    let essentials = lattice.iter().filter(|i| {
        first_escape(lattice, i.member_set(), lattice.whole().member_set(), false).is_none()
    });
    let by_intersection = intersection_of(ring, essentials, lattice.sidedness())?;
    if by_sum != by_intersection {
        return Err(Error::InternalInconsistency(
            "socle: sum of minimal ideals differs from intersection of essential ideals".into(),
        ));
    }
    Ok(by_sum)
}

pub fn jacobson_radical(ring: &Arc<FiniteRing>, limits: &Limits) -> Result<Ideal> {
    let left = enumerate_ideals(ring, Sidedness::Left, limits)?;
    jacobson_radical_from(&left)
}

/// Intersection of the maximal left ideals of `left`, validated against the
/// quasi-regularity description `x ∈ J ⇔ 1 − rx is a unit for every r`.
pub fn jacobson_radical_from(left: &IdealLattice) -> Result<Ideal> {
    if left.sidedness() != Sidedness::Left && !left.ring().is_commutative() {
        return Err(Error::InvalidParameter(
            "Jacobson radical needs the left ideal lattice".into(),
        ));
    }
    let ring = left.ring();
    let maximal = left.maximal_proper_indices();
    let by_maximals =
        intersection_of(ring, maximal.iter().map(|&i| left.get(i)), left.sidedness())?;

    let mut unit = FixedBitSet::with_capacity(ring.order());
    for u in ring.units() {
        unit.insert(u);
    }
    let mut quasi = FixedBitSet::with_capacity(ring.order());
    for x in ring.elements() {
        if ring
            .elements()
            .all(|r| unit.contains(ring.sub(ring.one(), ring.mul(r, x))))
        {
            quasi.insert(x);
        }
    }
    if by_maximals.member_set() != &quasi {
        return Err(Error::InternalInconsistency(
            "Jacobson radical: maximal-ideal intersection differs from quasi-regular set".into(),
        ));
    }
    by_maximals
        .as_sided(Sidedness::TwoSided)
        .map_err(|_| Error::InternalInconsistency("Jacobson radical is not two-sided".into()))
}

/// Set of nilpotent elements of a commutative ring.
pub fn nilradical(ring: &Arc<FiniteRing>) -> Result<Ideal> {
    if !ring.is_commutative() {
        return Err(Error::NotCommutative);
    }
    Ideal::from_members(
        ring,
        ring.elements().filter(|&x| ring.is_nilpotent(x)),
        Sidedness::TwoSided,
    )
    .map_err(|_| Error::InternalInconsistency("nilpotent elements do not form an ideal".into()))
}

pub fn is_reduced(ring: &FiniteRing) -> bool {
    ring.elements()
        .all(|x| x == ring.zero() || !ring.is_nilpotent(x))
}

/// A finite ring is Artinian, so it is semisimple exactly when its Jacobson
/// radical vanishes.
pub fn is_semisimple(ring: &Arc<FiniteRing>, limits: &Limits) -> Result<bool> {
    Ok(jacobson_radical(ring, limits)?.is_zero())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassificationFlags {
    pub nilpotent: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nilpotency_index: Option<usize>,
    pub essential: bool,
    pub nil_essential: bool,
    pub minimal: bool,
    pub maximal: bool,
}

pub fn classify(lattice: &IdealLattice) -> Vec<ClassificationFlags> {
    let mins = lattice.minimal_nonzero_indices();
    let maxs = lattice.maximal_proper_indices();
    let whole = lattice.whole().member_set();
    (0..lattice.len())
        .map(|k| {
            let set = lattice.get(k).member_set();
            let nil = &lattice.nilpotency()[k];
            let flags = ClassificationFlags {
                nilpotent: nil.nilpotent,
                nilpotency_index: nil.index,
                essential: first_escape(lattice, set, whole, false).is_none(),
                nil_essential: first_escape(lattice, set, whole, true).is_none(),
                minimal: mins.contains(&k),
                maximal: maxs.contains(&k),
            };
            debug_assert!(!flags.essential || flags.nil_essential);
            flags
        })
        .collect()
}
