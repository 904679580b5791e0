//! Brute-force reference implementations used to cross-check the engine.
//!
//! Nothing here shares code with the lattice enumeration: subgroups are found
//! by closing sets under addition element by element, and nilpotency is
//! decided from elementwise products.

use std::collections::HashSet;

use fixedbitset::FixedBitSet;

use crate::ideal::Sidedness;
use crate::ring::{Elem, FiniteRing};

fn close_additively(ring: &FiniteRing, mut set: FixedBitSet) -> FixedBitSet {
    let mut members: Vec<Elem> = set.ones().collect();
    let mut k = 0;
    while k < members.len() {
        let x = members[k];
        for i in 0..=k {
            let y = ring.add(x, members[i]);
            if !set.contains(y) {
                set.insert(y);
                members.push(y);
            }
        }
        k += 1;
    }
    set
}

/// Every additive subgroup, found by adjoining one element at a time.
pub fn additive_subgroups(ring: &FiniteRing) -> Vec<FixedBitSet> {
    let mut zero = FixedBitSet::with_capacity(ring.order());
    zero.insert(ring.zero());
    let mut seen = HashSet::new();
    seen.insert(zero.clone());
    let mut out = vec![zero];
    let mut k = 0;
    while k < out.len() {
        let h = out[k].clone();
        k += 1;
        for x in ring.elements().filter(|&x| !h.contains(x)) {
            let mut g = h.clone();
            g.insert(x);
            let g = close_additively(ring, g);
            if seen.insert(g.clone()) {
                out.push(g);
            }
        }
    }
    out
}

pub fn is_closed(ring: &FiniteRing, set: &FixedBitSet, side: Sidedness) -> bool {
    set.ones().all(|x| {
        ring.elements().all(|r| {
            let left = matches!(side, Sidedness::Left | Sidedness::TwoSided);
            let right = matches!(side, Sidedness::Right | Sidedness::TwoSided);
            (!left || set.contains(ring.mul(r, x))) && (!right || set.contains(ring.mul(x, r)))
        })
    })
}

/// Member sets of all ideals of the given sidedness, sorted by size and then
/// by member list.
pub fn ideals_by_subgroup_scan(ring: &FiniteRing, side: Sidedness) -> Vec<FixedBitSet> {
    let mut ideals: Vec<FixedBitSet> = additive_subgroups(ring)
        .into_iter()
        .filter(|s| is_closed(ring, s, side))
        .collect();
    ideals.sort_by(|a, b| {
        a.count_ones(..)
            .cmp(&b.count_ones(..))
            .then_with(|| a.ones().cmp(b.ones()))
    });
    ideals
}

/// `Iᵏ = 0` for some `k`, with `Iᵏ` formed from all products of `k` members.
pub fn is_nilpotent_by_products(ring: &FiniteRing, set: &FixedBitSet) -> bool {
    let mut power = set.clone();
    for _ in 0..=set.count_ones(..) {
        if power.count_ones(..) == 1 && power.contains(ring.zero()) {
            return true;
        }
        let mut next = FixedBitSet::with_capacity(ring.order());
        next.insert(ring.zero());
        for p in power.ones() {
            for x in set.ones() {
                next.insert(ring.mul(p, x));
            }
        }
        power = close_additively(ring, next);
    }
    power.count_ones(..) == 1
}

/// Nil-essentiality of `i` in `within`, quantifying over the subgroup scan.
pub fn nil_essential_by_scan(
    ring: &FiniteRing,
    side: Sidedness,
    i: &FixedBitSet,
    within: &FixedBitSet,
) -> bool {
    ideals_by_subgroup_scan(ring, side)
        .iter()
        .filter(|mu| mu.is_subset(within) && mu.intersection_count(i) == 1)
        .all(|mu| is_nilpotent_by_products(ring, mu))
}

/// Essentiality of `i` in `within`, quantifying over the subgroup scan.
pub fn essential_by_scan(
    ring: &FiniteRing,
    side: Sidedness,
    i: &FixedBitSet,
    within: &FixedBitSet,
) -> bool {
    ideals_by_subgroup_scan(ring, side)
        .iter()
        .filter(|mu| mu.is_subset(within) && mu.intersection_count(i) == 1)
        .all(|mu| mu.count_ones(..) == 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subgroup_counts() {
        // subgroups of Z/12 correspond to divisors of 12
        assert_eq!(
            additive_subgroups(&FiniteRing::cyclic(12).unwrap()).len(),
            6
        );
        // (Z/2)^4 has 1 + 15 + 35 + 15 + 1 subgroups
        assert_eq!(additive_subgroups(&FiniteRing::ut3(2).unwrap()).len(), 67);
    }

    #[test]
    fn nilpotency_by_products() {
        let r = FiniteRing::cyclic(12).unwrap();
        let six: FixedBitSet = FixedBitSet::from_iter([0usize, 6]);
        let mut s = FixedBitSet::with_capacity(12);
        s.union_with(&six);
        assert!(is_nilpotent_by_products(&r, &s));
        let mut four = FixedBitSet::with_capacity(12);
        four.extend([0, 4, 8]);
        assert!(!is_nilpotent_by_products(&r, &four));
    }
}
