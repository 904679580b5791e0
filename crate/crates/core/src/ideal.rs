//! Left, right and two-sided ideals of a [`FiniteRing`] and their lattices.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::predicates::{self, NilpotencyResult};
use crate::ring::{Elem, FiniteRing};
use crate::span::{additive_basis, AdditiveSpan};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Sidedness {
    Left,
    Right,
    TwoSided,
}

impl Sidedness {
    pub const ALL: [Sidedness; 3] = [Sidedness::Left, Sidedness::Right, Sidedness::TwoSided];

    fn closes_left(self) -> bool {
        matches!(self, Sidedness::Left | Sidedness::TwoSided)
    }

    fn closes_right(self) -> bool {
        matches!(self, Sidedness::Right | Sidedness::TwoSided)
    }
}

impl fmt::Display for Sidedness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sidedness::Left => "left",
            Sidedness::Right => "right",
            Sidedness::TwoSided => "two-sided",
        })
    }
}

impl FromStr for Sidedness {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left" => Ok(Sidedness::Left),
            "right" => Ok(Sidedness::Right),
            "two-sided" | "twosided" | "both" => Ok(Sidedness::TwoSided),
            other => Err(Error::InvalidParameter(format!(
                "unknown sidedness `{other}`"
            ))),
        }
    }
}

/// A sided ideal: a membership set over the element indices of its ring plus
/// the generators it was built from.
///
/// Equality compares the ring (by identity) and the member set only.
#[derive(Clone)]
pub struct Ideal {
    ring: Arc<FiniteRing>,
    members: FixedBitSet,
    size: usize,
    sidedness: Sidedness,
    generators: Vec<Elem>,
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) && self.members == other.members
    }
}

impl Eq for Ideal {}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal({} {:?})", self.sidedness, self.member_names())
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<&str> = self.generators.iter().map(|&g| self.ring.name(g)).collect();
        write!(f, "<{}>", gens.join(", "))
    }
}

impl Ideal {
    /// Smallest ideal of the given sidedness containing `gens`.
    ///
    /// With an identity present, the left ideal generated by `gens` is the
    /// additive span of `R·gens`; the two-sided one is the span of `L·R` for
    /// that left ideal `L`, and it is enough to multiply additive generators of `L`.
    pub fn generate(ring: &Arc<FiniteRing>, gens: &[Elem], sidedness: Sidedness) -> Ideal {
        let r: &FiniteRing = ring;
        let mut span = AdditiveSpan::new(r);
        for &g in gens {
            for x in r.elements() {
                let y = match sidedness {
                    Sidedness::Right => r.mul(g, x),
                    _ => r.mul(x, g),
                };
                span.extend(y);
            }
        }
        if sidedness == Sidedness::TwoSided {
            let left_basis = span.basis.clone();
            for b in left_basis {
                for s in r.elements() {
                    span.extend(r.mul(b, s));
                }
            }
        }
        let mut generators: Vec<Elem> = gens.iter().copied().filter(|&g| g != r.zero()).collect();
        generators.sort_unstable();
        generators.dedup();
        Self::from_parts(ring.clone(), span.into_set(), sidedness, generators)
    }

    pub fn zero(ring: &Arc<FiniteRing>, sidedness: Sidedness) -> Ideal {
        Self::generate(ring, &[], sidedness)
    }

    pub fn whole(ring: &Arc<FiniteRing>, sidedness: Sidedness) -> Ideal {
        Self::generate(ring, &[ring.one()], sidedness)
    }

    pub(crate) fn from_parts(
        ring: Arc<FiniteRing>,
        members: FixedBitSet,
        sidedness: Sidedness,
        generators: Vec<Elem>,
    ) -> Ideal {
        let size = members.count_ones(..);
        Ideal {
            ring,
            members,
            size,
            sidedness,
            generators,
        }
    }

    /// Wraps a member set after checking that it is an ideal of the requested
    /// sidedness. Generators are taken to be an additive basis.
    pub fn from_members(
        ring: &Arc<FiniteRing>,
        members: impl IntoIterator<Item = Elem>,
        sidedness: Sidedness,
    ) -> Result<Ideal> {
        let mut set = FixedBitSet::with_capacity(ring.order());
        for x in members {
            if x >= ring.order() {
                return Err(Error::UnknownElement(x.to_string()));
            }
            set.insert(x);
        }
        Self::from_set_checked(ring, set, sidedness)
    }

    pub(crate) fn from_set_checked(
        ring: &Arc<FiniteRing>,
        set: FixedBitSet,
        sidedness: Sidedness,
    ) -> Result<Ideal> {
        let r: &FiniteRing = ring;
        let elems: Vec<Elem> = set.ones().collect();
        let closed_add = set.contains(r.zero())
            && elems
                .iter()
                .all(|&x| elems.iter().all(|&y| set.contains(r.add(x, y))));
        if !closed_add {
            return Err(Error::InternalInconsistency(
                "member set is not an additive subgroup".into(),
            ));
        }
        let basis = additive_basis(r, &set);
        let ideal = Self::from_parts(ring.clone(), set, sidedness, basis);
        if !ideal.is_closed_under(sidedness) {
            return Err(Error::Sidedness {
                expected: sidedness,
            });
        }
        Ok(ideal)
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn ring_arc(&self) -> Arc<FiniteRing> {
        self.ring.clone()
    }

    pub fn sidedness(&self) -> Sidedness {
        self.sidedness
    }

    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn member_set(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn members(&self) -> impl Iterator<Item = Elem> + '_ {
        self.members.ones()
    }

    pub fn member_names(&self) -> Vec<String> {
        self.members()
            .map(|x| self.ring.name(x).to_string())
            .collect()
    }

    pub fn generator_names(&self) -> Vec<String> {
        self.generators
            .iter()
            .map(|&x| self.ring.name(x).to_string())
            .collect()
    }

    /// `(g1, g2)`, or `(0)` for the zero ideal.
    pub fn label(&self) -> String {
        if self.is_zero() {
            "(0)".into()
        } else {
            format!("({})", self.generator_names().join(", "))
        }
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.members.contains(x)
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_zero(&self) -> bool {
        self.size == 1
    }

    pub fn is_whole(&self) -> bool {
        self.size == self.ring.order()
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.members.is_subset(&other.members)
    }

    /// `self ∩ other = 0`.
    pub fn meets_trivially(&self, other: &Ideal) -> bool {
        self.members.intersection_count(&other.members) == 1
    }

    pub fn same_ring(&self, other: &Ideal) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring)
    }

    pub fn is_closed_under(&self, sidedness: Sidedness) -> bool {
        let r = &self.ring;
        let basis = additive_basis(r, &self.members);
        r.elements().all(|s| {
            basis.iter().all(|&x| {
                (!sidedness.closes_left() || self.contains(r.mul(s, x)))
                    && (!sidedness.closes_right() || self.contains(r.mul(x, s)))
            })
        })
    }

    /// Same member set viewed with another sidedness, if it is closed under it.
    pub fn as_sided(&self, sidedness: Sidedness) -> Result<Ideal> {
        if sidedness == self.sidedness || self.is_closed_under(sidedness) {
            let mut i = self.clone();
            i.sidedness = sidedness;
            Ok(i)
        } else {
            Err(Error::Sidedness {
                expected: sidedness,
            })
        }
    }

    /// Order by size, then lexicographically by sorted member list.
    pub fn canonical_cmp(&self, other: &Ideal) -> Ordering {
        self.size
            .cmp(&other.size)
            .then_with(|| self.members.ones().cmp(other.members.ones()))
    }

    fn compatible(&self, other: &Ideal) -> Result<()> {
        if !self.same_ring(other) {
            return Err(Error::MixedRing);
        }
        if self.sidedness != other.sidedness {
            return Err(Error::MixedSidedness(self.sidedness, other.sidedness));
        }
        Ok(())
    }
}

pub fn ideal_sum(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    i.compatible(j)?;
    let r = i.ring();
    let mut span = AdditiveSpan::from_subgroup(r, &i.members);
    for x in j.members() {
        span.extend(x);
    }
    let mut generators: Vec<Elem> = i.generators.iter().chain(&j.generators).copied().collect();
    generators.sort_unstable();
    generators.dedup();
    Ok(Ideal::from_parts(
        i.ring_arc(),
        span.into_set(),
        i.sidedness,
        generators,
    ))
}

pub fn ideal_intersection(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    i.compatible(j)?;
    let mut set = i.members.clone();
    set.intersect_with(&j.members);
    let basis = additive_basis(i.ring(), &set);
    Ok(Ideal::from_parts(i.ring_arc(), set, i.sidedness, basis))
}

/// Ideal generated by all products `xy` with `x ∈ I`, `y ∈ J`. The additive
/// span of those products is already an ideal of the common sidedness, and by
/// bilinearity products of additive generators suffice.
pub fn ideal_product(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    i.compatible(j)?;
    let r = i.ring();
    let bi = additive_basis(r, &i.members);
    let bj = additive_basis(r, &j.members);
    let mut span = AdditiveSpan::new(r);
    for &x in &bi {
        for &y in &bj {
            span.extend(r.mul(x, y));
        }
    }
    let generators = span.basis.clone();
    Ok(Ideal::from_parts(
        i.ring_arc(),
        span.into_set(),
        i.sidedness,
        generators,
    ))
}

/// `Iⁿ` with `I¹ = I`.
pub fn ideal_power(i: &Ideal, n: usize) -> Result<Ideal> {
    if n == 0 {
        return Err(Error::InvalidParameter("ideal power needs n >= 1".into()));
    }
    let mut p = i.clone();
    for _ in 1..n {
        p = ideal_product(&p, i)?;
    }
    Ok(p)
}

/// `(I : a) = { r : r·a ∈ I }` in a commutative ring.
pub fn ideal_quotient(i: &Ideal, a: Elem) -> Result<Ideal> {
    let r = i.ring();
    if !r.is_commutative() {
        return Err(Error::NotCommutative);
    }
    let mut set = FixedBitSet::with_capacity(r.order());
    for x in r.elements() {
        if i.contains(r.mul(x, a)) {
            set.insert(x);
        }
    }
    let basis = additive_basis(r, &set);
    Ok(Ideal::from_parts(
        i.ring_arc(),
        set,
        Sidedness::TwoSided,
        basis,
    ))
}

/// `rad(I) = { x : xᵏ ∈ I for some k ≥ 1 }` in a commutative ring.
pub fn radical_of_ideal(i: &Ideal) -> Result<Ideal> {
    let r = i.ring();
    if !r.is_commutative() {
        return Err(Error::NotCommutative);
    }
    let mut set = FixedBitSet::with_capacity(r.order());
    for x in r.elements() {
        let mut p = x;
        for _ in 0..r.order() {
            if i.contains(p) {
                set.insert(x);
                break;
            }
            p = r.mul(p, x);
        }
    }
    let basis = additive_basis(r, &set);
    Ok(Ideal::from_parts(
        i.ring_arc(),
        set,
        Sidedness::TwoSided,
        basis,
    ))
}

/// All ideals of one sidedness, canonically ordered.
pub struct IdealLattice {
    ring: Arc<FiniteRing>,
    sidedness: Sidedness,
    ideals: Vec<Ideal>,
    index: HashMap<FixedBitSet, usize>,
    nilpotency: OnceLock<Vec<NilpotencyResult>>,
}

impl fmt::Debug for IdealLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdealLattice")
            .field("sidedness", &self.sidedness)
            .field("ideals", &self.ideals)
            .finish()
    }
}

/// Every ideal of a finite ring is a finite sum of principal ideals, so
/// closing the set of principal ideals under sums reaches all of them.
pub fn enumerate_ideals(
    ring: &Arc<FiniteRing>,
    sidedness: Sidedness,
    limits: &Limits,
) -> Result<IdealLattice> {
    limits.check_order(ring.order())?;
    let mut ideals: Vec<Ideal> = Vec::new();
    let mut index: HashMap<FixedBitSet, usize> = HashMap::new();
    let mut principals = Vec::new();
    for x in ring.elements() {
        let p = Ideal::generate(ring, &[x], sidedness);
        if !index.contains_key(&p.members) {
            index.insert(p.members.clone(), ideals.len());
            principals.push(ideals.len());
            ideals.push(p);
        }
    }
    let mut next = 0;
    while next < ideals.len() {
        for &p in &principals {
            if ideals[p].is_subset(&ideals[next]) {
                continue;
            }
            let s = ideal_sum(&ideals[next], &ideals[p])?;
            if !index.contains_key(&s.members) {
                index.insert(s.members.clone(), ideals.len());
                ideals.push(s);
            }
        }
        next += 1;
    }
    Ok(IdealLattice::new(ring.clone(), sidedness, ideals))
}

impl IdealLattice {
    pub(crate) fn new(ring: Arc<FiniteRing>, sidedness: Sidedness, mut ideals: Vec<Ideal>) -> Self {
        ideals.sort_by(Ideal::canonical_cmp);
        let index = ideals
            .iter()
            .enumerate()
            .map(|(i, id)| (id.members.clone(), i))
            .collect();
        IdealLattice {
            ring,
            sidedness,
            ideals,
            index,
            nilpotency: OnceLock::new(),
        }
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn sidedness(&self) -> Sidedness {
        self.sidedness
    }

    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn get(&self, i: usize) -> &Ideal {
        &self.ideals[i]
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Ideal> {
        self.ideals.iter()
    }

    /// Position of an ideal with the same member set, if present.
    pub fn position(&self, ideal: &Ideal) -> Option<usize> {
        self.index.get(&ideal.members).copied()
    }

    pub fn position_of_set(&self, set: &FixedBitSet) -> Option<usize> {
        self.index.get(set).copied()
    }

    pub fn zero(&self) -> &Ideal {
        &self.ideals[0]
    }

    pub fn whole(&self) -> &Ideal {
        &self.ideals[self.ideals.len() - 1]
    }

    /// Nilpotency of every member, computed once.
    pub fn nilpotency(&self) -> &[NilpotencyResult] {
        self.nilpotency.get_or_init(|| {
            self.ideals
                .iter()
                .map(predicates::is_nilpotent_ideal)
                .collect()
        })
    }

    pub fn is_nilpotent_at(&self, i: usize) -> bool {
        self.nilpotency()[i].nilpotent
    }

    pub fn minimal_nonzero_indices(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| !self.ideals[i].is_zero())
            .filter(|&i| {
                !self
                    .ideals
                    .iter()
                    .any(|j| !j.is_zero() && j != &self.ideals[i] && j.is_subset(&self.ideals[i]))
            })
            .collect()
    }

    pub fn maximal_proper_indices(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| !self.ideals[i].is_whole())
            .filter(|&i| {
                !self
                    .ideals
                    .iter()
                    .any(|j| !j.is_whole() && j != &self.ideals[i] && self.ideals[i].is_subset(j))
            })
            .collect()
    }
}

pub fn minimal_nonzero_ideals(lattice: &IdealLattice) -> Vec<Ideal> {
    lattice
        .minimal_nonzero_indices()
        .into_iter()
        .map(|i| lattice.get(i).clone())
        .collect()
}

pub fn maximal_proper_ideals(lattice: &IdealLattice) -> Vec<Ideal> {
    lattice
        .maximal_proper_indices()
        .into_iter()
        .map(|i| lattice.get(i).clone())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::ut3_element;

    fn z(n: usize) -> Arc<FiniteRing> {
        Arc::new(FiniteRing::cyclic(n).unwrap())
    }

    fn members(i: &Ideal) -> Vec<Elem> {
        i.members().collect()
    }

    fn lattice(r: &Arc<FiniteRing>, s: Sidedness) -> IdealLattice {
        enumerate_ideals(r, s, &Limits::default()).unwrap()
    }

    #[test]
    fn generate_in_z12() {
        let r = z(12);
        let i = Ideal::generate(&r, &[4], Sidedness::TwoSided);
        assert_eq!(members(&i), vec![0, 4, 8]);
        assert_eq!(i.generators(), &[4]);
        assert!(Ideal::zero(&r, Sidedness::Left).generators().is_empty());
    }

    #[test]
    fn generate_sided_in_ut3() {
        let r = Arc::new(FiniteRing::ut3(2).unwrap());
        let e12 = ut3_element(2, 0, 1, 0, 0);
        let e13 = ut3_element(2, 0, 0, 1, 0);
        let left = Ideal::generate(&r, &[e12], Sidedness::Left);
        assert_eq!(members(&left), vec![0, e12]);
        let right = Ideal::generate(&r, &[e12], Sidedness::Right);
        let mut expected = vec![0, e12, e13, r.add(e12, e13)];
        expected.sort();
        assert_eq!(members(&right), expected);
        assert!(!left.is_closed_under(Sidedness::Right));
        assert!(left.as_sided(Sidedness::TwoSided).is_err());
    }

    #[test]
    fn z12_lattice() {
        let r = z(12);
        let l = lattice(&r, Sidedness::TwoSided);
        let sizes: Vec<usize> = l.iter().map(Ideal::len).collect();
        assert_eq!(sizes, vec![1, 2, 3, 4, 6, 12]);
        let gen = |g| Ideal::generate(&r, &[g], Sidedness::TwoSided);
        assert_eq!(l.get(1), &gen(6));
        assert_eq!(l.get(2), &gen(4));
        assert_eq!(l.get(3), &gen(3));
        assert_eq!(l.get(4), &gen(2));
        let mins = minimal_nonzero_ideals(&l);
        assert_eq!(mins, vec![gen(6), gen(4)]);
        let maxs = maximal_proper_ideals(&l);
        assert_eq!(maxs, vec![gen(3), gen(2)]);
    }

    #[test]
    fn ut3_left_lattice_has_nine_members() {
        let r = Arc::new(FiniteRing::ut3(2).unwrap());
        let l = lattice(&r, Sidedness::Left);
        assert_eq!(l.len(), 9);
        let mins = l.minimal_nonzero_indices();
        assert_eq!(mins.len(), 3);
        assert!(mins.iter().all(|&i| l.get(i).len() == 2));
        let e23 = ut3_element(2, 0, 0, 0, 1);
        assert!(mins.iter().all(|&i| !l.get(i).contains(e23)));
    }

    #[test]
    fn fields_and_zero_ring() {
        for p in [2, 3, 5, 7] {
            let l = lattice(&z(p), Sidedness::TwoSided);
            assert_eq!(l.len(), 2);
            assert_eq!(minimal_nonzero_ideals(&l), vec![l.whole().clone()]);
            assert_eq!(maximal_proper_ideals(&l), vec![l.zero().clone()]);
        }
        let l = lattice(&z(1), Sidedness::TwoSided);
        assert_eq!(l.len(), 1);
        assert!(minimal_nonzero_ideals(&l).is_empty());
        assert!(maximal_proper_ideals(&l).is_empty());
    }

    #[test]
    fn sum_and_intersection() {
        let r = z(12);
        let gen = |g| Ideal::generate(&r, &[g], Sidedness::TwoSided);
        assert_eq!(ideal_sum(&gen(4), &gen(6)).unwrap(), gen(2));
        assert_eq!(ideal_intersection(&gen(4), &gen(6)).unwrap(), gen(0));
        assert_eq!(ideal_intersection(&gen(3), &gen(3)).unwrap(), gen(3));
        let left = Ideal::generate(&r, &[4], Sidedness::Left);
        assert!(matches!(
            ideal_sum(&gen(4), &left),
            Err(Error::MixedSidedness(..))
        ));
        let other = z(12);
        let foreign = Ideal::generate(&other, &[4], Sidedness::TwoSided);
        assert!(matches!(
            ideal_intersection(&gen(4), &foreign),
            Err(Error::MixedRing)
        ));
    }

    #[test]
    fn products_and_powers_in_ut3() {
        let r = Arc::new(FiniteRing::ut3(2).unwrap());
        let l = lattice(&r, Sidedness::Left);
        let e13 = ut3_element(2, 0, 0, 1, 0);
        let i3 = Ideal::generate(&r, &[e13], Sidedness::Left);
        assert!(ideal_power(&i3, 2).unwrap().is_zero());
        // the strict upper part: all of a = 0
        let i8 = l.iter().find(|i| i.len() == 8).unwrap();
        assert_eq!(ideal_power(i8, 2).unwrap(), i3);
        assert!(ideal_power(i8, 0).is_err());
        let right = Ideal::generate(&r, &[ut3_element(2, 0, 1, 0, 0)], Sidedness::Right);
        let whole = Ideal::whole(&r, Sidedness::Right);
        assert_eq!(ideal_product(&right, &whole).unwrap(), right);
    }

    #[test]
    fn quotients_and_radicals() {
        let r = z(12);
        let gen = |g| Ideal::generate(&r, &[g], Sidedness::TwoSided);
        assert_eq!(ideal_quotient(&gen(4), 2).unwrap(), gen(2));
        assert_eq!(ideal_quotient(&gen(0), 6).unwrap(), gen(2));
        assert_eq!(ideal_quotient(&gen(3), 1).unwrap(), gen(3));
        assert_eq!(radical_of_ideal(&gen(4)).unwrap(), gen(2));
        assert_eq!(radical_of_ideal(&gen(0)).unwrap(), gen(6));
        assert_eq!(radical_of_ideal(&gen(1)).unwrap(), gen(1));
        let nc = Arc::new(FiniteRing::ut3(2).unwrap());
        let z0 = Ideal::zero(&nc, Sidedness::TwoSided);
        assert!(matches!(ideal_quotient(&z0, 1), Err(Error::NotCommutative)));
        assert!(matches!(radical_of_ideal(&z0), Err(Error::NotCommutative)));
    }

    #[test]
    fn quotient_ring_orders() {
        let r = z(12);
        let l = lattice(&r, Sidedness::TwoSided);
        for i in l.iter() {
            let (q, map) = FiniteRing::quotient(i).unwrap();
            assert_eq!(q.order() * i.len(), r.order());
            assert_eq!(map.kernel_set(), *i.member_set());
        }
        let (q, _) = FiniteRing::quotient(l.whole()).unwrap();
        assert!(q.is_zero_ring());
        let nc = Arc::new(FiniteRing::ut3(2).unwrap());
        let left = Ideal::generate(&nc, &[ut3_element(2, 0, 1, 0, 0)], Sidedness::Left);
        assert!(matches!(
            FiniteRing::quotient(&left),
            Err(Error::Sidedness { .. })
        ));
    }

    #[test]
    fn z12_mod_4_is_z4_up_to_relabeling() {
        let r = z(12);
        let (q, _) = FiniteRing::quotient(&Ideal::generate(&r, &[4], Sidedness::TwoSided)).unwrap();
        let z4 = FiniteRing::cyclic(4).unwrap();
        let perms = permutations(4);
        let iso = perms.iter().any(|p| {
            (0..4).all(|a| {
                (0..4).all(|b| {
                    p[q.add(a, b)] == z4.add(p[a], p[b]) && p[q.mul(a, b)] == z4.mul(p[a], p[b])
                })
            })
        });
        assert!(iso);
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }
}
