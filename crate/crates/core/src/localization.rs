//! Multiplicative sets and rings of fractions of finite commutative rings.

use std::collections::{HashSet, VecDeque};
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::hom::RingHom;
use crate::ideal::{Ideal, Sidedness};
use crate::limits::{self, Limits};
use crate::ring::{tables, Construction, Elem, FiniteRing};

/// A multiplicatively closed subset containing `1` and, except in the zero
/// ring, not containing `0`.
#[derive(Clone)]
pub struct MultiplicativeSet {
    ring: Arc<FiniteRing>,
    members: FixedBitSet,
    seed: Vec<Elem>,
}

impl std::fmt::Debug for MultiplicativeSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.member_names()).finish()
    }
}

impl PartialEq for MultiplicativeSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) && self.members == other.members
    }
}

impl MultiplicativeSet {
    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn seed(&self) -> &[Elem] {
        &self.seed
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

    pub fn contains(&self, x: Elem) -> bool {
        self.members.contains(x)
    }

    pub fn len(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `{x : ux = 0 for some u ∈ S}`, the kernel of the canonical map.
    pub fn annihilated(&self) -> FixedBitSet {
        let r = &self.ring;
        let mut set = FixedBitSet::with_capacity(r.order());
        for x in r.elements() {
            if self.members().any(|u| r.mul(u, x) == r.zero()) {
                set.insert(x);
            }
        }
        set
    }
}

fn require_commutative(ring: &FiniteRing) -> Result<()> {
    if ring.is_commutative() {
        Ok(())
    } else {
        Err(Error::NotCommutative)
    }
}

/// The smallest multiplicatively closed set containing `seed ∪ {1}`.
///
/// When `0` is reached the error carries the chain of products that led
/// there, starting from a seed element.
pub fn multiplicative_closure(ring: &Arc<FiniteRing>, seed: &[Elem]) -> Result<MultiplicativeSet> {
    require_commutative(ring)?;
    if let Some(&bad) = seed.iter().find(|&&x| x >= ring.order()) {
        return Err(Error::UnknownElement(bad.to_string()));
    }
    let mut seed = seed.to_vec();
    seed.sort_unstable();
    seed.dedup();
    let n = ring.order();
    let mut members = FixedBitSet::with_capacity(n);
    let mut parent: Vec<Option<Elem>> = vec![None; n];
    let mut queue = VecDeque::new();
    members.insert(ring.one());
    queue.push_back(ring.one());
    while let Some(x) = queue.pop_front() {
        for &g in &seed {
            let y = ring.mul(x, g);
            if members.contains(y) {
                continue;
            }
            members.insert(y);
            parent[y] = Some(x);
            if y == ring.zero() {
                let mut chain = vec![y];
                let mut cur = y;
                while let Some(p) = parent[cur] {
                    if p == ring.one() {
                        break;
                    }
                    chain.push(p);
                    cur = p;
                }
                chain.reverse();
                return Err(Error::ZeroInClosure {
                    chain: chain
                        .into_iter()
                        .map(|e| ring.name(e).to_string())
                        .collect(),
                });
            }
            queue.push_back(y);
        }
    }
    if members.contains(ring.zero()) {
        // only in the zero ring, where 1 = 0
        return Err(Error::ZeroInClosure {
            chain: vec![ring.name(ring.zero()).to_string()],
        });
    }
    Ok(MultiplicativeSet {
        ring: ring.clone(),
        members,
        seed,
    })
}

/// `{s : sx = 0 ⇒ x = 0}`. In the zero ring this is `{0}`, the one case where
/// the returned set contains `0`.
pub fn non_zero_divisors(ring: &Arc<FiniteRing>) -> Result<MultiplicativeSet> {
    require_commutative(ring)?;
    let mut members = FixedBitSet::with_capacity(ring.order());
    for s in ring.elements() {
        if ring
            .elements()
            .all(|x| ring.mul(s, x) != ring.zero() || x == ring.zero())
        {
            members.insert(s);
        }
    }
    let seed = members.ones().collect();
    Ok(MultiplicativeSet {
        ring: ring.clone(),
        members,
        seed,
    })
}

/// Every multiplicatively closed subset avoiding `0`, ordered by size and then
/// by member list.
pub fn all_multiplicative_sets(
    ring: &Arc<FiniteRing>,
    limits: &Limits,
) -> Result<Vec<MultiplicativeSet>> {
    require_commutative(ring)?;
    if ring.is_zero_ring() {
        return Ok(Vec::new());
    }
    let candidates: Vec<Elem> = ring.elements().filter(|&x| !ring.is_nilpotent(x)).collect();
    let start = multiplicative_closure(ring, &[])?;
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    seen.insert(start.members.clone());
    let mut out = vec![start];
    let mut next = 0;
    while next < out.len() {
        let base: Vec<Elem> = out[next].members().collect();
        next += 1;
        for &x in &candidates {
            if base.binary_search(&x).is_ok() {
                continue;
            }
            let mut seed = base.clone();
            seed.push(x);
            let Ok(mut s) = multiplicative_closure(ring, &seed) else {
                continue;
            };
            if seen.insert(s.members.clone()) {
                limits::check(
                    "multiplicative sets",
                    seen.len(),
                    limits.max_multiplicative_sets,
                )?;
                s.seed = s.members().collect();
                out.push(s);
            }
        }
    }
    out.sort_by(|a, b| {
        a.len()
            .cmp(&b.len())
            .then_with(|| a.members().cmp(b.members()))
    });
    Ok(out)
}

/// `S⁻¹R` with its canonical map `r ↦ r/1`.
#[derive(Clone)]
pub struct LocalizedRing {
    base: Arc<FiniteRing>,
    s_set: MultiplicativeSet,
    result: Arc<FiniteRing>,
    canonical: RingHom,
    class_table: Vec<(Elem, Elem)>,
    kernel: FixedBitSet,
}

impl std::fmt::Debug for LocalizedRing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("LocalizedRing")
            .field("s", &self.s_set)
            .field("order", &self.result.order())
            .finish()
    }
}

impl LocalizedRing {
    pub fn base(&self) -> &Arc<FiniteRing> {
        &self.base
    }

    pub fn s_set(&self) -> &MultiplicativeSet {
        &self.s_set
    }

    pub fn result(&self) -> &Arc<FiniteRing> {
        &self.result
    }

    pub fn canonical(&self) -> &RingHom {
        &self.canonical
    }

    /// Least representative pair `(r, s)` of each element of the result.
    pub fn class_table(&self) -> &[(Elem, Elem)] {
        &self.class_table
    }

    pub fn kernel_set(&self) -> &FixedBitSet {
        &self.kernel
    }

    /// Additive generators of the kernel of the canonical map.
    pub fn kernel_generators(&self) -> Vec<Elem> {
        crate::span::additive_basis(&self.base, &self.kernel)
    }
}

/// Builds `S⁻¹R` as classes of `R × S` under `(r,s) ~ (r',s')` iff
/// `u(rs' − r's) = 0` for some `u ∈ S`, each class named by its least pair.
pub fn localize_ring(s_set: &MultiplicativeSet) -> Result<LocalizedRing> {
    let base = s_set.ring.clone();
    require_commutative(&base)?;
    if s_set.contains(base.zero()) {
        return Err(Error::ZeroInClosure {
            chain: vec![base.name(base.zero()).to_string()],
        });
    }
    let r = &*base;
    let kernel = s_set.annihilated();
    let svec: Vec<Elem> = s_set.members().collect();
    let mut s_index = vec![usize::MAX; r.order()];
    for (i, &s) in svec.iter().enumerate() {
        s_index[s] = i;
    }
    let equiv = |(a, s): (Elem, Elem), (b, t): (Elem, Elem)| {
        kernel.contains(r.sub(r.mul(a, t), r.mul(b, s)))
    };
    let mut reps: Vec<(Elem, Elem)> = Vec::new();
    let mut class_of = vec![usize::MAX; r.order() * svec.len()];
    let mut class_members: Vec<Vec<(Elem, Elem)>> = Vec::new();
    for a in r.elements() {
        for (si, &s) in svec.iter().enumerate() {
            let mut hits = reps.iter().enumerate().filter(|(_, &p)| equiv((a, s), p));
            let c = match (hits.next(), hits.next()) {
                (Some((c, _)), None) => c,
                (None, _) => {
                    reps.push((a, s));
                    class_members.push(Vec::new());
                    reps.len() - 1
                }
                (Some(_), Some(_)) => {
                    return Err(Error::InternalInconsistency(
                        "fraction pair equivalent to two classes".into(),
                    ))
                }
            };
            class_of[a * svec.len() + si] = c;
            class_members[c].push((a, s));
        }
    }
    for members in &class_members {
        for (i, &p) in members.iter().enumerate() {
            if members[i + 1..].iter().any(|&q| !equiv(p, q)) {
                return Err(Error::InternalInconsistency(
                    "fraction equivalence is not transitive".into(),
                ));
            }
        }
    }
    let class = |a: Elem, s: Elem| class_of[a * svec.len() + s_index[s]];
    let k = reps.len();
    let (add, mul) = tables(
        k,
        |x, y| {
            let ((a, s), (b, t)) = (reps[x], reps[y]);
            class(r.add(r.mul(a, t), r.mul(b, s)), r.mul(s, t))
        },
        |x, y| {
            let ((a, s), (b, t)) = (reps[x], reps[y]);
            class(r.mul(a, b), r.mul(s, t))
        },
    );
    let names = reps
        .iter()
        .map(|&(a, s)| format!("{}/{}", r.name(a), r.name(s)))
        .collect();
    let one = r.one();
    let result = Arc::new(FiniteRing::from_tables_with(
        k,
        &add,
        &mul,
        class(r.zero(), one),
        class(one, one),
        Some(names),
        Construction::Localization,
        &Limits::default().with_max_order(r.order()),
    )?);
    let map = r.elements().map(|a| class(a, one)).collect();
    let canonical = RingHom::new(base.clone(), result.clone(), map)?;
    if !canonical.is_unital() {
        return Err(Error::InternalInconsistency(
            "canonical map is not unital".into(),
        ));
    }
    if let Some(s) = svec
        .iter()
        .find(|&&s| result.inverse(canonical.apply(s)).is_none())
    {
        return Err(Error::InternalInconsistency(format!(
            "image of {} is not a unit",
            r.name(*s)
        )));
    }
    if canonical.kernel_set() != kernel {
        return Err(Error::InternalInconsistency(
            "kernel of the canonical map differs from the S-torsion".into(),
        ));
    }
    Ok(LocalizedRing {
        base: base.clone(),
        s_set: s_set.clone(),
        result,
        canonical,
        class_table: reps,
        kernel,
    })
}

/// `S⁻¹I`, the ideal of the localized ring generated by the image of `I`.
pub fn localize_ideal(l: &LocalizedRing, i: &Ideal) -> Result<Ideal> {
    if !Arc::ptr_eq(&l.base, &i.ring_arc()) {
        return Err(Error::MixedRing);
    }
    let gens: Vec<Elem> = i.members().map(|a| l.canonical.apply(a)).collect();
    Ok(Ideal::generate(&l.result, &gens, Sidedness::TwoSided))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::{ideal_sum, Sidedness};

    fn z(n: usize) -> Arc<FiniteRing> {
        Arc::new(FiniteRing::cyclic(n).unwrap())
    }

    fn members(s: &MultiplicativeSet) -> Vec<Elem> {
        s.members().collect()
    }

    #[test]
    fn closures() {
        assert_eq!(
            members(&multiplicative_closure(&z(12), &[5]).unwrap()),
            [1, 5]
        );
        assert_eq!(
            members(&multiplicative_closure(&z(6), &[3]).unwrap()),
            [1, 3]
        );
        assert_eq!(members(&multiplicative_closure(&z(6), &[]).unwrap()), [1]);
        match multiplicative_closure(&z(8), &[2]) {
            Err(Error::ZeroInClosure { chain }) => assert_eq!(chain, ["2", "4", "0"]),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            multiplicative_closure(&z(6), &[2, 3]),
            Err(Error::ZeroInClosure { .. })
        ));
        let ut3 = Arc::new(FiniteRing::ut3(2).unwrap());
        assert!(matches!(
            multiplicative_closure(&ut3, &[]),
            Err(Error::NotCommutative)
        ));
    }

    #[test]
    fn non_zero_divisor_sets() {
        assert_eq!(members(&non_zero_divisors(&z(12)).unwrap()), [1, 5, 7, 11]);
        assert_eq!(members(&non_zero_divisors(&z(6)).unwrap()), [1, 5]);
        assert_eq!(
            members(&non_zero_divisors(&z(7)).unwrap()),
            [1, 2, 3, 4, 5, 6]
        );
        assert_eq!(members(&non_zero_divisors(&z(1)).unwrap()), [0]);
    }

    #[test]
    fn localize_z6_at_three() {
        let r = z(6);
        let l = localize_ring(&multiplicative_closure(&r, &[3]).unwrap()).unwrap();
        assert_eq!(l.result().order(), 2);
        assert_eq!(l.kernel_set().ones().collect::<Vec<_>>(), [0, 2, 4]);
        assert_eq!(l.canonical().apply(3), l.result().one());
        let three = Ideal::generate(&r, &[3], Sidedness::TwoSided);
        assert!(localize_ideal(&l, &three).unwrap().is_whole());
        let two = Ideal::generate(&r, &[2], Sidedness::TwoSided);
        assert!(localize_ideal(&l, &two).unwrap().is_zero());
        let zero = Ideal::zero(&r, Sidedness::TwoSided);
        assert!(localize_ideal(&l, &zero).unwrap().is_zero());
    }

    #[test]
    fn isomorphic_localizations() {
        let r = z(12);
        for s in [
            multiplicative_closure(&r, &[]).unwrap(),
            multiplicative_closure(&r, &[5]).unwrap(),
            non_zero_divisors(&r).unwrap(),
        ] {
            let l = localize_ring(&s).unwrap();
            assert_eq!(l.result().order(), 12);
            assert!(l.canonical().is_injective() && l.canonical().is_surjective());
        }
    }

    #[test]
    fn enumerated_sets() {
        // in Z/8 the 0-free submonoids are exactly the subgroups of units
        let sets = all_multiplicative_sets(&z(8), &Limits::default()).unwrap();
        let got: Vec<Vec<Elem>> = sets.iter().map(members).collect();
        assert_eq!(
            got,
            vec![
                vec![1],
                vec![1, 3],
                vec![1, 5],
                vec![1, 7],
                vec![1, 3, 5, 7]
            ]
        );
        assert!(all_multiplicative_sets(&z(1), &Limits::default())
            .unwrap()
            .is_empty());
        let tight = Limits {
            max_multiplicative_sets: 3,
            ..Limits::default()
        };
        assert!(all_multiplicative_sets(&z(8), &tight).unwrap_err().is_cap());
    }

    #[test]
    fn sums_commute_with_localization() {
        let r = z(12);
        let l = localize_ring(&multiplicative_closure(&r, &[3]).unwrap()).unwrap();
        let i = Ideal::generate(&r, &[4], Sidedness::TwoSided);
        let j = Ideal::generate(&r, &[6], Sidedness::TwoSided);
        let lhs = localize_ideal(&l, &ideal_sum(&i, &j).unwrap()).unwrap();
        let rhs = ideal_sum(
            &localize_ideal(&l, &i).unwrap(),
            &localize_ideal(&l, &j).unwrap(),
        )
        .unwrap();
        assert_eq!(lhs, rhs);
    }
}
