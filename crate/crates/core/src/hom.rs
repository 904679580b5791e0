//! Ring homomorphisms, module homomorphisms between ideals, and nil-essential
//! monomorphisms.

use std::fmt;
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::ideal::{Ideal, IdealLattice, Sidedness};
use crate::limits::{self, Limits};
use crate::predicates::first_escape;
use crate::ring::{Elem, FiniteRing};
use crate::span::AdditiveSpan;

#[derive(Clone)]
pub struct RingHom {
    source: Arc<FiniteRing>,
    target: Arc<FiniteRing>,
    map: Vec<Elem>,
    unital: bool,
}

impl fmt::Debug for RingHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RingHom")
            .field("map", &self.map)
            .field("unital", &self.unital)
            .finish()
    }
}

impl PartialEq for RingHom {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.source, &other.source)
            && Arc::ptr_eq(&self.target, &other.target)
            && self.map == other.map
    }
}

impl RingHom {
    /// Wraps an image table after an exhaustive additivity and
    /// multiplicativity check.
    pub fn new(source: Arc<FiniteRing>, target: Arc<FiniteRing>, map: Vec<Elem>) -> Result<Self> {
        if map.len() != source.order() || map.iter().any(|&y| y >= target.order()) {
            return Err(Error::InvalidParameter(
                "map table does not fit the rings".into(),
            ));
        }
        let unital = map[source.one()] == target.one();
        let f = RingHom {
            source,
            target,
            map,
            unital,
        };
        f.verify()?;
        Ok(f)
    }

    pub fn identity(ring: &Arc<FiniteRing>) -> Self {
        RingHom {
            source: ring.clone(),
            target: ring.clone(),
            map: ring.elements().collect(),
            unital: true,
        }
    }

    pub fn verify(&self) -> Result<()> {
        let (s, t) = (&self.source, &self.target);
        for x in s.elements() {
            for y in s.elements() {
                if self.apply(s.add(x, y)) != t.add(self.apply(x), self.apply(y)) {
                    return Err(Error::AxiomViolation {
                        axiom: "hom additivity",
                        witness: vec![x, y],
                    });
                }
                if self.apply(s.mul(x, y)) != t.mul(self.apply(x), self.apply(y)) {
                    return Err(Error::AxiomViolation {
                        axiom: "hom multiplicativity",
                        witness: vec![x, y],
                    });
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.map[x]
    }

    pub fn map(&self) -> &[Elem] {
        &self.map
    }

    pub fn source(&self) -> &Arc<FiniteRing> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteRing> {
        &self.target
    }

    pub fn is_unital(&self) -> bool {
        self.unital
    }

    pub fn kernel_set(&self) -> FixedBitSet {
        let mut set = FixedBitSet::with_capacity(self.source.order());
        for x in self.source.elements() {
            if self.apply(x) == self.target.zero() {
                set.insert(x);
            }
        }
        set
    }

    pub fn is_injective(&self) -> bool {
        self.kernel_set().count_ones(..) == 1
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target.order()];
        for &y in &self.map {
            hit[y] = true;
        }
        hit.into_iter().all(|h| h)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &RingHom) -> Result<RingHom> {
        if !Arc::ptr_eq(&inner.target, &self.source) {
            return Err(Error::MixedRing);
        }
        let map = inner.map.iter().map(|&x| self.apply(x)).collect();
        RingHom::new(inner.source.clone(), self.target.clone(), map)
    }
}

/// All (optionally unital) ring endomorphisms of `ring`.
///
/// Images are assigned to an additive generating set that starts with `1`;
/// each assignment extends the map coset by coset, so additivity holds by
/// construction and multiplicativity is checked on generator pairs as soon as
/// both factors and their product are mapped. Survivors are re-verified on all pairs.
pub fn enumerate_ring_endomorphisms(
    ring: &Arc<FiniteRing>,
    unital: bool,
    limits: &Limits,
) -> Result<Vec<RingHom>> {
    limits::check(
        "ring order for endomorphisms",
        ring.order(),
        limits.endo_max_order,
    )?;
    let r: &FiniteRing = ring;
    let mut span = AdditiveSpan::new(r);
    span.extend(r.one());
    for x in r.elements() {
        span.extend(x);
    }
    let gens = span.basis;
    let mut out = Vec::new();
    let mut table = vec![None; r.order()];
    table[r.zero()] = Some(r.zero());
    let mut domain = vec![r.zero()];
    extend_endo(
        r,
        unital,
        &gens,
        0,
        &mut table,
        &mut domain,
        &mut Vec::new(),
        &mut out,
    );
    out.into_iter()
        .map(|map| RingHom::new(ring.clone(), ring.clone(), map))
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn extend_endo(
    r: &FiniteRing,
    unital: bool,
    gens: &[Elem],
    depth: usize,
    table: &mut Vec<Option<Elem>>,
    domain: &mut Vec<Elem>,
    images: &mut Vec<Elem>,
    out: &mut Vec<Vec<Elem>>,
) {
    if depth == gens.len() {
        out.push(table.iter().map(|y| y.expect("total map")).collect());
        return;
    }
    let g = gens[depth];
    // k = least positive multiple of g already in the domain
    let mut k = 1;
    let mut kg = g;
    while table[kg].is_none() {
        kg = r.add(kg, g);
        k += 1;
    }
    let required = table[kg].expect("mapped");
    let candidates: Vec<Elem> = if depth == 0 {
        if unital {
            vec![r.one()]
        } else {
            r.idempotents()
        }
    } else {
        r.elements().collect()
    };
    for y in candidates {
        if r.times(k, y) != required {
            continue;
        }
        let old = domain.len();
        let mut step = g;
        let mut step_img = y;
        for _ in 1..k {
            for i in 0..old {
                let h = domain[i];
                let e = r.add(h, step);
                table[e] = Some(r.add(table[h].expect("mapped"), step_img));
                domain.push(e);
            }
            step = r.add(step, g);
            step_img = r.add(step_img, y);
        }
        images.push(y);
        let consistent = (0..=depth).all(|a| {
            [(a, depth), (depth, a)]
                .iter()
                .all(|&(p, q)| match table[r.mul(gens[p], gens[q])] {
                    Some(v) => v == r.mul(images[p], images[q]),
                    None => true,
                })
        });
        if consistent {
            extend_endo(r, unital, gens, depth + 1, table, domain, images, out);
        }
        images.pop();
        for &e in &domain[old..] {
            table[e] = None;
        }
        domain.truncate(old);
    }
}

/// `f⁻¹(J)`, an ideal of the source with the sidedness of `J`.
pub fn preimage_ideal(f: &RingHom, j: &Ideal) -> Result<Ideal> {
    if !Arc::ptr_eq(f.target(), &j.ring_arc()) {
        return Err(Error::MixedRing);
    }
    let mut set = FixedBitSet::with_capacity(f.source().order());
    for x in f.source().elements() {
        if j.contains(f.apply(x)) {
            set.insert(x);
        }
    }
    Ideal::from_set_checked(f.source(), set, j.sidedness())
}

/// Module action used for homs between ideals of this sidedness. Two-sided
/// ideals are treated as left modules.
#[inline]
fn act(r: &FiniteRing, side: Sidedness, s: Elem, x: Elem) -> Elem {
    match side {
        Sidedness::Right => r.mul(x, s),
        _ => r.mul(s, x),
    }
}

/// An additive map between ideals of one ring that commutes with the ring action.
#[derive(Clone)]
pub struct ModuleHom {
    source: Ideal,
    target: Ideal,
    table: Vec<Option<Elem>>,
}

impl fmt::Debug for ModuleHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.pairs()).finish()
    }
}

impl ModuleHom {
    /// Builds a map from `(x, f(x))` pairs covering the source, checking every
    /// module-hom condition exhaustively.
    pub fn new(source: Ideal, target: Ideal, pairs: &[(Elem, Elem)]) -> Result<Self> {
        if !source.same_ring(&target) {
            return Err(Error::MixedRing);
        }
        let mut table = vec![None; source.ring().order()];
        for &(x, y) in pairs {
            if !source.contains(x) || !target.contains(y) {
                return Err(Error::InvalidParameter(
                    "module map pair outside source or target".into(),
                ));
            }
            table[x] = Some(y);
        }
        if source.members().any(|x| table[x].is_none()) {
            return Err(Error::InvalidParameter("module map is not total".into()));
        }
        let f = ModuleHom {
            source,
            target,
            table,
        };
        f.verify_exhaustive()?;
        Ok(f)
    }

    pub fn inclusion(source: &Ideal, target: &Ideal) -> Result<Self> {
        if !source.is_subset(target) {
            return Err(Error::NotContained);
        }
        let pairs: Vec<_> = source.members().map(|x| (x, x)).collect();
        Self::new(source.clone(), target.clone(), &pairs)
    }

    pub fn verify_exhaustive(&self) -> Result<()> {
        let r = self.source.ring();
        let side = self.source.sidedness();
        for x in self.source.members() {
            for y in self.source.members() {
                if self.apply(r.add(x, y)) != r.add(self.apply(x), self.apply(y)) {
                    return Err(Error::AxiomViolation {
                        axiom: "module hom additivity",
                        witness: vec![x, y],
                    });
                }
            }
            for s in r.elements() {
                if self.apply(act(r, side, s, x)) != act(r, side, s, self.apply(x)) {
                    return Err(Error::AxiomViolation {
                        axiom: "module hom linearity",
                        witness: vec![s, x],
                    });
                }
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &Ideal {
        &self.source
    }

    pub fn target(&self) -> &Ideal {
        &self.target
    }

    pub fn apply(&self, x: Elem) -> Elem {
        self.table[x].expect("element of the source ideal")
    }

    pub fn pairs(&self) -> impl Iterator<Item = (Elem, Elem)> + '_ {
        self.source.members().map(|x| (x, self.apply(x)))
    }

    pub fn kernel_set(&self) -> FixedBitSet {
        let r = self.source.ring();
        let mut set = FixedBitSet::with_capacity(r.order());
        for x in self.source.members() {
            if self.apply(x) == r.zero() {
                set.insert(x);
            }
        }
        set
    }

    pub fn image_set(&self) -> FixedBitSet {
        let mut set = FixedBitSet::with_capacity(self.source.ring().order());
        for x in self.source.members() {
            set.insert(self.apply(x));
        }
        set
    }

    pub fn is_injective(&self) -> bool {
        self.kernel_set().count_ones(..) == 1
    }
}

pub fn kernel(f: &ModuleHom) -> Result<Ideal> {
    Ideal::from_set_checked(&f.source.ring_arc(), f.kernel_set(), f.source.sidedness())
}

pub fn image(f: &ModuleHom) -> Result<Ideal> {
    Ideal::from_set_checked(&f.source.ring_arc(), f.image_set(), f.source.sidedness())
}

/// Greedy module generating set: each step adds the element whose cyclic
/// submodule enlarges the current span the most.
fn module_generators(j: &Ideal) -> Vec<Elem> {
    let r = j.ring();
    let side = j.sidedness();
    let mut span = AdditiveSpan::new(r);
    let mut gens = Vec::new();
    while span.len() < j.len() {
        let mut best: Option<(usize, Elem, AdditiveSpan)> = None;
        for x in j.members().filter(|&x| !span.contains(x)) {
            let mut trial = span.clone();
            for s in r.elements() {
                trial.extend(act(r, side, s, x));
            }
            if best.as_ref().is_none_or(|(n, _, _)| trial.len() > *n) {
                best = Some((trial.len(), x, trial));
            }
        }
        let (_, x, trial) = best.expect("span is a proper subset of the ideal");
        gens.push(x);
        span = trial;
    }
    gens
}

/// All module homs `J → K`, built by assigning images to a module generating
/// set of `J` and extending through the action, rejecting assignments the
/// moment two expressions for one element disagree.
pub fn enumerate_module_homs(j: &Ideal, k: &Ideal, limits: &Limits) -> Result<Vec<ModuleHom>> {
    if !j.same_ring(k) {
        return Err(Error::MixedRing);
    }
    if j.sidedness() != k.sidedness() {
        return Err(Error::MixedSidedness(j.sidedness(), k.sidedness()));
    }
    limits::check("hom target size", k.len(), limits.hom_max_target)?;
    let gens = module_generators(j);
    limits::check("hom source rank", gens.len(), limits.hom_max_rank)?;
    let r = j.ring();
    let targets: Vec<Elem> = k.members().collect();
    let mut table = vec![None; r.order()];
    table[r.zero()] = Some(r.zero());
    let mut domain = vec![r.zero()];
    let mut out = Vec::new();
    extend_module(
        r,
        j.sidedness(),
        &gens,
        &targets,
        &mut table,
        &mut domain,
        &mut |t| {
            out.push(ModuleHom {
                source: j.clone(),
                target: k.clone(),
                table: t.to_vec(),
            })
        },
    );
    Ok(out)
}

fn extend_module(
    r: &FiniteRing,
    side: Sidedness,
    gens: &[Elem],
    targets: &[Elem],
    table: &mut Vec<Option<Elem>>,
    domain: &mut Vec<Elem>,
    emit: &mut dyn FnMut(&[Option<Elem>]),
) {
    let Some((&g, rest)) = gens.split_first() else {
        emit(table);
        return;
    };
    let old = domain.len();
    for &y in targets {
        let mut ok = true;
        'fill: for s in r.elements() {
            let sg = act(r, side, s, g);
            let sy = act(r, side, s, y);
            for i in 0..old {
                let h = domain[i];
                let e = r.add(h, sg);
                let v = r.add(table[h].expect("mapped"), sy);
                match table[e] {
                    Some(w) if w != v => {
                        ok = false;
                        break 'fill;
                    }
                    Some(_) => {}
                    None => {
                        table[e] = Some(v);
                        domain.push(e);
                    }
                }
            }
        }
        if ok {
            extend_module(r, side, rest, targets, table, domain, emit);
        }
        for &e in &domain[old..] {
            table[e] = None;
        }
        domain.truncate(old);
    }
}

/// `f` is a nil-essential monomorphism when its image is nil-essential in its
/// target; `lattice` supplies the ideals `μ` quantified over.
pub fn is_nil_essential_mono(f: &ModuleHom, lattice: &IdealLattice) -> Result<bool> {
    if !f.is_injective() {
        return Err(Error::NotMono);
    }
    if !Arc::ptr_eq(lattice.ring(), &f.source.ring_arc()) {
        return Err(Error::MixedRing);
    }
    Ok(first_escape(lattice, &f.image_set(), f.target.member_set(), true).is_none())
}

/// The three clauses characterizing `I ⊴_nil J` for `I ⊆ J`.
#[derive(Debug, Clone)]
pub struct MonoCharacterization {
    /// `I` nil-essential in `J`.
    pub nil_essential: bool,
    /// The inclusion `I → J` is a nil-essential monomorphism.
    pub inclusion_mono: bool,
    /// For every lattice ideal `K` and `f: J → K`, `ker f ∩ I = 0` forces `ker f` nilpotent.
    pub kernel_clause: bool,
    /// First `μ ⊆ J` with `I ∩ μ = 0` and `μ` not nilpotent.
    pub mu_witness: Option<Ideal>,
    /// First `(K, f)` breaking the kernel clause.
    pub hom_witness: Option<(Ideal, ModuleHom)>,
    pub homs_checked: u64,
}

impl MonoCharacterization {
    pub fn agree(&self) -> bool {
        self.nil_essential == self.inclusion_mono && self.inclusion_mono == self.kernel_clause
    }
}

pub fn check_mono_characterization(
    i: &Ideal,
    j: &Ideal,
    lattice: &IdealLattice,
    limits: &Limits,
) -> Result<MonoCharacterization> {
    check_mono_with(i, j, lattice, &mut |k| {
        enumerate_module_homs(j, lattice.get(k), limits).map(Arc::new)
    })
}

pub(crate) fn check_mono_with(
    i: &Ideal,
    j: &Ideal,
    lattice: &IdealLattice,
    homs_to: &mut dyn FnMut(usize) -> Result<Arc<Vec<ModuleHom>>>,
) -> Result<MonoCharacterization> {
    if !i.is_subset(j) {
        return Err(Error::NotContained);
    }
    let mu = first_escape(lattice, i.member_set(), j.member_set(), true);
    let inclusion = ModuleHom::inclusion(i, j)?;
    let inclusion_mono = is_nil_essential_mono(&inclusion, lattice)?;
    let mut hom_witness = None;
    let mut homs_checked = 0;
    'outer: for k in 0..lattice.len() {
        for f in homs_to(k)?.iter() {
            homs_checked += 1;
            let ker = f.kernel_set();
            if ker.intersection_count(i.member_set()) != 1 {
                continue;
            }
            let pos = lattice.position_of_set(&ker).ok_or_else(|| {
                Error::InternalInconsistency("kernel is not an ideal of the lattice".into())
            })?;
            if !lattice.is_nilpotent_at(pos) {
                hom_witness = Some((lattice.get(k).clone(), f.clone()));
                break 'outer;
            }
        }
    }
    Ok(MonoCharacterization {
        nil_essential: mu.is_none(),
        inclusion_mono,
        kernel_clause: hom_witness.is_none(),
        mu_witness: mu.map(|m| lattice.get(m).clone()),
        hom_witness,
        homs_checked,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::enumerate_ideals;
    use crate::ring::ut3_element;

    fn ut3() -> Arc<FiniteRing> {
        Arc::new(FiniteRing::ut3(2).unwrap())
    }

    fn left(r: &Arc<FiniteRing>, g: &[Elem]) -> Ideal {
        Ideal::generate(r, g, Sidedness::Left)
    }

    #[test]
    fn cyclic_unital_endomorphisms_are_identity() {
        for n in [2, 6, 12, 16] {
            let r = Arc::new(FiniteRing::cyclic(n).unwrap());
            let endos = enumerate_ring_endomorphisms(&r, true, &Limits::default()).unwrap();
            assert_eq!(endos, vec![RingHom::identity(&r)]);
        }
    }

    #[test]
    fn nonunital_endomorphisms_include_zero_map() {
        let r = Arc::new(FiniteRing::cyclic(6).unwrap());
        let endos = enumerate_ring_endomorphisms(&r, false, &Limits::default()).unwrap();
        // x -> e·x for each idempotent e of Z/6
        assert_eq!(endos.len(), 4);
        assert!(endos.iter().any(|f| f.map().iter().all(|&y| y == 0)));
    }

    #[test]
    fn ut3_shear_endomorphism() {
        let r = ut3();
        let endos = enumerate_ring_endomorphisms(&r, true, &Limits::default()).unwrap();
        let (e12, e13, e23) = (
            ut3_element(2, 0, 1, 0, 0),
            ut3_element(2, 0, 0, 1, 0),
            ut3_element(2, 0, 0, 0, 1),
        );
        let shear = endos
            .iter()
            .find(|f| f.apply(e12) == r.add(e12, e13) && f.apply(e13) == e13 && f.apply(e23) == e23)
            .expect("shear endomorphism");
        let i7 = left(&r, &[r.add(e12, e13)]);
        let pre = preimage_ideal(shear, &i7).unwrap();
        assert_eq!(pre, left(&r, &[e12]));
        let id = RingHom::identity(&r);
        assert_eq!(preimage_ideal(&id, &i7).unwrap(), i7);
        let whole = Ideal::whole(&r, Sidedness::Left);
        assert!(preimage_ideal(shear, &whole).unwrap().is_whole());
    }

    #[test]
    fn swap_in_boolean_square() {
        let z2 = FiniteRing::cyclic(2).unwrap();
        let r = Arc::new(FiniteRing::product(&[&z2, &z2]).unwrap());
        let endos = enumerate_ring_endomorphisms(&r, true, &Limits::default()).unwrap();
        // (a,b) -> (b,a): index 2a+b -> 2b+a
        let swap: Vec<Elem> = (0..4).map(|x| (x % 2) * 2 + x / 2).collect();
        assert!(endos.iter().any(|f| f.map() == swap.as_slice()));
    }

    #[test]
    fn endomorphisms_close_under_composition() {
        for r in [ut3(), Arc::new(FiniteRing::cyclic(12).unwrap())] {
            for unital in [true, false] {
                let endos = enumerate_ring_endomorphisms(&r, unital, &Limits::default()).unwrap();
                for f in &endos {
                    for g in &endos {
                        let h = f.compose(g).unwrap();
                        assert!(endos.contains(&h));
                    }
                }
            }
        }
    }

    #[test]
    fn endomorphism_cap() {
        let r = Arc::new(FiniteRing::cyclic(300).unwrap());
        assert!(enumerate_ring_endomorphisms(&r, true, &Limits::default())
            .unwrap_err()
            .is_cap());
    }

    #[test]
    fn module_homs_small_cases() {
        let lim = Limits::default();
        let z = Arc::new(FiniteRing::cyclic(12).unwrap());
        let zero = Ideal::zero(&z, Sidedness::TwoSided);
        assert_eq!(enumerate_module_homs(&zero, &zero, &lim).unwrap().len(), 1);
        let six = Ideal::generate(&z, &[6], Sidedness::TwoSided);
        let four = Ideal::generate(&z, &[4], Sidedness::TwoSided);
        assert_eq!(enumerate_module_homs(&six, &four, &lim).unwrap().len(), 1);

        let r = ut3();
        let i3 = left(&r, &[ut3_element(2, 0, 0, 1, 0)]);
        let i5 = left(
            &r,
            &[ut3_element(2, 0, 1, 0, 0), ut3_element(2, 0, 0, 1, 0)],
        );
        let homs = enumerate_module_homs(&i3, &i5, &lim).unwrap();
        assert_eq!(homs.len(), 4);
        for f in &homs {
            f.verify_exhaustive().unwrap();
        }
    }

    #[test]
    fn kernels_and_images() {
        let r = ut3();
        let (e12, e13) = (ut3_element(2, 0, 1, 0, 0), ut3_element(2, 0, 0, 1, 0));
        let i3 = left(&r, &[e13]);
        let i5 = left(&r, &[e12, e13]);
        let inc = ModuleHom::inclusion(&i3, &i5).unwrap();
        assert!(kernel(&inc).unwrap().is_zero());
        assert_eq!(image(&inc).unwrap(), i3);
        let zero_map = ModuleHom::new(
            i5.clone(),
            i3.clone(),
            &i5.members().map(|x| (x, 0)).collect::<Vec<_>>(),
        )
        .unwrap();
        assert_eq!(kernel(&zero_map).unwrap(), i5);
        assert!(image(&zero_map).unwrap().is_zero());
        let shift = ModuleHom::new(
            i5.clone(),
            i3.clone(),
            &[(0, 0), (e12, e13), (e13, 0), (r.add(e12, e13), e13)],
        )
        .unwrap();
        assert_eq!(kernel(&shift).unwrap(), i3);
        assert_eq!(image(&shift).unwrap(), i3);
    }

    #[test]
    fn nil_essential_monos() {
        let lim = Limits::default();
        let r = ut3();
        let l = enumerate_ideals(&r, Sidedness::Left, &lim).unwrap();
        let (e12, e13) = (ut3_element(2, 0, 1, 0, 0), ut3_element(2, 0, 0, 1, 0));
        let i3 = left(&r, &[e13]);
        let i5 = left(&r, &[e12, e13]);
        assert!(is_nil_essential_mono(&ModuleHom::inclusion(&i3, &i5).unwrap(), &l).unwrap());
        let whole = Ideal::whole(&r, Sidedness::Left);
        assert!(is_nil_essential_mono(&ModuleHom::inclusion(&whole, &whole).unwrap(), &l).unwrap());
        let shift = ModuleHom::new(
            i5.clone(),
            i3.clone(),
            &[(0, 0), (e12, e13), (e13, 0), (r.add(e12, e13), e13)],
        )
        .unwrap();
        assert!(matches!(
            is_nil_essential_mono(&shift, &l),
            Err(Error::NotMono)
        ));

        let z6 = Arc::new(FiniteRing::cyclic(6).unwrap());
        let l6 = enumerate_ideals(&z6, Sidedness::TwoSided, &lim).unwrap();
        let zero = Ideal::zero(&z6, Sidedness::TwoSided);
        let all = Ideal::whole(&z6, Sidedness::TwoSided);
        assert!(!is_nil_essential_mono(&ModuleHom::inclusion(&zero, &all).unwrap(), &l6).unwrap());
    }

    #[test]
    fn mono_characterization_examples() {
        let lim = Limits::default();
        let r = ut3();
        let l = enumerate_ideals(&r, Sidedness::Left, &lim).unwrap();
        let (e12, e13) = (ut3_element(2, 0, 1, 0, 0), ut3_element(2, 0, 0, 1, 0));
        let i3 = left(&r, &[e13]);
        let i5 = left(&r, &[e12, e13]);
        let c = check_mono_characterization(&i3, &i5, &l, &lim).unwrap();
        assert!(c.nil_essential && c.inclusion_mono && c.kernel_clause);

        let z6 = Arc::new(FiniteRing::cyclic(6).unwrap());
        let l6 = enumerate_ideals(&z6, Sidedness::TwoSided, &lim).unwrap();
        let c = check_mono_characterization(l6.zero(), l6.whole(), &l6, &lim).unwrap();
        assert!(!c.nil_essential && !c.inclusion_mono && !c.kernel_clause);
        assert!(c.agree());
        for i in l6.iter() {
            assert!(check_mono_characterization(i, i, &l6, &lim)
                .unwrap()
                .agree());
        }
    }
}
