use fixedbitset::FixedBitSet;

use crate::ring::{Elem, FiniteRing};

/// Incrementally grown additive subgroup of a ring.
///
/// Adding an element `x` outside the current subgroup `H` appends the cosets
/// `H + x, H + 2x, ...` until a multiple of `x` falls back into `H`, so every
/// element is touched once.
#[derive(Debug, Clone)]
pub(crate) struct AdditiveSpan<'r> {
    ring: &'r FiniteRing,
    pub(crate) set: FixedBitSet,
    pub(crate) elems: Vec<Elem>,
    /// Elements that enlarged the span, in insertion order.
    pub(crate) basis: Vec<Elem>,
}

impl<'r> AdditiveSpan<'r> {
    pub(crate) fn new(ring: &'r FiniteRing) -> Self {
        let mut set = FixedBitSet::with_capacity(ring.order());
        set.insert(ring.zero());
        Self {
            ring,
            set,
            elems: vec![ring.zero()],
            basis: Vec::new(),
        }
    }

    /// Starts from an existing additive subgroup given as a member set.
    pub(crate) fn from_subgroup(ring: &'r FiniteRing, set: &FixedBitSet) -> Self {
        Self {
            ring,
            set: set.clone(),
            elems: set.ones().collect(),
            basis: Vec::new(),
        }
    }

    pub(crate) fn contains(&self, x: Elem) -> bool {
        self.set.contains(x)
    }

    pub(crate) fn len(&self) -> usize {
        self.elems.len()
    }

    /// Returns true when `x` enlarged the span.
    pub(crate) fn extend(&mut self, x: Elem) -> bool {
        if self.set.contains(x) {
            return false;
        }
        let old = self.elems.len();
        let mut step = x;
        while !self.set.contains(step) {
            for i in 0..old {
                let y = self.ring.add(self.elems[i], step);
                self.set.insert(y);
                self.elems.push(y);
            }
            step = self.ring.add(step, x);
        }
        self.basis.push(x);
        true
    }

    pub(crate) fn into_set(self) -> FixedBitSet {
        self.set
    }
}

/// Additive generators of the subgroup `set`, chosen greedily by index.
pub(crate) fn additive_basis(ring: &FiniteRing, set: &FixedBitSet) -> Vec<Elem> {
    let mut span = AdditiveSpan::new(ring);
    for x in set.ones() {
        span.extend(x);
    }
    span.basis
}
