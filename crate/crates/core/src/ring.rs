//! Finite unital rings stored as Cayley tables.
//!
//! Elements are dense indices `0..order`. Every constructor runs the full axiom
//! validation before handing out a [`FiniteRing`], including the families that
//! are correct by construction.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hom::RingHom;
use crate::ideal::{Ideal, Sidedness};
use crate::limits::Limits;

pub type Elem = usize;

/// Orders up to this bound are validated by the plain triple loop; larger
/// rings use the generator-reduced scan, which is equivalent but quadratic.
pub const EXHAUSTIVE_SCAN_LIMIT: usize = 128;

/// How a ring was built. Used for display and by checks tied to one family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Construction {
    Cyclic { n: usize },
    Ut3 { m: usize },
    Product { factors: Vec<Construction> },
    Quotient,
    Localization,
    Tables,
}

#[derive(Clone)]
pub struct FiniteRing {
    order: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    zero: Elem,
    one: Elem,
    names: Vec<String>,
    commutative: bool,
    construction: Construction,
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("order", &self.order)
            .field("commutative", &self.commutative)
            .field("construction", &self.construction)
            .finish()
    }
}

impl FiniteRing {
    /// Builds a ring from row-major `order × order` tables.
    pub fn from_tables(
        order: usize,
        add: &[Elem],
        mul: &[Elem],
        zero: Elem,
        one: Elem,
        names: Option<Vec<String>>,
    ) -> Result<Self> {
        Self::from_tables_with(
            order,
            add,
            mul,
            zero,
            one,
            names,
            Construction::Tables,
            &Limits::from_env(),
        )
    }

    #[allow(clippy::too_many_arguments)]
    pub(crate) fn from_tables_with(
        order: usize,
        add: &[Elem],
        mul: &[Elem],
        zero: Elem,
        one: Elem,
        names: Option<Vec<String>>,
        construction: Construction,
        limits: &Limits,
    ) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidParameter(
                "ring order must be at least 1".into(),
            ));
        }
        limits.check_order(order)?;
        let cells = order * order;
        if add.len() != cells || mul.len() != cells {
            return Err(Error::InvalidParameter(format!(
                "tables must have {cells} entries, got {} and {}",
                add.len(),
                mul.len()
            )));
        }
        if let Some(bad) = add
            .iter()
            .chain(mul)
            .chain([&zero, &one])
            .find(|&&e| e >= order)
        {
            return Err(Error::InvalidParameter(format!(
                "table entry {bad} out of range for order {order}"
            )));
        }
        let names = match names {
            Some(n) if n.len() == order => n,
            Some(n) => {
                return Err(Error::InvalidParameter(format!(
                    "{} element names for order {order}",
                    n.len()
                )))
            }
            None => (0..order).map(|i| i.to_string()).collect(),
        };
        let mut ring = FiniteRing {
            order,
            add: add.iter().map(|&e| e as u32).collect(),
            mul: mul.iter().map(|&e| e as u32).collect(),
            neg: vec![0; order],
            zero,
            one,
            names,
            commutative: false,
            construction,
        };
        ring.validate()?;
        ring.commutative = (0..order).all(|a| (a..order).all(|b| ring.mul(a, b) == ring.mul(b, a)));
        Ok(ring)
    }

    /// Integers modulo `n`.
    pub fn cyclic(n: usize) -> Result<Self> {
        Self::cyclic_with(n, &Limits::from_env())
    }

    pub(crate) fn cyclic_with(n: usize, limits: &Limits) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("cyclic ring needs n >= 1".into()));
        }
        limits.check_order(n)?;
        let (add, mul) = tables(n, |a, b| (a + b) % n, |a, b| (a * b) % n);
        Self::from_tables_with(
            n,
            &add,
            &mul,
            0,
            1 % n,
            None,
            Construction::Cyclic { n },
            limits,
        )
    }

    /// Upper-triangular 3×3 matrices over ℤ/m with constant diagonal:
    ///
    /// ```text
    /// [ a b c ]
    /// [ 0 a d ]
    /// [ 0 0 a ]
    /// ```
    ///
    /// Element index is `((a·m + b)·m + c)·m + d`; see [`ut3_element`].
    pub fn ut3(m: usize) -> Result<Self> {
        Self::ut3_with(m, &Limits::from_env())
    }

    pub(crate) fn ut3_with(m: usize, limits: &Limits) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidParameter(
                "ut3 needs coefficient modulus m >= 2".into(),
            ));
        }
        let order = m
            .checked_pow(4)
            .ok_or_else(|| Error::InvalidParameter("ut3 modulus too large".into()))?;
        limits.check_order(order)?;
        let (add, mul) = tables(
            order,
            |x, y| {
                let (a, b, c, d) = ut3_coords(m, x);
                let (e, f, g, h) = ut3_coords(m, y);
                ut3_element(m, a + e, b + f, c + g, d + h)
            },
            |x, y| {
                let (a, b, c, d) = ut3_coords(m, x);
                let (e, f, g, h) = ut3_coords(m, y);
                ut3_element(
                    m,
                    a * e,
                    a * f + b * e,
                    a * g + b * h + c * e,
                    a * h + d * e,
                )
            },
        );
        let names = (0..order).map(|x| ut3_name(m, x)).collect();
        Self::from_tables_with(
            order,
            &add,
            &mul,
            0,
            ut3_element(m, 1, 0, 0, 0),
            Some(names),
            Construction::Ut3 { m },
            limits,
        )
    }

    /// Direct product with componentwise operations. The first factor is the
    /// most significant digit of the element index.
    pub fn product(factors: &[&FiniteRing]) -> Result<Self> {
        Self::product_with(factors, &Limits::from_env())
    }

    pub(crate) fn product_with(factors: &[&FiniteRing], limits: &Limits) -> Result<Self> {
        if factors.len() < 2 {
            return Err(Error::InvalidParameter(
                "product needs at least two factors".into(),
            ));
        }
        let order = factors
            .iter()
            .try_fold(1usize, |acc, r| acc.checked_mul(r.order()))
            .ok_or_else(|| Error::InvalidParameter("product order overflows".into()))?;
        limits.check_order(order)?;
        let split = |mut x: Elem| {
            let mut digits = vec![0; factors.len()];
            for (i, r) in factors.iter().enumerate().rev() {
                digits[i] = x % r.order();
                x /= r.order();
            }
            digits
        };
        let join = |digits: &[Elem]| {
            digits
                .iter()
                .zip(factors)
                .fold(0, |acc, (&d, r)| acc * r.order() + d)
        };
        let coords: Vec<Vec<Elem>> = (0..order).map(split).collect();
        let combine = |op: &dyn Fn(&FiniteRing, Elem, Elem) -> Elem, x: Elem, y: Elem| {
            let d: Vec<Elem> = factors
                .iter()
                .enumerate()
                .map(|(i, r)| op(r, coords[x][i], coords[y][i]))
                .collect();
            join(&d)
        };
        let (add, mul) = tables(
            order,
            |x, y| combine(&|r, a, b| r.add(a, b), x, y),
            |x, y| combine(&|r, a, b| r.mul(a, b), x, y),
        );
        let names = coords
            .iter()
            .map(|d| {
                let parts: Vec<&str> = d.iter().zip(factors).map(|(&e, r)| r.name(e)).collect();
                format!("({})", parts.join(","))
            })
            .collect();
        let zero = join(&factors.iter().map(|r| r.zero()).collect::<Vec<_>>());
        let one = join(&factors.iter().map(|r| r.one()).collect::<Vec<_>>());
        Self::from_tables_with(
            order,
            &add,
            &mul,
            zero,
            one,
            Some(names),
            Construction::Product {
                factors: factors.iter().map(|r| r.construction.clone()).collect(),
            },
            limits,
        )
    }

    /// The coset ring `R/I` and its canonical surjection. Cosets are ordered by
    /// their least representative and named `[rep]`.
    pub fn quotient(ideal: &Ideal) -> Result<(Arc<FiniteRing>, RingHom)> {
        if ideal.sidedness() != Sidedness::TwoSided && !ideal.is_closed_under(Sidedness::TwoSided) {
            return Err(Error::Sidedness {
                expected: Sidedness::TwoSided,
            });
        }
        let base = ideal.ring_arc();
        let n = base.order();
        let mut coset_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for x in 0..n {
            if coset_of[x] != usize::MAX {
                continue;
            }
            let c = reps.len();
            reps.push(x);
            for i in ideal.members() {
                coset_of[base.add(x, i)] = c;
            }
        }
        let k = reps.len();
        let (add, mul) = tables(
            k,
            |a, b| coset_of[base.add(reps[a], reps[b])],
            |a, b| coset_of[base.mul(reps[a], reps[b])],
        );
        let names = reps
            .iter()
            .map(|&r| format!("[{}]", base.name(r)))
            .collect();
        let quotient = Arc::new(Self::from_tables_with(
            k,
            &add,
            &mul,
            coset_of[base.zero()],
            coset_of[base.one()],
            Some(names),
            Construction::Quotient,
            &Limits::default().with_max_order(n),
        )?);
        let map = RingHom::new(base, quotient.clone(), coset_of)?;
        Ok((quotient, map))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> Elem {
        self.zero
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    pub fn is_zero_ring(&self) -> bool {
        self.order == 1
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    pub fn construction(&self) -> &Construction {
        &self.construction
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a * self.order + b] as Elem
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a * self.order + b] as Elem
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a] as Elem
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    /// `k`-fold sum `x + ... + x`.
    pub fn times(&self, k: usize, x: Elem) -> Elem {
        (0..k).fold(self.zero, |acc, _| self.add(acc, x))
    }

    pub fn pow(&self, x: Elem, k: usize) -> Elem {
        (0..k).fold(self.one, |acc, _| self.mul(acc, x))
    }

    /// Least `k ≥ 1` with `xᵏ = 0`, if any. Power sequences of a finite ring
    /// enter a cycle within `order` steps, so the scan stops there.
    pub fn nilpotency_index(&self, x: Elem) -> Option<usize> {
        let mut p = x;
        for k in 1..=self.order.max(1) {
            if p == self.zero {
                return Some(k);
            }
            p = self.mul(p, x);
        }
        None
    }

    pub fn is_nilpotent(&self, x: Elem) -> bool {
        self.nilpotency_index(x).is_some()
    }

    pub fn is_idempotent(&self, x: Elem) -> bool {
        self.mul(x, x) == x
    }

    /// Two-sided inverse of `x`, if it is a unit.
    pub fn inverse(&self, x: Elem) -> Option<Elem> {
        self.elements()
            .find(|&y| self.mul(x, y) == self.one && self.mul(y, x) == self.one)
    }

    pub fn units(&self) -> Vec<Elem> {
        self.elements()
            .filter(|&x| self.inverse(x).is_some())
            .collect()
    }

    pub fn idempotents(&self) -> Vec<Elem> {
        self.elements().filter(|&x| self.is_idempotent(x)).collect()
    }

    pub fn additive_order(&self, x: Elem) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != self.zero {
            y = self.add(y, x);
            k += 1;
        }
        k
    }

    pub fn name(&self, x: Elem) -> &str {
        &self.names[x]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Resolves an element by display name, falling back to a plain index.
    pub fn parse_element(&self, token: &str) -> Result<Elem> {
        let token = token.trim();
        if let Some(i) = self.names.iter().position(|n| n == token) {
            return Ok(i);
        }
        token
            .parse::<usize>()
            .ok()
            .filter(|&i| i < self.order)
            .ok_or_else(|| Error::UnknownElement(token.to_string()))
    }

    pub fn add_table(&self) -> impl Iterator<Item = Elem> + '_ {
        self.add.iter().map(|&e| e as Elem)
    }

    pub fn mul_table(&self) -> impl Iterator<Item = Elem> + '_ {
        self.mul.iter().map(|&e| e as Elem)
    }

    fn validate(&mut self) -> Result<()> {
        let n = self.order;
        let fail = |axiom, witness: &[Elem]| {
            Err(Error::AxiomViolation {
                axiom,
                witness: witness.to_vec(),
            })
        };
        for a in 0..n {
            if self.add(self.zero, a) != a || self.add(a, self.zero) != a {
                return fail("additive identity", &[a]);
            }
        }
        for a in 0..n {
            match (0..n).find(|&b| self.add(a, b) == self.zero) {
                Some(b) if self.add(b, a) == self.zero => self.neg[a] = b as u32,
                _ => return fail("additive inverse", &[a]),
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                if self.add(a, b) != self.add(b, a) {
                    return fail("additive commutativity", &[a, b]);
                }
            }
        }
        for a in 0..n {
            if self.mul(self.one, a) != a || self.mul(a, self.one) != a {
                return fail("multiplicative identity", &[a]);
            }
        }
        if n > 1 && self.one == self.zero {
            return fail("nontrivial identity", &[self.one]);
        }
        if n <= EXHAUSTIVE_SCAN_LIMIT {
            self.validate_exhaustive()
        } else {
            self.validate_by_generators()
        }
    }

    fn validate_exhaustive(&self) -> Result<()> {
        let n = self.order;
        let scan = |axiom, holds: &dyn Fn(Elem, Elem, Elem) -> bool| {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if !holds(a, b, c) {
                            return Err(Error::AxiomViolation {
                                axiom,
                                witness: vec![a, b, c],
                            });
                        }
                    }
                }
            }
            Ok(())
        };
        scan("additive associativity", &|a, b, c| {
            self.add(self.add(a, b), c) == self.add(a, self.add(b, c))
        })?;
        scan("left distributivity", &|a, b, c| {
            self.mul(a, self.add(b, c)) == self.add(self.mul(a, b), self.mul(a, c))
        })?;
        scan("right distributivity", &|a, b, c| {
            self.mul(self.add(a, b), c) == self.add(self.mul(a, c), self.mul(b, c))
        })?;
        scan("multiplicative associativity", &|a, b, c| {
            self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c))
        })
    }

    /// Equivalent to the triple loop but with one quantifier restricted to an
    /// additive generating set `G`:
    /// - associativity of `+` at the middle position holds on a submagma, so `G` suffices;
    /// - `x ↦ a·x` is additive once `a(b+g) = ab+ag` for all `b` and `g ∈ G`;
    /// - with both distributive laws, `(xy)z − x(yz)` is triadditive, so `G³` suffices.
    fn validate_by_generators(&self) -> Result<()> {
        let n = self.order;
        let gens = self.reachability_generators();
        let fail = |axiom, witness: Vec<Elem>| Err(Error::AxiomViolation { axiom, witness });
        for &g in &gens {
            for x in 0..n {
                for y in 0..n {
                    if self.add(self.add(x, g), y) != self.add(x, self.add(g, y)) {
                        return fail("additive associativity", vec![x, g, y]);
                    }
                }
            }
        }
        for &g in &gens {
            for a in 0..n {
                for b in 0..n {
                    if self.mul(a, self.add(b, g)) != self.add(self.mul(a, b), self.mul(a, g)) {
                        return fail("left distributivity", vec![a, b, g]);
                    }
                    if self.mul(self.add(b, g), a) != self.add(self.mul(b, a), self.mul(g, a)) {
                        return fail("right distributivity", vec![b, g, a]);
                    }
                }
            }
        }
        for &x in &gens {
            for &y in &gens {
                for &z in &gens {
                    if self.mul(self.mul(x, y), z) != self.mul(x, self.mul(y, z)) {
                        return fail("multiplicative associativity", vec![x, y, z]);
                    }
                }
            }
        }
        Ok(())
    }

    /// Elements `G` such that every element is a left-nested sum of members of
    /// `G`. Makes no associativity assumption.
    fn reachability_generators(&self) -> Vec<Elem> {
        let n = self.order;
        let mut reached = vec![false; n];
        reached[self.zero] = true;
        let mut gens = Vec::new();
        let mut frontier = vec![self.zero];
        let mut all = vec![self.zero];
        while let Some(next) = (0..n).find(|&x| !reached[x]) {
            gens.push(next);
            frontier.clone_from(&all);
            while let Some(x) = frontier.pop() {
                for &g in &gens {
                    let y = self.add(x, g);
                    if !reached[y] {
                        reached[y] = true;
                        all.push(y);
                        frontier.push(y);
                    }
                }
            }
        }
        gens
    }
}

pub(crate) fn tables(
    n: usize,
    add: impl Fn(Elem, Elem) -> Elem,
    mul: impl Fn(Elem, Elem) -> Elem,
) -> (Vec<Elem>, Vec<Elem>) {
    let mut a = Vec::with_capacity(n * n);
    let mut m = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            a.push(add(x, y));
            m.push(mul(x, y));
        }
    }
    (a, m)
}

/// Index of the ut3 element with diagonal `a` and upper entries `b = E12`,
/// `c = E13`, `d = E23` (coefficients reduced mod `m`).
pub fn ut3_element(m: usize, a: usize, b: usize, c: usize, d: usize) -> Elem {
    ((a % m * m + b % m) * m + c % m) * m + d % m
}

/// Inverse of [`ut3_element`]: `(a, b, c, d)`.
pub fn ut3_coords(m: usize, x: Elem) -> (usize, usize, usize, usize) {
    (x / (m * m * m), x / (m * m) % m, x / m % m, x % m)
}

fn ut3_name(m: usize, x: Elem) -> String {
    let (a, b, c, d) = ut3_coords(m, x);
    let mut terms = Vec::new();
    if a != 0 {
        terms.push(a.to_string());
    }
    for (coef, unit) in [(b, "E12"), (c, "E13"), (d, "E23")] {
        match coef {
            0 => {}
            1 => terms.push(unit.to_string()),
            k => terms.push(format!("{k}{unit}")),
        }
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}
