use std::sync::{Arc, OnceLock};

use fixedbitset::FixedBitSet;

use super::witness::{ideal_label, Fact, Witness, WitnessBuilder};
use super::{CheckId, RingContext, SkipReason};
use crate::error::Error;
use crate::hom::{is_nil_essential_mono, preimage_ideal, ModuleHom};
use crate::ideal::{
    ideal_product, ideal_quotient, ideal_sum, radical_of_ideal, Ideal, IdealLattice, Sidedness,
};
use crate::localization::{
    all_multiplicative_sets, localize_ideal, localize_ring, non_zero_divisors, MultiplicativeSet,
};
use crate::predicates::{first_escape, nil_essential_by_element_criterion};
use crate::ring::{ut3_coords, Construction};

const NOETHERIAN: &str = "noetherian hypothesis discharged by finiteness";

pub(crate) enum Finding {
    Holds,
    /// A failing instance of a theorem, or the witness of an existence claim.
    Violated(Witness, String),
    Skip(SkipReason, String),
}

pub(crate) enum Stop {
    Budget,
    Error(Error),
}

impl From<Error> for Stop {
    fn from(e: Error) -> Self {
        Stop::Error(e)
    }
}

type Out = Result<Finding, Stop>;

pub(crate) struct Run {
    pub(crate) instances: u64,
    budget: Option<u64>,
    pub(crate) notes: Vec<String>,
    pub(crate) sidedness: Option<Sidedness>,
    pub(crate) non_unital: bool,
}

impl Run {
    pub(crate) fn new(budget: Option<u64>) -> Self {
        Run {
            instances: 0,
            budget,
            notes: Vec::new(),
            sidedness: None,
            non_unital: false,
        }
    }

    /// Counts one statement instance, stopping once the budget is spent.
    fn tick(&mut self) -> Result<(), Stop> {
        if self.budget.is_some_and(|b| self.instances >= b) {
            return Err(Stop::Budget);
        }
        self.instances += 1;
        Ok(())
    }

    fn note(&mut self, note: impl Into<String>) {
        let note = note.into();
        if !self.notes.contains(&note) {
            self.notes.push(note);
        }
    }
}

/// Cached relations on one ideal lattice, addressed by lattice position.
pub(crate) struct View {
    pub(crate) l: Arc<IdealLattice>,
    whole: usize,
    zero: usize,
    /// `rel[i * n + j]`: 0 when `I ⊄ J`, 1 when `I ⊆ J` is not nil-essential, 2 when it is.
    rel_nil: Vec<u8>,
    rel_ess: Vec<u8>,
    meet: OnceLock<Vec<usize>>,
    join: OnceLock<Vec<usize>>,
    product: OnceLock<Vec<usize>>,
}

impl View {
    pub(crate) fn new(l: Arc<IdealLattice>) -> Self {
        let n = l.len();
        let whole = l.position(l.whole()).expect("whole ring in lattice");
        let zero = l.position(l.zero()).expect("zero ideal in lattice");
        let mut rel_nil = vec![0u8; n * n];
        let mut rel_ess = vec![0u8; n * n];
        for j in 0..n {
            let jset = l.get(j).member_set();
            let subs: Vec<usize> = (0..n)
                .filter(|&i| l.get(i).member_set().is_subset(jset))
                .collect();
            for &i in &subs {
                let iset = l.get(i).member_set();
                let mut nil = true;
                let mut ess = true;
                for &mu in &subs {
                    if l.get(mu).member_set().intersection_count(iset) == 1 {
                        ess &= mu == zero;
                        nil &= l.is_nilpotent_at(mu);
                    }
                }
                rel_nil[i * n + j] = 1 + nil as u8;
                rel_ess[i * n + j] = 1 + ess as u8;
            }
        }
        View {
            l,
            whole,
            zero,
            rel_nil,
            rel_ess,
            meet: OnceLock::new(),
            join: OnceLock::new(),
            product: OnceLock::new(),
        }
    }

    fn len(&self) -> usize {
        self.l.len()
    }

    fn get(&self, i: usize) -> &Ideal {
        self.l.get(i)
    }

    fn sub(&self, i: usize, j: usize) -> bool {
        self.rel_nil[i * self.len() + j] != 0
    }

    fn nil_in(&self, i: usize, j: usize) -> bool {
        let r = self.rel_nil[i * self.len() + j];
        debug_assert!(r != 0, "nil_in needs containment");
        r == 2
    }

    fn ess_in(&self, i: usize, j: usize) -> bool {
        self.rel_ess[i * self.len() + j] == 2
    }

    fn nil_ess(&self, i: usize) -> bool {
        self.nil_in(i, self.whole)
    }

    fn ess(&self, i: usize) -> bool {
        self.ess_in(i, self.whole)
    }

    fn nilpotent(&self, i: usize) -> bool {
        self.l.is_nilpotent_at(i)
    }

    fn pos(&self, set: &FixedBitSet) -> Result<usize, Stop> {
        self.l.position_of_set(set).ok_or_else(|| {
            Stop::Error(Error::InternalInconsistency(
                "lattice is not closed under an ideal operation".into(),
            ))
        })
    }

    fn table<'a>(
        &self,
        cell: &'a OnceLock<Vec<usize>>,
        op: impl Fn(usize, usize) -> FixedBitSet,
    ) -> &'a [usize] {
        cell.get_or_init(|| {
            let n = self.len();
            let mut t = Vec::with_capacity(n * n);
            for i in 0..n {
                for j in 0..n {
                    let set = op(i, j);
                    t.push(self.l.position_of_set(&set).unwrap_or(usize::MAX));
                }
            }
            t
        })
    }

    fn lookup(&self, t: &[usize], i: usize, j: usize) -> Result<usize, Stop> {
        match t[i * self.len() + j] {
            usize::MAX => Err(Stop::Error(Error::InternalInconsistency(
                "lattice is not closed under an ideal operation".into(),
            ))),
            k => Ok(k),
        }
    }

    fn meet(&self, i: usize, j: usize) -> Result<usize, Stop> {
        let t = self.table(&self.meet, |a, b| {
            let mut s = self.get(a).member_set().clone();
            s.intersect_with(self.get(b).member_set());
            s
        });
        self.lookup(t, i, j)
    }

    fn join(&self, i: usize, j: usize) -> Result<usize, Stop> {
        let t = self.table(&self.join, |a, b| {
            ideal_sum(self.get(a), self.get(b))
                .map(|s| s.member_set().clone())
                .unwrap_or_default()
        });
        self.lookup(t, i, j)
    }

    fn product(&self, i: usize, j: usize) -> Result<usize, Stop> {
        let t = self.table(&self.product, |a, b| {
            ideal_product(self.get(a), self.get(b))
                .map(|s| s.member_set().clone())
                .unwrap_or_default()
        });
        self.lookup(t, i, j)
    }

    /// First `μ ⊆ J` with `I ∩ μ = 0` and `μ` non-nilpotent.
    fn escape(&self, i: usize, j: usize) -> Option<usize> {
        first_escape(
            &self.l,
            self.get(i).member_set(),
            self.get(j).member_set(),
            true,
        )
    }

    fn builder(&self) -> WitnessBuilder<'_> {
        WitnessBuilder::new(self.l.ring(), self.l.sidedness())
    }

    fn label(&self, i: usize) -> String {
        ideal_label(self.get(i))
    }

    /// Records `I ⊴nil J` (or `⊴nil R` when `j` is `None`), and for a failure the
    /// offending `μ`.
    fn nil_fact(&self, b: &mut WitnessBuilder<'_>, i: usize, j: Option<usize>) -> usize {
        let within = j.unwrap_or(self.whole);
        let ii = b.ideal(self.get(i));
        let jj = j.map(|j| b.ideal(self.get(j)));
        let holds = self.nil_in(i, within);
        b.fact(Fact::NilEssential {
            ideal: ii,
            within: jj,
            holds,
        });
        if let Some(mu) = self.escape(i, within).filter(|_| !holds) {
            let m = b.ideal(self.get(mu));
            let z = b.ideal(self.get(self.zero));
            let w = b.ideal(self.get(within));
            b.fact(Fact::Contains {
                outer: w,
                inner: m,
                holds: true,
            })
            .fact(Fact::Intersection {
                left: ii,
                right: m,
                result: z,
            })
            .fact(Fact::Nilpotent {
                ideal: m,
                holds: false,
            });
        }
        ii
    }
}

fn violated(b: WitnessBuilder<'_>, detail: String) -> Out {
    Ok(Finding::Violated(b.finish(), detail))
}

fn commutative_only(ctx: &RingContext, run: &mut Run) -> Option<Finding> {
    run.sidedness = Some(Sidedness::TwoSided);
    if ctx.ring().is_commutative() {
        None
    } else {
        run.sidedness = None;
        Some(Finding::Skip(
            SkipReason::Hypothesis,
            "requires a commutative ring".into(),
        ))
    }
}

fn view(ctx: &RingContext, side: Sidedness, run: &mut Run) -> Result<Arc<View>, Stop> {
    run.sidedness = Some(if ctx.ring().is_commutative() {
        Sidedness::TwoSided
    } else {
        side
    });
    Ok(ctx.view(side)?)
}

pub(crate) fn dispatch(ctx: &RingContext, id: CheckId, side: Sidedness, run: &mut Run) -> Out {
    use CheckId::*;
    match id {
        P201 => p201(ctx, side, run),
        C202 => c202(ctx, side, run, false),
        X202 => c202(ctx, side, run, true),
        C203 => c203(ctx, side, run),
        C204 => c204(ctx, side, run),
        C205 => c205(ctx, side, run, false),
        X205 => c205(ctx, side, run, true),
        P206 => p206(ctx, side, run),
        P207 => p207(ctx, side, run),
        C208 => c208(ctx, side, run),
        C209 => c209(ctx, side, run),
        C210 => c210(ctx, side, run),
        R211a => r211a(ctx, side, run),
        L212 => l212(ctx, run),
        L213 => l213(ctx, run),
        P214 => p214(ctx, run),
        P215 => p215(ctx, side, run),
        P216 => p216(ctx, run),
        D217 => d217(ctx, side, run),
        P218 => p218(ctx, side, run),
        P219 => p219(ctx, side, run),
        R220 => r220(ctx, run),
        P222 => p222(ctx, run),
        C223 => c223(ctx, run, false),
        X223 => c223(ctx, run, true),
        E224 => e224(ctx, run),
    }
}

fn p201(ctx: &RingContext, side: Sidedness, run: &mut Run) -> Out {
    let v = view(ctx, side, run)?;
    for i in (0..v.len()).filter(|&i| v.nil_ess(i)) {
        for j in (0..v.len()).filter(|&j| v.sub(i, j)) {
            run.tick()?;
            if !v.nil_ess(j) {
                let mut b = v.builder();
                let ii = v.nil_fact(&mut b, i, None);
                let jj = b.ideal(v.get(j));
                b.fact(Fact::Contains {
                    outer: jj,
                    inner: ii,
                    holds: true,
                });
                v.nil_fact(&mut b, j, None);
                return violated(
                    b,
                    format!(
                        "{} ⊆ {} but only the first is nil-essential",
                        v.label(i),
                        v.label(j)
                    ),
                );
            }
        }
    }
    Ok(Finding::Holds)
}

/// Intersections of any number of lattice ideals are lattice ideals, so pairs
/// cover every finite family.
fn c202(ctx: &RingContext, side: Sidedness, run: &mut Run, hunt_converse: bool) -> Out {
    let v = view(ctx, side, run)?;
    let n = v.len();
    for a in 0..n {
        for c in (if hunt_converse { a + 1 } else { a })..n {
            run.tick()?;
            let m = v.meet(a, c)?;
            let bad = if hunt_converse {
                v.nil_ess(a) && v.nil_ess(c) && !v.nil_ess(m)
            } else {
                v.nil_ess(m) && !(v.nil_ess(a) && v.nil_ess(c))
            };
            if bad {
                let mut b = v.builder();
                let aa = v.nil_fact(&mut b, a, None);
                let cc = v.nil_fact(&mut b, c, None);
                let mm = b.ideal(v.get(m));
                b.fact(Fact::Intersection {
                    left: aa,
                    right: cc,
                    result: mm,
                });
                v.nil_fact(&mut b, m, None);
                return violated(
                    b,
                    format!(
                        "{} ∩ {} = {}; nil-essential: {}, {}, {}",
                        v.label(a),
                        v.label(c),
                        v.label(m),
                        v.nil_ess(a),
                        v.nil_ess(c),
                        v.nil_ess(m)
                    ),
                );
            }
        }
    }
    Ok(Finding::Holds)
}

fn c203(ctx: &RingContext, side: Sidedness, run: &mut Run) -> Out {
    let v = view(ctx, side, run)?;
    let n = v.len();
    for a in 0..n {
        for c in a..n {
            run.tick()?;
            let s = v.join(a, c)?;
            if (v.nil_ess(a) || v.nil_ess(c)) && !v.nil_ess(s) {
                let mut b = v.builder();
                let aa = v.nil_fact(&mut b, a, None);
                let cc = v.nil_fact(&mut b, c, None);
                let ss = b.ideal(v.get(s));
                b.fact(Fact::Sum {
                    left: aa,
                    right: cc,
                    result: ss,
                });
                v.nil_fact(&mut b, s, None);
                return violated(
                    b,
                    format!("{} + {} is not nil-essential", v.label(a), v.label(c)),
                );
            }
        }
    }
    Ok(Finding::Holds)
}

/// Pairs and triples; longer products are iterated pair products of lattice
/// ideals and reduce to these.
fn c204(ctx: &RingContext, side: Sidedness, run: &mut Run) -> Out {
    let v = view(ctx, side, run)?;
    let n = v.len();
    let fail = |factors: &[usize], p: usize| -> Out {
        let mut b = v.builder();
        let idx: Vec<usize> = factors.iter().map(|&f| b.ideal(v.get(f))).collect();
        let mut acc = idx[0];
        let mut acc_pos = factors[0];
        for (k, &f) in factors.iter().enumerate().skip(1) {
            acc_pos = v.product(acc_pos, f)?;
            let next = b.ideal(v.get(acc_pos));
            b.fact(Fact::Product {
                left: acc,
                right: idx[k],
                result: next,
            });
            acc = next;
        }
        v.nil_fact(&mut b, p, None);
        for &f in factors {
            v.nil_fact(&mut b, f, None);
        }
        let labels: Vec<String> = factors.iter().map(|&f| v.label(f)).collect();
        violated(
            b,
            format!(
                "the product {} is nil-essential but a factor is not",
                labels.join("·")
            ),
        )
    };
    for a in 0..n {
        for c in 0..n {
            run.tick()?;
            let p = v.product(a, c)?;
            if v.nil_ess(p) && !(v.nil_ess(a) && v.nil_ess(c)) {
                return fail(&[a, c], p);
            }
            for d in 0..n {
                run.tick()?;
                let q = v.product(p, d)?;
                if v.nil_ess(q) && !(v.nil_ess(a) && v.nil_ess(c) && v.nil_ess(d)) {
                    return fail(&[a, c, d], q);
                }
            }
        }
    }
    Ok(Finding::Holds)
}

/// Powers are followed until the descending chain stabilises.
fn c205(ctx: &RingContext, side: Sidedness, run: &mut Run, hunt_converse: bool) -> Out {
    let v = view(ctx, side, run)?;
    for a in 0..v.len() {
        let mut powers = vec![a];
        loop {
            let next = v.product(*powers.last().expect("nonempty"), a)?;
            if next == *powers.last().expect("nonempty") {
                break;
            }
            powers.push(next);
        }
        for (k, &p) in powers.iter().enumerate().skip(1) {
            run.tick()?;
            let exponent = k + 1;
            let bad = if hunt_converse {
                exponent == 2 && v.nil_ess(a) && !v.nil_ess(p)
            } else {
                v.nil_ess(p) && !v.nil_ess(a)
            };
            if bad {
                let mut b = v.builder();
                let aa = v.nil_fact(&mut b, a, None);
                let pp = b.ideal(v.get(p));
                b.fact(Fact::Power {
                    ideal: aa,
                    exponent,
                    result: pp,
                });
                v.nil_fact(&mut b, p, None);
                return violated(
                    b,
                    format!(
                        "{} nil-essential: {}; its power {} = {} nil-essential: {}",
                        v.label(a),
                        v.nil_ess(a),
                        exponent,
                        v.label(p),
                        v.nil_ess(p)
                    ),
                );
            }
        }
    }
    Ok(Finding::Holds)
}

fn p206(ctx: &RingContext, side: Sidedness, run: &mut Run) -> Out {
    let v = view(ctx, side, run)?;
    let n = v.len();
    for k in 0..n {
        let subs: Vec<usize> = (0..n).filter(|&i| v.sub(i, k)).collect();
        for &i in &subs {
            for &j in subs.iter().filter(|&&j| v.sub(i, j)) {
                run.tick()?;
                if v.nil_in(i, k) && !(v.nil_in(i, j) && v.nil_in(j, k)) {
                    let mut b = v.builder();
                    v.nil_fact(&mut b, i, Some(k));
                    v.nil_fact(&mut b, i, Some(j));
                    v.nil_fact(&mut b, j, Some(k));
                    return violated(
                        b,
                        format!(
                            "{} ⊴nil {} but the chain through {} breaks",
                            v.label(i),
                            v.label(k),
                            v.label(j)
                        ),
                    );
                }
            }
            for &l in &subs {
                run.tick()?;
                let m = v.meet(i, l)?;
                if v.nil_in(m, k) && !(v.nil_in(i, k) && v.nil_in(l, k)) {
                    let mut b = v.builder();
                    let ii = b.ideal(v.get(i));
                    let ll = b.ideal(v.get(l));
                    let mm = b.ideal(v.get(m));
                    b.fact(Fact::Intersection {
                        left: ii,
                        right: ll,
                        result: mm,
                    });
                    v.nil_fact(&mut b, m, Some(k));
                    v.nil_fact(&mut b, i, Some(k));
                    v.nil_fact(&mut b, l, Some(k));
                    return violated(
                        b,
                        format!(
                            "{} ∩ {} ⊴nil {} but not both factors are",
                            v.label(i),
                            v.label(l),
                            v.label(k)
                        ),
                    );
                }
            }
        }
    }
    Ok(Finding::Holds)
}

/// The converse of the chain rule: `I ⊴nil J ⊴nil K` without `I ⊴nil K`.
pub(crate) fn p206_converse(ctx: &RingContext, side: Sidedness, run: &mut Run) -> Out {
    let v = view(ctx, side, run)?;
    let n = v.len();
    for k in 0..n {
        for j in (0..n).filter(|&j| v.sub(j, k)) {
            for i in (0..n).filter(|&i| v.sub(i, j)) {
                run.tick()?;
                if v.nil_in(i, j) && v.nil_in(j, k) && !v.nil_in(i, k) {
                    let mut b = v.builder();
                    v.nil_fact(&mut b, i, Some(j));
                    v.nil_fact(&mut b, j, Some(k));
                    v.nil_fact(&mut b, i, Some(k));
                    return violated(
                        b,
                        format!(
                            "{} ⊴nil {} ⊴nil {} but {} is not nil-essential in {}",
                            v.label(i),
                            v.label(j),
                            v.label(k),
                            v.label(i),
                            v.label(k)
                        ),
                    );
                }
            }
        }
    }
    Ok(Finding::Holds)
}

fn trivial_meet_partner(
    v: &View,
    run: &mut Run,
    m: usize,
    what: &str,
    extra: impl Fn(&mut WitnessBuilder<'_>, usize),
) -> Out {
    for mu in 0..v.len() {
        run.tick()?;
        if v.meet(mu, m)? == v.zero && mu != v.zero && v.nilpotent(mu) {
            let mut b = v.builder();
            let mm = b.ideal(v.get(m));
            let uu = b.ideal(v.get(mu));
            let z = b.ideal(v.get(v.zero));
            extra(&mut b, mm);
            b.fact(Fact::Intersection {
                left: mm,
                right: uu,
                result: z,
            })
            .fact(Fact::Nilpotent {
                ideal: uu,
                holds: true,
            });
            return violated(
                b,
                format!(
                    "{} meets the {what} {} trivially and is nonzero nilpotent",
                    v.label(mu),
                    v.label(m)
                ),
            );
        }
    }
    Ok(Finding::Holds)
}

fn p207(ctx: &RingContext, side: Sidedness, run: &mut Run) -> Out {
    let v = view(ctx, side, run)?;
    for m in v.l.maximal_proper_indices() {
        if let f @ Finding::Violated(..) =
            trivial_meet_partner(&v, run, m, "maximal ideal", |b, mm| {
                b.fact(Fact::Maximal {
                    ideal: mm,
                    holds: true,
                });
            })?
        {
            return Ok(f);
        }
    }
    Ok(Finding::Holds)
}

fn c208(ctx: &RingContext, side: Sidedness, run: &mut Run) -> Out {
    let v = view(ctx, side, run)?;
    for m in
        v.l.maximal_proper_indices()
            .into_iter()
            .filter(|&m| v.nil_ess(m))
    {
        for mu in (0..v.len()).filter(|&mu| mu != v.zero) {
            run.tick()?;
            if v.meet(m, mu)? == v.zero {
                let mut b = v.builder();
                let mm = v.nil_fact(&mut b, m, None);
                b.fact(Fact::Maximal {
                    ideal: mm,
                    holds: true,
                });
                let uu = b.ideal(v.get(mu));
                let z = b.ideal(v.get(v.zero));
                b.fact(Fact::Intersection {
                    left: mm,
                    right: uu,
                    result: z,
                });
                return violated(
                    b,
                    format!(
                        "nil-essential maximal {} misses {}",
                        v.label(m),
                        v.label(mu)
                    ),
                );
            }
        }
    }
    Ok(Finding::Holds)
}

fn c209(ctx: &RingContext, side: Sidedness, run: &mut Run) -> Out {
    let v = view(ctx, side, run)?;
    let semisimple = ctx.jacobson()?.is_zero();
    let proper_nil = (0..v.len()).find(|&i| {
        run.instances += 1;
        i != v.whole && v.nil_ess(i)
    });
    let maxs = v.l.maximal_proper_indices();
    let maximal_nil = maxs.iter().copied().find(|&m| v.nil_ess(m));
    let clauses = [proper_nil.is_none(), maximal_nil.is_none(), semisimple];
    if clauses.iter().all(|&c| c == clauses[0]) {
        return Ok(Finding::Holds);
    }
    let mut b = v.builder();
    b.fact(Fact::Semisimple { holds: semisimple });
    if let Some(i) = proper_nil {
        v.nil_fact(&mut b, i, None);
    }
    if let Some(m) = maximal_nil {
        let mm = v.nil_fact(&mut b, m, None);
        b.fact(Fact::Maximal {
            ideal: mm,
            holds: true,
        });
    }
    violated(
        b,
        format!(
            "no proper nil-essential: {}, no maximal nil-essential: {}, semisimple: {}",
            clauses[0], clauses[1], clauses[2]
        ),
    )
}

fn jacobson_pos(ctx: &RingContext, v: &View) -> Result<usize, Stop> {
    v.pos(ctx.jacobson()?.member_set())
}

fn c210(ctx: &RingContext, side: Sidedness, run: &mut Run) -> Out {
    let v = view(ctx, side, run)?;
    let j = jacobson_pos(ctx, &v)?;
    trivial_meet_partner(&v, run, j, "Jacobson radical", |b, jj| {
        b.fact(Fact::JacobsonRadical { result: jj });
    })
}

fn is_prime(ideal: &Ideal) -> bool {
    let r = ideal.ring();
    !ideal.is_whole()
        && r.elements().all(|a| {
            ideal.contains(a)
                || r.elements()
                    .all(|c| ideal.contains(c) || !ideal.contains(r.mul(a, c)))
        })
}

fn r211a(ctx: &RingContext, side: Sidedness, run: &mut Run) -> Out {
    let v = view(ctx, side, run)?;
    let j = jacobson_pos(ctx, &v)?;
    if v.nil_ess(j) {
        for mu in (0..v.len()).filter(|&mu| mu != v.zero) {
            run.tick()?;
            if v.meet(j, mu)? == v.zero {
                let mut b = v.builder();
                let jj = v.nil_fact(&mut b, j, None);
                b.fact(Fact::JacobsonRadical { result: jj });
                let uu = b.ideal(v.get(mu));
                let z = b.ideal(v.get(v.zero));
                b.fact(Fact::Intersection {
                    left: jj,
                    right: uu,
                    result: z,
                });
                return violated(b, format!("nil-essential J(R) misses {}", v.label(mu)));
            }
        }
    }
    if ctx.ring().is_zero_ring() {
        run.note("semisimple clauses are vacuous in the zero ring, where J(R) = R = 0");
        return Ok(Finding::Holds);
    }
    if !ctx.jacobson()?.is_zero() {
        return Ok(Finding::Holds);
    }
    let mut candidates: Vec<(usize, &str)> = vec![(j, "Jacobson radical")];
    candidates.extend(
        v.l.maximal_proper_indices()
            .into_iter()
            .map(|m| (m, "maximal ideal")),
    );
    if ctx.ring().is_commutative() {
        candidates.extend(
            (0..v.len())
                .filter(|&p| is_prime(v.get(p)))
                .map(|p| (p, "prime ideal")),
        );
    }
    for (c, what) in candidates {
        run.tick()?;
        if v.nil_ess(c) {
            let mut b = v.builder();
            b.fact(Fact::Semisimple { holds: true });
            let cc = v.nil_fact(&mut b, c, None);
            b.fact(match what {
                "Jacobson radical" => Fact::JacobsonRadical { result: cc },
                "maximal ideal" => Fact::Maximal {
                    ideal: cc,
                    holds: true,
                },
                _ => Fact::Prime {
                    ideal: cc,
                    holds: true,
                },
            });
            return violated(
                b,
                format!("semisimple ring with nil-essential {what} {}", v.label(c)),
            );
        }
    }
    Ok(Finding::Holds)
}

fn l212(ctx: &RingContext, run: &mut Run) -> Out {
    if let Some(skip) = commutative_only(ctx, run) {
        return Ok(skip);
    }
    run.note(NOETHERIAN);
    let v = ctx.view(Sidedness::TwoSided)?;
    for i in (0..v.len()).filter(|&i| i != v.zero) {
        run.tick()?;
        let criterion = nil_essential_by_element_criterion(v.get(i), None)?;
        if criterion != v.nil_ess(i) {
            let mut b = v.builder();
            let ii = v.nil_fact(&mut b, i, None);
            b.fact(Fact::ElementCriterion {
                ideal: ii,
                within: None,
                holds: criterion,
            });
            return violated(
                b,
                format!(
                    "definition and element criterion disagree on {}",
                    v.label(i)
                ),
            );
        }
    }
    Ok(Finding::Holds)
}

fn l213(ctx: &RingContext, run: &mut Run) -> Out {
    if let Some(skip) = commutative_only(ctx, run) {
        return Ok(skip);
    }
    run.note(NOETHERIAN);
    let v = ctx.view(Sidedness::TwoSided)?;
    for j in (0..v.len()).filter(|&j| j != v.zero) {
        for i in (0..v.len()).filter(|&i| i != v.zero && v.sub(i, j)) {
            run.tick()?;
            let criterion = nil_essential_by_element_criterion(v.get(i), Some(v.get(j)))?;
            if criterion != v.nil_in(i, j) {
                let mut b = v.builder();
                let ii = v.nil_fact(&mut b, i, Some(j));
                let jj = b.ideal(v.get(j));
                b.fact(Fact::ElementCriterion {
                    ideal: ii,
                    within: Some(jj),
                    holds: criterion,
                });
                return violated(
                    b,
                    format!(
                        "definition and element criterion disagree on {} in {}",
                        v.label(i),
                        v.label(j)
                    ),
                );
            }
        }
    }
    Ok(Finding::Holds)
}

fn p214(ctx: &RingContext, run: &mut Run) -> Out {
    if let Some(skip) = commutative_only(ctx, run) {
        return Ok(skip);
    }
    run.note(NOETHERIAN);
    let v = ctx.view(Sidedness::TwoSided)?;
    for i in 0..v.len() {
        run.tick()?;
        let rad = v.pos(radical_of_ideal(v.get(i))?.member_set())?;
        if !v.nil_in(i, rad) {
            let mut b = v.builder();
            let ii = b.ideal(v.get(i));
            let rr = b.ideal(v.get(rad));
            b.fact(Fact::Radical {
                ideal: ii,
                result: rr,
            });
            v.nil_fact(&mut b, i, Some(rad));
            return violated(
                b,
                format!(
                    "{} is not nil-essential in its radical {}",
                    v.label(i),
                    v.label(rad)
                ),
            );
        }
    }
    Ok(Finding::Holds)
}

fn p215(ctx: &RingContext, side: Sidedness, run: &mut Run) -> Out {
    let v = view(ctx, side, run)?;
    run.note(NOETHERIAN);
    let n = v.len();
    for j1 in 0..n {
        for j2 in 0..n {
            if v.meet(j1, j2)? != v.zero {
                continue;
            }
            let js = v.join(j1, j2)?;
            for i1 in (0..n).filter(|&i| v.sub(i, j1)) {
                for i2 in (0..n).filter(|&i| v.sub(i, j2)) {
                    run.tick()?;
                    let is = v.join(i1, i2)?;
                    let parts = v.nil_in(i1, j1) && v.nil_in(i2, j2);
                    if parts != v.nil_in(is, js) {
                        let mut b = v.builder();
                        let (a1, a2, c1, c2) = (
                            b.ideal(v.get(i1)),
                            b.ideal(v.get(i2)),
                            b.ideal(v.get(j1)),
                            b.ideal(v.get(j2)),
                        );
                        let (s_i, s_j, z) = (
                            b.ideal(v.get(is)),
                            b.ideal(v.get(js)),
                            b.ideal(v.get(v.zero)),
                        );
                        b.fact(Fact::Intersection {
                            left: c1,
                            right: c2,
                            result: z,
                        })
                        .fact(Fact::Sum {
                            left: a1,
                            right: a2,
                            result: s_i,
                        })
                        .fact(Fact::Sum {
                            left: c1,
                            right: c2,
                            result: s_j,
                        });
                        v.nil_fact(&mut b, i1, Some(j1));
                        v.nil_fact(&mut b, i2, Some(j2));
                        v.nil_fact(&mut b, is, Some(js));
                        return violated(
                            b,
                            format!(
                                "componentwise {parts} but {} ⊕ {} in {} ⊕ {} gives {}",
                                v.label(i1),
                                v.label(i2),
                                v.label(j1),
                                v.label(j2),
                                !parts
                            ),
                        );
                    }
                }
            }
        }
    }
    Ok(Finding::Holds)
}

fn p216(ctx: &RingContext, run: &mut Run) -> Out {
    if let Some(skip) = commutative_only(ctx, run) {
        return Ok(skip);
    }
    run.note(NOETHERIAN);
    let v = ctx.view(Sidedness::TwoSided)?;
    let ring = ctx.ring();
    let n = v.len();
    let mut quotients: Vec<Option<usize>> = vec![None; n * ring.order()];
    for j in 0..n {
        for i in (0..n).filter(|&i| v.sub(i, j) && v.nil_in(i, j)) {
            for a in v.get(j).members() {
                run.tick()?;
                let q = match quotients[i * ring.order() + a] {
                    Some(q) => q,
                    None => {
                        let q = v.pos(ideal_quotient(v.get(i), a)?.member_set())?;
                        quotients[i * ring.order() + a] = Some(q);
                        q
                    }
                };
                if !v.nil_ess(q) {
                    let mut b = v.builder();
                    let ii = v.nil_fact(&mut b, i, Some(j));
                    let qq = b.ideal(v.get(q));
                    b.fact(Fact::Quotient {
                        ideal: ii,
                        element: ring.name(a).to_string(),
                        result: qq,
                    });
                    v.nil_fact(&mut b, q, None);
                    return violated(
                        b,
                        format!(
                            "({} : {}) = {} is not nil-essential",
                            v.label(i),
                            ring.name(a),
                            v.label(q)
                        ),
                    );
                }
            }
        }
    }
    Ok(Finding::Holds)
}

fn d217(ctx: &RingContext, side: Sidedness, run: &mut Run) -> Out {
    let v = view(ctx, side, run)?;
    let side = v.l.sidedness();
    let n = v.len();
    for i in 0..n {
        for j in 0..n {
            if v.get(i).len() > v.get(j).len() {
                continue;
            }
            for f in ctx.homs(side, i, j)?.iter().filter(|f| f.is_injective()) {
                run.tick()?;
                let img = v.pos(&f.image_set())?;
                let mono = is_nil_essential_mono(f, &v.l)?;
                if mono != v.nil_in(img, j) {
                    let mut b = v.builder();
                    let h = b.hom(f);
                    let ii = b.ideal(v.get(img));
                    b.fact(Fact::Image { hom: h, result: ii })
                        .fact(Fact::NilEssentialMono {
                            hom: h,
                            holds: mono,
                        });
                    v.nil_fact(&mut b, img, Some(j));
                    return violated(
                        b,
                        format!(
                            "mono {} → {} disagrees with its image",
                            v.label(i),
                            v.label(j)
                        ),
                    );
                }
            }
        }
    }
    Ok(Finding::Holds)
}

fn p218(ctx: &RingContext, side: Sidedness, run: &mut Run) -> Out {
    let v = view(ctx, side, run)?;
    let side = v.l.sidedness();
    let n = v.len();
    for j in 0..n {
        // first (K, f) for each distinct non-nilpotent kernel of a map out of J
        let mut kernels: Vec<(usize, usize, ModuleHom)> = Vec::new();
        for k in 0..n {
            for f in ctx.homs(side, j, k)?.iter() {
                run.tick()?;
                let ker = v.pos(&f.kernel_set())?;
                if !v.nilpotent(ker) && !kernels.iter().any(|(kk, _, _)| *kk == ker) {
                    kernels.push((ker, k, f.clone()));
                }
            }
        }
        for i in (0..n).filter(|&i| v.sub(i, j)) {
            run.tick()?;
            let c1 = v.nil_in(i, j);
            let inclusion = ModuleHom::inclusion(v.get(i), v.get(j))?;
            let c2 = is_nil_essential_mono(&inclusion, &v.l)?;
            let mut breaker = None;
            for (ker, k, f) in &kernels {
                if v.meet(*ker, i)? == v.zero {
                    breaker = Some((*ker, *k, f));
                    break;
                }
            }
            let c3 = breaker.is_none();
            if c1 == c2 && c2 == c3 {
                continue;
            }
            let mut b = v.builder();
            v.nil_fact(&mut b, i, Some(j));
            let inc = b.hom(&inclusion);
            b.fact(Fact::NilEssentialMono {
                hom: inc,
                holds: c2,
            });
            if let Some((ker, _, f)) = breaker {
                let h = b.hom(f);
                let kk = b.ideal(v.get(ker));
                let ii = b.ideal(v.get(i));
                let z = b.ideal(v.get(v.zero));
                b.fact(Fact::Kernel { hom: h, result: kk })
                    .fact(Fact::Intersection {
                        left: kk,
                        right: ii,
                        result: z,
                    })
                    .fact(Fact::Nilpotent {
                        ideal: kk,
                        holds: false,
                    });
            }
            return violated(
                b,
                format!(
                    "{} in {}: nil-essential {c1}, inclusion nil-essential mono {c2}, kernel clause {c3}",
                    v.label(i),
                    v.label(j)
                ),
            );
        }
    }
    Ok(Finding::Holds)
}

fn p219(ctx: &RingContext, side: Sidedness, run: &mut Run) -> Out {
    let v = view(ctx, side, run)?;
    let endos = ctx.endomorphisms(!run.non_unital)?;
    if run.non_unital {
        run.note("non-unital endomorphisms included");
    }
    for f in endos.iter() {
        for j in (0..v.len()).filter(|&j| v.nil_ess(j)) {
            run.tick()?;
            let pre = v.pos(preimage_ideal(f, v.get(j))?.member_set())?;
            if !v.nil_ess(pre) {
                let mut b = v.builder();
                b.endomorphism(f);
                let jj = v.nil_fact(&mut b, j, None);
                let pp = b.ideal(v.get(pre));
                b.fact(Fact::Preimage {
                    ideal: jj,
                    result: pp,
                });
                v.nil_fact(&mut b, pre, None);
                return violated(
                    b,
                    format!(
                        "preimage {} of {} is not nil-essential",
                        v.label(pre),
                        v.label(j)
                    ),
                );
            }
        }
    }
    Ok(Finding::Holds)
}

/// The nine listed shapes, as predicates on the coordinates `(a, b, c, d)`.
type Shape = fn(usize, usize, usize, usize) -> bool;

const UT3_SHAPES: [(&str, Shape); 9] = [
    ("I1", |_, _, _, _| true),
    ("I2", |a, b, c, d| a == 0 && b == 0 && c == 0 && d == 0),
    ("I3", |a, b, _, d| a == 0 && b == 0 && d == 0),
    ("I4", |a, _, c, d| a == 0 && c == 0 && d == 0),
    ("I5", |a, _, _, d| a == 0 && d == 0),
    ("I6", |a, b, _, _| a == 0 && b == 0),
    ("I7", |a, b, c, d| a == 0 && b == c && d == 0),
    ("I8", |a, _, _, _| a == 0),
    ("I9", |a, b, _, d| a == 0 && b == d),
];

fn r220(ctx: &RingContext, run: &mut Run) -> Out {
    let Construction::Ut3 { m } = *ctx.ring().construction() else {
        return Ok(Finding::Skip(
            SkipReason::Hypothesis,
            "applies to the upper-triangular constant-diagonal ring only".into(),
        ));
    };
    let v = view(ctx, Sidedness::Left, run)?;
    let ring = ctx.ring();
    let count_fail = |detail: String| {
        let mut b = v.builder();
        b.fact(Fact::IdealCount { count: v.len() });
        violated(b, detail)
    };
    let mut pos = [0usize; 9];
    for (k, (name, shape)) in UT3_SHAPES.iter().enumerate() {
        run.tick()?;
        let mut set = FixedBitSet::with_capacity(ring.order());
        for x in ring.elements() {
            let (a, b, c, d) = ut3_coords(m, x);
            if shape(a, b, c, d) {
                set.insert(x);
            }
        }
        match v.l.position_of_set(&set) {
            Some(p) => pos[k] = p,
            None => return count_fail(format!("{name} is not a left ideal")),
        }
    }
    if m == 2 && v.len() != 9 {
        return count_fail(format!("{} left ideals instead of 9", v.len()));
    }
    let (i1, i2, i3, i4, i5, i7, i8) = (pos[0], pos[1], pos[2], pos[3], pos[4], pos[6], pos[7]);
    for &i in &[i3, i4] {
        run.tick()?;
        if !v.nil_ess(i) || v.ess(i) {
            let mut b = v.builder();
            let ii = v.nil_fact(&mut b, i, None);
            b.fact(Fact::Essential {
                ideal: ii,
                within: None,
                holds: v.ess(i),
            });
            return violated(
                b,
                format!("{} is not nil-essential-but-not-essential", v.label(i)),
            );
        }
    }
    let partners: Vec<usize> = (0..v.len())
        .filter(|&mu| v.meet(i3, mu).map(|x| x == v.zero).unwrap_or(false))
        .collect();
    let mut expected = vec![i2, i4, i7];
    expected.sort_unstable();
    if m == 2 {
        run.tick()?;
        if partners != expected {
            return count_fail(format!(
                "I3 meets {} ideals trivially, expected 0, I4, I7",
                partners.len()
            ));
        }
        let ess: Vec<usize> = (0..v.len()).filter(|&i| v.ess(i)).collect();
        let mut want = vec![i5, i8, i1];
        want.sort_unstable();
        let nil_count = (0..v.len()).filter(|&i| v.nil_ess(i)).count();
        if ess != want || nil_count != 8 {
            return count_fail(format!(
                "{} essential and {nil_count} nil-essential ideals",
                ess.len()
            ));
        }
    } else {
        if !expected.iter().all(|e| partners.contains(e)) {
            return count_fail("0, I4 or I7 fails to meet I3 trivially".into());
        }
        run.note(format!(
            "over Z/{m} the lattice has {} left ideals; the nine listed shapes are present and {} ideals meet I3 trivially, all nilpotent",
            v.len(),
            partners.len()
        ));
    }
    let one_sided: Vec<&str> = [(i4, "I4"), (i7, "I7")]
        .iter()
        .filter(|(i, _)| !v.get(*i).is_closed_under(Sidedness::Right))
        .map(|(_, n)| *n)
        .collect();
    if !one_sided.is_empty() {
        run.note(format!(
            "{} are left ideals but not right ideals",
            one_sided.join(" and ")
        ));
    }
    Ok(Finding::Holds)
}

/// Nil-essentiality of `S⁻¹I` for every lattice ideal `I`, in lattice order.
fn localized_verdicts(
    ctx: &RingContext,
    v: &View,
    s: &MultiplicativeSet,
) -> Result<Vec<bool>, Stop> {
    let l = localize_ring(s)?;
    let lattice = crate::ideal::enumerate_ideals(l.result(), Sidedness::TwoSided, ctx.limits())?;
    let whole = lattice.whole().member_set().clone();
    let mut out = Vec::with_capacity(v.len());
    for i in 0..v.len() {
        let li = localize_ideal(&l, v.get(i))?;
        out.push(first_escape(&lattice, li.member_set(), &whole, true).is_none());
    }
    Ok(out)
}

fn localization_witness(
    v: &View,
    s: &MultiplicativeSet,
    i: usize,
    local: bool,
    essential: bool,
) -> Witness {
    let mut b = v.builder();
    b.multiplicative_set(s.members());
    let ii = v.nil_fact(&mut b, i, None);
    if essential {
        b.fact(Fact::Essential {
            ideal: ii,
            within: None,
            holds: v.ess(i),
        });
    }
    b.fact(Fact::LocalizedNilEssential {
        ideal: ii,
        holds: local,
    });
    b.finish()
}

fn set_label(s: &MultiplicativeSet) -> String {
    format!("{{{}}}", s.member_names().join(", "))
}

fn p222(ctx: &RingContext, run: &mut Run) -> Out {
    if let Some(skip) = commutative_only(ctx, run) {
        return Ok(skip);
    }
    if ctx.ring().is_zero_ring() {
        return Ok(Finding::Skip(
            SkipReason::Hypothesis,
            "in the zero ring the non-zero-divisors contain 0".into(),
        ));
    }
    run.note(NOETHERIAN);
    let v = ctx.view(Sidedness::TwoSided)?;
    let s = non_zero_divisors(ctx.ring())?;
    let local = localized_verdicts(ctx, &v, &s)?;
    for (i, &local) in local.iter().enumerate() {
        run.tick()?;
        if local != v.nil_ess(i) {
            return Ok(Finding::Violated(
                localization_witness(&v, &s, i, local, false),
                format!(
                    "{} and its localization at {} disagree",
                    v.label(i),
                    set_label(&s)
                ),
            ));
        }
    }
    Ok(Finding::Holds)
}

/// `I ⊴nil R ⇒ S⁻¹I ⊴nil S⁻¹R` over every 0-free multiplicative set; with
/// `hunt_converse` it searches for `S⁻¹I ⊴nil S⁻¹R` with `I` not nil-essential.
fn c223(ctx: &RingContext, run: &mut Run, hunt_converse: bool) -> Out {
    if let Some(skip) = commutative_only(ctx, run) {
        return Ok(skip);
    }
    if !hunt_converse {
        run.note(NOETHERIAN);
    }
    let v = ctx.view(Sidedness::TwoSided)?;
    let sets = all_multiplicative_sets(ctx.ring(), ctx.limits())?;
    if sets.is_empty() {
        run.note("the zero ring has no multiplicative set avoiding 0");
    }
    for s in &sets {
        let local = localized_verdicts(ctx, &v, s)?;
        for (i, &loc) in local.iter().enumerate() {
            run.tick()?;
            let bad = if hunt_converse {
                loc && !v.nil_ess(i)
            } else {
                v.nil_ess(i) && !loc
            };
            if bad {
                return Ok(Finding::Violated(
                    localization_witness(&v, s, i, loc, false),
                    format!(
                        "S = {}, I = {}: I nil-essential {}, S⁻¹I nil-essential {}",
                        set_label(s),
                        v.label(i),
                        v.nil_ess(i),
                        loc
                    ),
                ));
            }
        }
    }
    Ok(Finding::Holds)
}

/// Commutative, of prime-power order, and additively generated by `1`.
fn is_cyclic_prime_power(ctx: &RingContext) -> bool {
    let r = ctx.ring();
    let n = r.order();
    if !r.is_commutative() || n < 2 || r.additive_order(r.one()) != n {
        return false;
    }
    let p = (2..=n)
        .find(|&p| n.is_multiple_of(p))
        .expect("n ≥ 2 has a prime factor");
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
    }
    m == 1
}

fn e224(ctx: &RingContext, run: &mut Run) -> Out {
    if !is_cyclic_prime_power(ctx) {
        return Ok(Finding::Skip(
            SkipReason::Hypothesis,
            "applies to Z/p^n only".into(),
        ));
    }
    run.sidedness = Some(Sidedness::TwoSided);
    let v = ctx.view(Sidedness::TwoSided)?;
    let sets = all_multiplicative_sets(ctx.ring(), ctx.limits())?;
    let ring = ctx.ring();
    if sets
        .iter()
        .all(|s| s.members().all(|x| ring.inverse(x).is_some()))
    {
        run.note("every multiplicative set avoiding 0 consists of units");
    }
    for s in &sets {
        let local = localized_verdicts(ctx, &v, s)?;
        for (i, &loc) in local.iter().enumerate() {
            run.tick()?;
            if loc != v.ess(i) {
                return Ok(Finding::Violated(
                    localization_witness(&v, s, i, loc, true),
                    format!(
                        "S = {}, I = {}: I essential {}, S⁻¹I nil-essential {}",
                        set_label(s),
                        v.label(i),
                        v.ess(i),
                        loc
                    ),
                ));
            }
        }
    }
    Ok(Finding::Holds)
}
