//! Executable checks for the statements about nil-essential ideals, a suite
//! runner over a ring corpus, and a budgeted counterexample hunter.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::corpus::RingSpec;
use crate::error::{Error, Result};
use crate::hom::{enumerate_module_homs, enumerate_ring_endomorphisms, ModuleHom, RingHom};
use crate::ideal::{enumerate_ideals, Ideal, IdealLattice, Sidedness};
use crate::limits::Limits;
use crate::predicates::jacobson_radical_from;
use crate::ring::FiniteRing;

mod checks;
mod hunt;
mod render;
mod witness;

pub use hunt::{hunt_counterexample, HuntClaim, HuntResult, HuntWitness};
pub use render::{
    fact_text, render_hunt_text, render_report_text, render_suite_text, render_witness_text,
};
pub use witness::{replay, Fact, Witness, WitnessHom, WitnessIdeal};

macro_rules! check_ids {
    ($($id:ident => $kind:ident, $title:literal;)*) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum CheckId {
            $($id,)*
        }

        impl CheckId {
            pub const ALL: &'static [CheckId] = &[$(CheckId::$id,)*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(CheckId::$id => stringify!($id),)*
                }
            }

            pub fn kind(self) -> CheckKind {
                match self {
                    $(CheckId::$id => CheckKind::$kind,)*
                }
            }

            /// One-line statement of what the check asserts.
            pub fn title(self) -> &'static str {
                match self {
                    $(CheckId::$id => $title,)*
                }
            }
        }
    };
}

check_ids! {
    P201 => Theorem, "an ideal containing a nil-essential ideal is nil-essential";
    C202 => Theorem, "if I1 ∩ ... ∩ In is nil-essential then every Ij is";
    X202 => Counterexample, "two nil-essential ideals whose intersection is not nil-essential";
    C203 => Theorem, "a sum with a nil-essential summand is nil-essential";
    C204 => Theorem, "if I1 ... In is nil-essential then every Ii is";
    C205 => Theorem, "if some power I^n is nil-essential then I is";
    X205 => Counterexample, "a nil-essential ideal whose square is not nil-essential";
    P206 => Theorem, "I ⊴nil K gives I ⊴nil J ⊴nil K; (I ∩ L) ⊴nil K gives I, L ⊴nil K";
    P207 => Theorem, "μ ∩ M = 0 for a maximal M forces μ = 0 or μ non-nilpotent";
    C208 => Theorem, "a nil-essential maximal ideal meets every nonzero ideal";
    C209 => Theorem, "no proper nil-essential ideal ⇔ no maximal nil-essential ideal ⇔ semisimple";
    C210 => Theorem, "μ ∩ J(R) = 0 forces μ = 0 or μ non-nilpotent";
    R211a => Theorem, "a nil-essential J(R) is essential; semisimple rings have no nil-essential J(R), maximal or prime ideal";
    L212 => Theorem, "nil-essential ⇔ every non-nilpotent x has rx ∈ I with rx ≠ 0";
    L213 => Theorem, "I ⊴nil J ⇔ every non-nilpotent x ∈ J has rx ∈ I with rx ≠ 0";
    P214 => Theorem, "I ⊴nil rad(I)";
    P215 => Theorem, "for J1 ∩ J2 = 0: I1 ⊴nil J1 and I2 ⊴nil J2 ⇔ I1 ⊕ I2 ⊴nil J1 ⊕ J2";
    P216 => Theorem, "I ⊴nil J gives (I:a) ⊴nil R for every a ∈ J";
    D217 => Theorem, "a monomorphism is nil-essential exactly when its image is nil-essential";
    P218 => Theorem, "I ⊴nil J ⇔ inclusion is a nil-essential mono ⇔ kernels missing I are nilpotent";
    P219 => Theorem, "preimages of nil-essential ideals under endomorphisms are nil-essential";
    R220 => Theorem, "the ideal list of the upper-triangular ring and its nil-essential members";
    P222 => Theorem, "I nil-essential ⇔ S⁻¹I nil-essential for S the non-zero-divisors";
    C223 => Theorem, "I nil-essential ⇒ S⁻¹I nil-essential for every multiplicative S";
    X223 => Counterexample, "S⁻¹I nil-essential while I is not";
    E224 => Theorem, "in Z/p^n: I essential ⇔ S⁻¹I nil-essential for every multiplicative S";
}

/// Numbered statements that have no executable check, with the reason.
pub const DOCUMENTATION_ONLY: &[(&str, &str)] = &[(
    "R211b",
    "every nonzero ideal of the integers is nil-essential; the ring is infinite and no finite surrogate is substituted",
)];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    /// A universally quantified statement that should hold on every ring.
    Theorem,
    /// An existence claim: the check passes when a witness is found.
    Counterexample,
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckId::ALL
            .iter()
            .copied()
            .find(|c| c.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::InvalidParameter(format!("unknown check `{s}`")))
    }
}

impl Serialize for CheckId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for CheckId {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Refuted,
    Skipped,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SkipReason {
    /// The ring does not satisfy the statement's hypotheses.
    Hypothesis,
    /// An enumeration the check needs exceeds a cap.
    Cap,
    /// An existence check found no witness in this ring.
    NoWitness,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check_id: CheckId,
    pub kind: CheckKind,
    pub ring: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sidedness: Option<Sidedness>,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub skip_reason: Option<SkipReason>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub instances: u64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

impl CheckReport {
    /// A counterexample check that found its witness.
    pub fn is_confirmed(&self) -> bool {
        self.kind == CheckKind::Counterexample && self.status == Status::Verified
    }
}

type HomCache = HashMap<(Sidedness, usize, usize), Arc<Vec<ModuleHom>>>;

/// A ring together with lazily built lattices, homs and endomorphisms shared
/// by all checks run on it.
pub struct RingContext {
    label: String,
    ring: Arc<FiniteRing>,
    limits: Limits,
    lattices: [OnceLock<Arc<IdealLattice>>; 3],
    views: [OnceLock<Arc<checks::View>>; 3],
    jacobson: OnceLock<Ideal>,
    endos: [OnceLock<Arc<Vec<RingHom>>>; 2],
    homs: Mutex<HomCache>,
}

impl RingContext {
    pub fn new(label: impl Into<String>, ring: Arc<FiniteRing>, limits: Limits) -> Self {
        RingContext {
            label: label.into(),
            ring,
            limits,
            lattices: Default::default(),
            views: Default::default(),
            jacobson: OnceLock::new(),
            endos: Default::default(),
            homs: Mutex::new(HashMap::new()),
        }
    }

    pub fn from_spec(spec: &RingSpec, limits: &Limits, base_dir: Option<&Path>) -> Result<Self> {
        Ok(Self::new(
            spec.to_string(),
            spec.build(limits, base_dir)?,
            *limits,
        ))
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    /// Two-sided ideals on commutative rings, left ideals otherwise.
    pub fn default_sidedness(&self) -> Sidedness {
        if self.ring.is_commutative() {
            Sidedness::TwoSided
        } else {
            Sidedness::Left
        }
    }

    pub fn lattice(&self, side: Sidedness) -> Result<Arc<IdealLattice>> {
        // on a commutative ring all three lattices coincide
        let side = if self.ring.is_commutative() {
            Sidedness::TwoSided
        } else {
            side
        };
        let slot = &self.lattices[side as usize];
        if let Some(l) = slot.get() {
            return Ok(l.clone());
        }
        let l = Arc::new(enumerate_ideals(&self.ring, side, &self.limits)?);
        Ok(slot.get_or_init(|| l).clone())
    }

    pub(crate) fn view(&self, side: Sidedness) -> Result<Arc<checks::View>> {
        let lattice = self.lattice(side)?;
        let slot = &self.views[lattice.sidedness() as usize];
        if let Some(v) = slot.get() {
            return Ok(v.clone());
        }
        let v = Arc::new(checks::View::new(lattice));
        Ok(slot.get_or_init(|| v).clone())
    }

    pub fn jacobson(&self) -> Result<Ideal> {
        if let Some(j) = self.jacobson.get() {
            return Ok(j.clone());
        }
        let j = jacobson_radical_from(&*self.lattice(Sidedness::Left)?)?;
        Ok(self.jacobson.get_or_init(|| j).clone())
    }

    /// Ring endomorphisms, restricted to unital ones when `unital` is set.
    pub fn endomorphisms(&self, unital: bool) -> Result<Arc<Vec<RingHom>>> {
        let slot = &self.endos[unital as usize];
        if let Some(e) = slot.get() {
            return Ok(e.clone());
        }
        let e = Arc::new(enumerate_ring_endomorphisms(
            &self.ring,
            unital,
            &self.limits,
        )?);
        Ok(slot.get_or_init(|| e).clone())
    }

    /// `Hom(J, K)` for lattice positions `j`, `k`.
    pub fn homs(&self, side: Sidedness, j: usize, k: usize) -> Result<Arc<Vec<ModuleHom>>> {
        let key = (side, j, k);
        if let Some(h) = self.homs.lock().expect("hom cache").get(&key) {
            return Ok(h.clone());
        }
        let lattice = self.lattice(side)?;
        let h = Arc::new(enumerate_module_homs(
            lattice.get(j),
            lattice.get(k),
            &self.limits,
        )?);
        self.homs.lock().expect("hom cache").insert(key, h.clone());
        Ok(h)
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct CheckOptions {
    /// Overrides the default sidedness policy.
    pub sidedness: Option<Sidedness>,
    /// Records wall-clock time in each report.
    pub timings: bool,
    /// Lets endomorphism checks range over non-unital ring maps too.
    pub non_unital: bool,
}

pub fn run_check(ctx: &RingContext, id: CheckId, options: &CheckOptions) -> CheckReport {
    let started = Instant::now();
    let side = options.sidedness.unwrap_or_else(|| ctx.default_sidedness());
    let mut run = checks::Run::new(None);
    run.non_unital = options.non_unital;
    let outcome = checks::dispatch(ctx, id, side, &mut run);
    let mut report = CheckReport {
        check_id: id,
        kind: id.kind(),
        ring: ctx.label.clone(),
        sidedness: run.sidedness,
        status: Status::Verified,
        skip_reason: None,
        detail: None,
        witness: None,
        instances: run.instances,
        notes: run.notes,
        elapsed_ms: None,
    };
    match (outcome, id.kind()) {
        (Ok(checks::Finding::Holds), CheckKind::Theorem) => {}
        (Ok(checks::Finding::Holds), CheckKind::Counterexample) => {
            report.status = Status::Skipped;
            report.skip_reason = Some(SkipReason::NoWitness);
            report.detail = Some("no witness in this ring".into());
        }
        (Ok(checks::Finding::Violated(w, detail)), kind) => {
            report.status = match kind {
                CheckKind::Theorem => Status::Refuted,
                CheckKind::Counterexample => Status::Verified,
            };
            report.detail = Some(detail);
            report.witness = Some(w);
        }
        (Ok(checks::Finding::Skip(reason, detail)), _) => {
            report.status = Status::Skipped;
            report.skip_reason = Some(reason);
            report.detail = Some(detail);
        }
        (Err(checks::Stop::Budget), _) => unreachable!("checks run without a budget"),
        (Err(checks::Stop::Error(e)), _) if e.is_cap() => {
            report.status = Status::Skipped;
            report.skip_reason = Some(SkipReason::Cap);
            report.detail = Some(e.to_string());
        }
        (Err(checks::Stop::Error(e)), _) => {
            report.status = Status::Refuted;
            report.detail = Some(format!("error: {e}"));
        }
    }
    if options.timings {
        report.elapsed_ms = Some(started.elapsed().as_secs_f64() * 1e3);
    }
    report
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteSummary {
    pub rings: usize,
    pub verified: usize,
    pub refuted: usize,
    pub skipped: usize,
    /// Number of rings on which each selected counterexample check found a witness.
    pub confirmed: BTreeMap<CheckId, usize>,
}

impl SuiteSummary {
    pub fn success(&self) -> bool {
        self.refuted == 0
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub reports: Vec<CheckReport>,
    pub summary: SuiteSummary,
}

#[derive(Debug, Clone, Default)]
pub struct SuiteOptions {
    /// Parallel width; `0` uses every core.
    pub jobs: usize,
    pub check: CheckOptions,
    /// Directory that relative table paths are resolved against.
    pub base_dir: Option<std::path::PathBuf>,
}

/// Runs `selection` (the whole registry when empty) on every ring. Reports come
/// out in corpus order, then registry order, whatever the parallel width.
pub fn run_suite(
    rings: &[RingSpec],
    selection: &[CheckId],
    limits: &Limits,
    options: &SuiteOptions,
) -> Result<SuiteReport> {
    let mut selection: Vec<CheckId> = if selection.is_empty() {
        CheckId::ALL.to_vec()
    } else {
        selection.to_vec()
    };
    selection.sort();
    selection.dedup();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.jobs)
        .build()
        .map_err(|e| Error::InvalidParameter(e.to_string()))?;
    let base_dir = options.base_dir.as_deref();
    let reports = pool.install(|| -> Result<Vec<CheckReport>> {
        let contexts = rings
            .par_iter()
            .map(
                |spec| match RingContext::from_spec(spec, limits, base_dir) {
                    Ok(ctx) => Ok(Ok(ctx)),
                    Err(e) if e.is_cap() => Ok(Err(e.to_string())),
                    Err(e) => Err(Error::CorpusParse(format!("{spec}: {e}"))),
                },
            )
            .collect::<Result<Vec<_>>>()?;
        let jobs: Vec<(usize, CheckId)> = (0..rings.len())
            .flat_map(|r| selection.iter().map(move |&c| (r, c)))
            .collect();
        Ok(jobs
            .par_iter()
            .map(|&(r, id)| match &contexts[r] {
                Ok(ctx) => run_check(ctx, id, &options.check),
                Err(cap) => CheckReport {
                    check_id: id,
                    kind: id.kind(),
                    ring: rings[r].to_string(),
                    sidedness: None,
                    status: Status::Skipped,
                    skip_reason: Some(SkipReason::Cap),
                    detail: Some(cap.clone()),
                    witness: None,
                    instances: 0,
                    notes: Vec::new(),
                    elapsed_ms: None,
                },
            })
            .collect())
    })?;
    let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
    let confirmed = selection
        .iter()
        .filter(|c| c.kind() == CheckKind::Counterexample)
        .map(|&c| {
            let n = reports
                .iter()
                .filter(|r| r.check_id == c && r.is_confirmed())
                .count();
            (c, n)
        })
        .collect();
    let summary = SuiteSummary {
        rings: rings.len(),
        verified: count(Status::Verified),
        refuted: count(Status::Refuted),
        skipped: count(Status::Skipped),
        confirmed,
    };
    Ok(SuiteReport { reports, summary })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_ids_round_trip() {
        for &c in CheckId::ALL {
            assert_eq!(c.as_str().parse::<CheckId>().unwrap(), c);
            let json = serde_json::to_string(&c).unwrap();
            assert_eq!(serde_json::from_str::<CheckId>(&json).unwrap(), c);
        }
        assert!("P221".parse::<CheckId>().is_err());
    }

    #[test]
    fn every_numbered_statement_is_registered() {
        let mut labels: Vec<String> = (201..=224)
            .filter(|&n| n != 221)
            .map(|n| n.to_string())
            .collect();
        labels.push("211b".into());
        for label in labels {
            let covered = CheckId::ALL
                .iter()
                .any(|c| c.as_str()[1..].starts_with(&label))
                || DOCUMENTATION_ONLY.iter().any(|(id, _)| id[1..] == label);
            assert!(covered, "{label}");
        }
        assert_eq!(CheckId::ALL.len(), 26);
    }
}
