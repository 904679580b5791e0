use std::sync::Arc;

use nilring::registry::{
    hunt_counterexample, replay, run_check, run_suite, CheckKind, CheckOptions, Fact, HuntClaim,
    SkipReason, Status, SuiteOptions, Witness,
};
use nilring::{CheckId, CorpusFile, FiniteRing, Limits, RingContext, RingSpec};

fn suite(jobs: usize) -> nilring::registry::SuiteReport {
    let corpus = CorpusFile::default_corpus();
    let options = SuiteOptions {
        jobs,
        check: CheckOptions::default(),
        base_dir: None,
    };
    run_suite(&corpus.rings, &[], &Limits::default(), &options).unwrap()
}

#[test]
fn default_corpus_suite_has_no_refutations() {
    let report = suite(4);
    let summary = &report.summary;
    assert_eq!(summary.refuted, 0);
    assert_eq!(summary.rings, CorpusFile::default_corpus().rings.len());
    assert_eq!(report.reports.len(), summary.rings * CheckId::ALL.len());
    for x in [CheckId::X202, CheckId::X205, CheckId::X223] {
        assert!(summary.confirmed.get(&x).copied().unwrap_or(0) > 0, "{x:?}");
    }
    for r in &report.reports {
        match r.skip_reason {
            None | Some(SkipReason::Hypothesis) => {}
            Some(SkipReason::NoWitness) => assert_eq!(r.kind, CheckKind::Counterexample),
            Some(SkipReason::Cap) => panic!("{} {} hit a cap", r.check_id.as_str(), r.ring),
        }
    }
}

#[test]
fn witnesses_replay_and_round_trip() {
    let limits = Limits::default();
    let report = suite(0);
    let mut replayed = 0;
    for r in report.reports.iter().filter(|r| r.witness.is_some()) {
        let w = r.witness.as_ref().unwrap();
        let ring = RingSpec::parse(&r.ring)
            .unwrap()
            .build(&limits, None)
            .unwrap();
        replay(w, &ring, &limits).unwrap();
        let back: Witness = serde_json::from_str(&serde_json::to_string(w).unwrap()).unwrap();
        assert_eq!(&back, w);
        replayed += 1;
    }
    assert!(replayed > 0);
}

#[test]
fn tampered_witness_fails_replay() {
    let limits = Limits::default();
    let ring = Arc::new(FiniteRing::ut3(2).unwrap());
    let ctx = RingContext::new("ut3:2", ring.clone(), limits);
    let report = run_check(&ctx, CheckId::X205, &CheckOptions::default());
    assert!(report.is_confirmed());
    let mut w = report.witness.unwrap();
    replay(&w, &ring, &limits).unwrap();
    let fact = w
        .facts
        .iter_mut()
        .find_map(|f| match f {
            Fact::NilEssential { holds, .. } => Some(holds),
            _ => None,
        })
        .unwrap();
    *fact = !*fact;
    assert!(replay(&w, &ring, &limits).is_err());
}

#[test]
fn suite_is_deterministic_across_widths() {
    let a = serde_json::to_string(&suite(1)).unwrap();
    let b = serde_json::to_string(&suite(4)).unwrap();
    assert_eq!(a, b);
}

#[test]
fn remark_on_ut3_over_z2() {
    let limits = Limits::default();
    let ctx = RingContext::new("ut3:2", Arc::new(FiniteRing::ut3(2).unwrap()), limits);
    let report = run_check(&ctx, CheckId::R220, &CheckOptions::default());
    assert_eq!(report.status, Status::Verified, "{:?}", report.detail);
    let other = RingContext::new("cyclic:4", Arc::new(FiniteRing::cyclic(4).unwrap()), limits);
    let skipped = run_check(&other, CheckId::R220, &CheckOptions::default());
    assert_eq!(skipped.skip_reason, Some(SkipReason::Hypothesis));
}

#[test]
fn hunts() {
    let limits = Limits::default();
    let rings = CorpusFile::default_corpus().rings;
    let x223 = hunt_counterexample(
        HuntClaim::Check(CheckId::X223),
        &rings,
        100_000,
        &limits,
        None,
    )
    .unwrap();
    let w = x223.witness.unwrap();
    assert_eq!(w.ring, "cyclic:6");
    assert_eq!(
        w.witness.multiplicative_set,
        Some(vec!["1".to_string(), "3".to_string()])
    );
    assert!(x223.consumed <= 100_000);

    let converse =
        hunt_counterexample(HuntClaim::P206Converse, &rings, 100_000, &limits, None).unwrap();
    assert_eq!(converse.witness.unwrap().ring, "cyclic:4");

    let p201 = hunt_counterexample(
        HuntClaim::Check(CheckId::P201),
        &rings,
        100_000,
        &limits,
        None,
    )
    .unwrap();
    assert!(p201.witness.is_none());

    let fields: Vec<RingSpec> = [2, 3, 5, 7]
        .iter()
        .map(|&n| RingSpec::Cyclic { n })
        .collect();
    let none = hunt_counterexample(
        HuntClaim::Check(CheckId::X223),
        &fields,
        100_000,
        &limits,
        None,
    )
    .unwrap();
    assert!(none.exhausted && none.witness.is_none());

    let tiny = hunt_counterexample(
        HuntClaim::Check(CheckId::X223),
        &rings[5..],
        3,
        &limits,
        None,
    )
    .unwrap();
    assert!(tiny.budget_spent && tiny.consumed <= 3);
}
