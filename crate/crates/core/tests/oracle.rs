use std::sync::Arc;

use fixedbitset::FixedBitSet;
use nilring::ideal::{ideal_quotient, radical_of_ideal};
use nilring::oracle;
use nilring::predicates::{
    classify, is_essential, is_nil_essential, jacobson_radical, nil_essential_by_element_criterion,
    socle,
};
use nilring::{enumerate_ideals, CorpusFile, FiniteRing, Ideal, Limits, Sidedness};

const SIDES: [Sidedness; 3] = [Sidedness::Left, Sidedness::Right, Sidedness::TwoSided];

fn corpus_rings() -> Vec<(String, Arc<FiniteRing>)> {
    let limits = Limits::default();
    CorpusFile::default_corpus()
        .rings
        .iter()
        .map(|s| (s.to_string(), s.build(&limits, None).unwrap()))
        .collect()
}

fn sorted_sets(lattice: &nilring::IdealLattice) -> Vec<FixedBitSet> {
    let mut sets: Vec<_> = lattice.iter().map(|i| i.member_set().clone()).collect();
    sets.sort_by_key(|s| (s.count_ones(..), s.ones().collect::<Vec<_>>()));
    sets
}

#[test]
fn enumeration_matches_subgroup_scan_on_small_corpus_rings() {
    let limits = Limits::default();
    let mut checked = 0;
    for (label, ring) in corpus_rings() {
        if ring.order() > 64 {
            continue;
        }
        for side in SIDES {
            let lattice = enumerate_ideals(&ring, side, &limits).unwrap();
            let mut scan = oracle::ideals_by_subgroup_scan(&ring, side);
            scan.sort_by_key(|s| (s.count_ones(..), s.ones().collect::<Vec<_>>()));
            assert_eq!(sorted_sets(&lattice), scan, "{label} {side}");
            checked += 1;
        }
    }
    assert!(checked >= 3 * 45);
}

#[test]
fn lattice_order_is_canonical() {
    let limits = Limits::default();
    for (label, ring) in corpus_rings().into_iter().filter(|(_, r)| r.order() <= 64) {
        let lattice = enumerate_ideals(&ring, Sidedness::TwoSided, &limits).unwrap();
        assert_eq!(
            lattice
                .iter()
                .map(|i| i.member_set().clone())
                .collect::<Vec<_>>(),
            sorted_sets(&lattice),
            "{label}"
        );
    }
}

#[test]
fn verdicts_match_scan_oracle() {
    let limits = Limits::default();
    let mut rings: Vec<_> = corpus_rings()
        .into_iter()
        .filter(|(_, r)| r.order() <= 24)
        .collect();
    rings.push(("ut3:2".into(), Arc::new(FiniteRing::ut3(2).unwrap())));
    for (label, ring) in rings {
        for side in SIDES {
            let lattice = enumerate_ideals(&ring, side, &limits).unwrap();
            for i in lattice.iter() {
                for within in lattice.iter().filter(|w| i.is_subset(w)) {
                    let ne = is_nil_essential(&lattice, i, Some(within)).unwrap().holds;
                    let e = is_essential(&lattice, i, Some(within)).unwrap().holds;
                    let (a, b) = (i.member_set(), within.member_set());
                    assert_eq!(
                        ne,
                        oracle::nil_essential_by_scan(&ring, side, a, b),
                        "{label} {side}"
                    );
                    assert_eq!(
                        e,
                        oracle::essential_by_scan(&ring, side, a, b),
                        "{label} {side}"
                    );
                }
                assert_eq!(
                    lattice.is_nilpotent_at(lattice.position(i).unwrap()),
                    oracle::is_nilpotent_by_products(&ring, i.member_set()),
                    "{label} {side}"
                );
            }
        }
    }
}

#[test]
fn element_criterion_agrees_on_commutative_corpus() {
    let limits = Limits::default();
    let mut disagreements = Vec::new();
    for (label, ring) in corpus_rings()
        .into_iter()
        .filter(|(_, r)| r.is_commutative())
    {
        let lattice = enumerate_ideals(&ring, Sidedness::TwoSided, &limits).unwrap();
        for i in lattice.iter().filter(|i| !i.is_zero()) {
            let definitional = is_nil_essential(&lattice, i, None).unwrap().holds;
            let criterion = nil_essential_by_element_criterion(i, None).unwrap();
            if definitional != criterion {
                disagreements.push(format!("{label} {}", i.label()));
            }
        }
    }
    assert!(disagreements.is_empty(), "{disagreements:?}");
}

fn z12_ideal(ring: &Arc<FiniteRing>, g: usize) -> Ideal {
    Ideal::generate(ring, &[g], Sidedness::TwoSided)
}

#[test]
fn z12_structure_table() {
    let limits = Limits::default();
    let r = Arc::new(FiniteRing::cyclic(12).unwrap());
    let lattice = enumerate_ideals(&r, Sidedness::TwoSided, &limits).unwrap();
    assert_eq!(lattice.len(), 6);
    assert_eq!(
        oracle::ideals_by_subgroup_scan(&r, Sidedness::TwoSided).len(),
        6
    );
    let flags = classify(&lattice);
    let pick = |f: &dyn Fn(usize) -> bool| -> Vec<FixedBitSet> {
        (0..lattice.len())
            .filter(|&k| f(k))
            .map(|k| lattice.get(k).member_set().clone())
            .collect()
    };
    let sets = |gs: &[usize]| -> Vec<FixedBitSet> {
        let mut v: Vec<_> = gs
            .iter()
            .map(|&g| z12_ideal(&r, g).member_set().clone())
            .collect();
        v.sort_by_key(|s| (s.count_ones(..), s.ones().collect::<Vec<_>>()));
        v
    };
    assert_eq!(pick(&|k| flags[k].nilpotent), sets(&[0, 6]));
    assert_eq!(pick(&|k| flags[k].essential), sets(&[2, 1]));
    assert_eq!(pick(&|k| flags[k].nil_essential), sets(&[2, 1]));
    for (k, flag) in flags.iter().enumerate() {
        let s = lattice.get(k).member_set();
        let whole = lattice.whole().member_set();
        assert_eq!(flag.nilpotent, oracle::is_nilpotent_by_products(&r, s));
        assert_eq!(
            flag.essential,
            oracle::essential_by_scan(&r, Sidedness::TwoSided, s, whole)
        );
        assert_eq!(
            flag.nil_essential,
            oracle::nil_essential_by_scan(&r, Sidedness::TwoSided, s, whole)
        );
    }
    assert_eq!(socle(&lattice).unwrap(), z12_ideal(&r, 2));
    assert_eq!(
        jacobson_radical(&r, &limits).unwrap().member_set(),
        z12_ideal(&r, 6).member_set()
    );
    let four = z12_ideal(&r, 4);
    assert_eq!(radical_of_ideal(&four).unwrap(), z12_ideal(&r, 2));
    assert_eq!(ideal_quotient(&four, 2).unwrap(), z12_ideal(&r, 2));
}
