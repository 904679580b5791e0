use std::sync::Arc;

use proptest::prelude::*;

use nilring::ideal::{ideal_intersection, ideal_power, ideal_product, ideal_sum};
use nilring::localization::{all_multiplicative_sets, localize_ideal, localize_ring};
use nilring::predicates::{is_essential, is_nil_essential, is_nilpotent_ideal, is_reduced, socle};
use nilring::{enumerate_ideals, FiniteRing, Limits, RingSpec, Sidedness};

fn spec_strategy() -> impl Strategy<Value = String> {
    let cyclic = (1usize..=40).prop_map(|n| format!("cyclic:{n}"));
    let pair = (2usize..=8, 2usize..=8).prop_map(|(a, b)| format!("product:cyclic:{a}+cyclic:{b}"));
    let triple = (2usize..=4, 2usize..=4, 2usize..=4)
        .prop_map(|(a, b, c)| format!("product:cyclic:{a}+cyclic:{b}+cyclic:{c}"));
    let quotient = (2usize..=6, 2usize..=6, 0usize..4).prop_map(|(a, b, g)| {
        format!(
            "quotient:product:cyclic:{a}+cyclic:{b}/({},0),(0,{})",
            g % a,
            g % b
        )
    });
    prop_oneof![
        4 => cyclic,
        3 => pair,
        2 => triple,
        1 => quotient,
        1 => Just("ut3:2".to_string()),
    ]
}

fn build(spec: &str) -> Arc<FiniteRing> {
    RingSpec::parse(spec)
        .unwrap()
        .build(&Limits::default(), None)
        .unwrap()
}

fn sides(ring: &FiniteRing) -> Vec<Sidedness> {
    if ring.is_commutative() {
        vec![Sidedness::TwoSided]
    } else {
        vec![Sidedness::Left, Sidedness::Right, Sidedness::TwoSided]
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn spec_round_trips(spec in spec_strategy()) {
        let parsed = RingSpec::parse(&spec).unwrap();
        prop_assert_eq!(RingSpec::parse(&parsed.to_string()).unwrap(), parsed.clone());
        let json = serde_json::to_string(&parsed).unwrap();
        prop_assert_eq!(serde_json::from_str::<RingSpec>(&json).unwrap(), parsed);
    }

    #[test]
    fn lattice_is_closed_and_lagrange_holds(spec in spec_strategy()) {
        let ring = build(&spec);
        for side in sides(&ring) {
            let lattice = enumerate_ideals(&ring, side, &Limits::default()).unwrap();
            prop_assert!(lattice.get(0).is_zero());
            prop_assert!(lattice.get(lattice.len() - 1).is_whole());
            for i in lattice.iter() {
                prop_assert_eq!(ring.order() % i.len(), 0);
                for j in lattice.iter() {
                    let s = ideal_sum(i, j).unwrap();
                    let m = ideal_intersection(i, j).unwrap();
                    prop_assert!(lattice.position(&s).is_some());
                    prop_assert!(lattice.position(&m).is_some());
                    prop_assert!(m.is_subset(i) && i.is_subset(&s));
                    if side == Sidedness::TwoSided {
                        prop_assert!(ideal_product(i, j).unwrap().is_subset(&m));
                    }
                }
            }
        }
    }

    #[test]
    fn nilpotency_index_and_power_chain(spec in spec_strategy()) {
        let ring = build(&spec);
        for side in sides(&ring) {
            let lattice = enumerate_ideals(&ring, side, &Limits::default()).unwrap();
            for i in lattice.iter() {
                let result = is_nilpotent_ideal(i);
                let mut prev = i.clone();
                for k in 2..=ring.order() + 1 {
                    let next = ideal_power(i, k).unwrap();
                    prop_assert!(next.is_subset(&prev));
                    prev = next;
                }
                prop_assert_eq!(result.nilpotent, prev.is_zero());
                if let Some(k) = result.index {
                    prop_assert!(k >= 1);
                    prop_assert!(ideal_power(i, k).unwrap().is_zero());
                    prop_assert!(k == 1 || !ideal_power(i, k - 1).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn essential_implies_nil_essential(spec in spec_strategy()) {
        let ring = build(&spec);
        for side in sides(&ring) {
            let lattice = enumerate_ideals(&ring, side, &Limits::default()).unwrap();
            for i in lattice.iter() {
                for within in lattice.iter().filter(|w| i.is_subset(w)) {
                    let e = is_essential(&lattice, i, Some(within)).unwrap().holds;
                    let ne = is_nil_essential(&lattice, i, Some(within)).unwrap().holds;
                    prop_assert!(!e || ne);
                    if is_reduced(&ring) {
                        prop_assert_eq!(e, ne);
                    }
                }
            }
            if ring.order() >= 2 {
                prop_assert!(is_nil_essential(&lattice, lattice.whole(), None).unwrap().holds);
                prop_assert!(!is_nil_essential(&lattice, lattice.zero(), None).unwrap().holds);
            }
        }
    }

    #[test]
    fn reduced_rings_have_socle_as_meet_of_nil_essentials(spec in spec_strategy()) {
        let ring = build(&spec);
        prop_assume!(ring.is_commutative() && is_reduced(&ring));
        let lattice = enumerate_ideals(&ring, Sidedness::TwoSided, &Limits::default()).unwrap();
        let mut meet = lattice.whole().clone();
        for i in lattice.iter() {
            if is_nil_essential(&lattice, i, None).unwrap().holds {
                meet = ideal_intersection(&meet, i).unwrap();
            }
        }
        let soc = socle(&lattice).unwrap();
        prop_assert_eq!(meet.member_set(), soc.member_set());
    }

    #[test]
    fn quotient_orders_multiply(spec in spec_strategy()) {
        let ring = build(&spec);
        let lattice = enumerate_ideals(&ring, Sidedness::TwoSided, &Limits::default()).unwrap();
        for i in lattice.iter() {
            let (q, f) = FiniteRing::quotient(i).unwrap();
            prop_assert_eq!(ring.order(), q.order() * i.len());
            prop_assert_eq!(f.kernel_set(), i.member_set().clone());
        }
    }

    #[test]
    fn localization_commutes_with_sums(n in 2usize..=30) {
        let ring = build(&format!("cyclic:{n}"));
        let limits = Limits::default();
        let lattice = enumerate_ideals(&ring, Sidedness::TwoSided, &limits).unwrap();
        for s in all_multiplicative_sets(&ring, &limits).unwrap() {
            let l = localize_ring(&s).unwrap();
            prop_assert!(l.result().order() >= 1);
            for i in lattice.iter() {
                for j in lattice.iter() {
                    let lhs = localize_ideal(&l, &ideal_sum(i, j).unwrap()).unwrap();
                    let rhs = ideal_sum(&localize_ideal(&l, i).unwrap(), &localize_ideal(&l, j).unwrap()).unwrap();
                    prop_assert_eq!(lhs.member_set(), rhs.member_set());
                    let meet = localize_ideal(&l, &ideal_intersection(i, j).unwrap()).unwrap();
                    let both = ideal_intersection(&localize_ideal(&l, i).unwrap(), &localize_ideal(&l, j).unwrap()).unwrap();
                    prop_assert!(meet.is_subset(&both));
                }
            }
        }
    }
}

#[test]
fn cyclic_ideal_sizes_are_divisors() {
    for n in 1..=60 {
        let ring = build(&format!("cyclic:{n}"));
        let lattice = enumerate_ideals(&ring, Sidedness::TwoSided, &Limits::default()).unwrap();
        let mut sizes: Vec<usize> = lattice.iter().map(|i| i.len()).collect();
        sizes.sort();
        let divisors: Vec<usize> = (1..=n).filter(|d| n % d == 0).collect();
        assert_eq!(sizes, divisors, "Z/{n}");
    }
}
