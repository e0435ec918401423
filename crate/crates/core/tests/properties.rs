use std::sync::OnceLock;

use orbitposet_core::{
    Bounds, CartanDatum, DivisorSet, EmbeddingModel, OrbitSpace, ParabolicSet, RootSystem,
    WeylGroup,
};
use proptest::prelude::*;

fn b3() -> &'static WeylGroup {
    static G: OnceLock<WeylGroup> = OnceLock::new();
    G.get_or_init(|| {
        let rs = RootSystem::new(CartanDatum::from_type("B3").unwrap()).unwrap();
        WeylGroup::new(rs, 1_000_000).unwrap()
    })
}

fn wonderful_b2() -> &'static OrbitSpace {
    static S: OnceLock<OrbitSpace> = OnceLock::new();
    S.get_or_init(|| {
        let m = EmbeddingModel::wonderful(CartanDatum::from_type("B2").unwrap());
        OrbitSpace::new(m, Bounds::default()).unwrap()
    })
}

proptest! {
    #[test]
    fn multiplication_is_associative(a in 0usize..48, b in 0usize..48, c in 0usize..48) {
        let g = b3();
        let (x, y, z) = (g.element(a), g.element(b), g.element(c));
        prop_assert_eq!(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)));
        prop_assert_eq!(g.mul(x, g.identity()), x);
        prop_assert_eq!(g.inverse(g.mul(x, y)), g.mul(g.inverse(y), g.inverse(x)));
    }

    #[test]
    fn bruhat_is_graded_partial_order(a in 0usize..48, b in 0usize..48, c in 0usize..48) {
        let g = b3();
        let (x, y, z) = (g.element(a), g.element(b), g.element(c));
        prop_assert!(g.bruhat_leq(x, x));
        if g.bruhat_leq(x, y) && g.bruhat_leq(y, x) {
            prop_assert_eq!(x, y);
        }
        if g.bruhat_leq(x, y) && g.bruhat_leq(y, z) {
            prop_assert!(g.bruhat_leq(x, z));
        }
        if g.bruhat_leq(x, y) {
            prop_assert!(g.length(x) <= g.length(y));
            prop_assert_eq!(g.length(x) == g.length(y), x == y);
        }
        // inversion is an automorphism of the Bruhat order
        prop_assert_eq!(g.bruhat_leq(x, y), g.bruhat_leq(g.inverse(x), g.inverse(y)));
    }

    #[test]
    fn word_text_round_trips(word in proptest::collection::vec(1usize..=3, 0..12)) {
        let g = b3();
        let text = if word.is_empty() {
            "e".to_string()
        } else {
            word.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
        };
        let x = g.parse(&text).unwrap();
        prop_assert!(g.length(x) <= word.len());
        prop_assert_eq!(g.length(x) % 2, word.len() % 2);
        prop_assert_eq!(g.parse(&g.format(x)).unwrap(), x);
    }

    #[test]
    fn coset_factor_is_idempotent(a in 0usize..48, bits in 0u32..8) {
        let g = b3();
        let j = ParabolicSet::from_bits(bits);
        let (rep, part) = g.coset_factor(g.element(a), j);
        prop_assert_eq!(g.coset_factor(rep, j), (rep, g.identity()));
        prop_assert!(g.support(part).is_subset(j));
        prop_assert!(g.descents_right(rep).intersection(j).is_empty());
    }

    #[test]
    fn containment_forces_stratum_and_v_order(a in 0usize..136, b in 0usize..136) {
        let s = wonderful_b2();
        let g = s.group();
        let (oa, ob) = (s.orbits()[a], s.orbits()[b]);
        if s.closure_leq(&oa, &ob) {
            prop_assert!(oa.k.is_subset(ob.k));
            prop_assert!(g.bruhat_leq(oa.v, ob.v));
            let u = s.closure_witness(&oa, &ob).unwrap();
            prop_assert!(g.support(u).is_subset(s.complement(oa.k).unwrap()));
        }
        prop_assert_eq!(s.closure_leq(&oa, &ob), s.closure_leq_bclosure(&oa, &ob));
    }
}

#[test]
fn count_identity_on_custom_family() {
    // A2 with one divisor mapping onto {1} and a second onto {1,2}
    let m = EmbeddingModel::new(
        CartanDatum::from_type("A2").unwrap(),
        2,
        vec![
            orbitposet_core::Member { k: DivisorSet::EMPTY, p: ParabolicSet::EMPTY },
            orbitposet_core::Member {
                k: DivisorSet::from_labels(&[1]),
                p: ParabolicSet::from_labels(&[1]),
            },
            orbitposet_core::Member {
                k: DivisorSet::from_labels(&[1, 2]),
                p: ParabolicSet::from_labels(&[1, 2]),
            },
        ],
    )
    .unwrap();
    let s = OrbitSpace::new(m, Bounds::default()).unwrap();
    // |W^{I}|*6 + |W^{2}|*6 + |W^{}|*6 = 6 + 18 + 36
    assert_eq!(s.orbits().len(), 60);
    let report = s.verify_suite().unwrap();
    for id in [
        orbitposet_core::CheckId::PosetAxioms,
        orbitposet_core::CheckId::UniqueMaximum,
        orbitposet_core::CheckId::CountIdentity,
        orbitposet_core::CheckId::CriterionEquivalence,
        orbitposet_core::CheckId::ContainmentV,
        orbitposet_core::CheckId::ContainmentSameV,
    ] {
        assert!(report.get(id).unwrap().passed(), "{id}: {:?}", report.get(id));
    }
}
