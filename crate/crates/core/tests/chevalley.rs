mod common;

use proptest::prelude::*;
use rootgroups::chevalley::{sample_associativity, GroupElement};
use rootgroups::{Family, GroupTable};

fn table(family: Family, q: u32) -> GroupTable {
    GroupTable::build(family, q).unwrap()
}

#[test]
fn orders_are_q_to_the_sixth_with_distinct_indices() {
    let cases = [2, 3, 4, 5, 7, 8, 9].map(|q| (Family::G2, q)).into_iter().chain([2, 3, 4, 5].map(|q| (Family::Su4, q)));
    for (family, q) in cases {
        let t = table(family, q);
        assert_eq!(t.order(), (q as u64).pow(6), "{family} q={q}");
        for i in (0..t.order()).step_by(97) {
            assert_eq!(t.index(&t.element(i)), i);
        }
    }
}

#[test]
fn associativity_holds_for_every_triple_at_q2() {
    for family in [Family::G2, Family::Su4] {
        let t = table(family, 2);
        let els: Vec<GroupElement> = t.elements().collect();
        for a in &els {
            for b in &els {
                let ab = t.mul(a, b);
                for c in &els {
                    assert_eq!(t.mul(&ab, c), t.mul(a, &t.mul(b, c)));
                }
            }
        }
    }
}

#[test]
fn seeded_associativity_at_larger_q() {
    for family in [Family::G2, Family::Su4] {
        for q in [3, 4, 5] {
            assert!(sample_associativity(&table(family, q), 10_000, 1).is_ok(), "{family} q={q}");
        }
    }
}

#[test]
fn collection_matches_the_matrix_model_for_every_pair_at_q2() {
    let t = table(Family::Su4, 2);
    let oracle = t.matrix_oracle().unwrap();
    let els: Vec<GroupElement> = t.elements().collect();
    for a in &els {
        for b in &els {
            assert!(oracle.check_pair(a, b));
        }
    }
    assert!(table(Family::G2, 2).matrix_oracle().is_err());
}

#[test]
fn g2_commutators_equal_the_displayed_reduced_tables() {
    for q in [2, 3, 4, 5, 7, 9] {
        assert_eq!(common::table_mismatch(&table(Family::G2, q)), None, "q={q}");
    }
}

fn element_strategy(order: u64) -> impl Strategy<Value = u64> {
    0..order
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn group_axioms_on_random_elements(q in prop::sample::select(vec![3u32, 4, 5]), su4 in any::<bool>(),
                                       i in element_strategy(15625), j in element_strategy(15625), k in element_strategy(15625)) {
        let t = table(if su4 { Family::Su4 } else { Family::G2 }, q);
        let n = t.order();
        let (a, b, c) = (t.element(i % n), t.element(j % n), t.element(k % n));
        let e = t.identity();
        prop_assert_eq!(t.mul(&a, &e), a);
        prop_assert_eq!(t.mul(&a, &t.inv(&a)), e);
        prop_assert_eq!(t.inv(&t.mul(&a, &b)), t.mul(&t.inv(&b), &t.inv(&a)));
        prop_assert_eq!(t.mul(&t.mul(&a, &b), &c), t.mul(&a, &t.mul(&b, &c)));
        // x ↦ x^c is a homomorphism and the commutator identity [a,b]^c = [a^c,b^c] holds.
        prop_assert_eq!(t.conjugate(&t.comm(&a, &b), &c), t.comm(&t.conjugate(&a, &c), &t.conjugate(&b, &c)));
        prop_assert_eq!(t.pow(&a, t.element_order(&a) as i64), e);
    }
}
