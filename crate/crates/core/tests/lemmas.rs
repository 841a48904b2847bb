use std::collections::BTreeSet;

use rootgroups::grptool::Ambient;
use rootgroups::lemmas::{applicable, lookup, registry, verify, verify_all, LemmaOptions, Verdict};
use rootgroups::{Error, Family, GroupTable};

fn ambient(family: Family, q: u32) -> Ambient {
    Ambient::new(GroupTable::build(family, q).unwrap()).unwrap()
}

fn run(id: &str, family: Family, q: u32) -> rootgroups::lemmas::LemmaReport {
    verify(lookup(id, family).unwrap(), &ambient(family, q), &LemmaOptions::default()).unwrap()
}

#[test]
fn registry_ids_are_unique_per_family_and_resolvable() {
    let mut seen = BTreeSet::new();
    for l in registry() {
        assert!(seen.insert((l.id.to_lowercase(), l.family.name())), "duplicate {}", l.id);
        assert!(std::ptr::eq(lookup(l.id, l.family).unwrap(), l));
        assert!(std::ptr::eq(lookup(&l.id.to_uppercase(), l.family).unwrap(), l));
        assert!(!l.support.is_empty() && !l.statement.is_empty());
    }
    assert_eq!(seen.len(), 20);
}

#[test]
fn unknown_or_misapplied_ids_are_usage_errors() {
    assert!(matches!(lookup("no-such-lemma", Family::G2), Err(Error::Usage(_))));
    assert!(matches!(lookup("thomas", Family::Su4), Err(Error::Usage(_))));
    let g = ambient(Family::G2, 4);
    let r = verify(lookup("SL3Sub", Family::G2).unwrap(), &g, &LemmaOptions::default());
    assert!(matches!(r, Err(Error::Usage(_))));
}

#[test]
fn out_of_support_instances_are_skipped_with_a_reason() {
    let r = run("burnside-sanity", Family::G2, 3);
    assert!(matches!(&r.verdict, Verdict::Skipped { reason } if reason.contains("support")));
    assert!(applicable(Family::G2, 9).iter().any(|l| l.id == "exp3"));
}

#[test]
fn documented_examples_pass() {
    let r = run("G2Exponent", Family::G2, 4);
    assert!(r.passed());
    assert_eq!(r.detail, "exponent 8");
    for (id, family, q) in [
        ("thomas", Family::G2, 2),
        ("pStructure", Family::G2, 3),
        ("SL3Sub", Family::G2, 3),
        ("burnside-sanity", Family::Su4, 2),
        ("Q1Unique", Family::Su4, 3),
    ] {
        let r = run(id, family, q);
        assert!(r.passed(), "{id} {family} q={q}: {:?}", r.verdict);
    }
    assert!(run("pStructure", Family::G2, 3).detail.contains("nilpotency class 3"));
}

#[test]
fn q4cent_fails_at_p5_with_a_concrete_witness() {
    // x = x_a(1)x_b(1) has order 5, lies outside Q_1 ∪ Q_2 and centralises itself.
    let r = run("q4cent", Family::Su4, 5);
    match &r.verdict {
        Verdict::Fail { witness } => assert!(witness.starts_with("C_S(x_a(1)·x_b(1)) ≰ Q_1"), "{witness}"),
        v => panic!("expected a failure, got {v:?}"),
    }
    assert!(run("q4cent", Family::Su4, 3).passed());
}

#[test]
fn suites_are_deterministic_and_failures_carry_witnesses() {
    for (family, q) in [(Family::G2, 2), (Family::G2, 3), (Family::Su4, 2), (Family::Su4, 3)] {
        let g = ambient(family, q);
        let a = verify_all(&g, &LemmaOptions::default());
        let b = verify_all(&g, &LemmaOptions::default());
        assert_eq!(a, b);
        assert!(a.iter().all(|r| !r.failed()), "{family} q={q}");
        for r in &a {
            if let Verdict::Fail { witness } = &r.verdict {
                assert!(!witness.is_empty());
            }
        }
    }
}
