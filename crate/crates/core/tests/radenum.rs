use std::collections::BTreeSet;

use rootgroups::grptool::{
    extend, is_s_centric, maximal_subgroups, normalizer_in, Ambient, FiniteGroup, Subgroup,
};
use rootgroups::radenum::{classify_rc, enumerate_subgroups_top_down, EnumOptions, SubgroupCatalog};
use rootgroups::{Family, GroupTable};

fn ambient(family: Family) -> Ambient {
    Ambient::new(GroupTable::build(family, 2).unwrap()).unwrap()
}

fn catalog(g: &Ambient, fast: bool) -> SubgroupCatalog {
    SubgroupCatalog::build(g, EnumOptions { fast, ..EnumOptions::default() })
}

fn element_sets(hs: &[Subgroup]) -> BTreeSet<Vec<u32>> {
    hs.iter().map(|h| h.elements().to_vec()).collect()
}

#[test]
fn bottom_up_and_top_down_enumerations_agree() {
    for family in [Family::G2, Family::Su4] {
        let g = ambient(family);
        let c = catalog(&g, true);
        assert!(c.complete);
        let top_down = enumerate_subgroups_top_down(&g, &g.whole());
        assert_eq!(element_sets(&c.subgroups), element_sets(&top_down), "{family}");
        assert_eq!(c.classes.iter().map(|k| k.size()).sum::<usize>(), c.subgroups.len());
        assert!(c.position(&Subgroup::trivial(&g)).is_some());
        assert!(c.position(&g.whole()).is_some());
    }
}

#[test]
fn catalog_is_closed_under_cyclic_extension() {
    let g = ambient(Family::G2);
    let s = g.whole();
    let c = catalog(&g, true);
    for h in &c.subgroups {
        for &x in normalizer_in(&g, &s, h).elements() {
            if !h.contains(x) && h.contains(g.pow(x, 2)) {
                assert!(c.position(&extend(&g, h, &[x])).is_some());
            }
        }
    }
}

#[test]
fn maximal_subgroups_agree_with_grptool() {
    for family in [Family::G2, Family::Su4] {
        let g = ambient(family);
        let c = catalog(&g, true);
        let from_catalog: Vec<Subgroup> = c.subgroups.iter().filter(|h| h.order() == 32).cloned().collect();
        assert_eq!(element_sets(&from_catalog), element_sets(&maximal_subgroups(&g, &g.whole())));
    }
}

#[test]
fn centric_flag_is_constant_on_classes() {
    for family in [Family::G2, Family::Su4] {
        let g = ambient(family);
        let s = g.whole();
        let c = catalog(&g, true);
        for class in &c.classes {
            assert!(class.members.iter().all(|&m| is_s_centric(&g, &s, &c.subgroups[m]) == class.centric));
        }
    }
}

#[test]
fn fast_and_full_radical_tests_agree() {
    for family in [Family::G2, Family::Su4] {
        let g = ambient(family);
        let fast = catalog(&g, true);
        let full = catalog(&g, false);
        for (a, b) in fast.classes.iter().zip(&full.classes) {
            assert_eq!(a.members, b.members);
            let decide = |k: &rootgroups::radenum::SubgroupClass| k.radical.as_ref().map(|v| v.decided());
            assert_eq!(decide(a), decide(b), "{family}: class of order {}", a.order);
            assert!(decide(b) != Some(None));
        }
    }
}

#[test]
fn survivors_match_both_propositions() {
    for (family, survivors, orders) in [
        (Family::G2, 8, vec![8, 8, 8, 8, 8, 32, 32, 64]),
        (Family::Su4, 10, vec![8, 8, 8, 8, 16, 32, 32, 32, 32, 64]),
    ] {
        let g = ambient(family);
        let report = classify_rc(&g, &catalog(&g, true));
        assert!(report.matches, "{family}: {:?}", report.discrepancies);
        assert_eq!(report.summary.undecided, 0);
        let got: Vec<u32> = report.survivors().map(|r| r.order).collect();
        assert_eq!(got.len(), survivors);
        assert_eq!(got, orders);
        assert!(report.survivors().any(|r| r.label == "S"));
    }
}
