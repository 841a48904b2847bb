use std::collections::{BTreeMap, BTreeSet};

use rootgroups::autom::{aut_group, inner_automorphism, p_core, AutCaps, Perm};
use rootgroups::chevalley::g2;
use rootgroups::grptool::{center, closure, Ambient, DenseGroup, FiniteGroup, Subgroup};
use rootgroups::{Family, GroupTable};

fn ambient(family: Family, q: u32) -> Ambient {
    Ambient::new(GroupTable::build(family, q).unwrap()).unwrap()
}

fn aut_order<G: FiniteGroup>(g: &G, h: &Subgroup) -> u64 {
    let d = DenseGroup::from_subgroup(g, h).unwrap();
    aut_group(&d, AutCaps::default()).unwrap().order()
}

#[test]
fn gl3_2_and_its_trivial_2_core() {
    let g = ambient(Family::G2, 2);
    let e = g.root_product(&[g2::A2B, g2::A3B, g2::A3B2]);
    let d = DenseGroup::from_subgroup(&g, &e).unwrap();
    let aut = aut_group(&d, AutCaps::default()).unwrap();
    assert_eq!(aut.order(), 168);
    assert_eq!(p_core(&aut.group, 2, &[]).unwrap().order(), 1);
    assert_eq!(p_core(&aut.group, 7, &[]).unwrap().order(), 1);
}

/// Known automorphism group orders of the groups of order 8, keyed by
/// (abelian, number of involutions, exponent).
fn order_eight_oracle() -> BTreeMap<(bool, usize, u64), u64> {
    BTreeMap::from([
        ((true, 1, 8), 4),     // C8
        ((true, 3, 4), 8),     // C4 × C2
        ((true, 7, 2), 168),   // C2³
        ((false, 5, 4), 8),    // D8
        ((false, 1, 4), 24),   // Q8
    ])
}

#[test]
fn automorphism_orders_of_order_eight_subgroups_match_the_classification() {
    let oracle = order_eight_oracle();
    for family in [Family::G2, Family::Su4] {
        let g = ambient(family, 2);
        let mut seen = BTreeSet::new();
        let mut kinds = BTreeSet::new();
        for a in 1..g.order() {
            for b in a..g.order() {
                let h = closure(&g, &[a, b]);
                if h.order() != 8 || !seen.insert(h.elements().to_vec()) {
                    continue;
                }
                let involutions = h.elements().iter().filter(|&&x| g.element_order(x) == 2).count();
                let key = (h.is_abelian(&g), involutions, h.exponent(&g));
                assert_eq!(aut_order(&g, &h), oracle[&key], "{family}: {key:?}");
                kinds.insert(key);
            }
        }
        assert!(kinds.len() >= 3, "{family} has only {kinds:?}");
    }
}

#[test]
fn inner_automorphisms_form_s_mod_z() {
    for (family, q) in [(Family::G2, 2), (Family::Su4, 2)] {
        let g = ambient(family, q);
        let s = g.whole();
        let d = DenseGroup::from_subgroup(&g, &s).unwrap();
        let aut = aut_group(&d, AutCaps::default()).unwrap();
        let inner: BTreeSet<Perm> = (0..g.order()).map(|x| inner_automorphism(&g, &d, x)).collect();
        assert_eq!(inner.len() as u32, g.order() / center(&g, &s).order());
        assert!(inner.iter().all(|a| aut.group.contains(a)));
        assert_eq!(aut.order() % inner.len() as u64, 0);
    }
}

#[test]
fn automorphisms_preserve_the_group_law() {
    let g = ambient(Family::Su4, 2);
    let d = DenseGroup::from_subgroup(&g, &g.whole()).unwrap();
    let aut = aut_group(&d, AutCaps::default()).unwrap();
    for a in aut.generators() {
        for x in 0..d.order() {
            for y in 0..d.order() {
                assert_eq!(a[d.mul(x, y) as usize] as u32, d.mul(a[x as usize] as u32, a[y as usize] as u32));
            }
        }
    }
}
