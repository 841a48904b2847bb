use std::collections::HashSet;

use fixedbitset::FixedBitSet;

use super::subgroup::{center, generated_by, Subgroup};
use super::FiniteGroup;

/// Every elementary abelian subgroup of `H` that is maximal under
/// inclusion, sorted by (order descending, elements).
///
/// Such a subgroup contains `Ω₁(Z(H))` and equals the set of elements of
/// order dividing p in its own centraliser, so the search grows subgroups
/// from `Ω₁(Z(H))` inside shrinking centralisers and records the fixed
/// points.
pub fn maximal_elementary_abelians<G: FiniteGroup + ?Sized>(g: &G, h: &Subgroup) -> Vec<Subgroup> {
    let p = g.p() as u64;
    let els = h.elements();
    let flags = g.exec().filter(0..els.len() as u32, |i| g.pow(els[i as usize], p) == 0);
    let small: Vec<u32> = flags.into_iter().map(|i| els[i as usize]).collect();
    let z = center(g, h);
    let base: Vec<u32> = z.elements().iter().copied().filter(|&x| g.pow(x, p) == 0).collect();
    let base_group = generated_by(g, base.iter().copied());

    let mut search = Search { g, visited: HashSet::new(), found: Vec::new() };
    search.visited.insert(base_group.elements().to_vec());
    search.grow(base_group.elements().to_vec(), base_group.generators().to_vec(), small);
    let mut found = search.found;
    found.sort_by(|a, b| b.order().cmp(&a.order()).then_with(|| a.elements().cmp(b.elements())));
    found
}

struct Search<'a, G: FiniteGroup + ?Sized> {
    g: &'a G,
    visited: HashSet<Vec<u32>>,
    found: Vec<Subgroup>,
}

impl<G: FiniteGroup + ?Sized> Search<'_, G> {
    /// `e` sorted elements, `cands` the order-p elements of `C_H(E)`, sorted.
    fn grow(&mut self, e: Vec<u32>, gens: Vec<u32>, cands: Vec<u32>) {
        let g = self.g;
        if cands.len() == e.len() {
            self.found.push(Subgroup::from_parts(g.order(), e, gens));
            return;
        }
        let mut covered = FixedBitSet::with_capacity(g.order() as usize);
        for &x in &e {
            covered.insert(x as usize);
        }
        for &x in &cands {
            if covered.contains(x as usize) {
                continue;
            }
            let mut next = e.clone();
            let mut power = x;
            while power != 0 {
                for &y in &e {
                    next.push(g.mul(y, power));
                }
                power = g.mul(power, x);
            }
            for &y in &next {
                covered.insert(y as usize);
            }
            next.sort_unstable();
            if !self.visited.insert(next.clone()) {
                continue;
            }
            let sub: Vec<u32> = cands.iter().copied().filter(|&c| g.commute(c, x)).collect();
            let mut next_gens = gens.clone();
            next_gens.push(x);
            self.grow(next, next_gens, sub);
        }
    }
}

/// `𝒜(H)`: elementary abelian subgroups of maximal order.
pub fn max_rank_elementary_abelians<G: FiniteGroup + ?Sized>(g: &G, h: &Subgroup) -> Vec<Subgroup> {
    let all = maximal_elementary_abelians(g, h);
    let top = all.first().map(|e| e.order()).unwrap_or(1);
    all.into_iter().filter(|e| e.order() == top).collect()
}

/// `J(H) = ⟨A : A ∈ 𝒜(H)⟩`
pub fn thompson<G: FiniteGroup + ?Sized>(g: &G, h: &Subgroup) -> Subgroup {
    let gens: Vec<u32> = max_rank_elementary_abelians(g, h).iter().flat_map(|a| a.generators().to_vec()).collect();
    generated_by(g, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chevalley::{Family, GroupTable};
    use crate::grptool::Ambient;

    #[test]
    fn elementary_abelian_is_its_own_thompson() {
        let s = Ambient::new(GroupTable::build(Family::G2, 2).unwrap()).unwrap();
        let e = s.root_product(&[1, 2, 5]);
        assert!(e.is_elementary_abelian(&s));
        assert_eq!(thompson(&s, &e), e);
        assert_eq!(maximal_elementary_abelians(&s, &e), vec![e]);
    }

    #[test]
    fn maximal_means_self_centralising_among_order_p() {
        let s = Ambient::new(GroupTable::build(Family::G2, 2).unwrap()).unwrap();
        let whole = s.whole();
        let all = maximal_elementary_abelians(&s, &whole);
        assert!(!all.is_empty());
        for e in &all {
            assert!(e.is_elementary_abelian(&s));
            for &x in whole.elements() {
                if !e.contains(x) && s.pow(x, 2) == 0 {
                    assert!(e.generators().iter().any(|&y| !s.commute(x, y)));
                }
            }
        }
    }
}
