use std::hash::{Hash, Hasher};

use fixedbitset::FixedBitSet;
use serde::Serialize;

use super::FiniteGroup;

/// A subgroup as a sorted element list, a membership bitset over the
/// parent group and a generating set.
#[derive(Clone, Debug)]
pub struct Subgroup {
    elements: Vec<u32>,
    members: FixedBitSet,
    gens: Vec<u32>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.elements.hash(state);
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SubgroupDump {
    pub order: u32,
    pub generators: Vec<u32>,
}

impl Subgroup {
    pub fn trivial<G: FiniteGroup + ?Sized>(g: &G) -> Self {
        let mut members = FixedBitSet::with_capacity(g.order() as usize);
        members.insert(0);
        Subgroup { elements: vec![0], members, gens: Vec::new() }
    }

    pub fn whole_group<G: FiniteGroup + ?Sized>(g: &G) -> Self {
        let elements: Vec<u32> = (0..g.order()).collect();
        Subgroup::from_elements(g, elements)
    }

    /// A subgroup from a closed element set; a generating set is chosen
    /// greedily in index order.
    pub fn from_elements<G: FiniteGroup + ?Sized>(g: &G, mut elements: Vec<u32>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        let mut cur = Subgroup::trivial(g);
        for &e in &elements {
            if cur.order() as usize == elements.len() {
                break;
            }
            if !cur.contains(e) {
                cur = extend(g, &cur, &[e]);
            }
        }
        debug_assert_eq!(cur.elements, elements, "element set is not closed");
        cur
    }

    /// Trusted constructor: `elements` must be exactly `⟨gens⟩`.
    pub(crate) fn from_parts(n: u32, mut elements: Vec<u32>, gens: Vec<u32>) -> Self {
        elements.sort_unstable();
        let mut members = FixedBitSet::with_capacity(n as usize);
        for &e in &elements {
            members.insert(e as usize);
        }
        Subgroup { elements, members, gens }
    }

    pub fn order(&self) -> u32 {
        self.elements.len() as u32
    }

    #[inline]
    pub fn contains(&self, e: u32) -> bool {
        self.members.contains(e as usize)
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn generators(&self) -> &[u32] {
        &self.gens
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.elements.len() <= other.elements.len() && self.elements.iter().all(|&e| other.contains(e))
    }

    pub fn members(&self) -> &FixedBitSet {
        &self.members
    }

    /// Least element index other than the identity, used for ordering.
    pub fn least_generator(&self) -> u32 {
        self.gens.iter().copied().min().unwrap_or(0)
    }

    pub fn is_abelian<G: FiniteGroup + ?Sized>(&self, g: &G) -> bool {
        self.gens.iter().enumerate().all(|(i, &a)| self.gens[i + 1..].iter().all(|&b| g.commute(a, b)))
    }

    pub fn is_elementary_abelian<G: FiniteGroup + ?Sized>(&self, g: &G) -> bool {
        self.is_abelian(g) && self.gens.iter().all(|&a| g.pow(a, g.p() as u64) == 0)
    }

    pub fn exponent<G: FiniteGroup + ?Sized>(&self, g: &G) -> u64 {
        self.elements.iter().map(|&e| g.element_order(e)).max().unwrap_or(1)
    }

    pub fn dump(&self) -> SubgroupDump {
        SubgroupDump { order: self.order(), generators: self.gens.clone() }
    }
}

/// `⟨H, xs⟩`, extending `H` by Dimino's coset method.
pub fn extend<G: FiniteGroup + ?Sized>(g: &G, h: &Subgroup, xs: &[u32]) -> Subgroup {
    let mut cur = h.clone();
    for &x in xs {
        if cur.contains(x) {
            continue;
        }
        let base = cur.elements.clone();
        let mut elements = cur.elements;
        let mut members = cur.members;
        let mut gens = cur.gens;
        gens.push(x);
        let add_coset = |r: u32, elements: &mut Vec<u32>, members: &mut FixedBitSet| {
            for &b in &base {
                let e = g.mul(b, r);
                members.insert(e as usize);
                elements.push(e);
            }
        };
        add_coset(x, &mut elements, &mut members);
        let mut reps = vec![x];
        let mut i = 0;
        while i < reps.len() {
            for &s in &gens {
                let e = g.mul(reps[i], s);
                if !members.contains(e as usize) {
                    add_coset(e, &mut elements, &mut members);
                    reps.push(e);
                }
            }
            i += 1;
        }
        elements.sort_unstable();
        cur = Subgroup { elements, members, gens };
    }
    cur
}

/// Subgroup generated by a (possibly large) set, adding only elements
/// not already generated.
pub fn generated_by<G: FiniteGroup + ?Sized>(g: &G, xs: impl IntoIterator<Item = u32>) -> Subgroup {
    let mut cur = Subgroup::trivial(g);
    for x in xs {
        if !cur.contains(x) {
            cur = extend(g, &cur, &[x]);
        }
    }
    cur
}

pub fn closure<G: FiniteGroup + ?Sized>(g: &G, gens: &[u32]) -> Subgroup {
    extend(g, &Subgroup::trivial(g), gens)
}

/// Smallest subgroup containing `xs` and normalised by `by`.
pub fn normal_closure<G: FiniteGroup + ?Sized>(g: &G, xs: &[u32], by: &[u32]) -> Subgroup {
    let mut n = closure(g, xs);
    let mut i = 0;
    while i < n.gens.len() {
        let a = n.gens[i];
        for &s in by {
            let c = g.conj(a, s);
            if !n.contains(c) {
                n = extend(g, &n, &[c]);
            }
        }
        i += 1;
    }
    n
}

pub fn intersection<G: FiniteGroup + ?Sized>(g: &G, a: &Subgroup, b: &Subgroup) -> Subgroup {
    let (small, big) = if a.order() <= b.order() { (a, b) } else { (b, a) };
    let elements: Vec<u32> = small.elements.iter().copied().filter(|&e| big.contains(e)).collect();
    Subgroup::from_elements(g, elements)
}

/// `⟨A, B⟩`.
pub fn product<G: FiniteGroup + ?Sized>(g: &G, a: &Subgroup, b: &Subgroup) -> Subgroup {
    extend(g, a, &b.gens)
}

fn scan<G: FiniteGroup + ?Sized>(g: &G, within: &Subgroup, pred: impl Fn(u32) -> bool + Sync + Send) -> Subgroup {
    let els = &within.elements;
    let keep = g.exec().filter(0..els.len() as u32, |i| pred(els[i as usize]));
    let elements: Vec<u32> = keep.into_iter().map(|i| els[i as usize]).collect();
    Subgroup::from_elements(g, elements)
}

pub fn centralizer_of_element<G: FiniteGroup + ?Sized>(g: &G, within: &Subgroup, x: u32) -> Subgroup {
    scan(g, within, |y| g.commute(x, y))
}

/// `C_K(H)` for `K = within`.
pub fn centralizer_in<G: FiniteGroup + ?Sized>(g: &G, within: &Subgroup, h: &Subgroup) -> Subgroup {
    let gens = &h.gens;
    scan(g, within, |y| gens.iter().all(|&x| g.commute(x, y)))
}

/// `C_G(H)` in the whole group.
pub fn centralizer<G: FiniteGroup + ?Sized>(g: &G, h: &Subgroup) -> Subgroup {
    centralizer_in(g, &Subgroup::whole_group(g), h)
}

pub fn normalizer_in<G: FiniteGroup + ?Sized>(g: &G, within: &Subgroup, h: &Subgroup) -> Subgroup {
    let gens = &h.gens;
    scan(g, within, |y| gens.iter().all(|&x| h.contains(g.conj(x, y))))
}

pub fn normalizer<G: FiniteGroup + ?Sized>(g: &G, h: &Subgroup) -> Subgroup {
    normalizer_in(g, &Subgroup::whole_group(g), h)
}

/// `C_K(A/B) = {k ∈ K : [a, k] ∈ B for all a ∈ A}`, for `B ⊴ A` both
/// normalised by `K`.
pub fn centralizer_of_quotient<G: FiniteGroup + ?Sized>(
    g: &G,
    within: &Subgroup,
    a: &Subgroup,
    b: &Subgroup,
) -> Subgroup {
    let gens = &a.gens;
    scan(g, within, |y| gens.iter().all(|&x| b.contains(g.comm(x, y))))
}

pub fn center<G: FiniteGroup + ?Sized>(g: &G, h: &Subgroup) -> Subgroup {
    centralizer_in(g, h, h)
}

pub fn is_normal<G: FiniteGroup + ?Sized>(g: &G, h: &Subgroup, in_group: &Subgroup) -> bool {
    h.is_subgroup_of(in_group) && in_group.gens.iter().all(|&s| h.gens.iter().all(|&x| h.contains(g.conj(x, s))))
}

/// `[A, B]`, the normal closure of generator commutators in `⟨A, B⟩`.
pub fn commutator_subgroup<G: FiniteGroup + ?Sized>(g: &G, a: &Subgroup, b: &Subgroup) -> Subgroup {
    let comms: Vec<u32> = a.gens.iter().flat_map(|&x| b.gens.iter().map(move |&y| g.comm(x, y))).collect();
    let by: Vec<u32> = a.gens.iter().chain(&b.gens).copied().collect();
    normal_closure(g, &comms, &by)
}

pub fn derived_subgroup<G: FiniteGroup + ?Sized>(g: &G, h: &Subgroup) -> Subgroup {
    commutator_subgroup(g, h, h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chevalley::{g2, Family, GroupTable};
    use crate::grptool::Ambient;

    #[test]
    fn closure_basics() {
        let s = Ambient::new(GroupTable::build(Family::G2, 2).unwrap()).unwrap();
        assert_eq!(closure(&s, &[]).order(), 1);
        assert_eq!(s.whole().order(), 64);
        let xa = s.root_element(g2::A, 1).unwrap();
        let xb = s.root_element(g2::B, 1).unwrap();
        // At p = 2 the commutator relations degenerate and x_a(1), x_b(1) miss S.
        assert_eq!(closure(&s, &[xa, xb]).order(), 16);
        assert_eq!(closure(&s, &[xa]).order(), 2);
        let s = Ambient::new(GroupTable::build(Family::G2, 5).unwrap()).unwrap();
        let xa = s.root_element(g2::A, 1).unwrap();
        let xb = s.root_element(g2::B, 1).unwrap();
        assert_eq!(closure(&s, &[xa, xb]).order(), 15625);
    }

    #[test]
    fn centralizer_is_intersection_of_element_centralizers() {
        let s = Ambient::new(GroupTable::build(Family::G2, 3).unwrap()).unwrap();
        let whole = s.whole();
        let h = s.root_product(&[g2::B, g2::A3B]);
        let c = centralizer_in(&s, &whole, &h);
        let mut acc = whole.clone();
        for &x in h.elements() {
            acc = intersection(&s, &acc, &centralizer_of_element(&s, &whole, x));
        }
        assert_eq!(c, acc);
    }
}
