//! Exhaustive subgroup enumeration for the order-64 Sylow groups and the
//! classification of their S-centric, S-radical subgroups.

mod patterns;

use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::autom::{is_s_radical, AutCaps, RadicalVerdict};
use crate::grptool::{
    extend, is_s_centric, maximal_subgroups, normalizer_in, subgroup_orbits, Ambient, FiniteGroup, Subgroup,
};

pub use patterns::{classify_rc, patterns, ClassRow, Pattern, RcReport};

/// Enumeration stops once this many subgroups have been found.
pub const DEFAULT_SUBGROUP_CAP: usize = 200_000;

#[derive(Clone, Copy, Debug)]
pub struct EnumOptions {
    pub subgroup_cap: usize,
    pub aut: AutCaps,
    /// Use the elementary-abelian and chain short cuts in the radical test.
    pub fast: bool,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions { subgroup_cap: DEFAULT_SUBGROUP_CAP, aut: AutCaps::default(), fast: true }
    }
}

/// All subgroups of `s`, bottom-up: each `H` is extended by one element
/// of every coset `xH` with `x ∈ N_S(H)` and `x^p ∈ H`. Every subgroup of
/// a p-group arises this way from a maximal subgroup of itself. Returns
/// the subgroups sorted by (order, elements) and whether the search ran to
/// completion.
pub fn enumerate_subgroups<G: FiniteGroup + ?Sized>(g: &G, s: &Subgroup, cap: usize) -> (Vec<Subgroup>, bool) {
    enumerate_overgroups(g, s, &Subgroup::trivial(g), cap)
}

/// Subgroups of `s` containing `base`, which must be normal in `s`. Same
/// search as [`enumerate_subgroups`], started from `base`.
pub fn enumerate_overgroups<G: FiniteGroup + ?Sized>(
    g: &G,
    s: &Subgroup,
    base: &Subgroup,
    cap: usize,
) -> (Vec<Subgroup>, bool) {
    let p = g.p() as u64;
    let mut all = vec![base.clone()];
    let mut seen: HashMap<Vec<u32>, usize> = HashMap::from([(all[0].elements().to_vec(), 0)]);
    let mut frontier = vec![0usize];
    let mut complete = true;
    while !frontier.is_empty() {
        let layer: Vec<&Subgroup> = frontier.iter().map(|&i| &all[i]).collect();
        let found: Vec<Vec<Subgroup>> = g.exec().map_slice(&layer, |h| {
            let n = normalizer_in(g, s, h);
            let mut covered = FixedBitSet::with_capacity(g.order() as usize);
            let mut out = Vec::new();
            for &x in n.elements() {
                if covered.contains(x as usize) {
                    continue;
                }
                for &y in h.elements() {
                    covered.insert(g.mul(x, y) as usize);
                }
                if !h.contains(x) && h.contains(g.pow(x, p)) {
                    out.push(extend(g, h, &[x]));
                }
            }
            out
        });
        let mut next = Vec::new();
        'outer: for batch in found {
            for k in batch {
                if seen.contains_key(k.elements()) {
                    continue;
                }
                if all.len() >= cap {
                    complete = false;
                    break 'outer;
                }
                seen.insert(k.elements().to_vec(), all.len());
                next.push(all.len());
                all.push(k);
            }
        }
        frontier = next;
    }
    all.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements().cmp(b.elements())));
    (all, complete)
}

/// All subgroups of `s`, top-down through maximal subgroups. Slower; kept
/// as an independent recount for [`enumerate_subgroups`].
pub fn enumerate_subgroups_top_down<G: FiniteGroup + ?Sized>(g: &G, s: &Subgroup) -> Vec<Subgroup> {
    let mut all = vec![s.clone()];
    let mut seen: HashMap<Vec<u32>, ()> = HashMap::from([(s.elements().to_vec(), ())]);
    let mut i = 0;
    while i < all.len() {
        if all[i].order() > 1 {
            for m in maximal_subgroups(g, &all[i]) {
                if seen.insert(m.elements().to_vec(), ()).is_none() {
                    all.push(m);
                }
            }
        }
        i += 1;
    }
    all.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements().cmp(b.elements())));
    all
}

#[derive(Clone, Debug)]
pub struct SubgroupClass {
    /// Positions in [`SubgroupCatalog::subgroups`], increasing.
    pub members: Vec<usize>,
    /// The member with least element list.
    pub rep: usize,
    pub order: u32,
    pub centric: bool,
    /// Computed for centric classes only.
    pub radical: Option<RadicalVerdict>,
}

impl SubgroupClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn is_survivor(&self) -> bool {
        self.centric && matches!(self.radical, Some(RadicalVerdict::Radical(_)))
    }
}

#[derive(Clone, Debug)]
pub struct SubgroupCatalog {
    pub subgroups: Vec<Subgroup>,
    pub classes: Vec<SubgroupClass>,
    pub complete: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CatalogSummary {
    pub subgroups: usize,
    pub classes: usize,
    pub centric_classes: usize,
    pub radical_centric_classes: usize,
    pub undecided: usize,
    pub complete: bool,
}

impl SubgroupCatalog {
    /// Enumerate, split into S-classes and test centric classes for
    /// radicality.
    pub fn build(g: &Ambient, opts: EnumOptions) -> Self {
        let s = g.whole();
        let (subgroups, complete) = enumerate_subgroups(g, &s, opts.subgroup_cap);
        let orbits = subgroup_orbits(g, &subgroups, s.generators());
        let mut classes: Vec<SubgroupClass> = orbits
            .into_iter()
            .map(|members| {
                let rep = *members.iter().min_by(|&&a, &&b| subgroups[a].elements().cmp(subgroups[b].elements())).unwrap();
                let h = &subgroups[rep];
                SubgroupClass { order: h.order(), centric: is_s_centric(g, &s, h), rep, members, radical: None }
            })
            .collect();
        let centric: Vec<usize> = (0..classes.len()).filter(|&i| classes[i].centric).collect();
        let verdicts = g.exec().map_slice(&centric, |&i| is_s_radical(g, &s, &subgroups[classes[i].rep], opts.aut, opts.fast));
        for (i, v) in centric.into_iter().zip(verdicts) {
            classes[i].radical = Some(v);
        }
        SubgroupCatalog { subgroups, classes, complete }
    }

    pub fn summary(&self) -> CatalogSummary {
        CatalogSummary {
            subgroups: self.subgroups.len(),
            classes: self.classes.len(),
            centric_classes: self.classes.iter().filter(|c| c.centric).count(),
            radical_centric_classes: self.classes.iter().filter(|c| c.is_survivor()).count(),
            undecided: self.classes.iter().filter(|c| matches!(c.radical, Some(RadicalVerdict::Undecided(_)))).count(),
            complete: self.complete,
        }
    }

    pub fn representative(&self, class: &SubgroupClass) -> &Subgroup {
        &self.subgroups[class.rep]
    }

    pub fn survivors(&self) -> impl Iterator<Item = &SubgroupClass> {
        self.classes.iter().filter(|c| c.is_survivor())
    }

    /// Position of a subgroup with the given element set.
    pub fn position(&self, h: &Subgroup) -> Option<usize> {
        self.subgroups
            .binary_search_by(|x| x.order().cmp(&h.order()).then_with(|| x.elements().cmp(h.elements())))
            .ok()
    }
}
