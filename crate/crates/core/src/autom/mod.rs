//! Automorphism groups of small p-groups by backtracking over images of a
//! Burnside basis, p-cores of automorphism groups, and the S-radical test.

mod perm;
mod radical;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::grptool::{
    agemo, center, conjugacy_classes, derived_subgroup, frattini, minimal_generating_set, omega,
    upper_central_series, DenseGroup, FiniteGroup, Subgroup,
};

pub use perm::{compose, conjugate, inverse, p_core, Perm, PermGroup};
pub use radical::{inner_automorphism, is_s_radical, outer_s_representatives, RadicalCertificate, RadicalVerdict};

/// Search limits; exceeding either yields an undecided verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AutCaps {
    pub max_order: u64,
    pub max_nodes: u64,
}

impl Default for AutCaps {
    fn default() -> Self {
        AutCaps { max_order: 1_000_000, max_nodes: 100_000_000 }
    }
}

/// Automorphism-invariant data attached to one element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ElementProfile {
    pub order: u64,
    pub class_size: u32,
    /// Bit i set when the element lies in the i-th characteristic subgroup
    /// of [`InvariantProfile::series_orders`].
    pub flags: u32,
    /// Number of p-th roots.
    pub roots: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct InvariantProfile {
    pub per_element: Vec<ElementProfile>,
    pub order_histogram: BTreeMap<u64, usize>,
    /// Orders of Z(Q), Q′, Φ(Q), Ω(Q), ℧(Q), Z_2(Q), Z_3(Q), ...
    pub series_orders: Vec<u32>,
}

impl InvariantProfile {
    pub fn new(q: &DenseGroup) -> Self {
        let whole = q.whole();
        let n = q.order() as usize;
        let p = q.p() as u64;
        let mut chars: Vec<Subgroup> = vec![
            center(q, &whole),
            derived_subgroup(q, &whole),
            frattini(q, &whole),
            omega(q, &whole),
            agemo(q, &whole),
        ];
        chars.extend(upper_central_series(q, &whole).into_iter().skip(2));
        let mut class_size = vec![0u32; n];
        for class in conjugacy_classes(q, &whole, whole.generators()) {
            for &x in &class {
                class_size[x as usize] = class.len() as u32;
            }
        }
        let mut roots = vec![0u32; n];
        for x in 0..n as u32 {
            roots[q.pow(x, p) as usize] += 1;
        }
        let per_element: Vec<ElementProfile> = (0..n as u32)
            .map(|x| ElementProfile {
                order: q.element_order(x),
                class_size: class_size[x as usize],
                flags: chars.iter().enumerate().fold(0, |acc, (i, c)| acc | ((c.contains(x) as u32) << i)),
                roots: roots[x as usize],
            })
            .collect();
        let mut order_histogram = BTreeMap::new();
        for e in &per_element {
            *order_histogram.entry(e.order).or_insert(0) += 1;
        }
        InvariantProfile { per_element, order_histogram, series_orders: chars.iter().map(|c| c.order()).collect() }
    }

    /// Elements sharing each profile value.
    pub fn buckets(&self) -> BTreeMap<ElementProfile, Vec<u32>> {
        let mut out: BTreeMap<ElementProfile, Vec<u32>> = BTreeMap::new();
        for (x, e) in self.per_element.iter().enumerate() {
            out.entry(*e).or_default().push(x as u32);
        }
        out
    }
}

/// All automorphisms of a small p-group, as permutations of its elements.
#[derive(Clone, Debug)]
pub struct AutGroup {
    pub group: PermGroup,
    /// Burnside basis used for the search; automorphisms are determined by
    /// its images.
    pub basis: Vec<u32>,
    pub nodes: u64,
}

impl AutGroup {
    pub fn order(&self) -> u64 {
        self.group.order() as u64
    }

    pub fn generators(&self) -> &[Perm] {
        self.group.generators()
    }
}

/// Burnside basis ordered rarest profile first.
pub fn ordered_generating_set(q: &DenseGroup, profile: &InvariantProfile) -> Vec<u32> {
    let buckets = profile.buckets();
    let mut order: Vec<u32> = (1..q.order()).collect();
    order.sort_by_key(|&x| (buckets[&profile.per_element[x as usize]].len(), x));
    minimal_generating_set(q, &q.whole(), Some(&order))
}

/// `Aut(Q)` by backtracking: images of the basis range over elements of
/// equal profile, partial maps are extended along the Cayley graph of the
/// generated subgroup and rejected on any inconsistency or collision.
pub fn aut_group(q: &DenseGroup, caps: AutCaps) -> Result<AutGroup> {
    let profile = InvariantProfile::new(q);
    let basis = ordered_generating_set(q, &profile);
    let buckets = profile.buckets();
    let candidates: Vec<&Vec<u32>> = basis.iter().map(|&b| &buckets[&profile.per_element[b as usize]]).collect();
    let mut search = Backtrack {
        q,
        basis: &basis,
        candidates,
        profile: &profile,
        images: Vec::with_capacity(basis.len()),
        found: Vec::new(),
        nodes: 0,
        caps,
    };
    search.run(0)?;
    let found = search.found;
    let nodes = search.nodes;
    let group = PermGroup::from_elements(found, caps.max_order)?;
    Ok(AutGroup { group, basis, nodes })
}

struct Backtrack<'a> {
    q: &'a DenseGroup,
    basis: &'a [u32],
    candidates: Vec<&'a Vec<u32>>,
    profile: &'a InvariantProfile,
    images: Vec<u32>,
    found: Vec<Perm>,
    nodes: u64,
    caps: AutCaps,
}

impl Backtrack<'_> {
    fn run(&mut self, level: usize) -> Result<()> {
        if level == self.basis.len() {
            if let Some(map) = self.extend_map(level) {
                if map.iter().all(|&x| x != u32::MAX) {
                    self.found.push(map.into_iter().map(|x| x as u16).collect());
                    if self.found.len() as u64 > self.caps.max_order {
                        return Err(Error::Resource(format!("|Aut| exceeds {}", self.caps.max_order)));
                    }
                }
            }
            return Ok(());
        }
        for &y in self.candidates[level].iter() {
            self.nodes += 1;
            if self.nodes > self.caps.max_nodes {
                return Err(Error::Resource(format!("automorphism search exceeded {} nodes", self.caps.max_nodes)));
            }
            self.images.push(y);
            if self.extend_map(level + 1).is_some() {
                self.run(level + 1)?;
            }
            self.images.pop();
        }
        Ok(())
    }

    /// The homomorphism on `⟨b_1..b_k⟩` sending `b_i ↦ images[i]`, or `None`
    /// if it is ill-defined, not injective or breaks a profile.
    fn extend_map(&self, k: usize) -> Option<Vec<u32>> {
        let q = self.q;
        let n = q.order() as usize;
        let mut img = vec![u32::MAX; n];
        let mut used = vec![false; n];
        img[0] = 0;
        used[0] = true;
        let mut queue = vec![0u32];
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            let wx = img[x as usize];
            for j in 0..k {
                let z = q.mul(x, self.basis[j]);
                let wz = q.mul(wx, self.images[j]);
                let cur = img[z as usize];
                if cur == u32::MAX {
                    if used[wz as usize]
                        || self.profile.per_element[z as usize] != self.profile.per_element[wz as usize]
                    {
                        return None;
                    }
                    img[z as usize] = wz;
                    used[wz as usize] = true;
                    queue.push(z);
                } else if cur != wz {
                    return None;
                }
            }
            i += 1;
        }
        Some(img)
    }
}
