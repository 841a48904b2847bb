use std::collections::{HashMap, VecDeque};

use fixedbitset::FixedBitSet;

use super::subgroup::Subgroup;
use super::FiniteGroup;

/// Orbits of `by` acting by conjugation on the elements of `h` (which must
/// be normalised by `by`), each sorted, listed by least element.
pub fn conjugacy_classes<G: FiniteGroup + ?Sized>(g: &G, h: &Subgroup, by: &[u32]) -> Vec<Vec<u32>> {
    let mut seen = FixedBitSet::with_capacity(g.order() as usize);
    let mut classes = Vec::new();
    for &x in h.elements() {
        if seen.contains(x as usize) {
            continue;
        }
        seen.insert(x as usize);
        let mut orbit = vec![x];
        let mut i = 0;
        while i < orbit.len() {
            let y = orbit[i];
            for &s in by {
                let c = g.conj(y, s);
                if !seen.contains(c as usize) {
                    seen.insert(c as usize);
                    orbit.push(c);
                }
            }
            i += 1;
        }
        orbit.sort_unstable();
        classes.push(orbit);
    }
    classes
}

/// Least element of each conjugacy class, with the class size.
pub fn class_representatives<G: FiniteGroup + ?Sized>(g: &G, h: &Subgroup, by: &[u32]) -> Vec<(u32, usize)> {
    conjugacy_classes(g, h, by).into_iter().map(|c| (c[0], c.len())).collect()
}

/// `{x^s : x ∈ xs}`, sorted.
pub fn conjugate_set<G: FiniteGroup + ?Sized>(g: &G, xs: &[u32], s: u32) -> Vec<u32> {
    let mut out: Vec<u32> = xs.iter().map(|&x| g.conj(x, s)).collect();
    out.sort_unstable();
    out
}

/// All conjugates of `h` under `⟨by⟩`, as sorted element lists; the first
/// entry is `h` itself.
pub fn subgroup_orbit<G: FiniteGroup + ?Sized>(g: &G, h: &Subgroup, by: &[u32]) -> Vec<Vec<u32>> {
    let mut orbit = vec![h.elements().to_vec()];
    let mut index: HashMap<Vec<u32>, usize> = HashMap::new();
    index.insert(orbit[0].clone(), 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for &s in by {
            let c = conjugate_set(g, &orbit[i], s);
            if !index.contains_key(&c) {
                index.insert(c.clone(), orbit.len());
                queue.push_back(orbit.len());
                orbit.push(c);
            }
        }
    }
    orbit
}

/// Partition a conjugation-closed family of subgroups into orbits under
/// `⟨by⟩`; returns lists of positions into `family`. Members whose
/// conjugates fall outside the family end up in singleton orbits together
/// with whatever conjugates are present.
pub fn subgroup_orbits<G: FiniteGroup + ?Sized>(g: &G, family: &[Subgroup], by: &[u32]) -> Vec<Vec<usize>> {
    let index: HashMap<&[u32], usize> = family.iter().enumerate().map(|(i, h)| (h.elements(), i)).collect();
    let mut seen = vec![false; family.len()];
    let mut orbits = Vec::new();
    for start in 0..family.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut orbit = vec![start];
        let mut i = 0;
        while i < orbit.len() {
            let cur = family[orbit[i]].elements();
            for &s in by {
                let c = conjugate_set(g, cur, s);
                if let Some(&j) = index.get(c.as_slice()) {
                    if !seen[j] {
                        seen[j] = true;
                        orbit.push(j);
                    }
                }
            }
            i += 1;
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    orbits
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chevalley::{Family, GroupTable};
    use crate::grptool::{center, Ambient};

    #[test]
    fn class_sizes_sum_and_central_singletons() {
        let s = Ambient::new(GroupTable::build(Family::Su4, 2).unwrap()).unwrap();
        let whole = s.whole();
        let classes = conjugacy_classes(&s, &whole, whole.generators());
        assert_eq!(classes.iter().map(|c| c.len()).sum::<usize>(), 64);
        let z = center(&s, &whole);
        let singletons: Vec<u32> = classes.iter().filter(|c| c.len() == 1).map(|c| c[0]).collect();
        assert_eq!(singletons, z.elements());
    }
}
