use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};

/// A permutation of `0..n`; `p[x]` is the image of `x`. Products act on the
/// right: `compose(a, b)` applies `a` first.
pub type Perm = Vec<u16>;

pub fn identity(n: usize) -> Perm {
    (0..n as u16).collect()
}

pub fn compose(a: &[u16], b: &[u16]) -> Perm {
    a.iter().map(|&x| b[x as usize]).collect()
}

pub fn inverse(a: &[u16]) -> Perm {
    let mut out = vec![0u16; a.len()];
    for (i, &x) in a.iter().enumerate() {
        out[x as usize] = i as u16;
    }
    out
}

/// `b⁻¹ a b`
pub fn conjugate(a: &[u16], b: &[u16]) -> Perm {
    compose(&compose(&inverse(b), a), b)
}

pub fn perm_order(a: &[u16]) -> u64 {
    let mut cur = a.to_vec();
    let mut k = 1;
    while cur.iter().enumerate().any(|(i, &x)| i as u16 != x) {
        cur = compose(&cur, a);
        k += 1;
    }
    k
}

fn is_power_of(mut n: u64, p: u64) -> bool {
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

/// A fully enumerated permutation group.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    elements: Vec<Perm>,
    index: HashMap<Perm, u32>,
    gens: Vec<Perm>,
    cap: u64,
}

impl PermGroup {
    pub fn trivial(degree: usize) -> Self {
        let id = identity(degree);
        PermGroup { degree, index: HashMap::from([(id.clone(), 0)]), elements: vec![id], gens: Vec::new(), cap: u64::MAX }
    }

    pub fn generate(degree: usize, gens: &[Perm], cap: u64) -> Result<Self> {
        let mut g = PermGroup::trivial(degree);
        g.cap = cap;
        for s in gens {
            g.extend(s)?;
        }
        Ok(g)
    }

    /// Index a set of permutations already known to form a group and pick
    /// generators greedily.
    pub fn from_elements(elements: Vec<Perm>, cap: u64) -> Result<Self> {
        let degree = elements.first().map(|p| p.len()).unwrap_or(0);
        let mut g = PermGroup::trivial(degree);
        g.cap = cap;
        for e in &elements {
            g.extend(e)?;
        }
        if g.order() != elements.len() {
            return Err(Error::Domain(format!(
                "{} permutations generate a group of order {}",
                elements.len(),
                g.order()
            )));
        }
        Ok(g)
    }

    /// `⟨self, s⟩`, in place.
    pub fn extend(&mut self, s: &[u16]) -> Result<()> {
        if self.contains(s) {
            return Ok(());
        }
        self.gens.push(s.to_vec());
        let new = self.gens.len() - 1;
        let old = self.elements.len();
        let mut i = 0;
        while i < self.elements.len() {
            let range = if i < old { new..new + 1 } else { 0..self.gens.len() };
            for j in range {
                let y = compose(&self.elements[i], &self.gens[j]);
                if !self.index.contains_key(&y) {
                    if self.elements.len() as u64 >= self.cap {
                        return Err(Error::Resource(format!("permutation group exceeds {} elements", self.cap)));
                    }
                    self.index.insert(y.clone(), self.elements.len() as u32);
                    self.elements.push(y);
                }
            }
            i += 1;
        }
        Ok(())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn generators(&self) -> &[Perm] {
        &self.gens
    }

    pub fn contains(&self, a: &[u16]) -> bool {
        self.index.contains_key(a)
    }

    pub fn normalizes(&self, a: &[u16]) -> bool {
        self.gens.iter().all(|g| self.contains(&conjugate(g, a)))
    }

    pub fn is_normal_in(&self, other: &PermGroup) -> bool {
        other.gens.iter().all(|a| self.normalizes(a))
    }
}

/// `O_p(A)`: a Sylow p-subgroup is grown from the p-subgroup generated by
/// `seed` by adjoining p-elements of its normaliser, then cut down to its
/// core by conjugating with the generators of `A`.
pub fn p_core(a: &PermGroup, p: u32, seed: &[Perm]) -> Result<PermGroup> {
    let p = p as u64;
    let mut p_part = 1u64;
    let mut n = a.order() as u64;
    while n % p == 0 {
        n /= p;
        p_part *= p;
    }
    let mut sylow = PermGroup::generate(a.degree(), seed, p_part)?;
    if !is_power_of(sylow.order() as u64, p) {
        return Err(Error::Domain("seed does not generate a p-group".into()));
    }
    while (sylow.order() as u64) < p_part {
        let next = a
            .elements()
            .iter()
            .find(|x| !sylow.contains(x) && is_power_of(perm_order(x), p) && sylow.normalizes(x))
            .cloned()
            .ok_or_else(|| Error::Domain("no p-element normalises a non-Sylow p-subgroup".into()))?;
        sylow.extend(&next)?;
    }
    let mut core: HashSet<Perm> = sylow.elements().iter().cloned().collect();
    loop {
        let before = core.len();
        let keep: Vec<Perm> = core
            .iter()
            .filter(|x| a.generators().iter().all(|s| core.contains(&conjugate(x, s))))
            .cloned()
            .collect();
        core = keep.into_iter().collect();
        if core.len() == before {
            break;
        }
    }
    let mut els: Vec<Perm> = core.into_iter().collect();
    els.sort();
    PermGroup::from_elements(els, u64::MAX)
}
