use super::subgroup::{generated_by, is_normal, Subgroup};
use super::FiniteGroup;
use crate::error::{Error, Result};
use crate::exec::Exec;

const NONE: u32 = u32::MAX;

/// `H/N` for `N ⊴ H`, with cosets indexed in order of their least element.
/// Coset `0` is `N`.
pub struct Quotient<'a, G: FiniteGroup + ?Sized> {
    g: &'a G,
    n: Subgroup,
    reps: Vec<u32>,
    coset: Vec<u32>,
    inverse: Vec<u32>,
}

impl<'a, G: FiniteGroup + ?Sized> Quotient<'a, G> {
    pub fn new(g: &'a G, h: &Subgroup, n: &Subgroup) -> Result<Self> {
        if !is_normal(g, n, h) {
            return Err(Error::Usage("quotient by a subgroup that is not normal".into()));
        }
        let mut coset = vec![NONE; g.order() as usize];
        let mut reps = Vec::with_capacity((h.order() / n.order()) as usize);
        for &x in h.elements() {
            if coset[x as usize] != NONE {
                continue;
            }
            let id = reps.len() as u32;
            reps.push(x);
            for &y in n.elements() {
                coset[g.mul(x, y) as usize] = id;
            }
        }
        let inverse = reps.iter().map(|&x| coset[g.inv(x) as usize]).collect();
        Ok(Quotient { g, n: n.clone(), reps, coset, inverse })
    }

    /// Coset of `x ∈ H`.
    pub fn coset(&self, x: u32) -> u32 {
        self.coset[x as usize]
    }

    pub fn rep(&self, c: u32) -> u32 {
        self.reps[c as usize]
    }

    /// Full preimage in `H` of a subgroup of the quotient.
    pub fn preimage(&self, k: &Subgroup) -> Subgroup {
        let xs = k.elements().iter().map(|&c| self.reps[c as usize]).chain(self.n.elements().iter().copied());
        generated_by(self.g, xs)
    }
}

impl<G: FiniteGroup + ?Sized> FiniteGroup for Quotient<'_, G> {
    fn order(&self) -> u32 {
        self.reps.len() as u32
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        self.coset[self.g.mul(self.reps[a as usize], self.reps[b as usize]) as usize]
    }

    fn inv(&self, a: u32) -> u32 {
        self.inverse[a as usize]
    }

    fn p(&self) -> u32 {
        self.g.p()
    }

    fn exec(&self) -> Exec {
        self.g.exec()
    }
}
