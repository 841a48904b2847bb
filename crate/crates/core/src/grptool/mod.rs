//! Subgroup machinery over a fully enumerated finite p-group.
//!
//! Group elements are `u32` indices with `0` the identity. Algorithms are
//! generic over [`FiniteGroup`], implemented by [`Ambient`] (a Sylow group
//! from [`GroupTable`]) and by [`DenseGroup`] (a small group with a Cayley
//! table, typically a subgroup re-indexed as a group in its own right).

mod chain;
mod classes;
mod elemab;
mod expr;
mod frattini;
mod quotient;
mod series;
mod subgroup;

use std::collections::HashMap;

use crate::chevalley::{GroupElement, GroupTable, DEFAULT_ENUMERATION_CAP};
use crate::error::{Error, Result};
use crate::exec::Exec;

pub use chain::{chain_centralizer_prune, characteristic_vocabulary, is_s_centric, ChainWitness, Recipe, TaggedSubgroup};
pub use classes::{class_representatives, conjugacy_classes, conjugate_set, subgroup_orbit, subgroup_orbits};
pub use elemab::{maximal_elementary_abelians, max_rank_elementary_abelians, thompson};
pub use expr::SubgroupExpr;
pub use frattini::{agemo, frattini, frattini_quotient, maximal_subgroups, minimal_generating_set, omega, FrattiniQuotient};
pub use quotient::Quotient;
pub use series::{derived_series, lower_central_series, nilpotency_class, upper_central_series};
pub use subgroup::{
    center, centralizer, centralizer_in, centralizer_of_element, centralizer_of_quotient, closure, commutator_subgroup,
    derived_subgroup, extend, generated_by, intersection, is_normal, normal_closure, normalizer, normalizer_in, product, Subgroup,
};

/// Largest ambient order for which a dense Cayley table is built.
pub const DENSE_LIMIT: u32 = 1024;

pub trait FiniteGroup: Sync {
    fn order(&self) -> u32;
    fn mul(&self, a: u32, b: u32) -> u32;
    fn inv(&self, a: u32) -> u32;
    /// The prime dividing the order.
    fn p(&self) -> u32;

    fn exec(&self) -> Exec {
        Exec::default()
    }

    fn identity(&self) -> u32 {
        0
    }

    /// `[a, b] = a⁻¹b⁻¹ab`
    fn comm(&self, a: u32, b: u32) -> u32 {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(self.inv(ba), ab)
    }

    /// `a^g = g⁻¹ag`
    fn conj(&self, a: u32, g: u32) -> u32 {
        self.mul(self.inv(g), self.mul(a, g))
    }

    fn commute(&self, a: u32, b: u32) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    fn pow(&self, a: u32, mut k: u64) -> u32 {
        let mut acc = 0;
        let mut sq = a;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, sq);
            }
            k >>= 1;
            if k > 0 {
                sq = self.mul(sq, sq);
            }
        }
        acc
    }

    fn element_order(&self, a: u32) -> u64 {
        let p = self.p() as u64;
        let mut x = a;
        let mut ord = 1;
        while x != 0 {
            x = self.pow(x, p);
            ord *= p;
        }
        ord
    }
}

/// A Sylow group from a [`GroupTable`], enumerated by element index.
pub struct Ambient {
    table: GroupTable,
    exec: Exec,
    n: u32,
    elements: Vec<GroupElement>,
    inverse: Vec<u32>,
    cayley: Option<Vec<u16>>,
}

impl std::fmt::Debug for Ambient {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Ambient({:?})", self.table)
    }
}

impl Ambient {
    pub fn new(table: GroupTable) -> Result<Self> {
        Ambient::with_options(table, Exec::default(), DEFAULT_ENUMERATION_CAP)
    }

    pub fn with_options(table: GroupTable, exec: Exec, cap: u64) -> Result<Self> {
        table.check_enumerable(cap)?;
        let n = table.order() as u32;
        let elements: Vec<GroupElement> = table.elements().collect();
        let index = |e: &GroupElement| table.index(e) as u32;
        let inverse = exec.map_slice(&elements, |e| index(&table.inv(e)));
        let cayley = (n <= DENSE_LIMIT).then(|| {
            let rows: Vec<Vec<u16>> =
                exec.map_slice(&elements, |a| elements.iter().map(|b| index(&table.mul(a, b)) as u16).collect());
            rows.concat()
        });
        Ok(Ambient { table, exec, n, elements, inverse, cayley })
    }

    pub fn table(&self) -> &GroupTable {
        &self.table
    }

    pub fn element(&self, i: u32) -> &GroupElement {
        &self.elements[i as usize]
    }

    pub fn index(&self, e: &GroupElement) -> u32 {
        self.table.index(e) as u32
    }

    pub fn root_element(&self, r: usize, t: u8) -> Result<u32> {
        Ok(self.index(&self.table.root_element(r, t)?))
    }

    /// All of `X_r`, as indices.
    pub fn root_subgroup(&self, r: usize) -> Vec<u32> {
        self.table.root_subgroup(r).iter().map(|e| self.index(e)).collect()
    }

    /// Indices of all `x_{r_1}(t_1)...x_{r_k}(t_k)`: the product set of the
    /// listed root subgroups.
    pub fn root_product(&self, roots: &[usize]) -> Subgroup {
        let mut gens = Vec::new();
        for &r in roots {
            for e in self.root_subgroup(r) {
                if e != 0 {
                    gens.push(e);
                }
            }
        }
        closure(self, &gens)
    }

    /// Additive basis of `X_r`: the elements with a single unit coordinate.
    pub fn root_basis(&self, r: usize) -> Vec<u32> {
        let all = self.root_subgroup(r);
        let p = self.table.p() as usize;
        std::iter::successors(Some(1usize), |&k| Some(k * p)).take_while(|&k| k < all.len()).map(|k| all[k]).collect()
    }

    /// The whole group, generated by bases of the two simple root groups
    /// when they suffice and by every root basis otherwise.
    pub fn whole(&self) -> Subgroup {
        let simple: Vec<u32> = self.root_basis(0).into_iter().chain(self.root_basis(1)).collect();
        let s = closure(self, &simple);
        if s.order() == self.n {
            return s;
        }
        let all: Vec<u32> = (0..self.table.rank()).flat_map(|r| self.root_basis(r)).collect();
        extend(self, &s, &all)
    }

    pub fn format(&self, i: u32) -> String {
        self.table.format(self.element(i))
    }

    pub fn with_exec(mut self, exec: Exec) -> Self {
        self.exec = exec;
        self
    }
}

impl FiniteGroup for Ambient {
    fn order(&self) -> u32 {
        self.n
    }

    #[inline]
    fn mul(&self, a: u32, b: u32) -> u32 {
        match &self.cayley {
            Some(t) => t[a as usize * self.n as usize + b as usize] as u32,
            None => self.index(&self.table.mul(&self.elements[a as usize], &self.elements[b as usize])),
        }
    }

    #[inline]
    fn inv(&self, a: u32) -> u32 {
        self.inverse[a as usize]
    }

    fn p(&self) -> u32 {
        self.table.p()
    }

    fn exec(&self) -> Exec {
        self.exec
    }
}

/// A finite p-group given by its Cayley table. Built from a subgroup of
/// another group, it keeps the map back to the parent's indices.
#[derive(Clone, Debug)]
pub struct DenseGroup {
    n: u32,
    p: u32,
    exec: Exec,
    table: Vec<u16>,
    inverse: Vec<u16>,
    parent: Vec<u32>,
}

/// Largest subgroup re-indexed as a [`DenseGroup`].
pub const DENSE_SUBGROUP_LIMIT: u32 = 4096;

impl DenseGroup {
    pub fn from_subgroup<G: FiniteGroup + ?Sized>(g: &G, h: &Subgroup) -> Result<Self> {
        let n = h.order();
        if n > DENSE_SUBGROUP_LIMIT {
            return Err(Error::Resource(format!("subgroup of order {n} is too large for a Cayley table")));
        }
        let parent = h.elements().to_vec();
        let local: HashMap<u32, u16> = parent.iter().enumerate().map(|(i, &e)| (e, i as u16)).collect();
        let rows: Vec<Vec<u16>> = g
            .exec()
            .map_slice(&parent, |&a| parent.iter().map(|&b| local[&g.mul(a, b)]).collect());
        let table = rows.concat();
        let inverse = parent.iter().map(|&a| local[&g.inv(a)]).collect();
        Ok(DenseGroup { n, p: g.p(), exec: g.exec(), table, inverse, parent })
    }

    /// Parent index of local element `i`.
    pub fn parent_index(&self, i: u32) -> u32 {
        self.parent[i as usize]
    }

    pub fn local_index(&self, parent: u32) -> Option<u32> {
        self.parent.binary_search(&parent).ok().map(|i| i as u32)
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::whole_group(self)
    }
}

impl FiniteGroup for DenseGroup {
    fn order(&self) -> u32 {
        self.n
    }

    #[inline]
    fn mul(&self, a: u32, b: u32) -> u32 {
        self.table[a as usize * self.n as usize + b as usize] as u32
    }

    #[inline]
    fn inv(&self, a: u32) -> u32 {
        self.inverse[a as usize] as u32
    }

    fn p(&self) -> u32 {
        self.p
    }

    fn exec(&self) -> Exec {
        self.exec
    }
}
