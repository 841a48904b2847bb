//! Characteristic chains and the centraliser-of-chain certificate.
//!
//! If `g ∈ N_S(E)` centralises every factor of a chain of characteristic
//! subgroups `1 = E_0 < ... < E_m = E`, conjugation by `g` lies in a normal
//! p-subgroup of `Aut(E)`. When `g ∉ E·C_S(E)` it is moreover not inner, so
//! `E` is not S-radical.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::Serialize;

use super::elemab::thompson;
use super::frattini::{agemo, frattini, omega};
use super::series::{derived_series, lower_central_series, upper_central_series};
use super::subgroup::{center, centralizer_in, commutator_subgroup, intersection, normalizer_in, product, Subgroup};
use super::FiniteGroup;

/// How a characteristic subgroup of `E` was built. Every constructor is
/// invariant under `Aut(E)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Recipe {
    Trivial,
    Whole,
    Center,
    Derived,
    Frattini,
    Omega,
    Agemo,
    Thompson,
    OmegaCenter,
    UpperCentral(usize),
    LowerCentral(usize),
    DerivedTerm(usize),
    Intersection(Box<Recipe>, Box<Recipe>),
    Product(Box<Recipe>, Box<Recipe>),
    Commutator(Box<Recipe>, Box<Recipe>),
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Recipe::Trivial => write!(f, "1"),
            Recipe::Whole => write!(f, "E"),
            Recipe::Center => write!(f, "Z(E)"),
            Recipe::Derived => write!(f, "E'"),
            Recipe::Frattini => write!(f, "Phi(E)"),
            Recipe::Omega => write!(f, "Omega(E)"),
            Recipe::Agemo => write!(f, "Agemo(E)"),
            Recipe::Thompson => write!(f, "J(E)"),
            Recipe::OmegaCenter => write!(f, "Omega(Z(E))"),
            Recipe::UpperCentral(i) => write!(f, "Z_{i}(E)"),
            Recipe::LowerCentral(i) => write!(f, "gamma_{i}(E)"),
            Recipe::DerivedTerm(i) => write!(f, "E^({i})"),
            Recipe::Intersection(a, b) => write!(f, "({a} & {b})"),
            Recipe::Product(a, b) => write!(f, "({a} {b})"),
            Recipe::Commutator(a, b) => write!(f, "[{a}, {b}]"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct TaggedSubgroup {
    pub recipe: Recipe,
    pub subgroup: Subgroup,
}

#[derive(Clone, Debug)]
pub struct ChainWitness {
    /// `1 = E_0 < E_1 < ... < E_m = E`
    pub chain: Vec<TaggedSubgroup>,
    /// An element of `N_S(E) ∖ E·C_S(E)` with `[E_i, g] ≤ E_{i-1}`.
    pub element: u32,
}

/// Largest `E` for which `J(E)` joins the vocabulary.
const THOMPSON_LIMIT: u32 = 256;
const VOCABULARY_LIMIT: usize = 64;

/// Characteristic subgroups of `E` from a fixed vocabulary, closed (up to
/// a size limit) under intersection, product and commutator.
pub fn characteristic_vocabulary<G: FiniteGroup + ?Sized>(g: &G, e: &Subgroup) -> Vec<TaggedSubgroup> {
    let mut list: Vec<TaggedSubgroup> = Vec::new();
    let mut seen: HashMap<Vec<u32>, usize> = HashMap::new();
    let mut add = |list: &mut Vec<TaggedSubgroup>, recipe: Recipe, subgroup: Subgroup| {
        if list.len() < VOCABULARY_LIMIT && !seen.contains_key(subgroup.elements()) {
            seen.insert(subgroup.elements().to_vec(), list.len());
            list.push(TaggedSubgroup { recipe, subgroup });
        }
    };
    add(&mut list, Recipe::Trivial, Subgroup::trivial(g));
    add(&mut list, Recipe::Whole, e.clone());
    let z = center(g, e);
    add(&mut list, Recipe::OmegaCenter, omega(g, &z));
    add(&mut list, Recipe::Center, z);
    add(&mut list, Recipe::Derived, commutator_subgroup(g, e, e));
    add(&mut list, Recipe::Frattini, frattini(g, e));
    add(&mut list, Recipe::Omega, omega(g, e));
    add(&mut list, Recipe::Agemo, agemo(g, e));
    if e.order() <= THOMPSON_LIMIT {
        add(&mut list, Recipe::Thompson, thompson(g, e));
    }
    for (i, s) in upper_central_series(g, e).into_iter().enumerate().skip(2) {
        add(&mut list, Recipe::UpperCentral(i), s);
    }
    for (i, s) in lower_central_series(g, e).into_iter().enumerate().skip(2) {
        add(&mut list, Recipe::LowerCentral(i + 1), s);
    }
    for (i, s) in derived_series(g, e).into_iter().enumerate().skip(2) {
        add(&mut list, Recipe::DerivedTerm(i), s);
    }
    let mut start = 0;
    while start < list.len() && list.len() < VOCABULARY_LIMIT {
        let end = list.len();
        for j in start..end {
            for i in 0..j {
                let (a, b) = (&list[i], &list[j]);
                let ra = Box::new(a.recipe.clone());
                let rb = Box::new(b.recipe.clone());
                let x = intersection(g, &a.subgroup, &b.subgroup);
                let y = product(g, &a.subgroup, &b.subgroup);
                let c = commutator_subgroup(g, &a.subgroup, &b.subgroup);
                add(&mut list, Recipe::Intersection(ra.clone(), rb.clone()), x);
                add(&mut list, Recipe::Product(ra.clone(), rb.clone()), y);
                add(&mut list, Recipe::Commutator(ra, rb), c);
            }
        }
        start = end;
    }
    list
}

/// `C_S(E) ≤ E`
pub fn is_s_centric<G: FiniteGroup + ?Sized>(g: &G, s: &Subgroup, e: &Subgroup) -> bool {
    centralizer_in(g, s, e).is_subgroup_of(e)
}

/// Search for a [`ChainWitness`] that `E ≤ S` is not S-radical.
pub fn chain_centralizer_prune<G: FiniteGroup + ?Sized>(g: &G, s: &Subgroup, e: &Subgroup) -> Option<ChainWitness> {
    let n = normalizer_in(g, s, e);
    let ec = product(g, e, &centralizer_in(g, s, e));
    if n.order() == ec.order() {
        return None;
    }
    let vocab = characteristic_vocabulary(g, e);
    let whole = vocab.iter().position(|t| t.recipe == Recipe::Whole).unwrap();
    for &x in n.elements() {
        if ec.contains(x) {
            continue;
        }
        // BFS from E downwards along steps Y → X with X < Y, [Y, x] ≤ X.
        let mut parent: Vec<Option<usize>> = vec![None; vocab.len()];
        let mut reached = vec![false; vocab.len()];
        reached[whole] = true;
        let mut queue = VecDeque::from([whole]);
        while let Some(yi) = queue.pop_front() {
            let y = &vocab[yi].subgroup;
            for (xi, t) in vocab.iter().enumerate() {
                let xs = &t.subgroup;
                if reached[xi] || xs.order() >= y.order() || !xs.is_subgroup_of(y) {
                    continue;
                }
                if y.generators().iter().all(|&a| xs.contains(g.comm(a, x))) {
                    reached[xi] = true;
                    parent[xi] = Some(yi);
                    queue.push_back(xi);
                }
            }
        }
        if reached[0] {
            let mut chain = vec![vocab[0].clone()];
            let mut cur = 0;
            while let Some(up) = parent[cur] {
                chain.push(vocab[up].clone());
                cur = up;
            }
            return Some(ChainWitness { chain, element: x });
        }
    }
    None
}
