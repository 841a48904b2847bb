use fixedbitset::FixedBitSet;

use super::perm::{Perm, PermGroup};
use super::{aut_group, p_core, AutCaps};
use crate::grptool::{
    centralizer_in, chain_centralizer_prune, normalizer_in, product, ChainWitness, DenseGroup, FiniteGroup, Subgroup,
};

#[derive(Clone, Debug)]
pub enum RadicalCertificate {
    /// `O_p(Aut(E)) = O_p(GL_d(p)) = 1`.
    ElementaryAbelian,
    /// `N_S(E) = E·C_S(E)`.
    OutTrivial,
    Chain(ChainWitness),
    PCore {
        aut_order: u64,
        core_order: u64,
        out_s_order: u32,
        /// Element of `N_S(E) ∖ E·C_S(E)` acting through `O_p(Aut(E))`.
        witness: Option<u32>,
    },
}

impl RadicalCertificate {
    pub fn kind(&self) -> &'static str {
        match self {
            RadicalCertificate::ElementaryAbelian => "elementary-abelian",
            RadicalCertificate::OutTrivial => "out-trivial",
            RadicalCertificate::Chain(_) => "chain",
            RadicalCertificate::PCore { .. } => "p-core",
        }
    }
}

#[derive(Clone, Debug)]
pub enum RadicalVerdict {
    Radical(RadicalCertificate),
    NotRadical(RadicalCertificate),
    Undecided(String),
}

impl RadicalVerdict {
    pub fn decided(&self) -> Option<bool> {
        match self {
            RadicalVerdict::Radical(_) => Some(true),
            RadicalVerdict::NotRadical(_) => Some(false),
            RadicalVerdict::Undecided(_) => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            RadicalVerdict::Radical(_) => "radical",
            RadicalVerdict::NotRadical(_) => "not-radical",
            RadicalVerdict::Undecided(_) => "undecided",
        }
    }
}

/// Conjugation by `x` restricted to `E`, as a permutation of local indices.
pub fn inner_automorphism<G: FiniteGroup + ?Sized>(g: &G, e: &DenseGroup, x: u32) -> Perm {
    (0..e.order())
        .map(|i| {
            let y = g.conj(e.parent_index(i), x);
            e.local_index(y).expect("x normalises E") as u16
        })
        .collect()
}

/// One element from each non-trivial coset of `E·C_S(E)` in `N_S(E)`.
pub fn outer_s_representatives<G: FiniteGroup + ?Sized>(g: &G, n: &Subgroup, ec: &Subgroup) -> Vec<u32> {
    let mut covered = FixedBitSet::with_capacity(g.order() as usize);
    for &y in ec.elements() {
        covered.insert(y as usize);
    }
    let mut reps = Vec::new();
    for &x in n.elements() {
        if covered.contains(x as usize) {
            continue;
        }
        reps.push(x);
        for &y in ec.elements() {
            covered.insert(g.mul(x, y) as usize);
        }
    }
    reps
}

/// `E` is S-radical when no element of `N_S(E) ∖ E·C_S(E)` induces an automorphism
/// in `O_p(Aut(E))`. With `fast` set, elementary abelian subgroups and chain
/// witnesses short-cut the automorphism group computation.
pub fn is_s_radical<G: FiniteGroup + ?Sized>(
    g: &G,
    s: &Subgroup,
    e: &Subgroup,
    caps: AutCaps,
    fast: bool,
) -> RadicalVerdict {
    let n = normalizer_in(g, s, e);
    let ec = product(g, e, &centralizer_in(g, s, e));
    if n.order() == ec.order() {
        return RadicalVerdict::Radical(RadicalCertificate::OutTrivial);
    }
    if fast {
        if e.is_elementary_abelian(g) {
            return RadicalVerdict::Radical(RadicalCertificate::ElementaryAbelian);
        }
        if let Some(w) = chain_centralizer_prune(g, s, e) {
            return RadicalVerdict::NotRadical(RadicalCertificate::Chain(w));
        }
    }
    let dense = match DenseGroup::from_subgroup(g, e) {
        Ok(d) => d,
        Err(err) => return RadicalVerdict::Undecided(err.to_string()),
    };
    let aut = match aut_group(&dense, caps) {
        Ok(a) => a,
        Err(err) => return RadicalVerdict::Undecided(err.to_string()),
    };
    let seed: Vec<Perm> = n.generators().iter().map(|&x| inner_automorphism(g, &dense, x)).collect();
    let core: PermGroup = match p_core(&aut.group, g.p(), &seed) {
        Ok(c) => c,
        Err(err) => return RadicalVerdict::Undecided(err.to_string()),
    };
    let out_s_order = n.order() / ec.order();
    let witness = outer_s_representatives(g, &n, &ec)
        .into_iter()
        .find(|&x| core.contains(&inner_automorphism(g, &dense, x)));
    let cert = RadicalCertificate::PCore {
        aut_order: aut.order(),
        core_order: core.order() as u64,
        out_s_order,
        witness,
    };
    if witness.is_some() {
        RadicalVerdict::NotRadical(cert)
    } else {
        RadicalVerdict::Radical(cert)
    }
}
