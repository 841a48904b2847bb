use super::{ensure, Lemma, LemmaOptions, Outcome};
use crate::autom::{aut_group, conjugate, PermGroup};
use crate::chevalley::Family;
use crate::gf::GaloisField;
use crate::grptool::{frattini, is_normal, Ambient, DenseGroup, FiniteGroup, Subgroup};

pub(super) type Mat3 = [[u8; 3]; 3];

/// `[[1,0,0],[a,1,0],[c,b,1]]`
pub(super) fn lower(a: u8, b: u8, c: u8) -> Mat3 {
    [[1, 0, 0], [a, 1, 0], [c, b, 1]]
}

pub(super) fn mat_mul(f: &GaloisField, a: &Mat3, b: &Mat3) -> Mat3 {
    let mut out = [[0u8; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            let mut acc = 0;
            for k in 0..3 {
                acc = f.add(acc, f.mul(a[i][k], b[k][j]));
            }
            out[i][j] = acc;
        }
    }
    out
}

/// `x_{r_1}(t_1)...x_{r_k}(t_k)` as an element index.
pub(super) fn word(g: &Ambient, factors: &[(usize, u8)]) -> u32 {
    factors.iter().fold(0, |acc, &(r, t)| g.mul(acc, g.root_element(r, t).expect("parameter in the field")))
}

pub(super) fn field(g: &Ambient) -> &GaloisField {
    g.table().param_field()
}

pub(super) fn nonzero(g: &Ambient) -> Vec<u8> {
    field(g).elements().filter(|&t| t != 0).collect()
}

pub(super) fn subgroup_text(g: &Ambient, h: &Subgroup) -> String {
    let gens: Vec<String> = h.generators().iter().map(|&x| g.format(x)).collect();
    format!("<{}> of order {}", gens.join(", "), h.order())
}

pub(super) fn same(g: &Ambient, what: &str, got: &Subgroup, want: &Subgroup) -> std::result::Result<(), String> {
    ensure(got == want, || {
        format!("{what}: computed {} but expected {}", subgroup_text(g, got), subgroup_text(g, want))
    })
}

pub(super) fn order_is(what: &str, h: &Subgroup, want: u64) -> std::result::Result<(), String> {
    ensure(h.order() as u64 == want, || format!("{what} has order {}, expected {want}", h.order()))
}

/// Checks that `t ↦ matrix(t)` on the words `rep(t)`, `t ∈ K³`, induces an
/// injective homomorphism `domain/kernel → SL_3(q)`: the words form a
/// transversal of `kernel` in `domain`, distinct words give distinct
/// matrices, and `θ(coset(ab)) = θ(a)θ(b)` for every pair of words.
pub(super) fn check_unitriangular(
    g: &Ambient,
    domain: &Subgroup,
    kernel: &Subgroup,
    roots: [usize; 3],
    matrix: impl Fn(&GaloisField, [u8; 3]) -> Mat3 + Sync,
) -> std::result::Result<usize, String> {
    let f = field(g);
    ensure(is_normal(g, kernel, domain), || "the kernel is not normal in the domain".into())?;
    let q = f.order();
    let mut words = Vec::with_capacity(q * q * q);
    let mut params = Vec::with_capacity(q * q * q);
    for t1 in f.elements() {
        for t2 in f.elements() {
            for t3 in f.elements() {
                words.push(word(g, &[(roots[0], t1), (roots[1], t2), (roots[2], t3)]));
                params.push([t1, t2, t3]);
            }
        }
    }
    let mut coset = vec![u32::MAX; g.order() as usize];
    for (i, &w) in words.iter().enumerate() {
        ensure(domain.contains(w), || format!("{} is not in the domain", g.format(w)))?;
        for &z in kernel.elements() {
            let x = g.mul(w, z) as usize;
            let prev = coset[x];
            ensure(prev == u32::MAX, || {
                format!("{} and {} lie in the same coset", g.format(words[prev as usize]), g.format(w))
            })?;
            coset[x] = i as u32;
        }
    }
    ensure(words.len() * kernel.order() as usize == domain.order() as usize, || {
        format!("{} words do not cover a domain of order {}", words.len(), domain.order())
    })?;
    let mats: Vec<Mat3> = params.iter().map(|&t| matrix(f, t)).collect();
    let mut sorted = mats.clone();
    sorted.sort_unstable();
    sorted.dedup();
    ensure(sorted.len() == mats.len(), || "two cosets have the same image".into())?;
    let n = words.len() as u32;
    let bad = g.exec().find_failure(0..n, |i| {
        let a = words[i as usize];
        (0..n as usize).all(|j| {
            let k = coset[g.mul(a, words[j]) as usize] as usize;
            mats[k] == mat_mul(f, &mats[i as usize], &mats[j])
        })
    });
    ensure(bad.is_none(), || {
        let i = bad.unwrap() as usize;
        let a = words[i];
        let j = (0..words.len())
            .find(|&j| mats[coset[g.mul(a, words[j]) as usize] as usize] != mat_mul(f, &mats[i], &mats[j]))
            .unwrap();
        format!("θ(ab) ≠ θ(a)θ(b) for a = {}, b = {}", g.format(a), g.format(words[j]))
    })?;
    Ok(words.len() * words.len())
}

fn expected_g2_exponent(p: u32) -> u64 {
    match p {
        2 => 8,
        3 | 5 => (p * p) as u64,
        _ => p as u64,
    }
}

fn expected_psu_exponent(p: u32) -> u64 {
    match p {
        2 => 4,
        3 => 9,
        _ => p as u64,
    }
}

fn exponent(g: &Ambient, _: &LemmaOptions) -> Outcome {
    let p = g.p();
    let want = match g.table().family() {
        Family::G2 => expected_g2_exponent(p),
        Family::Su4 => expected_psu_exponent(p),
    };
    let got = g.exec().max(0..g.order(), |x| g.element_order(x));
    ensure(got == want, || {
        let x = (0..g.order()).find(|&x| g.element_order(x) == got).unwrap();
        format!("exponent {got}, expected {want}; {} has order {got}", g.format(x))
    })?;
    Ok(format!("exponent {got}"))
}

/// Automorphisms acting trivially on `S/Φ(S)` form a normal p-subgroup.
fn burnside(g: &Ambient, opts: &LemmaOptions) -> Outcome {
    let s = g.whole();
    let dense = DenseGroup::from_subgroup(g, &s).map_err(|e| e.to_string())?;
    let aut = aut_group(&dense, opts.aut).map_err(|e| e.to_string())?;
    let whole = dense.whole();
    let phi = frattini(&dense, &whole);
    let gens = whole.generators().to_vec();
    let kernel: Vec<_> = aut
        .group
        .elements()
        .iter()
        .filter(|a| gens.iter().all(|&x| phi.contains(dense.mul(dense.inv(x), a[x as usize] as u32))))
        .cloned()
        .collect();
    let k = kernel.len() as u64;
    let c = PermGroup::from_elements(kernel, opts.aut.max_order).map_err(|e| format!("kernel is not a subgroup: {e}"))?;
    let p = g.p() as u64;
    let mut m = k;
    while m % p == 0 {
        m /= p;
    }
    ensure(m == 1, || format!("the kernel has order {k}, not a power of {p}"))?;
    ensure(c.is_normal_in(&aut.group), || {
        let a = aut.group.generators().iter().find(|a| !c.normalizes(a)).unwrap();
        let b = c.elements().iter().find(|b| !c.contains(&conjugate(b, a))).unwrap();
        format!("conjugating the kernel element {b:?} by {a:?} leaves the kernel")
    })?;
    Ok(format!("|Aut(S)| = {}, |C_Aut(S)(S/Φ(S))| = {k}, normal", aut.order()))
}

pub(super) const G2_EXPONENT: Lemma = Lemma {
    id: "G2Exponent",
    family: Family::G2,
    statement: "S has exponent 8 for p = 2, p² for p ∈ {3, 5} and p for p ≥ 7",
    scope: |_, _| true,
    scope_text: "any q",
    support: &[2, 3, 4, 5, 7, 8, 9],
    run: exponent,
};

pub(super) const PSU_EXPONENT: Lemma = Lemma {
    id: "PSUExponent",
    family: Family::Su4,
    statement: "S has exponent 4 for p = 2, 9 for p = 3 and p for p ≥ 5",
    scope: |_, _| true,
    scope_text: "any q",
    support: &[2, 3, 4, 5],
    run: exponent,
};

const BURNSIDE_TEXT: &str = "C_Aut(S)(S/Φ(S)) is a normal p-subgroup of Aut(S)";

pub(super) const BURNSIDE_G2: Lemma = Lemma {
    id: "burnside-sanity",
    family: Family::G2,
    statement: BURNSIDE_TEXT,
    scope: |_, _| true,
    scope_text: "any q",
    support: &[2],
    run: burnside,
};

pub(super) const BURNSIDE_SU4: Lemma = Lemma { family: Family::Su4, ..BURNSIDE_G2 };
