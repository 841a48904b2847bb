use super::subgroup::{extend, generated_by, normal_closure, Subgroup};
use super::FiniteGroup;

/// `Φ(H) = H′Hᵖ`, the normal closure of generator commutators and p-th
/// powers.
pub fn frattini<G: FiniteGroup + ?Sized>(g: &G, h: &Subgroup) -> Subgroup {
    let gens = h.generators();
    let p = g.p() as u64;
    let mut xs: Vec<u32> = gens.iter().map(|&a| g.pow(a, p)).collect();
    for (i, &a) in gens.iter().enumerate() {
        for &b in &gens[i + 1..] {
            xs.push(g.comm(a, b));
        }
    }
    normal_closure(g, &xs, gens)
}

/// `Ω(H) = ⟨h ∈ H : hᵖ = 1⟩`
pub fn omega<G: FiniteGroup + ?Sized>(g: &G, h: &Subgroup) -> Subgroup {
    let p = g.p() as u64;
    let els = h.elements();
    let hits = g.exec().filter(0..els.len() as u32, |i| g.pow(els[i as usize], p) == 0);
    generated_by(g, hits.into_iter().map(|i| els[i as usize]))
}

/// `℧(H) = ⟨hᵖ : h ∈ H⟩`
pub fn agemo<G: FiniteGroup + ?Sized>(g: &G, h: &Subgroup) -> Subgroup {
    let p = g.p() as u64;
    let mut powers: Vec<u32> = g.exec().map_slice(h.elements(), |&x| g.pow(x, p));
    powers.sort_unstable();
    powers.dedup();
    generated_by(g, powers)
}

/// `H/Φ(H)` as `F_p^d`: a Burnside basis and the coordinate vector of
/// every element of `H`, packed base `p` with basis element `i` at digit `i`.
#[derive(Clone, Debug)]
pub struct FrattiniQuotient {
    pub phi: Subgroup,
    pub basis: Vec<u32>,
    coords: Vec<u32>,
    p: u32,
}

impl FrattiniQuotient {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Packed coordinates of `x ∈ H`.
    pub fn code(&self, x: u32) -> u32 {
        self.coords[x as usize]
    }

    pub fn vector(&self, x: u32) -> Vec<u32> {
        let mut c = self.code(x);
        (0..self.rank())
            .map(|_| {
                let d = c % self.p;
                c /= self.p;
                d
            })
            .collect()
    }
}

/// Greedy Burnside basis, in index order of `candidates` (all of `H` when
/// `None`).
pub fn minimal_generating_set<G: FiniteGroup + ?Sized>(g: &G, h: &Subgroup, candidates: Option<&[u32]>) -> Vec<u32> {
    let phi = frattini(g, h);
    burnside_basis(g, h, &phi, candidates.unwrap_or(h.elements()))
}

fn burnside_basis<G: FiniteGroup + ?Sized>(g: &G, h: &Subgroup, phi: &Subgroup, order: &[u32]) -> Vec<u32> {
    let mut k = phi.clone();
    let mut basis = Vec::new();
    for &x in order {
        if k.order() == h.order() {
            break;
        }
        if !k.contains(x) {
            k = extend(g, &k, &[x]);
            basis.push(x);
        }
    }
    basis
}

pub fn frattini_quotient<G: FiniteGroup + ?Sized>(g: &G, h: &Subgroup) -> FrattiniQuotient {
    let phi = frattini(g, h);
    let basis = burnside_basis(g, h, &phi, h.elements());
    let p = g.p();
    let d = basis.len();
    let mut coords = vec![u32::MAX; g.order() as usize];
    let total = p.pow(d as u32);
    for code in 0..total {
        let mut rep = 0u32;
        let mut c = code;
        for &b in &basis {
            rep = g.mul(rep, g.pow(b, (c % p) as u64));
            c /= p;
        }
        for &f in phi.elements() {
            coords[g.mul(f, rep) as usize] = code;
        }
    }
    FrattiniQuotient { phi, basis, coords, p }
}

/// All index-p subgroups of `H`: kernels of the nonzero functionals on
/// `H/Φ(H)`, one per line of the dual space (leading coefficient 1).
pub fn maximal_subgroups<G: FiniteGroup + ?Sized>(g: &G, h: &Subgroup) -> Vec<Subgroup> {
    let fq = frattini_quotient(g, h);
    let p = g.p();
    let d = fq.rank();
    let digits = |mut c: u32| -> Vec<u32> {
        (0..d)
            .map(|_| {
                let x = c % p;
                c /= p;
                x
            })
            .collect()
    };
    let codes: Vec<Vec<u32>> = (0..p.pow(d as u32)).map(digits).collect();
    let mut out = Vec::new();
    for lam in 1..p.pow(d as u32) {
        let l = digits(lam);
        if l.iter().find(|&&c| c != 0) != Some(&1) {
            continue;
        }
        let in_kernel = |code: u32| {
            let v = &codes[code as usize];
            v.iter().zip(&l).map(|(a, b)| a * b).sum::<u32>() % p == 0
        };
        let elements: Vec<u32> = h.elements().iter().copied().filter(|&x| in_kernel(fq.code(x))).collect();
        // generators: Φ(H) plus a basis of the kernel of λ on F_p^d
        let pivot = l.iter().position(|&c| c != 0).unwrap();
        let mut gens: Vec<u32> = fq.phi.generators().to_vec();
        for (i, &b) in fq.basis.iter().enumerate() {
            if i == pivot {
                continue;
            }
            // b_i - λ_i b_pivot lies in the kernel
            let coeff = (p - l[i] % p) % p;
            gens.push(g.mul(b, g.pow(fq.basis[pivot], coeff as u64)));
        }
        out.push(Subgroup::from_parts(g.order(), elements, gens));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chevalley::{Family, GroupTable};
    use crate::grptool::{closure, Ambient};

    #[test]
    fn elementary_abelian_frattini_trivial() {
        let s = Ambient::new(GroupTable::build(Family::G2, 2).unwrap()).unwrap();
        let e = s.root_product(&[3, 4, 5]);
        assert!(e.is_elementary_abelian(&s));
        assert!(frattini(&s, &e).is_trivial());
        assert_eq!(maximal_subgroups(&s, &e).len(), 7);
    }

    #[test]
    fn maximal_subgroups_are_closed_and_contain_phi() {
        let s = Ambient::new(GroupTable::build(Family::Su4, 2).unwrap()).unwrap();
        let whole = s.whole();
        let phi = frattini(&s, &whole);
        for m in maximal_subgroups(&s, &whole) {
            assert_eq!(m.order() * 2, whole.order());
            assert!(phi.is_subgroup_of(&m));
            assert_eq!(closure(&s, m.generators()), m);
        }
    }
}
