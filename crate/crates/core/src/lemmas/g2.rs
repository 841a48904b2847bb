use std::collections::{BTreeMap, BTreeSet};

use super::common::{check_unitriangular, lower, nonzero, order_is, same, subgroup_text, word};
use super::{ensure, Lemma, LemmaOptions, Outcome};
use crate::chevalley::g2::{A, A2B, A3B, A3B2, AB, B};
use crate::chevalley::Family;
use crate::grptool::{
    agemo, center, centralizer_in, centralizer_of_element, centralizer_of_quotient, commutator_subgroup,
    conjugacy_classes, derived_subgroup, frattini, generated_by, intersection, lower_central_series,
    max_rank_elementary_abelians, maximal_elementary_abelians, maximal_subgroups, nilpotency_class, normalizer_in,
    omega, product, subgroup_orbits, upper_central_series, Ambient, FiniteGroup, Subgroup,
};

type Check = std::result::Result<(), String>;

fn pow(q: u32, k: u32) -> u64 {
    (q as u64).pow(k)
}

// p = 2

fn p2_q1(g: &Ambient) -> Subgroup {
    g.root_product(&[B, AB, A2B, A3B, A3B2])
}

fn p2_q2(g: &Ambient) -> Subgroup {
    g.root_product(&[A, AB, A2B, A3B, A3B2])
}

fn thomas(g: &Ambient, _: &LemmaOptions) -> Outcome {
    let q = g.table().q();
    let s = g.whole();
    let nz = nonzero(g);
    let all: Vec<u8> = g.table().param_field().elements().collect();
    let mut forms: Vec<(&str, Vec<u32>, u32)> = vec![
        ("x_a(t)", nz.iter().map(|&t| word(g, &[(A, t)])).collect(), 3),
        (
            "x_b(t)x_2a+b(t')",
            nz.iter().flat_map(|&t| all.iter().map(move |&u| (t, u))).map(|(t, u)| word(g, &[(B, t), (A2B, u)])).collect(),
            4,
        ),
        ("x_2a+b(t)", nz.iter().map(|&t| word(g, &[(A2B, t)])).collect(), 4),
        ("x_a+b(t)", nz.iter().map(|&t| word(g, &[(AB, t)])).collect(), 4),
        ("x_3a+b(t)", nz.iter().map(|&t| word(g, &[(A3B, t)])).collect(), 5),
        ("x_3a+2b(t)", nz.iter().map(|&t| word(g, &[(A3B2, t)])).collect(), 6),
    ];
    let mut form_set = BTreeSet::new();
    for (name, xs, k) in &mut forms {
        for &x in xs.iter() {
            ensure(g.element_order(x) == 2, || format!("{} of shape {name} is not an involution", g.format(x)))?;
            let c = centralizer_of_element(g, &s, x);
            order_is(&format!("C_S({})", g.format(x)), &c, pow(q, *k))?;
            form_set.insert(x);
        }
    }
    let classes = conjugacy_classes(g, &s, s.generators());
    let involution_classes: Vec<&Vec<u32>> = classes.iter().filter(|c| g.element_order(c[0]) == 2).collect();
    for c in &involution_classes {
        ensure(c.iter().any(|x| form_set.contains(x)), || {
            format!("the S-class of {} meets none of the six forms", g.format(c[0]))
        })?;
    }

    let q1 = p2_q1(g);
    let q2 = p2_q2(g);
    let named = [
        ("T", g.root_product(&[A, A3B, A3B2]), &q2),
        ("U", g.root_product(&[B, A2B, A3B2]), &q1),
        ("V", g.root_product(&[B, AB, A3B2]), &q1),
        ("W", g.root_product(&[A2B, A3B, A3B2]), &s),
        ("X", g.root_product(&[AB, A3B, A3B2]), &s),
    ];
    let eas = maximal_elementary_abelians(g, &s);
    for e in &eas {
        order_is(&format!("maximal elementary abelian {}", subgroup_text(g, e)), e, pow(q, 3))?;
    }
    let orbits = subgroup_orbits(g, &eas, s.generators());
    ensure(orbits.len() == 5, || format!("{} S-classes of maximal elementary abelian subgroups, expected 5", orbits.len()))?;
    let mut hit = BTreeSet::new();
    for (name, e, n) in &named {
        let pos = eas.iter().position(|x| x == e);
        ensure(pos.is_some(), || format!("{name} = {} is not maximal elementary abelian", subgroup_text(g, e)))?;
        let orbit = orbits.iter().position(|o| o.contains(&pos.unwrap())).unwrap();
        ensure(hit.insert(orbit), || format!("{name} is S-conjugate to an earlier subgroup of the list"))?;
        same(g, &format!("N_S({name})"), &normalizer_in(g, &s, e), n)?;
    }
    let z3 = g.root_product(&[AB, A2B, A3B, A3B2]);
    same(g, "WX", &product(g, &named[3].1, &named[4].1), &z3)?;
    let t = &named[0].1;
    ensure(t.is_subgroup_of(&q2) && !t.is_subgroup_of(&q1), || "T ≤ Q_2 and T ≰ Q_1 fails".into())?;
    for (name, e, _) in &named[1..3] {
        ensure(e.is_subgroup_of(&q1) && !e.is_subgroup_of(&q2), || format!("{name} ≤ Q_1 and {name} ≰ Q_2 fails"))?;
    }
    let sizes: Vec<usize> = orbits.iter().map(|o| o.len()).collect();
    Ok(format!(
        "{} involution classes, all meeting the six forms; centralizer orders q^3,q^4,q^4,q^4,q^5,q^6; \
         {} maximal elementary abelian subgroups of order q^3 in 5 S-classes of sizes {:?}; normalizers Q_2,Q_1,Q_1,S,S",
        involution_classes.len(),
        eas.len(),
        sizes
    ))
}

fn p2_series(g: &Ambient, _: &LemmaOptions) -> Outcome {
    let q = g.table().q();
    let s = g.whole();
    let upper = upper_central_series(g, &s);
    ensure(upper.len() > 3, || format!("upper central series has only {} terms", upper.len()))?;
    let want = [(1, g.root_product(&[A3B2]), 1), (2, g.root_product(&[A3B, A3B2]), 2), (3, g.root_product(&[AB, A2B, A3B, A3B2]), 4)];
    for (i, z, k) in &want {
        same(g, &format!("Z_{i}(S)"), &upper[*i], z)?;
        order_is(&format!("Z_{i}(S)"), z, pow(q, *k))?;
    }
    Ok("Z(S), Z_2(S), Z_3(S) are X_3a+2b, X_3a+bX_3a+2b, X_a+bX_2a+bX_3a+bX_3a+2b of orders q, q^2, q^4".into())
}

fn p2_radicals(g: &Ambient, _: &LemmaOptions) -> Outcome {
    let q = g.table().q();
    let s = g.whole();
    let z = g.root_product(&[A3B2]);
    let z2 = g.root_product(&[A3B, A3B2]);
    let z3 = g.root_product(&[AB, A2B, A3B, A3B2]);
    same(g, "Z(S)", &center(g, &s), &z)?;
    let q1 = centralizer_of_quotient(g, &s, &z3, &z);
    let q2 = centralizer_in(g, &s, &z2);
    same(g, "C_S(Z_3(S)/Z(S))", &q1, &p2_q1(g))?;
    same(g, "C_S(Z_2(S))", &q2, &p2_q2(g))?;
    order_is("Q_1", &q1, pow(q, 5))?;
    order_is("Q_2", &q2, pow(q, 5))?;
    same(g, "Φ(Q_1)", &frattini(g, &q1), &z)?;
    same(g, "Z(Q_1)", &center(g, &q1), &z)?;
    same(g, "Φ(Q_2)", &frattini(g, &q2), &z2)?;
    same(g, "Z(Q_2)", &center(g, &q2), &z2)?;
    Ok("Q_1 = C_S(Z_3/Z) and Q_2 = C_S(Z_2) are the root products of order q^5; Φ(Q_1) = Z(Q_1) = Z(S), Φ(Q_2) = Z_2(S) = Z(Q_2)".into())
}

// p = 3

struct P3 {
    s: Subgroup,
    q: [Subgroup; 2],
    zq: [Subgroup; 2],
    phi: [Subgroup; 2],
    zs: Subgroup,
    meet: Subgroup,
}

impl P3 {
    fn new(g: &Ambient) -> Self {
        P3 {
            s: g.whole(),
            q: [g.root_product(&[B, A3B, AB, A2B, A3B2]), g.root_product(&[A, AB, A3B, A3B2, A2B])],
            zq: [g.root_product(&[AB, A2B, A3B2]), g.root_product(&[A3B, A3B2, A2B])],
            phi: [g.root_product(&[A3B2]), g.root_product(&[A2B])],
            zs: g.root_product(&[A2B, A3B2]),
            meet: g.root_product(&[A3B, AB, A2B, A3B2]),
        }
    }

    /// The root-product descriptions agree with the intrinsic ones.
    fn check_names(&self, g: &Ambient) -> Check {
        same(g, "Z(S)", &center(g, &self.s), &self.zs)?;
        same(g, "Q_1 ∩ Q_2", &intersection(g, &self.q[0], &self.q[1]), &self.meet)?;
        for i in 0..2 {
            same(g, &format!("Z(Q_{})", i + 1), &center(g, &self.q[i]), &self.zq[i])?;
            same(g, &format!("Φ(Q_{})", i + 1), &frattini(g, &self.q[i]), &self.phi[i])?;
        }
        Ok(())
    }
}

/// `⟨[x, y] : y ∈ H⟩`
fn element_commutators(g: &Ambient, x: u32, h: &Subgroup) -> Subgroup {
    let mut cs: Vec<u32> = h.elements().iter().map(|&y| g.comm(x, y)).collect();
    cs.sort_unstable();
    cs.dedup();
    generated_by(g, cs)
}

fn p_structure(g: &Ambient, _: &LemmaOptions) -> Outcome {
    let q = g.table().q();
    let d = P3::new(g);
    d.check_names(g)?;
    let s = &d.s;

    // (i)
    same(g, "(i) Z(Q_1)Z(Q_2)", &product(g, &d.zq[0], &d.zq[1]), &d.meet)?;
    order_is("(i) Q_1 ∩ Q_2", &d.meet, pow(q, 4))?;
    let a_s = max_rank_elementary_abelians(g, s);
    ensure(a_s.contains(&d.meet), || "(i) Q_1 ∩ Q_2 is not in A(S)".into())?;
    // (ii)
    let class = nilpotency_class(g, s);
    ensure(class == 3, || format!("(ii) S has nilpotency class {class}"))?;
    // (iii)
    for i in 0..2 {
        same(g, &format!("(iii) C_S(Z(Q_{}))", i + 1), &centralizer_in(g, s, &d.zq[i]), &d.q[i])?;
        order_is(&format!("(iii) Z(Q_{})", i + 1), &d.zq[i], pow(q, 3))?;
        order_is(&format!("(iii) Φ(Q_{})", i + 1), &d.phi[i], q as u64)?;
    }
    same(g, "(iii) Z(Q_1) ∩ Z(Q_2)", &intersection(g, &d.zq[0], &d.zq[1]), &d.zs)?;
    same(g, "(iii) Φ(Q_1)Φ(Q_2)", &product(g, &d.phi[0], &d.phi[1]), &d.zs)?;
    ensure(intersection(g, &d.phi[0], &d.phi[1]).is_trivial(), || "(iii) Φ(Q_1) ∩ Φ(Q_2) ≠ 1".into())?;
    order_is("(iii) Z(S)", &d.zs, pow(q, 2))?;
    // (iv)
    for i in 0..2 {
        let c = commutator_subgroup(g, &d.q[i], &d.zq[1 - i]);
        same(g, &format!("(iv) [Q_{}, Z(Q_{})]", i + 1, 2 - i), &c, &d.phi[i])?;
    }
    // (v)
    for i in 0..2 {
        let outside: Vec<u32> = s.elements().iter().copied().filter(|&x| !d.q[i].contains(x)).collect();
        let bad = g.exec().find_failure(0..outside.len() as u32, |k| {
            let x = outside[k as usize];
            product(g, &element_commutators(g, x, &d.q[i]), &d.zq[i]) == d.meet
                && product(g, &element_commutators(g, x, &d.zq[i]), &d.phi[i]) == d.zs
        });
        ensure(bad.is_none(), || {
            format!("(v) fails for x = {} outside Q_{}", g.format(outside[bad.unwrap() as usize]), i + 1)
        })?;
    }
    // (vi)
    for i in 0..2 {
        let e = d.q[i].exponent(g);
        ensure(e == 3, || format!("(vi) Q_{} has exponent {e}", i + 1))?;
    }
    let e = s.exponent(g);
    ensure(e == 9, || format!("(vi) S has exponent {e}"))?;
    same(g, "(vi) Ω(S)", &omega(g, s), s)?;
    same(g, "(vi) ℧(S)", &agemo(g, s), &d.zs)?;
    // (vii)
    let stray = s.elements().iter().find(|&&z| g.element_order(z) == 3 && !d.q[0].contains(z) && !d.q[1].contains(z));
    ensure(stray.is_none(), || format!("(vii) {} has order 3 outside Q_1 ∪ Q_2", g.format(*stray.unwrap())))?;
    // (viii)
    let only1: Vec<u32> = d.q[0].elements().iter().copied().filter(|&x| !d.q[1].contains(x)).collect();
    let only2: Vec<u32> = d.q[1].elements().iter().copied().filter(|&x| !d.q[0].contains(x)).collect();
    let bad = g.exec().find_failure(0..only1.len() as u32, |k| {
        let x = only1[k as usize];
        only2.iter().all(|&y| g.comm(g.comm(y, x), x) != 0 && g.comm(g.comm(x, y), y) != 0)
    });
    ensure(bad.is_none(), || {
        let x = only1[bad.unwrap() as usize];
        let y = only2.iter().find(|&&y| g.comm(g.comm(y, x), x) == 0 || g.comm(g.comm(x, y), y) == 0).unwrap();
        format!("(viii) fails for x = {}, y = {}", g.format(x), g.format(*y))
    })?;
    Ok(format!(
        "items (i)-(viii) hold; nilpotency class 3, exponent 9, |A(S)| = {}, {} pairs checked in (viii)",
        a_s.len(),
        only1.len() * only2.len()
    ))
}

/// An exponent-3 subgroup outside both `Q_i` would contain `r ∈ Q_1∖Q_2`,
/// `s ∈ Q_2∖Q_1` (all order-3 elements lie in `Q_1 ∪ Q_2`) and hence `rs`
/// of order 3. So it suffices that every such `rs` has order 9.
fn exp3(g: &Ambient, _: &LemmaOptions) -> Outcome {
    let d = P3::new(g);
    let s = &d.s;
    let stray = s.elements().iter().find(|&&z| g.element_order(z) == 3 && !d.q[0].contains(z) && !d.q[1].contains(z));
    ensure(stray.is_none(), || format!("{} has order 3 outside Q_1 ∪ Q_2", g.format(*stray.unwrap())))?;
    let only1: Vec<u32> = d.q[0].elements().iter().copied().filter(|&x| !d.q[1].contains(x)).collect();
    let only2: Vec<u32> = d.q[1].elements().iter().copied().filter(|&x| !d.q[0].contains(x)).collect();
    let bad = g
        .exec()
        .find_failure(0..only1.len() as u32, |k| only2.iter().all(|&y| g.element_order(g.mul(only1[k as usize], y)) == 9));
    ensure(bad.is_none(), || {
        let r = only1[bad.unwrap() as usize];
        let t = only2.iter().find(|&&y| g.element_order(g.mul(r, y)) != 9).unwrap();
        format!("<{}, {}> has exponent 3 and lies in neither Q_i", g.format(r), g.format(*t))
    })?;
    Ok(format!("every element of order 3 lies in Q_1 ∪ Q_2 and rs has order 9 for all {} pairs", only1.len() * only2.len()))
}

fn swapping_core(g: &Ambient, _: &LemmaOptions) -> Outcome {
    let d = P3::new(g);
    let maxes = maximal_subgroups(g, &d.s);
    let exp3: Vec<&Subgroup> = maxes.iter().filter(|m| m.exponent(g) == 3).collect();
    ensure(exp3.len() == 2 && exp3.contains(&&d.q[0]) && exp3.contains(&&d.q[1]), || {
        let names: Vec<String> = exp3.iter().map(|m| subgroup_text(g, m)).collect();
        format!("maximal subgroups of exponent 3: {}", names.join("; "))
    })?;
    Ok(format!("{} maximal subgroups, exactly Q_1 and Q_2 of exponent 3", maxes.len()))
}

fn qi_cent(g: &Ambient, _: &LemmaOptions) -> Outcome {
    let q = g.table().q();
    let d = P3::new(g);
    d.check_names(g)?;
    let mut sizes = Vec::new();
    for i in 0..2 {
        let qi = &d.q[i];
        let mut cents = BTreeSet::new();
        for &x in qi.elements().iter().filter(|&&x| !d.zq[i].contains(x)) {
            let c = centralizer_of_element(g, qi, x);
            order_is(&format!("C_Q{}({})", i + 1, g.format(x)), &c, pow(q, 4))?;
            cents.insert(c.elements().to_vec());
        }
        let a: BTreeSet<Vec<u32>> = max_rank_elementary_abelians(g, qi).iter().map(|e| e.elements().to_vec()).collect();
        ensure(a == cents, || {
            format!("A(Q_{}) has {} members but there are {} centralizers C_Q(x)", i + 1, a.len(), cents.len())
        })?;
        sizes.push(a.len());
    }
    Ok(format!("|C_Qi(x)| = q^4 for x ∈ Q_i∖Z(Q_i); |A(Q_1)| = {}, |A(Q_2)| = {}, both equal to the centralizer sets", sizes[0], sizes[1]))
}

fn sl3_sub(g: &Ambient, _: &LemmaOptions) -> Outcome {
    let x = g.root_product(&[B, A3B, A3B2]);
    let pairs = check_unitriangular(g, &x, &Subgroup::trivial(g), [A3B, B, A3B2], |_, [t1, t2, t3]| lower(t1, t2, t3))?;
    Ok(format!("θ is an injective homomorphism X → SL_3(q), {pairs} pairs"))
}

fn sl3_quo(g: &Ambient, _: &LemmaOptions) -> Outcome {
    let d = P3::new(g);
    d.check_names(g)?;
    let p1 = check_unitriangular(g, &d.s, &d.zq[0], [B, A, A3B], |f, [t1, t2, t3]| lower(t1, f.pow(t2, 3), t3))
        .map_err(|w| format!("θ_1: {w}"))?;
    let p2 = check_unitriangular(g, &d.s, &d.zq[1], [A, B, AB], |_, [t1, t2, t3]| lower(t1, t2, t3))
        .map_err(|w| format!("θ_2: {w}"))?;
    Ok(format!("θ_1 on S/Z(Q_1) and θ_2 on S/Z(Q_2) are well defined injective homomorphisms, {} pairs", p1 + p2))
}

// p ≥ 5

fn series(g: &Ambient, _: &LemmaOptions) -> Outcome {
    let q = g.table().q();
    let s = g.whole();
    let upper = upper_central_series(g, &s);
    let lower = lower_central_series(g, &s);
    ensure(upper.len() == 6 && lower.len() == 6, || {
        format!("series lengths {} (upper) and {} (lower), expected 6", upper.len(), lower.len())
    })?;
    let named = [
        g.root_product(&[A3B2]),
        g.root_product(&[A3B, A3B2]),
        g.root_product(&[A2B, A3B, A3B2]),
        g.root_product(&[AB, A2B, A3B, A3B2]),
    ];
    for (k, z) in named.iter().enumerate() {
        let i = k + 1;
        same(g, &format!("Z_{i}(S)"), &upper[i], z)?;
        same(g, &format!("γ_{}(S)", 6 - i), &lower[5 - i], z)?;
        order_is(&format!("Z_{i}(S)"), z, pow(q, i as u32))?;
    }
    same(g, "S'", &derived_subgroup(g, &s), &named[3])?;
    let q1 = centralizer_of_quotient(g, &s, &named[2], &named[0]);
    let q2 = centralizer_in(g, &s, &named[1]);
    same(g, "C_S(Z_3(S)/Z(S))", &q1, &g.root_product(&[B, AB, A2B, A3B, A3B2]))?;
    same(g, "C_S(Z_2(S))", &q2, &g.root_product(&[A, AB, A2B, A3B, A3B2]))?;
    same(g, "Φ(Q_1)", &frattini(g, &q1), &named[0])?;
    same(g, "Z(Q_1)", &center(g, &q1), &named[0])?;
    same(g, "Φ(Q_2)", &frattini(g, &q2), &named[2])?;
    Ok("Z_i(S) = γ_{6-i}(S) of orders q, q^2, q^3, q^4 with the root-group descriptions; Q_1, Q_2 of order q^5; Φ(Q_1) = Z(Q_1) = Z(S), Φ(Q_2) = Z_3(S)".into())
}

fn q15_iden(g: &Ambient, _: &LemmaOptions) -> Outcome {
    let s = g.whole();
    let x1 = g.root_product(&[B, A3B, A3B2]);
    let x2 = g.root_product(&[A2B, AB, A3B2]);
    let z = center(g, &s);
    let one = Subgroup::trivial(g);
    let p1 = check_unitriangular(g, &x1, &one, [A3B, B, A3B2], |_, [t1, t2, t3]| lower(t1, t2, t3))
        .map_err(|w| format!("θ_1: {w}"))?;
    let p2 = check_unitriangular(g, &x2, &one, [A2B, AB, A3B2], |f, [t1, t2, t3]| lower(t1, f.mul(f.from_int(3), t2), t3))
        .map_err(|w| format!("θ_2: {w}"))?;
    ensure(commutator_subgroup(g, &x1, &x2).is_trivial(), || "[X_1, X_2] ≠ 1".into())?;
    same(g, "X_1 ∩ X_2", &intersection(g, &x1, &x2), &z)?;
    same(g, "Z(X_1)", &center(g, &x1), &z)?;
    same(g, "Z(X_2)", &center(g, &x2), &z)?;
    same(g, "X_1X_2", &product(g, &x1, &x2), &g.root_product(&[B, AB, A2B, A3B, A3B2]))?;
    Ok(format!("θ_1, θ_2 injective homomorphisms ({} pairs); [X_1,X_2] = 1, X_1 ∩ X_2 = Z(S), X_1X_2 = Q_1", p1 + p2))
}

fn five_conj(g: &Ambient, _: &LemmaOptions) -> Outcome {
    let s = g.whole();
    let f = g.table().param_field();
    let upper = upper_central_series(g, &s);
    ensure(upper.len() > 3, || "upper central series too short".into())?;
    let (z2, z3) = (&upper[2], &upper[3]);
    let third = f.inv(f.from_int(3)).map_err(|e| e.to_string())?;
    let mut counts = BTreeMap::new();
    for &x in z3.elements().iter().filter(|&&x| !z2.contains(x)) {
        let params = g.table().params(g.element(x));
        let [t1, t2, t3] = [params[A2B], params[A3B], params[A3B2]];
        ensure(params[A] == 0 && params[B] == 0 && params[AB] == 0 && t1 != 0, || {
            format!("{} is not of the form x_2a+b(t1)x_3a+b(t2)x_3a+2b(t3) with t1 ≠ 0", g.format(x))
        })?;
        let inv = |t| f.inv(t).expect("nonzero");
        let conj = if t2 != 0 {
            word(g, &[(B, f.mul(t3, inv(t2))), (A, f.mul(third, f.mul(t2, inv(t1))))])
        } else {
            word(g, &[(AB, f.mul(third, f.mul(t3, inv(t1))))])
        };
        let target = word(g, &[(A2B, t1)]);
        let got = g.conj(x, conj);
        ensure(got == target, || {
            format!("{} conjugated by {} is {}, not {}", g.format(x), g.format(conj), g.format(got), g.format(target))
        })?;
        *counts.entry(t2 != 0).or_insert(0usize) += 1;
    }
    Ok(format!(
        "the stated conjugators send x to x_2a+b(t1) for all {} elements of Z_3(S)∖Z_2(S) ({} with t2 ≠ 0)",
        counts.values().sum::<usize>(),
        counts.get(&true).copied().unwrap_or(0)
    ))
}

pub(super) const THOMAS: Lemma = Lemma {
    id: "thomas",
    family: Family::G2,
    statement: "every involution is S-conjugate to one of six forms with centralizers of order q^3, q^4, q^4, q^4, q^5, q^6; \
                the maximal elementary abelian subgroups are the S-conjugates of T, U, V, W, X, of order q^3 with normalizers Q_2, Q_1, Q_1, S, S",
    scope: |p, _| p == 2,
    scope_text: "p = 2",
    support: &[2, 4],
    run: thomas,
};

pub(super) const P2_SERIES: Lemma = Lemma {
    id: "p2-z-series",
    family: Family::G2,
    statement: "Z_3(S), Z_2(S), Z(S) are the stated root products of orders q^4, q^2, q",
    scope: |p, q| p == 2 && q > 2,
    scope_text: "p = 2, q > 2",
    support: &[4, 8],
    run: p2_series,
};

pub(super) const P2_RADICALS: Lemma = Lemma {
    id: "p2-q-facts",
    family: Family::G2,
    statement: "Q_1 = C_S(Z_3(S)/Z(S)), Q_2 = C_S(Z_2(S)); Φ(Q_1) = Z(Q_1) = Z(S) and Φ(Q_2) = Z_2(S) = Z(Q_2)",
    scope: |p, _| p == 2,
    scope_text: "p = 2",
    support: &[2, 4, 8],
    run: p2_radicals,
};

pub(super) const SL3_SUB: Lemma = Lemma {
    id: "SL3Sub",
    family: Family::G2,
    statement: "θ: X_3a+bX_bX_3a+2b → SL_3(q) is an injective homomorphism",
    scope: |p, _| p == 3,
    scope_text: "p = 3",
    support: &[3, 9],
    run: sl3_sub,
};

pub(super) const SL3_QUO: Lemma = Lemma {
    id: "SL3Quo",
    family: Family::G2,
    statement: "θ_i: S/Z(Q_i) → SL_3(q) is a well defined injective homomorphism, i = 1, 2",
    scope: |p, _| p == 3,
    scope_text: "p = 3",
    support: &[3, 9],
    run: sl3_quo,
};

pub(super) const P_STRUCTURE: Lemma = Lemma {
    id: "pStructure",
    family: Family::G2,
    statement: "items (i)-(viii) on Q_1, Q_2, their centres and Frattini subgroups, class, exponent and order-3 elements",
    scope: |p, _| p == 3,
    scope_text: "p = 3",
    support: &[3],
    run: p_structure,
};

pub(super) const EXP3: Lemma = Lemma {
    id: "exp3",
    family: Family::G2,
    statement: "a subgroup of exponent 3 lies in Q_1 or in Q_2",
    scope: |p, _| p == 3,
    scope_text: "p = 3",
    support: &[3],
    run: exp3,
};

pub(super) const SWAPPING_CORE: Lemma = Lemma {
    id: "swapping-core",
    family: Family::G2,
    statement: "Q_1 and Q_2 are the only subgroups of order q^5 and exponent 3",
    scope: |p, _| p == 3,
    scope_text: "p = 3",
    support: &[3],
    run: swapping_core,
};

pub(super) const QI_CENT: Lemma = Lemma {
    id: "QiCent",
    family: Family::G2,
    statement: "|C_Qi(x)| = q^4 for x ∈ Q_i∖Z(Q_i), and A(Q_i) is the set of these centralizers",
    scope: |p, _| p == 3,
    scope_text: "p = 3",
    support: &[3],
    run: qi_cent,
};

pub(super) const SERIES: Lemma = Lemma {
    id: "g2-series",
    family: Family::G2,
    statement: "the upper and lower central series coincide, with terms of orders q, q^2, q^3, q^4",
    scope: |p, _| p >= 5,
    scope_text: "p ≥ 5",
    support: &[5, 7],
    run: series,
};

pub(super) const Q15_IDEN: Lemma = Lemma {
    id: "Q15Iden",
    family: Family::G2,
    statement: "Q_1 is the central product X_1 * X_2 over Z(S) of two Sylow p-subgroups of SL_3(q)",
    scope: |p, _| p >= 5,
    scope_text: "p ≥ 5",
    support: &[5, 7],
    run: q15_iden,
};

pub(super) const FIVE_CONJ: Lemma = Lemma {
    id: "5conj",
    family: Family::G2,
    statement: "each x ∈ Z_3(S)∖Z_2(S) is S-conjugate to x_2a+b(t1) by the stated conjugator",
    scope: |p, _| p >= 5,
    scope_text: "p ≥ 5",
    support: &[5, 7],
    run: five_conj,
};
