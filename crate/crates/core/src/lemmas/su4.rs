use std::collections::BTreeMap;

use super::common::{order_is, same, subgroup_text};
use super::{ensure, Lemma, LemmaOptions, Outcome};
use crate::chevalley::su4::{A, A2B, AB, B};
use crate::chevalley::Family;
use crate::grptool::{
    center, centralizer_in, centralizer_of_element, class_representatives, closure, commutator_subgroup,
    derived_subgroup, intersection, max_rank_elementary_abelians, product, thompson, Ambient, FiniteGroup, Quotient,
    Subgroup,
};
use crate::radenum::enumerate_overgroups;

/// Overgroups of `S'` enumerated for the uniqueness scan.
const OVERGROUP_CAP: usize = 100_000;

fn pow(q: u32, k: u32) -> u64 {
    (q as u64).pow(k)
}

struct Su4 {
    s: Subgroup,
    q1: Subgroup,
    q2: Subgroup,
    derived: Subgroup,
    z: Subgroup,
}

impl Su4 {
    /// Root-product descriptions, checked against `J(S)`, `S'` and `Z(S)`.
    fn new(g: &Ambient) -> std::result::Result<Self, String> {
        let s = g.whole();
        let d = Su4 {
            q1: g.root_product(&[A, AB, A2B]),
            q2: g.root_product(&[B, AB, A2B]),
            derived: g.root_product(&[AB, A2B]),
            z: g.root_product(&[A2B]),
            s,
        };
        same(g, "J(S)", &thompson(g, &d.s), &d.q2)?;
        same(g, "S'", &derived_subgroup(g, &d.s), &d.derived)?;
        same(g, "Z(S)", &center(g, &d.s), &d.z)?;
        Ok(d)
    }

    fn has_q1_properties(&self, g: &Ambient, y: &Subgroup, q: u32) -> bool {
        y.order() as u64 > pow(q, 4) && derived_subgroup(g, y) == self.z && intersection(g, y, &self.q2) == self.derived
    }
}

fn q1_unique(g: &Ambient, _: &LemmaOptions) -> Outcome {
    let q = g.table().q();
    let d = Su4::new(g)?;
    let x = &d.q1;
    order_is("X", x, pow(q, 5))?;
    ensure(d.has_q1_properties(g, x, q), || "X fails X' = Z(S), |X| > q^4 or X ∩ J(S) = S'".into())?;
    same(g, "Z(X)", &center(g, x), &d.z)?;
    let quo = Quotient::new(g, &d.s, &d.z).map_err(|e| e.to_string())?;
    let j = thompson(&quo, &Subgroup::whole_group(&quo));
    same(g, "preimage of J(S/Z(S))", &quo.preimage(&j), x)?;

    // Any Y with the three properties contains S' = Y ∩ J(S).
    let (over, complete) = enumerate_overgroups(g, &d.s, &d.derived, OVERGROUP_CAP);
    ensure(complete, || format!("more than {OVERGROUP_CAP} overgroups of S'"))?;
    let good: Vec<&Subgroup> = over.iter().filter(|y| d.has_q1_properties(g, y, q)).collect();
    let maximal: Vec<&&Subgroup> =
        good.iter().filter(|y| !good.iter().any(|z| z.order() > y.order() && y.is_subgroup_of(z))).collect();
    ensure(maximal.len() == 1 && *maximal[0] == x, || {
        let names: Vec<String> = maximal.iter().map(|y| subgroup_text(g, y)).collect();
        format!("maximal subgroups with the properties: {}", names.join("; "))
    })?;
    Ok(format!(
        "X = X_aX_a+bX_2a+b of order q^5 is ultraspecial with Z(X) = X' = Z(S), equals the preimage of J(S/Z(S)), \
         and is the unique maximal one among {} of {} overgroups of S' with the properties",
        good.len(),
        over.len()
    ))
}

fn q5_cent(g: &Ambient, _: &LemmaOptions) -> Outcome {
    let q = g.table().q();
    let d = Su4::new(g)?;
    let mut n = 0;
    for (x, _) in class_representatives(g, &d.derived, d.s.generators()) {
        if d.z.contains(x) {
            continue;
        }
        n += 1;
        let c = centralizer_of_element(g, &d.s, x);
        let name = format!("C_S({})", g.format(x));
        ensure(d.q2.is_subgroup_of(&c), || format!("Q_2 ≰ {name}"))?;
        order_is(&name, &c, pow(q, 5))?;
        let zc = center(g, &c);
        same(g, &format!("Z({name})"), &zc, &centralizer_in(g, &d.q2, &c))?;
        order_is(&format!("Z({name})"), &zc, pow(q, 2))?;
        let dc = derived_subgroup(g, &c);
        same(g, &format!("{name}'"), &dc, &commutator_subgroup(g, &d.q2, &c))?;
        order_is(&format!("{name}'"), &dc, pow(q, 2))?;
    }
    Ok(format!("checked {n} S-class representatives of S'∖Z(S)"))
}

fn q4_cent(g: &Ambient, _: &LemmaOptions) -> Outcome {
    let q = g.table().q();
    let n = g.table().base_field().degree();
    let p = g.p() as u64;
    let d = Su4::new(g)?;
    let mut checked = 0;
    let mut ranks = BTreeMap::new();
    let mut failures = Vec::new();
    for (x, _) in class_representatives(g, &d.s, d.s.generators()) {
        if d.q2.contains(x) || g.element_order(x) != p {
            continue;
        }
        checked += 1;
        let c = centralizer_of_element(g, &d.s, x);
        let name = format!("C_S({})", g.format(x));
        let check = || -> std::result::Result<u32, String> {
            ensure(c.is_subgroup_of(&d.q1), || {
                let abelian = if center(g, &c) == c { "abelian" } else { "nonabelian" };
                format!("{name} ≰ Q_1: x ∉ Q_1 ∪ Q_2 and {name} is {abelian} of order {}", c.order())
            })?;
            order_is(&name, &c, pow(q, 4))?;
            order_is(&format!("{name} ∩ Q_2"), &intersection(g, &c, &d.q2), pow(q, 2))?;
            let a = max_rank_elementary_abelians(g, &c);
            let rank = (a[0].order() as f64).log(p as f64).round() as u32;
            ensure(rank <= 3 * n, || format!("m_p({name}) = {rank} > 3n"))?;
            same(g, &format!("{name}'"), &derived_subgroup(g, &c), &d.z)?;
            order_is(&format!("Z({name})"), &center(g, &c), pow(q, 2))?;
            Ok(rank)
        };
        match check() {
            Ok(rank) => *ranks.entry(rank).or_insert(0usize) += 1,
            Err(w) => failures.push(w),
        }
    }
    if let Some(first) = failures.first() {
        return Err(format!("{first} ({} of {checked} S-classes of order p outside Q_2 fail)", failures.len()));
    }
    Ok(format!("checked {checked} S-class representatives of order p outside Q_2; p-ranks {ranks:?}"))
}

fn q2_omega(g: &Ambient, _: &LemmaOptions) -> Outcome {
    let q = g.table().q();
    let p = g.p();
    let d = Su4::new(g)?;
    same(g, "[Q_2, S]", &commutator_subgroup(g, &d.q2, &d.s), &d.derived)?;
    same(g, "C_Q2(S)", &centralizer_in(g, &d.q2, &d.s), &d.z)?;
    let mut cases = [0usize; 3];
    for (x, _) in class_representatives(g, &d.s, d.s.generators()) {
        if d.q2.contains(x) {
            continue;
        }
        let f = closure(g, &[x]);
        let comm = commutator_subgroup(g, &d.q2, &f);
        let cent = centralizer_in(g, &d.q2, &f);
        let image = (f.order() / intersection(g, &f, &d.q2).order()) as u32;
        let case = if comm == d.derived && cent == d.z {
            0
        } else if p == 2 && comm == cent && comm.order() as u64 == pow(q, 2) && image <= q {
            1
        } else if p != 2
            && comm.order() as u64 == pow(q, 2)
            && cent.order() as u64 == pow(q, 2)
            && product(g, &comm, &cent) == d.derived
            && centralizer_in(g, &comm, &f) == d.z
            && image <= q
        {
            2
        } else {
            return Err(format!(
                "F = <{}>: |[Q_2,F]| = {}, |C_Q2(F)| = {}, |FQ_2/Q_2| = {image} fits none of the three cases",
                g.format(x),
                comm.order(),
                cent.order()
            ));
        };
        cases[case] += 1;
    }
    Ok(format!(
        "cyclic F ≰ Q_2 up to S-conjugacy: {} in case (i), {} in case (ii), {} in case (iii)",
        cases[0], cases[1], cases[2]
    ))
}

pub(super) const Q1_UNIQUE: Lemma = Lemma {
    id: "Q1Unique",
    family: Family::Su4,
    statement: "X = X_aX_a+bX_2a+b is the unique subgroup maximal by inclusion with X' = Z(S), |X| > q^4 and S' = X ∩ J(S)",
    scope: |_, _| true,
    scope_text: "any q",
    support: &[2, 3, 4, 5],
    run: q1_unique,
};

pub(super) const Q5_CENT: Lemma = Lemma {
    id: "q5cent",
    family: Family::Su4,
    statement: "for x ∈ S'∖Z(S): Q_2 ≤ C_S(x) of order q^5, Z(C_S(x)) = C_Q2(C_S(x)) and C_S(x)' = [Q_2, C_S(x)] both of order q^2",
    scope: |_, q| q > 2,
    scope_text: "q > 2",
    support: &[3, 4, 5],
    run: q5_cent,
};

pub(super) const Q4_CENT: Lemma = Lemma {
    id: "q4cent",
    family: Family::Su4,
    statement: "for x ∈ S∖Q_2 of order p: C_S(x) ≤ Q_1 of order q^4, |C_S(x) ∩ Q_2| = q^2, m_p ≤ 3n, C_S(x)' = Z(S), |Z(C_S(x))| = q^2",
    scope: |_, q| q > 2,
    scope_text: "q > 2",
    support: &[3, 4, 5],
    run: q4_cent,
};

pub(super) const Q2_OMEGA: Lemma = Lemma {
    id: "Q2Omega",
    family: Family::Su4,
    statement: "for cyclic F ≰ Q_2 one of the three listed cases holds",
    scope: |_, q| q > 2,
    scope_text: "q > 2",
    support: &[3, 4, 5],
    run: q2_omega,
};
