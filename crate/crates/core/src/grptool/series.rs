use super::subgroup::{commutator_subgroup, normal_closure, Subgroup};
use super::FiniteGroup;

/// `1 = Z_0 < Z_1 < ...` up to the first repeat, membership decided by
/// `[x, h] ∈ Z_i` on generators `h` of `H`.
pub fn upper_central_series<G: FiniteGroup + ?Sized>(g: &G, h: &Subgroup) -> Vec<Subgroup> {
    let mut series = vec![Subgroup::trivial(g)];
    let gens = h.generators();
    loop {
        let z = series.last().unwrap();
        let els = h.elements();
        let keep = g
            .exec()
            .filter(0..els.len() as u32, |i| gens.iter().all(|&s| z.contains(g.comm(els[i as usize], s))));
        let next = Subgroup::from_elements(g, keep.into_iter().map(|i| els[i as usize]).collect());
        if next.order() == z.order() {
            return series;
        }
        series.push(next);
    }
}

/// `H = γ_1 > γ_2 > ...` down to the first repeat.
pub fn lower_central_series<G: FiniteGroup + ?Sized>(g: &G, h: &Subgroup) -> Vec<Subgroup> {
    let mut series = vec![h.clone()];
    loop {
        let last = series.last().unwrap();
        let next = commutator_subgroup(g, last, h);
        if next.order() == last.order() {
            return series;
        }
        series.push(next);
    }
}

pub fn derived_series<G: FiniteGroup + ?Sized>(g: &G, h: &Subgroup) -> Vec<Subgroup> {
    let mut series = vec![h.clone()];
    loop {
        let last = series.last().unwrap();
        let gens = last.generators();
        let comms: Vec<u32> =
            gens.iter().enumerate().flat_map(|(i, &a)| gens[i + 1..].iter().map(move |&b| g.comm(a, b))).collect();
        let next = normal_closure(g, &comms, gens);
        if next.order() == last.order() {
            return series;
        }
        series.push(next);
    }
}

/// Length of the lower central series of a nilpotent `H`.
pub fn nilpotency_class<G: FiniteGroup + ?Sized>(g: &G, h: &Subgroup) -> usize {
    let lower = lower_central_series(g, h);
    if lower.last().unwrap().is_trivial() {
        lower.len() - 1
    } else {
        usize::MAX
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chevalley::{Family, GroupTable};
    use crate::grptool::{closure, Ambient};

    #[test]
    fn abelian_upper_series_is_one_step() {
        let s = Ambient::new(GroupTable::build(Family::G2, 3).unwrap()).unwrap();
        let h = s.root_product(&[5, 4]);
        let series = upper_central_series(&s, &h);
        assert_eq!(series.len(), 2);
        assert_eq!(series[1], h);
        assert_eq!(nilpotency_class(&s, &h), 1);
        assert_eq!(nilpotency_class(&s, &closure(&s, &[])), 0);
    }
}
