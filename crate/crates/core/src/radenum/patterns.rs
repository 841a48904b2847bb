use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

use super::{CatalogSummary, SubgroupCatalog};
use crate::autom::{RadicalCertificate, RadicalVerdict};
use crate::chevalley::{g2, su4, Family};
use crate::grptool::{
    center, centralizer_in, centralizer_of_element, centralizer_of_quotient, derived_subgroup,
    max_rank_elementary_abelians, maximal_elementary_abelians, thompson, Ambient, Subgroup,
};

/// A named family of subgroups of `S`, closed under S-conjugacy.
#[derive(Clone, Debug)]
pub struct Pattern {
    pub label: &'static str,
    pub members: Vec<Subgroup>,
}

impl Pattern {
    fn new(label: &'static str, mut members: Vec<Subgroup>) -> Self {
        members.sort_by(|a, b| a.elements().cmp(b.elements()));
        members.dedup();
        Pattern { label, members }
    }

    pub fn contains(&self, h: &Subgroup) -> bool {
        self.members.iter().any(|m| m == h)
    }
}

/// The subgroups named in the classification of S-centric, S-radical
/// subgroups at `q = 2`.
///
/// For G₂ the subgroups `Z_3`, `Z_2`, `Z` are the root-group products
/// `X_{α+β}X_{2α+β}X_{3α+β}X_{3α+2β}`, `X_{3α+β}X_{3α+2β}` and
/// `X_{3α+2β}`; at `q = 2` the upper central series of `S` is shorter and
/// does not produce them.
pub fn patterns(g: &Ambient) -> Vec<Pattern> {
    let s = g.whole();
    let q = g.table().q();
    match g.table().family() {
        Family::G2 => {
            let z3 = g.root_product(&[g2::AB, g2::A2B, g2::A3B, g2::A3B2]);
            let z2 = g.root_product(&[g2::A3B, g2::A3B2]);
            let z = g.root_product(&[g2::A3B2]);
            let eas = maximal_elementary_abelians(g, &s).into_iter().filter(|e| e.order() == q * q * q).collect();
            vec![
                Pattern::new("S", vec![s.clone()]),
                Pattern::new("C_S(Z_3(S)/Z(S))", vec![centralizer_of_quotient(g, &s, &z3, &z)]),
                Pattern::new("C_S(Z_2(S))", vec![centralizer_in(g, &s, &z2)]),
                Pattern::new("maximal elementary abelian of order q^3", eas),
            ]
        }
        Family::Su4 => {
            let q1 = g.root_product(&[su4::A, su4::AB, su4::A2B]);
            let q2 = thompson(g, &s);
            let derived = derived_subgroup(g, &s);
            let z = center(g, &s);
            let cents = derived
                .elements()
                .iter()
                .filter(|&&x| !z.contains(x))
                .map(|&x| centralizer_of_element(g, &s, x))
                .collect();
            let outside = max_rank_elementary_abelians(g, &q1).into_iter().filter(|a| !a.is_subgroup_of(&q2)).collect();
            vec![
                Pattern::new("S", vec![s.clone()]),
                Pattern::new("Q_1", vec![q1]),
                Pattern::new("Q_2 = J(S)", vec![q2]),
                Pattern::new("C_S(x), x in S'\\Z(S)", cents),
                Pattern::new("A(Q_1) not in Q_2", outside),
            ]
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ClassRow {
    pub order: u32,
    pub class_size: usize,
    pub centric: bool,
    pub radical: String,
    pub certificate: Option<String>,
    pub label: String,
    pub generators: Vec<String>,
    pub least_element: u32,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct PatternRow {
    pub label: String,
    pub subgroups: usize,
    pub classes: usize,
    pub orders: Vec<u32>,
    /// Pattern classes that are not centric and radical.
    pub not_surviving: usize,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct RcReport {
    pub family: String,
    pub q: u32,
    pub summary: CatalogSummary,
    pub patterns: Vec<PatternRow>,
    /// Centric classes, survivors and non-survivors.
    pub classes: Vec<ClassRow>,
    /// Survivors matching no pattern.
    pub discrepancies: Vec<ClassRow>,
    pub matches: bool,
}

fn certificate_text(v: &RadicalVerdict) -> Option<String> {
    let cert = match v {
        RadicalVerdict::Radical(c) | RadicalVerdict::NotRadical(c) => c,
        RadicalVerdict::Undecided(m) => return Some(m.clone()),
    };
    Some(match cert {
        RadicalCertificate::Chain(w) => {
            let chain: Vec<String> = w.chain.iter().map(|t| format!("{}[{}]", t.recipe, t.subgroup.order())).collect();
            format!("chain {} centralised by element {}", chain.join(" < "), w.element)
        }
        RadicalCertificate::PCore { aut_order, core_order, out_s_order, witness } => {
            let w = witness.map(|x| format!(", witness {x}")).unwrap_or_default();
            format!("|Aut|={aut_order} |O_p|={core_order} |Out_S|={out_s_order}{w}")
        }
        other => other.kind().to_string(),
    })
}

/// Label the centric classes of a catalog against [`patterns`] and check
/// that the survivors are exactly the pattern members.
pub fn classify_rc(g: &Ambient, catalog: &SubgroupCatalog) -> RcReport {
    let pats = patterns(g);
    let mut classes = Vec::new();
    let mut discrepancies = Vec::new();
    for c in catalog.classes.iter().filter(|c| c.centric) {
        let rep = catalog.representative(c);
        let labels: Vec<&str> = pats
            .iter()
            .filter(|p| c.members.iter().all(|&m| p.contains(&catalog.subgroups[m])))
            .map(|p| p.label)
            .collect();
        let verdict = c.radical.as_ref().expect("centric classes carry a verdict");
        let row = ClassRow {
            order: c.order,
            class_size: c.size(),
            centric: c.centric,
            radical: verdict.label().to_string(),
            certificate: certificate_text(verdict),
            label: if labels.is_empty() { "unmatched".into() } else { labels.join(" / ") },
            generators: rep.generators().iter().map(|&x| g.format(x)).collect(),
            least_element: rep.elements().get(1).copied().unwrap_or(0),
        };
        if c.is_survivor() && labels.is_empty() {
            discrepancies.push(row.clone());
        }
        classes.push(row);
    }
    let key = |r: &ClassRow| (r.order, r.label.clone(), r.least_element);
    classes.sort_by_key(key);
    discrepancies.sort_by_key(key);

    let mut pattern_rows = Vec::new();
    let mut all_present = true;
    for p in &pats {
        let mut class_ids = BTreeSet::new();
        let mut not_surviving = BTreeSet::new();
        for m in &p.members {
            let Some(pos) = catalog.position(m) else {
                all_present = false;
                continue;
            };
            let ci = catalog.classes.iter().position(|c| c.members.binary_search(&pos).is_ok()).unwrap();
            class_ids.insert(ci);
            if !catalog.classes[ci].is_survivor() {
                not_surviving.insert(ci);
            }
        }
        let orders: BTreeSet<u32> = p.members.iter().map(|m| m.order()).collect();
        pattern_rows.push(PatternRow {
            label: p.label.to_string(),
            subgroups: p.members.len(),
            classes: class_ids.len(),
            orders: orders.into_iter().collect(),
            not_surviving: not_surviving.len(),
        });
    }
    let summary = catalog.summary();
    let matches = all_present
        && summary.complete
        && summary.undecided == 0
        && discrepancies.is_empty()
        && pattern_rows.iter().all(|r| r.not_surviving == 0);
    RcReport {
        family: g.table().family().name().to_string(),
        q: g.table().q(),
        summary,
        patterns: pattern_rows,
        classes,
        discrepancies,
        matches,
    }
}

impl RcReport {
    pub fn survivors(&self) -> impl Iterator<Item = &ClassRow> {
        self.classes.iter().filter(|r| r.radical == "radical")
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# S-centric, S-radical subgroups: {} q={}\n", self.family, self.q);
        let s = &self.summary;
        let _ = writeln!(
            out,
            "{} subgroups in {} S-classes ({} centric, {} centric and radical, {} undecided){}.\n",
            s.subgroups,
            s.classes,
            s.centric_classes,
            s.radical_centric_classes,
            s.undecided,
            if s.complete { "" } else { ", enumeration incomplete" }
        );
        let _ = writeln!(out, "| order | class size | label | generators |");
        let _ = writeln!(out, "|---|---|---|---|");
        for r in self.survivors() {
            let _ = writeln!(out, "| {} | {} | {} | {} |", r.order, r.class_size, r.label, r.generators.join(", "));
        }
        let _ = writeln!(out, "\n| pattern | subgroups | classes | orders | not surviving |");
        let _ = writeln!(out, "|---|---|---|---|---|");
        for p in &self.patterns {
            let orders: Vec<String> = p.orders.iter().map(|o| o.to_string()).collect();
            let _ = writeln!(out, "| {} | {} | {} | {} | {} |", p.label, p.subgroups, p.classes, orders.join(","), p.not_surviving);
        }
        if !self.discrepancies.is_empty() {
            let _ = writeln!(out, "\nUnmatched survivors:\n");
            for r in &self.discrepancies {
                let _ = writeln!(out, "- order {} ({} conjugates): {}", r.order, r.class_size, r.generators.join(", "));
            }
        }
        let _ = writeln!(out, "\nmatches: {}", self.matches);
        out
    }
}
