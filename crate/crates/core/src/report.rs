//! Schema-versioned report documents.
//!
//! Every report serialises with a fixed field order and sorted contents, so
//! identical inputs give byte-identical JSON. Timings appear only in the
//! markdown renderings.

use std::fmt::Write;

use serde::Serialize;

use crate::grptool::{center, is_normal, is_s_centric, nilpotency_class, upper_central_series, Ambient, Subgroup, SubgroupExpr};
use crate::lemmas::{LemmaReport, Verdict};

pub const SCHEMA_VERSION: u32 = 1;

/// Subgroups up to this order list their elements in a dump.
pub const DUMP_ELEMENT_LIMIT: u32 = 4096;

#[derive(Serialize)]
struct Envelope<'a, T> {
    schema_version: u32,
    command: &'a str,
    #[serde(flatten)]
    body: &'a T,
}

/// Pretty JSON with the schema header and a trailing newline.
pub fn to_json<T: Serialize>(command: &str, body: &T) -> String {
    let env = Envelope { schema_version: SCHEMA_VERSION, command, body };
    let mut out = serde_json::to_string_pretty(&env).expect("reports serialise");
    out.push('\n');
    out
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SuiteReport {
    pub family: String,
    pub q: u32,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub lemmas: Vec<LemmaReport>,
}

impl SuiteReport {
    pub fn new(family: &str, q: u32, lemmas: Vec<LemmaReport>) -> Self {
        let count = |f: fn(&Verdict) -> bool| lemmas.iter().filter(|l| f(&l.verdict)).count();
        SuiteReport {
            family: family.to_string(),
            q,
            passed: count(|v| matches!(v, Verdict::Pass)),
            failed: count(|v| matches!(v, Verdict::Fail { .. })),
            skipped: count(|v| matches!(v, Verdict::Skipped { .. })),
            lemmas,
        }
    }

    /// No selected check failed. Skipped checks do not count against this.
    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# Lemma checks: {} q={}\n", self.family, self.q);
        let _ = writeln!(out, "{} passed, {} failed, {} skipped.\n", self.passed, self.failed, self.skipped);
        let _ = writeln!(out, "| lemma | verdict | ms | detail |");
        let _ = writeln!(out, "|---|---|---|---|");
        for l in &self.lemmas {
            let (verdict, detail) = match &l.verdict {
                Verdict::Pass => ("pass", l.detail.as_str()),
                Verdict::Fail { witness } => ("FAIL", witness.as_str()),
                Verdict::Skipped { reason } => ("skipped", reason.as_str()),
            };
            let _ = writeln!(out, "| {} | {verdict} | {} | {} |", l.id, l.wall_ms, detail.replace('|', "\\|"));
        }
        out
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SampleCheck {
    pub samples: u64,
    pub seed: u64,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ConstructReport {
    pub family: String,
    pub q: u32,
    pub p: u32,
    pub order: u64,
    pub center_order: u32,
    pub exponent: u64,
    pub nilpotency_class: usize,
    /// `|Z_1(S)|, |Z_2(S)|, ...`
    pub upper_central_orders: Vec<u32>,
    pub associativity: SampleCheck,
}

impl ConstructReport {
    pub fn compute(g: &Ambient, samples: u64, seed: u64) -> Self {
        use crate::grptool::FiniteGroup;
        let t = g.table();
        let s = g.whole();
        let upper = upper_central_series(g, &s);
        ConstructReport {
            family: t.family().name().to_string(),
            q: t.q(),
            p: t.p(),
            order: t.order(),
            center_order: center(g, &s).order(),
            exponent: g.exec().max(0..g.order(), |x| g.element_order(x)),
            nilpotency_class: upper.len() - 1,
            upper_central_orders: upper[1..].iter().map(|z| z.order()).collect(),
            associativity: SampleCheck {
                samples,
                seed,
                passed: crate::chevalley::sample_associativity(t, samples, seed).is_ok(),
            },
        }
    }

    pub fn ok(&self) -> bool {
        self.associativity.passed
    }

    pub fn to_markdown(&self) -> String {
        let orders: Vec<String> = self.upper_central_orders.iter().map(|o| o.to_string()).collect();
        format!(
            "# {} q={}\n\n| |S| | |Z(S)| | exponent | class | upper central orders | associativity |\n|---|---|---|---|---|---|\n| {} | {} | {} | {} | {} | {} ({} triples, seed {}) |\n",
            self.family,
            self.q,
            self.order,
            self.center_order,
            self.exponent,
            self.nilpotency_class,
            orders.join(", "),
            if self.associativity.passed { "pass" } else { "FAIL" },
            self.associativity.samples,
            self.associativity.seed
        )
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SubgroupReport {
    pub family: String,
    pub q: u32,
    pub recipe: String,
    pub order: u32,
    pub generators: Vec<String>,
    pub generator_indices: Vec<u32>,
    pub exponent: u64,
    pub abelian: bool,
    pub elementary_abelian: bool,
    pub nilpotency_class: usize,
    pub normal: bool,
    pub centric: bool,
    /// Element indices, for subgroups up to [`DUMP_ELEMENT_LIMIT`].
    pub elements: Option<Vec<u32>>,
}

impl SubgroupReport {
    pub fn compute(g: &Ambient, expr: &SubgroupExpr, h: &Subgroup) -> Self {
        let s = g.whole();
        SubgroupReport {
            family: g.table().family().name().to_string(),
            q: g.table().q(),
            recipe: expr.to_string(),
            order: h.order(),
            generators: h.generators().iter().map(|&x| g.format(x)).collect(),
            generator_indices: h.generators().to_vec(),
            exponent: h.exponent(g),
            abelian: h.is_abelian(g),
            elementary_abelian: h.is_elementary_abelian(g),
            nilpotency_class: nilpotency_class(g, h),
            normal: is_normal(g, h, &s),
            centric: is_s_centric(g, &s, h),
            elements: (h.order() <= DUMP_ELEMENT_LIMIT).then(|| h.elements().to_vec()),
        }
    }

    pub fn to_markdown(&self) -> String {
        let yes = |b: bool| if b { "yes" } else { "no" };
        format!(
            "# {} in {} q={}\n\n- order {}\n- generators {}\n- exponent {}, class {}\n- abelian {}, elementary abelian {}\n- normal in S {}, S-centric {}\n",
            self.recipe,
            self.family,
            self.q,
            self.order,
            self.generators.join(", "),
            self.exponent,
            self.nilpotency_class,
            yes(self.abelian),
            yes(self.elementary_abelian),
            yes(self.normal),
            yes(self.centric)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chevalley::{Family, GroupTable};
    use crate::lemmas::{verify_all, LemmaOptions};

    #[test]
    fn suite_json_is_versioned_and_repeatable() {
        let g = Ambient::new(GroupTable::build(Family::Su4, 2).unwrap()).unwrap();
        let run = || {
            let r = SuiteReport::new("su4", 2, verify_all(&g, &LemmaOptions::default()));
            to_json("verify", &r)
        };
        let a = run();
        assert_eq!(a, run());
        let v: serde_json::Value = serde_json::from_str(&a).unwrap();
        assert_eq!(v["schema_version"], SCHEMA_VERSION);
        assert_eq!(v["command"], "verify");
        assert!(v["lemmas"].as_array().unwrap().iter().all(|l| l.get("wall_ms").is_none()));
    }

    #[test]
    fn construct_summary_for_g2_2() {
        let g = Ambient::new(GroupTable::build(Family::G2, 2).unwrap()).unwrap();
        let r = ConstructReport::compute(&g, 100, 0);
        assert_eq!((r.order, r.center_order, r.exponent), (64, 2, 8));
        assert!(r.ok());
    }
}
