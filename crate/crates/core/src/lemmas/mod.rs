//! Runnable checks of structural statements about `S`, one registry entry
//! per statement. Each quantifier is realised as an exhaustive scan over
//! the instance at hand; the support set lists the `q` where that scan is
//! within reach.

mod common;
mod g2;
mod su4;

use std::time::Instant;

use serde::Serialize;

use crate::autom::AutCaps;
use crate::chevalley::Family;
use crate::error::{Error, Result};
use crate::grptool::Ambient;

/// `Ok(detail)` on success, `Err(witness)` on failure.
pub type Outcome = std::result::Result<String, String>;

pub(crate) fn ensure(ok: bool, witness: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(witness())
    }
}

#[derive(Clone, Copy, Debug)]
pub struct LemmaOptions {
    pub aut: AutCaps,
}

impl Default for LemmaOptions {
    fn default() -> Self {
        LemmaOptions { aut: AutCaps::default() }
    }
}

pub struct Lemma {
    pub id: &'static str,
    pub family: Family,
    /// The statement being checked, in words.
    pub statement: &'static str,
    /// Hypotheses of the statement on `(p, q)`.
    pub scope: fn(u32, u32) -> bool,
    pub scope_text: &'static str,
    /// Values of `q` at which the exhaustive check is run.
    pub support: &'static [u32],
    run: fn(&Ambient, &LemmaOptions) -> Outcome,
}

impl Lemma {
    pub fn applies(&self, family: Family, q: u32) -> bool {
        let p = crate::gf::prime_power(q).map(|(p, _)| p).unwrap_or(0);
        self.family == family && p != 0 && (self.scope)(p, q)
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail { witness: String },
    Skipped { reason: String },
}

/// Equality ignores `wall_ms`.
#[derive(Clone, Debug, Serialize)]
pub struct LemmaReport {
    pub id: String,
    pub family: String,
    pub q: u32,
    #[serde(flatten)]
    pub verdict: Verdict,
    pub detail: String,
    #[serde(skip)]
    pub wall_ms: u128,
}

impl PartialEq for LemmaReport {
    fn eq(&self, other: &Self) -> bool {
        (&self.id, &self.family, self.q, &self.verdict, &self.detail)
            == (&other.id, &other.family, other.q, &other.verdict, &other.detail)
    }
}

impl Eq for LemmaReport {}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn failed(&self) -> bool {
        matches!(self.verdict, Verdict::Fail { .. })
    }
}

static REGISTRY: &[Lemma] = &[
    common::G2_EXPONENT,
    common::PSU_EXPONENT,
    common::BURNSIDE_G2,
    common::BURNSIDE_SU4,
    g2::THOMAS,
    g2::P2_SERIES,
    g2::P2_RADICALS,
    g2::SL3_SUB,
    g2::SL3_QUO,
    g2::P_STRUCTURE,
    g2::EXP3,
    g2::SWAPPING_CORE,
    g2::QI_CENT,
    g2::SERIES,
    g2::Q15_IDEN,
    g2::FIVE_CONJ,
    su4::Q1_UNIQUE,
    su4::Q5_CENT,
    su4::Q4_CENT,
    su4::Q2_OMEGA,
];

pub fn registry() -> &'static [Lemma] {
    REGISTRY
}

/// Ids are matched ignoring case.
pub fn lookup(id: &str, family: Family) -> Result<&'static Lemma> {
    let mut named = REGISTRY.iter().filter(|l| l.id.eq_ignore_ascii_case(id)).peekable();
    if named.peek().is_none() {
        return Err(Error::Usage(format!("unknown lemma id {id:?}")));
    }
    named
        .find(|l| l.family == family)
        .ok_or_else(|| Error::Usage(format!("lemma {id} does not concern {}", family.name())))
}

/// Registry entries whose hypotheses hold for `(family, q)`.
pub fn applicable(family: Family, q: u32) -> Vec<&'static Lemma> {
    REGISTRY.iter().filter(|l| l.applies(family, q)).collect()
}

pub fn verify(lemma: &Lemma, g: &Ambient, opts: &LemmaOptions) -> Result<LemmaReport> {
    let family = g.table().family();
    let q = g.table().q();
    if !lemma.applies(family, q) {
        return Err(Error::Usage(format!(
            "lemma {} concerns {} with {}, not q = {q}",
            lemma.id,
            lemma.family.name(),
            lemma.scope_text
        )));
    }
    let start = Instant::now();
    let (verdict, detail) = if !lemma.support.contains(&q) {
        let reason = format!("q = {q} is outside the exhaustive support set {:?}", lemma.support);
        (Verdict::Skipped { reason }, String::new())
    } else {
        match (lemma.run)(g, opts) {
            Ok(detail) => (Verdict::Pass, detail),
            Err(witness) => (Verdict::Fail { witness }, String::new()),
        }
    };
    Ok(LemmaReport {
        id: lemma.id.to_string(),
        family: family.name().to_string(),
        q,
        verdict,
        detail,
        wall_ms: start.elapsed().as_millis(),
    })
}

/// Run every applicable lemma, in registry order.
pub fn verify_all(g: &Ambient, opts: &LemmaOptions) -> Vec<LemmaReport> {
    applicable(g.table().family(), g.table().q())
        .into_iter()
        .map(|l| verify(l, g, opts).expect("applicable lemmas accept the instance"))
        .collect()
}
