//! One PASS/FAIL line per acceptance criterion.
//!
//! Runs without the libtest harness so the lines always print. The process
//! fails only when a criterion's outcome differs from the expectation
//! recorded in `KNOWN_FAILURES`: a known failure prints FAIL and is still
//! reported as such, while any new failure (or an unexpected pass) is an
//! error.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rootgroups::chevalley::{sample_associativity, sample_oracle, GroupElement};
use rootgroups::grptool::Ambient;
use rootgroups::lemmas::{lookup, verify, LemmaOptions, Verdict};
use rootgroups::radenum::{classify_rc, EnumOptions, SubgroupCatalog};
use rootgroups::{Exec, Family, GroupTable};

/// Checks that fail for reasons recorded with the criterion.
const KNOWN_FAILURES: &[(&str, &str)] = &[
    // For p ≥ 5 every element has order p, and x = x_a(1)x_b(1) ∉ Q_1 ∪ Q_2
    // lies in its own centraliser, so C_S(x) ≤ Q_1 is false.
    ("AC8", "q4cent su4 q=5"),
];

const SEED: u64 = 0;
const SAMPLES: u64 = 100_000;

struct Outcome {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { failures: Vec::new(), notes: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }

    fn within(&mut self, start: Instant, limit: Duration, what: &str) {
        let t = start.elapsed();
        self.check(t <= limit, format!("{what} took {t:.1?}, limit {limit:?}"));
    }
}

fn table(family: Family, q: u32) -> GroupTable {
    GroupTable::build(family, q).unwrap()
}

fn ambient(family: Family, q: u32) -> Ambient {
    Ambient::new(table(family, q)).unwrap()
}

fn ac1() -> Outcome {
    let mut o = Outcome::new();
    for family in [Family::G2, Family::Su4] {
        let start = Instant::now();
        let t = table(family, 2);
        let els: Vec<GroupElement> = t.elements().collect();
        let ok = els.iter().all(|a| {
            els.iter().all(|b| {
                let ab = t.mul(a, b);
                els.iter().all(|c| t.mul(&ab, c) == t.mul(a, &t.mul(b, c)))
            })
        });
        o.check(ok, format!("{family} q=2 exhaustive associativity"));
        o.within(start, Duration::from_secs(30), &format!("{family} q=2 sweep"));
        for q in [3, 4, 5] {
            o.check(sample_associativity(&table(family, q), SAMPLES, SEED).is_ok(), format!("{family} q={q} sampled"));
        }
    }
    o.notes.push(format!("64³ triples per family at q=2, {SAMPLES} seeded triples at q=3,4,5"));
    o
}

fn ac2() -> Outcome {
    let mut o = Outcome::new();
    let start = Instant::now();
    for q in [2, 3] {
        let t = table(Family::Su4, q);
        let oracle = t.matrix_oracle().unwrap();
        let els: Vec<GroupElement> = t.elements().collect();
        let ok = Exec::default().all(0..els.len() as u32, |i| els.iter().all(|b| oracle.check_pair(&els[i as usize], b)));
        o.check(ok, format!("q={q} all pairs"));
    }
    for q in [4, 5] {
        o.check(sample_oracle(&table(Family::Su4, q), SAMPLES, SEED).unwrap().is_ok(), format!("q={q} sampled"));
    }
    o.within(start, Duration::from_secs(300), "oracle comparison");
    o.notes.push(format!("all pairs at q=2,3, {SAMPLES} seeded pairs at q=4,5"));
    o
}

fn ac3() -> Outcome {
    let mut o = Outcome::new();
    for (family, qs) in [(Family::G2, &[2, 3, 4, 5, 7, 8, 9][..]), (Family::Su4, &[2, 3, 4, 5][..])] {
        for &q in qs {
            let t = table(family, q);
            let n = (q as u64).pow(6);
            let distinct = (0..t.order()).all(|i| t.index(&t.element(i)) == i);
            o.check(t.order() == n && distinct, format!("{family} q={q} order"));
        }
    }
    for q in [2, 3, 4, 5, 7, 9] {
        let bad = common::table_mismatch(&table(Family::G2, q));
        o.check(bad.is_none(), format!("G2 q={q} reduced table differs at {bad:?}"));
    }
    o.notes.push("G2 reduced tables compared over all (t,u) at q=2,3,4,5,7,9".into());
    o
}

fn ac4() -> Outcome {
    let mut o = Outcome::new();
    let expected = [
        (Family::G2, 2, 8),
        (Family::G2, 4, 8),
        (Family::G2, 8, 8),
        (Family::G2, 3, 9),
        (Family::G2, 9, 9),
        (Family::G2, 5, 25),
        (Family::G2, 7, 7),
        (Family::Su4, 2, 4),
        (Family::Su4, 4, 4),
        (Family::Su4, 3, 9),
        (Family::Su4, 5, 5),
    ];
    for (family, q, want) in expected {
        let start = Instant::now();
        let got = table(family, q).exponent(Exec::default(), u64::MAX).unwrap();
        o.check(got == want, format!("{family} q={q}: exponent {got}, expected {want}"));
        o.within(start, Duration::from_secs(600), &format!("{family} q={q}"));
        let lemma = if family == Family::G2 { "G2Exponent" } else { "PSUExponent" };
        let r = verify(lookup(lemma, family).unwrap(), &ambient(family, q), &LemmaOptions::default()).unwrap();
        o.check(r.passed(), format!("{lemma} {family} q={q}"));
    }
    o
}

/// Runs registry lemmas and records every non-pass.
fn lemmas(o: &mut Outcome, family: Family, q: u32, ids: &[&str]) {
    let g = ambient(family, q);
    for id in ids {
        let r = verify(lookup(id, family).unwrap(), &g, &LemmaOptions::default()).unwrap();
        match &r.verdict {
            Verdict::Pass => {}
            Verdict::Fail { witness } => {
                o.failures.push(format!("{id} {family} q={q}"));
                o.notes.push(format!("{id} {family} q={q}: {witness}"));
            }
            Verdict::Skipped { reason } => o.failures.push(format!("{id} {family} q={q} skipped: {reason}")),
        }
        if *id == "swapping-core" {
            o.notes.push(r.detail.clone());
        }
    }
}

fn ac5() -> Outcome {
    let mut o = Outcome::new();
    for q in [2, 4] {
        lemmas(&mut o, Family::G2, q, &["thomas"]);
    }
    o
}

fn ac6() -> Outcome {
    let mut o = Outcome::new();
    let start = Instant::now();
    for family in [Family::G2, Family::Su4] {
        let g = ambient(family, 2);
        let report = classify_rc(&g, &SubgroupCatalog::build(&g, EnumOptions::default()));
        o.check(report.matches, format!("{family} survivors differ: {:?}", report.discrepancies));
        o.check(report.summary.undecided == 0, format!("{family}: {} undecided", report.summary.undecided));
        o.notes.push(format!("{family}: {} survivor classes", report.survivors().count()));
    }
    o.within(start, Duration::from_secs(900), "enumeration");
    o
}

fn ac7() -> Outcome {
    let mut o = Outcome::new();
    let start = Instant::now();
    lemmas(&mut o, Family::G2, 3, &["pStructure", "exp3", "QiCent", "SL3Sub", "SL3Quo", "swapping-core"]);
    o.within(start, Duration::from_secs(300), "p=3 suite");
    o
}

fn ac8() -> Outcome {
    let mut o = Outcome::new();
    let start = Instant::now();
    for q in [5, 7] {
        lemmas(&mut o, Family::G2, q, &["g2-series", "Q15Iden", "5conj"]);
    }
    for q in [3, 4, 5] {
        lemmas(&mut o, Family::Su4, q, &["Q1Unique", "q5cent", "q4cent", "Q2Omega"]);
    }
    o.within(start, Duration::from_secs(600), "p ≥ 5 and SU4 suites");
    o
}

fn main() -> ExitCode {
    let criteria: [(&str, &str, fn() -> Outcome); 8] = [
        ("AC1", "engine soundness", ac1),
        ("AC2", "matrix oracle equivalence", ac2),
        ("AC3", "orders and reduced tables", ac3),
        ("AC4", "exponent table", ac4),
        ("AC5", "involutions and elementary abelians at p=2", ac5),
        ("AC6", "radical-centric enumeration at q=2", ac6),
        ("AC7", "p=3 suite at q=3", ac7),
        ("AC8", "p ≥ 5 and SU4 suites", ac8),
    ];
    let mut unexpected = Vec::new();
    for (id, title, run) in criteria {
        let start = Instant::now();
        let o = run();
        let secs = start.elapsed().as_secs_f64();
        let verdict = if o.failures.is_empty() { "PASS" } else { "FAIL" };
        println!("{id} {verdict} {title} ({secs:.1} s)");
        for f in &o.failures {
            println!("    failed: {f}");
        }
        for n in &o.notes {
            println!("    {n}");
        }
        let mut known: Vec<&str> = KNOWN_FAILURES.iter().filter(|(c, _)| *c == id).map(|(_, f)| *f).collect();
        let mut got: Vec<&str> = o.failures.iter().map(String::as_str).collect();
        known.sort();
        got.sort();
        if known != got {
            unexpected.push(format!("{id}: failures {got:?}, expected {known:?}"));
        }
    }
    if unexpected.is_empty() {
        println!("all outcomes as expected");
        ExitCode::SUCCESS
    } else {
        for u in &unexpected {
            println!("unexpected: {u}");
        }
        ExitCode::FAILURE
    }
}
