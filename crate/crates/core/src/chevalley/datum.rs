use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    G2,
    Su4,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::G2 => "g2",
            Family::Su4 => "su4",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "g2" => Ok(Family::G2),
            "su4" | "psu4" => Ok(Family::Su4),
            other => Err(Error::Usage(format!("unknown family {other:?} (expected g2 or su4)"))),
        }
    }
}

/// Which field a root coordinate lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RootField {
    /// GF(q), the fixed field of the Frobenius in the unitary case.
    Base,
    /// GF(q²).
    Ext,
}

/// Coefficient of one factor of `[x_r(t), x_s(u)]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Coefficient {
    /// `c · t^i · u^j`
    Monomial { c: i64, i: u32, j: u32 },
    /// `c · N(t) · u`
    Norm { c: i64 },
    /// `c · Tr(t · u^q)`
    TraceConj { c: i64 },
}

impl Coefficient {
    fn scaled(self, k: i64) -> Coefficient {
        match self {
            Coefficient::Monomial { c, i, j } => Coefficient::Monomial { c: c * k, i, j },
            Coefficient::Norm { c } => Coefficient::Norm { c: c * k },
            Coefficient::TraceConj { c } => Coefficient::TraceConj { c: c * k },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommEntry {
    pub target: usize,
    pub coeff: Coefficient,
}

/// `[x_r(t), x_s(u)]` for `r < s`, as an ordered product of root elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommRule {
    pub r: usize,
    pub s: usize,
    pub terms: Vec<CommEntry>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum G2Convention {
    /// Constants exactly as in Ree's table.
    #[default]
    Standard,
    /// Every root element reparametrised by `t ↦ -t`.
    Negated,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Su4Signs {
    pub eps: i8,
    pub eps1: i8,
    pub eps2: i8,
}

impl Default for Su4Signs {
    fn default() -> Self {
        Su4Signs { eps: 1, eps1: 1, eps2: -1 }
    }
}

impl Su4Signs {
    pub fn validate(self, p: u32) -> Result<Self> {
        let ok = |e: i8| e == 1 || e == -1;
        if !(ok(self.eps) && ok(self.eps1) && ok(self.eps2)) {
            return Err(Error::Config("signs must be +1 or -1".into()));
        }
        if p != 2 && self.eps1 != -self.eps * self.eps2 {
            return Err(Error::Config(format!(
                "signs ({}, {}, {}) violate eps1 = -eps*eps2; the group law would not be associative",
                self.eps, self.eps1, self.eps2
            )));
        }
        Ok(self)
    }
}

/// Positive roots in collection order, per-root fields and the commutator
/// rules between them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootDatum {
    pub family: Family,
    pub roots: Vec<String>,
    pub fields: Vec<RootField>,
    pub rules: Vec<CommRule>,
}

pub mod g2 {
    pub const A: usize = 0;
    pub const B: usize = 1;
    pub const AB: usize = 2;
    pub const A2B: usize = 3;
    pub const A3B: usize = 4;
    pub const A3B2: usize = 5;
}

pub mod su4 {
    pub const A: usize = 0;
    pub const B: usize = 1;
    pub const AB: usize = 2;
    pub const A2B: usize = 3;
}

fn mono(target: usize, c: i64, i: u32, j: u32) -> CommEntry {
    CommEntry { target, coeff: Coefficient::Monomial { c, i, j } }
}

impl RootDatum {
    pub fn g2(convention: G2Convention) -> Self {
        use g2::*;
        let mut rules = vec![
            CommRule {
                r: A,
                s: B,
                terms: vec![mono(AB, -1, 1, 1), mono(A2B, -1, 2, 1), mono(A3B, 1, 3, 1), mono(A3B2, -2, 3, 2)],
            },
            CommRule { r: A, s: AB, terms: vec![mono(A2B, -2, 1, 1), mono(A3B, 3, 2, 1), mono(A3B2, 3, 1, 2)] },
            CommRule { r: A, s: A2B, terms: vec![mono(A3B, 3, 1, 1)] },
            CommRule { r: B, s: A3B, terms: vec![mono(A3B2, 1, 1, 1)] },
            CommRule { r: AB, s: A2B, terms: vec![mono(A3B2, 3, 1, 1)] },
        ];
        if convention == G2Convention::Negated {
            for rule in &mut rules {
                for term in &mut rule.terms {
                    if let Coefficient::Monomial { i, j, .. } = term.coeff {
                        let sign = if (i + j + 1) % 2 == 0 { 1 } else { -1 };
                        term.coeff = term.coeff.scaled(sign);
                    }
                }
            }
        }
        RootDatum {
            family: Family::G2,
            roots: ["a", "b", "a+b", "2a+b", "3a+b", "3a+2b"].map(String::from).to_vec(),
            fields: vec![RootField::Base; 6],
            rules,
        }
    }

    pub fn su4(signs: Su4Signs) -> Self {
        use su4::*;
        RootDatum {
            family: Family::Su4,
            roots: ["a", "b", "a+b", "2a+b"].map(String::from).to_vec(),
            fields: vec![RootField::Ext, RootField::Base, RootField::Ext, RootField::Base],
            rules: vec![
                CommRule {
                    r: A,
                    s: B,
                    terms: vec![
                        mono(AB, signs.eps as i64, 1, 1),
                        CommEntry { target: A2B, coeff: Coefficient::Norm { c: signs.eps1 as i64 } },
                    ],
                },
                CommRule {
                    r: A,
                    s: AB,
                    terms: vec![CommEntry { target: A2B, coeff: Coefficient::TraceConj { c: signs.eps2 as i64 } }],
                },
            ],
        }
    }

    pub fn rank(&self) -> usize {
        self.roots.len()
    }

    pub fn root_index(&self, label: &str) -> Result<usize> {
        let norm: String = label.chars().filter(|c| !c.is_whitespace()).collect();
        let norm = norm.replace("alpha", "a").replace("beta", "b");
        self.roots
            .iter()
            .position(|r| *r == norm)
            .ok_or_else(|| Error::Usage(format!("unknown root {label:?} for {}", self.family)))
    }

    /// Structural checks: targets strictly after both sources, no duplicate
    /// pairs, unitary coefficients only where the fields allow them.
    pub fn validate(&self) -> Result<()> {
        let n = self.rank();
        if n == 0 || n > super::MAX_RANK || self.fields.len() != n {
            return Err(Error::Config("malformed root datum".into()));
        }
        let mut seen = std::collections::HashSet::new();
        for rule in &self.rules {
            if rule.r >= rule.s || rule.s >= n || !seen.insert((rule.r, rule.s)) {
                return Err(Error::Config(format!("bad rule pair ({}, {})", rule.r, rule.s)));
            }
            let mut last = rule.s;
            for term in &rule.terms {
                if term.target <= last || term.target >= n {
                    return Err(Error::Config(format!(
                        "rule ({}, {}) targets root {} out of order",
                        rule.r, rule.s, term.target
                    )));
                }
                last = term.target;
            }
        }
        Ok(())
    }

    pub fn rule(&self, r: usize, s: usize) -> Option<&CommRule> {
        self.rules.iter().find(|rule| rule.r == r && rule.s == s)
    }
}
