//! A small expression language naming subgroups of `S`, used by `dump`.
//!
//! ```text
//! S, 1                       the whole group, the trivial group
//! roots(a, a+b, 2a+b)        product of root subgroups
//! gen(x(a,1)*x(b,1), ...)    generated by words in root elements
//! Z(H) D(H) Phi(H) Omega(H) Agemo(H) J(H)
//! upper(k, H) lower(k, H)    Z_k(H) and γ_k(H)
//! C(H) N(H)                  centralizer and normalizer in S
//! meet(H, K) join(H, K) comm(H, K)
//! ```
//!
//! Parameters of `x(root, t)` are field-element indices: the integer whose
//! base-p digits are the coefficients of `t`, lowest degree first.

use std::fmt;

use super::elemab::thompson;
use super::frattini::{agemo, frattini, omega};
use super::series::{lower_central_series, upper_central_series};
use super::subgroup::{
    center, centralizer_in, closure, commutator_subgroup, derived_subgroup, intersection, normalizer_in, product,
    Subgroup,
};
use super::{Ambient, FiniteGroup};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Node {
    Text(String),
    Call(String, Vec<Node>),
    Word(Vec<Node>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupExpr {
    source: String,
    root: Node,
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Usage(msg.into())
}

struct Parser<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.chars.peek().is_some_and(|c| c.is_whitespace()) {
            self.chars.next();
        }
    }

    fn text(&mut self) -> String {
        let mut out = String::new();
        while let Some(&c) = self.chars.peek() {
            if "(),*".contains(c) {
                break;
            }
            out.push(c);
            self.chars.next();
        }
        out.trim().to_string()
    }

    fn factor(&mut self) -> Result<Node> {
        self.skip_ws();
        let name = self.text();
        if self.chars.peek() != Some(&'(') {
            return if name.is_empty() { Err(usage("empty term in recipe")) } else { Ok(Node::Text(name)) };
        }
        if name.is_empty() {
            return Err(usage("'(' without a function name"));
        }
        self.chars.next();
        let mut args = Vec::new();
        self.skip_ws();
        if self.chars.peek() == Some(&')') {
            self.chars.next();
            return Ok(Node::Call(name, args));
        }
        loop {
            args.push(self.node()?);
            match self.chars.next() {
                Some(',') => continue,
                Some(')') => return Ok(Node::Call(name, args)),
                Some(c) => return Err(usage(format!("unexpected {c:?} in arguments of {name}"))),
                None => return Err(usage(format!("unclosed '(' after {name}"))),
            }
        }
    }

    fn node(&mut self) -> Result<Node> {
        let first = self.factor()?;
        self.skip_ws();
        if self.chars.peek() != Some(&'*') {
            return Ok(first);
        }
        let mut factors = vec![first];
        while self.chars.peek() == Some(&'*') {
            self.chars.next();
            factors.push(self.factor()?);
            self.skip_ws();
        }
        Ok(Node::Word(factors))
    }
}

impl SubgroupExpr {
    pub fn parse(source: &str) -> Result<Self> {
        let mut p = Parser { chars: source.chars().peekable() };
        let root = p.node()?;
        p.skip_ws();
        if let Some(c) = p.chars.next() {
            return Err(usage(format!("unexpected {c:?} after the recipe")));
        }
        Ok(SubgroupExpr { source: source.trim().to_string(), root })
    }

    pub fn eval(&self, g: &Ambient) -> Result<Subgroup> {
        subgroup(g, &self.root)
    }
}

impl fmt::Display for SubgroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.source)
    }
}

fn arity(name: &str, args: &[Node], n: usize) -> Result<()> {
    if args.len() == n {
        Ok(())
    } else {
        Err(usage(format!("{name} takes {n} argument(s), got {}", args.len())))
    }
}

fn integer(node: &Node) -> Result<u64> {
    match node {
        Node::Text(t) => t.parse().map_err(|_| usage(format!("expected an integer, got {t:?}"))),
        _ => Err(usage("expected an integer")),
    }
}

fn root_label(g: &Ambient, node: &Node) -> Result<usize> {
    match node {
        Node::Text(t) => g.table().datum().root_index(t),
        _ => Err(usage("expected a root label")),
    }
}

fn element(g: &Ambient, node: &Node) -> Result<u32> {
    match node {
        Node::Call(name, args) if name == "x" => {
            arity("x", args, 2)?;
            let r = root_label(g, &args[0])?;
            let t = integer(&args[1])?;
            let t = u8::try_from(t).map_err(|_| usage(format!("parameter {t} is not a field element")))?;
            g.root_element(r, t).map_err(|e| match e {
                Error::Domain(m) => Error::Usage(m),
                e => e,
            })
        }
        Node::Word(factors) => {
            factors.iter().try_fold(0, |acc, f| Ok(g.mul(acc, element(g, f)?)))
        }
        Node::Text(t) if t == "1" => Ok(0),
        _ => Err(usage("expected x(root, t) or a product of them")),
    }
}

fn series_term(series: Vec<Subgroup>, k: u64, stable: Subgroup) -> Subgroup {
    series.get(k as usize).cloned().unwrap_or(stable)
}

fn subgroup(g: &Ambient, node: &Node) -> Result<Subgroup> {
    let s = g.whole();
    let (name, args) = match node {
        Node::Text(t) if t == "S" => return Ok(s),
        Node::Text(t) if t == "1" => return Ok(Subgroup::trivial(g)),
        Node::Text(t) => return Err(usage(format!("unknown subgroup {t:?}"))),
        Node::Word(_) => return Err(usage("a word names an element, wrap it in gen(...)")),
        Node::Call(name, args) => (name.as_str(), args.as_slice()),
    };
    let one = |f: fn(&Ambient, &Subgroup) -> Subgroup| -> Result<Subgroup> {
        arity(name, args, 1)?;
        Ok(f(g, &subgroup(g, &args[0])?))
    };
    let two = |f: fn(&Ambient, &Subgroup, &Subgroup) -> Subgroup| -> Result<Subgroup> {
        arity(name, args, 2)?;
        Ok(f(g, &subgroup(g, &args[0])?, &subgroup(g, &args[1])?))
    };
    match name {
        "roots" => {
            let roots = args.iter().map(|a| root_label(g, a)).collect::<Result<Vec<_>>>()?;
            Ok(g.root_product(&roots))
        }
        "gen" => {
            let xs = args.iter().map(|a| element(g, a)).collect::<Result<Vec<_>>>()?;
            Ok(closure(g, &xs))
        }
        "Z" | "center" => one(|g, h| center(g, h)),
        "D" | "derived" => one(|g, h| derived_subgroup(g, h)),
        "Phi" | "frattini" => one(|g, h| frattini(g, h)),
        "Omega" | "omega" => one(|g, h| omega(g, h)),
        "Agemo" | "agemo" => one(|g, h| agemo(g, h)),
        "J" | "thompson" => one(|g, h| thompson(g, h)),
        "C" => one(|g, h| centralizer_in(g, &g.whole(), h)),
        "N" => one(|g, h| normalizer_in(g, &g.whole(), h)),
        "meet" => two(|g, a, b| intersection(g, a, b)),
        "join" => two(|g, a, b| product(g, a, b)),
        "comm" => two(|g, a, b| commutator_subgroup(g, a, b)),
        "upper" | "lower" => {
            arity(name, args, 2)?;
            let k = integer(&args[0])?;
            let h = subgroup(g, &args[1])?;
            Ok(if name == "upper" {
                let series = upper_central_series(g, &h);
                let top = series.last().unwrap().clone();
                series_term(series, k, top)
            } else {
                if k == 0 {
                    return Err(usage("lower central terms start at lower(1, H) = H"));
                }
                let series = lower_central_series(g, &h);
                let bottom = series.last().unwrap().clone();
                series_term(series, k - 1, bottom)
            })
        }
        other => Err(usage(format!("unknown function {other:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chevalley::{g2, Family, GroupTable};

    fn g2_2() -> Ambient {
        Ambient::new(GroupTable::build(Family::G2, 2).unwrap()).unwrap()
    }

    #[test]
    fn recipes_name_the_expected_subgroups() {
        let g = g2_2();
        let eval = |r: &str| SubgroupExpr::parse(r).unwrap().eval(&g).unwrap();
        assert_eq!(eval("S"), g.whole());
        assert_eq!(eval("1").order(), 1);
        assert_eq!(eval("Z(S)"), g.root_product(&[g2::A3B2]));
        assert_eq!(eval("roots(3a+b, 3a+2b)").order(), 4);
        assert_eq!(eval("roots(a+b, 2a+b)").order(), 8);
        assert_eq!(eval("upper(1, S)"), eval("Z(S)"));
        assert_eq!(eval("lower(1, S)"), g.whole());
        assert_eq!(eval("gen(x(a,1)*x(b,1))").order(), 8);
        assert_eq!(eval("meet(C(roots(3a+b, 3a+2b)), S)").order(), 32);
        assert_eq!(eval("join(roots(a), roots(b))"), eval("gen(x(a,1), x(b,1))"));
        assert_eq!(eval("join(roots(a), roots(b))").order(), 16);
    }

    #[test]
    fn malformed_recipes_are_usage_errors() {
        let g = g2_2();
        for bad in ["", "Z(S", "Z(S))", "(S)", "foo(S)", "Z(S, S)", "roots(c)", "gen(x(a, 9))", "x(a,1)", "upper(x, S)"] {
            let r = SubgroupExpr::parse(bad).and_then(|e| e.eval(&g));
            assert!(matches!(r, Err(Error::Usage(_))), "{bad}: {r:?}");
        }
    }
}
