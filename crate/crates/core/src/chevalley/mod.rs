//! Sylow p-subgroups of G₂(q) and PSU₄(q) in root-group normal form.
//!
//! An element is the ordered product `x_{r_1}(c_1) ... x_{r_m}(c_m)` over
//! the positive roots, stored as its coordinate vector. Products are
//! brought back to normal form by collection from the left against the
//! commutator rules of the [`RootDatum`].

mod cache;
mod check;
mod datum;
mod oracle;

use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::gf::{prime_power, FieldParams, GaloisField, QuadraticExtension};

pub use cache::{cache_file_name, CACHE_VERSION};
pub use check::{sample_associativity, sample_oracle};
pub use datum::{
    g2, su4, CommEntry, CommRule, Coefficient, Family, G2Convention, RootDatum, RootField, Su4Signs,
};
pub use oracle::{Mat4, MatrixOracle};

pub const MAX_RANK: usize = 6;

/// Default bound on `q⁶` for whole-group scans.
pub const DEFAULT_ENUMERATION_CAP: u64 = 531_441;

/// Normal-form coordinates, one per positive root in datum order.
///
/// Coordinates are stored in the root's own field: for the unitary family
/// the roots `b` and `2a+b` carry GF(q) indices, the others GF(q²) indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GroupElement {
    coords: [u8; MAX_RANK],
}

impl GroupElement {
    pub fn coords(&self) -> &[u8; MAX_RANK] {
        &self.coords
    }

    pub fn is_identity(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coords)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BuildOptions {
    /// Modulus for GF(q), low degree first. The quadratic extension always
    /// uses its default modulus.
    pub modulus: Option<Vec<u32>>,
    pub g2_convention: G2Convention,
    pub su4_signs: Su4Signs,
}

#[derive(Clone, Debug)]
struct Term {
    target: usize,
    /// `values[t * radix(s) + u]` is the coordinate at `target`.
    values: Vec<u8>,
}

/// One instance of a family over a fixed field: the datum, the fields and
/// every commutator coefficient tabulated over all `(t, u)`.
#[derive(Clone)]
pub struct GroupTable {
    datum: RootDatum,
    options: BuildOptions,
    base: GaloisField,
    quad: Option<QuadraticExtension>,
    rank: usize,
    radix: [u32; MAX_RANK],
    stride: [u64; MAX_RANK],
    order: u64,
    terms: Vec<Option<Vec<Term>>>,
    blockers: [u8; MAX_RANK],
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupTable({}, q={})", self.datum.family, self.q())
    }
}

impl GroupTable {
    pub fn build(family: Family, q: u32) -> Result<Self> {
        GroupTable::build_with(family, q, BuildOptions::default())
    }

    pub fn build_with(family: Family, q: u32, options: BuildOptions) -> Result<Self> {
        let (p, n) = prime_power(q).ok_or_else(|| Error::Config(format!("q = {q} is not a prime power")))?;
        let params = match &options.modulus {
            Some(m) => FieldParams::new(p, n, m.clone())?,
            None => FieldParams::with_default_modulus(p, n)?,
        };
        let base = GaloisField::new(params);
        let (datum, quad) = match family {
            Family::G2 => (RootDatum::g2(options.g2_convention), None),
            Family::Su4 => {
                let signs = options.su4_signs.validate(p)?;
                let ext = GaloisField::with_default_modulus(p, 2 * n)
                    .map_err(|_| Error::Config(format!("GF({q}^2) is beyond the supported field sizes")))?;
                (RootDatum::su4(signs), Some(QuadraticExtension::from_fields(base.clone(), ext)))
            }
        };
        let mut table = GroupTable::skeleton(datum, options, base, quad)?;
        table.terms = table.tabulate()?;
        table.finish();
        Ok(table)
    }

    fn skeleton(
        datum: RootDatum,
        options: BuildOptions,
        base: GaloisField,
        quad: Option<QuadraticExtension>,
    ) -> Result<Self> {
        datum.validate()?;
        let rank = datum.rank();
        let mut radix = [1u32; MAX_RANK];
        for (r, f) in datum.fields.iter().enumerate() {
            radix[r] = match (f, &quad) {
                (RootField::Base, _) => base.order() as u32,
                (RootField::Ext, Some(e)) => e.ext().order() as u32,
                (RootField::Ext, None) => {
                    return Err(Error::Config("datum needs a quadratic extension".into()));
                }
            };
        }
        let mut stride = [0u64; MAX_RANK];
        let mut acc = 1u64;
        for r in (0..rank).rev() {
            stride[r] = acc;
            acc *= radix[r] as u64;
        }
        Ok(GroupTable {
            datum,
            options,
            base,
            quad,
            rank,
            radix,
            stride,
            order: acc,
            terms: vec![None; MAX_RANK * MAX_RANK],
            blockers: [0; MAX_RANK],
        })
    }

    fn finish(&mut self) {
        self.blockers = [0; MAX_RANK];
        for rule in &self.datum.rules {
            self.blockers[rule.r] |= 1 << rule.s;
        }
    }

    fn tabulate(&self) -> Result<Vec<Option<Vec<Term>>>> {
        let mut out = vec![None; MAX_RANK * MAX_RANK];
        let pf = self.param_field();
        for rule in &self.datum.rules {
            let (rr, rs) = (self.radix[rule.r] as usize, self.radix[rule.s] as usize);
            let mut terms = Vec::with_capacity(rule.terms.len());
            for entry in &rule.terms {
                let mut values = vec![0u8; rr * rs];
                for t in 0..rr {
                    let tl = self.lift(rule.r, t as u8);
                    for u in 0..rs {
                        let ul = self.lift(rule.s, u as u8);
                        let v = self.eval(entry.coeff, tl, ul);
                        values[t * rs + u] = self.lower(entry.target, v).ok_or_else(|| {
                            Error::Config(format!(
                                "coefficient for root {} leaves GF(q) at (t, u) = ({}, {})",
                                self.datum.roots[entry.target],
                                pf.format(tl),
                                pf.format(ul)
                            ))
                        })?;
                    }
                }
                terms.push(Term { target: entry.target, values });
            }
            out[rule.r * MAX_RANK + rule.s] = Some(terms);
        }
        Ok(out)
    }

    fn eval(&self, coeff: Coefficient, t: u8, u: u8) -> u8 {
        let f = self.param_field();
        match coeff {
            Coefficient::Monomial { c, i, j } => {
                f.mul(f.from_int(c), f.mul(f.pow(t, i as u64), f.pow(u, j as u64)))
            }
            Coefficient::Norm { c } => {
                let e = self.quad.as_ref().expect("norm needs GF(q^2)");
                f.mul(f.from_int(c), f.mul(e.norm(t), u))
            }
            Coefficient::TraceConj { c } => {
                let e = self.quad.as_ref().expect("trace needs GF(q^2)");
                f.mul(f.from_int(c), e.trace(f.mul(t, e.frobenius(u))))
            }
        }
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn family(&self) -> Family {
        self.datum.family
    }

    pub fn options(&self) -> &BuildOptions {
        &self.options
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn p(&self) -> u32 {
        self.base.characteristic()
    }

    pub fn q(&self) -> u32 {
        self.base.order() as u32
    }

    pub fn base_field(&self) -> &GaloisField {
        &self.base
    }

    pub fn quadratic(&self) -> Option<&QuadraticExtension> {
        self.quad.as_ref()
    }

    /// The field root parameters are drawn from: GF(q) for G₂, GF(q²) for
    /// the unitary family.
    pub fn param_field(&self) -> &GaloisField {
        match &self.quad {
            Some(e) => e.ext(),
            None => &self.base,
        }
    }

    pub fn root_field(&self, r: usize) -> &GaloisField {
        match self.datum.fields[r] {
            RootField::Base => &self.base,
            RootField::Ext => self.quad.as_ref().expect("ext root without extension").ext(),
        }
    }

    pub fn radix(&self, r: usize) -> u32 {
        self.radix[r]
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Root coordinate (local) to parameter-field value.
    #[inline]
    fn lift(&self, r: usize, v: u8) -> u8 {
        match (&self.quad, self.datum.fields[r]) {
            (Some(e), RootField::Base) => e.embed(v),
            _ => v,
        }
    }

    /// Parameter-field value to root coordinate, if it lies in the root's field.
    fn lower(&self, r: usize, v: u8) -> Option<u8> {
        match (&self.quad, self.datum.fields[r]) {
            (Some(e), RootField::Base) => e.restrict(v),
            _ => Some(v),
        }
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::default()
    }

    /// `x_r(t)` for `t` in the parameter field.
    pub fn root_element(&self, r: usize, t: u8) -> Result<GroupElement> {
        if r >= self.rank {
            return Err(Error::Usage(format!("root index {r} out of range")));
        }
        if t as usize >= self.param_field().order() {
            return Err(Error::Domain(format!("parameter {t} outside the field")));
        }
        let local = self.lower(r, t).ok_or_else(|| {
            Error::Domain(format!(
                "parameter {} for root {} must satisfy u = u^q",
                self.param_field().format(t),
                self.datum.roots[r]
            ))
        })?;
        let mut e = GroupElement::default();
        e.coords[r] = local;
        Ok(e)
    }

    /// Coordinate of `e` at root `r`, as a parameter-field value.
    pub fn param(&self, e: &GroupElement, r: usize) -> u8 {
        self.lift(r, e.coords[r])
    }

    pub fn params(&self, e: &GroupElement) -> Vec<u8> {
        (0..self.rank).map(|r| self.param(e, r)).collect()
    }

    pub fn from_params(&self, values: &[u8]) -> Result<GroupElement> {
        if values.len() != self.rank {
            return Err(Error::Usage(format!("expected {} coordinates", self.rank)));
        }
        let mut e = GroupElement::default();
        for (r, &v) in values.iter().enumerate() {
            e.coords[r] = self.root_element(r, v)?.coords[r];
        }
        Ok(e)
    }

    /// Parameter values admissible at root `r`, in increasing local order.
    pub fn root_values(&self, r: usize) -> Vec<u8> {
        (0..self.radix[r]).map(|v| self.lift(r, v as u8)).collect()
    }

    pub fn root_subgroup(&self, r: usize) -> Vec<GroupElement> {
        (0..self.radix[r])
            .map(|v| {
                let mut e = GroupElement::default();
                e.coords[r] = v as u8;
                e
            })
            .collect()
    }

    #[inline]
    pub fn index(&self, e: &GroupElement) -> u64 {
        (0..self.rank).map(|r| e.coords[r] as u64 * self.stride[r]).sum()
    }

    #[inline]
    pub fn element(&self, mut idx: u64) -> GroupElement {
        debug_assert!(idx < self.order);
        let mut e = GroupElement::default();
        for r in (0..self.rank).rev() {
            let rad = self.radix[r] as u64;
            e.coords[r] = (idx % rad) as u8;
            idx /= rad;
        }
        e
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order).map(move |i| self.element(i))
    }

    #[inline]
    fn add_at(&self, r: usize, a: u8, b: u8) -> u8 {
        self.root_field(r).add(a, b)
    }

    /// Right-multiply the normal form `nf` by `x_r(v)`.
    fn collect_letter(&self, nf: &mut [u8; MAX_RANK], r: usize, v: u8) {
        let mut stack: SmallVec<[(u8, u8); 32]> = SmallVec::new();
        stack.push((r as u8, v));
        while let Some((r, v)) = stack.pop() {
            let r = r as usize;
            if v == 0 {
                continue;
            }
            let mut occupied = 0u8;
            for k in r + 1..self.rank {
                if nf[k] != 0 {
                    occupied |= 1 << k;
                }
            }
            if occupied & self.blockers[r] == 0 {
                nf[r] = self.add_at(r, nf[r], v);
                continue;
            }
            // suffix · x_r(v) = x_r(v) · Π_k x_k(a_k)[x_r(v), x_k(a_k)]^{-1}
            let mut suffix = [(0usize, 0u8); MAX_RANK];
            let mut m = 0;
            for k in r + 1..self.rank {
                if nf[k] != 0 {
                    suffix[m] = (k, nf[k]);
                    m += 1;
                    nf[k] = 0;
                }
            }
            nf[r] = self.add_at(r, nf[r], v);
            for &(k, a) in suffix[..m].iter().rev() {
                if let Some(terms) = &self.terms[r * MAX_RANK + k] {
                    let w = self.radix[k] as usize;
                    for term in terms {
                        let c = term.values[v as usize * w + a as usize];
                        if c != 0 {
                            stack.push((term.target as u8, self.root_field(term.target).neg(c)));
                        }
                    }
                }
                stack.push((k as u8, a));
            }
        }
    }

    pub fn mul(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        let mut nf = a.coords;
        for r in 0..self.rank {
            if b.coords[r] != 0 {
                self.collect_letter(&mut nf, r, b.coords[r]);
            }
        }
        GroupElement { coords: nf }
    }

    pub fn inv(&self, a: &GroupElement) -> GroupElement {
        let mut nf = [0u8; MAX_RANK];
        for r in (0..self.rank).rev() {
            if a.coords[r] != 0 {
                self.collect_letter(&mut nf, r, self.root_field(r).neg(a.coords[r]));
            }
        }
        GroupElement { coords: nf }
    }

    /// `[a, b] = a⁻¹b⁻¹ab`.
    pub fn comm(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(&self.inv(&ba), &ab)
    }

    /// `a^g = g⁻¹ag`.
    pub fn conjugate(&self, a: &GroupElement, g: &GroupElement) -> GroupElement {
        self.mul(&self.inv(g), &self.mul(a, g))
    }

    pub fn pow(&self, a: &GroupElement, k: i64) -> GroupElement {
        let base = if k < 0 { self.inv(a) } else { *a };
        let mut e = k.unsigned_abs();
        let mut acc = self.identity();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &sq);
            }
            e >>= 1;
            if e > 0 {
                sq = self.mul(&sq, &sq);
            }
        }
        acc
    }

    pub fn element_order(&self, a: &GroupElement) -> u64 {
        let p = self.p() as i64;
        let mut x = *a;
        let mut ord = 1u64;
        while !x.is_identity() {
            x = self.pow(&x, p);
            ord *= p as u64;
        }
        ord
    }

    pub fn check_enumerable(&self, cap: u64) -> Result<()> {
        if self.order > cap {
            Err(Error::Resource(format!(
                "|S| = {} exceeds the enumeration cap {cap}",
                self.order
            )))
        } else {
            Ok(())
        }
    }

    /// Largest element order, by a full scan.
    pub fn exponent(&self, exec: Exec, cap: u64) -> Result<u64> {
        self.check_enumerable(cap)?;
        Ok(exec.max(0..self.order as u32, |i| self.element_order(&self.element(i as u64))))
    }

    pub fn matrix_oracle(&self) -> Result<MatrixOracle<'_>> {
        MatrixOracle::new(self)
    }

    pub fn format(&self, e: &GroupElement) -> String {
        let parts: Vec<String> = (0..self.rank)
            .filter(|&r| e.coords[r] != 0)
            .map(|r| format!("x_{}({})", self.datum.roots[r], self.param_field().format(self.param(e, r))))
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("·")
        }
    }

    pub fn datum_json(&self) -> serde_json::Value {
        serde_json::json!({
            "family": self.datum.family,
            "q": self.q(),
            "p": self.p(),
            "modulus": self.base.params().modulus,
            "ext_modulus": self.quad.as_ref().map(|e| e.ext().params().modulus.clone()),
            "order": self.order,
            "datum": self.datum,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normal_order_product_is_concatenation() {
        let g = GroupTable::build(Family::G2, 3).unwrap();
        let a = g.root_element(g2::A, 2).unwrap();
        let b = g.root_element(g2::B, 1).unwrap();
        assert_eq!(g.mul(&a, &b).coords()[..2], [2, 1]);
    }

    #[test]
    fn index_roundtrip() {
        let s = GroupTable::build(Family::Su4, 2).unwrap();
        assert_eq!(s.order(), 64);
        for i in 0..s.order() {
            assert_eq!(s.index(&s.element(i)), i);
        }
        assert_eq!(s.index(&s.identity()), 0);
    }

    #[test]
    fn base_roots_reject_non_fixed_parameters() {
        let s = GroupTable::build(Family::Su4, 2).unwrap();
        let omega = s.param_field().from_coords(&[0, 1]).unwrap();
        assert!(matches!(s.root_element(su4::B, omega), Err(Error::Domain(_))));
        assert!(s.root_element(su4::A, omega).is_ok());
        assert!(matches!(s.root_element(su4::A2B, omega), Err(Error::Domain(_))));
    }

    #[test]
    fn bad_signs_rejected_for_odd_p() {
        let opts = BuildOptions { su4_signs: Su4Signs { eps: 1, eps1: 1, eps2: 1 }, ..Default::default() };
        assert!(matches!(GroupTable::build_with(Family::Su4, 3, opts.clone()), Err(Error::Config(_))));
        assert!(GroupTable::build_with(Family::Su4, 2, opts).is_ok());
    }

    #[test]
    fn unsupported_q() {
        assert!(matches!(GroupTable::build(Family::G2, 6), Err(Error::Config(_))));
        assert!(matches!(GroupTable::build(Family::Su4, 32), Err(Error::Config(_))));
    }
}
