//! Exact arithmetic in GF(p^n) over a polynomial basis.
//!
//! Elements are stored as a single byte: the mixed-radix integer
//! `c_0 + c_1 p + ... + c_{n-1} p^{n-1}` of their polynomial-basis
//! coordinates, so `0` is zero and `1` is one. Every operation is a table
//! lookup built once at construction; fields of order up to 256 are
//! supported.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest field order handled (elements fit in a byte).
pub const MAX_FIELD_ORDER: u32 = 256;

pub fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// Field description: characteristic, degree and a monic irreducible
/// modulus given low degree first (`modulus.len() == n + 1`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldParams {
    pub p: u32,
    pub n: u32,
    pub modulus: Vec<u32>,
}

impl FieldParams {
    pub fn new(p: u32, n: u32, modulus: Vec<u32>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Config(format!("{p} is not prime")));
        }
        if n == 0 {
            return Err(Error::Config("field degree must be positive".into()));
        }
        let q = checked_pow(p, n)
            .filter(|&q| q <= MAX_FIELD_ORDER)
            .ok_or_else(|| Error::Config(format!("field order {p}^{n} exceeds {MAX_FIELD_ORDER}")))?;
        let _ = q;
        if modulus.len() != n as usize + 1 {
            return Err(Error::Config(format!(
                "modulus has degree {} but the field degree is {n}",
                modulus.len().saturating_sub(1)
            )));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::Config("modulus coefficients must lie in [0, p)".into()));
        }
        if modulus[n as usize] != 1 {
            return Err(Error::Config("modulus must be monic".into()));
        }
        if !is_irreducible(p, &modulus) {
            return Err(Error::Config(format!("modulus {modulus:?} is reducible over GF({p})")));
        }
        Ok(FieldParams { p, n, modulus })
    }

    pub fn with_default_modulus(p: u32, n: u32) -> Result<Self> {
        let modulus = default_modulus(p, n)?;
        FieldParams::new(p, n, modulus)
    }

    pub fn order(&self) -> u32 {
        self.p.pow(self.n)
    }
}

fn checked_pow(p: u32, n: u32) -> Option<u32> {
    (0..n).try_fold(1u32, |acc, _| acc.checked_mul(p))
}

/// Trim trailing zero coefficients.
fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.len() > 1 && *a.last().unwrap() == 0 {
        a.pop();
    }
    a
}

/// Remainder of `a` modulo the monic polynomial `m` over GF(p).
fn poly_rem(p: u32, a: &[u32], m: &[u32]) -> Vec<u32> {
    let dm = m.len() - 1;
    let mut r = a.to_vec();
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for (i, &c) in m.iter().enumerate() {
                let sub = (lead * c) % p;
                r[shift + i] = (r[shift + i] + p - sub) % p;
            }
        }
        r.pop();
    }
    r
}

/// Exhaustive irreducibility test: no monic factor of degree `1..=d/2`.
pub fn is_irreducible(p: u32, poly: &[u32]) -> bool {
    let poly = trim(poly.to_vec());
    let d = poly.len() - 1;
    if d == 0 {
        return false;
    }
    for k in 1..=d / 2 {
        let count = p.pow(k as u32);
        for low in 0..count {
            let mut f = digits(low, p, k);
            f.push(1);
            if poly_rem(p, &poly, &f).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn digits(mut v: u32, p: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(v % p);
        v /= p;
    }
    out
}

/// The least monic irreducible polynomial of degree `n` over GF(p), ordered
/// by the integer value of its lower coefficients (low degree least
/// significant). For `n = 1` this is `x`.
pub fn default_modulus(p: u32, n: u32) -> Result<Vec<u32>> {
    if !is_prime(p) {
        return Err(Error::Config(format!("{p} is not prime")));
    }
    let q = checked_pow(p, n)
        .filter(|&q| n > 0 && q <= MAX_FIELD_ORDER)
        .ok_or_else(|| Error::Config(format!("no modulus shipped for GF({p}^{n})")))?;
    for low in 0..q {
        let mut m = digits(low, p, n as usize);
        m.push(1);
        if is_irreducible(p, &m) {
            return Ok(m);
        }
    }
    Err(Error::Config(format!("no irreducible of degree {n} over GF({p})")))
}

/// A finite field with all operations tabulated.
#[derive(Clone)]
pub struct GaloisField {
    params: FieldParams,
    q: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

impl fmt::Debug for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}) mod {:?}", self.params.p, self.params.n, self.params.modulus)
    }
}

impl PartialEq for GaloisField {
    fn eq(&self, other: &Self) -> bool {
        self.params == other.params
    }
}

impl Eq for GaloisField {}

impl GaloisField {
    pub fn new(params: FieldParams) -> Self {
        let p = params.p;
        let n = params.n as usize;
        let q = params.order() as usize;
        let coords: Vec<Vec<u32>> = (0..q as u32).map(|i| digits(i, p, n)).collect();
        let encode = |c: &[u32]| c.iter().rev().fold(0u32, |acc, &d| acc * p + d) as u8;

        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for a in 0..q {
            for b in 0..q {
                let s: Vec<u32> = (0..n).map(|i| (coords[a][i] + coords[b][i]) % p).collect();
                add[a * q + b] = encode(&s);
                let mut prod = vec![0u32; 2 * n - 1];
                for i in 0..n {
                    for j in 0..n {
                        prod[i + j] = (prod[i + j] + coords[a][i] * coords[b][j]) % p;
                    }
                }
                let mut r = poly_rem(p, &prod, &params.modulus);
                r.resize(n, 0);
                mul[a * q + b] = encode(&r);
            }
        }
        let mut neg = vec![0u8; q];
        let mut inv = vec![0u8; q];
        for a in 0..q {
            neg[a] = (0..q).find(|&b| add[a * q + b] == 0).unwrap() as u8;
            if a != 0 {
                inv[a] = (1..q).find(|&b| mul[a * q + b] == 1).unwrap() as u8;
            }
        }
        GaloisField { params, q, add, mul, neg, inv }
    }

    pub fn with_default_modulus(p: u32, n: u32) -> Result<Self> {
        Ok(GaloisField::new(FieldParams::with_default_modulus(p, n)?))
    }

    /// Field of order `q`, using the default modulus.
    pub fn of_order(q: u32) -> Result<Self> {
        let (p, n) = prime_power(q).ok_or_else(|| Error::Config(format!("{q} is not a prime power")))?;
        GaloisField::with_default_modulus(p, n)
    }

    pub fn params(&self) -> &FieldParams {
        &self.params
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.params.p
    }

    pub fn degree(&self) -> u32 {
        self.params.n
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg[b as usize])
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q + b as usize]
    }

    pub fn inv(&self, a: u8) -> Result<u8> {
        if a == 0 {
            Err(Error::Domain("inverse of zero".into()))
        } else {
            Ok(self.inv[a as usize])
        }
    }

    pub fn pow(&self, a: u8, mut k: u64) -> u8 {
        let mut base = a;
        let mut acc = 1u8;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// `a^k` for any integer `k`; negative powers require `a != 0`.
    pub fn pow_signed(&self, a: u8, k: i64) -> Result<u8> {
        if k >= 0 {
            Ok(self.pow(a, k as u64))
        } else {
            Ok(self.pow(self.inv(a)?, k.unsigned_abs()))
        }
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, c: i64) -> u8 {
        c.rem_euclid(self.params.p as i64) as u8
    }

    pub fn coords(&self, a: u8) -> Vec<u32> {
        digits(a as u32, self.params.p, self.params.n as usize)
    }

    pub fn from_coords(&self, coords: &[u32]) -> Result<u8> {
        let p = self.params.p;
        if coords.len() != self.params.n as usize || coords.iter().any(|&c| c >= p) {
            return Err(Error::Usage(format!("invalid coordinates {coords:?} for {self:?}")));
        }
        Ok(coords.iter().rev().fold(0u32, |acc, &d| acc * p + d) as u8)
    }

    pub fn elements(&self) -> impl Iterator<Item = u8> {
        (0..self.q).map(|a| a as u8)
    }

    pub fn elem(&self, index: u8) -> Fq<'_> {
        assert!((index as usize) < self.q, "index {index} outside {self:?}");
        Fq { field: self, index }
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: u8) -> Result<u32> {
        if a == 0 {
            return Err(Error::Domain("zero has no multiplicative order".into()));
        }
        let mut x = a;
        let mut k = 1;
        while x != 1 {
            x = self.mul(x, a);
            k += 1;
        }
        Ok(k)
    }

    pub fn format(&self, a: u8) -> String {
        let c = self.coords(a);
        let terms: Vec<String> = c
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &v)| v != 0)
            .map(|(i, &v)| match (i, v) {
                (0, v) => v.to_string(),
                (1, 1) => "x".into(),
                (1, v) => format!("{v}x"),
                (i, 1) => format!("x^{i}"),
                (i, v) => format!("{v}x^{i}"),
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }
}

/// `(p, n)` with `q = p^n`, if `q` is a prime power.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut n = 0;
    let mut r = q;
    while r % p == 0 {
        r /= p;
        n += 1;
    }
    (r == 1).then_some((p, n))
}

/// A field element tied to its field; binary operations check that both
/// operands live in the same field.
#[derive(Clone, Copy)]
pub struct Fq<'f> {
    field: &'f GaloisField,
    index: u8,
}

impl PartialEq for Fq<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.index == other.index && self.field == other.field
    }
}

impl Eq for Fq<'_> {}

impl fmt::Debug for Fq<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.field.format(self.index))
    }
}

impl fmt::Display for Fq<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.field.format(self.index))
    }
}

impl<'f> Fq<'f> {
    pub fn index(self) -> u8 {
        self.index
    }

    pub fn field(self) -> &'f GaloisField {
        self.field
    }

    pub fn coords(self) -> Vec<u32> {
        self.field.coords(self.index)
    }

    pub fn is_zero(self) -> bool {
        self.index == 0
    }

    fn same_field(self, other: Fq<'f>) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::Usage(format!("operands from {:?} and {:?}", self.field, other.field)))
        }
    }

    fn with(self, index: u8) -> Fq<'f> {
        Fq { field: self.field, index }
    }

    pub fn add(self, other: Fq<'f>) -> Result<Fq<'f>> {
        self.same_field(other)?;
        Ok(self.with(self.field.add(self.index, other.index)))
    }

    pub fn sub(self, other: Fq<'f>) -> Result<Fq<'f>> {
        self.same_field(other)?;
        Ok(self.with(self.field.sub(self.index, other.index)))
    }

    pub fn mul(self, other: Fq<'f>) -> Result<Fq<'f>> {
        self.same_field(other)?;
        Ok(self.with(self.field.mul(self.index, other.index)))
    }

    pub fn neg(self) -> Fq<'f> {
        self.with(self.field.neg(self.index))
    }

    pub fn inv(self) -> Result<Fq<'f>> {
        Ok(self.with(self.field.inv(self.index)?))
    }

    pub fn pow(self, k: i64) -> Result<Fq<'f>> {
        Ok(self.with(self.field.pow_signed(self.index, k)?))
    }
}

/// GF(q²) together with its subfield GF(q), the embedding between them and
/// the involution `t ↦ t^q`.
#[derive(Clone, Debug)]
pub struct QuadraticExtension {
    base: GaloisField,
    ext: GaloisField,
    embed: Vec<u8>,
    restrict: Vec<Option<u8>>,
    frob: Vec<u8>,
}

impl QuadraticExtension {
    /// Default moduli for both GF(p^n) and GF(p^{2n}).
    pub fn new(p: u32, n: u32) -> Result<Self> {
        let base = GaloisField::with_default_modulus(p, n)?;
        let ext = GaloisField::with_default_modulus(p, 2 * n)?;
        Ok(QuadraticExtension::from_fields(base, ext))
    }

    /// `base` must have degree n and `ext` degree 2n over the same prime.
    pub fn from_fields(base: GaloisField, ext: GaloisField) -> Self {
        assert_eq!(base.characteristic(), ext.characteristic());
        assert_eq!(2 * base.degree(), ext.degree());
        let q = base.order() as u64;
        let frob: Vec<u8> = ext.elements().map(|a| ext.pow(a, q)).collect();

        // The least-index root of the base modulus in the extension is the
        // image of the base field's generator x.
        let modulus = &base.params().modulus;
        let eval = |r: u8| {
            modulus.iter().rev().fold(0u8, |acc, &c| {
                ext.add(ext.mul(acc, r), ext.from_int(c as i64))
            })
        };
        let root = ext.elements().find(|&r| eval(r) == 0).expect("base modulus splits in GF(q^2)");
        let embed: Vec<u8> = base
            .elements()
            .map(|b| {
                base.coords(b).iter().enumerate().fold(0u8, |acc, (i, &c)| {
                    ext.add(acc, ext.mul(ext.from_int(c as i64), ext.pow(root, i as u64)))
                })
            })
            .collect();
        let mut restrict = vec![None; ext.order()];
        for (b, &e) in embed.iter().enumerate() {
            restrict[e as usize] = Some(b as u8);
        }
        QuadraticExtension { base, ext, embed, restrict, frob }
    }

    pub fn base(&self) -> &GaloisField {
        &self.base
    }

    pub fn ext(&self) -> &GaloisField {
        &self.ext
    }

    /// `a^q`.
    #[inline]
    pub fn frobenius(&self, a: u8) -> u8 {
        self.frob[a as usize]
    }

    /// `a + a^q`, as an element of GF(q²) lying in the fixed field.
    #[inline]
    pub fn trace(&self, a: u8) -> u8 {
        self.ext.add(a, self.frobenius(a))
    }

    /// `a · a^q`, as an element of GF(q²) lying in the fixed field.
    #[inline]
    pub fn norm(&self, a: u8) -> u8 {
        self.ext.mul(a, self.frobenius(a))
    }

    pub fn trace_to_base(&self, a: u8) -> u8 {
        self.restrict[self.trace(a) as usize].expect("trace lands in the subfield")
    }

    pub fn norm_to_base(&self, a: u8) -> u8 {
        self.restrict[self.norm(a) as usize].expect("norm lands in the subfield")
    }

    pub fn embed(&self, b: u8) -> u8 {
        self.embed[b as usize]
    }

    pub fn restrict(&self, a: u8) -> Option<u8> {
        self.restrict[a as usize]
    }

    pub fn in_base(&self, a: u8) -> bool {
        self.frobenius(a) == a
    }

    /// Elements of GF(q²) fixed by the Frobenius, in increasing index order.
    pub fn fixed_field(&self) -> Vec<u8> {
        self.ext.elements().filter(|&a| self.in_base(a)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Naive product of coordinate vectors reduced by repeated subtraction,
    /// independent of the tabulated multiplication.
    fn naive_mul(p: u32, m: &[u32], a: &[u32], b: &[u32]) -> Vec<u32> {
        let n = m.len() - 1;
        let mut prod = vec![0u32; 2 * n];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        for deg in (n..2 * n).rev() {
            let c = prod[deg];
            if c != 0 {
                for (k, &mk) in m.iter().enumerate() {
                    let idx = deg - n + k;
                    prod[idx] = (prod[idx] + p * p - c * mk) % p;
                }
            }
        }
        prod.truncate(n);
        prod
    }

    #[test]
    fn gf4_omega_squared_is_omega_plus_one() {
        let f = GaloisField::with_default_modulus(2, 2).unwrap();
        assert_eq!(f.params().modulus, vec![1, 1, 1]);
        let omega = f.from_coords(&[0, 1]).unwrap();
        let expect = naive_mul(2, &[1, 1, 1], &[0, 1], &[0, 1]);
        assert_eq!(expect, vec![1, 1]);
        assert_eq!(f.coords(f.mul(omega, omega)), expect);
    }

    #[test]
    fn tables_match_naive_products() {
        for (p, n) in [(2, 3), (3, 2), (5, 2), (2, 4), (3, 3), (7, 1)] {
            let f = GaloisField::with_default_modulus(p, n).unwrap();
            let m = f.params().modulus.clone();
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(f.coords(f.mul(a, b)), naive_mul(p, &m, &f.coords(a), &f.coords(b)));
                }
            }
        }
    }

    #[test]
    fn default_moduli() {
        assert_eq!(default_modulus(2, 1).unwrap(), vec![0, 1]);
        assert_eq!(default_modulus(2, 2).unwrap(), vec![1, 1, 1]);
        // x^2 + 1 over GF(3): oracle is the root search below.
        let m = default_modulus(3, 2).unwrap();
        assert_eq!(m, vec![1, 0, 1]);
        assert!((0..3).all(|x| (m[0] + m[1] * x + x * x) % 3 != 0));
        // and nothing smaller is irreducible
        for low in 0..1 {
            let cand = vec![low % 3, low / 3, 1];
            assert!((0..3).any(|x| (cand[0] + cand[1] * x + x * x) % 3 == 0));
        }
        assert!(default_modulus(2, 9).is_err());
        assert!(default_modulus(4, 1).is_err());
    }

    #[test]
    fn supported_fields_build() {
        for q in [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64, 81, 121, 125, 128, 243, 256] {
            let f = GaloisField::of_order(q).unwrap();
            assert_eq!(f.order() as u32, q);
        }
    }

    #[test]
    fn rejects_bad_moduli() {
        assert!(matches!(FieldParams::new(2, 2, vec![1, 0, 1]), Err(Error::Config(_))));
        assert!(matches!(FieldParams::new(2, 2, vec![1, 1, 0]), Err(Error::Config(_))));
        assert!(matches!(FieldParams::new(4, 1, vec![0, 1]), Err(Error::Config(_))));
        assert!(FieldParams::new(3, 2, vec![2, 1, 1]).is_ok());
    }

    #[test]
    fn fq_identities_and_errors() {
        let f = GaloisField::of_order(9).unwrap();
        let g = GaloisField::of_order(3).unwrap();
        let x = f.elem(5);
        assert_eq!(x.add(f.elem(0)).unwrap(), x);
        assert_eq!(f.elem(1).inv().unwrap(), f.elem(1));
        assert_eq!(x.mul(x.inv().unwrap()).unwrap(), f.elem(1));
        assert!(matches!(f.elem(0).inv(), Err(Error::Domain(_))));
        assert!(matches!(x.add(g.elem(1)), Err(Error::Usage(_))));
        assert_eq!(x.pow(-1).unwrap(), x.inv().unwrap());
        assert_eq!(x.pow(8).unwrap(), f.elem(1));
    }

    #[test]
    fn field_axioms_exhaustive() {
        for q in [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49, 81] {
            let f = GaloisField::of_order(q).unwrap();
            let els: Vec<u8> = f.elements().collect();
            for &a in &els {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                    assert_eq!(els.iter().filter(|&&b| f.mul(a, b) == 1).count(), 1);
                }
                for &b in &els {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    if q <= 27 {
                        for &c in &els {
                            assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
                            assert_eq!(f.add(a, f.add(b, c)), f.add(f.add(a, b), c));
                            assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn gf4_frobenius_trace_norm() {
        let e = QuadraticExtension::new(2, 1).unwrap();
        let f = e.ext();
        let omega = f.from_coords(&[0, 1]).unwrap();
        // repeated squaring oracle
        assert_eq!(e.frobenius(omega), f.mul(omega, omega));
        assert_eq!(e.trace(omega), 1);
        assert_eq!(e.norm(omega), 1);
        assert_eq!(f.multiplicative_order(omega).unwrap(), 3);
        assert_eq!(e.trace(0), 0);
        assert_eq!(e.norm(1), 1);
        assert_eq!(e.frobenius(1), 1);
    }

    #[test]
    fn frobenius_is_involutive_automorphism() {
        for (p, n) in [(2, 1), (3, 1), (2, 2), (5, 1), (3, 2), (7, 1), (2, 3)] {
            let e = QuadraticExtension::new(p, n).unwrap();
            let f = e.ext();
            let q = e.base().order();
            let fixed = e.fixed_field();
            assert_eq!(fixed.len(), q);
            for a in f.elements() {
                assert_eq!(e.frobenius(e.frobenius(a)), a);
                assert!(e.in_base(e.trace(a)));
                assert!(e.in_base(e.norm(a)));
                for b in f.elements() {
                    assert_eq!(e.frobenius(f.mul(a, b)), f.mul(e.frobenius(a), e.frobenius(b)));
                    assert_eq!(e.trace(f.add(a, b)), f.add(e.trace(a), e.trace(b)));
                    assert_eq!(e.norm(f.mul(a, b)), f.mul(e.norm(a), e.norm(b)));
                }
            }
            // prime subfield fixed
            for c in 0..p as i64 {
                assert_eq!(e.frobenius(f.from_int(c)), f.from_int(c));
            }
            // surjectivity onto the subfield
            let mut traces: Vec<u8> = f.elements().map(|a| e.trace(a)).collect();
            traces.sort();
            traces.dedup();
            assert_eq!(traces, fixed);
            let mut norms: Vec<u8> = f.elements().filter(|&a| a != 0).map(|a| e.norm(a)).collect();
            norms.sort();
            norms.dedup();
            assert_eq!(norms, fixed.iter().copied().filter(|&a| a != 0).collect::<Vec<_>>());
        }
    }

    #[test]
    fn embedding_is_a_field_homomorphism() {
        for (p, n) in [(2, 1), (2, 2), (3, 1), (3, 2), (5, 1), (2, 3)] {
            let e = QuadraticExtension::new(p, n).unwrap();
            let (b, x) = (e.base(), e.ext());
            for s in b.elements() {
                assert!(e.in_base(e.embed(s)));
                assert_eq!(e.restrict(e.embed(s)), Some(s));
                for t in b.elements() {
                    assert_eq!(e.embed(b.add(s, t)), x.add(e.embed(s), e.embed(t)));
                    assert_eq!(e.embed(b.mul(s, t)), x.mul(e.embed(s), e.embed(t)));
                }
            }
        }
    }
}
