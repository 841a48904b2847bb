//! Versioned little-endian serialisation of a [`GroupTable`].
//!
//! Layout: magic `RGTB`, version, family, convention and signs, the base
//! modulus, then every tabulated commutator coefficient, then an FNV-1a
//! checksum of everything before it.

use std::fs;
use std::path::Path;

use super::{BuildOptions, Family, G2Convention, GroupTable, Su4Signs, Term, MAX_RANK};
use crate::error::{Error, Result};
use crate::gf::{FieldParams, GaloisField, QuadraticExtension};

pub const CACHE_VERSION: u32 = 1;
const MAGIC: &[u8; 4] = b"RGTB";

fn fnv1a(bytes: &[u8]) -> u64 {
    bytes.iter().fold(0xcbf29ce484222325u64, |h, &b| (h ^ b as u64).wrapping_mul(0x100000001b3))
}

pub fn cache_file_name(family: Family, q: u32, options: &BuildOptions) -> String {
    let mut name = format!("{family}-q{q}");
    if let Some(m) = &options.modulus {
        let coeffs: Vec<String> = m.iter().map(|c| c.to_string()).collect();
        name.push_str(&format!("-m{}", coeffs.join("_")));
    }
    match family {
        Family::G2 if options.g2_convention == G2Convention::Negated => name.push_str("-neg"),
        Family::Su4 if options.su4_signs != Su4Signs::default() => {
            let s = options.su4_signs;
            name.push_str(&format!("-s{}{}{}", s.eps, s.eps1, s.eps2));
        }
        _ => {}
    }
    name.push_str(&format!(".v{CACHE_VERSION}.bin"));
    name
}

struct Reader<'a> {
    buf: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn take(&mut self, n: usize) -> Result<&'a [u8]> {
        let end = self.pos.checked_add(n).filter(|&e| e <= self.buf.len());
        let end = end.ok_or_else(|| Error::Io("truncated group cache".into()))?;
        let out = &self.buf[self.pos..end];
        self.pos = end;
        Ok(out)
    }

    fn u8(&mut self) -> Result<u8> {
        Ok(self.take(1)?[0])
    }

    fn i8(&mut self) -> Result<i8> {
        Ok(self.u8()? as i8)
    }

    fn u32(&mut self) -> Result<u32> {
        Ok(u32::from_le_bytes(self.take(4)?.try_into().unwrap()))
    }
}

impl GroupTable {
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::new();
        out.extend_from_slice(MAGIC);
        out.extend_from_slice(&CACHE_VERSION.to_le_bytes());
        out.push(match self.family() {
            Family::G2 => 0,
            Family::Su4 => 1,
        });
        out.push(match self.options.g2_convention {
            G2Convention::Standard => 0,
            G2Convention::Negated => 1,
        });
        let s = self.options.su4_signs;
        out.extend([s.eps as u8, s.eps1 as u8, s.eps2 as u8]);
        let params = self.base.params();
        out.extend_from_slice(&params.p.to_le_bytes());
        out.extend_from_slice(&params.n.to_le_bytes());
        out.push(self.options.modulus.is_some() as u8);
        out.extend_from_slice(&(params.modulus.len() as u32).to_le_bytes());
        for c in &params.modulus {
            out.extend_from_slice(&c.to_le_bytes());
        }
        let rules: Vec<(usize, &Vec<Term>)> =
            self.terms.iter().enumerate().filter_map(|(i, t)| t.as_ref().map(|t| (i, t))).collect();
        out.extend_from_slice(&(rules.len() as u32).to_le_bytes());
        for (slot, terms) in rules {
            out.push((slot / MAX_RANK) as u8);
            out.push((slot % MAX_RANK) as u8);
            out.push(terms.len() as u8);
            for term in terms {
                out.push(term.target as u8);
                out.extend_from_slice(&(term.values.len() as u32).to_le_bytes());
                out.extend_from_slice(&term.values);
            }
        }
        let sum = fnv1a(&out);
        out.extend_from_slice(&sum.to_le_bytes());
        out
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self> {
        if bytes.len() < 8 {
            return Err(Error::Io("group cache too short".into()));
        }
        let (body, sum) = bytes.split_at(bytes.len() - 8);
        if fnv1a(body) != u64::from_le_bytes(sum.try_into().unwrap()) {
            return Err(Error::Io("group cache checksum mismatch".into()));
        }
        let mut r = Reader { buf: body, pos: 0 };
        if r.take(4)? != MAGIC {
            return Err(Error::Io("not a group cache".into()));
        }
        let version = r.u32()?;
        if version != CACHE_VERSION {
            return Err(Error::Io(format!("group cache version {version}, expected {CACHE_VERSION}")));
        }
        let family = match r.u8()? {
            0 => Family::G2,
            1 => Family::Su4,
            f => return Err(Error::Io(format!("unknown family tag {f}"))),
        };
        let g2_convention = if r.u8()? == 1 { G2Convention::Negated } else { G2Convention::Standard };
        let su4_signs = Su4Signs { eps: r.i8()?, eps1: r.i8()?, eps2: r.i8()? };
        let p = r.u32()?;
        let n = r.u32()?;
        let explicit = r.u8()? == 1;
        let len = r.u32()? as usize;
        let modulus = (0..len).map(|_| r.u32()).collect::<Result<Vec<_>>>()?;
        let params = FieldParams::new(p, n, modulus.clone())?;
        let options = BuildOptions { modulus: explicit.then_some(modulus), g2_convention, su4_signs };

        let base = GaloisField::new(params);
        let (datum, quad) = match family {
            Family::G2 => (super::RootDatum::g2(g2_convention), None),
            Family::Su4 => {
                let ext = GaloisField::with_default_modulus(p, 2 * n)?;
                (super::RootDatum::su4(su4_signs.validate(p)?), Some(QuadraticExtension::from_fields(base.clone(), ext)))
            }
        };
        let mut table = GroupTable::skeleton(datum, options, base, quad)?;
        let nrules = r.u32()? as usize;
        for _ in 0..nrules {
            let (rr, ss) = (r.u8()? as usize, r.u8()? as usize);
            let rule = table
                .datum
                .rule(rr, ss)
                .ok_or_else(|| Error::Io(format!("cache has unknown rule ({rr}, {ss})")))?
                .clone();
            let nterms = r.u8()? as usize;
            if nterms != rule.terms.len() {
                return Err(Error::Io("cache rule length mismatch".into()));
            }
            let expected = table.radix[rr] as usize * table.radix[ss] as usize;
            let mut terms = Vec::with_capacity(nterms);
            for entry in &rule.terms {
                let target = r.u8()? as usize;
                let len = r.u32()? as usize;
                if target != entry.target || len != expected {
                    return Err(Error::Io("cache term shape mismatch".into()));
                }
                let values = r.take(len)?.to_vec();
                if values.iter().any(|&v| v as u32 >= table.radix[target]) {
                    return Err(Error::Io("cache term value out of range".into()));
                }
                terms.push(Term { target, values });
            }
            table.terms[rr * MAX_RANK + ss] = Some(terms);
        }
        if r.pos != body.len() {
            return Err(Error::Io("trailing bytes in group cache".into()));
        }
        if table.datum.rules.iter().any(|rule| table.terms[rule.r * MAX_RANK + rule.s].is_none()) {
            return Err(Error::Io("cache is missing commutator rules".into()));
        }
        table.finish();
        Ok(table)
    }

    pub fn write_cache(&self, path: &Path) -> Result<()> {
        if let Some(dir) = path.parent() {
            fs::create_dir_all(dir)?;
        }
        let tmp = path.with_extension("tmp");
        fs::write(&tmp, self.to_bytes())?;
        fs::rename(&tmp, path)?;
        Ok(())
    }

    pub fn read_cache(path: &Path) -> Result<Self> {
        GroupTable::from_bytes(&fs::read(path)?)
    }

    /// Load from `dir` if a valid cache exists, otherwise build and store.
    /// Returns the table and whether it came from the cache.
    pub fn load_or_build(dir: &Path, family: Family, q: u32, options: BuildOptions) -> Result<(Self, bool)> {
        let path = dir.join(cache_file_name(family, q, &options));
        if let Ok(t) = GroupTable::read_cache(&path) {
            if t.family() == family && t.q() == q && *t.options() == options {
                return Ok((t, true));
            }
        }
        let t = GroupTable::build_with(family, q, options)?;
        t.write_cache(&path)?;
        Ok((t, false))
    }
}
