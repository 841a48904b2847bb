//! Oracles shared by the integration tests.

#![allow(dead_code)]

use rootgroups::chevalley::g2::*;
use rootgroups::gf::GaloisField;
use rootgroups::GroupTable;

/// The reduced commutator table displayed for characteristic `p`, as the
/// factors of `[x_r(t), x_s(u)]` in root order; pairs not listed commute.
pub fn displayed(f: &GaloisField, r: usize, s: usize, t: u8, u: u8) -> Vec<(usize, u8)> {
    let p = f.characteristic();
    let c = |k: i64| f.from_int(k);
    let m = |xs: &[u8]| xs.iter().fold(1u8, |acc, &x| f.mul(acc, x));
    let (t2, t3, u2) = (f.mul(t, t), f.pow(t, 3), f.mul(u, u));
    let terms: Vec<(usize, u8)> = match (p, r, s) {
        (2, A, B) => vec![(AB, m(&[t, u])), (A2B, m(&[t2, u])), (A3B, m(&[t3, u]))],
        (2, A, AB) => vec![(A3B, m(&[t2, u])), (A3B2, m(&[t, u2]))],
        (2, A, A2B) => vec![(A3B, m(&[t, u]))],
        (2, B, A3B) | (2, AB, A2B) => vec![(A3B2, m(&[t, u]))],
        (3, A, B) => vec![(AB, m(&[c(-1), t, u])), (A2B, m(&[c(-1), t2, u])), (A3B, m(&[t3, u])), (A3B2, m(&[t3, u2]))],
        (3, A, AB) => vec![(A2B, m(&[t, u]))],
        (3, B, A3B) => vec![(A3B2, m(&[t, u]))],
        (_, A, B) if p >= 5 => vec![
            (AB, m(&[c(-1), t, u])),
            (A2B, m(&[c(-1), t2, u])),
            (A3B, m(&[t3, u])),
            (A3B2, m(&[c(-2), t3, u2])),
        ],
        (_, A, AB) if p >= 5 => vec![(A2B, m(&[c(-2), t, u])), (A3B, m(&[c(3), t2, u])), (A3B2, m(&[c(3), t, u2]))],
        (_, A, A2B) if p >= 5 => vec![(A3B, m(&[c(3), t, u]))],
        (_, B, A3B) if p >= 5 => vec![(A3B2, m(&[t, u]))],
        (_, AB, A2B) if p >= 5 => vec![(A3B2, m(&[c(3), t, u]))],
        _ => vec![],
    };
    terms.into_iter().filter(|&(_, v)| v != 0).collect()
}

/// First `(r, s, t, u)` where the G2 table disagrees with [`displayed`].
pub fn table_mismatch(t: &GroupTable) -> Option<(usize, usize, u8, u8)> {
    let f = t.base_field();
    for r in 0..6 {
        for s in r + 1..6 {
            for a in f.elements() {
                for b in f.elements() {
                    let got = t.comm(&t.root_element(r, a).unwrap(), &t.root_element(s, b).unwrap());
                    let want = displayed(f, r, s, a, b)
                        .into_iter()
                        .fold(t.identity(), |acc, (k, v)| t.mul(&acc, &t.root_element(k, v).unwrap()));
                    if got != want {
                        return Some((r, s, a, b));
                    }
                }
            }
        }
    }
    None
}
