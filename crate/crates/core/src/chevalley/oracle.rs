//! 4×4 unitriangular matrices over GF(q²) realising the unitary Sylow
//! subgroup, used as an independent check on collection.

use super::{su4, GroupElement, GroupTable};
use crate::error::{Error, Result};
use crate::gf::GaloisField;

pub type Mat4 = [[u8; 4]; 4];

pub struct MatrixOracle<'a> {
    table: &'a GroupTable,
}

impl<'a> MatrixOracle<'a> {
    pub fn new(table: &'a GroupTable) -> Result<Self> {
        if table.quadratic().is_none() {
            return Err(Error::Usage(format!("no matrix oracle for {}", table.family())));
        }
        Ok(MatrixOracle { table })
    }

    fn field(&self) -> &GaloisField {
        self.table.param_field()
    }

    pub fn identity(&self) -> Mat4 {
        let mut m = [[0u8; 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        m
    }

    fn elementary(&self, i: usize, j: usize, t: u8) -> Mat4 {
        let mut m = self.identity();
        m[i][j] = t;
        m
    }

    pub fn mat_mul(&self, a: &Mat4, b: &Mat4) -> Mat4 {
        let f = self.field();
        let mut out = [[0u8; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                let mut acc = 0u8;
                for k in 0..4 {
                    acc = f.add(acc, f.mul(a[i][k], b[k][j]));
                }
                out[i][j] = acc;
            }
        }
        out
    }

    /// Image of `x_r(t)`, `t` in GF(q²).
    ///
    /// `x_a`, `x_b`, `x_c` are the transvections at (1,2), (2,3), (3,4);
    /// `x_α(t) = x_a(t)x_c(t^q)`, `x_β(u) = x_b(u)`, and the two higher
    /// roots are the matching products at (1,3)(2,4) and (1,4).
    pub fn root_matrix(&self, r: usize, t: u8) -> Mat4 {
        let f = self.field();
        let e = self.table.quadratic().unwrap();
        let signs = self.table.options().su4_signs;
        let sgn = |s: i8, v: u8| if s < 0 { f.neg(v) } else { v };
        let tq = e.frobenius(t);
        match r {
            su4::A => self.mat_mul(&self.elementary(0, 1, t), &self.elementary(2, 3, tq)),
            su4::B => self.elementary(1, 2, t),
            su4::AB => self.mat_mul(
                &self.elementary(0, 2, sgn(signs.eps, t)),
                &self.elementary(1, 3, f.neg(sgn(signs.eps, tq))),
            ),
            su4::A2B => self.elementary(0, 3, sgn(signs.eps1, t)),
            _ => panic!("root index {r} out of range"),
        }
    }

    pub fn matrix(&self, x: &GroupElement) -> Mat4 {
        (0..self.table.rank()).fold(self.identity(), |acc, r| {
            let t = self.table.param(x, r);
            if t == 0 {
                acc
            } else {
                self.mat_mul(&acc, &self.root_matrix(r, t))
            }
        })
    }

    /// True when the collected product agrees with the matrix product.
    pub fn check_pair(&self, a: &GroupElement, b: &GroupElement) -> bool {
        let lhs = self.matrix(&self.table.mul(a, b));
        let rhs = self.mat_mul(&self.matrix(a), &self.matrix(b));
        lhs == rhs
    }
}
