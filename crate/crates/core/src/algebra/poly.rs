//! Dense univariate polynomials over a cyclotomic field.

use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::cyclotomic::{Cyclotomic, CyclotomicField};
use super::display;
use crate::error::{Error, Result};

/// Lowest degree first, no trailing zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<Cyclotomic>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn from_coeffs(mut coeffs: Vec<Cyclotomic>) -> Self {
        while coeffs.last().is_some_and(Cyclotomic::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: Cyclotomic) -> Self {
        Poly::from_coeffs(vec![c])
    }

    pub fn monomial(c: Cyclotomic, degree: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![c.field().zero(); degree + 1];
        coeffs[degree] = c;
        Poly { coeffs }
    }

    /// `x - root`.
    pub fn linear(root: &Cyclotomic) -> Self {
        Poly::from_coeffs(vec![-root, root.field().one()])
    }

    pub fn coeffs(&self) -> &[Cyclotomic] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Option<&Cyclotomic> {
        self.coeffs.get(i)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&Cyclotomic> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, mut e: u32, field: &Arc<CyclotomicField>) -> Self {
        let mut acc = Poly::constant(field.one());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn eval(&self, x: &Cyclotomic) -> Cyclotomic {
        let mut acc = x.field().zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Quotient and remainder; the divisor must be nonzero.
    pub fn divrem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        let lead = divisor.leading().ok_or(Error::ZeroInversion)?;
        let lead_inv = lead.inverse()?;
        let dlen = divisor.coeffs.len();
        let mut rem = self.coeffs.clone();
        if rem.len() < dlen {
            return Ok((Poly::zero(), self.clone()));
        }
        let field = Arc::clone(lead.field());
        let mut quot = vec![field.zero(); rem.len() - dlen + 1];
        while rem.len() >= dlen {
            let shift = rem.len() - dlen;
            let top = rem.last().unwrap();
            if !top.is_zero() {
                let c = top * &lead_inv;
                for (k, dk) in divisor.coeffs.iter().enumerate() {
                    rem[shift + k] = &rem[shift + k] - &(&c * dk);
                }
                quot[shift] = c;
            }
            rem.pop();
        }
        Ok((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    /// Remainder modulo a monic polynomial (no field inversions).
    pub fn rem_monic(&self, modulus: &Poly) -> Poly {
        let dlen = modulus.coeffs.len();
        debug_assert!(modulus.leading().is_some_and(Cyclotomic::is_one));
        if self.coeffs.len() < dlen {
            return self.clone();
        }
        let mut rem = self.coeffs.clone();
        while rem.len() >= dlen {
            let top = rem.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let shift = rem.len() + 1 - dlen;
            for k in 0..dlen - 1 {
                rem[shift + k] = &rem[shift + k] - &(&top * &modulus.coeffs[k]);
            }
        }
        Poly::from_coeffs(rem)
    }

    /// Inverse modulo `m` by the extended Euclidean algorithm.
    pub fn inverse_mod(&self, m: &Poly) -> Result<Poly> {
        let (mut r0, mut r1) = (m.clone(), self.divrem(m)?.1);
        let (mut t0, mut t1) = (Poly::zero(), match m.leading() {
            Some(l) => Poly::constant(l.field().one()),
            None => return Err(Error::ZeroInversion),
        });
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1)?;
            let t2 = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            t0 = std::mem::replace(&mut t1, t2);
        }
        if r0.degree() != Some(0) {
            return Err(Error::ZeroInversion);
        }
        let scale = r0.coeffs[0].inverse()?;
        Ok(t0.scale(&scale).divrem(m)?.1)
    }

    /// Synthetic division by `x - root`: quotient and the value at `root`.
    pub fn deflate(&self, root: &Cyclotomic) -> (Poly, Cyclotomic) {
        if self.coeffs.is_empty() {
            return (Poly::zero(), root.field().zero());
        }
        let n = self.coeffs.len();
        let mut quot = vec![root.field().zero(); n - 1];
        let mut carry = root.field().zero();
        for i in (0..n).rev() {
            let v = &self.coeffs[i] + &(&carry * root);
            if i == 0 {
                return (Poly::from_coeffs(quot), v);
            }
            quot[i - 1] = v.clone();
            carry = v;
        }
        unreachable!()
    }

    /// Canonical text form in the variable `var`.
    pub fn format(&self, var: &str) -> String {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .filter_map(|(k, c)| c.term(display::monomial(var, k)))
            .collect();
        display::join(terms)
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = long.coeffs.clone();
        for (i, c) in short.coeffs.iter().enumerate() {
            out[i] = &out[i] + c;
        }
        Poly::from_coeffs(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let field = self.coeffs[0].field();
        let mut out = vec![field.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        Poly::from_coeffs(out)
    }
}
