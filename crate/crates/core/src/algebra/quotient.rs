//! Quotient rings `Q(z_N)[chi] / <p(chi)>` with `p` monic.

use std::fmt;
use std::sync::Arc;

use super::cyclotomic::{Cyclotomic, CyclotomicField};
use super::poly::Poly;
use crate::error::{Error, Result};

#[derive(Debug)]
pub struct QuotientRing {
    field: Arc<CyclotomicField>,
    modulus: Poly,
    chi_inverse: Option<Poly>,
}

impl QuotientRing {
    /// Normalizes `modulus` to be monic. Fails on constant moduli.
    pub fn new(field: &Arc<CyclotomicField>, modulus: Poly) -> Result<Arc<Self>> {
        if modulus.degree().unwrap_or(0) == 0 {
            return Err(Error::ZeroInversion);
        }
        let modulus = modulus.scale(&modulus.leading().unwrap().inverse()?);
        // p(chi) = chi * q(chi) + p(0) gives chi^{-1} = -q / p(0) when p(0) != 0.
        let p0 = modulus.coeffs()[0].clone();
        let chi_inverse = if p0.is_zero() {
            None
        } else {
            let q = Poly::from_coeffs(modulus.coeffs()[1..].to_vec());
            Some(q.scale(&(-p0.inverse()?)).rem_monic(&modulus))
        };
        Ok(Arc::new(QuotientRing {
            field: Arc::clone(field),
            modulus,
            chi_inverse,
        }))
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    pub fn dimension(&self) -> usize {
        self.modulus.degree().unwrap()
    }

    pub fn same_ring(&self, other: &QuotientRing) -> bool {
        std::ptr::eq(self, other) || self.modulus == other.modulus
    }

    pub fn element(self: &Arc<Self>, p: Poly) -> QuotientElement {
        QuotientElement {
            rep: p.rem_monic(&self.modulus),
            ring: Arc::clone(self),
        }
    }

    pub fn zero(self: &Arc<Self>) -> QuotientElement {
        QuotientElement {
            ring: Arc::clone(self),
            rep: Poly::zero(),
        }
    }

    pub fn one(self: &Arc<Self>) -> QuotientElement {
        self.element(Poly::constant(self.field.one()))
    }

    pub fn scalar(self: &Arc<Self>, c: Cyclotomic) -> QuotientElement {
        self.element(Poly::constant(c))
    }

    /// `chi^e` for any integer `e`; negative powers need `p(0) != 0`.
    pub fn chi_power(self: &Arc<Self>, e: i64) -> Result<QuotientElement> {
        let base = if e >= 0 {
            Poly::monomial(self.field.one(), 1)
        } else {
            self.chi_inverse.clone().ok_or(Error::ZeroInversion)?
        };
        Ok(self.element(base).pow(e.unsigned_abs() as u32))
    }

    /// The monomial basis `1, chi, ..., chi^(d-1)`.
    pub fn basis(self: &Arc<Self>) -> Vec<QuotientElement> {
        (0..self.dimension())
            .map(|i| self.element(Poly::monomial(self.field.one(), i)))
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct QuotientElement {
    ring: Arc<QuotientRing>,
    rep: Poly,
}

impl PartialEq for QuotientElement {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_ring(&other.ring) && self.rep == other.rep
    }
}

impl QuotientElement {
    pub fn ring(&self) -> &Arc<QuotientRing> {
        &self.ring
    }

    /// The reduced representative, of degree below the modulus degree.
    pub fn rep(&self) -> &Poly {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.ring.same_ring(&other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(QuotientElement {
            ring: Arc::clone(&self.ring),
            rep: &self.rep + &other.rep,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(QuotientElement {
            ring: Arc::clone(&self.ring),
            rep: &self.rep - &other.rep,
        })
    }

    /// Product reduced by the (monic) modulus.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.ring.element(&self.rep * &other.rep))
    }

    pub fn neg(&self) -> Self {
        QuotientElement {
            ring: Arc::clone(&self.ring),
            rep: -&self.rep,
        }
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        QuotientElement {
            ring: Arc::clone(&self.ring),
            rep: self.rep.scale(c),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = self.ring.one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).unwrap();
            }
            base = base.mul(&base).unwrap();
            e >>= 1;
        }
        acc
    }

    /// Re-reduces the representative in another ring; a ring map whenever
    /// the target modulus divides this one.
    pub fn reduce_into(&self, target: &Arc<QuotientRing>) -> Self {
        target.element(self.rep.clone())
    }

    /// Coefficient vector of length `dimension()`.
    pub fn coordinates(&self) -> Vec<Cyclotomic> {
        let field = self.ring.field();
        (0..self.ring.dimension())
            .map(|i| self.rep.coeff(i).cloned().unwrap_or_else(|| field.zero()))
            .collect()
    }
}

impl fmt::Display for QuotientElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.rep.format("chi"))
    }
}
