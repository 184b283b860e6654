//! The cyclotomic field `Q(z_N)` in the power basis modulo the `N`-th
//! cyclotomic polynomial.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use super::display::{self, Term};
use super::rational::{denom_u64, fract, int, qpoly, Rational};
use crate::error::{Error, Result};

#[derive(Debug)]
pub struct CyclotomicField {
    conductor: u32,
    degree: usize,
    /// Monic `Phi_N`, lowest degree first.
    modulus: Vec<Rational>,
    /// `z^k` reduced, for `k` in `0..N`.
    powers: Vec<Vec<Rational>>,
}

fn cyclotomic_polynomial(n: u32) -> Vec<Rational> {
    // x^n - 1 = prod_{d | n} Phi_d
    let mut p = vec![Rational::zero(); n as usize + 1];
    p[0] = int(-1);
    p[n as usize] = int(1);
    for d in 1..n {
        if n % d == 0 {
            let (q, r) = qpoly::divrem(&p, &cyclotomic_polynomial(d));
            debug_assert!(r.is_empty());
            p = q;
        }
    }
    p
}

impl CyclotomicField {
    pub fn new(conductor: u32) -> Arc<Self> {
        assert!(conductor >= 1, "conductor must be positive");
        let modulus = cyclotomic_polynomial(conductor);
        let degree = modulus.len() - 1;
        let mut powers = Vec::with_capacity(conductor as usize);
        let mut cur = vec![Rational::one()];
        for _ in 0..conductor {
            let mut padded = cur.clone();
            padded.resize(degree, Rational::zero());
            powers.push(padded);
            cur = qpoly::divrem(&qpoly::mul(&cur, &[Rational::zero(), Rational::one()]), &modulus).1;
        }
        Arc::new(CyclotomicField {
            conductor,
            degree,
            modulus,
            powers,
        })
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// `phi(N)`.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn zero(self: &Arc<Self>) -> Cyclotomic {
        self.rational(Rational::zero())
    }

    pub fn one(self: &Arc<Self>) -> Cyclotomic {
        self.rational(Rational::one())
    }

    pub fn integer(self: &Arc<Self>, n: i64) -> Cyclotomic {
        self.rational(int(n))
    }

    pub fn rational(self: &Arc<Self>, q: Rational) -> Cyclotomic {
        let mut coeffs = vec![Rational::zero(); self.degree];
        coeffs[0] = q;
        Cyclotomic {
            field: Arc::clone(self),
            coeffs,
        }
    }

    /// `z^k` for any integer `k`.
    pub fn root_of_unity(self: &Arc<Self>, k: i64) -> Cyclotomic {
        let n = self.conductor as i64;
        Cyclotomic {
            field: Arc::clone(self),
            coeffs: self.powers[k.rem_euclid(n) as usize].clone(),
        }
    }

    /// `exp(2 pi i q)`, if it lies in the field.
    pub fn exp_two_pi_i(self: &Arc<Self>, q: &Rational) -> Option<Cyclotomic> {
        let f = fract(q);
        let d = denom_u64(&f);
        if self.conductor as u64 % d != 0 {
            return None;
        }
        let k = (f * int(self.conductor as i64)).to_integer();
        let k: i64 = k.try_into().ok()?;
        Some(self.root_of_unity(k))
    }

    /// `exp(i pi q)`, if it lies in the field.
    pub fn exp_pi_i(self: &Arc<Self>, q: &Rational) -> Option<Cyclotomic> {
        self.exp_two_pi_i(&(q / int(2)))
    }

    fn reduce(&self, mut p: Vec<Rational>) -> Vec<Rational> {
        let d = self.degree;
        while p.len() > d {
            let c = p.pop().unwrap();
            if c.is_zero() {
                continue;
            }
            let shift = p.len() - d;
            for k in 0..d {
                p[shift + k] -= &c * &self.modulus[k];
            }
        }
        p.resize(d, Rational::zero());
        p
    }
}

/// An element of `Q(z_N)`; arithmetic between different fields panics.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    field: Arc<CyclotomicField>,
    coeffs: Vec<Rational>,
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.field.conductor == other.field.conductor && self.coeffs == other.coeffs
    }
}

impl Eq for Cyclotomic {}

impl Cyclotomic {
    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    /// Coefficients in the power basis `1, z, ..., z^(phi(N)-1)`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn from_coeffs(field: &Arc<CyclotomicField>, coeffs: Vec<Rational>) -> Self {
        Cyclotomic {
            field: Arc::clone(field),
            coeffs: field.reduce(coeffs),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    fn check_field(&self, other: &Self) {
        assert_eq!(
            self.field.conductor, other.field.conductor,
            "mixing elements of different cyclotomic fields"
        );
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Cyclotomic {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroInversion);
        }
        if let Some(q) = self.as_rational() {
            return Ok(self.field.rational(q.recip()));
        }
        let mut a = self.coeffs.clone();
        qpoly::trim(&mut a);
        let inv = qpoly::inverse_mod(&a, &self.field.modulus).ok_or(Error::ZeroInversion)?;
        Ok(Cyclotomic::from_coeffs(&self.field, inv))
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut acc = self.field.one();
        let mut b = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &b;
            }
            b = &b * &b;
            k >>= 1;
        }
        Ok(acc)
    }

    pub(crate) fn term(&self, monomial: String) -> Option<Term> {
        if self.is_zero() {
            return None;
        }
        Some(match self.as_rational() {
            Some(q) => display::rational_term(q, monomial),
            None => display::opaque_term(self.to_string(), monomial),
        })
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| display::rational_term(c, display::monomial("z", k)))
            .collect();
        f.write_str(&display::join(terms))
    }
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.check_field(rhs);
        Cyclotomic {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.check_field(rhs);
        Cyclotomic {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.check_field(rhs);
        if let Some(q) = rhs.as_rational() {
            return self.scale(q);
        }
        if let Some(q) = self.as_rational() {
            return rhs.scale(q);
        }
        let d = self.field.degree;
        let mut prod = vec![Rational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        Cyclotomic {
            field: Arc::clone(&self.field),
            coeffs: self.field.reduce(prod),
        }
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}
