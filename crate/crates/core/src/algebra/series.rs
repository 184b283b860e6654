//! Truncated power series in a nilpotent variable `t`.

use std::fmt;
use std::sync::Arc;

use super::cyclotomic::{Cyclotomic, CyclotomicField};
use super::display;
use super::poly::Poly;
use super::rational::{int, Rational};
use crate::error::{Error, Result};

/// Coefficients of `t^0 .. t^(order-1)`; everything of order `>= order`
/// is discarded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Cyclotomic>,
}

impl TruncatedSeries {
    pub fn zero(field: &Arc<CyclotomicField>, order: usize) -> Self {
        assert!(order >= 1, "truncation order must be positive");
        TruncatedSeries {
            coeffs: vec![field.zero(); order],
        }
    }

    pub fn one(field: &Arc<CyclotomicField>, order: usize) -> Self {
        Self::constant(field.one(), order)
    }

    pub fn constant(c: Cyclotomic, order: usize) -> Self {
        let mut s = Self::zero(c.field(), order);
        s.coeffs[0] = c;
        s
    }

    /// `c * t^k`, or zero if `k >= order`.
    pub fn monomial(c: Cyclotomic, k: usize, order: usize) -> Self {
        let mut s = Self::zero(c.field(), order);
        if k < order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn from_coeffs(field: &Arc<CyclotomicField>, coeffs: Vec<Cyclotomic>, order: usize) -> Self {
        let mut s = Self::zero(field, order);
        for (i, c) in coeffs.into_iter().take(order).enumerate() {
            s.coeffs[i] = c;
        }
        s
    }

    pub fn from_rationals(field: &Arc<CyclotomicField>, coeffs: &[Rational], order: usize) -> Self {
        Self::from_coeffs(field, coeffs.iter().map(|q| field.rational(q.clone())).collect(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        self.coeffs[0].field()
    }

    pub fn coeffs(&self) -> &[Cyclotomic] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &Cyclotomic {
        &self.coeffs[k]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Cyclotomic::is_zero)
    }

    /// Pads with zeros or drops high terms.
    pub fn with_order(&self, order: usize) -> Self {
        let mut s = Self::zero(self.field(), order);
        for (i, c) in self.coeffs.iter().take(order).enumerate() {
            s.coeffs[i] = c.clone();
        }
        s
    }

    /// The exponent of the only nonzero term, if there is exactly one.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut nz = self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero());
        match (nz.next(), nz.next()) {
            (Some((k, _)), None) => Some(k),
            _ => None,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        TruncatedSeries {
            coeffs: (0..order).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Product truncated at the smaller of the two orders.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = Self::zero(self.field(), order);
        for (i, a) in self.coeffs.iter().enumerate().take(order) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order - i) {
                if !b.is_zero() {
                    out.coeffs[i + j] = &out.coeffs[i + j] + &(a * b);
                }
            }
        }
        out
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn scale_rational(&self, q: &Rational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a.scale(q)).collect(),
        }
    }

    /// Substitutes `t -> m t`.
    pub fn rescale_variable(&self, m: &Rational) -> Self {
        let mut factor = int(1);
        let mut coeffs = Vec::with_capacity(self.order());
        for c in &self.coeffs {
            coeffs.push(c.scale(&factor));
            factor *= m;
        }
        TruncatedSeries { coeffs }
    }

    pub fn inverse(&self) -> Result<Self> {
        let c0_inv = self.coeffs[0].inverse()?;
        let order = self.order();
        let mut out = Self::zero(self.field(), order);
        out.coeffs[0] = c0_inv.clone();
        for k in 1..order {
            let mut acc = self.field().zero();
            for j in 1..=k {
                acc = &acc + &(&self.coeffs[j] * &out.coeffs[k - j]);
            }
            out.coeffs[k] = -&(&acc * &c0_inv);
        }
        Ok(out)
    }

    /// `exp(s)` for `s` with zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonNilpotentArgument);
        }
        let order = self.order();
        let mut out = Self::one(self.field(), order);
        let mut power = Self::one(self.field(), order);
        for k in 1..order {
            power = power.mul(self).scale_rational(&Rational::new(1.into(), (k as i64).into()));
            out = out.add(&power);
        }
        Ok(out)
    }

    /// `log(s)` for `s` with constant term 1.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::NonUnitConstantTerm);
        }
        let order = self.order();
        let u = self.sub(&Self::one(self.field(), order));
        let mut out = Self::zero(self.field(), order);
        let mut power = Self::one(self.field(), order);
        for k in 1..order {
            power = power.mul(&u);
            let sign = if k % 2 == 1 { 1 } else { -1 };
            out = out.add(&power.scale_rational(&Rational::new(sign.into(), (k as i64).into())));
        }
        Ok(out)
    }

    /// `s^e = exp(e log s)` for rational `e`; needs constant term 1.
    pub fn pow(&self, e: &Rational) -> Result<Self> {
        self.log()?.scale_rational(e).exp()
    }

    /// `exp(m t)`.
    pub fn exponential(field: &Arc<CyclotomicField>, m: i64, order: usize) -> Self {
        let t = Self::monomial(field.integer(m), 1, order);
        t.exp().expect("nilpotent argument")
    }

    /// The Todd series `t / (1 - e^{-t})`.
    pub fn todd(field: &Arc<CyclotomicField>, order: usize) -> Self {
        // (1 - e^{-t}) / t = sum_k (-1)^k t^k / (k+1)!
        let mut coeffs = Vec::with_capacity(order);
        let mut fact = int(1);
        for k in 0..order {
            fact *= int(k as i64 + 1);
            let sign = if k % 2 == 0 { int(1) } else { int(-1) };
            coeffs.push(sign / &fact);
        }
        Self::from_rationals(field, &coeffs, order)
            .inverse()
            .expect("constant term is 1")
    }

    /// Evaluates a polynomial at this series by Horner's rule.
    pub fn compose(poly: &Poly, arg: &Self) -> Self {
        let mut acc = Self::zero(arg.field(), arg.order());
        for c in poly.coeffs().iter().rev() {
            acc = acc.mul(arg).add(&Self::constant(c.clone(), arg.order()));
        }
        acc
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .filter_map(|(k, c)| c.term(display::monomial("t", k)))
            .collect();
        f.write_str(&display::join(terms))
    }
}
