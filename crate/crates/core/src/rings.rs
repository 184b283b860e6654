//! Sector K-rings and Chow rings, Euler classes, and the restriction and
//! pushforward maps between fixed loci.
//!
//! The K-ring of a fixed locus `[A^F - {0} / G]` is stored after extending
//! scalars to `Q(z_N)`, split into Fourier components indexed by the finite
//! part `h` of the group. With a torus the component at `h` is
//! `Q(z_N)[chi] / prod_{j in F} (chi^{m_j} - w_j(h)^{-1})`; without one it is
//! `Q(z_N)` exactly when `prod_{j in F} (1 - w_j(h)^{-1})` vanishes (always,
//! for a point).

use std::fmt;
use std::sync::{Arc, OnceLock};

use num_traits::{Signed, Zero};

use crate::algebra::display;
use crate::algebra::rational::to_i64;
use crate::algebra::{
    crt_idempotents, Cyclotomic, CyclotomicField, LocalSummand, Poly, QuotientElement, QuotientRing,
    TruncatedSeries,
};
use crate::error::{Error, Result};
use crate::stack::{Character, CoordSet, GroupElement, Stack, VirtualBundle};

#[derive(Debug)]
pub struct KComponent {
    label: Vec<u32>,
    ring: Arc<QuotientRing>,
    supports: OnceLock<std::result::Result<Vec<LocalSummand>, Error>>,
}

impl KComponent {
    pub fn label(&self) -> &[u32] {
        &self.label
    }

    pub fn ring(&self) -> &Arc<QuotientRing> {
        &self.ring
    }

    /// CRT decomposition of this component over the roots of its modulus.
    pub fn local_summands(&self) -> Result<&[LocalSummand]> {
        match self.supports.get_or_init(|| crt_idempotents(&self.ring)) {
            Ok(v) => Ok(v),
            Err(e) => Err(e.clone()),
        }
    }
}

/// K-ring of one fixed locus.
#[derive(Debug)]
pub struct KRing {
    fixed: CoordSet,
    torus: bool,
    finite_orders: Vec<u32>,
    field: Arc<CyclotomicField>,
    components: Vec<KComponent>,
    presentation: String,
}

impl KRing {
    pub fn fixed(&self) -> CoordSet {
        self.fixed
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn components(&self) -> &[KComponent] {
        &self.components
    }

    pub fn component_index(&self, label: &[u32]) -> Option<usize> {
        self.components.iter().position(|c| c.label == label)
    }

    pub fn dimension(&self) -> usize {
        self.components.iter().map(|c| c.ring.dimension()).sum()
    }

    /// True when every Fourier component is present and there is no torus,
    /// i.e. the ring is the complexified representation ring of the group.
    pub fn is_group_algebra(&self) -> bool {
        let size: u32 = self.finite_orders.iter().product();
        !self.torus && self.components.len() == size as usize
    }

    pub fn same_ring(&self, other: &KRing) -> bool {
        std::ptr::eq(self, other)
            || (self.fixed == other.fixed
                && self.components.len() == other.components.len()
                && self
                    .components
                    .iter()
                    .zip(&other.components)
                    .all(|(a, b)| a.label == b.label && a.ring.same_ring(&b.ring)))
    }

    pub fn zero(self: &Arc<Self>) -> KClass {
        KClass {
            ring: Arc::clone(self),
            parts: self.components.iter().map(|c| c.ring.zero()).collect(),
        }
    }

    pub fn one(self: &Arc<Self>) -> KClass {
        KClass {
            ring: Arc::clone(self),
            parts: self.components.iter().map(|c| c.ring.one()).collect(),
        }
    }

    /// `chi^i` supported on a single component.
    pub fn basis(self: &Arc<Self>) -> Vec<KClass> {
        let mut out = Vec::new();
        for (ci, comp) in self.components.iter().enumerate() {
            for b in comp.ring.basis() {
                let mut x = self.zero();
                x.parts[ci] = b;
                out.push(x);
            }
        }
        out
    }

    /// Human-readable presentation, e.g. `Q(z6)[chi]/<(chi - 1)(chi^3 - 1)^2>`
    /// or `Q(z4)[x1,chi]/<x1^2 - 1, (x1*chi - 1)(chi^2 - 1)>`.
    pub fn presentation(&self) -> String {
        self.presentation.clone()
    }
}

pub(crate) fn label_text(label: &[u32]) -> String {
    let v: Vec<String> = label.iter().map(u32::to_string).collect();
    format!("({})", v.join(","))
}

/// An element of a sector K-ring, one quotient element per component.
#[derive(Clone, Debug)]
pub struct KClass {
    ring: Arc<KRing>,
    parts: Vec<QuotientElement>,
}

impl PartialEq for KClass {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_ring(&other.ring) && self.parts == other.parts
    }
}

impl KClass {
    pub fn ring(&self) -> &Arc<KRing> {
        &self.ring
    }

    pub fn parts(&self) -> &[QuotientElement] {
        &self.parts
    }

    pub fn from_parts(ring: &Arc<KRing>, parts: Vec<QuotientElement>) -> Result<Self> {
        if parts.len() != ring.components.len()
            || parts.iter().zip(&ring.components).any(|(p, c)| !p.ring().same_ring(&c.ring))
        {
            return Err(Error::RingMismatch);
        }
        Ok(KClass {
            ring: Arc::clone(ring),
            parts,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(QuotientElement::is_zero)
    }

    fn zip(&self, other: &Self, f: impl Fn(&QuotientElement, &QuotientElement) -> Result<QuotientElement>) -> Result<Self> {
        if !self.ring.same_ring(&other.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(KClass {
            ring: Arc::clone(&self.ring),
            parts: self.parts.iter().zip(&other.parts).map(|(a, b)| f(a, b)).collect::<Result<_>>()?,
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip(other, QuotientElement::add)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip(other, QuotientElement::sub)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.zip(other, QuotientElement::mul)
    }

    pub fn neg(&self) -> Self {
        KClass {
            ring: Arc::clone(&self.ring),
            parts: self.parts.iter().map(QuotientElement::neg).collect(),
        }
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        KClass {
            ring: Arc::clone(&self.ring),
            parts: self.parts.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// Inverts the Fourier transform over the finite labels and prints the
    /// class as a polynomial in the characters `x_i` and `chi`. Absent
    /// components contribute zero.
    fn character_polynomial(&self) -> String {
        let orders = &self.ring.finite_orders;
        let size: u32 = orders.iter().product();
        let field = self.ring.field();
        let n = field.conductor() as i64;
        let scale = field.rational(crate::algebra::Rational::new(1.into(), (size as i64).into()));
        let degree = self.parts.iter().filter_map(|p| p.rep().degree()).max().unwrap_or(0);
        let mut labels = vec![Vec::new()];
        for &ni in orders {
            labels = labels
                .into_iter()
                .flat_map(|l: Vec<u32>| {
                    (0..ni).map(move |a| {
                        let mut l = l.clone();
                        l.push(a);
                        l
                    })
                })
                .collect();
        }
        let mut terms = Vec::new();
        for k in 0..=degree {
            for b in &labels {
                let mut coeff = field.zero();
                for (comp, part) in self.ring.components.iter().zip(&self.parts) {
                    let Some(value) = part.rep().coeff(k) else { continue };
                    // b(h)^{-1} = exp(-2 pi i sum b_i a_i / n_i)
                    let e: i64 = b
                        .iter()
                        .zip(&comp.label)
                        .zip(orders)
                        .map(|((bi, ai), ni)| (*bi as i64 * *ai as i64) * (n / *ni as i64))
                        .sum();
                    coeff = &coeff + &(value * &field.root_of_unity(-e));
                }
                let coeff = &coeff * &scale;
                let mut mono: Vec<String> = b
                    .iter()
                    .enumerate()
                    .filter(|(_, e)| **e > 0)
                    .map(|(i, e)| display::monomial(&format!("x{}", i + 1), *e as usize))
                    .collect();
                if k > 0 {
                    mono.push(display::monomial("chi", k));
                }
                if let Some(t) = coeff.term(mono.join("*")) {
                    terms.push(t);
                }
            }
        }
        display::join(terms)
    }

    /// Concatenated coefficient vectors of all components.
    pub fn coordinates(&self) -> Vec<Cyclotomic> {
        self.parts.iter().flat_map(QuotientElement::coordinates).collect()
    }
}

impl fmt::Display for KClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.len() == 1 && self.ring.components[0].label.is_empty() {
            return write!(f, "{}", self.parts[0]);
        }
        if self.is_zero() {
            return f.write_str("0");
        }
        f.write_str(&self.character_polynomial())
    }
}

impl Stack {
    /// Value of the finite part of `w` at the finite label `h`.
    pub fn character_value(&self, w: &Character, label: &[u32]) -> Cyclotomic {
        let g = GroupElement::new(
            self.group(),
            label.iter().map(|&a| a as i64).collect(),
            Zero::zero(),
        );
        self.field()
            .exp_two_pi_i(&self.angle(&g, &Character::new(self.group(), w.exponents().to_vec(), 0)))
            .expect("conductor covers the finite orders")
    }

    /// K-ring of `[A^F - {0} / G]` (of the point when the space is a point).
    pub fn k_ring(&self, fixed: CoordSet) -> Arc<KRing> {
        if let Some(r) = self.rings.read().expect("ring cache poisoned").get(&fixed) {
            return Arc::clone(r);
        }
        let ring = Arc::new(self.build_k_ring(fixed));
        let mut cache = self.rings.write().expect("ring cache poisoned");
        Arc::clone(cache.entry(fixed).or_insert(ring))
    }

    fn build_k_ring(&self, fixed: CoordSet) -> KRing {
        let field = self.field();
        let torus = self.group().has_torus();
        let mut components = Vec::new();
        if self.locus_nonempty(&fixed) {
            for label in self.group().finite_elements() {
                let factors: Vec<(i64, Cyclotomic)> = fixed
                    .iter()
                    .map(|j| {
                        let w = self.weight(j);
                        let c = self.character_value(w, &label).inverse().expect("root of unity");
                        (w.torus_weight(), c)
                    })
                    .collect();
                let modulus = if torus {
                    factors.iter().fold(Poly::constant(field.one()), |acc, (m, c)| {
                        let f = &Poly::monomial(field.one(), *m as usize) - &Poly::constant(c.clone());
                        &acc * &f
                    })
                } else {
                    let present = self.action().space == crate::stack::Space::Point
                        || factors.iter().any(|(_, c)| c.is_one());
                    if !present {
                        continue;
                    }
                    Poly::linear(&field.one())
                };
                components.push(KComponent {
                    label,
                    ring: QuotientRing::new(field, modulus).expect("nonconstant modulus"),
                    supports: OnceLock::new(),
                });
            }
        }
        let presentation = if components.is_empty() {
            "0".to_string()
        } else {
            self.ring_presentation(fixed)
        };
        KRing {
            fixed,
            torus,
            finite_orders: self.group().finite_orders.clone(),
            field: Arc::clone(field),
            components,
            presentation,
        }
    }

    /// `Q(zN)[x1,..,chi]/<x_i^n_i - 1, prod_{j in F} (w_j - 1)>`.
    fn ring_presentation(&self, fixed: CoordSet) -> String {
        let orders = &self.group().finite_orders;
        let mut vars: Vec<String> = (1..=orders.len()).map(|i| format!("x{i}")).collect();
        if self.group().has_torus() {
            vars.push("chi".into());
        }
        let mut relations: Vec<String> = orders
            .iter()
            .enumerate()
            .map(|(i, n)| format!("x{}^{n} - 1", i + 1))
            .collect();
        if self.action().space == crate::stack::Space::AffineMinusOrigin {
            let mut groups: Vec<(&Character, usize)> = Vec::new();
            for j in fixed.iter() {
                let w = self.weight(j);
                match groups.iter_mut().find(|(v, _)| *v == w) {
                    Some(g) => g.1 += 1,
                    None => groups.push((w, 1)),
                }
            }
            // a trivial weight makes the Koszul relation vanish
            if !groups.is_empty() && groups.iter().all(|(w, _)| !w.is_trivial()) {
                relations.push(
                    groups
                        .iter()
                        .map(|(w, k)| if *k == 1 { format!("({w} - 1)") } else { format!("({w} - 1)^{k}") })
                        .collect(),
                );
            }
        }
        let base = format!("Q(z{})", self.field().conductor());
        if vars.is_empty() {
            base
        } else if relations.is_empty() {
            format!("{base}[{}]", vars.join(","))
        } else {
            format!("{base}[{}]/<{}>", vars.join(","), relations.join(", "))
        }
    }

    /// K-ring of the sector with the given index.
    pub fn sector_k_ring(&self, i: usize) -> Arc<KRing> {
        self.k_ring(self.sector(i).fixed)
    }

    /// The class of a single character in `ring`.
    pub fn character_class(&self, w: &Character, ring: &Arc<KRing>) -> KClass {
        let parts = ring
            .components
            .iter()
            .map(|c| {
                let chi = c.ring.chi_power(w.torus_weight()).expect("chi is a unit");
                chi.scale(&self.character_value(w, &c.label))
            })
            .collect();
        KClass {
            ring: Arc::clone(ring),
            parts,
        }
    }

    /// The class `sum c_w [w]` of a virtual bundle in `ring`.
    pub fn bundle_class(&self, v: &VirtualBundle, ring: &Arc<KRing>) -> KClass {
        let field = self.field();
        v.terms().fold(ring.zero(), |acc, (w, c)| {
            let term = self.character_class(w, ring).scale(&field.rational(c.clone()));
            acc.add(&term).expect("same ring")
        })
    }

    /// K-theoretic Euler class `prod (1 - [w^*])^{c_w}`; needs non-negative
    /// integer coefficients.
    pub fn euler_k(&self, v: &VirtualBundle, ring: &Arc<KRing>) -> Result<KClass> {
        let mut out = ring.one();
        for (w, c) in v.terms() {
            let k = bundle_multiplicity(w, c)?;
            let one = ring.one();
            let dual = self.character_class(&w.dual(self.group()), ring);
            let factor = one.sub(&dual)?;
            for _ in 0..k {
                out = out.mul(&factor)?;
            }
        }
        Ok(out)
    }

    /// Chow Euler class `prod (m_w t)^{c_w}` truncated at `order`.
    pub fn euler_chow(&self, v: &VirtualBundle, order: usize) -> Result<TruncatedSeries> {
        let field = self.field();
        let mut out = TruncatedSeries::one(field, order);
        for (w, c) in v.terms() {
            let k = bundle_multiplicity(w, c)?;
            let factor = TruncatedSeries::monomial(field.integer(w.torus_weight()), 1, order);
            for _ in 0..k {
                out = out.mul(&factor);
            }
        }
        Ok(out)
    }

    /// Pullback along the inclusion of a smaller fixed locus.
    pub fn restrict(&self, x: &KClass, target: &Arc<KRing>) -> Result<KClass> {
        if !target.fixed.is_subset(&x.ring.fixed) {
            return Err(Error::NotASubset {
                sub: target.fixed.to_string(),
                sup: x.ring.fixed.to_string(),
            });
        }
        let parts = target
            .components
            .iter()
            .map(|c| {
                let src = x.ring.component_index(&c.label).ok_or(Error::RingMismatch)?;
                Ok(x.parts[src].reduce_into(&c.ring))
            })
            .collect::<Result<_>>()?;
        Ok(KClass {
            ring: Arc::clone(target),
            parts,
        })
    }

    /// Pushforward along the inclusion into a larger fixed locus:
    /// multiplication by the Euler class of the extra coordinates.
    pub fn pushforward(&self, x: &KClass, target: &Arc<KRing>) -> Result<KClass> {
        let source = x.ring.fixed;
        if !source.is_subset(&target.fixed) {
            return Err(Error::NotASubset {
                sub: source.to_string(),
                sup: target.fixed.to_string(),
            });
        }
        let normal = self.coordinate_bundle(&target.fixed.minus(&source));
        let euler = self.euler_k(&normal, target)?;
        let parts = target
            .components
            .iter()
            .zip(&euler.parts)
            .map(|(c, e)| match x.ring.component_index(&c.label) {
                Some(src) => x.parts[src].reduce_into(&c.ring).mul(e),
                None => Ok(c.ring.zero()),
            })
            .collect::<Result<_>>()?;
        Ok(KClass {
            ring: Arc::clone(target),
            parts,
        })
    }

    /// Chow restriction from `A^F - {0}` to `A^{F'} - {0}`.
    pub fn chow_restrict(&self, x: &TruncatedSeries, from: &CoordSet, to: &CoordSet) -> Result<TruncatedSeries> {
        if !to.is_subset(from) {
            return Err(Error::NotASubset {
                sub: to.to_string(),
                sup: from.to_string(),
            });
        }
        Ok(x.with_order(self.chow_order(to)))
    }

    /// Chow pushforward from `A^{F'} - {0}` to `A^F - {0}`.
    pub fn chow_pushforward(&self, x: &TruncatedSeries, from: &CoordSet, to: &CoordSet) -> Result<TruncatedSeries> {
        if !from.is_subset(to) {
            return Err(Error::NotASubset {
                sub: from.to_string(),
                sup: to.to_string(),
            });
        }
        let order = self.chow_order(to);
        let normal = self.coordinate_bundle(&to.minus(from));
        Ok(x.with_order(order).mul(&self.euler_chow(&normal, order)?))
    }

    pub fn k_zero(&self) -> InertiaKClass {
        InertiaKClass {
            stack_id: self.id(),
            parts: (0..self.sectors().len()).map(|i| self.sector_k_ring(i).zero()).collect(),
        }
    }

    /// The unit class of one sector.
    pub fn k_fundamental(&self, i: usize) -> InertiaKClass {
        let mut x = self.k_zero();
        x.parts[i] = self.sector_k_ring(i).one();
        x
    }

    /// Component-wise monomial basis of the whole inertia K-ring.
    pub fn k_basis(&self) -> Vec<InertiaKClass> {
        let mut out = Vec::new();
        for i in 0..self.sectors().len() {
            for b in self.sector_k_ring(i).basis() {
                let mut x = self.k_zero();
                x.parts[i] = b;
                out.push(x);
            }
        }
        out
    }

    pub fn chow_zero(&self) -> InertiaChowClass {
        InertiaChowClass {
            stack_id: self.id(),
            parts: self
                .sectors()
                .iter()
                .map(|s| TruncatedSeries::zero(self.field(), self.chow_order(&s.fixed)))
                .collect(),
        }
    }

    pub fn chow_fundamental(&self, i: usize) -> InertiaChowClass {
        let mut x = self.chow_zero();
        x.parts[i] = TruncatedSeries::one(self.field(), x.parts[i].order());
        x
    }

    /// `t^k` on each sector.
    pub fn chow_basis(&self) -> Vec<InertiaChowClass> {
        let mut out = Vec::new();
        for i in 0..self.sectors().len() {
            let order = self.chow_order(&self.sector(i).fixed);
            for k in 0..order {
                let mut x = self.chow_zero();
                x.parts[i] = TruncatedSeries::monomial(self.field().one(), k, order);
                out.push(x);
            }
        }
        out
    }

    /// Assembles a K class from one class per sector.
    pub fn k_class(&self, parts: Vec<KClass>) -> Result<InertiaKClass> {
        if parts.len() != self.sectors().len()
            || parts.iter().enumerate().any(|(i, p)| !p.ring.same_ring(&self.sector_k_ring(i)))
        {
            return Err(Error::StackMismatch);
        }
        Ok(InertiaKClass {
            stack_id: self.id(),
            parts,
        })
    }

    pub fn chow_class(&self, parts: Vec<TruncatedSeries>) -> Result<InertiaChowClass> {
        if parts.len() != self.sectors().len()
            || parts
                .iter()
                .zip(self.sectors())
                .any(|(p, s)| p.order() != self.chow_order(&s.fixed) || p.field().conductor() != self.field().conductor())
        {
            return Err(Error::StackMismatch);
        }
        Ok(InertiaChowClass {
            stack_id: self.id(),
            parts,
        })
    }
}

fn bundle_multiplicity(w: &Character, c: &crate::algebra::Rational) -> Result<u32> {
    if c.is_negative() {
        return Err(Error::NegativeMultiplicity {
            character: w.to_string(),
            multiplicity: c.to_string(),
        });
    }
    to_i64(c).map(|k| k as u32).ok_or_else(|| Error::NonIntegralMultiplicity {
        g1: "-".into(),
        g2: "-".into(),
        character: w.to_string(),
        multiplicity: c.to_string(),
    })
}

/// A class on the inertia stack: one sector K-ring element per sector.
#[derive(Clone, Debug, PartialEq)]
pub struct InertiaKClass {
    stack_id: u64,
    parts: Vec<KClass>,
}

impl InertiaKClass {
    pub fn stack_id(&self) -> u64 {
        self.stack_id
    }

    pub fn parts(&self) -> &[KClass] {
        &self.parts
    }

    pub fn part(&self, i: usize) -> &KClass {
        &self.parts[i]
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(KClass::is_zero)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.stack_id != other.stack_id {
            return Err(Error::StackMismatch);
        }
        Ok(InertiaKClass {
            stack_id: self.stack_id,
            parts: self.parts.iter().zip(&other.parts).map(|(a, b)| a.add(b)).collect::<Result<_>>()?,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        InertiaKClass {
            stack_id: self.stack_id,
            parts: self.parts.iter().map(KClass::neg).collect(),
        }
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        InertiaKClass {
            stack_id: self.stack_id,
            parts: self.parts.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub(crate) fn set_part(&mut self, i: usize, x: KClass) {
        self.parts[i] = x;
    }
}

impl fmt::Display for InertiaKClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self
            .parts
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.is_zero())
            .map(|(i, p)| format!("[{i}] {p}"))
            .collect();
        if items.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&items.join("; "))
        }
    }
}

/// A class in the inertia Chow ring: one truncated series per sector.
#[derive(Clone, Debug, PartialEq)]
pub struct InertiaChowClass {
    stack_id: u64,
    parts: Vec<TruncatedSeries>,
}

impl InertiaChowClass {
    pub fn stack_id(&self) -> u64 {
        self.stack_id
    }

    pub fn parts(&self) -> &[TruncatedSeries] {
        &self.parts
    }

    pub fn part(&self, i: usize) -> &TruncatedSeries {
        &self.parts[i]
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(TruncatedSeries::is_zero)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.stack_id != other.stack_id {
            return Err(Error::StackMismatch);
        }
        Ok(InertiaChowClass {
            stack_id: self.stack_id,
            parts: self.parts.iter().zip(&other.parts).map(|(a, b)| a.add(b)).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        InertiaChowClass {
            stack_id: self.stack_id,
            parts: self.parts.iter().map(TruncatedSeries::neg).collect(),
        }
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        InertiaChowClass {
            stack_id: self.stack_id,
            parts: self.parts.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub(crate) fn set_part(&mut self, i: usize, x: TruncatedSeries) {
        self.parts[i] = x;
    }
}

impl fmt::Display for InertiaChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self
            .parts
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.is_zero())
            .map(|(i, p)| format!("[{i}] {p}"))
            .collect();
        if items.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&items.join("; "))
        }
    }
}
