//! Inertial pairs `(R, S)`, the inertial products they define on K-theory
//! and Chow theory, graded degrees, the `Theta_V` twist and the axiom checks.

use std::fmt;
use std::sync::{Arc, OnceLock};

use num_traits::{One, Zero};

use crate::algebra::rational::{int, is_integer};
use crate::algebra::{Cyclotomic, Rational, TruncatedSeries};
use crate::error::{Error, Result};
use crate::rings::{InertiaChowClass, InertiaKClass, KClass, KRing};
use crate::stack::{CoordSet, GroupElement, Stack, VirtualBundle};

pub type ObstructionRule = Arc<dyn Fn(&Stack, &GroupElement, &GroupElement) -> VirtualBundle + Send + Sync>;
pub type SRule = Arc<dyn Fn(&Stack, &GroupElement) -> VirtualBundle + Send + Sync>;

/// A user-supplied pair of rules.
#[derive(Clone)]
pub struct CustomPair {
    pub name: String,
    pub obstruction: ObstructionRule,
    pub s_class: SRule,
}

impl fmt::Debug for CustomPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CustomPair").field("name", &self.name).finish_non_exhaustive()
    }
}

#[derive(Clone, Debug)]
pub enum InertialPairSpec {
    Orbifold,
    VPlus(VirtualBundle),
    VMinus(VirtualBundle),
    Virtual,
    Custom(CustomPair),
}

impl InertialPairSpec {
    pub fn name(&self) -> String {
        match self {
            InertialPairSpec::Orbifold => "orbifold".into(),
            InertialPairSpec::VPlus(v) => format!("vplus({v})"),
            InertialPairSpec::VMinus(v) => format!("vminus({v})"),
            InertialPairSpec::Virtual => "virtual".into(),
            InertialPairSpec::Custom(c) => c.name.clone(),
        }
    }

    /// Rejects bundles with negative or fractional coefficients on
    /// nontrivial characters (trivial characters never contribute).
    pub fn validate(&self) -> Result<()> {
        if let InertialPairSpec::VPlus(v) | InertialPairSpec::VMinus(v) = self {
            for (w, c) in v.terms() {
                if w.is_trivial() {
                    continue;
                }
                if c < &Rational::zero() {
                    return Err(Error::NegativeMultiplicity {
                        character: w.to_string(),
                        multiplicity: c.to_string(),
                    });
                }
                if !is_integer(c) {
                    return Err(Error::Validation(vec![format!(
                        "bundle coefficient {c} of {w} is not an integer"
                    )]));
                }
            }
        }
        Ok(())
    }
}

fn pair_locus(stack: &Stack, g1: &GroupElement, g2: &GroupElement) -> Result<CoordSet> {
    let f12 = stack.fixed_set(g1).intersect(&stack.fixed_set(g2));
    if !stack.locus_nonempty(&f12) {
        return Err(Error::EmptyPairLocus(g1.to_string(), g2.to_string()));
    }
    Ok(f12)
}

fn check_unit_interval(g1: &GroupElement, g2: &GroupElement, w: &impl fmt::Display, m: &Rational) -> Result<()> {
    if m.is_zero() || m.is_one() {
        Ok(())
    } else {
        Err(Error::NonIntegralMultiplicity {
            g1: g1.to_string(),
            g2: g2.to_string(),
            character: w.to_string(),
            multiplicity: m.to_string(),
        })
    }
}

fn raw_lr_tangent(stack: &Stack, g1: &GroupElement, g2: &GroupElement) -> Vec<(usize, Rational)> {
    let g3 = stack.inverse(&stack.multiply(g1, g2));
    let f12 = stack.fixed_set(g1).intersect(&stack.fixed_set(g2));
    (0..stack.action().weights.len())
        .map(|j| {
            let w = stack.weight(j);
            let indicator = if f12.contains(j) { int(1) } else { int(0) };
            let m = stack.angle(g1, w) + stack.angle(g2, w) + stack.angle(&g3, w) - int(1) + indicator;
            (j, m)
        })
        .collect()
}

/// The twisted pullback of the tangent class to the pair locus.
pub fn lr_tangent(stack: &Stack, g1: &GroupElement, g2: &GroupElement) -> Result<VirtualBundle> {
    pair_locus(stack, g1, g2)?;
    let mut out = VirtualBundle::zero();
    for (j, m) in raw_lr_tangent(stack, g1, g2) {
        check_unit_interval(g1, g2, stack.weight(j), &m)?;
        out.add_term(stack.weight(j).clone(), m);
    }
    Ok(out)
}

fn raw_v_plus(stack: &Stack, v: &VirtualBundle, g1: &GroupElement, g2: &GroupElement) -> Vec<(VirtualBundle, Rational)> {
    let g12 = stack.multiply(g1, g2);
    v.terms()
        .map(|(w, c)| {
            let m = stack.angle(g1, w) + stack.angle(g2, w) - stack.angle(&g12, w);
            (VirtualBundle::from_terms([(w.clone(), c.clone())]), m)
        })
        .collect()
}

fn collect_checked(
    g1: &GroupElement,
    g2: &GroupElement,
    parts: Vec<(VirtualBundle, Rational)>,
) -> Result<VirtualBundle> {
    let mut out = VirtualBundle::zero();
    for (term, m) in parts {
        check_unit_interval(g1, g2, &term, &m)?;
        out = out.plus(&term.scale(&m));
    }
    Ok(out)
}

/// `sum_w c_w (alpha_w(g1) + alpha_w(g2) - alpha_w(g1 g2)) w`.
pub fn v_plus(stack: &Stack, v: &VirtualBundle, g1: &GroupElement, g2: &GroupElement) -> Result<VirtualBundle> {
    pair_locus(stack, g1, g2)?;
    collect_checked(g1, g2, raw_v_plus(stack, v, g1, g2))
}

/// `v_plus` evaluated at the inverses.
pub fn v_minus(stack: &Stack, v: &VirtualBundle, g1: &GroupElement, g2: &GroupElement) -> Result<VirtualBundle> {
    pair_locus(stack, g1, g2)?;
    let (h1, h2) = (stack.inverse(g1), stack.inverse(g2));
    collect_checked(g1, g2, raw_v_plus(stack, v, &h1, &h2))
}

/// Obstruction class without any integrality check.
pub fn raw_obstruction(stack: &Stack, spec: &InertialPairSpec, g1: &GroupElement, g2: &GroupElement) -> VirtualBundle {
    let lr = || {
        VirtualBundle::from_terms(
            raw_lr_tangent(stack, g1, g2)
                .into_iter()
                .map(|(j, m)| (stack.weight(j).clone(), m)),
        )
    };
    let extra = |v: &VirtualBundle, h1: &GroupElement, h2: &GroupElement| {
        raw_v_plus(stack, v, h1, h2)
            .into_iter()
            .fold(VirtualBundle::zero(), |acc, (t, m)| acc.plus(&t.scale(&m)))
    };
    let (i1, i2) = (stack.inverse(g1), stack.inverse(g2));
    match spec {
        InertialPairSpec::Orbifold => lr(),
        InertialPairSpec::VPlus(v) => lr().plus(&extra(v, g1, g2)),
        InertialPairSpec::VMinus(v) => lr().plus(&extra(v, &i1, &i2)),
        InertialPairSpec::Virtual => lr().plus(&extra(&stack.tangent(), &i1, &i2)),
        InertialPairSpec::Custom(c) => (c.obstruction)(stack, g1, g2),
    }
}

/// Obstruction class `R(g1, g2)`; non-negative and integral.
pub fn obstruction(stack: &Stack, spec: &InertialPairSpec, g1: &GroupElement, g2: &GroupElement) -> Result<VirtualBundle> {
    spec.validate()?;
    pair_locus(stack, g1, g2)?;
    let r = match spec {
        InertialPairSpec::Orbifold => lr_tangent(stack, g1, g2)?,
        InertialPairSpec::VPlus(v) => lr_tangent(stack, g1, g2)?.plus(&v_plus(stack, v, g1, g2)?),
        InertialPairSpec::VMinus(v) => lr_tangent(stack, g1, g2)?.plus(&v_minus(stack, v, g1, g2)?),
        InertialPairSpec::Virtual => lr_tangent(stack, g1, g2)?.plus(&v_minus(stack, &stack.tangent(), g1, g2)?),
        InertialPairSpec::Custom(c) => (c.obstruction)(stack, g1, g2),
    };
    for (w, m) in r.terms() {
        if !is_integer(m) || m < &Rational::zero() {
            return Err(Error::NonIntegralMultiplicity {
                g1: g1.to_string(),
                g2: g2.to_string(),
                character: w.to_string(),
                multiplicity: m.to_string(),
            });
        }
    }
    Ok(r)
}

/// The class `S(g)` of the pair.
pub fn s_class(stack: &Stack, spec: &InertialPairSpec, g: &GroupElement) -> VirtualBundle {
    let t = stack.tangent();
    match spec {
        InertialPairSpec::Orbifold => stack.log_trace(g, &t),
        InertialPairSpec::VPlus(v) => stack.log_trace(g, &t).plus(&stack.log_trace(g, v)),
        InertialPairSpec::VMinus(v) => stack.log_trace(g, &t).plus(&stack.log_trace(&stack.inverse(g), v)),
        InertialPairSpec::Virtual => stack.normal_bundle_class(g),
        InertialPairSpec::Custom(c) => (c.s_class)(stack, g),
    }
}

/// `[T|pair] + [T_pair-locus] - [T_sector 1] - [T_sector 2]`, computed
/// coordinate-wise.
pub fn virtual_tangent_direct(stack: &Stack, g1: &GroupElement, g2: &GroupElement) -> VirtualBundle {
    let f1 = stack.fixed_set(g1);
    let f2 = stack.fixed_set(g2);
    stack
        .coordinate_bundle(&stack.all_coordinates())
        .plus(&stack.coordinate_bundle(&f1.intersect(&f2)))
        .minus(&stack.coordinate_bundle(&f1))
        .minus(&stack.coordinate_bundle(&f2))
}

struct PairData {
    target: usize,
    locus: CoordSet,
    ring: Arc<KRing>,
    obstruction: VirtualBundle,
    euler_k: OnceLock<Result<KClass>>,
    euler_chow: OnceLock<Result<TruncatedSeries>>,
}

/// An inertial product with obstruction data precomputed for every pair
/// of sectors.
pub struct InertialProduct<'a> {
    stack: &'a Stack,
    spec: InertialPairSpec,
    pairs: Vec<Option<PairData>>,
}

impl<'a> InertialProduct<'a> {
    pub fn new(stack: &'a Stack, spec: InertialPairSpec) -> Result<Self> {
        spec.validate()?;
        let n = stack.sectors().len();
        let mut pairs = Vec::with_capacity(n * n);
        for s1 in stack.sectors() {
            for s2 in stack.sectors() {
                let locus = s1.fixed.intersect(&s2.fixed);
                if !stack.locus_nonempty(&locus) {
                    pairs.push(None);
                    continue;
                }
                let g12 = stack.multiply(&s1.element, &s2.element);
                let target = stack.sector_index(&g12).expect("product of sectors over a nonempty locus is a sector");
                pairs.push(Some(PairData {
                    target,
                    locus,
                    ring: stack.k_ring(locus),
                    obstruction: obstruction(stack, &spec, &s1.element, &s2.element)?,
                    euler_k: OnceLock::new(),
                    euler_chow: OnceLock::new(),
                }));
            }
        }
        Ok(InertialProduct { stack, spec, pairs })
    }

    pub fn stack(&self) -> &Stack {
        self.stack
    }

    pub fn spec(&self) -> &InertialPairSpec {
        &self.spec
    }

    /// Obstruction class of the sector pair, if its locus is nonempty.
    pub fn obstruction(&self, i: usize, j: usize) -> Option<&VirtualBundle> {
        self.pair(i, j).map(|p| &p.obstruction)
    }

    fn pair(&self, i: usize, j: usize) -> Option<&PairData> {
        self.pairs[i * self.stack.sectors().len() + j].as_ref()
    }

    fn euler_k(&self, p: &PairData) -> Result<KClass> {
        p.euler_k
            .get_or_init(|| self.stack.euler_k(&p.obstruction, &p.ring))
            .clone()
    }

    fn euler_chow(&self, p: &PairData) -> Result<TruncatedSeries> {
        p.euler_chow
            .get_or_init(|| self.stack.euler_chow(&p.obstruction, self.stack.chow_order(&p.locus)))
            .clone()
    }

    /// Contribution of one pair of sector classes, landing on the sector
    /// `g1 g2`.
    pub fn pair_product_k(&self, i: usize, j: usize, x: &KClass, y: &KClass) -> Result<Option<(usize, KClass)>> {
        let Some(p) = self.pair(i, j) else { return Ok(None) };
        let st = self.stack;
        let term = st
            .restrict(x, &p.ring)?
            .mul(&st.restrict(y, &p.ring)?)?
            .mul(&self.euler_k(p)?)?;
        Ok(Some((p.target, st.pushforward(&term, &st.sector_k_ring(p.target))?)))
    }

    pub fn pair_product_chow(
        &self,
        i: usize,
        j: usize,
        x: &TruncatedSeries,
        y: &TruncatedSeries,
    ) -> Result<Option<(usize, TruncatedSeries)>> {
        let Some(p) = self.pair(i, j) else { return Ok(None) };
        let st = self.stack;
        let fi = st.sector(i).fixed;
        let fj = st.sector(j).fixed;
        let term = st
            .chow_restrict(x, &fi, &p.locus)?
            .mul(&st.chow_restrict(y, &fj, &p.locus)?)
            .mul(&self.euler_chow(p)?);
        Ok(Some((p.target, st.chow_pushforward(&term, &p.locus, &st.sector(p.target).fixed)?)))
    }

    pub fn mul_k(&self, x: &InertiaKClass, y: &InertiaKClass) -> Result<InertiaKClass> {
        let st = self.stack;
        if x.stack_id() != st.id() || y.stack_id() != st.id() {
            return Err(Error::StackMismatch);
        }
        let mut out = st.k_zero();
        for (i, xi) in x.parts().iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.parts().iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                if let Some((k, term)) = self.pair_product_k(i, j, xi, yj)? {
                    let sum = out.part(k).add(&term)?;
                    out.set_part(k, sum);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_chow(&self, x: &InertiaChowClass, y: &InertiaChowClass) -> Result<InertiaChowClass> {
        let st = self.stack;
        if x.stack_id() != st.id() || y.stack_id() != st.id() {
            return Err(Error::StackMismatch);
        }
        let mut out = st.chow_zero();
        for (i, xi) in x.parts().iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.parts().iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                if let Some((k, term)) = self.pair_product_chow(i, j, xi, yj)? {
                    let sum = out.part(k).add(&term);
                    out.set_part(k, sum);
                }
            }
        }
        Ok(out)
    }
}

/// One-shot K-theoretic inertial product.
pub fn product(stack: &Stack, spec: &InertialPairSpec, x: &InertiaKClass, y: &InertiaKClass) -> Result<InertiaKClass> {
    InertialProduct::new(stack, spec.clone())?.mul_k(x, y)
}

/// One-shot Chow inertial product.
pub fn product_chow(
    stack: &Stack,
    spec: &InertialPairSpec,
    x: &InertiaChowClass,
    y: &InertiaChowClass,
) -> Result<InertiaChowClass> {
    InertialProduct::new(stack, spec.clone())?.mul_chow(x, y)
}

/// `k + rank S(g)` for a class `c t^k` on sector `i`.
pub fn graded_degree(stack: &Stack, spec: &InertialPairSpec, i: usize, x: &TruncatedSeries) -> Result<Rational> {
    let k = x.homogeneous_degree().ok_or(Error::NonHomogeneous)?;
    Ok(int(k as i64) + s_class(stack, spec, &stack.sector(i).element).rank())
}

/// `a(g) = rank L(g^{-1}) V`.
pub fn theta_exponent(stack: &Stack, v: &VirtualBundle, g: &GroupElement) -> Rational {
    stack.log_trace(&stack.inverse(g), v).rank()
}

/// `exp(i pi a(g))`.
pub fn theta_scalar(stack: &Stack, v: &VirtualBundle, g: &GroupElement) -> Result<Cyclotomic> {
    let a = theta_exponent(stack, v, g);
    stack
        .field()
        .exp_pi_i(&a)
        .ok_or_else(|| Error::ConductorTooSmall(a.to_string(), stack.field().conductor()))
}

/// Multiplies the part on each sector by its `Theta_V` scalar.
pub fn theta_automorphism(stack: &Stack, v: &VirtualBundle, x: &InertiaChowClass) -> Result<InertiaChowClass> {
    if x.stack_id() != stack.id() {
        return Err(Error::StackMismatch);
    }
    let parts = x
        .parts()
        .iter()
        .zip(stack.sectors())
        .map(|(p, s)| Ok(p.scale(&theta_scalar(stack, v, &s.element)?)))
        .collect::<Result<Vec<_>>>()?;
    stack.chow_class(parts)
}

/// Result of checking the inertial-pair axioms on all sector pairs and
/// triples. Failures are listed by sector index.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub pair: String,
    pub sectors: usize,
    pub pairs_checked: usize,
    pub triples_checked: usize,
    pub identity_failures: Vec<usize>,
    pub commutativity_failures: Vec<(usize, usize)>,
    pub integrality_failures: Vec<(usize, usize)>,
    pub cocycle_failures: Vec<(usize, usize, usize)>,
    pub chern_failures: Vec<(usize, usize)>,
    pub gorenstein: bool,
    pub strongly_gorenstein: bool,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.identity_failures.is_empty()
            && self.commutativity_failures.is_empty()
            && self.integrality_failures.is_empty()
            && self.cocycle_failures.is_empty()
            && self.chern_failures.is_empty()
    }
}

/// Verifies the axioms as identities of character multisets.
pub fn check_inertial_pair(stack: &Stack, spec: &InertialPairSpec) -> CheckReport {
    let sectors = stack.sectors();
    let n = sectors.len();
    let elem = |i: usize| &sectors[i].element;
    let fixed = |i: usize| sectors[i].fixed;
    let mut report = CheckReport {
        pair: spec.name(),
        sectors: n,
        gorenstein: true,
        strongly_gorenstein: true,
        ..Default::default()
    };
    let r: Vec<Option<VirtualBundle>> = (0..n * n)
        .map(|ij| {
            let (i, j) = (ij / n, ij % n);
            let locus = fixed(i).intersect(&fixed(j));
            stack
                .locus_nonempty(&locus)
                .then(|| raw_obstruction(stack, spec, elem(i), elem(j)))
        })
        .collect();
    let r_at = |i: usize, j: usize| r[i * n + j].as_ref();
    let index = |g: &GroupElement| stack.sector_index(g).expect("sector");
    let s: Vec<VirtualBundle> = (0..n).map(|i| s_class(stack, spec, elem(i))).collect();

    let id = stack.identity_index();
    for i in 0..n {
        let left = r_at(id, i).map_or(true, VirtualBundle::is_zero);
        let right = r_at(i, id).map_or(true, VirtualBundle::is_zero);
        if !(left && right) {
            report.identity_failures.push(i);
        }
        let rank = s[i].rank();
        report.gorenstein &= is_integer(&rank);
        report.strongly_gorenstein &= s[i].is_integral();
    }

    for i in 0..n {
        for j in 0..n {
            let Some(rij) = r_at(i, j) else { continue };
            report.pairs_checked += 1;
            if r_at(j, i) != Some(rij) {
                report.commutativity_failures.push((i, j));
            }
            if !(rij.is_integral() && rij.is_nonnegative()) {
                report.integrality_failures.push((i, j));
            }
            let k = index(&stack.multiply(elem(i), elem(j)));
            let f12 = fixed(i).intersect(&fixed(j));
            let excess = stack.coordinate_bundle(&fixed(k).minus(&f12));
            let expected = s[i].plus(&s[j]).minus(&s[k]).minus(&excess);
            if &expected != rij {
                report.chern_failures.push((i, j));
            }
        }
    }

    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                let f123 = fixed(i).intersect(&fixed(j)).intersect(&fixed(l));
                if !stack.locus_nonempty(&f123) {
                    continue;
                }
                report.triples_checked += 1;
                let i12 = index(&stack.multiply(elem(i), elem(j)));
                let i23 = index(&stack.multiply(elem(j), elem(l)));
                let f12 = fixed(i).intersect(&fixed(j));
                let f23 = fixed(j).intersect(&fixed(l));
                let e12 = stack
                    .coordinate_bundle(&fixed(i12).minus(&f12))
                    .minus(&stack.coordinate_bundle(&fixed(i12).intersect(&fixed(l)).minus(&f123)));
                let e23 = stack
                    .coordinate_bundle(&fixed(i23).minus(&f23))
                    .minus(&stack.coordinate_bundle(&fixed(i23).intersect(&fixed(i)).minus(&f123)));
                let (Some(a), Some(b), Some(c), Some(d)) = (r_at(i, j), r_at(i12, l), r_at(j, l), r_at(i, i23)) else {
                    report.cocycle_failures.push((i, j, l));
                    continue;
                };
                if a.plus(b).plus(&e12) != c.plus(d).plus(&e23) {
                    report.cocycle_failures.push((i, j, l));
                }
            }
        }
    }
    report
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = |ok: bool| if ok { "ok" } else { "FAILED" };
        writeln!(f, "pair: {}", self.pair)?;
        writeln!(f, "  sectors: {}, pairs: {}, triples: {}", self.sectors, self.pairs_checked, self.triples_checked)?;
        writeln!(f, "  identity: {} {:?}", status(self.identity_failures.is_empty()), self.identity_failures)?;
        writeln!(
            f,
            "  commutativity: {} {:?}",
            status(self.commutativity_failures.is_empty()),
            self.commutativity_failures
        )?;
        writeln!(
            f,
            "  integrality: {} {:?}",
            status(self.integrality_failures.is_empty()),
            self.integrality_failures
        )?;
        writeln!(f, "  cocycle: {} {:?}", status(self.cocycle_failures.is_empty()), self.cocycle_failures)?;
        writeln!(f, "  chern compatibility: {} {:?}", status(self.chern_failures.is_empty()), self.chern_failures)?;
        writeln!(f, "  gorenstein: {}", self.gorenstein)?;
        write!(f, "  strongly gorenstein: {}", self.strongly_gorenstein)
    }
}
