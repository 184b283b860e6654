//! Decomposition of sector K-rings into local summands at support elements
//! `h`, and the localized orbifold product assembled from orbifold products
//! of the fixed substacks `[X^h / G]`.

use std::fmt;
use std::sync::Arc;

use crate::algebra::linalg::solve_unique;
use crate::algebra::rational::{int, rat};
use crate::algebra::Rational;
use crate::error::{Error, Result};
use crate::rings::{InertiaKClass, KClass, KRing};
use crate::stack::{CoordSet, GroupElement, Stack, VirtualBundle};

/// One local summand of a sector ring.
#[derive(Clone, Debug)]
pub struct Support {
    pub element: GroupElement,
    pub component: usize,
    pub multiplicity: usize,
    pub idempotent: KClass,
}

/// Support elements of `ring` with their orthogonal idempotents.
pub fn supports(stack: &Stack, ring: &Arc<KRing>) -> Result<Vec<Support>> {
    let n = stack.field().conductor() as i64;
    let mut out = Vec::new();
    for (ci, comp) in ring.components().iter().enumerate() {
        for s in comp.local_summands()? {
            let mut idempotent = ring.zero();
            let mut parts = idempotent.parts().to_vec();
            parts[ci] = s.idempotent.clone();
            idempotent = KClass::from_parts(ring, parts)?;
            out.push(Support {
                element: GroupElement::new(
                    stack.group(),
                    comp.label().iter().map(|&a| a as i64).collect(),
                    rat(s.root_exponent as i64, n),
                ),
                component: ci,
                multiplicity: s.multiplicity,
                idempotent,
            });
        }
    }
    out.sort_by(|a, b| a.element.cmp(&b.element));
    Ok(out)
}

/// Supports of every sector ring, aligned with the sectors.
pub fn support_decomposition(stack: &Stack) -> Result<Vec<Vec<Support>>> {
    (0..stack.sectors().len())
        .map(|i| supports(stack, &stack.sector_k_ring(i)))
        .collect()
}

fn support_at(stack: &Stack, ring: &Arc<KRing>, h: &GroupElement) -> Result<Support> {
    supports(stack, ring)?
        .into_iter()
        .find(|s| &s.element == h)
        .ok_or_else(|| Error::SingularRestriction(format!("{h} is not a support of the locus {}", ring.fixed())))
}

/// A class split into its local parts `x_g * e_h`.
#[derive(Clone, Debug, PartialEq)]
pub struct LocalizedKClass {
    stack_id: u64,
    parts: Vec<Vec<(GroupElement, KClass)>>,
}

impl LocalizedKClass {
    pub fn parts(&self) -> &[Vec<(GroupElement, KClass)>] {
        &self.parts
    }

    /// Sums the local parts back into a class on the inertia stack.
    pub fn reassemble(&self, stack: &Stack) -> Result<InertiaKClass> {
        if self.stack_id != stack.id() {
            return Err(Error::StackMismatch);
        }
        let parts = self
            .parts
            .iter()
            .enumerate()
            .map(|(i, locals)| {
                locals
                    .iter()
                    .try_fold(stack.sector_k_ring(i).zero(), |acc, (_, v)| acc.add(v))
            })
            .collect::<Result<Vec<_>>>()?;
        stack.k_class(parts)
    }
}

impl fmt::Display for LocalizedKClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut lines = Vec::new();
        for (i, locals) in self.parts.iter().enumerate() {
            for (h, v) in locals {
                if !v.is_zero() {
                    lines.push(format!("[{i}] at {h}: {v}"));
                }
            }
        }
        if lines.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&lines.join("\n"))
        }
    }
}

pub fn support_decompose(stack: &Stack, x: &InertiaKClass) -> Result<LocalizedKClass> {
    if x.stack_id() != stack.id() {
        return Err(Error::StackMismatch);
    }
    let parts = x
        .parts()
        .iter()
        .enumerate()
        .map(|(i, xi)| {
            supports(stack, &stack.sector_k_ring(i))?
                .into_iter()
                .map(|s| Ok((s.element, xi.mul(&s.idempotent)?)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LocalizedKClass {
        stack_id: stack.id(),
        parts,
    })
}

/// Obstruction of the orbifold product on `[X^h / G]`: coordinates moved by
/// `h` are dropped.
fn local_obstruction(stack: &Stack, g1: &GroupElement, g2: &GroupElement, fh: &CoordSet, pair: &CoordSet) -> VirtualBundle {
    let g3 = stack.inverse(&stack.multiply(g1, g2));
    VirtualBundle::from_terms(fh.iter().map(|j| {
        let w = stack.weight(j);
        let indicator = if pair.contains(j) { int(1) } else { int(0) };
        let m: Rational = stack.angle(g1, w) + stack.angle(g2, w) + stack.angle(&g3, w) - int(1) + indicator;
        (w.clone(), m)
    }))
}

/// Inverts the restriction from the `h`-summand of `target` onto the
/// `h`-summand of the smaller ring `local.ring()`.
fn lift_from_local(stack: &Stack, local: &KClass, target: &Arc<KRing>, h: &GroupElement) -> Result<KClass> {
    if local.ring().same_ring(target) {
        return Ok(local.clone());
    }
    let t = support_at(stack, target, h)?;
    let c = support_at(stack, local.ring(), h)?;
    let comp = &target.components()[t.component];
    let mut basis = Vec::with_capacity(t.multiplicity);
    let mut columns = Vec::with_capacity(t.multiplicity);
    for i in 0..t.multiplicity {
        let mut parts = target.zero().parts().to_vec();
        parts[t.component] = comp.ring().chi_power(i as i64)?.mul(&t.idempotent.parts()[t.component])?;
        let b = KClass::from_parts(target, parts)?;
        columns.push(stack.restrict(&b, local.ring())?.mul(&c.idempotent)?.coordinates());
        basis.push(b);
    }
    let coeffs = solve_unique(stack.field(), &columns, &local.coordinates())
        .ok_or_else(|| Error::SingularRestriction(h.to_string()))?;
    basis
        .iter()
        .zip(&coeffs)
        .try_fold(target.zero(), |acc, (b, a)| acc.add(&b.scale(a)))
}

/// The localized orbifold product.
pub fn localized_product(stack: &Stack, x: &InertiaKClass, y: &InertiaKClass) -> Result<InertiaKClass> {
    if x.stack_id() != stack.id() || y.stack_id() != stack.id() {
        return Err(Error::StackMismatch);
    }
    let mut out = stack.k_zero();
    for (i, xi) in x.parts().iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.parts().iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            let (s1, s2) = (stack.sector(i), stack.sector(j));
            let pair = s1.fixed.intersect(&s2.fixed);
            if !stack.locus_nonempty(&pair) {
                continue;
            }
            let g12 = stack.multiply(&s1.element, &s2.element);
            let k = stack.sector_index(&g12).expect("sector");
            let target = stack.sector_k_ring(k);
            for h in supports(stack, xi.ring())? {
                let fh = stack.fixed_set(&h.element);
                let p = pair.intersect(&fh);
                if !stack.locus_nonempty(&p) {
                    continue;
                }
                let local_part = |z: &KClass, f: CoordSet| -> Result<KClass> {
                    let ring = stack.k_ring(f.intersect(&fh));
                    let e = support_at(stack, &ring, &h.element)?.idempotent;
                    stack.restrict(z, &ring)?.mul(&e)
                };
                let xh = local_part(xi, s1.fixed)?;
                let yh = local_part(yj, s2.fixed)?;
                let ring_p = stack.k_ring(p);
                let r = local_obstruction(stack, &s1.element, &s2.element, &fh, &p);
                let term = stack
                    .restrict(&xh, &ring_p)?
                    .mul(&stack.restrict(&yh, &ring_p)?)?
                    .mul(&stack.euler_k(&r, &ring_p)?)?;
                let local_target = stack.k_ring(stack.sector(k).fixed.intersect(&fh));
                let e = support_at(stack, &local_target, &h.element)?.idempotent;
                let local = stack.pushforward(&term, &local_target)?.mul(&e)?;
                let lifted = lift_from_local(stack, &local, &target, &h.element)?;
                let sum = out.part(k).add(&lifted)?;
                out.set_part(k, sum);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Poly, Rational};
    use crate::chern::chern_character;
    use crate::stack::Character;

    fn p12() -> Stack {
        Stack::weighted_projective(&[1, 2]).unwrap()
    }

    fn chi_poly(st: &Stack, cs: &[Rational]) -> Poly {
        Poly::from_coeffs(cs.iter().map(|c| st.field().rational(c.clone())).collect())
    }

    #[test]
    fn decomposition_of_twisted_unit_on_p12() {
        let st = p12();
        let d = support_decompose(&st, &st.k_fundamental(1)).unwrap();
        let locals = &d.parts()[1];
        assert_eq!(locals.len(), 2);
        assert_eq!(locals[0].0.torus_angle(), &int(0));
        assert_eq!(locals[1].0.torus_angle(), &rat(1, 2));
        let half = rat(1, 2);
        assert_eq!(locals[0].1.parts()[0].rep(), &chi_poly(&st, &[half.clone(), half.clone()]));
        assert_eq!(locals[1].1.parts()[0].rep(), &chi_poly(&st, &[half.clone(), -half]));
        assert_eq!(d.reassemble(&st).unwrap(), st.k_fundamental(1));
    }

    #[test]
    fn idempotent_at_minus_one_on_identity_sector() {
        let st = p12();
        let s = supports(&st, &st.sector_k_ring(0)).unwrap();
        let minus = s.iter().find(|s| s.element.torus_angle() == &rat(1, 2)).unwrap();
        let q = rat(1, 4);
        assert_eq!(minus.idempotent.parts()[0].rep(), &chi_poly(&st, &[q.clone(), -rat(1, 2), q]));
    }

    #[test]
    fn b_mu2_identity_splits_over_both_elements() {
        let st = Stack::classifying(2).unwrap();
        let d = support_decompose(&st, &st.k_fundamental(0)).unwrap();
        let labels: Vec<&[u32]> = d.parts()[0].iter().map(|(h, _)| h.residues()).collect();
        assert_eq!(labels, vec![&[0u32][..], &[1u32][..]]);
        assert!(d.parts()[0].iter().all(|(_, v)| !v.is_zero()));
    }

    #[test]
    fn localized_square_of_twisted_unit_on_p12() {
        let st = p12();
        let x = st.k_fundamental(1);
        let z = localized_product(&st, &x, &x).unwrap();
        let ring = st.sector_k_ring(0);
        let quarter = st.field().rational(rat(1, 4));
        let one_plus = ring.components()[0].ring().element(chi_poly(&st, &[int(1), int(1)]));
        let one_minus = ring.components()[0].ring().element(chi_poly(&st, &[int(1), int(-1)]));
        let e = st
            .euler_k(&VirtualBundle::character(Character::torus(st.group(), 1)), &ring)
            .unwrap();
        let expected = one_plus
            .pow(2)
            .mul(&e.parts()[0])
            .unwrap()
            .add(&one_minus.pow(2))
            .unwrap()
            .scale(&quarter);
        assert_eq!(z.part(0).parts()[0], expected);
        assert!(z.part(1).is_zero());
        let ch = chern_character(&st, z.part(0));
        assert_eq!(ch, crate::algebra::TruncatedSeries::monomial(st.field().one(), 1, 2));
    }

    #[test]
    fn localized_unit_entries_on_p12() {
        let st = p12();
        let one = st.k_fundamental(0);
        let x = st.k_fundamental(1);
        assert_eq!(localized_product(&st, &one, &x).unwrap(), x);
        assert_eq!(localized_product(&st, &one, &one).unwrap(), one);
    }

    #[test]
    fn localized_square_on_b_mu2() {
        let st = Stack::classifying(2).unwrap();
        let x = st.k_fundamental(1);
        assert_eq!(localized_product(&st, &x, &x).unwrap(), st.k_fundamental(0));
    }
}
