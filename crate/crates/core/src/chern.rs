//! Chern characters from sector K-rings to rational Chow rings, and the
//! inertial Chern character twisted by fractional Todd classes.

use crate::algebra::{Cyclotomic, TruncatedSeries};
use crate::error::{Error, Result};
use crate::products::{s_class, InertialPairSpec};
use crate::rings::{InertiaChowClass, InertiaKClass, KClass};
use crate::stack::{Stack, VirtualBundle};

/// `Ch`: the identity Fourier component evaluated at `chi = e^t`.
pub fn chern_character(stack: &Stack, x: &KClass) -> TruncatedSeries {
    let ring = x.ring();
    let order = stack.chow_order(&ring.fixed());
    let field = stack.field();
    let identity = vec![0; stack.group().finite_orders.len()];
    match ring.component_index(&identity) {
        Some(c) => TruncatedSeries::compose(x.parts()[c].rep(), &TruncatedSeries::exponential(field, 1, order)),
        None => TruncatedSeries::zero(field, order),
    }
}

/// `prod_w Td(m_w t)^{-s_w}` truncated at `order`.
pub fn todd_twist(stack: &Stack, s: &VirtualBundle, order: usize) -> Result<TruncatedSeries> {
    let field = stack.field();
    let mut out = TruncatedSeries::one(field, order);
    for (w, c) in s.terms() {
        let m = w.torus_weight();
        if m == 0 {
            continue;
        }
        let td = TruncatedSeries::todd(field, order).rescale_variable(&crate::algebra::rational::int(m));
        out = out.mul(&td.pow(&-c)?);
    }
    Ok(out)
}

/// Sector-wise `Ch(x_g) * Td(-S(g))`.
pub fn inertial_chern(stack: &Stack, spec: &InertialPairSpec, x: &InertiaKClass) -> Result<InertiaChowClass> {
    if x.stack_id() != stack.id() {
        return Err(Error::StackMismatch);
    }
    let parts = x
        .parts()
        .iter()
        .zip(stack.sectors())
        .map(|(p, sector)| {
            let ch = chern_character(stack, p);
            let twist = todd_twist(stack, &s_class(stack, spec, &sector.element), ch.order())?;
            Ok(ch.mul(&twist))
        })
        .collect::<Result<Vec<_>>>()?;
    stack.chow_class(parts)
}

/// The `S`-degree-zero part of the inertial Chern character, per sector:
/// the constant term on sectors where `S` has rank zero, zero elsewhere.
pub fn inertial_rank(stack: &Stack, spec: &InertialPairSpec, x: &InertiaKClass) -> Result<Vec<Cyclotomic>> {
    let ch = inertial_chern(stack, spec, x)?;
    Ok(ch
        .parts()
        .iter()
        .zip(stack.sectors())
        .map(|(p, sector)| {
            if s_class(stack, spec, &sector.element).rank() == num_traits::Zero::zero() {
                p.coeff(0).clone()
            } else {
                stack.field().zero()
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};
    use crate::stack::Character;

    #[test]
    fn chern_of_euler_class_on_p12() {
        let st = Stack::weighted_projective(&[1, 2]).unwrap();
        let ring = st.sector_k_ring(0);
        let e = st
            .euler_k(&VirtualBundle::character(Character::torus(st.group(), 1)), &ring)
            .unwrap();
        let ch = chern_character(&st, &e);
        assert_eq!(ch, TruncatedSeries::monomial(st.field().one(), 1, 2));
        assert_eq!(chern_character(&st, &ring.one()), TruncatedSeries::one(st.field(), 2));
    }

    #[test]
    fn chern_of_chi_cubed_on_twisted_sector() {
        let st = Stack::weighted_projective(&[1, 3, 3]).unwrap();
        let ring = st.sector_k_ring(1);
        let x = st.character_class(&Character::torus(st.group(), 3), &ring);
        let expected = TruncatedSeries::from_rationals(st.field(), &[int(1), int(3)], 2);
        assert_eq!(chern_character(&st, &x), expected);
    }

    #[test]
    fn orbifold_inertial_chern_of_twisted_unit() {
        let st = Stack::weighted_projective(&[1, 3, 3]).unwrap();
        let x = st.k_fundamental(1);
        let ch = inertial_chern(&st, &InertialPairSpec::Orbifold, &x).unwrap();
        // Td(t)^{-1/3} = 1 - t/6 + ...
        let expected = TruncatedSeries::from_rationals(st.field(), &[int(1), rat(-1, 6)], 2);
        assert_eq!(ch.part(1), &expected);
        assert!(ch.part(0).is_zero());
        let unit = inertial_chern(&st, &InertialPairSpec::Virtual, &st.k_fundamental(0)).unwrap();
        assert_eq!(unit.part(0), &TruncatedSeries::one(st.field(), 3));
    }

    #[test]
    fn virtual_inertial_chern_on_p12_twisted_sector() {
        let st = Stack::weighted_projective(&[1, 2]).unwrap();
        let ch = inertial_chern(&st, &InertialPairSpec::Virtual, &st.k_fundamental(1)).unwrap();
        assert_eq!(ch.part(1), &TruncatedSeries::one(st.field(), 1));
    }

    #[test]
    fn inertial_rank_examples() {
        let st = Stack::weighted_projective(&[1, 3, 3]).unwrap();
        let spec = InertialPairSpec::Orbifold;
        let r = inertial_rank(&st, &spec, &st.k_fundamental(1)).unwrap();
        assert!(r.iter().all(Cyclotomic::is_zero));
        let r = inertial_rank(&st, &spec, &st.k_fundamental(0)).unwrap();
        assert!(r[0].is_one());
        let ring = st.sector_k_ring(0);
        let x = st.character_class(&Character::torus(st.group(), 1), &ring).add(&ring.one()).unwrap();
        let mut parts: Vec<KClass> = (0..3).map(|i| st.sector_k_ring(i).zero()).collect();
        parts[0] = x;
        let r = inertial_rank(&st, &spec, &st.k_class(parts).unwrap()).unwrap();
        assert_eq!(r[0], st.field().integer(2));
    }

    #[test]
    fn todd_twist_oracles() {
        // Td^{-1/3} cubed times Td is 1.
        let st = Stack::weighted_projective(&[1, 3, 3]).unwrap();
        let k = st.field();
        let s = VirtualBundle::from_terms([(Character::torus(st.group(), 1), rat(1, 3))]);
        let tw = todd_twist(&st, &s, 5).unwrap();
        let td = TruncatedSeries::todd(k, 5);
        assert_eq!(tw.mul(&tw).mul(&tw).mul(&td), TruncatedSeries::one(k, 5));
        // Td(t) * (1 - e^{-t}) / t = 1, the latter computed from exp.
        let e = TruncatedSeries::exponential(k, -1, 6);
        let one_minus: Vec<Cyclotomic> = (1..6).map(|i| -e.coeff(i)).collect();
        let ratio = TruncatedSeries::from_coeffs(k, one_minus, 5);
        assert_eq!(td.mul(&ratio), TruncatedSeries::one(k, 5));
    }
}
