use proptest::prelude::*;

use inertia::algebra::rational::{int, rat};
use inertia::algebra::{Cyclotomic, CyclotomicField, Poly, QuotientRing, Rational, TruncatedSeries};
use inertia::localization::{localized_product, support_decompose, support_decomposition};
use inertia::products::{graded_degree, obstruction, virtual_tangent_direct};
use inertia::{ActionSpec, Character, GroupSpec, InertialPairSpec, InertialProduct, InertiaKClass, Space, Stack, VirtualBundle};

fn cyclotomic(field: &std::sync::Arc<CyclotomicField>, c: &[(i64, i64)]) -> Cyclotomic {
    let coeffs: Vec<Rational> = (0..field.degree())
        .map(|i| c.get(i).map(|&(p, q)| rat(p, q)).unwrap_or_else(|| int(0)))
        .collect();
    Cyclotomic::from_coeffs(field, coeffs)
}

fn coeff_strategy() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-5i64..=5, 1i64..=4), 0..4)
}

fn poly_strategy() -> impl Strategy<Value = Vec<Vec<(i64, i64)>>> {
    prop::collection::vec(coeff_strategy(), 0..6)
}

fn to_poly(field: &std::sync::Arc<CyclotomicField>, p: &[Vec<(i64, i64)>]) -> Poly {
    Poly::from_coeffs(p.iter().map(|c| cyclotomic(field, c)).collect())
}

/// Small actions: weighted projective lines and planes, finite cyclic groups
/// on a point or an affine space, and mu_2 x C^* on affine space.
fn action_strategy() -> impl Strategy<Value = ActionSpec> {
    let wp = prop::collection::vec(1i64..=3, 1..=3).prop_map(|w| ActionSpec::weighted_projective(&w));
    let bmu = (2u32..=4).prop_map(ActionSpec::classifying);
    let cyc = (2u32..=4, prop::collection::vec(0i64..4, 1..=2)).prop_map(|(n, b)| ActionSpec::cyclic_on_affine(n, &b));
    let mixed = prop::collection::vec((0i64..2, 1i64..=2), 1..=2).prop_map(|w| {
        let group = GroupSpec { finite_orders: vec![2], torus_rank: 1 };
        let weights = w.iter().map(|&(a, m)| Character::new(&group, vec![a], m)).collect();
        ActionSpec { group, weights, space: Space::AffineMinusOrigin }
    });
    prop_oneof![wp, bmu, cyc, mixed]
}

fn pair_strategy(stack: &Stack, which: usize) -> InertialPairSpec {
    match which % 4 {
        0 => InertialPairSpec::Orbifold,
        1 => InertialPairSpec::Virtual,
        2 => InertialPairSpec::VPlus(stack.cotangent()),
        _ => InertialPairSpec::VMinus(VirtualBundle::character(stack.tautological())),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn quotient_ring_axioms(a in poly_strategy(), b in poly_strategy(), c in poly_strategy(), n in prop::sample::select(vec![4u32, 6, 8])) {
        let field = CyclotomicField::new(n);
        let modulus = Poly::from_coeffs(vec![field.integer(-1), field.zero(), field.integer(1), field.integer(1)]);
        let ring = QuotientRing::new(&field, modulus).unwrap();
        let (x, y, z) = (ring.element(to_poly(&field, &a)), ring.element(to_poly(&field, &b)), ring.element(to_poly(&field, &c)));
        prop_assert_eq!(x.mul(&y).unwrap(), y.mul(&x).unwrap());
        prop_assert_eq!(x.mul(&y).unwrap().mul(&z).unwrap(), x.mul(&y.mul(&z).unwrap()).unwrap());
        prop_assert_eq!(x.mul(&y.add(&z).unwrap()).unwrap(), x.mul(&y).unwrap().add(&x.mul(&z).unwrap()).unwrap());
        prop_assert_eq!(x.mul(&ring.one()).unwrap(), x.clone());
        prop_assert!(x.sub(&x).unwrap().is_zero());
    }

    #[test]
    fn cyclotomic_inverse(a in coeff_strategy(), n in prop::sample::select(vec![3u32, 4, 5, 8, 12])) {
        let field = CyclotomicField::new(n);
        let x = cyclotomic(&field, &a);
        prop_assume!(!x.is_zero());
        prop_assert!((&x * &x.inverse().unwrap()).is_one());
    }

    #[test]
    fn series_powers_add(c in prop::collection::vec((-4i64..=4, 1i64..=3), 1..5), p in (-6i64..=6, 1i64..=4), q in (-6i64..=6, 1i64..=4)) {
        let field = CyclotomicField::new(4);
        let mut coeffs = vec![int(1)];
        coeffs.extend(c.iter().map(|&(a, b)| rat(a, b)));
        let s = TruncatedSeries::from_rationals(&field, &coeffs, 5);
        let (a, b) = (rat(p.0, p.1), rat(q.0, q.1));
        let lhs = s.pow(&a).unwrap().mul(&s.pow(&b).unwrap());
        prop_assert_eq!(lhs, s.pow(&(a + b)).unwrap());
    }

    #[test]
    fn products_are_associative_commutative_unital(action in action_strategy(), which in 0usize..4, picks in prop::collection::vec(any::<prop::sample::Index>(), 3)) {
        let stack = Stack::new(action).unwrap();
        let spec = pair_strategy(&stack, which);
        prop_assume!(spec.validate().is_ok());
        let prod = InertialProduct::new(&stack, spec).unwrap();
        let kb = stack.k_basis();
        let (x, y, z) = (picks[0].get(&kb), picks[1].get(&kb), picks[2].get(&kb));
        let one = stack.k_fundamental(stack.identity_index());
        prop_assert_eq!(prod.mul_k(&one, x).unwrap(), x.clone());
        prop_assert_eq!(prod.mul_k(x, y).unwrap(), prod.mul_k(y, x).unwrap());
        prop_assert_eq!(
            prod.mul_k(&prod.mul_k(x, y).unwrap(), z).unwrap(),
            prod.mul_k(x, &prod.mul_k(y, z).unwrap()).unwrap()
        );
        let cb = stack.chow_basis();
        let (x, y, z) = (picks[0].get(&cb), picks[1].get(&cb), picks[2].get(&cb));
        prop_assert_eq!(prod.mul_chow(x, y).unwrap(), prod.mul_chow(y, x).unwrap());
        prop_assert_eq!(
            prod.mul_chow(&prod.mul_chow(x, y).unwrap(), z).unwrap(),
            prod.mul_chow(x, &prod.mul_chow(y, z).unwrap()).unwrap()
        );
    }

    #[test]
    fn virtual_obstruction_matches_normal_bundles(action in action_strategy()) {
        let stack = Stack::new(action).unwrap();
        let prod = InertialProduct::new(&stack, InertialPairSpec::Virtual).unwrap();
        let n = stack.sectors().len();
        for i in 0..n {
            for j in 0..n {
                let (a, b) = (&stack.sector(i).element, &stack.sector(j).element);
                match prod.obstruction(i, j) {
                    Some(r) => {
                        prop_assert_eq!(r, &obstruction(&stack, &InertialPairSpec::Virtual, a, b).unwrap());
                        prop_assert_eq!(r, &virtual_tangent_direct(&stack, a, b));
                    }
                    None => prop_assert!(obstruction(&stack, &InertialPairSpec::Virtual, a, b).is_err()),
                }
            }
        }
    }

    #[test]
    fn grading_is_additive(action in action_strategy(), which in 0usize..2) {
        let stack = Stack::new(action).unwrap();
        let spec = pair_strategy(&stack, which);
        let prod = InertialProduct::new(&stack, spec.clone()).unwrap();
        let cb = stack.chow_basis();
        let support = |x: &inertia::InertiaChowClass| (0..stack.sectors().len()).find(|&i| !x.part(i).is_zero()).unwrap();
        for x in &cb {
            for y in &cb {
                let z = prod.mul_chow(x, y).unwrap();
                if z.is_zero() {
                    continue;
                }
                let (i, j, k) = (support(x), support(y), support(&z));
                let dx = graded_degree(&stack, &spec, i, x.part(i)).unwrap();
                let dy = graded_degree(&stack, &spec, j, y.part(j)).unwrap();
                prop_assert_eq!(graded_degree(&stack, &spec, k, z.part(k)).unwrap(), dx + dy);
            }
        }
    }

    #[test]
    fn idempotents_split_each_ring(action in action_strategy()) {
        let stack = Stack::new(action).unwrap();
        for (i, supports) in support_decomposition(&stack).unwrap().iter().enumerate() {
            let ring = stack.sector_k_ring(i);
            let mut total = ring.zero();
            for a in supports {
                prop_assert_eq!(a.idempotent.mul(&a.idempotent).unwrap(), a.idempotent.clone());
                for b in supports {
                    if a.element != b.element {
                        prop_assert!(a.idempotent.mul(&b.idempotent).unwrap().is_zero());
                    }
                }
                total = total.add(&a.idempotent).unwrap();
            }
            prop_assert_eq!(total, ring.one());
        }
    }

    #[test]
    fn support_decomposition_reassembles(action in action_strategy(), pick in any::<prop::sample::Index>(), c in coeff_strategy()) {
        let stack = Stack::new(action).unwrap();
        let kb = stack.k_basis();
        let x = pick.get(&kb).scale(&cyclotomic(stack.field(), &c)).add(&kb[0]).unwrap();
        prop_assert_eq!(support_decompose(&stack, &x).unwrap().reassemble(&stack).unwrap(), x);
    }
}

fn localized_stacks() -> Vec<Stack> {
    vec![
        Stack::weighted_projective(&[1, 2]).unwrap(),
        Stack::weighted_projective(&[1, 3, 3]).unwrap(),
        Stack::classifying(2).unwrap(),
        Stack::classifying(3).unwrap(),
        Stack::classifying(4).unwrap(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn localized_product_is_a_commutative_unital_ring(s in 0usize..5, picks in prop::collection::vec(any::<prop::sample::Index>(), 3)) {
        let stack = &localized_stacks()[s];
        let kb = stack.k_basis();
        let (x, y, z) = (picks[0].get(&kb), picks[1].get(&kb), picks[2].get(&kb));
        let one = stack.k_fundamental(stack.identity_index());
        let lo = |a: &InertiaKClass, b: &InertiaKClass| localized_product(stack, a, b).unwrap();
        prop_assert_eq!(lo(&one, x), x.clone());
        prop_assert_eq!(lo(x, y), lo(y, x));
        prop_assert_eq!(lo(&lo(x, y), z), lo(x, &lo(y, z)));
    }

    #[test]
    fn localized_product_agrees_with_orbifold_at_trivial_support(s in 0usize..5, picks in prop::collection::vec(any::<prop::sample::Index>(), 2)) {
        let stack = &localized_stacks()[s];
        let kb = stack.k_basis();
        let (x, y) = (picks[0].get(&kb), picks[1].get(&kb));
        let orb = inertia::products::product(stack, &InertialPairSpec::Orbifold, x, y).unwrap();
        let lo = support_decompose(stack, &localized_product(stack, x, y).unwrap()).unwrap();
        let orb = support_decompose(stack, &orb).unwrap();
        for (a, b) in lo.parts().iter().zip(orb.parts()) {
            for ((h, u), (h2, v)) in a.iter().zip(b) {
                prop_assert_eq!(h, h2);
                if h.residues().iter().all(|&r| r == 0) && h.torus_angle() == &int(0) {
                    prop_assert_eq!(u, v);
                }
            }
        }
    }
}
