//! Acceptance criteria. Runs as a plain binary so that every criterion
//! prints one PASS/FAIL line; exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use inertia::algebra::rational::{int, is_integer};
use inertia::algebra::{Poly, QuotientElement, TruncatedSeries};
use inertia::chern::{inertial_chern, inertial_rank};
use inertia::localization::localized_product;
use inertia::products::{check_inertial_pair, theta_automorphism, theta_scalar, v_minus};
use inertia::{ActionSpec, InertialPairSpec, InertialProduct, KClass, Stack, VirtualBundle};

type Check = std::result::Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn p133() -> Stack {
    Stack::weighted_projective(&[1, 3, 3]).unwrap()
}

fn p12() -> Stack {
    Stack::weighted_projective(&[1, 2]).unwrap()
}

/// Polynomial in chi with integer coefficients, reduced into the single
/// component of `x`'s ring.
fn chi_poly(x: &KClass, coeffs: &[i64]) -> QuotientElement {
    let ring = x.ring().components()[0].ring();
    let field = ring.field();
    ring.element(Poly::from_coeffs(coeffs.iter().map(|&c| field.integer(c)).collect()))
}

/// Checks `chi^k * entry == numerator` using only forward multiplication,
/// so that entries like `(1 - chi^{-1})^k` are identified without the
/// engine's inverse.
fn satisfies(entry: &KClass, k: usize, numerator: &[i64]) -> bool {
    let part = &entry.parts()[0];
    let mut chi_k = vec![0; k + 1];
    chi_k[k] = 1;
    part.mul(&chi_poly(entry, &chi_k)).unwrap() == chi_poly(entry, numerator)
}

fn unit_product_k(prod: &InertialProduct, st: &Stack, i: usize, j: usize) -> (usize, KClass) {
    let z = prod.mul_k(&st.k_fundamental(i), &st.k_fundamental(j)).unwrap();
    let nonzero: Vec<usize> = (0..st.sectors().len()).filter(|&k| !z.part(k).is_zero()).collect();
    assert_eq!(nonzero.len(), 1, "product of sector units lands on one sector");
    (nonzero[0], z.part(nonzero[0]).clone())
}

/// Expected entries as `(i, j, target, k, numerator)` with
/// `chi^k * entry = numerator(chi)`.
type KTable = [(usize, usize, usize, usize, &'static [i64]); 6];

const ONE: &[i64] = &[1];
// eps(chi) = 1 - chi^{-1}:  chi * eps = chi - 1
const EPS: &[i64] = &[-1, 1];
// eps(chi)^2:  chi^2 * eps^2 = (chi - 1)^2
const EPS2: &[i64] = &[1, -2, 1];
// eps(chi^{-1}) = 1 - chi
const EPS_DUAL: &[i64] = &[1, -1];
// eps(chi) eps(chi^{-1}):  chi * (...) = (chi - 1)(1 - chi)
const EPS_EPS_DUAL: &[i64] = &[-1, 2, -1];

fn criterion_1() -> Check {
    let st = p133();
    let tables: [(&str, InertialPairSpec, KTable); 3] = [
        (
            "orbifold",
            InertialPairSpec::Orbifold,
            [(0, 0, 0, 0, ONE), (0, 1, 1, 0, ONE), (0, 2, 2, 0, ONE), (1, 1, 2, 0, ONE), (1, 2, 0, 1, EPS), (2, 2, 1, 1, EPS)],
        ),
        (
            "virtual",
            InertialPairSpec::Virtual,
            [(0, 0, 0, 0, ONE), (0, 1, 1, 0, ONE), (0, 2, 2, 0, ONE), (1, 1, 2, 1, EPS), (1, 2, 0, 2, EPS2), (2, 2, 1, 1, EPS)],
        ),
        (
            "cotangent",
            InertialPairSpec::VPlus(st.cotangent()),
            [
                (0, 0, 0, 0, ONE),
                (0, 1, 1, 0, ONE),
                (0, 2, 2, 0, ONE),
                (1, 1, 2, 0, EPS_DUAL),
                (1, 2, 0, 1, EPS_EPS_DUAL),
                (2, 2, 1, 1, EPS),
            ],
        ),
    ];
    for (name, spec, table) in tables {
        let prod = InertialProduct::new(&st, spec).unwrap();
        for (i, j, target, k, numerator) in table {
            for (a, b) in [(i, j), (j, i)] {
                let (t, entry) = unit_product_k(&prod, &st, a, b);
                ensure(t == target, || format!("{name} [{a}]*[{b}] lands on sector {t}, expected {target}"))?;
                ensure(satisfies(&entry, k, numerator), || format!("{name} [{a}]*[{b}] = {entry}"))?;
            }
        }
    }
    Ok(())
}

fn criterion_2() -> Check {
    let st = p133();
    let k = st.field();
    let t = |c: i64, e: usize, order: usize| TruncatedSeries::monomial(k.integer(c), e, order);
    let cases = [
        ("virtual", InertialPairSpec::Virtual, [(1, 1, 2, t(1, 1, 2)), (1, 2, 0, t(1, 2, 3)), (2, 2, 1, t(1, 1, 2))]),
        (
            "cotangent",
            InertialPairSpec::VPlus(st.cotangent()),
            [(1, 1, 2, t(-1, 1, 2)), (1, 2, 0, t(-1, 2, 3)), (2, 2, 1, t(1, 1, 2))],
        ),
    ];
    for (name, spec, entries) in cases {
        let prod = InertialProduct::new(&st, spec).unwrap();
        for (i, j, target, expected) in entries {
            let z = prod.mul_chow(&st.chow_fundamental(i), &st.chow_fundamental(j)).unwrap();
            let mut want = st.chow_zero();
            want = want.add(&st.chow_fundamental(target)).unwrap();
            let scaled: Vec<TruncatedSeries> = want
                .parts()
                .iter()
                .enumerate()
                .map(|(s, p)| if s == target { expected.clone() } else { p.clone() })
                .collect();
            let want = st.chow_class(scaled).unwrap();
            ensure(z == want, || format!("{name} Chow [{i}]*[{j}] = {z}"))?;
        }
        for (i, j) in [(0, 0), (0, 1), (0, 2)] {
            let z = prod.mul_chow(&st.chow_fundamental(i), &st.chow_fundamental(j)).unwrap();
            ensure(z == st.chow_fundamental(i.max(j)), || format!("{name} Chow [{i}]*[{j}] = {z}"))?;
        }
    }
    Ok(())
}

fn criterion_3() -> Check {
    let st = p133();
    let k = st.field();
    let t = st.tangent();
    // identity, exp(2 pi i / 3) = z^2, exp(pi i / 3) = z in Q(z6)
    let expected = [k.one(), k.root_of_unity(2), k.root_of_unity(1)];
    for (i, want) in expected.iter().enumerate() {
        let got = theta_scalar(&st, &t, &st.sector(i).element).unwrap();
        ensure(&got == want, || format!("Theta scalar on sector {i} is {got}"))?;
    }
    let virt = InertialProduct::new(&st, InertialPairSpec::VMinus(t.clone())).unwrap();
    let cot = InertialProduct::new(&st, InertialPairSpec::VPlus(st.cotangent())).unwrap();
    let basis = st.chow_basis();
    let theta: Vec<_> = basis.iter().map(|x| theta_automorphism(&st, &t, x).unwrap()).collect();
    for (a, x) in basis.iter().enumerate() {
        for (b, y) in basis.iter().enumerate() {
            let lhs = theta_automorphism(&st, &t, &virt.mul_chow(x, y).unwrap()).unwrap();
            let rhs = cot.mul_chow(&theta[a], &theta[b]).unwrap();
            ensure(lhs == rhs, || format!("Theta intertwining fails on basis pair ({a}, {b})"))?;
        }
    }
    Ok(())
}

fn criterion_4() -> Check {
    let st = p12();
    let x = st.k_fundamental(1);
    let one = st.k_fundamental(0);
    let z = localized_product(&st, &x, &x).unwrap();
    ensure(z.part(1).is_zero(), || format!("localized square has a twisted part: {z}"))?;
    // ((1 + chi)^2 eps(chi) + (1 - chi)^2) / 4, cleared of the chi^{-1} in eps:
    // 4 chi * entry = (1 + chi)^2 (chi - 1) + chi (1 - chi)^2
    let entry = z.part(0);
    let lhs = entry.parts()[0]
        .mul(&chi_poly(entry, &[0, 4]))
        .unwrap();
    let a = chi_poly(entry, &[1, 2, 1]).mul(&chi_poly(entry, &[-1, 1])).unwrap();
    let b = chi_poly(entry, &[0, 1, -2, 1]);
    ensure(lhs == a.add(&b).unwrap(), || format!("localized square = {entry}"))?;
    for (p, q) in [(&one, &x), (&x, &one)] {
        let w = localized_product(&st, p, q).unwrap();
        ensure(w == x, || format!("localized unit entry = {w}"))?;
    }
    let w = localized_product(&st, &one, &one).unwrap();
    ensure(w == one, || format!("localized [0]*[0] = {w}"))?;
    let ch = inertia::chern::chern_character(&st, entry);
    ensure(ch == TruncatedSeries::monomial(st.field().one(), 1, 2), || format!("Ch of localized square = {ch}"))?;
    Ok(())
}

fn criterion_5_stacks() -> Vec<(&'static str, Stack)> {
    vec![
        ("P(1,2)", p12()),
        ("P(1,3,3)", p133()),
        ("B mu_2", Stack::classifying(2).unwrap()),
        ("B mu_3", Stack::classifying(3).unwrap()),
        ("B mu_4", Stack::classifying(4).unwrap()),
        ("mu_3 on A^2 (1,2)", Stack::new(ActionSpec::cyclic_on_affine(3, &[1, 2])).unwrap()),
    ]
}

fn pairs_for(st: &Stack) -> Vec<(String, InertialPairSpec)> {
    let mut out = vec![
        ("orbifold".to_string(), InertialPairSpec::Orbifold),
        ("virtual".to_string(), InertialPairSpec::Virtual),
    ];
    let bundles = [
        ("T", st.tangent()),
        ("T*", st.cotangent()),
        ("chi", VirtualBundle::character(st.tautological())),
    ];
    for (name, v) in bundles {
        out.push((format!("vplus({name})"), InertialPairSpec::VPlus(v.clone())));
        out.push((format!("vminus({name})"), InertialPairSpec::VMinus(v)));
    }
    out
}

fn criterion_5() -> Check {
    for (sname, st) in criterion_5_stacks() {
        for (pname, spec) in pairs_for(&st) {
            let r = check_inertial_pair(&st, &spec);
            ensure(r.passed(), || format!("{sname} {pname}:\n{r}"))?;
            ensure(r.triples_checked > 0, || format!("{sname} {pname}: no triples checked"))?;
        }
    }
    Ok(())
}

fn criterion_6() -> Check {
    for (sname, st) in criterion_5_stacks() {
        let kb = st.k_basis();
        let cb = st.chow_basis();
        for (pname, spec) in pairs_for(&st) {
            let prod = InertialProduct::new(&st, spec).unwrap();
            let xy: Vec<Vec<_>> = kb.iter().map(|x| kb.iter().map(|y| prod.mul_k(x, y).unwrap()).collect()).collect();
            for (a, x) in kb.iter().enumerate() {
                for (b, _) in kb.iter().enumerate() {
                    for (c, z) in kb.iter().enumerate() {
                        let left = prod.mul_k(&xy[a][b], z).unwrap();
                        let right = prod.mul_k(x, &xy[b][c]).unwrap();
                        ensure(left == right, || format!("{sname} {pname}: K associativity fails at ({a},{b},{c})"))?;
                    }
                }
            }
            let xy: Vec<Vec<_>> = cb.iter().map(|x| cb.iter().map(|y| prod.mul_chow(x, y).unwrap()).collect()).collect();
            for (a, x) in cb.iter().enumerate() {
                for (b, _) in cb.iter().enumerate() {
                    for (c, z) in cb.iter().enumerate() {
                        let left = prod.mul_chow(&xy[a][b], z).unwrap();
                        let right = prod.mul_chow(x, &xy[b][c]).unwrap();
                        ensure(left == right, || format!("{sname} {pname}: Chow associativity fails at ({a},{b},{c})"))?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn criterion_7() -> Check {
    for (sname, st) in [("P(1,2)", p12()), ("P(1,3,3)", p133())] {
        let kb = st.k_basis();
        for (pname, spec) in [("orbifold", InertialPairSpec::Orbifold), ("virtual", InertialPairSpec::Virtual)] {
            let prod = InertialProduct::new(&st, spec.clone()).unwrap();
            let ch: Vec<_> = kb.iter().map(|x| inertial_chern(&st, &spec, x).unwrap()).collect();
            for (a, x) in kb.iter().enumerate() {
                for (b, y) in kb.iter().enumerate() {
                    let lhs = inertial_chern(&st, &spec, &prod.mul_k(x, y).unwrap()).unwrap();
                    let rhs = prod.mul_chow(&ch[a], &ch[b]).unwrap();
                    ensure(lhs == rhs, || format!("{sname} {pname}: Chern map not multiplicative at ({a},{b})"))?;
                }
            }
        }
        for x in &kb {
            let rank = inertial_rank(&st, &InertialPairSpec::Orbifold, x).unwrap();
            for (i, s) in st.sectors().iter().enumerate() {
                if st.age(&s.element) > int(0) {
                    ensure(rank[i].is_zero(), || format!("{sname}: nonzero inertial rank on sector {i}"))?;
                }
            }
        }
    }
    Ok(())
}

fn criterion_8() -> Check {
    let st = p133();
    let t = st.tangent();
    let minus = InertialProduct::new(&st, InertialPairSpec::VMinus(t.clone())).unwrap();
    let plus = InertialProduct::new(&st, InertialPairSpec::VPlus(st.cotangent())).unwrap();
    let basis = st.chow_basis();
    let n = st.sectors().len();
    let support = |x: &inertia::InertiaChowClass| (0..n).find(|&i| !x.part(i).is_zero()).unwrap();
    for x in &basis {
        for y in &basis {
            let (i, j) = (support(x), support(y));
            let (g1, g2) = (&st.sector(i).element, &st.sector(j).element);
            let e = v_minus(&st, &t, g1, g2).map(|v| v.rank()).unwrap_or_else(|_| int(0));
            ensure(is_integer(&e) && e >= int(0), || format!("sign exponent {e} at ({i},{j})"))?;
            let sign = if e.to_integer() % 2 == 0.into() { st.field().one() } else { st.field().integer(-1) };
            let lhs = minus.mul_chow(x, y).unwrap();
            let rhs = plus.mul_chow(x, y).unwrap().scale(&sign);
            ensure(lhs == rhs, || format!("sign law fails on sectors ({i},{j}): {lhs} vs {rhs}"))?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check, Duration); 8] = [
        ("1 P(1,3,3) K-theory tables", criterion_1, Duration::from_secs(1)),
        ("2 P(1,3,3) Chow tables", criterion_2, Duration::from_secs(1)),
        ("3 Theta intertwines virtual and cotangent", criterion_3, Duration::from_secs(1)),
        ("4 P(1,2) localized table", criterion_4, Duration::from_secs(1)),
        ("5 inertial-pair axioms", criterion_5, Duration::from_secs(10)),
        ("6 brute-force associativity", criterion_6, Duration::from_secs(60)),
        ("7 Chern ring homomorphism", criterion_7, Duration::from_secs(30)),
        ("8 sign law", criterion_8, Duration::from_secs(1)),
    ];
    let mut failed = 0;
    for (name, run, budget) in criteria {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        match result {
            Ok(()) if elapsed <= budget => {
                println!("criterion {name}: PASS ({:.3}s, budget {}s)", elapsed.as_secs_f64(), budget.as_secs())
            }
            Ok(()) => {
                failed += 1;
                println!("criterion {name}: FAIL (over budget: {:.3}s > {}s)", elapsed.as_secs_f64(), budget.as_secs());
            }
            Err(msg) => {
                failed += 1;
                println!("criterion {name}: FAIL ({:.3}s) {msg}", elapsed.as_secs_f64());
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
