//! Chinese-remainder idempotents of a quotient ring whose modulus splits
//! over the working cyclotomic field.

use std::sync::Arc;

use super::cyclotomic::Cyclotomic;
use super::poly::Poly;
use super::quotient::{QuotientElement, QuotientRing};
use crate::error::{Error, Result};

/// The summand of the ring localized at one root of the modulus.
#[derive(Clone, Debug)]
pub struct LocalSummand {
    /// The root is `z^root_exponent`.
    pub root_exponent: u32,
    pub root: Cyclotomic,
    pub multiplicity: usize,
    pub idempotent: QuotientElement,
}

/// Roots of `p` among the `N`-th roots of unity, with multiplicities, in
/// increasing exponent order.
pub fn roots_of_unity_with_multiplicity(p: &Poly, ring: &QuotientRing) -> Vec<(u32, Cyclotomic, usize)> {
    let field = ring.field();
    let mut out = Vec::new();
    for k in 0..field.conductor() {
        let root = field.root_of_unity(k as i64);
        let mut rest = p.clone();
        let mut mult = 0;
        loop {
            let (q, v) = rest.deflate(&root);
            if !v.is_zero() || rest.degree().unwrap_or(0) == 0 {
                break;
            }
            mult += 1;
            rest = q;
        }
        if mult > 0 {
            out.push((k, root, mult));
        }
    }
    out
}

/// Pairwise-orthogonal idempotents summing to 1, one per root of the
/// modulus: `e = 1 mod (chi - r)^m` and `0` modulo the cofactor.
pub fn crt_idempotents(ring: &Arc<QuotientRing>) -> Result<Vec<LocalSummand>> {
    let field = ring.field();
    let modulus = ring.modulus();
    let roots = roots_of_unity_with_multiplicity(modulus, ring);
    let total: usize = roots.iter().map(|r| r.2).sum();
    if total != ring.dimension() {
        return Err(Error::IncompleteSplitting {
            conductor: field.conductor(),
        });
    }
    if roots.len() == 1 {
        let (k, root, m) = roots.into_iter().next().unwrap();
        return Ok(vec![LocalSummand {
            root_exponent: k,
            root,
            multiplicity: m,
            idempotent: ring.one(),
        }]);
    }
    roots
        .into_iter()
        .map(|(k, root, m)| {
            let local = Poly::linear(&root).pow(m as u32, field);
            let (cofactor, r) = modulus.divrem(&local)?;
            debug_assert!(r.is_zero());
            let u = cofactor.inverse_mod(&local)?;
            Ok(LocalSummand {
                root_exponent: k,
                root,
                multiplicity: m,
                idempotent: ring.element(&cofactor * &u),
            })
        })
        .collect()
}
