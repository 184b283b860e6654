//! Quotient stacks `[X/G]` for a diagonal action of `G = (finite abelian) x
//! (torus of rank <= 1)` on `A^n - {0}` or on a point.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, RwLock};

use num_traits::{One, Signed, Zero};

use crate::algebra::rational::{denom_u64, fract, int, lcm, rat};
use crate::algebra::{CyclotomicField, Rational};
use crate::error::{Error, Result};
use crate::rings::KRing;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    pub finite_orders: Vec<u32>,
    pub torus_rank: u8,
}

impl GroupSpec {
    pub fn torus(finite_orders: Vec<u32>) -> Self {
        GroupSpec {
            finite_orders,
            torus_rank: 1,
        }
    }

    pub fn finite(finite_orders: Vec<u32>) -> Self {
        GroupSpec {
            finite_orders,
            torus_rank: 0,
        }
    }

    pub fn has_torus(&self) -> bool {
        self.torus_rank == 1
    }

    /// All residue tuples of the finite part, lexicographically.
    pub fn finite_elements(&self) -> Vec<Vec<u32>> {
        let mut out = vec![Vec::new()];
        for &n in &self.finite_orders {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..n).map(move |a| {
                        let mut v = prefix.clone();
                        v.push(a);
                        v
                    })
                })
                .collect();
        }
        out
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement {
            residues: vec![0; self.finite_orders.len()],
            torus_angle: Rational::zero(),
        }
    }

    /// Fractional angle `alpha` with `w(g) = exp(2 pi i alpha)`.
    pub fn angle(&self, g: &GroupElement, w: &Character) -> Rational {
        let mut total = &g.torus_angle * int(w.torus_weight);
        for ((a, b), n) in g.residues.iter().zip(&w.exponents).zip(&self.finite_orders) {
            total += rat(*a as i64 * b, *n as i64);
        }
        fract(&total)
    }

    pub fn multiply(&self, g: &GroupElement, h: &GroupElement) -> GroupElement {
        GroupElement {
            residues: g
                .residues
                .iter()
                .zip(&h.residues)
                .zip(&self.finite_orders)
                .map(|((a, b), n)| (a + b) % n)
                .collect(),
            torus_angle: fract(&(&g.torus_angle + &h.torus_angle)),
        }
    }

    pub fn inverse(&self, g: &GroupElement) -> GroupElement {
        GroupElement {
            residues: g
                .residues
                .iter()
                .zip(&self.finite_orders)
                .map(|(a, n)| (n - a) % n)
                .collect(),
            torus_angle: fract(&(-&g.torus_angle)),
        }
    }

    pub fn order(&self, g: &GroupElement) -> u64 {
        let mut o = denom_u64(&g.torus_angle);
        for (a, n) in g.residues.iter().zip(&self.finite_orders) {
            let n = *n as u64;
            o = lcm(o, n / num_integer::gcd(*a as u64, n));
        }
        o
    }
}

/// A character of `G`: exponents of the finite factors (reduced) and the
/// torus weight.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Character {
    exponents: Vec<i64>,
    torus_weight: i64,
}

impl Character {
    pub fn new(group: &GroupSpec, exponents: Vec<i64>, torus_weight: i64) -> Self {
        assert_eq!(exponents.len(), group.finite_orders.len(), "one exponent per finite factor");
        Character {
            exponents: exponents
                .iter()
                .zip(&group.finite_orders)
                .map(|(b, n)| b.rem_euclid(*n as i64))
                .collect(),
            torus_weight,
        }
    }

    pub fn torus(group: &GroupSpec, weight: i64) -> Self {
        Self::new(group, vec![0; group.finite_orders.len()], weight)
    }

    pub fn trivial(group: &GroupSpec) -> Self {
        Self::torus(group, 0)
    }

    pub fn exponents(&self) -> &[i64] {
        &self.exponents
    }

    pub fn torus_weight(&self) -> i64 {
        self.torus_weight
    }

    pub fn is_trivial(&self) -> bool {
        self.torus_weight == 0 && self.exponents.iter().all(|b| *b == 0)
    }

    pub fn dual(&self, group: &GroupSpec) -> Self {
        Self::new(group, self.exponents.iter().map(|b| -b).collect(), -self.torus_weight)
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, b) in self.exponents.iter().enumerate() {
            match b {
                0 => {}
                1 => parts.push(format!("x{}", i + 1)),
                b => parts.push(format!("x{}^{b}", i + 1)),
            }
        }
        match self.torus_weight {
            0 => {}
            1 => parts.push("chi".into()),
            m if m < 0 => parts.push(format!("chi^({m})")),
            m => parts.push(format!("chi^{m}")),
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

/// A finite-order element: finite residues and a torus angle in `[0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    residues: Vec<u32>,
    torus_angle: Rational,
}

impl GroupElement {
    pub fn new(group: &GroupSpec, residues: Vec<i64>, torus_angle: Rational) -> Self {
        assert_eq!(residues.len(), group.finite_orders.len(), "one residue per finite factor");
        GroupElement {
            residues: residues
                .iter()
                .zip(&group.finite_orders)
                .map(|(a, n)| a.rem_euclid(*n as i64) as u32)
                .collect(),
            torus_angle: if group.has_torus() { fract(&torus_angle) } else { Rational::zero() },
        }
    }

    pub fn residues(&self) -> &[u32] {
        &self.residues
    }

    pub fn torus_angle(&self) -> &Rational {
        &self.torus_angle
    }

    pub fn is_identity(&self) -> bool {
        self.torus_angle.is_zero() && self.residues.iter().all(|a| *a == 0)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let res: Vec<String> = self.residues.iter().map(u32::to_string).collect();
        match (res.is_empty(), self.torus_angle.is_zero()) {
            (true, _) => write!(f, "({})", self.torus_angle),
            (false, true) => write!(f, "({})", res.join(",")),
            (false, false) => write!(f, "({}|{})", res.join(","), self.torus_angle),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Space {
    AffineMinusOrigin,
    Point,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionSpec {
    pub group: GroupSpec,
    pub weights: Vec<Character>,
    pub space: Space,
}

impl ActionSpec {
    /// Weighted projective stack `P(w_1, ..., w_n)`.
    pub fn weighted_projective(weights: &[i64]) -> Self {
        let group = GroupSpec::torus(Vec::new());
        let weights = weights.iter().map(|&m| Character::torus(&group, m)).collect();
        ActionSpec {
            group,
            weights,
            space: Space::AffineMinusOrigin,
        }
    }

    /// The classifying stack `B mu_n`.
    pub fn classifying(n: u32) -> Self {
        ActionSpec {
            group: GroupSpec::finite(vec![n]),
            weights: Vec::new(),
            space: Space::Point,
        }
    }

    /// `mu_n` acting on `A^k - {0}` with the given exponents.
    pub fn cyclic_on_affine(n: u32, exponents: &[i64]) -> Self {
        let group = GroupSpec::finite(vec![n]);
        let weights = exponents.iter().map(|&b| Character::new(&group, vec![b], 0)).collect();
        ActionSpec {
            group,
            weights,
            space: Space::AffineMinusOrigin,
        }
    }

    /// Lists every violated precondition.
    pub fn validate(&self) -> Result<()> {
        let mut problems = Vec::new();
        if self.group.torus_rank > 1 {
            problems.push(format!("torus rank {} is not supported (0 or 1)", self.group.torus_rank));
        }
        if self.group.finite_orders.iter().any(|&n| n == 0) {
            problems.push("finite orders must be positive".to_string());
        }
        if self.weights.len() > 64 {
            problems.push("at most 64 coordinates are supported".to_string());
        }
        match self.space {
            Space::Point => {
                if !self.weights.is_empty() {
                    problems.push("a point has no coordinates; weights must be empty".to_string());
                }
                if self.group.has_torus() {
                    return Err(Error::InfiniteStabilizer(
                        "a torus acting on a point has infinite stabilizer".to_string(),
                    ));
                }
            }
            Space::AffineMinusOrigin => {
                if self.weights.is_empty() {
                    problems.push("affine space needs at least one coordinate".to_string());
                }
                if self.group.has_torus() {
                    let bad: Vec<String> = self
                        .weights
                        .iter()
                        .enumerate()
                        .filter(|(_, w)| w.torus_weight <= 0)
                        .map(|(j, w)| format!("coordinate {} has torus weight {}", j + 1, w.torus_weight))
                        .collect();
                    if !bad.is_empty() {
                        return Err(Error::InfiniteStabilizer(bad.join(", ")));
                    }
                }
            }
        }
        for w in &self.weights {
            if w.exponents.len() != self.group.finite_orders.len() {
                problems.push(format!("character {w} does not match the group"));
            }
        }
        if problems.is_empty() {
            Ok(())
        } else {
            Err(Error::Validation(problems))
        }
    }
}

/// Finite formal combination of characters with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct VirtualBundle {
    terms: BTreeMap<Character, Rational>,
}

impl VirtualBundle {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms<I: IntoIterator<Item = (Character, Rational)>>(terms: I) -> Self {
        let mut v = Self::zero();
        for (w, c) in terms {
            v.add_term(w, c);
        }
        v
    }

    pub fn character(w: Character) -> Self {
        Self::from_terms([(w, Rational::one())])
    }

    pub fn add_term(&mut self, w: Character, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Character, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &Character) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Virtual rank: the sum of the coefficients.
    pub fn rank(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |a, c| a + c)
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        self.plus(&other.scale(&int(-1)))
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), c * q)))
    }

    pub fn dual(&self, group: &GroupSpec) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, c)| (w.dual(group), c.clone())))
    }
}

impl fmt::Display for VirtualBundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (w, c) in &self.terms {
            let neg = c.is_negative();
            let abs = c.abs();
            let body = if abs.is_one() { w.to_string() } else { format!("{abs}*{w}") };
            match (first, neg) {
                (true, false) => write!(f, "{body}")?,
                (true, true) => write!(f, "-{body}")?,
                (false, false) => write!(f, " + {body}")?,
                (false, true) => write!(f, " - {body}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// A set of coordinate indices (0-based internally, printed 1-based).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoordSet(u64);

impl CoordSet {
    pub fn empty() -> Self {
        CoordSet(0)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        CoordSet(it.into_iter().fold(0, |m, j| m | (1u64 << j)))
    }

    pub fn contains(&self, j: usize) -> bool {
        self.0 >> j & 1 == 1
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn intersect(&self, other: &Self) -> Self {
        CoordSet(self.0 & other.0)
    }

    pub fn minus(&self, other: &Self) -> Self {
        CoordSet(self.0 & !other.0)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..64).filter(move |j| self.contains(*j))
    }
}

impl fmt::Display for CoordSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.iter().map(|j| (j + 1).to_string()).collect();
        write!(f, "{{{}}}", v.join(","))
    }
}

/// A component of the inertia stack.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sector {
    pub element: GroupElement,
    pub fixed: CoordSet,
}

static NEXT_STACK_ID: AtomicU64 = AtomicU64::new(1);

/// A validated stack with its sectors, working cyclotomic field and a cache
/// of sector ring presentations.
#[derive(Debug)]
pub struct Stack {
    id: u64,
    action: ActionSpec,
    field: Arc<CyclotomicField>,
    sectors: Vec<Sector>,
    sector_lookup: HashMap<GroupElement, usize>,
    pub(crate) rings: RwLock<HashMap<CoordSet, Arc<KRing>>>,
}

/// Every finite-order element with a nonempty fixed locus (every element
/// when the space is a point), sorted by residues then torus angle.
pub fn enumerate_sectors(action: &ActionSpec) -> Result<Vec<Sector>> {
    action.validate()?;
    let group = &action.group;
    let mut elements = BTreeSet::new();
    for residues in group.finite_elements() {
        let base = GroupElement {
            residues: residues.clone(),
            torus_angle: Rational::zero(),
        };
        match (action.space, group.has_torus()) {
            (Space::Point, _) | (Space::AffineMinusOrigin, false) => {
                elements.insert(base);
            }
            (Space::AffineMinusOrigin, true) => {
                for w in &action.weights {
                    // solve q * m + s in Z for q in [0, 1)
                    let s = group.angle(&base, &Character::new(group, w.exponents.clone(), 0));
                    let m = w.torus_weight;
                    for k in 0..m {
                        elements.insert(GroupElement {
                            residues: residues.clone(),
                            torus_angle: fract(&((int(k) - &s) / int(m))),
                        });
                    }
                }
            }
        }
    }
    Ok(elements
        .into_iter()
        .map(|g| Sector {
            fixed: fixed_set(action, &g),
            element: g,
        })
        .filter(|s| action.space == Space::Point || !s.fixed.is_empty())
        .collect())
}

pub fn fixed_set(action: &ActionSpec, g: &GroupElement) -> CoordSet {
    CoordSet::from_indices(
        action
            .weights
            .iter()
            .enumerate()
            .filter(|(_, w)| action.group.angle(g, w).is_zero())
            .map(|(j, _)| j),
    )
}

impl Stack {
    pub fn new(action: ActionSpec) -> Result<Self> {
        let sectors = enumerate_sectors(&action)?;
        let group = &action.group;
        let mut n = 1u64;
        for s in &sectors {
            n = lcm(n, group.order(&s.element));
        }
        for w in &action.weights {
            n = lcm(n, w.torus_weight.unsigned_abs().max(1));
        }
        for &k in &group.finite_orders {
            n = lcm(n, k as u64);
        }
        let conductor = u32::try_from(2 * n).map_err(|_| Error::Validation(vec!["conductor too large".into()]))?;
        let sector_lookup = sectors.iter().enumerate().map(|(i, s)| (s.element.clone(), i)).collect();
        Ok(Stack {
            id: NEXT_STACK_ID.fetch_add(1, Ordering::Relaxed),
            field: CyclotomicField::new(conductor),
            action,
            sectors,
            sector_lookup,
            rings: RwLock::new(HashMap::new()),
        })
    }

    pub fn weighted_projective(weights: &[i64]) -> Result<Self> {
        Self::new(ActionSpec::weighted_projective(weights))
    }

    pub fn classifying(n: u32) -> Result<Self> {
        Self::new(ActionSpec::classifying(n))
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn action(&self) -> &ActionSpec {
        &self.action
    }

    pub fn group(&self) -> &GroupSpec {
        &self.action.group
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn sectors(&self) -> &[Sector] {
        &self.sectors
    }

    pub fn sector(&self, i: usize) -> &Sector {
        &self.sectors[i]
    }

    pub fn sector_index(&self, g: &GroupElement) -> Option<usize> {
        self.sector_lookup.get(g).copied()
    }

    pub fn identity_index(&self) -> usize {
        self.sector_index(&self.group().identity()).expect("identity is always a sector")
    }

    pub fn angle(&self, g: &GroupElement, w: &Character) -> Rational {
        self.group().angle(g, w)
    }

    pub fn multiply(&self, g: &GroupElement, h: &GroupElement) -> GroupElement {
        self.group().multiply(g, h)
    }

    pub fn inverse(&self, g: &GroupElement) -> GroupElement {
        self.group().inverse(g)
    }

    pub fn fixed_set(&self, g: &GroupElement) -> CoordSet {
        fixed_set(&self.action, g)
    }

    pub fn all_coordinates(&self) -> CoordSet {
        CoordSet::from_indices(0..self.action.weights.len())
    }

    /// Whether the fixed locus `A^F - {0}` (or the point) is nonempty.
    pub fn locus_nonempty(&self, f: &CoordSet) -> bool {
        self.action.space == Space::Point || !f.is_empty()
    }

    /// Nilpotency order of the rational Chow ring of `A^F - {0}`.
    pub fn chow_order(&self, f: &CoordSet) -> usize {
        if self.group().has_torus() {
            f.len().max(1)
        } else {
            1
        }
    }

    pub fn weight(&self, j: usize) -> &Character {
        &self.action.weights[j]
    }

    /// `sum_{j in F} w_j`.
    pub fn coordinate_bundle(&self, f: &CoordSet) -> VirtualBundle {
        VirtualBundle::from_terms(f.iter().map(|j| (self.weight(j).clone(), Rational::one())))
    }

    /// Tangent class `TX - Lie(G)`.
    pub fn tangent(&self) -> VirtualBundle {
        let mut t = self.coordinate_bundle(&self.all_coordinates());
        if self.group().has_torus() {
            t.add_term(Character::trivial(self.group()), int(-1));
        }
        t
    }

    pub fn cotangent(&self) -> VirtualBundle {
        self.tangent().dual(self.group())
    }

    /// The defining character: torus weight 1, or exponent 1 on the first
    /// finite factor when there is no torus.
    pub fn tautological(&self) -> Character {
        let group = self.group();
        if group.has_torus() || group.finite_orders.is_empty() {
            Character::torus(group, 1)
        } else {
            let mut e = vec![0; group.finite_orders.len()];
            e[0] = 1;
            Character::new(group, e, 0)
        }
    }

    /// `L(g)(V) = sum alpha_w(g) c_w w`.
    pub fn log_trace(&self, g: &GroupElement, v: &VirtualBundle) -> VirtualBundle {
        VirtualBundle::from_terms(v.terms().map(|(w, c)| (w.clone(), self.angle(g, w) * c)))
    }

    /// Virtual rank of `L(g)(T)`.
    pub fn age(&self, g: &GroupElement) -> Rational {
        self.log_trace(g, &self.tangent()).rank()
    }

    /// Normal class of the sector of `g` in `X`: the moved coordinates.
    pub fn normal_bundle_class(&self, g: &GroupElement) -> VirtualBundle {
        self.coordinate_bundle(&self.all_coordinates().minus(&self.fixed_set(g)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn angles_on_p133() {
        let st = Stack::weighted_projective(&[1, 3, 3]).unwrap();
        let g = st.group();
        let omega = GroupElement::new(g, vec![], rat(1, 3));
        assert_eq!(st.angle(&omega, &Character::torus(g, 1)), rat(1, 3));
        assert_eq!(st.angle(&omega, &Character::torus(g, 3)), int(0));
        assert_eq!(st.angle(&omega, &Character::trivial(g)), int(0));
        assert_eq!(st.angle(&omega, &Character::torus(g, -1)), rat(2, 3));
    }

    #[test]
    fn sectors_of_p133() {
        let st = Stack::weighted_projective(&[1, 3, 3]).unwrap();
        let got: Vec<(Rational, String)> = st
            .sectors()
            .iter()
            .map(|s| (s.element.torus_angle().clone(), s.fixed.to_string()))
            .collect();
        assert_eq!(
            got,
            vec![
                (int(0), "{1,2,3}".to_string()),
                (rat(1, 3), "{2,3}".to_string()),
                (rat(2, 3), "{2,3}".to_string())
            ]
        );
        assert_eq!(st.field().conductor(), 6);
    }

    #[test]
    fn sectors_of_p12_and_bmu2() {
        let st = Stack::weighted_projective(&[1, 2]).unwrap();
        assert_eq!(st.sectors().len(), 2);
        assert_eq!(st.sector(1).element.torus_angle(), &rat(1, 2));
        assert_eq!(st.sector(1).fixed, CoordSet::from_indices([1]));
        let b = Stack::classifying(2).unwrap();
        assert_eq!(b.sectors().len(), 2);
        assert!(b.sectors().iter().all(|s| s.fixed.is_empty()));
    }

    #[test]
    fn ages_and_normal_bundles() {
        let st = Stack::weighted_projective(&[1, 3, 3]).unwrap();
        let g = st.group();
        let omega = &st.sector(1).element;
        assert_eq!(st.age(omega), rat(1, 3));
        assert_eq!(st.age(&g.identity()), int(0));
        assert_eq!(st.normal_bundle_class(omega), VirtualBundle::character(Character::torus(g, 1)));
        assert!(st.normal_bundle_class(&g.identity()).is_zero());
        let p12 = Stack::weighted_projective(&[1, 2]).unwrap();
        assert_eq!(p12.age(&p12.sector(1).element), rat(1, 2));
        assert_eq!(
            p12.normal_bundle_class(&p12.sector(1).element),
            VirtualBundle::character(Character::torus(p12.group(), 1))
        );
    }

    #[test]
    fn log_trace_of_tangent() {
        let st = Stack::weighted_projective(&[1, 3, 3]).unwrap();
        let omega = &st.sector(1).element;
        let lt = st.log_trace(omega, &st.tangent());
        assert_eq!(lt, VirtualBundle::from_terms([(Character::torus(st.group(), 1), rat(1, 3))]));
        assert!(st.log_trace(&st.group().identity(), &st.tangent()).is_zero());
    }

    #[test]
    fn validation_rejects_zero_torus_weight() {
        let a = ActionSpec::weighted_projective(&[1, 0]);
        assert!(matches!(Stack::new(a), Err(Error::InfiniteStabilizer(_))));
        let mut p = ActionSpec::classifying(3);
        p.group.torus_rank = 1;
        assert!(matches!(Stack::new(p), Err(Error::InfiniteStabilizer(_))));
    }

    #[test]
    fn cyclic_on_affine_plane() {
        let st = Stack::new(ActionSpec::cyclic_on_affine(3, &[1, 2])).unwrap();
        // only the identity fixes a coordinate
        assert_eq!(st.sectors().len(), 1);
        let st4 = Stack::new(ActionSpec::cyclic_on_affine(4, &[1, 2])).unwrap();
        // 0 and 2 (2 fixes coordinate 2)
        assert_eq!(st4.sectors().len(), 2);
    }
}
