//! Extended naturals, faces, monomials, monomial ideals and intervals.
//!
//! Coordinates are addressed 0-based throughout the library; variable `i`
//! of the ring is `names[i]`.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::ops::Add;

use crate::error::{Error, Result};

/// An element of `ℕ ∪ {∞}`.
///
/// The derived order puts every finite value below `Inf`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtNat {
    Fin(u32),
    Inf,
}

impl ExtNat {
    pub fn is_inf(self) -> bool {
        matches!(self, ExtNat::Inf)
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            ExtNat::Fin(v) => Some(v),
            ExtNat::Inf => None,
        }
    }
}

impl From<u32> for ExtNat {
    fn from(v: u32) -> Self {
        ExtNat::Fin(v)
    }
}

impl Add for ExtNat {
    type Output = ExtNat;

    /// Saturates at `Inf`; finite sums beyond `u32::MAX` also become `Inf`
    /// rather than wrapping.
    fn add(self, rhs: ExtNat) -> ExtNat {
        match (self, rhs) {
            (ExtNat::Fin(a), ExtNat::Fin(b)) => a.checked_add(b).map_or(ExtNat::Inf, ExtNat::Fin),
            _ => ExtNat::Inf,
        }
    }
}

impl fmt::Display for ExtNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtNat::Fin(v) => write!(f, "{v}"),
            ExtNat::Inf => f.write_str("inf"),
        }
    }
}

/// Variable names of a polynomial ring `K[x_1, …, x_n]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingContext {
    names: Vec<String>,
}

impl RingContext {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidRing("a ring needs at least one variable".into()));
        }
        let mut seen = HashSet::new();
        for name in &names {
            if name.is_empty() {
                return Err(Error::InvalidRing("empty variable name".into()));
            }
            if !seen.insert(name.as_str()) {
                return Err(Error::InvalidRing(format!("duplicate variable {name}")));
            }
        }
        Ok(RingContext { names })
    }

    /// `x1, …, xn`.
    pub fn standard(n: usize) -> Self {
        assert!(n > 0, "a ring needs at least one variable");
        RingContext {
            names: (1..=n).map(|i| format!("x{i}")).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// A vector in `(ℕ ∪ {∞})ⁿ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face(Vec<ExtNat>);

impl Face {
    pub fn new(coords: Vec<ExtNat>) -> Self {
        Face(coords)
    }

    pub fn finite(coords: &[u32]) -> Self {
        Face(coords.iter().map(|&v| ExtNat::Fin(v)).collect())
    }

    pub fn zero(n: usize) -> Self {
        Face(vec![ExtNat::Fin(0); n])
    }

    pub fn infinite(n: usize) -> Self {
        Face(vec![ExtNat::Inf; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[ExtNat] {
        &self.0
    }

    pub fn get(&self, i: usize) -> ExtNat {
        self.0[i]
    }

    pub fn with(&self, i: usize, v: ExtNat) -> Face {
        let mut c = self.0.clone();
        c[i] = v;
        Face(c)
    }

    /// Indices of the infinite coordinates.
    pub fn infpt(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, v)| v.is_inf())
            .map(|(i, _)| i)
            .collect()
    }

    pub fn inf_count(&self) -> usize {
        self.0.iter().filter(|v| v.is_inf()).count()
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|v| !v.is_inf())
    }

    /// The exponent vector, if no coordinate is infinite.
    pub fn to_monomial(&self) -> Option<Monomial> {
        self.0
            .iter()
            .map(|v| v.finite())
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }

    /// Sum of the finite coordinates; `None` when some coordinate is infinite.
    pub fn degree(&self) -> Option<u64> {
        self.0
            .iter()
            .map(|v| v.finite().map(u64::from))
            .sum::<Option<u64>>()
    }

    /// Componentwise order without a dimension check.
    pub fn le(&self, other: &Face) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl From<Vec<ExtNat>> for Face {
    fn from(v: Vec<ExtNat>) -> Self {
        Face(v)
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

fn check_dims(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::DimensionMismatch { expected, found });
    }
    Ok(())
}

/// `a ≤ b` componentwise, with `∞` the top of every coordinate.
pub fn face_leq(a: &Face, b: &Face) -> Result<bool> {
    check_dims(a.len(), b.len())?;
    Ok(a.le(b))
}

/// Infinite part of a face.
pub fn infpt(a: &Face) -> Vec<usize> {
    a.infpt()
}

/// Exponent vector of `x^a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    /// `x_i^e` in a ring with `n` variables.
    pub fn pure_power(n: usize, i: usize, e: u32) -> Self {
        let mut v = vec![0; n];
        v[i] = e;
        Monomial(v)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] > 0).collect()
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn to_face(&self) -> Face {
        Face::finite(&self.0)
    }

    pub fn display<'a>(&'a self, ring: &'a RingContext) -> MonomialDisplay<'a> {
        MonomialDisplay { mono: self, ring }
    }
}

pub struct MonomialDisplay<'a> {
    mono: &'a Monomial,
    ring: &'a RingContext,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mono.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.mono.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(self.ring.name(i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Graded order: total degree ascending, then lexicographically descending
/// (so `x1² < x1x2 < x3²` within degree 2).
pub fn grlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| u64::from(e)).sum();
    let db: u64 = b.iter().map(|&e| u64::from(e)).sum();
    da.cmp(&db).then_with(|| b.cmp(a))
}

/// Canonical minimal generating set, sorted by [`grlex_cmp`].
///
/// An empty input gives an empty output (the zero ideal).
pub fn minimalize(gens: &[Monomial]) -> Result<Vec<Monomial>> {
    if let Some(first) = gens.first() {
        for g in gens {
            check_dims(first.len(), g.len())?;
        }
    }
    if gens.iter().any(Monomial::is_one) {
        return Err(Error::UnitIdeal);
    }
    let mut sorted: Vec<Monomial> = gens.to_vec();
    sorted.sort_by(|a, b| grlex_cmp(&a.0, &b.0));
    sorted.dedup();
    // A divisor has degree at most that of its multiple, so it is kept first.
    let mut kept: Vec<Monomial> = Vec::with_capacity(sorted.len());
    for g in sorted {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    Ok(kept)
}

/// A monomial ideal given by its minimal generators.
///
/// An empty generator list is the zero ideal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ring: RingContext,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(ring: RingContext, gens: Vec<Monomial>) -> Result<Self> {
        for g in &gens {
            check_dims(ring.n(), g.len())?;
        }
        let gens = minimalize(&gens)?;
        Ok(MonomialIdeal { ring, gens })
    }

    /// Convenience constructor over `x1, …, xn` from raw exponent rows.
    pub fn from_exponents(n: usize, rows: &[&[u32]]) -> Result<Self> {
        let gens = rows.iter().map(|r| Monomial::new(r.to_vec())).collect();
        MonomialIdeal::new(RingContext::standard(n), gens)
    }

    pub fn zero(ring: RingContext) -> Self {
        MonomialIdeal { ring, gens: Vec::new() }
    }

    pub fn ring(&self) -> &RingContext {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.ring.n()
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Largest exponent of each variable among the generators (`r_i`);
    /// zero for variables dividing no generator.
    pub fn exponent_bounds(&self) -> Vec<u32> {
        let mut r = vec![0u32; self.n()];
        for g in &self.gens {
            for (ri, &e) in r.iter_mut().zip(g.exponents()) {
                *ri = (*ri).max(e);
            }
        }
        r
    }

    /// Variables that divide no generator.
    pub fn free_variables(&self) -> Vec<usize> {
        self.exponent_bounds()
            .iter()
            .enumerate()
            .filter(|(_, &r)| r == 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// Sum of two ideals over the same ring.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_dims(self.n(), other.n())?;
        let gens: Vec<Monomial> = self.gens.iter().chain(&other.gens).cloned().collect();
        MonomialIdeal::new(self.ring.clone(), gens)
    }

    /// Intersection of two ideals, generated by pairwise lcms.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_dims(self.n(), other.n())?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        MonomialIdeal::new(self.ring.clone(), gens)
    }
}

impl fmt::Display for MonomialIdeal {
    /// Comma-separated generators in canonical order; `0` for the zero ideal.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return f.write_str("0");
        }
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", g.display(&self.ring))?;
        }
        Ok(())
    }
}

/// The set `[lo, hi] = {c : lo ≤ c ≤ hi}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    pub lo: Face,
    pub hi: Face,
}

impl Interval {
    pub fn new(lo: Face, hi: Face) -> Result<Self> {
        check_dims(lo.len(), hi.len())?;
        if !lo.le(&hi) {
            return Err(Error::InvertedInterval {
                lo: lo.to_string(),
                hi: hi.to_string(),
            });
        }
        Ok(Interval { lo, hi })
    }

    pub fn singleton(face: Face) -> Self {
        Interval { lo: face.clone(), hi: face }
    }

    pub fn dim(&self) -> usize {
        self.lo.len()
    }

    /// Indices where the top is infinite (the Stanley set `Z`).
    pub fn stanley_set(&self) -> Vec<usize> {
        self.hi.infpt()
    }

    pub fn contains(&self, c: &Face) -> bool {
        self.lo.le(c) && c.le(&self.hi)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use ExtNat::{Fin, Inf};

    fn mono(v: &[u32]) -> Monomial {
        Monomial::new(v.to_vec())
    }

    #[test]
    fn face_leq_examples() {
        let a = Face::finite(&[2, 5]);
        let b = Face::new(vec![Fin(4), Inf]);
        assert!(face_leq(&a, &b).unwrap());
        assert!(face_leq(&a, &a).unwrap());
        let c = Face::finite(&[1, 0, 1]);
        let d = Face::new(vec![Fin(0), Inf, Fin(1)]);
        assert!(!face_leq(&c, &d).unwrap());
        assert_eq!(
            face_leq(&a, &c),
            Err(Error::DimensionMismatch { expected: 2, found: 3 })
        );
    }

    #[test]
    fn infpt_examples() {
        assert_eq!(infpt(&Face::new(vec![Fin(0), Inf, Fin(1)])), vec![1]);
        assert!(infpt(&Face::zero(4)).is_empty());
        assert_eq!(infpt(&Face::infinite(3)), vec![0, 1, 2]);
    }

    #[test]
    fn ext_nat_arith() {
        assert_eq!(Fin(2) + Fin(3), Fin(5));
        assert_eq!(Fin(2) + Inf, Inf);
        assert_eq!(Fin(u32::MAX) + Fin(1), Inf);
        assert!(Fin(u32::MAX) < Inf);
    }

    #[test]
    fn minimalize_examples() {
        assert_eq!(
            minimalize(&[mono(&[2, 0]), mono(&[2, 1])]).unwrap(),
            vec![mono(&[2, 0])]
        );
        let worked = vec![mono(&[2, 0, 0]), mono(&[1, 1, 0]), mono(&[0, 0, 2])];
        assert_eq!(minimalize(&worked).unwrap(), worked);
        let shuffled = vec![mono(&[0, 0, 2]), mono(&[1, 1, 0]), mono(&[2, 0, 0])];
        assert_eq!(minimalize(&shuffled).unwrap(), worked);
        assert_eq!(
            minimalize(&[mono(&[1, 1]), mono(&[1, 1])]).unwrap(),
            vec![mono(&[1, 1])]
        );
        assert_eq!(minimalize(&[mono(&[0, 0]), mono(&[1, 0])]), Err(Error::UnitIdeal));
    }

    #[test]
    fn ideal_display() {
        let i = MonomialIdeal::from_exponents(3, &[&[0, 0, 2], &[1, 1, 0], &[2, 0, 0]]).unwrap();
        assert_eq!(i.to_string(), "x1^2, x1*x2, x3^2");
        assert_eq!(MonomialIdeal::zero(RingContext::standard(2)).to_string(), "0");
    }

    #[test]
    fn ring_rejects_duplicates() {
        assert!(RingContext::new(["x", "y", "x"]).is_err());
        assert!(RingContext::new(Vec::<String>::new()).is_err());
    }

    #[test]
    fn intersection_of_principal_primes() {
        let a = MonomialIdeal::from_exponents(2, &[&[1, 0]]).unwrap();
        let b = MonomialIdeal::from_exponents(2, &[&[0, 1]]).unwrap();
        assert_eq!(a.intersect(&b).unwrap().gens(), &[mono(&[1, 1])]);
    }

    fn ext() -> impl Strategy<Value = ExtNat> {
        prop_oneof![4 => (0u32..4).prop_map(Fin), 1 => Just(Inf)]
    }

    fn face(n: usize) -> impl Strategy<Value = Face> {
        proptest::collection::vec(ext(), n).prop_map(Face::new)
    }

    proptest! {
        #[test]
        fn leq_is_partial_order(a in face(3), b in face(3), c in face(3)) {
            prop_assert!(a.le(&a));
            if a.le(&b) && b.le(&a) {
                prop_assert_eq!(&a, &b);
            }
            if a.le(&b) && b.le(&c) {
                prop_assert!(a.le(&c));
            }
        }

        #[test]
        fn leq_monotone_on_infpt(a in face(4), b in face(4)) {
            if a.le(&b) {
                let ib = b.infpt();
                prop_assert!(a.infpt().iter().all(|i| ib.contains(i)));
            }
        }

        #[test]
        fn minimalize_idempotent_and_order_free(
            rows in proptest::collection::vec(proptest::collection::vec(0u32..4, 3), 1..7)
        ) {
            let gens: Vec<Monomial> = rows.into_iter().filter(|r| r.iter().any(|&e| e > 0)).map(Monomial::new).collect();
            prop_assume!(!gens.is_empty());
            let m = minimalize(&gens).unwrap();
            prop_assert_eq!(minimalize(&m).unwrap(), m.clone());
            let mut rev = gens.clone();
            rev.reverse();
            prop_assert_eq!(minimalize(&rev).unwrap(), m.clone());
            // same ideal: every original generator is divisible by a kept one
            for g in &gens {
                prop_assert!(m.iter().any(|k| k.divides(g)));
            }
        }
    }
}
