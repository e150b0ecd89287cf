//! The dictionary between monomial ideals and multicomplexes in `(ℕ ∪ {∞})ⁿ`.
//!
//! `Γ(I)` is the downward-closed set of faces lying below a maximal face.
//! Maximal faces correspond one-to-one with the irredundant irreducible
//! components of `I`: the component `(x_i^{e_i} : i ∈ A)` gives the face with
//! `e_i − 1` on `A` and `∞` elsewhere.

use std::collections::{BTreeMap, HashSet};

use crate::error::{Error, Result};
use crate::model::{face_leq, ExtNat, Face, Monomial, MonomialIdeal, RingContext};

pub const DEFAULT_FACET_CAP: u128 = 10_000_000;

/// An ideal generated by pure powers `x_i^{e_i}`, `i ∈ A`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IrreducibleComponent {
    pure_powers: BTreeMap<usize, u32>,
}

impl IrreducibleComponent {
    pub fn new(pure_powers: BTreeMap<usize, u32>) -> Result<Self> {
        if pure_powers.is_empty() {
            return Err(Error::Precondition("an irreducible component needs a generator".into()));
        }
        if pure_powers.values().any(|&e| e == 0) {
            return Err(Error::UnitIdeal);
        }
        Ok(IrreducibleComponent { pure_powers })
    }

    pub fn pure_powers(&self) -> &BTreeMap<usize, u32> {
        &self.pure_powers
    }

    /// Variable set of the radical.
    pub fn radical(&self) -> Vec<usize> {
        self.pure_powers.keys().copied().collect()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.pure_powers.iter().any(|(&i, &e)| m.exponents()[i] >= e)
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &IrreducibleComponent) -> bool {
        self.pure_powers
            .iter()
            .all(|(i, &e)| other.pure_powers.get(i).is_some_and(|&f| f <= e))
    }

    pub fn maximal_face(&self, n: usize) -> Face {
        let mut coords = vec![ExtNat::Inf; n];
        for (&i, &e) in &self.pure_powers {
            coords[i] = ExtNat::Fin(e - 1);
        }
        Face::new(coords)
    }

    pub fn to_ideal(&self, ring: &RingContext) -> MonomialIdeal {
        let gens = self
            .pure_powers
            .iter()
            .map(|(&i, &e)| Monomial::pure_power(ring.n(), i, e))
            .collect();
        MonomialIdeal::new(ring.clone(), gens).expect("pure powers with positive exponents")
    }
}

fn split_recursive(
    gens: Vec<Monomial>,
    seen: &mut HashSet<Vec<Monomial>>,
    out: &mut Vec<IrreducibleComponent>,
) {
    if !seen.insert(gens.clone()) {
        return;
    }
    let mixed = gens.iter().find(|g| g.support().len() >= 2);
    let Some(u) = mixed else {
        // minimal generators that are all pure powers: at most one per variable
        let map = gens
            .iter()
            .map(|g| {
                let i = g.support()[0];
                (i, g.exponents()[i])
            })
            .collect();
        out.push(IrreducibleComponent { pure_powers: map });
        return;
    };
    let n = u.len();
    let i = u.support()[0];
    let e = u.exponents()[i];
    let pure = Monomial::pure_power(n, i, e);
    let mut rest = u.exponents().to_vec();
    rest[i] = 0;
    let rest = Monomial::new(rest);
    // I = (I + x_i^e) ∩ (I + u / x_i^e)
    for extra in [pure, rest] {
        let mut g = gens.clone();
        g.push(extra);
        let g = crate::model::minimalize(&g).expect("no unit generator is introduced");
        split_recursive(g, seen, out);
    }
}

/// Irredundant decomposition of `I` into ideals generated by pure powers,
/// sorted by their maximal faces.
pub fn irreducible_decomposition(ideal: &MonomialIdeal) -> Result<Vec<IrreducibleComponent>> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let mut raw = Vec::new();
    split_recursive(ideal.gens().to_vec(), &mut HashSet::new(), &mut raw);

    let n = ideal.n();
    raw.sort_by_key(|c| c.maximal_face(n));
    raw.dedup();
    // An irreducible component contains ⋂_{j≠i} Q_j exactly when it contains
    // some single Q_j, so redundancy reduces to pairwise containment.
    let kept: Vec<IrreducibleComponent> = raw
        .iter()
        .enumerate()
        .filter(|(i, q)| {
            !raw
                .iter()
                .enumerate()
                .any(|(j, other)| j != *i && other.is_subset_of(q))
        })
        .map(|(_, q)| q.clone())
        .collect();
    Ok(kept)
}

/// One maximal face per irreducible component; `(∞,…,∞)` for the zero ideal.
pub fn maximal_faces(ideal: &MonomialIdeal) -> Result<Vec<Face>> {
    if ideal.is_zero() {
        return Ok(vec![Face::infinite(ideal.n())]);
    }
    let n = ideal.n();
    let mut faces: Vec<Face> = irreducible_decomposition(ideal)?
        .iter()
        .map(|c| c.maximal_face(n))
        .collect();
    faces.sort();
    Ok(faces)
}

fn is_member(maximal: &[Face], a: &Face) -> bool {
    maximal.iter().any(|m| a.le(m))
}

fn is_facet(maximal: &[Face], b: &Face) -> bool {
    let inf = b.inf_count();
    let mut above = maximal.iter().filter(|m| b.le(m)).peekable();
    above.peek().is_some() && above.all(|m| m.inf_count() == inf)
}

/// Facets by enumeration of the candidate set `𝓑`, where each coordinate is
/// either `∞` or below `r_i`.
pub fn facets_with_cap(ideal: &MonomialIdeal, cap: u128) -> Result<Vec<Face>> {
    let maximal = maximal_faces(ideal)?;
    facets_from_maximal(&maximal, &ideal.exponent_bounds(), cap)
}

pub fn facets(ideal: &MonomialIdeal) -> Result<Vec<Face>> {
    facets_with_cap(ideal, DEFAULT_FACET_CAP)
}

fn facets_from_maximal(maximal: &[Face], bounds: &[u32], cap: u128) -> Result<Vec<Face>> {
    let size = bounds
        .iter()
        .fold(1u128, |acc, &r| acc.saturating_mul(u128::from(r) + 1));
    if size > cap {
        return Err(Error::CapExceeded {
            what: "facet candidate space",
            size,
            cap,
        });
    }
    let choices: Vec<Vec<ExtNat>> = bounds
        .iter()
        .map(|&r| (0..r).map(ExtNat::Fin).chain([ExtNat::Inf]).collect())
        .collect();
    let mut found = Vec::new();
    let mut idx = vec![0usize; bounds.len()];
    loop {
        let b = Face::new(idx.iter().zip(&choices).map(|(&k, c)| c[k]).collect());
        if is_facet(maximal, &b) {
            found.push(b);
        }
        // odometer
        let mut pos = 0;
        loop {
            if pos == idx.len() {
                found.sort();
                return Ok(found);
            }
            idx[pos] += 1;
            if idx[pos] < choices[pos].len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// Maximum size of the infinite part of a maximal face.
pub fn krull_dim(ideal: &MonomialIdeal) -> Result<usize> {
    Ok(maximal_faces(ideal)?
        .iter()
        .map(Face::inf_count)
        .max()
        .unwrap_or(0))
}

/// Associated primes as variable sets; the zero ideal has only the zero prime.
pub fn assoc_primes(ideal: &MonomialIdeal) -> Result<Vec<Vec<usize>>> {
    if ideal.is_zero() {
        return Ok(vec![Vec::new()]);
    }
    let mut primes: Vec<Vec<usize>> = irreducible_decomposition(ideal)?
        .iter()
        .map(IrreducibleComponent::radical)
        .collect();
    primes.sort();
    primes.dedup();
    Ok(primes)
}

/// `Γ(I)` with its maximal faces and facets precomputed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MulticomplexView {
    ideal: MonomialIdeal,
    maximal_faces: Vec<Face>,
    facets: Vec<Face>,
}

impl MulticomplexView {
    pub fn new(ideal: MonomialIdeal) -> Result<Self> {
        Self::with_cap(ideal, DEFAULT_FACET_CAP)
    }

    pub fn with_cap(ideal: MonomialIdeal, cap: u128) -> Result<Self> {
        let maximal_faces = maximal_faces(&ideal)?;
        let facets = facets_from_maximal(&maximal_faces, &ideal.exponent_bounds(), cap)?;
        Ok(MulticomplexView {
            ideal,
            maximal_faces,
            facets,
        })
    }

    /// `Γ(m)`, the smallest multicomplex containing `m`.
    pub fn of_face(ring: &RingContext, m: &Face) -> Result<Self> {
        if m.len() != ring.n() {
            return Err(Error::DimensionMismatch {
                expected: ring.n(),
                found: m.len(),
            });
        }
        let gens: Vec<Monomial> = m
            .coords()
            .iter()
            .enumerate()
            .filter_map(|(i, v)| v.finite().map(|e| Monomial::pure_power(ring.n(), i, e + 1)))
            .collect();
        let ideal = if gens.is_empty() {
            MonomialIdeal::zero(ring.clone())
        } else {
            MonomialIdeal::new(ring.clone(), gens)?
        };
        Self::new(ideal)
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn maximal_faces(&self) -> &[Face] {
        &self.maximal_faces
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn contains(&self, a: &Face) -> bool {
        is_member(&self.maximal_faces, a)
    }

    pub fn is_facet(&self, b: &Face) -> bool {
        is_facet(&self.maximal_faces, b)
    }
}

/// `a ∈ Γ`: some maximal face lies above `a`.
pub fn member(view: &MulticomplexView, a: &Face) -> Result<bool> {
    for m in &view.maximal_faces {
        if face_leq(a, m)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// `I(⋃ Γ_j) = ⋂ I(Γ_j)`.
pub fn ideal_of_union(views: &[MulticomplexView]) -> Result<MonomialIdeal> {
    let (first, rest) = views.split_first().ok_or(Error::Empty("multicomplex list"))?;
    let mut acc = first.ideal.clone();
    for v in rest {
        // the zero ideal absorbs everything in an intersection
        if acc.is_zero() || v.ideal.is_zero() {
            acc = MonomialIdeal::zero(acc.ring().clone());
            continue;
        }
        acc = acc.intersect(&v.ideal)?;
    }
    Ok(acc)
}
