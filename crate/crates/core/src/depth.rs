//! Depth of `S/I` from total Betti numbers of `I`.
//!
//! `β_{i,a}(I)` is the rank of `H̃_{i−1}` of the upper Koszul complex
//! `K^a(I) = {τ ⊆ supp(a) squarefree : x^{a−τ} ∈ I}`, and only lcms of
//! generator subsets can carry nonzero Betti numbers. Then
//! `pd(S/I) = 1 + max{i : β_i(I) ≠ 0}` and `depth = n − pd`.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::homology::{reduced_homology_ranks, Field, SimplicialComplexExplicit};
use crate::model::{grlex_cmp, Monomial, MonomialIdeal};
use crate::multicomplex::{assoc_primes, krull_dim};

pub const GENERATOR_CAP: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DepthReport {
    pub depth: usize,
    pub projective_dimension: usize,
    pub dim: usize,
    pub cohen_macaulay: bool,
    pub field_char: u64,
}

pub(crate) fn check_generator_cap(ideal: &MonomialIdeal) -> Result<()> {
    let s = ideal.gens().len();
    if s > GENERATOR_CAP {
        return Err(Error::CapExceeded {
            what: "generator count",
            size: s as u128,
            cap: GENERATOR_CAP as u128,
        });
    }
    Ok(())
}

/// Distinct lcms of nonempty generator subsets, in graded order.
pub fn lcm_degrees(ideal: &MonomialIdeal) -> Result<Vec<Monomial>> {
    check_generator_cap(ideal)?;
    fn walk(gens: &[Monomial], acc: &Monomial, out: &mut HashSet<Monomial>) {
        for (k, g) in gens.iter().enumerate() {
            let l = acc.lcm(g);
            walk(&gens[k + 1..], &l, out);
            out.insert(l);
        }
    }
    let mut out = HashSet::new();
    walk(ideal.gens(), &Monomial::one(ideal.n()), &mut out);
    let mut v: Vec<Monomial> = out.into_iter().collect();
    v.sort_by(|a, b| grlex_cmp(a.exponents(), b.exponents()));
    Ok(v)
}

/// `K^a(I)` on the vertex set `supp(a)`; vertex `k` is the `k`-th variable of
/// the support.
pub fn upper_koszul_complex(ideal: &MonomialIdeal, a: &Monomial) -> Result<SimplicialComplexExplicit> {
    if !ideal.contains(a) {
        return Err(Error::NotInIdeal(a.display(ideal.ring()).to_string()));
    }
    let support = a.support();
    if support.len() > 20 {
        return Err(Error::CapExceeded {
            what: "Koszul vertex count",
            size: support.len() as u128,
            cap: 20,
        });
    }
    let faces = (0u64..1 << support.len()).filter(|&mask| {
        let mut e = a.exponents().to_vec();
        for (k, &var) in support.iter().enumerate() {
            if mask >> k & 1 == 1 {
                e[var] -= 1;
            }
        }
        ideal.contains(&Monomial::new(e))
    });
    Ok(SimplicialComplexExplicit::from_faces(support.len(), faces))
}

/// Total Betti numbers `β_i(I)`, zero entries omitted.
pub fn betti_total(ideal: &MonomialIdeal, field: Field) -> Result<BTreeMap<usize, usize>> {
    if ideal.is_zero() {
        return Ok(BTreeMap::new());
    }
    let degrees = lcm_degrees(ideal)?;
    let per_degree: Vec<Vec<usize>> = degrees
        .par_iter()
        .map(|a| reduced_homology_ranks(&upper_koszul_complex(ideal, a)?, field))
        .collect::<Result<_>>()?;
    let mut betti = BTreeMap::new();
    for ranks in per_degree {
        // ranks[k] is H̃_{k−1}, contributing to β_k
        for (k, &r) in ranks.iter().enumerate() {
            if r > 0 {
                *betti.entry(k).or_insert(0) += r;
            }
        }
    }
    Ok(betti)
}

pub fn depth_report(ideal: &MonomialIdeal, field: Field) -> Result<DepthReport> {
    let n = ideal.n();
    let dim = krull_dim(ideal)?;
    let projective_dimension = if ideal.is_zero() {
        0
    } else {
        let betti = betti_total(ideal, field)?;
        1 + betti.keys().next_back().copied().unwrap_or(0)
    };
    let depth = n - projective_dimension;
    Ok(DepthReport {
        depth,
        projective_dimension,
        dim,
        cohen_macaulay: depth == dim,
        field_char: field.characteristic(),
    })
}

/// `min_{P ∈ Ass} (n − |P|)`, the upper bound on depth from associated primes.
pub fn depth_upper_bound(ideal: &MonomialIdeal) -> Result<usize> {
    Ok(assoc_primes(ideal)?
        .iter()
        .map(|p| ideal.n() - p.len())
        .min()
        .unwrap_or(ideal.n()))
}
