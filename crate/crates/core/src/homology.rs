//! Reduced simplicial homology of small explicit complexes, with exact rank
//! computation over `ℚ` (fraction-free elimination) or a prime field.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Largest boundary matrix side accepted by the rank routines.
pub const MATRIX_CAP: usize = 2000;

/// Coefficient field for homology and everything derived from it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Field {
    #[default]
    Rational,
    Prime(u64),
}

impl Field {
    pub fn prime(p: u64) -> Result<Self> {
        if p < 2 || p > u64::from(u32::MAX) || !(2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d)) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    /// 0 for `ℚ`, `p` for `GF(p)`.
    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => f.write_str("Q"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

/// A simplicial complex on vertices `0..vertex_count`, stored by its facets
/// as vertex bitmasks. A complex with no facets is the void complex; the
/// complex `{∅}` has the single facet `∅`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplexExplicit {
    vertex_count: usize,
    facets: Vec<u64>,
}

impl SimplicialComplexExplicit {
    pub fn new(vertex_count: usize, facet_list: &[Vec<usize>]) -> Result<Self> {
        if vertex_count > 64 {
            return Err(Error::CapExceeded {
                what: "vertex count",
                size: vertex_count as u128,
                cap: 64,
            });
        }
        let mut masks = Vec::with_capacity(facet_list.len());
        for f in facet_list {
            let mut m = 0u64;
            for &v in f {
                if v >= vertex_count {
                    return Err(Error::IndexOutOfRange { index: v, n: vertex_count });
                }
                m |= 1 << v;
            }
            masks.push(m);
        }
        Ok(Self::from_faces(vertex_count, masks))
    }

    /// Keeps the inclusion-maximal masks of `faces`.
    pub fn from_faces(vertex_count: usize, faces: impl IntoIterator<Item = u64>) -> Self {
        let all: BTreeSet<u64> = faces.into_iter().collect();
        let facets = all
            .iter()
            .copied()
            .filter(|&f| !all.iter().any(|&g| g != f && g & f == f))
            .collect();
        SimplicialComplexExplicit { vertex_count, facets }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn facet_list(&self) -> Vec<Vec<usize>> {
        self.facets
            .iter()
            .map(|&m| (0..self.vertex_count).filter(|v| m >> v & 1 == 1).collect())
            .collect()
    }

    /// Every face, including `∅` when the complex is not void.
    pub fn faces(&self) -> BTreeSet<u64> {
        let mut out = BTreeSet::new();
        for &f in &self.facets {
            // enumerate submasks of f
            let mut s = f;
            loop {
                out.insert(s);
                if s == 0 {
                    break;
                }
                s = (s - 1) & f;
            }
        }
        out
    }
}

/// Ranks of reduced homology; entry `k` is the rank in dimension `k − 1`.
/// The void complex yields an empty list (every rank is zero).
pub fn reduced_homology_ranks(complex: &SimplicialComplexExplicit, field: Field) -> Result<Vec<usize>> {
    if complex.is_void() {
        return Ok(Vec::new());
    }
    let faces = complex.faces();
    let top = faces.iter().map(|f| f.count_ones() as usize).max().unwrap_or(0);
    // by_size[s] = faces with s vertices, i.e. dimension s − 1
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); top + 1];
    for &f in &faces {
        by_size[f.count_ones() as usize].push(f);
    }
    // ranks[s] = rank of the boundary from size-s faces to size-(s−1) faces
    let mut ranks = vec![0usize; top + 2];
    for s in 1..=top {
        let m = boundary_matrix(&by_size[s - 1], &by_size[s]);
        ranks[s] = matrix_rank(m, field)?;
    }
    Ok((0..=top)
        .map(|s| by_size[s].len() - ranks[s] - ranks[s + 1])
        .collect())
}

/// Rows indexed by `lower`, columns by `upper`, with the alternating sign
/// given by the position of the removed vertex.
fn boundary_matrix(lower: &[u64], upper: &[u64]) -> Vec<Vec<i64>> {
    let index: HashMap<u64, usize> = lower.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let mut m = vec![vec![0i64; upper.len()]; lower.len()];
    for (c, &f) in upper.iter().enumerate() {
        let mut pos = 0;
        let mut bits = f;
        while bits != 0 {
            let v = bits.trailing_zeros();
            bits &= bits - 1;
            let sign = if pos % 2 == 0 { 1 } else { -1 };
            m[index[&(f & !(1u64 << v))]][c] = sign;
            pos += 1;
        }
    }
    m
}

fn matrix_rank(m: Vec<Vec<i64>>, field: Field) -> Result<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    if rows == 0 || cols == 0 {
        return Ok(0);
    }
    if rows > MATRIX_CAP || cols > MATRIX_CAP {
        return Err(Error::CapExceeded {
            what: "boundary matrix side",
            size: rows.max(cols) as u128,
            cap: MATRIX_CAP as u128,
        });
    }
    // eliminate along the shorter side
    let m = if rows > cols { transpose(&m) } else { m };
    Ok(match field {
        Field::Prime(p) => rank_mod_p(m, p),
        Field::Rational => rank_bareiss_i128(&m).unwrap_or_else(|| rank_bareiss_big(&m)),
    })
}

fn transpose(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let cols = m[0].len();
    (0..cols).map(|c| m.iter().map(|row| row[c]).collect()).collect()
}

pub fn rank_mod_p(m: Vec<Vec<i64>>, p: u64) -> usize {
    let p = p as i128;
    let mut a: Vec<Vec<i128>> = m
        .into_iter()
        .map(|r| r.into_iter().map(|x| (x as i128).rem_euclid(p)).collect())
        .collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let inv = mod_pow(a[rank][col], p - 2, p);
        for x in &mut a[rank][col..] {
            *x = *x * inv % p;
        }
        let (upper, lower) = a.split_at_mut(rank + 1);
        let pivot = &upper[rank];
        for row in lower.iter_mut() {
            let f = row[col];
            if f == 0 {
                continue;
            }
            for (x, &y) in row[col..].iter_mut().zip(&pivot[col..]) {
                *x = (*x - f * y).rem_euclid(p);
            }
        }
        rank += 1;
    }
    rank
}

fn mod_pow(mut b: i128, mut e: i128, p: i128) -> i128 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Fraction-free elimination; `None` if an intermediate minor overflows.
pub fn rank_bareiss_i128(m: &[Vec<i64>]) -> Option<usize> {
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev: i128 = 1;
    let mut rank = 0;
    for col in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let pv = a[rank][col];
        let (top, below) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in below.iter_mut() {
            let f = row[col];
            for j in col + 1..cols {
                let x = pv.checked_mul(row[j])?.checked_sub(f.checked_mul(pivot_row[j])?)?;
                row[j] = x / prev;
            }
            row[col] = 0;
        }
        prev = pv;
        rank += 1;
    }
    Some(rank)
}

pub fn rank_bareiss_big(m: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, piv);
        let pv = a[rank][col].clone();
        let (top, below) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in below.iter_mut() {
            let f = row[col].clone();
            for j in col + 1..cols {
                row[j] = (&pv * &row[j] - &f * &pivot_row[j]) / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = pv;
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn two_points() {
        let c = SimplicialComplexExplicit::new(2, &[vec![0], vec![1]]).unwrap();
        assert_eq!(reduced_homology_ranks(&c, Field::Rational).unwrap(), vec![0, 1]);
    }

    #[test]
    fn hollow_triangle() {
        let c = SimplicialComplexExplicit::new(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        assert_eq!(reduced_homology_ranks(&c, Field::Rational).unwrap(), vec![0, 0, 1]);
    }

    #[test]
    fn empty_and_void_conventions() {
        let empty = SimplicialComplexExplicit::new(0, &[vec![]]).unwrap();
        assert_eq!(reduced_homology_ranks(&empty, Field::Rational).unwrap(), vec![1]);
        let void = SimplicialComplexExplicit::new(3, &[]).unwrap();
        assert!(reduced_homology_ranks(&void, Field::Rational).unwrap().is_empty());
    }

    #[test]
    fn filled_simplex_is_acyclic() {
        let c = SimplicialComplexExplicit::new(4, &[vec![0, 1, 2, 3]]).unwrap();
        assert!(reduced_homology_ranks(&c, Field::Rational).unwrap().iter().all(|&r| r == 0));
    }

    #[test]
    fn projective_plane_depends_on_characteristic() {
        // 6-vertex triangulation of RP²
        let tris = [
            [0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 5, 1],
            [1, 2, 4], [2, 3, 5], [3, 4, 1], [4, 5, 2], [5, 1, 3],
        ];
        let facets: Vec<Vec<usize>> = tris.iter().map(|t| t.to_vec()).collect();
        let c = SimplicialComplexExplicit::new(6, &facets).unwrap();
        assert_eq!(reduced_homology_ranks(&c, Field::Rational).unwrap(), vec![0, 0, 0, 0]);
        let gf2 = Field::prime(2).unwrap();
        assert_eq!(reduced_homology_ranks(&c, gf2).unwrap(), vec![0, 0, 1, 1]);
    }

    #[test]
    fn prime_validation() {
        assert!(Field::prime(7).is_ok());
        assert_eq!(Field::prime(9), Err(Error::NotPrime(9)));
        assert_eq!(Field::prime(1), Err(Error::NotPrime(1)));
    }

    #[test]
    fn facet_list_drops_non_maximal() {
        let c = SimplicialComplexExplicit::new(3, &[vec![0, 1], vec![0], vec![2]]).unwrap();
        assert_eq!(c.facet_list(), vec![vec![0, 1], vec![2]]);
    }

    proptest! {
        #[test]
        fn bareiss_agrees_with_big_and_large_prime(
            rows in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 6), 1..7)
        ) {
            let small = rank_bareiss_i128(&rows).unwrap();
            prop_assert_eq!(small, rank_bareiss_big(&rows));
            // rank mod p never exceeds the rational rank
            prop_assert!(rank_mod_p(rows.clone(), 1_000_003) <= small);
        }

        #[test]
        fn euler_characteristic(
            masks in proptest::collection::vec(1u64..(1 << 6), 1..6)
        ) {
            let c = SimplicialComplexExplicit::from_faces(6, masks);
            let ranks = reduced_homology_ranks(&c, Field::Rational).unwrap();
            let faces = c.faces();
            // reduced Euler characteristic: Σ (−1)^d f_d over d ≥ −1
            let chi: i64 = faces.iter().map(|f| if f.count_ones() % 2 == 1 { 1 } else { -1 }).sum();
            let h: i64 = ranks.iter().enumerate().map(|(k, &r)| if k % 2 == 0 { -(r as i64) } else { r as i64 }).sum();
            prop_assert_eq!(chi, h);
        }
    }
}
