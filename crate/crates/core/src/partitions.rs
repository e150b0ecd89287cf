//! Interval partitions of `Γ(I)` and their independent verification.
//!
//! A partition is certified rather than trusted: containment is checked
//! against the maximal faces, disjointness pairwise by the coordinate box
//! criterion, and coverage by exact equality of Hilbert series, which is
//! sound once the intervals are known to be disjoint subsets of `Γ`.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::hilbert::{hilbert_series, interval_series, series_equal, RationalSeries};
use crate::model::{ExtNat, Face, Interval, Monomial, MonomialIdeal};
use crate::multicomplex::maximal_faces;

pub const SPLIT_CAP: u128 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    pub ideal: MonomialIdeal,
    pub intervals: Vec<Interval>,
}

impl Partition {
    pub fn new(ideal: MonomialIdeal, intervals: Vec<Interval>) -> Self {
        Partition { ideal, intervals }
    }

    pub fn tops(&self) -> Vec<Face> {
        self.intervals.iter().map(|iv| iv.hi.clone()).collect()
    }

    /// Smallest `|infpt(hi)|` over the intervals (`n` for an empty list).
    pub fn min_inf(&self) -> usize {
        self.intervals
            .iter()
            .map(|iv| iv.hi.inf_count())
            .min()
            .unwrap_or(self.ideal.n())
    }

    pub fn series(&self) -> Result<RationalSeries> {
        self.intervals.iter().map(interval_series).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Diagnostic {
    DimensionMismatch { index: usize },
    InfiniteLowerEndpoint { index: usize, lo: Face },
    Inverted { index: usize },
    OutsideMulticomplex { index: usize, hi: Face },
    Overlap { first: usize, second: usize },
    CoverageMismatch { expected: RationalSeries, found: RationalSeries },
    CoverageUnavailable { reason: String },
    NotNice { index: usize, inf: usize, depth: usize },
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagnostic::DimensionMismatch { index } => {
                write!(f, "interval {index}: endpoints do not match the ring dimension")
            }
            Diagnostic::InfiniteLowerEndpoint { index, lo } => write!(
                f,
                "interval {index}: lower endpoint {lo} has an infinite coordinate; no partition can contain it"
            ),
            Diagnostic::Inverted { index } => write!(f, "interval {index}: lo is not below hi"),
            Diagnostic::OutsideMulticomplex { index, hi } => {
                write!(f, "interval {index}: top {hi} is not a face of the multicomplex")
            }
            Diagnostic::Overlap { first, second } => {
                write!(f, "intervals {first} and {second} intersect")
            }
            Diagnostic::CoverageMismatch { expected, found } => write!(
                f,
                "coverage: intervals sum to {found}, multicomplex has {expected}"
            ),
            Diagnostic::CoverageUnavailable { reason } => write!(f, "coverage not checked: {reason}"),
            Diagnostic::NotNice { index, inf, depth } => write!(
                f,
                "interval {index}: |infpt(hi)| = {inf} is below depth {depth}"
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub contained: bool,
    pub disjoint: bool,
    pub covers: bool,
    pub nice: bool,
    pub min_inf: usize,
    pub depth_used: usize,
    pub failures: Vec<Diagnostic>,
}

impl VerificationReport {
    /// Contained, disjoint and covering.
    pub fn is_partition(&self) -> bool {
        self.contained && self.disjoint && self.covers
    }

    pub fn all_ok(&self) -> bool {
        self.is_partition() && self.nice
    }
}

/// Conditions (i) `infpt(lo) = ∅` and (ii) `hi(i) = lo(i)` wherever `hi(i)` is finite.
pub fn is_stanley_interval(iv: &Interval) -> bool {
    iv.lo.is_finite()
        && iv.lo.len() == iv.hi.len()
        && iv
            .lo
            .coords()
            .iter()
            .zip(iv.hi.coords())
            .all(|(l, h)| h.is_inf() || l == h)
}

/// Writes `[lo, hi]` as the disjoint union of the Stanley intervals obtained
/// by fixing every finite coordinate of `hi` to a value in `[lo(k), hi(k)]`.
pub fn split_to_stanley(iv: &Interval) -> Result<Vec<Interval>> {
    if !iv.lo.is_finite() {
        return Err(Error::InfiniteLowerEndpoint(iv.lo.to_string()));
    }
    let iv = Interval::new(iv.lo.clone(), iv.hi.clone())?;
    let ranges: Vec<Option<(u32, u32)>> = iv
        .lo
        .coords()
        .iter()
        .zip(iv.hi.coords())
        .map(|(l, h)| Some((l.finite()?, h.finite()?)))
        .collect();
    let count = ranges
        .iter()
        .flatten()
        .fold(1u128, |acc, (l, h)| acc.saturating_mul(u128::from(h - l) + 1));
    if count > SPLIT_CAP {
        return Err(Error::CapExceeded {
            what: "Stanley split size",
            size: count,
            cap: SPLIT_CAP,
        });
    }
    let mut out = Vec::with_capacity(count as usize);
    let mut current: Vec<u32> = ranges
        .iter()
        .zip(iv.lo.coords())
        .map(|(r, l)| r.map_or_else(|| l.finite().unwrap(), |(a, _)| a))
        .collect();
    loop {
        let lo = Face::finite(&current);
        let hi = Face::new(
            current
                .iter()
                .zip(&ranges)
                .map(|(&c, r)| if r.is_some() { ExtNat::Fin(c) } else { ExtNat::Inf })
                .collect(),
        );
        out.push(Interval { lo, hi });
        let mut pos = 0;
        loop {
            if pos == current.len() {
                return Ok(out);
            }
            if let Some((a, b)) = ranges[pos] {
                if current[pos] < b {
                    current[pos] += 1;
                    break;
                }
                current[pos] = a;
            }
            pos += 1;
        }
    }
}

/// The `i`-subinterval `[lo(i), hi(i)]`.
pub fn i_subinterval(iv: &Interval, i: usize) -> Result<(ExtNat, ExtNat)> {
    if i >= iv.lo.len() {
        return Err(Error::IndexOutOfRange { index: i, n: iv.lo.len() });
    }
    Ok((iv.lo.get(i), iv.hi.get(i)))
}

/// Two intervals are disjoint exactly when some coordinate's subintervals are.
pub fn intervals_disjoint(a: &Interval, b: &Interval) -> Result<bool> {
    if a.dim() != b.dim() || a.hi.len() != a.lo.len() || b.hi.len() != b.lo.len() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    Ok((0..a.dim()).any(|i| a.lo.get(i).max(b.lo.get(i)) > a.hi.get(i).min(b.hi.get(i))))
}

/// Checks containment, disjointness, coverage and niceness for `depth`.
pub fn verify(p: &Partition, depth: usize) -> VerificationReport {
    let n = p.ideal.n();
    let mut failures = Vec::new();
    let maximal = maximal_faces(&p.ideal).expect("maximal faces exist for every ideal");

    let mut contained = true;
    for (index, iv) in p.intervals.iter().enumerate() {
        let problem = if iv.lo.len() != n || iv.hi.len() != n {
            Some(Diagnostic::DimensionMismatch { index })
        } else if !iv.lo.is_finite() {
            Some(Diagnostic::InfiniteLowerEndpoint { index, lo: iv.lo.clone() })
        } else if !iv.lo.le(&iv.hi) {
            Some(Diagnostic::Inverted { index })
        } else if !maximal.iter().any(|m| iv.hi.le(m)) {
            Some(Diagnostic::OutsideMulticomplex { index, hi: iv.hi.clone() })
        } else {
            None
        };
        if let Some(d) = problem {
            if contained {
                failures.push(d);
            }
            contained = false;
        }
    }

    let mut disjoint = true;
    if contained {
        'pairs: for i in 0..p.intervals.len() {
            for j in i + 1..p.intervals.len() {
                if !intervals_disjoint(&p.intervals[i], &p.intervals[j]).unwrap_or(false) {
                    failures.push(Diagnostic::Overlap { first: i, second: j });
                    disjoint = false;
                    break 'pairs;
                }
            }
        }
    }

    let mut covers = false;
    if contained && disjoint {
        match (hilbert_series(&p.ideal), p.series()) {
            (Ok(expected), Ok(found)) => {
                covers = series_equal(&expected, &found);
                if !covers {
                    failures.push(Diagnostic::CoverageMismatch { expected, found });
                }
            }
            (Err(e), _) | (_, Err(e)) => {
                failures.push(Diagnostic::CoverageUnavailable { reason: e.to_string() })
            }
        }
    }

    let min_inf = p.min_inf();
    let nice = min_inf >= depth;
    if !nice {
        if let Some(index) = p.intervals.iter().position(|iv| iv.hi.inf_count() < depth) {
            failures.push(Diagnostic::NotNice {
                index,
                inf: p.intervals[index].hi.inf_count(),
                depth,
            });
        }
    }

    VerificationReport {
        contained,
        disjoint,
        covers,
        nice,
        min_inf,
        depth_used: depth,
        failures,
    }
}

/// Replaces each `[a, b]` by `[c_e, e]` over the facets `e ∈ [a, b]`, where
/// `c_e` takes `e` on the finite coordinates of `b` and `a` elsewhere.
pub fn refine_to_facets(p: &Partition, facets: &[Face]) -> Result<Partition> {
    let mut out = Vec::new();
    for (index, iv) in p.intervals.iter().enumerate() {
        if !facets.contains(&iv.hi) {
            return Err(Error::Precondition(format!(
                "interval {index}: top {} is not a facet",
                iv.hi
            )));
        }
        let pieces: Vec<Interval> = facets
            .iter()
            .filter(|e| iv.contains(e))
            .map(|e| {
                let lo = Face::new(
                    iv.hi
                        .coords()
                        .iter()
                        .zip(e.coords())
                        .zip(iv.lo.coords())
                        .map(|((b, &ev), &av)| if b.is_inf() { av } else { ev })
                        .collect(),
                );
                Interval { lo, hi: e.clone() }
            })
            .collect();
        let whole = interval_series(iv)?;
        let parts: RationalSeries = pieces.iter().map(interval_series).sum::<Result<_>>()?;
        if !series_equal(&whole, &parts) {
            return Err(Error::Precondition(format!(
                "interval {index}: the facets inside {iv} do not tile it"
            )));
        }
        out.extend(pieces);
    }
    Ok(Partition::new(p.ideal.clone(), out))
}

/// The three conditions that are equivalent for Cohen–Macaulay quotients.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    /// (a) every top has `|infpt| ≥ depth`
    pub nice: bool,
    /// (b) every top is a facet
    pub tops_subset_of_facets: bool,
    /// (c) (b) and every maximal face is a top
    pub tops_contain_all_maximal: bool,
}

impl Classification {
    pub fn all_equal(&self) -> bool {
        self.nice == self.tops_subset_of_facets && self.tops_subset_of_facets == self.tops_contain_all_maximal
    }
}

pub fn classify(p: &Partition, depth: usize, facets: &[Face]) -> Result<Classification> {
    let report = verify(p, depth);
    if !report.is_partition() {
        return Err(Error::Precondition(format!(
            "classify needs a verified partition: {}",
            report
                .failures
                .first()
                .map_or_else(|| "unknown failure".to_string(), ToString::to_string)
        )));
    }
    let tops: BTreeSet<Face> = p.tops().into_iter().collect();
    let maximal = maximal_faces(&p.ideal)?;
    let subset = tops.iter().all(|t| facets.contains(t));
    Ok(Classification {
        nice: report.nice,
        tops_subset_of_facets: subset,
        tops_contain_all_maximal: subset && maximal.iter().all(|m| tops.contains(m)),
    })
}

/// Stanley spaces `x^{lo} K[Z]` with `Z = infpt(hi)`.
pub fn partition_to_decomposition(p: &Partition) -> Result<Vec<(Monomial, Vec<usize>)>> {
    p.intervals
        .iter()
        .map(|iv| {
            if !is_stanley_interval(iv) {
                return Err(Error::NonStanleyInterval {
                    lo: iv.lo.to_string(),
                    hi: iv.hi.to_string(),
                });
            }
            Ok((iv.lo.to_monomial().expect("finite lower endpoint"), iv.hi.infpt()))
        })
        .collect()
}
