//! Polarization of monomials, ideals, faces and partitions.
//!
//! With `r_i` the largest exponent of `x_i` among the generators, `x_i^a`
//! becomes `x_{i1} ⋯ x_{ia}` in the ring `T` on the `r = Σ r_i` variables
//! `x_{ij}`, ordered lexicographically by `(i, j)`. A variable dividing no
//! generator is treated as `r_i = 1` and simply renamed to `x_{i1}`.

use std::collections::BTreeSet;

use crate::depth::depth_report;
use crate::error::{Error, Result};
use crate::homology::Field;
use crate::model::{ExtNat, Face, Interval, Monomial, MonomialIdeal, RingContext};
use crate::multicomplex::facets;
use crate::partitions::{refine_to_facets, verify, Partition, VerificationReport};
use crate::sdepth::{nice_partition, SolverOptions};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolarizationMap {
    source: RingContext,
    r: Vec<u32>,
    offsets: Vec<usize>,
    target: RingContext,
}

impl PolarizationMap {
    pub fn for_ideal(ideal: &MonomialIdeal) -> Result<Self> {
        let r: Vec<u32> = ideal.exponent_bounds().into_iter().map(|x| x.max(1)).collect();
        Self::with_bounds(ideal.ring().clone(), r)
    }

    pub fn with_bounds(source: RingContext, r: Vec<u32>) -> Result<Self> {
        if r.len() != source.n() {
            return Err(Error::DimensionMismatch {
                expected: source.n(),
                found: r.len(),
            });
        }
        if r.contains(&0) {
            return Err(Error::Precondition("every r_i must be at least 1".into()));
        }
        let mut offsets = Vec::with_capacity(r.len());
        let mut names = Vec::new();
        for (i, &ri) in r.iter().enumerate() {
            offsets.push(names.len());
            for j in 1..=ri {
                names.push(format!("{}_{j}", source.name(i)));
            }
        }
        let target = RingContext::new(names)?;
        Ok(PolarizationMap {
            source,
            r,
            offsets,
            target,
        })
    }

    pub fn source(&self) -> &RingContext {
        &self.source
    }

    pub fn target(&self) -> &RingContext {
        &self.target
    }

    pub fn r(&self) -> &[u32] {
        &self.r
    }

    /// Number of new variables, `r − n`.
    pub fn n1(&self) -> usize {
        self.target.n() - self.source.n()
    }

    /// Target coordinate of `x_{ij}` (`i` 0-based, `j` 1-based).
    pub fn index(&self, i: usize, j: u32) -> usize {
        self.offsets[i] + (j as usize - 1)
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.source.n() {
            return Err(Error::DimensionMismatch {
                expected: self.source.n(),
                found: len,
            });
        }
        Ok(())
    }
}

/// `u ↦ Π_i x_{i1} ⋯ x_{i a_i}`.
pub fn polarize_monomial(u: &Monomial, pm: &PolarizationMap) -> Result<Monomial> {
    pm.check_len(u.len())?;
    let mut out = vec![0u32; pm.target.n()];
    for (i, &a) in u.exponents().iter().enumerate() {
        if a > pm.r[i] {
            return Err(Error::ExceedsBound { var: i, value: a, bound: pm.r[i] });
        }
        for j in 1..=a {
            out[pm.index(i, j)] = 1;
        }
    }
    Ok(Monomial::new(out))
}

pub fn polarize_ideal(ideal: &MonomialIdeal) -> Result<(MonomialIdeal, PolarizationMap)> {
    let pm = PolarizationMap::for_ideal(ideal)?;
    let gens = ideal
        .gens()
        .iter()
        .map(|g| polarize_monomial(g, &pm))
        .collect::<Result<Vec<_>>>()?;
    let pol = if gens.is_empty() {
        MonomialIdeal::zero(pm.target.clone())
    } else {
        MonomialIdeal::new(pm.target.clone(), gens)?
    };
    Ok((pol, pm))
}

/// `β(b)(ij) = 0` if `b(i)` is finite and `j = b(i) + 1`, `∞` otherwise.
/// Defined only when every finite `b(i)` is below `r_i`.
pub fn beta(b: &Face, pm: &PolarizationMap) -> Result<Face> {
    pm.check_len(b.len())?;
    let mut out = vec![ExtNat::Inf; pm.target.n()];
    for (i, v) in b.coords().iter().enumerate() {
        if let Some(x) = v.finite() {
            if x >= pm.r[i] {
                return Err(Error::OutsideBeta { face: b.to_string() });
            }
            out[pm.index(i, x + 1)] = ExtNat::Fin(0);
        }
    }
    Ok(Face::new(out))
}

/// `γ(a)(ij) = 1` if `j ≤ a(i)`, `0` otherwise. Defined for finite `a ≤ r`.
pub fn gamma(a: &Face, pm: &PolarizationMap) -> Result<Face> {
    pm.check_len(a.len())?;
    let mut out = vec![ExtNat::Fin(0); pm.target.n()];
    for (i, v) in a.coords().iter().enumerate() {
        let Some(x) = v.finite() else {
            return Err(Error::InfiniteLowerEndpoint(a.to_string()));
        };
        if x > pm.r[i] {
            return Err(Error::ExceedsBound { var: i, value: x, bound: pm.r[i] });
        }
        for j in 1..=x {
            out[pm.index(i, j)] = ExtNat::Fin(1);
        }
    }
    Ok(Face::new(out))
}

/// Whether `β` maps the facets of `Γ(I)` bijectively onto those of `Γ(Iᵖ)`.
pub fn check_facet_bijection(ideal: &MonomialIdeal) -> Result<bool> {
    let (pol, pm) = polarize_ideal(ideal)?;
    let source = facets(ideal)?;
    let target: BTreeSet<Face> = facets(&pol)?.into_iter().collect();
    let image: BTreeSet<Face> = source.iter().map(|b| beta(b, &pm)).collect::<Result<_>>()?;
    Ok(image.len() == source.len() && image == target)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolarizedPartition {
    pub map: PolarizationMap,
    pub partition: Partition,
    pub input_depth: usize,
    pub output_depth: usize,
    pub report: VerificationReport,
}

/// Maps each `[a, b]` to `[γ(a), β(b)]` and certifies the result on `Γ(Iᵖ)`.
///
/// Requires a nice partition of `Γ(I)` whose set of tops is exactly the
/// facet set. Any failure of the output to verify is returned as
/// [`Error::VerificationFailed`].
pub fn polarize_partition(p: &Partition, field: Field) -> Result<PolarizedPartition> {
    let ideal = &p.ideal;
    let input_depth = depth_report(ideal, field)?.depth;
    let input_report = verify(p, input_depth);
    if !input_report.all_ok() {
        return Err(Error::Precondition(format!(
            "input is not a nice partition: {}",
            input_report.failures.first().map_or_else(String::new, ToString::to_string)
        )));
    }
    let facet_set: BTreeSet<Face> = facets(ideal)?.into_iter().collect();
    let tops: BTreeSet<Face> = p.tops().into_iter().collect();
    if tops != facet_set {
        return Err(Error::Precondition(
            "the set of interval tops must equal the facet set".into(),
        ));
    }

    let (pol, pm) = polarize_ideal(ideal)?;
    let intervals = p
        .intervals
        .iter()
        .map(|iv| Ok(Interval { lo: gamma(&iv.lo, &pm)?, hi: beta(&iv.hi, &pm)? }))
        .collect::<Result<Vec<_>>>()?;
    let partition = Partition::new(pol, intervals);
    let output_depth = depth_report(&partition.ideal, field)?.depth;
    let report = verify(&partition, output_depth);
    if !report.all_ok() {
        return Err(Error::VerificationFailed(
            report
                .failures
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join("; "),
        ));
    }
    Ok(PolarizedPartition {
        map: pm,
        partition,
        input_depth,
        output_depth,
        report,
    })
}

/// Output of the full pipeline: solver, facet refinement, polarization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transfer {
    pub ideal: MonomialIdeal,
    pub input_partition: Partition,
    pub polarized: PolarizedPartition,
}

impl Transfer {
    pub fn n1(&self) -> usize {
        self.polarized.map.n1()
    }
}

/// Finds a nice partition of `Γ(I)`, refines it so its tops are exactly the
/// facets, and polarizes it.
pub fn transfer(ideal: &MonomialIdeal, field: Field, opts: &SolverOptions) -> Result<Transfer> {
    let outcome = nice_partition(ideal, field, opts)?;
    let Some(nice) = outcome.partition else {
        return Err(Error::Precondition(format!(
            "no nice partition found (sdepth {} < depth {})",
            outcome.sdepth, outcome.depth
        )));
    };
    let refined = refine_to_facets(&nice, &facets(ideal)?)?;
    let polarized = polarize_partition(&refined, field)?;
    Ok(Transfer {
        ideal: ideal.clone(),
        input_partition: refined,
        polarized,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::{series_equal, RationalSeries};
    use ExtNat::{Fin, Inf};

    fn worked() -> MonomialIdeal {
        MonomialIdeal::from_exponents(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 0, 2]]).unwrap()
    }

    fn f(v: &[Option<u32>]) -> Face {
        Face::new(v.iter().map(|x| x.map_or(Inf, Fin)).collect())
    }

    const I: Option<u32> = None;
    const O: Option<u32> = Some(0);

    fn m(v: &[u32]) -> Monomial {
        Monomial::new(v.to_vec())
    }

    #[test]
    fn monomial_examples() {
        let pm = PolarizationMap::for_ideal(&worked()).unwrap();
        assert_eq!(pm.target().names(), ["x1_1", "x1_2", "x2_1", "x3_1", "x3_2"]);
        assert_eq!(pm.n1(), 2);
        assert_eq!(polarize_monomial(&m(&[2, 0, 0]), &pm).unwrap(), m(&[1, 1, 0, 0, 0]));
        assert_eq!(polarize_monomial(&m(&[1, 1, 0]), &pm).unwrap(), m(&[1, 0, 1, 0, 0]));
        assert_eq!(polarize_monomial(&m(&[0, 0, 0]), &pm).unwrap(), m(&[0, 0, 0, 0, 0]));
        assert!(matches!(
            polarize_monomial(&m(&[3, 0, 0]), &pm),
            Err(Error::ExceedsBound { .. })
        ));
    }

    #[test]
    fn ideal_examples() {
        let (pol, pm) = polarize_ideal(&worked()).unwrap();
        assert_eq!(pol.to_string(), "x1_1*x1_2, x1_1*x2_1, x3_1*x3_2");
        assert_eq!(pm.target().n(), 5);

        let sq = MonomialIdeal::from_exponents(3, &[&[1, 1, 0], &[0, 1, 1]]).unwrap();
        let (pol, pm) = polarize_ideal(&sq).unwrap();
        assert_eq!(pm.n1(), 0);
        assert_eq!(pol.gens(), sq.gens());

        let x2 = MonomialIdeal::from_exponents(1, &[&[2]]).unwrap();
        let (pol, pm) = polarize_ideal(&x2).unwrap();
        assert_eq!(pm.n1(), 1);
        assert_eq!(pol.to_string(), "x1_1*x1_2");
    }

    #[test]
    fn beta_examples() {
        let pm = PolarizationMap::for_ideal(&worked()).unwrap();
        assert_eq!(beta(&f(&[O, I, O]), &pm).unwrap(), f(&[O, I, I, O, I]));
        assert_eq!(beta(&f(&[Some(1), O, Some(1)]), &pm).unwrap(), f(&[I, O, O, I, O]));
        assert_eq!(beta(&f(&[O, I, Some(1)]), &pm).unwrap(), f(&[O, I, I, I, O]));
        assert!(matches!(beta(&f(&[Some(2), O, O]), &pm), Err(Error::OutsideBeta { .. })));
    }

    #[test]
    fn gamma_examples() {
        let pm = PolarizationMap::for_ideal(&worked()).unwrap();
        assert_eq!(gamma(&Face::zero(3), &pm).unwrap(), Face::zero(5));
        assert_eq!(gamma(&Face::finite(&[2, 1, 0]), &pm).unwrap(), Face::finite(&[1, 1, 1, 0, 0]));
        assert_eq!(gamma(&Face::finite(&[1, 0, 1]), &pm).unwrap(), Face::finite(&[1, 0, 0, 1, 0]));
        assert!(gamma(&Face::finite(&[3, 0, 0]), &pm).is_err());
    }

    #[test]
    fn facet_bijection_examples() {
        assert!(check_facet_bijection(&worked()).unwrap());
        let sq = MonomialIdeal::from_exponents(3, &[&[1, 1, 0], &[0, 1, 1]]).unwrap();
        assert!(check_facet_bijection(&sq).unwrap());
        let cm = MonomialIdeal::from_exponents(2, &[&[2, 0], &[1, 1], &[0, 2]]).unwrap();
        assert!(check_facet_bijection(&cm).unwrap());
        let (pol, _) = polarize_ideal(&worked()).unwrap();
        assert_eq!(
            facets(&pol).unwrap(),
            vec![
                f(&[O, I, I, O, I]),
                f(&[O, I, I, I, O]),
                f(&[I, O, O, O, I]),
                f(&[I, O, O, I, O]),
            ]
        );
    }

    fn worked_partition() -> Partition {
        Partition::new(
            worked(),
            vec![
                Interval::new(Face::zero(3), f(&[O, I, O])).unwrap(),
                Interval::new(Face::finite(&[0, 0, 1]), f(&[O, I, Some(1)])).unwrap(),
                Interval::singleton(Face::finite(&[1, 0, 0])),
                Interval::singleton(Face::finite(&[1, 0, 1])),
            ],
        )
    }

    #[test]
    fn polarize_worked_partition() {
        let out = polarize_partition(&worked_partition(), Field::Rational).unwrap();
        let expected = vec![
            Interval::new(Face::zero(5), f(&[O, I, I, O, I])).unwrap(),
            Interval::new(Face::finite(&[0, 0, 0, 1, 0]), f(&[O, I, I, I, O])).unwrap(),
            Interval::new(Face::finite(&[1, 0, 0, 0, 0]), f(&[I, O, O, O, I])).unwrap(),
            Interval::new(Face::finite(&[1, 0, 0, 1, 0]), f(&[I, O, O, I, O])).unwrap(),
        ];
        assert_eq!(out.partition.intervals, expected);
        assert_eq!(out.report.min_inf, 2);
        assert_eq!(out.output_depth, 2);
        let h = out.partition.series().unwrap();
        assert!(series_equal(&h, &RationalSeries::new(vec![1, 2, 0, -1], 3)));
    }

    #[test]
    fn polarize_cm_singletons() {
        let cm = MonomialIdeal::from_exponents(2, &[&[2, 0], &[1, 1], &[0, 2]]).unwrap();
        let p = Partition::new(
            cm,
            [[0, 0], [1, 0], [0, 1]].iter().map(|v| Interval::singleton(Face::finite(v))).collect(),
        );
        let out = polarize_partition(&p, Field::Rational).unwrap();
        let expected = vec![
            Interval::new(Face::zero(4), f(&[O, I, O, I])).unwrap(),
            Interval::new(Face::finite(&[1, 0, 0, 0]), f(&[I, O, O, I])).unwrap(),
            Interval::new(Face::finite(&[0, 0, 1, 0]), f(&[O, I, I, O])).unwrap(),
        ];
        assert_eq!(out.partition.intervals, expected);
        assert!(series_equal(&out.partition.series().unwrap(), &RationalSeries::new(vec![1, 2], 2)));
    }

    #[test]
    fn polarize_rejects_tops_other_than_facets() {
        let mut p = worked_partition();
        // merge the two singletons into one interval topped by a non-facet-set
        p.intervals.truncate(2);
        p.intervals.push(Interval::new(Face::finite(&[1, 0, 0]), Face::finite(&[1, 0, 1])).unwrap());
        assert!(verify(&p, 0).all_ok());
        assert!(matches!(polarize_partition(&p, Field::Rational), Err(Error::Precondition(_))));
    }

    #[test]
    fn transfer_worked_and_free_variable() {
        let t = transfer(&worked(), Field::Rational, &SolverOptions::default()).unwrap();
        assert_eq!(t.n1(), 2);
        assert!(t.polarized.report.all_ok());

        let free = MonomialIdeal::from_exponents(3, &[&[2, 0, 0], &[1, 1, 0]]).unwrap();
        let t = transfer(&free, Field::Rational, &SolverOptions::default()).unwrap();
        assert_eq!(t.polarized.output_depth, t.polarized.input_depth + t.n1());
    }

    #[test]
    fn gamma_injective_directed() {
        // first differing coordinate i with a(i) < a'(i): image differs at (i, a(i)+1)
        let pm = PolarizationMap::with_bounds(RingContext::standard(2), vec![3, 2]).unwrap();
        let a = Face::finite(&[1, 2]);
        let b = Face::finite(&[2, 0]);
        let (ga, gb) = (gamma(&a, &pm).unwrap(), gamma(&b, &pm).unwrap());
        let k = pm.index(0, 2);
        assert_eq!(ga.get(k), Fin(0));
        assert_eq!(gb.get(k), Fin(1));
    }
}
