//! JSON documents. Infinity is the string `"inf"`; every list is emitted in a
//! canonical order so output is byte-stable.

use serde::{Deserialize, Serialize};
use stanley_core::{
    DepthReport, ExtNat, Face, Interval, Monomial, MonomialIdeal, Partition, RationalSeries, RingContext,
    VerificationReport,
};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coord {
    Fin(u32),
    Word(String),
}

impl From<ExtNat> for Coord {
    fn from(x: ExtNat) -> Self {
        match x {
            ExtNat::Fin(v) => Coord::Fin(v),
            ExtNat::Inf => Coord::Word("inf".into()),
        }
    }
}

impl TryFrom<&Coord> for ExtNat {
    type Error = CliError;

    fn try_from(c: &Coord) -> Result<Self, CliError> {
        match c {
            Coord::Fin(v) => Ok(ExtNat::Fin(*v)),
            Coord::Word(w) if w == "inf" => Ok(ExtNat::Inf),
            Coord::Word(w) => Err(CliError::Json(format!("expected a number or \"inf\", found \"{w}\""))),
        }
    }
}

pub fn face_json(f: &Face) -> Vec<Coord> {
    f.coords().iter().map(|&x| x.into()).collect()
}

pub fn face_from_json(v: &[Coord]) -> Result<Face, CliError> {
    Ok(Face::new(v.iter().map(ExtNat::try_from).collect::<Result<_, _>>()?))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub vars: Vec<String>,
    pub gens: Vec<Vec<u32>>,
}

impl From<&MonomialIdeal> for IdealJson {
    fn from(i: &MonomialIdeal) -> Self {
        IdealJson {
            vars: i.ring().names().to_vec(),
            gens: i.gens().iter().map(|g| g.exponents().to_vec()).collect(),
        }
    }
}

impl IdealJson {
    pub fn to_ideal(&self) -> Result<MonomialIdeal, CliError> {
        let ring = RingContext::new(self.vars.clone())?;
        let n = ring.n();
        if let Some(bad) = self.gens.iter().find(|g| g.len() != n) {
            return Err(stanley_core::Error::DimensionMismatch { expected: n, found: bad.len() }.into());
        }
        if self.gens.is_empty() {
            return Err(CliError::Json("empty generator list".into()));
        }
        let gens = self.gens.iter().map(|g| Monomial::new(g.clone())).collect();
        Ok(MonomialIdeal::new(ring, gens)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalJson {
    pub lo: Vec<Coord>,
    pub hi: Vec<Coord>,
}

impl From<&Interval> for IntervalJson {
    fn from(iv: &Interval) -> Self {
        IntervalJson { lo: face_json(&iv.lo), hi: face_json(&iv.hi) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionJson {
    pub ideal: IdealJson,
    pub intervals: Vec<IntervalJson>,
}

impl From<&Partition> for PartitionJson {
    fn from(p: &Partition) -> Self {
        PartitionJson {
            ideal: (&p.ideal).into(),
            intervals: p.intervals.iter().map(Into::into).collect(),
        }
    }
}

impl PartitionJson {
    /// Intervals are taken as given, so the verifier can report on malformed
    /// ones instead of the reader rejecting them.
    pub fn to_partition(&self) -> Result<Partition, CliError> {
        let ideal = self.ideal.to_ideal()?;
        let intervals = self
            .intervals
            .iter()
            .map(|iv| Ok(Interval { lo: face_from_json(&iv.lo)?, hi: face_from_json(&iv.hi)? }))
            .collect::<Result<_, CliError>>()?;
        Ok(Partition::new(ideal, intervals))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub numerator: Vec<i128>,
    pub denom_power: u32,
}

impl From<&RationalSeries> for SeriesJson {
    fn from(s: &RationalSeries) -> Self {
        SeriesJson { numerator: s.numerator().to_vec(), denom_power: s.denom_power() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionJson {
    pub vars: Vec<String>,
    /// Each component as its pure-power generators.
    pub components: Vec<Vec<Vec<u32>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetsJson {
    pub vars: Vec<String>,
    pub maximal_faces: Vec<Vec<Coord>>,
    pub facets: Vec<Vec<Coord>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DepthJson {
    pub depth: usize,
    pub projective_dimension: usize,
    pub dim: usize,
    pub cohen_macaulay: bool,
    pub field_char: u64,
}

impl From<&DepthReport> for DepthJson {
    fn from(r: &DepthReport) -> Self {
        DepthJson {
            depth: r.depth,
            projective_dimension: r.projective_dimension,
            dim: r.dim,
            cohen_macaulay: r.cohen_macaulay,
            field_char: r.field_char,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolarizeJson {
    pub source: IdealJson,
    pub ideal: IdealJson,
    pub n1: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolverCertificate {
    pub sdepth: usize,
    pub depth: usize,
    pub partition: PartitionJson,
    pub verified: bool,
    pub field_char: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NiceJson {
    pub partition: Option<PartitionJson>,
    pub sdepth: usize,
    pub depth: usize,
    pub exact: bool,
    pub finding: Option<String>,
    pub field_char: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyJson {
    pub contained: bool,
    pub disjoint: bool,
    pub covers: bool,
    pub nice: bool,
    pub min_inf: usize,
    pub depth: usize,
    pub failures: Vec<String>,
}

impl From<&VerificationReport> for VerifyJson {
    fn from(r: &VerificationReport) -> Self {
        VerifyJson {
            contained: r.contained,
            disjoint: r.disjoint,
            covers: r.covers,
            nice: r.nice,
            min_inf: r.min_inf,
            depth: r.depth_used,
            failures: r.failures.iter().map(ToString::to_string).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransferCertificate {
    pub ideal: IdealJson,
    pub polarized_ideal: IdealJson,
    pub n1: usize,
    pub input_partition: PartitionJson,
    pub output_partition: PartitionJson,
    pub input_depth: usize,
    pub output_depth: usize,
    pub verified: bool,
    pub field_char: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub ideal: IdealJson,
    pub sdepth: usize,
    pub depth: usize,
    pub sdepth_at_least_depth: bool,
    pub exact: bool,
    pub witness_min_inf: usize,
    pub consistent: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusJson {
    pub seed: u64,
    pub ideals: Vec<IdealJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<Vec<CorpusEntry>>,
}

/// Pretty JSON with a trailing newline.
pub fn to_string<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("plain data serializes");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inf_round_trip() {
        let f = Face::new(vec![ExtNat::Fin(0), ExtNat::Inf, ExtNat::Fin(3)]);
        let s = serde_json::to_string(&face_json(&f)).unwrap();
        assert_eq!(s, r#"[0,"inf",3]"#);
        let back: Vec<Coord> = serde_json::from_str(&s).unwrap();
        assert_eq!(face_from_json(&back).unwrap(), f);
        let bad: Vec<Coord> = serde_json::from_str(r#"["infinity"]"#).unwrap();
        assert!(face_from_json(&bad).is_err());
    }

    #[test]
    fn ideal_round_trip() {
        let i = MonomialIdeal::from_exponents(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 0, 2]]).unwrap();
        let j = IdealJson::from(&i);
        assert_eq!(
            serde_json::to_string(&j).unwrap(),
            r#"{"vars":["x1","x2","x3"],"gens":[[2,0,0],[1,1,0],[0,0,2]]}"#
        );
        assert_eq!(j.to_ideal().unwrap(), i);
    }

    #[test]
    fn ideal_rejects_ragged_rows() {
        let j = IdealJson { vars: vec!["x".into(), "y".into()], gens: vec![vec![1]] };
        assert!(j.to_ideal().is_err());
    }
}
