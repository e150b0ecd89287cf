//! Stanley depth search on the characteristic poset.
//!
//! `P_g = {a ≤ g : x^a ∉ I}` with `g` at least the exponent bounds. An
//! interval `[a, b]` of `P_g` stands for the Stanley spaces `x^c K[Z_b]`,
//! `Z_b = {i : b(i) = g_i}`, over the `c ∈ [a, b]` agreeing with `a` on `Z_b`.
//! The solver decides, for decreasing `d`, whether `P_g` splits into
//! intervals with every `|Z_b| ≥ d`.

use std::cmp::Ordering;

use crate::depth::depth_report;
use crate::error::{Error, Result};
use crate::homology::Field;
use crate::model::{grlex_cmp, ExtNat, Face, Interval, Monomial, MonomialIdeal};
use crate::partitions::{verify, Partition};

pub const BOX_CAP: u128 = 1_000_000;
pub const DEFAULT_NODE_CAP: u64 = 10_000_000;
/// Number of `g + 1` retries after a lift fails to verify.
pub const MAX_G_BUMPS: u32 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacteristicPoset {
    ideal: MonomialIdeal,
    g: Vec<u32>,
    elements: Vec<Vec<u32>>,
    /// box index → position in `elements`
    position: Vec<Option<usize>>,
}

impl CharacteristicPoset {
    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn g(&self) -> &[u32] {
        &self.g
    }

    /// Elements in graded order.
    pub fn elements(&self) -> &[Vec<u32>] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    fn box_index(&self, a: &[u32]) -> Option<usize> {
        let mut idx = 0usize;
        for (&x, &gi) in a.iter().zip(&self.g) {
            if x > gi {
                return None;
            }
            idx = idx * (gi as usize + 1) + x as usize;
        }
        Some(idx)
    }

    pub fn position(&self, a: &[u32]) -> Option<usize> {
        if a.len() != self.g.len() {
            return None;
        }
        self.box_index(a).and_then(|k| self.position[k])
    }

    pub fn contains(&self, a: &[u32]) -> bool {
        self.position(a).is_some()
    }

    /// `|{i : b(i) = g_i}|`.
    pub fn z_count(&self, b: &[u32]) -> usize {
        b.iter().zip(&self.g).filter(|(x, gi)| x == gi).count()
    }
}

pub fn characteristic_poset(ideal: &MonomialIdeal) -> Result<CharacteristicPoset> {
    characteristic_poset_with_bound(ideal, ideal.exponent_bounds())
}

/// Poset for an explicit bound `g`, which must dominate the exponent bounds.
pub fn characteristic_poset_with_bound(ideal: &MonomialIdeal, g: Vec<u32>) -> Result<CharacteristicPoset> {
    if g.len() != ideal.n() {
        return Err(Error::DimensionMismatch { expected: ideal.n(), found: g.len() });
    }
    if g.iter().zip(ideal.exponent_bounds()).any(|(&gi, r)| gi < r) {
        return Err(Error::Precondition("g must dominate the exponent bounds".into()));
    }
    let size = g.iter().try_fold(1u128, |acc, &gi| {
        let next = acc * (u128::from(gi) + 1);
        (next <= BOX_CAP).then_some(next)
    });
    let Some(size) = size else {
        return Err(Error::CapExceeded { what: "poset box size", size: BOX_CAP + 1, cap: BOX_CAP });
    };
    let mut elements = Vec::new();
    let mut a = vec![0u32; g.len()];
    for _ in 0..size {
        if !ideal.contains(&Monomial::new(a.clone())) {
            elements.push(a.clone());
        }
        for i in (0..a.len()).rev() {
            if a[i] < g[i] {
                a[i] += 1;
                break;
            }
            a[i] = 0;
        }
    }
    elements.sort_by(|x, y| grlex_cmp(x, y));
    let mut poset = CharacteristicPoset {
        ideal: ideal.clone(),
        g,
        elements,
        position: vec![None; size as usize],
    };
    for k in 0..poset.elements.len() {
        let idx = poset.box_index(&poset.elements[k]).expect("element inside the box");
        poset.position[idx] = Some(k);
    }
    Ok(poset)
}

/// `max |Z_b|` over the `b ≥ a` in the poset, for every element `a`.
pub fn max_z(poset: &CharacteristicPoset) -> Vec<usize> {
    let mut best = vec![0usize; poset.len()];
    for k in (0..poset.len()).rev() {
        let a = &poset.elements[k];
        let mut m = poset.z_count(a);
        for i in 0..a.len() {
            let mut up = a.clone();
            up[i] += 1;
            if let Some(p) = poset.position(&up) {
                m = m.max(best[p]);
            }
        }
        best[k] = m;
    }
    best
}

/// Points of the box `[a, b]` in lexicographic order.
fn box_points(a: &[u32], b: &[u32]) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut c = a.to_vec();
    loop {
        out.push(c.clone());
        let mut i = c.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if c[i] < b[i] {
                c[i] += 1;
                break;
            }
            c[i] = a[i];
        }
    }
}

/// Tops `b ≥ a` in the poset with `b(j) ∈ {a(j), g_j}`, by `|Z_b|` descending
/// then graded order. Restricting to these tops loses no partition: an
/// interval with `a(j) < b(j) < g_j` splits at `j` into two intervals with
/// the same `Z`.
pub fn candidate_tops(poset: &CharacteristicPoset, a: &[u32]) -> Vec<(usize, Vec<u32>)> {
    let free: Vec<usize> = (0..a.len()).filter(|&j| a[j] < poset.g[j]).collect();
    let mut out = Vec::new();
    for mask in 0u64..1 << free.len() {
        let mut b = a.to_vec();
        for (k, &j) in free.iter().enumerate() {
            if mask >> k & 1 == 1 {
                b[j] = poset.g[j];
            }
        }
        if poset.contains(&b) {
            out.push((poset.z_count(&b), b));
        }
    }
    out.sort_by(|(zx, x), (zy, y)| zy.cmp(zx).then_with(|| grlex_cmp(x, y)));
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverOptions {
    /// Search nodes allowed per target `d`.
    pub node_cap: u64,
    /// Retry with `g + 1` when a lift fails to verify.
    pub g_bump: bool,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions { node_cap: DEFAULT_NODE_CAP, g_bump: true }
    }
}

pub type PosetInterval = (Vec<u32>, Vec<u32>);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverResult {
    pub sdepth: usize,
    /// False when the node cap cut off the search at some `d > sdepth`.
    pub exact: bool,
    pub g: Vec<u32>,
    pub poset_partition: Vec<PosetInterval>,
    pub lifted: Partition,
    pub nodes: u64,
}

enum Outcome {
    Found,
    Exhausted,
    Capped,
}

struct Search<'a> {
    poset: &'a CharacteristicPoset,
    covered: Vec<bool>,
    chosen: Vec<PosetInterval>,
    d: usize,
    nodes: u64,
    cap: u64,
}

impl Search<'_> {
    fn run(&mut self, from: usize) -> Outcome {
        let Some(k) = (from..self.poset.len()).find(|&k| !self.covered[k]) else {
            return Outcome::Found;
        };
        let a = self.poset.elements[k].clone();
        for (z, b) in candidate_tops(self.poset, &a) {
            if z < self.d {
                break;
            }
            self.nodes += 1;
            if self.nodes > self.cap {
                return Outcome::Capped;
            }
            let members: Vec<usize> = box_points(&a, &b)
                .iter()
                .map(|c| self.poset.position(c).expect("poset is closed downward"))
                .collect();
            if members.iter().any(|&m| self.covered[m]) {
                continue;
            }
            for &m in &members {
                self.covered[m] = true;
            }
            self.chosen.push((a.clone(), b));
            match self.run(k + 1) {
                Outcome::Exhausted => {}
                other => return other,
            }
            self.chosen.pop();
            for &m in &members {
                self.covered[m] = false;
            }
        }
        Outcome::Exhausted
    }
}

/// Largest `d` admitting a poset partition with every `|Z_b| ≥ d`, with a
/// witness; `exact` is false if the node cap interrupted a larger `d`.
pub fn solve_poset(poset: &CharacteristicPoset, node_cap: u64) -> (usize, bool, Vec<PosetInterval>, u64) {
    let upper = max_z(poset).into_iter().min().unwrap_or(poset.g.len());
    let mut exact = true;
    let mut nodes = 0;
    for d in (0..=upper).rev() {
        let mut s = Search {
            poset,
            covered: vec![false; poset.len()],
            chosen: Vec::new(),
            d,
            nodes: 0,
            cap: node_cap,
        };
        let outcome = s.run(0);
        nodes += s.nodes;
        match outcome {
            Outcome::Found => return (d, exact, s.chosen, nodes),
            Outcome::Exhausted => {}
            Outcome::Capped if d == 0 => {
                let singletons = poset.elements.iter().map(|a| (a.clone(), a.clone())).collect();
                return (0, false, singletons, nodes);
            }
            Outcome::Capped => exact = false,
        }
    }
    unreachable!("the scan ends at d = 0, which always succeeds")
}

/// Expands poset intervals into Stanley intervals of `Γ(I)` and verifies the
/// result as a partition.
pub fn lift(poset_partition: &[PosetInterval], poset: &CharacteristicPoset) -> Result<Partition> {
    let g = &poset.g;
    let mut intervals = Vec::new();
    for (a, b) in poset_partition {
        let z: Vec<bool> = b.iter().zip(g).map(|(x, gi)| x == gi).collect();
        let top_of_c: Vec<u32> = (0..a.len()).map(|i| if z[i] { a[i] } else { b[i] }).collect();
        for c in box_points(a, &top_of_c) {
            let hi = Face::new(
                c.iter()
                    .zip(&z)
                    .map(|(&x, &zi)| if zi { ExtNat::Inf } else { ExtNat::Fin(x) })
                    .collect(),
            );
            intervals.push(Interval { lo: Face::finite(&c), hi });
        }
    }
    let p = Partition::new(poset.ideal.clone(), intervals);
    let report = verify(&p, 0);
    if !report.is_partition() {
        return Err(Error::VerificationFailed(
            report.failures.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "),
        ));
    }
    Ok(p)
}

pub fn solve_sdepth(ideal: &MonomialIdeal, opts: &SolverOptions) -> Result<SolverResult> {
    let mut g = ideal.exponent_bounds();
    let mut bumps = 0;
    loop {
        let poset = characteristic_poset_with_bound(ideal, g.clone())?;
        let (sdepth, exact, poset_partition, nodes) = solve_poset(&poset, opts.node_cap);
        match lift(&poset_partition, &poset) {
            Ok(lifted) => {
                return Ok(SolverResult { sdepth, exact, g, poset_partition, lifted, nodes });
            }
            Err(_) if opts.g_bump && bumps < MAX_G_BUMPS => {
                bumps += 1;
                g.iter_mut().for_each(|gi| *gi += 1);
            }
            Err(e) => return Err(e),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NiceOutcome {
    pub partition: Option<Partition>,
    pub sdepth: usize,
    pub depth: usize,
    pub exact: bool,
    pub field_char: u64,
    /// Set when no nice partition was found.
    pub finding: Option<String>,
}

/// The solver witness when it is nice for `depth(S/I)`, else a finding.
pub fn nice_partition(ideal: &MonomialIdeal, field: Field, opts: &SolverOptions) -> Result<NiceOutcome> {
    let depth = depth_report(ideal, field)?.depth;
    let result = solve_sdepth(ideal, opts)?;
    let (partition, finding) = match result.sdepth.cmp(&depth) {
        Ordering::Less => (
            None,
            Some(format!(
                "solver sdepth {} below depth {} for {} ({})",
                result.sdepth,
                depth,
                ideal,
                if result.exact { "exact" } else { "node cap reached" }
            )),
        ),
        _ => (Some(result.lifted), None),
    };
    Ok(NiceOutcome {
        partition,
        sdepth: result.sdepth,
        depth,
        exact: result.exact,
        field_char: field.characteristic(),
        finding,
    })
}
