//! Exact Hilbert series `N(t) / (1 − t)^e` with integer numerators.

use std::fmt;
use std::ops::Add;

use crate::depth::check_generator_cap;
use crate::error::{Error, Result};
use crate::model::{Interval, Monomial, MonomialIdeal};
use crate::polarization::polarize_ideal;

/// `numerator(t) / (1 − t)^denom_power`, kept in lowest terms: the numerator
/// has no trailing zeros and is not divisible by `1 − t` unless the power is
/// already zero. The zero series has an empty numerator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalSeries {
    numerator: Vec<i128>,
    denom_power: u32,
}

fn mul_one_minus_t(p: &[i128]) -> Vec<i128> {
    let mut out = vec![0; p.len() + 1];
    for (k, &c) in p.iter().enumerate() {
        out[k] += c;
        out[k + 1] -= c;
    }
    out
}

fn trim(p: &mut Vec<i128>) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

impl RationalSeries {
    pub fn new(mut numerator: Vec<i128>, mut denom_power: u32) -> Self {
        trim(&mut numerator);
        if numerator.is_empty() {
            denom_power = 0;
        }
        // N(1) = 0 ⇔ (1 − t) | N; the quotient has prefix sums as coefficients
        while denom_power > 0 && numerator.iter().sum::<i128>() == 0 {
            let mut acc = 0;
            let mut q: Vec<i128> = numerator
                .iter()
                .map(|&c| {
                    acc += c;
                    acc
                })
                .collect();
            trim(&mut q);
            numerator = q;
            denom_power -= 1;
        }
        RationalSeries { numerator, denom_power }
    }

    pub fn zero() -> Self {
        RationalSeries::new(Vec::new(), 0)
    }

    /// `t^d / (1 − t)^e`.
    pub fn monomial(d: usize, e: u32) -> Self {
        let mut num = vec![0; d + 1];
        num[d] = 1;
        RationalSeries::new(num, e)
    }

    pub fn numerator(&self) -> &[i128] {
        &self.numerator
    }

    pub fn denom_power(&self) -> u32 {
        self.denom_power
    }

    /// Numerator rewritten over `(1 − t)^e`, for `e ≥ denom_power`.
    pub fn numerator_over(&self, e: u32) -> Vec<i128> {
        assert!(e >= self.denom_power);
        let mut p = self.numerator.clone();
        for _ in self.denom_power..e {
            p = mul_one_minus_t(&p);
        }
        trim(&mut p);
        p
    }

    /// `self / (1 − t)^k`.
    pub fn shift_denominator(&self, k: u32) -> Self {
        RationalSeries::new(self.numerator.clone(), self.denom_power + k)
    }

    /// First `count` coefficients of the power series expansion.
    pub fn coefficients(&self, count: usize) -> Vec<i128> {
        let mut c: Vec<i128> = (0..count)
            .map(|k| self.numerator.get(k).copied().unwrap_or(0))
            .collect();
        // multiply by 1/(1 − t) e times: prefix sums
        for _ in 0..self.denom_power {
            let mut acc = 0;
            for x in c.iter_mut() {
                acc += *x;
                *x = acc;
            }
        }
        c
    }
}

impl Add for &RationalSeries {
    type Output = RationalSeries;

    fn add(self, rhs: &RationalSeries) -> RationalSeries {
        let e = self.denom_power.max(rhs.denom_power);
        let a = self.numerator_over(e);
        let b = rhs.numerator_over(e);
        let mut sum = vec![0; a.len().max(b.len())];
        for (k, c) in a.iter().enumerate() {
            sum[k] += c;
        }
        for (k, c) in b.iter().enumerate() {
            sum[k] += c;
        }
        RationalSeries::new(sum, e)
    }
}

impl std::iter::Sum for RationalSeries {
    fn sum<I: Iterator<Item = RationalSeries>>(iter: I) -> Self {
        iter.fold(RationalSeries::zero(), |acc, s| &acc + &s)
    }
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (k, &c) in self.numerator.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mag = c.abs();
            let body = match (k, mag) {
                (0, _) => mag.to_string(),
                (1, 1) => "t".to_string(),
                (1, _) => format!("{mag}t"),
                (_, 1) => format!("t^{k}"),
                _ => format!("{mag}t^{k}"),
            };
            let sign = if c < 0 { "-" } else { "+" };
            terms.push((sign, body));
        }
        let mut num = String::new();
        for (idx, (sign, body)) in terms.iter().enumerate() {
            if idx == 0 {
                if *sign == "-" {
                    num.push('-');
                }
            } else {
                num.push_str(&format!(" {sign} "));
            }
            num.push_str(body);
        }
        if num.is_empty() {
            num.push('0');
        }
        match self.denom_power {
            0 => write!(f, "{num}"),
            1 => write!(f, "({num})/(1-t)"),
            e => write!(f, "({num})/(1-t)^{e}"),
        }
    }
}

/// Equality as rational functions, by cross-multiplication.
pub fn series_equal(x: &RationalSeries, y: &RationalSeries) -> bool {
    let e = x.denom_power.max(y.denom_power);
    x.numerator_over(e) == y.numerator_over(e)
}

/// `H(S/I)` by inclusion–exclusion: `Σ_σ (−1)^{|σ|} t^{deg lcm σ} / (1 − t)^n`.
pub fn hilbert_series(ideal: &MonomialIdeal) -> Result<RationalSeries> {
    check_generator_cap(ideal)?;
    fn walk(gens: &[Monomial], acc: &Monomial, sign: i128, num: &mut Vec<i128>) {
        for (k, g) in gens.iter().enumerate() {
            let l = acc.lcm(g);
            let d = l.degree() as usize;
            if num.len() <= d {
                num.resize(d + 1, 0);
            }
            num[d] -= sign;
            walk(&gens[k + 1..], &l, -sign, num);
        }
    }
    let mut num = vec![1i128];
    walk(ideal.gens(), &Monomial::one(ideal.n()), 1, &mut num);
    Ok(RationalSeries::new(num, ideal.n() as u32))
}

pub const SERIES_DEGREE_CAP: u64 = 1_000_000;

/// Series counting the finite faces of `[lo, hi]` by total degree.
pub fn interval_series(iv: &Interval) -> Result<RationalSeries> {
    let Some(lo_deg) = iv.lo.degree() else {
        return Err(Error::InfiniteLowerEndpoint(iv.lo.to_string()));
    };
    if iv.lo.len() != iv.hi.len() {
        return Err(Error::DimensionMismatch {
            expected: iv.lo.len(),
            found: iv.hi.len(),
        });
    }
    if !iv.lo.le(&iv.hi) {
        return Err(Error::InvertedInterval {
            lo: iv.lo.to_string(),
            hi: iv.hi.to_string(),
        });
    }
    let top_deg = lo_deg
        + iv.lo
            .coords()
            .iter()
            .zip(iv.hi.coords())
            .filter_map(|(l, h)| Some(u64::from(h.finite()? - l.finite()?)))
            .sum::<u64>();
    if top_deg > SERIES_DEGREE_CAP {
        return Err(Error::CapExceeded {
            what: "series numerator degree",
            size: u128::from(top_deg),
            cap: u128::from(SERIES_DEGREE_CAP),
        });
    }
    let mut num = vec![0i128; lo_deg as usize + 1];
    num[lo_deg as usize] = 1;
    for (l, h) in iv.lo.coords().iter().zip(iv.hi.coords()) {
        if let (Some(l), Some(h)) = (l.finite(), h.finite()) {
            // multiply by 1 + t + … + t^{h−l}
            let width = (h - l) as usize;
            let mut next = vec![0i128; num.len() + width];
            let mut window = 0i128;
            for (k, slot) in next.iter_mut().enumerate() {
                window += num.get(k).copied().unwrap_or(0);
                if k > width {
                    window -= num.get(k - width - 1).copied().unwrap_or(0);
                }
                *slot = window;
            }
            num = next;
        }
    }
    Ok(RationalSeries::new(num, iv.hi.inf_count() as u32))
}

/// `H(T/Iᵖ) = H(S/I) / (1 − t)^{n₁}`.
pub fn polarization_identity_check(ideal: &MonomialIdeal) -> Result<bool> {
    let (pol, map) = polarize_ideal(ideal)?;
    let lhs = hilbert_series(&pol)?;
    let rhs = hilbert_series(ideal)?.shift_denominator(map.n1() as u32);
    Ok(series_equal(&lhs, &rhs))
}
