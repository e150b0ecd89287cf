//! Seeded random ideals and the per-ideal `sdepth ≥ depth` report.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stanley_core::{depth_report, solve_sdepth, Field, Monomial, MonomialIdeal, RingContext, SolverOptions};

use crate::json::CorpusEntry;
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorpusParams {
    pub seed: u64,
    pub count: usize,
    pub max_n: usize,
    pub max_exp: u32,
    pub max_gens: usize,
}

impl Default for CorpusParams {
    fn default() -> Self {
        CorpusParams { seed: 0, count: 200, max_n: 4, max_exp: 3, max_gens: 6 }
    }
}

/// `count` proper nonzero ideals; equal parameters give equal lists.
pub fn generate(params: &CorpusParams) -> Vec<MonomialIdeal> {
    assert!(params.max_n >= 1 && params.max_exp >= 1 && params.max_gens >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    (0..params.count)
        .map(|_| {
            let n = rng.gen_range(1..=params.max_n);
            let k = rng.gen_range(1..=params.max_gens);
            let gens: Vec<Monomial> = (0..k)
                .map(|_| loop {
                    let e: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=params.max_exp)).collect();
                    if e.iter().any(|&x| x > 0) {
                        break Monomial::new(e);
                    }
                })
                .collect();
            MonomialIdeal::new(RingContext::standard(n), gens).expect("no generator is 1")
        })
        .collect()
}

pub fn report_entry(ideal: &MonomialIdeal, field: Field, opts: &SolverOptions) -> Result<CorpusEntry, CliError> {
    let depth = depth_report(ideal, field)?.depth;
    let r = solve_sdepth(ideal, opts)?;
    let witness_min_inf = r.lifted.min_inf();
    Ok(CorpusEntry {
        ideal: ideal.into(),
        sdepth: r.sdepth,
        depth,
        sdepth_at_least_depth: r.sdepth >= depth,
        exact: r.exact,
        witness_min_inf,
        consistent: witness_min_inf == r.sdepth,
    })
}
