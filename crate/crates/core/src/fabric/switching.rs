use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{FDAlgebra, IdempotentSet};
use crate::error::{Error, Result};
use crate::homology::{
    cosyzygy_n, gen_membership, gorenstein_dimension, minimal_resolution, Direction, Level, Resolution, Termination,
};
use crate::par::Execution;
use crate::rep::{random_module, Representation};

/// Default number of Gorenstein injective samples.
pub const DEFAULT_BUDGET: usize = 20;

/// A resolution term outside the expected additive closure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwitchingViolation {
    pub sample: String,
    /// The idempotent whose additive closure should contain the term.
    pub expected: IdempotentSet,
    pub term: usize,
    pub offending_vertex: usize,
}

/// A user-supplied `(h, m)` with the verdict on `DA ∈ gen_m(Ah)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwitchingHypothesis {
    pub h: IdempotentSet,
    pub m: usize,
    pub holds: bool,
}

#[derive(Clone, Debug)]
pub struct SwitchingReport {
    pub gorenstein_dimension: usize,
    pub seed: u64,
    pub hypotheses: Vec<SwitchingHypothesis>,
    /// Names of the Gorenstein injective samples, in the order checked.
    pub samples: Vec<String>,
    /// Number of modules whose `n`-th syzygy was tested against `add(Af)`.
    pub tail_checked: usize,
    /// Resolutions that were cut off before periodicity or termination.
    pub truncated: Vec<String>,
    pub violations: Vec<SwitchingViolation>,
}

impl SwitchingReport {
    pub fn passes(&self) -> bool {
        self.violations.is_empty() && self.hypotheses.iter().all(|h| h.holds)
    }
}

/// Gorenstein injective samples: indecomposable injectives, then `Ω^{-n}` of
/// the simples, then `Ω^{-n}` of seeded random small modules. Zero modules are skipped.
pub fn gorenstein_injective_samples(
    a: &Arc<FDAlgebra>,
    n: usize,
    budget: usize,
    seed: u64,
) -> Vec<(String, Representation)> {
    let mut out = Vec::new();
    let k = a.n_vertices();
    for w in 0..k {
        out.push((format!("I{}", a.label(w)), Representation::injective(a, w)));
    }
    for v in 0..k {
        out.push((format!("cosyz^{n}(S{})", a.label(v)), cosyzygy_n(&Representation::simple(a, v), n)));
    }
    out.retain(|(_, m)| !m.is_zero());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut attempts = 0;
    while out.len() < budget && attempts < 4 * budget {
        attempts += 1;
        let m = random_module(a, &mut rng, 6);
        let g = cosyzygy_n(&m, n);
        if !g.is_zero() {
            out.push((format!("cosyz^{n}(random {attempts} {:?})", m.dims()), g));
        }
    }
    out.truncate(budget);
    out
}

fn term_violation(res: &Resolution, i: usize, allowed: &IdempotentSet) -> Option<usize> {
    res.term(i)?.copies.into_iter().find(|v| !allowed.contains(*v))
}

/// Checks that the terms `n, n+1, ...` of the resolution lie in `add(Af)`.
fn check_tail(
    name: &str,
    res: &Resolution,
    n: usize,
    f: &IdempotentSet,
    violations: &mut Vec<SwitchingViolation>,
    truncated: &mut Vec<String>,
) {
    let last = match res.status {
        Termination::Truncated => {
            truncated.push(name.to_string());
            res.terms.len()
        }
        Termination::Terminated => res.terms.len(),
        Termination::Periodic { .. } => res.terms.len().max(n + 1),
    };
    for i in n..last.max(n) {
        if let Some(v) = term_violation(res, i, f) {
            violations.push(SwitchingViolation { sample: name.into(), expected: f.clone(), term: i, offending_vertex: v });
            return;
        }
    }
}

/// Verifies generator switching on a certified Gorenstein algebra: for each
/// supplied `(h, m)` with `DA ∈ gen_m(Ah)`, the terms `0..=m` of the minimal
/// projective resolution of every sampled Gorenstein injective lie in `add(Ah)`;
/// and from term `n = Gor.dim A` on, the resolutions of the samples and of all
/// simples lie in `add(Af)`.
pub fn verify_generator_switching(
    a: &Arc<FDAlgebra>,
    f: &IdempotentSet,
    hs: &[(IdempotentSet, usize)],
    budget: usize,
    seed: u64,
    cutoff: usize,
) -> Result<SwitchingReport> {
    a.check_idempotent(f)?;
    let n = gorenstein_dimension(a, cutoff, Execution::default()).finite().ok_or(Error::NotGorensteinCertified)?;
    let da = Representation::dual_regular(a);
    let mut hypotheses = Vec::new();
    for (h, m) in hs {
        a.check_idempotent(h)?;
        let r = gen_membership(&da, h, Level::Finite(*m), cutoff)?;
        hypotheses.push(SwitchingHypothesis { h: h.clone(), m: *m, holds: r.verdict() == Some(true) });
    }
    let samples = gorenstein_injective_samples(a, n, budget, seed);
    let horizon = cutoff.max(n + 1);
    let resolutions = Execution::default().map(&samples, |(_, m)| minimal_resolution(m, Direction::Projective, horizon));
    let mut violations = Vec::new();
    let mut truncated = Vec::new();
    for ((name, _), res) in samples.iter().zip(&resolutions) {
        for hyp in hypotheses.iter().filter(|h| h.holds) {
            for i in 0..=hyp.m {
                if let Some(v) = term_violation(res, i, &hyp.h) {
                    violations.push(SwitchingViolation {
                        sample: name.clone(),
                        expected: hyp.h.clone(),
                        term: i,
                        offending_vertex: v,
                    });
                    break;
                }
            }
        }
        check_tail(name, res, n, f, &mut violations, &mut truncated);
    }
    let simples = Execution::default()
        .map_range(a.n_vertices(), |v| minimal_resolution(&Representation::simple(a, v), Direction::Projective, horizon));
    for (v, res) in simples.iter().enumerate() {
        check_tail(&format!("S{}", a.label(v)), res, n, f, &mut violations, &mut truncated);
    }
    Ok(SwitchingReport {
        gorenstein_dimension: n,
        seed,
        hypotheses,
        samples: samples.into_iter().map(|(s, _)| s).collect(),
        tail_checked: resolutions.len() + simples.len(),
        truncated,
        violations,
    })
}
