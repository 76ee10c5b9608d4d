use std::sync::Arc;

use crate::algebra::{FDAlgebra, IdempotentSet};
use crate::error::Result;
use crate::homology::{minimal_resolution, Direction, HomDim, Resolution, Termination};
use crate::par::Execution;
use crate::rep::{is_isomorphic_with, Representation};

use super::check::quotient_projectives;

/// `Ω^n` of the resolved module, read off the period or termination past the
/// computed range. `None` when unknown.
fn syzygy_at(res: &Resolution, n: usize) -> Option<Representation> {
    if n < res.syzygies.len() {
        return Some(res.syzygies[n].clone());
    }
    match res.status {
        Termination::Terminated => Some(Representation::zero(res.module.algebra())),
        Termination::Truncated => None,
        Termination::Periodic { start, period } => Some(res.syzygies[start + (n - start) % period].clone()),
    }
}

/// Where a module first appears as a syzygy of an indecomposable injective.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyzygyHit {
    /// Minimal `n >= 1` with `Ω^n(I_w) ≅ M` for some `w`.
    pub depth: HomDim,
    /// The injective vertices `w` realising the minimum.
    pub injectives: Vec<usize>,
}

/// Projective resolutions of the indecomposable injectives.
pub fn injective_resolutions(a: &Arc<FDAlgebra>, cutoff: usize, exec: Execution) -> Vec<Resolution> {
    exec.map_range(a.n_vertices(), |w| minimal_resolution(&Representation::injective(a, w), Direction::Projective, cutoff))
}

fn search(res: &[Resolution], m: &Representation, cutoff: usize, seed: u64) -> Result<SyzygyHit> {
    let certified = res.iter().all(|r| r.status != Termination::Truncated);
    // once every resolution is periodic or finished, syzygies repeat past this index
    let horizon = if certified {
        res.iter().map(|r| r.syzygies.len()).max().unwrap_or(1).max(2)
    } else {
        cutoff + 1
    };
    for n in 1..=horizon {
        let mut hits = Vec::new();
        for (w, r) in res.iter().enumerate() {
            let Some(s) = syzygy_at(r, n) else { continue };
            if s.dims() == m.dims() && is_isomorphic_with(&s, m, seed, 2)?.is_some() {
                hits.push(w);
            }
        }
        if !hits.is_empty() {
            return Ok(SyzygyHit { depth: HomDim::Finite(n), injectives: hits });
        }
    }
    let depth = if certified { HomDim::Infinite { period: None } } else { HomDim::AtLeast(cutoff + 1) };
    Ok(SyzygyHit { depth, injectives: Vec::new() })
}

/// Minimal `n >= 1` with `M ≅ Ω^n(I)` for an indecomposable injective `I`.
pub fn syzygy_depth(m: &Representation, cutoff: usize, seed: u64) -> Result<SyzygyHit> {
    let res = injective_resolutions(m.algebra(), cutoff, Execution::Sequential);
    search(&res, m, cutoff, seed)
}

/// Fabric dimensions of the indecomposable projective `A/<f>`-modules.
#[derive(Clone, Debug)]
pub struct FabricDimensions {
    /// `(v, dimension of Ae_v/<f>)` for `v ∉ f`.
    pub per_vertex: Vec<(usize, SyzygyHit)>,
    pub sup: HomDim,
}

impl FabricDimensions {
    pub fn get(&self, v: usize) -> Option<&SyzygyHit> {
        self.per_vertex.iter().find(|(w, _)| *w == v).map(|(_, h)| h)
    }
}

pub fn fabric_dimension(
    a: &Arc<FDAlgebra>,
    f: &IdempotentSet,
    cutoff: usize,
    seed: u64,
    exec: Execution,
) -> Result<FabricDimensions> {
    let res = injective_resolutions(a, cutoff, exec);
    let qs = quotient_projectives(a, f)?;
    let hits = exec.map(&qs, |(v, q)| search(&res, q, cutoff, seed).map(|h| (*v, h)));
    let per_vertex: Vec<(usize, SyzygyHit)> = hits.into_iter().collect::<Result<_>>()?;
    let sup = per_vertex.iter().fold(HomDim::Finite(0), |acc, (_, h)| acc.max(h.depth));
    Ok(FabricDimensions { per_vertex, sup })
}

/// Cofabric dimensions: the fabric dimensions of the opposite algebra, where
/// `Ω^{-n}(P) ≅ I` over `A` becomes `Ω^n(DI) ≅ DP`.
pub fn cofabric_dimension(
    a: &Arc<FDAlgebra>,
    e: &IdempotentSet,
    cutoff: usize,
    seed: u64,
    exec: Execution,
) -> Result<FabricDimensions> {
    fabric_dimension(&a.opposite(), e, cutoff, seed, exec)
}
