use std::sync::Arc;

use crate::algebra::FDAlgebra;
use crate::error::{Error, Result};
use crate::par::Execution;
use crate::rep::{is_isomorphic, Representation};

use super::ext::ext_dims_from;
use super::{
    cosyzygy_n, inj_dim, minimal_resolution, minimal_resolution_with, proj_dim, syzygy_n, Direction, HomDim,
    ResolveOptions, Termination,
};

/// `Gor.dim A = max(inj.dim _AA, proj.dim DA)`, with each indecomposable
/// projective and injective resolved independently.
pub fn gorenstein_dimension(a: &Arc<FDAlgebra>, cutoff: usize, exec: Execution) -> HomDim {
    let n = a.n_vertices();
    let dims = exec.map_range(2 * n, |k| {
        if k < n {
            inj_dim(&Representation::projective(a, k), cutoff)
        } else {
            proj_dim(&Representation::injective(a, k - n), cutoff)
        }
    });
    dims.into_iter().fold(HomDim::Finite(0), HomDim::max)
}

/// `gl.dim A`, the supremum of the projective dimensions of the simples.
pub fn global_dimension(a: &Arc<FDAlgebra>, cutoff: usize, exec: Execution) -> HomDim {
    exec.map_range(a.n_vertices(), |v| proj_dim(&Representation::simple(a, v), cutoff))
        .into_iter()
        .fold(HomDim::Finite(0), HomDim::max)
}

/// Vertices `w` whose injective `I_w` is projective, together with the vertex
/// of the matching projective. `I_w` is projective iff its top is a single
/// simple `S_u` and it has the dimension vector of `P_u`.
pub fn projective_injective_vertices(a: &Arc<FDAlgebra>) -> Vec<Option<usize>> {
    (0..a.n_vertices())
        .map(|w| {
            let i = Representation::injective(a, w);
            let top = i.top_vector();
            if top.iter().sum::<usize>() != 1 {
                return None;
            }
            let u = top.iter().position(|&x| x == 1).unwrap();
            (Representation::projective(a, u).dims() == i.dims()).then_some(u)
        })
        .collect()
}

/// Every indecomposable injective is projective.
pub fn is_self_injective(a: &Arc<FDAlgebra>) -> bool {
    projective_injective_vertices(a).iter().all(Option::is_some)
}

/// Number of leading projective-injective terms in the minimal injective
/// coresolution of `_AA`.
pub fn dominant_dimension(a: &Arc<FDAlgebra>, cutoff: usize, exec: Execution) -> HomDim {
    let pi = projective_injective_vertices(a);
    let per_vertex = exec.map_range(a.n_vertices(), |v| {
        let res = minimal_resolution(&Representation::projective(a, v), Direction::Injective, cutoff);
        for (k, t) in res.terms.iter().enumerate() {
            if t.copies.iter().any(|&w| pi[w].is_none()) {
                return HomDim::Finite(k);
            }
        }
        match res.status {
            Termination::Terminated => HomDim::Infinite { period: None },
            Termination::Periodic { start, period } => HomDim::Infinite { period: Some((start, period)) },
            Termination::Truncated => HomDim::AtLeast(res.terms.len()),
        }
    });
    per_vertex.into_iter().fold(HomDim::Infinite { period: None }, HomDim::min)
}

/// Outcome of a Gorenstein projectivity or injectivity test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GorensteinCheck {
    /// Verdict from Ext vanishing in degrees `1..=n`.
    pub verdict: bool,
    pub gorenstein_dimension: usize,
    /// `Ω^n Ω^{-n} M ≅ M` (resp. the dual); corroboration only.
    pub corroborated: Option<bool>,
}

fn certified_n(a: &Arc<FDAlgebra>, cutoff: usize) -> Result<usize> {
    gorenstein_dimension(a, cutoff, Execution::Sequential).finite().ok_or(Error::NotGorensteinCertified)
}

/// `Ext^i(M, A) = 0` for `1 <= i <= Gor.dim A`.
pub fn is_gorenstein_projective(m: &Representation, cutoff: usize) -> Result<GorensteinCheck> {
    let a = m.algebra();
    let n = certified_n(a, cutoff)?;
    let reg = Representation::regular(a);
    let res = minimal_resolution_with(m, Direction::Projective, ResolveOptions { terms: n + 2, detect_period: false });
    let ext = ext_dims_from(&res, &reg, n);
    let verdict = ext[1..].iter().all(|&e| e == 0);
    let corroborated = if verdict && n > 0 {
        let back = syzygy_n(&cosyzygy_n(m, n), n);
        Some(is_isomorphic(&back, m)?.is_some())
    } else {
        None
    };
    Ok(GorensteinCheck { verdict, gorenstein_dimension: n, corroborated })
}

/// `Ext^i(DA, M) = 0` for `1 <= i <= Gor.dim A`.
pub fn is_gorenstein_injective(m: &Representation, cutoff: usize) -> Result<GorensteinCheck> {
    let a = m.algebra();
    let n = certified_n(a, cutoff)?;
    let da = Representation::dual_regular(a);
    let res = minimal_resolution_with(&da, Direction::Projective, ResolveOptions { terms: n + 2, detect_period: false });
    let ext = ext_dims_from(&res, m, n);
    let verdict = ext[1..].iter().all(|&e| e == 0);
    let corroborated = if verdict && n > 0 {
        let back = cosyzygy_n(&syzygy_n(m, n), n);
        Some(is_isomorphic(&back, m)?.is_some())
    } else {
        None
    };
    Ok(GorensteinCheck { verdict, gorenstein_dimension: n, corroborated })
}
