use std::sync::Arc;

use crate::algebra::{FDAlgebra, IdempotentSet};
use crate::error::{Error, Result};
use crate::homology::{
    ext_dims_from, global_dimension, minimal_resolution_with, proj_dim, Direction, HomDim, ProjSum, ResolveOptions,
};
use crate::par::Execution;
use crate::rep::{add_multiplicities, is_isomorphic, Representation};

use super::check::quotient_projectives;

/// Verification record for `T = Ae ⊕ A/<f>`.
#[derive(Clone, Debug)]
pub struct TiltingReport {
    pub module: Representation,
    /// Labels of the pairwise non-isomorphic indecomposable summands.
    pub summand_names: Vec<String>,
    pub summands: Vec<Representation>,
    pub proj_dim_at_most_one: bool,
    pub ext1_vanishes: bool,
    /// Every `Ae_u` embeds into some `T_0 ∈ add(Ae)` with cokernel in `add(T)`.
    pub coresolves_regular: bool,
    /// Vertices `u` where the coresolution failed.
    pub failures: Vec<usize>,
    pub transcript: Vec<String>,
}

impl TiltingReport {
    pub fn passes(&self) -> bool {
        self.proj_dim_at_most_one && self.ext1_vanishes && self.coresolves_regular
    }

    /// Number of indecomposable summands equals the number of simples.
    pub fn has_full_rank(&self) -> bool {
        self.summands.len() == self.module.algebra().n_vertices()
    }
}

/// Left `add(Ae)`-approximation `Ae_u -> ⊕ Ae_w`, one copy of `Ae_w` per basis
/// element of `e_u A e_w`.
fn approximation(a: &Arc<FDAlgebra>, e: &IdempotentSet, u: usize) -> (Representation, crate::rep::ModuleMap) {
    let field = a.field();
    let mut copies = Vec::new();
    let mut gens = Vec::new();
    for w in e.iter() {
        for &x in a.block(w, u) {
            gens.push((copies.len(), x));
            copies.push(w);
        }
    }
    let target_sum = ProjSum { copies };
    let target = target_sum.module(a);
    let coords = target_sum.coords(a, u);
    let mut image = vec![field.zero(); target.dim_at(u)];
    for (c, x) in gens {
        let r = coords.iter().position(|&(k, b)| k == c && b == x).expect("coordinate");
        image[r] = field.one();
    }
    let src = ProjSum { copies: vec![u] };
    let p = src.module(a);
    (target.clone(), src.map_from_images(a, &p, &target, &[image]))
}

/// Checks the tilting axioms for `T = Ae ⊕ A/<f>` and that the coresolution
/// `0 -> A -> T_0 -> T_1 -> 0` can be taken with `T_0 ∈ add(Ae)`.
pub fn special_tilting_report(a: &Arc<FDAlgebra>, f: &IdempotentSet, e: &IdempotentSet) -> Result<TiltingReport> {
    a.check_idempotent(f)?;
    a.check_idempotent(e)?;
    let mut names = Vec::new();
    let mut summands = Vec::new();
    for w in e.iter() {
        names.push(format!("P{}", a.label(w)));
        summands.push(Representation::projective(a, w));
    }
    let mut quotients = Vec::new();
    for (v, q) in quotient_projectives(a, f)? {
        let dup = e.iter().any(|w| {
            let p = Representation::projective(a, w);
            p.dims() == q.dims() && is_isomorphic(&p, &q).ok().flatten().is_some()
        });
        quotients.push(q.clone());
        if !dup {
            names.push(format!("Q{}", a.label(v)));
            summands.push(q);
        }
    }
    let module = Representation::direct_sum(a, &summands).0;
    let mut transcript = vec![format!("T = {}", names.join(" + "))];

    let mut pd_ok = true;
    let mut ext_ok = true;
    for q in &quotients {
        let res = minimal_resolution_with(q, Direction::Projective, ResolveOptions { terms: 3, detect_period: false });
        if res.syzygies.get(2).is_some_and(|s| !s.is_zero()) {
            pd_ok = false;
        }
        if ext_dims_from(&res, &module, 1)[1] != 0 {
            ext_ok = false;
        }
    }
    transcript.push(format!("proj.dim T <= 1: {pd_ok}"));
    transcript.push(format!("Ext^1(T,T) = 0: {ext_ok}"));

    let mut failures = Vec::new();
    for u in 0..a.n_vertices() {
        let (t0, map) = approximation(a, e, u);
        let ok = if t0.is_zero() || !map.is_mono() {
            false
        } else {
            let (coker, _) = map.cokernel();
            add_multiplicities(&summands, &coker)?.1
        };
        if !ok {
            failures.push(u);
        }
    }
    let coresolves = failures.is_empty();
    transcript.push(format!(
        "A -> T0 -> T1 with T0 in add(Ae): {}",
        if coresolves {
            "yes".to_string()
        } else {
            format!("fails at {}", failures.iter().map(|&u| a.label(u)).collect::<Vec<_>>().join(","))
        }
    ));
    transcript.push(format!("{} summands, {} simples", summands.len(), a.n_vertices()));
    Ok(TiltingReport {
        module,
        summand_names: names,
        summands,
        proj_dim_at_most_one: pd_ok,
        ext1_vanishes: ext_ok,
        coresolves_regular: coresolves,
        failures,
        transcript,
    })
}

/// `Ae ⊕ A/<f>` after all checks of [`special_tilting_report`] pass.
pub fn special_tilting_module(a: &Arc<FDAlgebra>, f: &IdempotentSet, e: &IdempotentSet) -> Result<Representation> {
    let r = special_tilting_report(a, f, e)?;
    if r.passes() {
        Ok(r.module)
    } else {
        Err(Error::VerificationFailed(r.transcript.join("; ")))
    }
}

/// Certificate that the corner `fAf` has the singularity category of `A`.
#[derive(Clone, Debug)]
pub struct SingularReduction {
    pub corner: Arc<FDAlgebra>,
    pub quotient_global_dimension: HomDim,
    /// `proj.dim` of `fA` as a left `fAf`-module.
    pub corner_proj_dim: HomDim,
}

/// Checks `gl.dim A/<f> < ∞` and `proj.dim_{fAf}(fA) < ∞` and returns `fAf`.
pub fn singular_reduction(a: &Arc<FDAlgebra>, f: &IdempotentSet, cutoff: usize) -> Result<SingularReduction> {
    a.check_idempotent(f)?;
    let gl = if f.len() == a.n_vertices() {
        HomDim::Finite(0)
    } else {
        global_dimension(&a.quotient(f)?, cutoff, Execution::default())
    };
    if !gl.is_finite() {
        return Err(Error::InfiniteQuotientGlobalDimension(gl.to_string()));
    }
    let corner = a.corner(f)?;
    let fa = Representation::regular(a).restrict_to_corner(&corner)?;
    let pd = proj_dim(&fa, cutoff);
    if !pd.is_finite() {
        return Err(Error::CornerProjDimUnbounded(pd.to_string()));
    }
    Ok(SingularReduction { corner, quotient_global_dimension: gl, corner_proj_dim: pd })
}
