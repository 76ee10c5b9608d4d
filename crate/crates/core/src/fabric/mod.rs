//! Fabric and cofabric idempotents: detection, fabric dimensions, the special
//! tilting module, singular reduction to a corner and generator switching.

mod check;
mod dimension;
mod switching;
mod tilting;

pub use check::{
    check_fabric_combinatorial, check_fabric_combinatorial_in, check_fabric_definitional, companion_holds,
    is_injective_over_quotient, is_projective_over_quotient, quotient_injectives, quotient_projectives,
    quotient_proj_dim_at_most_one, CombinatorialCheck, CompanionSearch, ConditionFailure, DefinitionalCheck,
    EXHAUSTIVE_CAP,
};
pub use dimension::{
    cofabric_dimension, fabric_dimension, injective_resolutions, syzygy_depth, FabricDimensions, SyzygyHit,
};
pub use switching::{
    gorenstein_injective_samples, verify_generator_switching, SwitchingHypothesis, SwitchingReport,
    SwitchingViolation, DEFAULT_BUDGET,
};
pub use tilting::{
    singular_reduction, special_tilting_module, special_tilting_report, SingularReduction, TiltingReport,
};

use std::sync::Arc;

use crate::algebra::{FDAlgebra, IdempotentSet, Presentation};
use crate::error::{Error, Result};
use crate::homology::{gen_membership, HomDim, Level};
use crate::par::Execution;
use crate::rep::Representation;

/// The definitional test applied to the opposite algebra: `e` is cofabric for
/// `A` exactly when it is fabric for `A^op`, with the same vertex indices.
pub fn check_cofabric(a: &Arc<FDAlgebra>, e: &IdempotentSet) -> Result<DefinitionalCheck> {
    check_fabric_definitional(&a.opposite(), e)
}

/// Companion of a fabric idempotent, or `NotFabric`.
pub fn fabric_companion(a: &Arc<FDAlgebra>, f: &IdempotentSet) -> Result<IdempotentSet> {
    let c = check_fabric_definitional(a, f)?;
    if !c.proj_dim_ok {
        return Err(Error::ProjDimTooBig);
    }
    c.companion.ok_or_else(|| Error::NotFabric(format!("{:?}", f.labels(a.labels()))))
}

/// Largest `m <= cutoff` with `DA ∈ gen_m(Ah)`, `Level::Infinite` when every
/// term of the resolution of `DA` lies in `add(Ah)`, `None` when not even `m = 0` holds.
pub fn dual_regular_gen_level(a: &Arc<FDAlgebra>, h: &IdempotentSet, cutoff: usize) -> Result<Option<Level>> {
    let da = Representation::dual_regular(a);
    let r = gen_membership(&da, h, Level::Infinite, cutoff)?;
    if r.by_resolution == Some(true) {
        return Ok(Some(Level::Infinite));
    }
    Ok(match r.first_violation {
        Some(0) => None,
        Some(i) => Some(Level::Finite(i - 1)),
        None => Some(Level::Finite(r.inspected.saturating_sub(1))),
    })
}

/// Combined outcome of the fabric analysis of `f`.
#[derive(Clone, Debug)]
pub struct FabricReport {
    pub f: IdempotentSet,
    pub companion: Option<IdempotentSet>,
    pub definitional: DefinitionalCheck,
    /// Present when a presentation was supplied and `proj.dim A/<f> <= 1`.
    pub combinatorial: Option<CombinatorialCheck>,
    pub dimensions: Option<FabricDimensions>,
    /// User-supplied `h` with the largest `m` such that `DA ∈ gen_m(Ah)`.
    pub h: Option<(IdempotentSet, Option<Level>)>,
    pub transcript: Vec<String>,
}

impl FabricReport {
    pub fn is_fabric(&self) -> bool {
        self.companion.is_some()
    }

    /// The combinatorial companion equals the `e` with `τ(A/<f>) ≅ D(A/<e>)`.
    pub fn methods_agree(&self) -> Option<bool> {
        self.combinatorial.as_ref().map(|c| c.companion == self.definitional.strong)
    }

    /// `fab.dim A/<f>`, the supremum over the indecomposable projectives.
    pub fn fabric_dimension(&self) -> Option<HomDim> {
        self.dimensions.as_ref().map(|d| d.sup)
    }
}

#[derive(Clone, Debug)]
pub struct FabricOptions {
    pub cutoff: usize,
    pub seed: u64,
    pub exec: Execution,
    pub h: Option<IdempotentSet>,
}

/// Runs the definitional test, the combinatorial test when a presentation is
/// given, and the fabric dimensions when `f` is fabric.
pub fn analyze_fabric(
    a: &Arc<FDAlgebra>,
    p: Option<&Presentation>,
    f: &IdempotentSet,
    opts: &FabricOptions,
) -> Result<FabricReport> {
    let labels = a.labels();
    let def = check_fabric_definitional(a, f)?;
    let mut transcript = vec![format!("f = {{{}}}", f.labels(labels).join(","))];
    transcript.push(format!("proj.dim A/<f> <= 1: {}", def.proj_dim_ok));
    let combinatorial = match p {
        Some(p) if def.proj_dim_ok => Some(check_fabric_combinatorial_in(p, a, f)?),
        _ => None,
    };
    if let Some(c) = &combinatorial {
        transcript.extend(c.transcript.iter().cloned());
    }
    match &def.companion {
        Some(e) => transcript.push(format!("companion e = {{{}}} ({:?})", e.labels(labels).join(","), def.search)),
        None => transcript.push(format!("no companion ({:?})", def.search)),
    }
    let dimensions = match def.companion {
        Some(_) => Some(fabric_dimension(a, f, opts.cutoff, opts.seed, opts.exec)?),
        None => None,
    };
    let h = match &opts.h {
        Some(h) => Some((h.clone(), dual_regular_gen_level(a, h, opts.cutoff)?)),
        None => None,
    };
    Ok(FabricReport { f: f.clone(), companion: def.companion.clone(), definitional: def, combinatorial, dimensions, h, transcript })
}

#[cfg(test)]
mod tests;
