//! Quivers, admissible presentations and finite-dimensional algebras.

mod build;
mod fd;
mod iso;
mod quiver;
mod quiver_of;

pub use build::{build_algebra, build_algebra_with, BuildMethod, BuildOptions};
pub use fd::{BasisElement, FDAlgebra, Origin};
pub use iso::{find_isomorphism, vertex_map_by_labels, AlgebraIsomorphism};
pub use quiver::{Arrow, IdempotentSet, PathWord, Presentation, Quiver, Relation};
pub use quiver_of::quiver_of;

use std::sync::Arc;

use crate::error::Result;

/// `eAe` for the vertex set `e`.
pub fn corner(a: &Arc<FDAlgebra>, e: &IdempotentSet) -> Result<Arc<FDAlgebra>> {
    a.corner(e)
}

/// `A/AeA` for the vertex set `e`.
pub fn quotient_by_idempotent_ideal(a: &Arc<FDAlgebra>, e: &IdempotentSet) -> Result<Arc<FDAlgebra>> {
    a.quotient(e)
}
