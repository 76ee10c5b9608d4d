//! Exact computations with finite-dimensional bound quiver algebras over the
//! rationals or a prime field: modules, syzygies, Ext, Auslander-Reiten
//! translates, Gorenstein and dominant dimensions, fabric idempotents and the
//! reduction of higher Nakayama algebras.

pub mod algebra;
pub mod error;
pub mod fabric;
pub mod fixtures;
pub mod homology;
pub mod io;
pub mod linalg;
pub mod nakayama;
pub mod par;
pub mod rep;

pub use error::{Error, Result};

#[cfg(test)]
pub(crate) mod test_algebras;
