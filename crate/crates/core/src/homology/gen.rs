use std::fmt;

use crate::algebra::IdempotentSet;
use crate::error::Result;
use crate::rep::Representation;

use super::ext::ext_dims_from;
use super::{minimal_resolution, minimal_resolution_with, Direction, ResolveOptions, Termination};

/// Resolution level `l` in `gen_l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Level {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Level::Finite(l) => write!(f, "{l}"),
            Level::Infinite => write!(f, "inf"),
        }
    }
}

/// Membership of `M` in `gen_l(Ae)`, decided twice: from the tops of the
/// minimal resolution terms, and from `Ext^i(M, F) = 0` for `i <= l` and every
/// indecomposable injective `A/<e>`-module `F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenMembershipReport {
    pub e: IdempotentSet,
    pub level: Level,
    pub by_resolution: Option<bool>,
    pub by_ext: Option<bool>,
    /// First resolution term not in `add(Ae)`.
    pub first_violation: Option<usize>,
    /// Number of resolution terms inspected.
    pub inspected: usize,
}

impl GenMembershipReport {
    /// The common verdict, `None` when the methods disagree or were inconclusive.
    pub fn verdict(&self) -> Option<bool> {
        match (self.by_resolution, self.by_ext) {
            (Some(a), Some(b)) if a == b => Some(a),
            _ => None,
        }
    }

    pub fn agree(&self) -> bool {
        self.by_resolution == self.by_ext
    }
}

pub fn gen_membership(m: &Representation, e: &IdempotentSet, level: Level, cutoff: usize) -> Result<GenMembershipReport> {
    let a = m.algebra();
    a.check_idempotent(e)?;
    let res = match level {
        Level::Finite(l) => minimal_resolution_with(m, Direction::Projective, ResolveOptions { terms: l + 2, detect_period: false }),
        Level::Infinite => minimal_resolution(m, Direction::Projective, cutoff),
    };
    // number of terms that determine the answer, and whether they are all known
    let (needed, conclusive) = match (level, res.status) {
        (Level::Finite(l), _) => (l + 1, true),
        (Level::Infinite, Termination::Terminated) => (res.terms.len(), true),
        (Level::Infinite, Termination::Periodic { .. }) => (res.terms.len(), true),
        (Level::Infinite, Termination::Truncated) => (res.terms.len(), false),
    };
    let first_violation = (0..needed.min(res.terms.len()))
        .find(|&i| res.terms[i].copies.iter().any(|v| !e.contains(*v)));
    let by_resolution = match first_violation {
        Some(_) => Some(false),
        None if conclusive => Some(true),
        None => None,
    };

    let comp = e.complement(a.n_vertices());
    let by_ext = if comp.is_empty() {
        Some(true)
    } else {
        let qa = a.quotient(e)?;
        let mut vanish = true;
        // resolution long enough for Ext in degrees < needed
        let full = minimal_resolution_with(m, Direction::Projective, ResolveOptions { terms: needed + 1, detect_period: false });
        for (i, _) in comp.iter().enumerate() {
            let f = Representation::injective(&qa, i).inflate()?;
            let ext = ext_dims_from(&full, &f, needed.saturating_sub(1));
            if ext.iter().take(needed).any(|&x| x != 0) {
                vanish = false;
                break;
            }
        }
        if vanish && !conclusive {
            None
        } else {
            Some(vanish)
        }
    };
    Ok(GenMembershipReport { e: e.clone(), level, by_resolution, by_ext, first_violation, inspected: needed })
}

/// Membership of `M` in `cogen_l(eA)`, via `D M ∈ gen_l(A^op e)`.
pub fn cogen_membership(m: &Representation, e: &IdempotentSet, level: Level, cutoff: usize) -> Result<GenMembershipReport> {
    gen_membership(&m.dual(), e, level, cutoff)
}
