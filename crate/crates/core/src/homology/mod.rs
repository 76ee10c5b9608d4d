//! Projective covers, syzygies, minimal resolutions, Ext, the Auslander-Reiten
//! translate and the homological dimensions built from them.

mod ar;
mod dims;
mod ext;
mod gen;
mod proj;

pub use ar::{ar_translate, ar_translate_inverse, nakayama, nakayama_inverse, transpose};
pub use dims::{
    dominant_dimension, global_dimension, gorenstein_dimension, is_gorenstein_injective,
    is_gorenstein_projective, is_self_injective, projective_injective_vertices, GorensteinCheck,
};
pub use ext::{ext_dim, ext_dims, ext_dims_from, hom_complex_dual};
pub use gen::{cogen_membership, gen_membership, GenMembershipReport, Level};
pub use proj::ProjSum;

use std::fmt;
use std::sync::Arc;

use crate::algebra::FDAlgebra;
use crate::linalg::{sparse, Scalar};
use crate::rep::{is_isomorphic, ModuleMap, Representation};

/// Cutoff used when none is given: `4 * #simples + Loewy length`, unless the
/// environment variable `QFAB_DEFAULT_CUTOFF` holds a number.
pub fn default_cutoff(a: &FDAlgebra) -> usize {
    if let Some(c) = std::env::var("QFAB_DEFAULT_CUTOFF").ok().and_then(|s| s.trim().parse().ok()) {
        return c;
    }
    4 * a.n_vertices() + a.loewy_length()
}

/// Projective cover `P -> M`.
#[derive(Clone, Debug)]
pub struct Cover {
    pub summands: ProjSum,
    pub module: Representation,
    pub map: ModuleMap,
}

/// Elements of `M` at each vertex whose classes form a basis of `top M`.
fn top_generators(m: &Representation) -> Vec<(usize, Vec<Scalar>)> {
    let field = m.field();
    let (_, incl) = m.radical();
    let mut out = Vec::new();
    for v in 0..m.dims().len() {
        let d = m.dim_at(v);
        let mut ech = sparse::SparseEchelon::new(field, d);
        let b = &incl.blocks[v];
        for j in 0..b.cols() {
            ech.insert(&sparse::from_dense(&b.column(j)));
        }
        for i in 0..d {
            if ech.insert(&vec![(i, field.one())]).is_some() {
                let mut x = vec![field.zero(); d];
                x[i] = field.one();
                out.push((v, x));
            }
        }
    }
    out
}

pub fn projective_cover(m: &Representation) -> Cover {
    let a = m.algebra();
    let gens = top_generators(m);
    let summands = ProjSum { copies: gens.iter().map(|(v, _)| *v).collect() };
    let p = summands.module(a);
    let images: Vec<Vec<Scalar>> = gens.into_iter().map(|(_, x)| x).collect();
    let map = summands.map_from_images(a, &p, m, &images);
    Cover { summands, module: p, map }
}

/// Injective envelope `M -> I`; `summands` lists the socle vertices.
#[derive(Clone, Debug)]
pub struct Envelope {
    pub summands: ProjSum,
    pub module: Representation,
    pub map: ModuleMap,
}

pub fn injective_envelope(m: &Representation) -> Envelope {
    let cover = projective_cover(&m.dual());
    let map = cover.map.dual();
    let map = ModuleMap { source: m.clone(), ..map };
    Envelope { summands: cover.summands, module: map.target.clone(), map }
}

/// `Ω(M)` with its inclusion into the projective cover.
pub fn syzygy_with_cover(m: &Representation) -> (Representation, ModuleMap, Cover) {
    let cover = projective_cover(m);
    let (k, incl) = cover.map.kernel();
    (k, incl, cover)
}

pub fn syzygy(m: &Representation) -> Representation {
    syzygy_with_cover(m).0
}

pub fn syzygy_n(m: &Representation, n: usize) -> Representation {
    (0..n).fold(m.clone(), |x, _| syzygy(&x))
}

pub fn cosyzygy(m: &Representation) -> Representation {
    let env = injective_envelope(m);
    env.map.cokernel().0
}

pub fn cosyzygy_n(m: &Representation, n: usize) -> Representation {
    (0..n).fold(m.clone(), |x, _| cosyzygy(&x))
}

pub fn is_projective(m: &Representation) -> bool {
    projective_cover(m).module.total_dim() == m.total_dim()
}

pub fn is_injective(m: &Representation) -> bool {
    injective_envelope(m).module.total_dim() == m.total_dim()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Projective,
    Injective,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Termination {
    /// The last (co)syzygy is zero.
    Terminated,
    /// The cutoff was reached.
    Truncated,
    /// `Ω^(start + period) ≅ Ω^start`, certified by an explicit isomorphism.
    Periodic { start: usize, period: usize },
}

/// Minimal projective resolution `... -> P_1 -> P_0 -> M` or injective
/// coresolution `M -> I^0 -> I^1 -> ...`.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub module: Representation,
    pub direction: Direction,
    /// Summands of each term.
    pub terms: Vec<ProjSum>,
    pub modules: Vec<Representation>,
    /// `d_0: P_0 -> M`, `d_i: P_i -> P_{i-1}` (projective case);
    /// `d^0: M -> I^0`, `d^i: I^{i-1} -> I^i` (injective case).
    pub differentials: Vec<ModuleMap>,
    /// `Ω^0 = M, Ω^1, ...`, one more than the number of terms.
    pub syzygies: Vec<Representation>,
    pub status: Termination,
}

impl Resolution {
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Summands of term `i`, following the period past the computed range.
    /// `None` when the term is unknown (truncated) and empty past termination.
    pub fn term(&self, i: usize) -> Option<ProjSum> {
        if i < self.terms.len() {
            return Some(self.terms[i].clone());
        }
        match self.status {
            Termination::Terminated => Some(ProjSum::default()),
            Termination::Truncated => None,
            Termination::Periodic { start, period } => Some(self.terms[start + (i - start) % period].clone()),
        }
    }

    /// Length of the resolution when it terminates.
    pub fn length(&self) -> Option<usize> {
        (self.status == Termination::Terminated).then(|| self.terms.len().saturating_sub(1))
    }
}

/// Options for [`minimal_resolution_with`].
#[derive(Clone, Copy, Debug)]
pub struct ResolveOptions {
    /// Maximal number of terms computed.
    pub terms: usize,
    /// Stop as soon as a (co)syzygy is isomorphic to an earlier one.
    pub detect_period: bool,
}

/// Minimal (co)resolution with terms `0..=cutoff` and period detection.
pub fn minimal_resolution(m: &Representation, direction: Direction, cutoff: usize) -> Resolution {
    minimal_resolution_with(m, direction, ResolveOptions { terms: cutoff + 1, detect_period: true })
}

pub fn minimal_resolution_with(m: &Representation, direction: Direction, opts: ResolveOptions) -> Resolution {
    let mut res = Resolution {
        module: m.clone(),
        direction,
        terms: Vec::new(),
        modules: Vec::new(),
        differentials: Vec::new(),
        syzygies: vec![m.clone()],
        status: Termination::Truncated,
    };
    let mut prev_incl: Option<ModuleMap> = None;
    loop {
        let cur = res.syzygies.last().unwrap().clone();
        if cur.is_zero() {
            res.status = Termination::Terminated;
            break;
        }
        if res.terms.len() >= opts.terms {
            break;
        }
        match direction {
            Direction::Projective => {
                let (next, incl, cover) = syzygy_with_cover(&cur);
                let d = match &prev_incl {
                    Some(i) => i.compose(&cover.map),
                    None => cover.map.clone(),
                };
                res.terms.push(cover.summands);
                res.modules.push(cover.module);
                res.differentials.push(d);
                res.syzygies.push(next);
                prev_incl = Some(incl);
            }
            Direction::Injective => {
                let env = injective_envelope(&cur);
                let (next, proj) = env.map.cokernel();
                let d = match &prev_incl {
                    Some(p) => env.map.compose(p),
                    None => env.map.clone(),
                };
                res.terms.push(env.summands);
                res.modules.push(env.module);
                res.differentials.push(d);
                res.syzygies.push(next);
                prev_incl = Some(proj);
            }
        }
        if opts.detect_period {
            let k = res.syzygies.len() - 1;
            let last = &res.syzygies[k];
            if !last.is_zero() {
                let hit = (0..k).find(|&j| {
                    res.syzygies[j].dims() == last.dims()
                        && is_isomorphic(&res.syzygies[j], last).ok().flatten().is_some()
                });
                if let Some(j) = hit {
                    res.status = Termination::Periodic { start: j, period: k - j };
                    break;
                }
            }
        }
    }
    res
}

/// A homological dimension: finite, certified infinite, or at least a bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HomDim {
    Finite(usize),
    /// Infinite; certified by a periodic (co)syzygy when `period` is given.
    Infinite { period: Option<(usize, usize)> },
    AtLeast(usize),
}

impl HomDim {
    pub fn finite(self) -> Option<usize> {
        match self {
            HomDim::Finite(n) => Some(n),
            _ => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, HomDim::Finite(_))
    }

    /// Supremum of two dimensions.
    pub fn max(self, o: HomDim) -> HomDim {
        use HomDim::*;
        match (self, o) {
            (Infinite { period }, _) | (_, Infinite { period }) => Infinite { period },
            (Finite(a), Finite(b)) => Finite(a.max(b)),
            (AtLeast(a), Finite(b)) | (Finite(b), AtLeast(a)) => AtLeast(a.max(b)),
            (AtLeast(a), AtLeast(b)) => AtLeast(a.max(b)),
        }
    }

    /// Infimum of two dimensions.
    pub fn min(self, o: HomDim) -> HomDim {
        use HomDim::*;
        match (self, o) {
            (Finite(a), Finite(b)) => Finite(a.min(b)),
            (Finite(a), _) | (_, Finite(a)) => Finite(a),
            (AtLeast(a), AtLeast(b)) => AtLeast(a.min(b)),
            (AtLeast(a), Infinite { .. }) | (Infinite { .. }, AtLeast(a)) => AtLeast(a),
            (Infinite { period }, Infinite { .. }) => Infinite { period },
        }
    }
}

impl fmt::Display for HomDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomDim::Finite(n) => write!(f, "{n}"),
            HomDim::Infinite { period: Some((s, p)) } => write!(f, "inf (period {p} from step {s})"),
            HomDim::Infinite { period: None } => write!(f, "inf"),
            HomDim::AtLeast(n) => write!(f, ">={n}"),
        }
    }
}

fn res_dim(res: &Resolution, cutoff: usize) -> HomDim {
    match res.status {
        Termination::Terminated => HomDim::Finite(res.length().unwrap_or(0)),
        Termination::Periodic { start, period } => HomDim::Infinite { period: Some((start, period)) },
        Termination::Truncated => HomDim::AtLeast(cutoff + 1),
    }
}

pub fn proj_dim(m: &Representation, cutoff: usize) -> HomDim {
    res_dim(&minimal_resolution(m, Direction::Projective, cutoff), cutoff)
}

pub fn inj_dim(m: &Representation, cutoff: usize) -> HomDim {
    res_dim(&minimal_resolution(m, Direction::Injective, cutoff), cutoff)
}

/// Multiplicities of the indecomposable summands of a projective module.
pub fn projective_summands(m: &Representation) -> Option<ProjSum> {
    let c = projective_cover(m);
    (c.module.total_dim() == m.total_dim()).then_some(c.summands)
}

/// Multiplicities of the indecomposable summands of an injective module.
pub fn injective_summands(m: &Representation) -> Option<ProjSum> {
    let e = injective_envelope(m);
    (e.module.total_dim() == m.total_dim()).then_some(e.summands)
}

/// The algebra of a resolution's terms.
pub fn resolution_algebra(res: &Resolution) -> &Arc<FDAlgebra> {
    res.module.algebra()
}

#[cfg(test)]
mod tests;
