use std::sync::Arc;

use crate::algebra::{find_isomorphism, FDAlgebra, IdempotentSet};
use crate::error::{Error, Result};
use crate::fabric::{check_fabric_definitional, singular_reduction};
use crate::homology::{global_dimension, is_self_injective, HomDim};
use crate::par::Execution;

use super::{higher_nakayama_in, normalize, HigherNakayama, KupischSeries, NakVertex};

/// The reduced series `l'`, or `None` when the surviving entries do not form
/// a Kupisch series. Constant series are returned unchanged.
pub fn kupisch_reduce(n: usize, l: &KupischSeries) -> Result<Option<KupischSeries>> {
    if l.is_constant() {
        return Ok(Some(l.clone()));
    }
    let e = l.entries();
    let k = l.k();
    if e[0] == 1 || e[k - 1] > e[0] || e[1] >= e[0] {
        return Err(Error::HypothesisViolated(format!(
            "reduction needs l_0 != 1, l_(k-1) <= l_0 and l_1 < l_0, got {l}"
        )));
    }
    let k = k as i64;
    let mut out = Vec::new();
    for i in 1..k {
        // smallest n-subset starting at i avoiding multiples of k
        let mut last = i;
        for _ in 1..n {
            last += 1;
            if last % k == 0 {
                last += 1;
            }
        }
        let end = i + l.at(i) as i64 + n as i64 - 1;
        let li = (last..end).filter(|m| m % k != 0).count();
        if li >= 1 {
            out.push(li);
        }
    }
    if out.is_empty() {
        return Ok(None);
    }
    Ok(KupischSeries::new(out).ok())
}

/// Vertices of the stage whose `j`-th coordinate (1-based) is not divisible by `k`.
pub fn contraction_pass(vertices: &[NakVertex], j: usize, k: usize) -> IdempotentSet {
    IdempotentSet::new(
        vertices.iter().enumerate().filter(|(_, v)| v[j - 1].rem_euclid(k as i64) != 0).map(|(i, _)| i),
    )
}

/// Renumbers the entries not divisible by `k` consecutively, `m -> m - 1 - floor(m / k)`,
/// and normalizes for the new period `k - 1`.
pub fn relabel_after_reduction(v: &[i64], k: usize) -> NakVertex {
    let k = k as i64;
    let w: Vec<i64> = v.iter().map(|&m| m - 1 - m.div_euclid(k)).collect();
    normalize(&w, (k - 1) as usize)
}

/// One contraction pass: `f_j` on the current stage and its corner.
#[derive(Clone, Debug)]
pub struct ReductionStage {
    pub j: usize,
    pub f: IdempotentSet,
    pub f_labels: Vec<String>,
    pub companion_labels: Vec<String>,
    pub quotient_global_dimension: HomDim,
    pub corner_proj_dim: HomDim,
    pub corner: Arc<FDAlgebra>,
    pub corner_vertices: Vec<NakVertex>,
}

#[derive(Clone, Debug)]
pub struct ReductionRound {
    /// Series of the round after rotation.
    pub series: KupischSeries,
    /// `r` with `series = l.rotated(r)` for the incoming series `l`.
    pub rotation: usize,
    pub stages: Vec<ReductionStage>,
    pub reduced: Option<KupischSeries>,
    /// The final corner is isomorphic to the algebra of the reduced series.
    pub rebuilt: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Terminal {
    SelfInjective,
    /// Finite global dimension, so the singularity category vanishes.
    TrivialSingularity,
}

#[derive(Clone, Debug)]
pub struct ReductionTrace {
    pub n: usize,
    pub initial: KupischSeries,
    pub rounds: Vec<ReductionRound>,
    pub terminal: Terminal,
    /// Series of the terminal higher Nakayama algebra, when there is one.
    pub terminal_series: Option<KupischSeries>,
    pub terminal_algebra: Arc<FDAlgebra>,
    /// Global dimension certificate in the trivial case.
    pub terminal_global_dimension: Option<HomDim>,
}

impl ReductionTrace {
    /// The last corner computed, carrying the labels of the initial algebra.
    pub fn last_corner(&self) -> Option<&ReductionStage> {
        self.rounds.iter().rev().flat_map(|r| r.stages.last()).next()
    }

    pub fn describe(&self) -> Vec<String> {
        let mut out = vec![format!("n = {}, l = {}", self.n, self.initial)];
        for (r, round) in self.rounds.iter().enumerate() {
            out.push(format!("round {}: l = {} (rotation {})", r + 1, round.series, round.rotation));
            for s in &round.stages {
                out.push(format!(
                    "  pass {}: f = {{{}}}, e = {{{}}}, gl.dim A/<f> = {}, proj.dim fA = {}, corner has {} vertices",
                    s.j,
                    s.f_labels.join(","),
                    s.companion_labels.join(","),
                    s.quotient_global_dimension,
                    s.corner_proj_dim,
                    s.corner.n_vertices()
                ));
            }
            match &round.reduced {
                Some(l) => out.push(format!("  reduced series {l}, rebuilt: {}", round.rebuilt)),
                None => out.push("  reduced series is not a Kupisch series".into()),
            }
        }
        let t = match self.terminal {
            Terminal::SelfInjective => "self-injective".to_string(),
            Terminal::TrivialSingularity => format!(
                "trivial singularity category (gl.dim {})",
                self.terminal_global_dimension.map(|d| d.to_string()).unwrap_or_default()
            ),
        };
        out.push(format!(
            "terminal: {t}, {} vertices{}",
            self.terminal_algebra.n_vertices(),
            self.terminal_series.as_ref().map(|l| format!(", series {l}")).unwrap_or_default()
        ));
        out
    }
}

fn labels_of(a: &FDAlgebra, s: &IdempotentSet) -> Vec<String> {
    s.labels(a.labels())
}

fn trivial(a: &Arc<FDAlgebra>, cutoff: usize) -> Result<HomDim> {
    let gl = global_dimension(a, cutoff, Execution::default());
    if !gl.is_finite() {
        return Err(Error::VerificationFailed(format!("expected finite global dimension, found {gl}")));
    }
    Ok(gl)
}

/// Rotation bringing a maximal entry followed by a smaller one to the front.
fn rotation(l: &KupischSeries) -> usize {
    let k = l.k();
    let m = l.max();
    (0..k).find(|&r| l.entries()[r] == m && l.entries()[(r + 1) % k] < m).unwrap_or(0)
}

/// Checks that `B` (presented) is isomorphic to `a` under the given vertex tuples.
fn matches(b: &HigherNakayama, a: &FDAlgebra, tuples: &[NakVertex]) -> Result<bool> {
    if tuples.len() != b.vertices.len() {
        return Ok(false);
    }
    let mut map = Vec::with_capacity(tuples.len());
    for v in &b.vertices {
        match tuples.iter().position(|w| w == v) {
            Some(i) => map.push(i),
            None => return Ok(false),
        }
    }
    Ok(find_isomorphism(&b.presentation, a, &map)?.is_some())
}

/// Contracts `A^(n)_l` along fabric idempotents until a self-injective higher
/// Nakayama algebra or an algebra of finite global dimension remains. Each
/// stage idempotent is checked to be fabric, the singular reduction hypotheses
/// are certified, and every round's final corner is matched against the
/// algebra of the reduced series.
pub fn reduce_to_selfinjective(n: usize, l: &KupischSeries, cutoff: usize) -> Result<ReductionTrace> {
    let field = crate::linalg::Field::Rational;
    let mut current = higher_nakayama_in(field, n, l)?;
    let mut rounds = Vec::new();
    for _ in 0..=l.k() + l.max() {
        let series = current.series.clone();
        if series.is_constant() {
            if !is_self_injective(&current.algebra) {
                return Err(Error::VerificationFailed(format!("A^({n})_{series} is not self-injective")));
            }
            return Ok(ReductionTrace {
                n,
                initial: l.clone(),
                rounds,
                terminal: Terminal::SelfInjective,
                terminal_series: Some(series),
                terminal_algebra: current.algebra,
                terminal_global_dimension: None,
            });
        }
        if series.entries()[0] == 1 {
            let gl = trivial(&current.algebra, cutoff)?;
            return Ok(ReductionTrace {
                n,
                initial: l.clone(),
                rounds,
                terminal: Terminal::TrivialSingularity,
                terminal_series: Some(series),
                terminal_algebra: current.algebra,
                terminal_global_dimension: Some(gl),
            });
        }
        let r = rotation(&series);
        if r != 0 {
            let rotated = higher_nakayama_in(field, n, &series.rotated(r))?;
            // vertex v of the rotated algebra is v + r in the current one
            let shifted: Vec<NakVertex> = current
                .vertices
                .iter()
                .map(|v| normalize(&v.iter().map(|x| x - r as i64).collect::<Vec<_>>(), series.k()))
                .collect();
            if !matches(&rotated, &current.algebra, &shifted)? {
                return Err(Error::VerificationFailed(format!("rotation of {series} by {r} is not an isomorphism")));
            }
            current = rotated;
        }
        let series = current.series.clone();
        let k = series.k();
        let mut stage = current.algebra.clone();
        let mut tuples = current.vertices.clone();
        let mut stages = Vec::new();
        for j in 1..=n {
            let f = contraction_pass(&tuples, j, k);
            if f.len() == stage.n_vertices() {
                continue;
            }
            if f.is_empty() {
                return Err(Error::VerificationFailed(format!("pass {j} selects no vertices")));
            }
            let def = check_fabric_definitional(&stage, &f)?;
            if !def.proj_dim_ok {
                return Err(Error::VerificationFailed(format!("pass {j}: proj.dim A/<f> > 1")));
            }
            let Some(companion) = def.companion else {
                return Err(Error::NotFabric(format!("pass {j} idempotent {{{}}}", labels_of(&stage, &f).join(","))));
            };
            let sr = singular_reduction(&stage, &f, cutoff)?;
            let kept: Vec<NakVertex> = f.iter().map(|i| tuples[i].clone()).collect();
            stages.push(ReductionStage {
                j,
                f_labels: labels_of(&stage, &f),
                companion_labels: labels_of(&stage, &companion),
                f,
                quotient_global_dimension: sr.quotient_global_dimension,
                corner_proj_dim: sr.corner_proj_dim,
                corner: sr.corner.clone(),
                corner_vertices: kept.clone(),
            });
            stage = sr.corner;
            tuples = kept;
        }
        let reduced = kupisch_reduce(n, &series)?;
        let Some(next) = reduced.clone() else {
            let gl = trivial(&stage, cutoff)?;
            rounds.push(ReductionRound { series, rotation: r, stages, reduced, rebuilt: false });
            return Ok(ReductionTrace {
                n,
                initial: l.clone(),
                rounds,
                terminal: Terminal::TrivialSingularity,
                terminal_series: None,
                terminal_algebra: stage,
                terminal_global_dimension: Some(gl),
            });
        };
        let rebuilt = higher_nakayama_in(field, n, &next)?;
        let relabeled: Vec<NakVertex> = tuples.iter().map(|v| relabel_after_reduction(v, k)).collect();
        if !matches(&rebuilt, &stage, &relabeled)? {
            return Err(Error::VerificationFailed(format!(
                "corner after round with series {series} does not match A^({n})_{next}"
            )));
        }
        rounds.push(ReductionRound { series, rotation: r, stages, reduced, rebuilt: true });
        current = rebuilt;
    }
    Err(Error::VerificationFailed("reduction did not terminate".into()))
}
