//! Higher Nakayama algebras of type Ã from Kupisch series, the reduction of a
//! Kupisch series and the contraction of a higher Nakayama algebra to a
//! self-injective one.

mod reduce;

pub use reduce::{
    contraction_pass, kupisch_reduce, reduce_to_selfinjective, relabel_after_reduction, ReductionRound,
    ReductionStage, ReductionTrace, Terminal,
};

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::algebra::{build_algebra, FDAlgebra, PathWord, Presentation, Quiver, Relation};
use crate::error::{Error, Result};
use crate::linalg::Field;

/// A finite Kupisch series `(l_0, ..., l_{k-1})`, extended periodically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KupischSeries(Vec<usize>);

impl KupischSeries {
    pub fn new(entries: Vec<usize>) -> Result<KupischSeries> {
        let k = entries.len();
        if k == 0 {
            return Err(Error::InvalidKupisch("empty series".into()));
        }
        if let Some(i) = entries.iter().position(|&l| l == 0) {
            return Err(Error::InvalidKupisch(format!("l_{i} = 0 is not positive")));
        }
        for i in 1..k {
            if entries[i] < 2 {
                return Err(Error::InvalidKupisch(format!("l_{i} = {} < 2", entries[i])));
            }
        }
        for i in 0..k.saturating_sub(1) {
            if entries[i] > entries[i + 1] + 1 {
                return Err(Error::InvalidKupisch(format!(
                    "l_{i} - l_{} = {} > 1",
                    i + 1,
                    entries[i] - entries[i + 1]
                )));
            }
        }
        if entries[0] != 1 && entries[k - 1] > entries[0] + 1 {
            return Err(Error::InvalidKupisch(format!(
                "l_{} - l_0 = {} > 1",
                k - 1,
                entries[k - 1] - entries[0]
            )));
        }
        Ok(KupischSeries(entries))
    }

    /// The constant series `(l, ..., l)` of length `k`.
    pub fn constant(l: usize, k: usize) -> Result<KupischSeries> {
        KupischSeries::new(vec![l; k])
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }

    /// `l_i` with `l_{i + k} = l_i`.
    pub fn at(&self, i: i64) -> usize {
        self.0[i.rem_euclid(self.k() as i64) as usize]
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&l| l == self.0[0])
    }

    pub fn max(&self) -> usize {
        *self.0.iter().max().unwrap()
    }

    /// The series `(l_r, l_{r+1}, ..., l_{r-1})`.
    pub fn rotated(&self, r: usize) -> KupischSeries {
        let k = self.k();
        KupischSeries((0..k).map(|i| self.0[(i + r) % k]).collect())
    }
}

impl fmt::Display for KupischSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Vertex `(i_1 < ... < i_n)` of a higher Nakayama quiver, with `0 <= i_1 < k`.
pub type NakVertex = Vec<i64>;

/// `A^(n)_l` with its vertex tuples.
#[derive(Clone, Debug)]
pub struct HigherNakayama {
    pub n: usize,
    pub series: KupischSeries,
    /// Vertex tuples in the order of the quiver's vertices.
    pub vertices: Vec<NakVertex>,
    pub presentation: Presentation,
    pub algebra: Arc<FDAlgebra>,
}

impl HigherNakayama {
    pub fn vertex_index(&self, v: &[i64]) -> Option<usize> {
        self.vertices.iter().position(|w| w.as_slice() == v)
    }
}

/// Exclusive upper bound for the last coordinate of a vertex starting at `i_1`.
pub fn width_bound(n: usize, l: &KupischSeries, i1: i64) -> i64 {
    i1 + n as i64 + l.at(i1) as i64 - 1
}

/// Shifts a tuple by multiples of `k` so that its first entry lies in `[0, k)`.
pub fn normalize(v: &[i64], k: usize) -> NakVertex {
    let s = v[0].div_euclid(k as i64) * k as i64;
    v.iter().map(|x| x - s).collect()
}

fn is_vertex(n: usize, l: &KupischSeries, v: &[i64]) -> bool {
    v.len() == n && v.windows(2).all(|w| w[0] < w[1]) && v[n - 1] < width_bound(n, l, v[0])
}

/// All vertex tuples for `(n, l)` in lexicographic order.
pub fn nakayama_vertices(n: usize, l: &KupischSeries) -> Vec<NakVertex> {
    fn extend(n: usize, bound: i64, cur: &mut Vec<i64>, out: &mut Vec<NakVertex>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        let start = cur.last().unwrap() + 1;
        for x in start..bound {
            cur.push(x);
            extend(n, bound, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for i1 in 0..l.k() as i64 {
        let bound = width_bound(n, l, i1);
        if i1 + n as i64 - 1 < bound {
            extend(n, bound, &mut vec![i1], &mut out);
        }
    }
    out
}

/// Vertex labels: digits concatenated when every entry is a single digit,
/// otherwise separated by dots.
pub fn vertex_label(v: &[i64], short: bool) -> String {
    let parts: Vec<String> = v.iter().map(i64::to_string).collect();
    if short {
        parts.concat()
    } else {
        parts.join(".")
    }
}

/// Target of the arrow raising coordinate `m` of `v`, un-normalized.
fn raise(n: usize, l: &KupischSeries, v: &[i64], m: usize) -> Option<NakVertex> {
    let mut w = v.to_vec();
    w[m] += 1;
    if m + 1 < n && w[m] >= w[m + 1] {
        return None;
    }
    if w[n - 1] >= width_bound(n, l, v[0]) {
        return None;
    }
    let w = normalize(&w, l.k());
    is_vertex(n, l, &w).then_some(w)
}

/// Builds `A^(n)_l` over the given field: arrows raise one coordinate, and
/// each pair of raises from a vertex commutes, a path being zero when the
/// other order leaves the vertex set. For `n = 1` the paths of length `l_i`
/// starting at `i` vanish.
pub fn higher_nakayama_in(field: Field, n: usize, l: &KupischSeries) -> Result<HigherNakayama> {
    if n == 0 {
        return Err(Error::ParameterOutOfRange("n must be positive".into()));
    }
    let vertices = nakayama_vertices(n, l);
    let short = vertices.iter().flatten().all(|&x| (0..10).contains(&x));
    let index: HashMap<NakVertex, usize> = vertices.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
    let mut q = Quiver::new();
    for v in &vertices {
        q.add_vertex(vertex_label(v, short))?;
    }
    // arrow out of (vertex, coordinate)
    let mut arrows: HashMap<(usize, usize), (usize, usize)> = HashMap::new();
    for (i, v) in vertices.iter().enumerate() {
        for m in 0..n {
            if let Some(w) = raise(n, l, v, m) {
                let t = index[&w];
                let name = format!("a{}_{}", m + 1, vertex_label(v, short));
                let id = q.add_arrow(name, i, t)?;
                arrows.insert((i, m), (id, t));
            }
        }
    }
    let mut p = Presentation::new(field, q);
    let path = |p: &Presentation, ids: &[usize]| PathWord::from_arrows(&p.quiver, ids);
    for (i, _) in vertices.iter().enumerate() {
        for m in 0..n {
            for m2 in m + 1..n {
                let first = arrows.get(&(i, m)).and_then(|&(a, t)| arrows.get(&(t, m2)).map(|&(b, _)| vec![a, b]));
                let second = arrows.get(&(i, m2)).and_then(|&(a, t)| arrows.get(&(t, m)).map(|&(b, _)| vec![a, b]));
                let terms = match (first, second) {
                    (Some(x), Some(y)) => vec![(field.one(), path(&p, &x)?), (field.from_i64(-1), path(&p, &y)?)],
                    (Some(x), None) | (None, Some(x)) => vec![(field.one(), path(&p, &x)?)],
                    (None, None) => continue,
                };
                p.add_relation(Relation::new(terms))?;
            }
        }
        // straight run along the last coordinate
        let v = &vertices[i];
        let steps = width_bound(n, l, v[0]) - v[n - 1];
        let mut cur = i;
        let mut ids = Vec::new();
        for _ in 0..steps {
            match arrows.get(&(cur, n - 1)) {
                Some(&(a, t)) => {
                    ids.push(a);
                    cur = t;
                }
                None => break,
            }
        }
        if ids.len() as i64 == steps && steps > 0 {
            let w = path(&p, &ids)?;
            p.add_relation(Relation::new(vec![(field.one(), w)]))?;
        }
    }
    let algebra = build_algebra(&p)?;
    Ok(HigherNakayama { n, series: l.clone(), vertices, presentation: p, algebra })
}

/// [`higher_nakayama_in`] over the rationals.
pub fn higher_nakayama(n: usize, l: &KupischSeries) -> Result<HigherNakayama> {
    higher_nakayama_in(Field::Rational, n, l)
}

#[cfg(test)]
mod tests;
