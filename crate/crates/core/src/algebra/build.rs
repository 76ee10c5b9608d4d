use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::sparse::{self, SparseEchelon, SparseVec};
use crate::linalg::Field;

use super::fd::{BasisElement, FDAlgebra, Origin};
use super::quiver::{PathWord, Presentation, Quiver};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum BuildMethod {
    /// Graded elimination for homogeneous relations, truncation otherwise.
    #[default]
    Auto,
    Graded,
    Truncated,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct BuildOptions {
    pub method: BuildMethod,
    /// Largest path length tried before declaring the presentation unbounded.
    pub max_length: Option<usize>,
}

/// Builds the finite-dimensional algebra presented by a quiver with relations.
pub fn build_algebra(p: &Presentation) -> Result<Arc<FDAlgebra>> {
    build_algebra_with(p, BuildOptions::default())
}

pub fn build_algebra_with(p: &Presentation, opts: BuildOptions) -> Result<Arc<FDAlgebra>> {
    p.validate()?;
    let bound = opts
        .max_length
        .unwrap_or(2 + p.quiver.n_arrows() * p.max_relation_length().max(1));
    let std = match opts.method {
        BuildMethod::Graded => {
            if !p.is_homogeneous() {
                return Err(Error::Unsupported("graded builder needs homogeneous relations".into()));
            }
            graded(p, bound)?
        }
        BuildMethod::Truncated => truncated(p, bound)?,
        BuildMethod::Auto if p.is_homogeneous() => graded(p, bound)?,
        BuildMethod::Auto => truncated(p, bound)?,
    };
    assemble(p, std)
}

/// Standard paths with a normal-form routine for products.
struct Standard {
    paths: Vec<PathWord>,
    /// Normal form of `b_l * b_r` in standard coordinates.
    products: HashMap<(usize, usize), SparseVec>,
}

fn assemble(p: &Presentation, s: Standard) -> Result<Arc<FDAlgebra>> {
    let quiver = Arc::new(p.quiver.clone());
    let labels = p.quiver.vertices().to_vec();
    let idempotents = (0..p.quiver.n_vertices()).collect();
    let basis = s
        .paths
        .into_iter()
        .map(|w| BasisElement { source: w.source, target: w.target, path: Some(w) })
        .collect();
    Ok(Arc::new(FDAlgebra::from_parts(
        p.field,
        labels,
        basis,
        idempotents,
        s.products,
        Some(quiver),
        Origin::Presentation,
    )?))
}

/// Degree-by-degree elimination: degree `d` is spanned by arrows times standard
/// paths of degree `d-1`, modulo the relations multiplied by standard paths.
fn graded(p: &Presentation, bound: usize) -> Result<Standard> {
    let q = &p.quiver;
    let field = p.field;
    let mut levels: Vec<Vec<PathWord>> = vec![(0..q.n_vertices()).map(PathWord::trivial).collect()];
    // ext[d][(a, j)]: normal form of arrow a times the j-th standard path of degree d-1
    let mut ext: Vec<HashMap<(usize, usize), SparseVec>> = vec![HashMap::new()];
    let mut d = 1;
    loop {
        if d > bound {
            return Err(Error::NotAdmissible(format!("paths of length {bound} survive")));
        }
        let prev = &levels[d - 1];
        let mut blocks: BTreeMap<(usize, usize), Vec<(usize, usize)>> = BTreeMap::new();
        for (j, w) in prev.iter().enumerate() {
            for a in q.arrows_from(w.target) {
                blocks.entry((w.source, q.arrow(a).target)).or_default().push((a, j));
            }
        }
        let killed_by_bound = p.length_bound.is_some_and(|l| d >= l);
        let mut std_d: Vec<PathWord> = Vec::new();
        let mut nf: HashMap<(usize, usize), Vec<(PathWord, crate::linalg::Scalar)>> = HashMap::new();
        for (&(s, t), cands) in &blocks {
            let path_of = |&(a, j): &(usize, usize)| prev[j].then_arrow(q, a);
            let mut order: Vec<usize> = (0..cands.len()).collect();
            order.sort_by(|&x, &y| path_of(&cands[y]).cmp(&path_of(&cands[x])));
            let mut col = vec![0; cands.len()];
            for (c, &i) in order.iter().enumerate() {
                col[i] = c;
            }
            let cand_index: HashMap<(usize, usize), usize> =
                cands.iter().enumerate().map(|(i, c)| (*c, i)).collect();
            let mut ech = SparseEchelon::new(field, cands.len());
            if killed_by_bound {
                for i in 0..cands.len() {
                    ech.insert(&vec![(i, field.one())]);
                }
            }
            for r in &p.relations {
                let m = r.max_len();
                if r.target() != t || m > d {
                    continue;
                }
                for (pj, pw) in levels[d - m].iter().enumerate() {
                    if pw.source != s || pw.target != r.source() {
                        continue;
                    }
                    let mut row = Vec::new();
                    for (c, w) in &r.terms {
                        let (last, init) = w.arrows.split_last().unwrap();
                        let mut v = vec![(pj, field.one())];
                        for (k, &a) in init.iter().enumerate() {
                            v = apply(&ext[d - m + k + 1], a, &v, field);
                        }
                        for (j, x) in v {
                            let ci = cand_index[&(*last, j)];
                            row.push((col[ci], x.mul_ref(c)));
                        }
                    }
                    ech.insert(&sparse::collect(field, row));
                }
            }
            let rows = ech.into_reduced();
            let mut pivot_row = HashMap::new();
            for (ri, r) in rows.iter().enumerate() {
                pivot_row.insert(r[0].0, ri);
            }
            for (i, cand) in cands.iter().enumerate() {
                let c = col[i];
                let expr: Vec<(PathWord, crate::linalg::Scalar)> = match pivot_row.get(&c) {
                    None => {
                        std_d.push(path_of(cand));
                        vec![(path_of(cand), field.one())]
                    }
                    Some(&ri) => rows[ri][1..]
                        .iter()
                        .map(|(cc, x)| (path_of(&cands[order[*cc]]), x.neg_ref()))
                        .collect(),
                };
                nf.insert(*cand, expr);
            }
        }
        std_d.sort();
        let index: HashMap<&PathWord, usize> = std_d.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let ext_d: HashMap<(usize, usize), SparseVec> = nf
            .iter()
            .map(|(k, expr)| {
                let v = sparse::collect(field, expr.iter().map(|(w, x)| (index[w], x.clone())));
                (*k, v)
            })
            .collect();
        if d == 1 && std_d.len() != q.n_arrows() {
            return Err(Error::NotAdmissible("an arrow lies in the ideal".into()));
        }
        let done = std_d.is_empty();
        levels.push(std_d);
        ext.push(ext_d);
        if done {
            break;
        }
        d += 1;
    }
    let mut offsets = Vec::new();
    let mut paths = Vec::new();
    for lv in &levels {
        offsets.push(paths.len());
        paths.extend(lv.iter().cloned());
    }
    let degree_of = |i: usize| offsets.iter().rposition(|&o| o <= i).unwrap();
    let top = levels.len() - 1;
    let mut products = HashMap::new();
    for r in 0..paths.len() {
        let dr = degree_of(r);
        for l in 0..paths.len() {
            if paths[l].source != paths[r].target {
                continue;
            }
            let dl = paths[l].len();
            if dr + dl >= top {
                continue;
            }
            let mut v = vec![(r - offsets[dr], field.one())];
            for (k, &a) in paths[l].arrows.iter().enumerate() {
                v = apply(&ext[dr + k + 1], a, &v, field);
                if v.is_empty() {
                    break;
                }
            }
            if !v.is_empty() {
                let off = offsets[dr + dl];
                products.insert((l, r), v.into_iter().map(|(i, x)| (i + off, x)).collect());
            }
        }
    }
    Ok(Standard { paths, products })
}

fn apply(
    ext: &HashMap<(usize, usize), SparseVec>,
    a: usize,
    v: &SparseVec,
    field: Field,
) -> SparseVec {
    let mut acc = Vec::new();
    for (j, x) in v {
        if let Some(img) = ext.get(&(a, *j)) {
            acc.extend(img.iter().map(|(i, y)| (*i, y.mul_ref(x))));
        }
    }
    sparse::collect(field, acc)
}

/// General route: linear saturation of the ideal inside paths of length at most `n`.
fn truncated(p: &Presentation, bound: usize) -> Result<Standard> {
    let q = &p.quiver;
    let field = p.field;
    let mut n = p.max_relation_length().max(2);
    loop {
        if n > bound {
            return Err(Error::NotAdmissible(format!("paths of length {bound} survive")));
        }
        let all = all_paths(q, n);
        if all.len() > 200_000 {
            return Err(Error::Unsupported("path space too large for the truncated builder".into()));
        }
        let mut blocks: BTreeMap<(usize, usize), Vec<PathWord>> = BTreeMap::new();
        for w in &all {
            blocks.entry((w.source, w.target)).or_default().push(w.clone());
        }
        // descending path order: larger paths become pivots
        for v in blocks.values_mut() {
            v.sort_by(|x, y| y.cmp(x));
        }
        let col: HashMap<&PathWord, usize> = blocks
            .values()
            .flat_map(|v| v.iter().enumerate().map(|(i, w)| (w, i)))
            .collect();
        let mut ech: HashMap<(usize, usize), SparseEchelon> =
            blocks.iter().map(|(k, v)| (*k, SparseEchelon::new(field, v.len()))).collect();
        let by_len_to = |v: usize, l: usize| q.paths_to(v, l);
        let by_len_from = |v: usize, l: usize| q.paths_from(v, l);
        for r in &p.relations {
            let m = r.min_len();
            for lv in 0..=(n - m) {
                for pv in by_len_to(r.source(), lv) {
                    for lu in 0..=(n - m - lv) {
                        for pu in by_len_from(r.target(), lu) {
                            let mut row = Vec::new();
                            for (c, w) in &r.terms {
                                let full = pv.then(w).unwrap().then(&pu).unwrap();
                                if full.len() <= n {
                                    row.push((col[&full], c.clone()));
                                }
                            }
                            let row = sparse::collect(field, row);
                            ech.get_mut(&(pv.source, pu.target)).unwrap().insert(&row);
                        }
                    }
                }
            }
        }
        if let Some(l) = p.length_bound {
            for w in all.iter().filter(|w| w.len() >= l) {
                ech.get_mut(&(w.source, w.target)).unwrap().insert(&vec![(col[w], field.one())]);
            }
        }
        let saturated = all
            .iter()
            .filter(|w| w.len() == n)
            .all(|w| ech[&(w.source, w.target)].contains(&vec![(col[w], field.one())]));
        if !saturated {
            n += 1;
            continue;
        }
        let mut nf: HashMap<PathWord, Vec<(PathWord, crate::linalg::Scalar)>> = HashMap::new();
        let mut paths = Vec::new();
        for (k, cols) in &blocks {
            let rows = ech.remove(k).unwrap().into_reduced();
            let mut pivot_row = HashMap::new();
            for (ri, r) in rows.iter().enumerate() {
                pivot_row.insert(r[0].0, ri);
            }
            for (c, w) in cols.iter().enumerate() {
                match pivot_row.get(&c) {
                    None => {
                        paths.push(w.clone());
                        nf.insert(w.clone(), vec![(w.clone(), field.one())]);
                    }
                    Some(&ri) => {
                        let expr =
                            rows[ri][1..].iter().map(|(cc, x)| (cols[*cc].clone(), x.neg_ref())).collect();
                        nf.insert(w.clone(), expr);
                    }
                }
            }
        }
        paths.sort();
        if paths.iter().filter(|w| w.len() == 1).count() != q.n_arrows() {
            return Err(Error::NotAdmissible("an arrow lies in the ideal".into()));
        }
        let index: HashMap<&PathWord, usize> = paths.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let mut products = HashMap::new();
        for (r, wr) in paths.iter().enumerate() {
            for (l, wl) in paths.iter().enumerate() {
                let Some(full) = wr.then(wl) else { continue };
                if full.len() > n {
                    continue;
                }
                let v = sparse::collect(field, nf[&full].iter().map(|(w, x)| (index[w], x.clone())));
                if !v.is_empty() {
                    products.insert((l, r), v);
                }
            }
        }
        return Ok(Standard { paths, products });
    }
}

fn all_paths(q: &Quiver, n: usize) -> Vec<PathWord> {
    let mut out = Vec::new();
    let mut cur: Vec<PathWord> = (0..q.n_vertices()).map(PathWord::trivial).collect();
    for _ in 0..=n {
        out.extend(cur.iter().cloned());
        let mut next = Vec::new();
        for w in &cur {
            for a in q.arrows_from(w.target) {
                next.push(w.then_arrow(q, a));
            }
        }
        cur = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Field;

    fn cyclic(n: usize, zero_len: usize) -> Presentation {
        let mut q = Quiver::new();
        for i in 0..n {
            q.add_vertex(i.to_string()).unwrap();
        }
        for i in 0..n {
            q.add_arrow(format!("a{i}"), i, (i + 1) % n).unwrap();
        }
        let mut p = Presentation::new(Field::Rational, q);
        for i in 0..n {
            let names: Vec<String> = (0..zero_len).map(|k| format!("a{}", (i + k) % n)).collect();
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            p.relate(&[(1, &refs)]).unwrap();
        }
        p
    }

    fn commutative_square() -> Presentation {
        let mut q = Quiver::new();
        for v in ["1", "2", "3", "4"] {
            q.add_vertex(v).unwrap();
        }
        q.connect("a", "1", "2").unwrap();
        q.connect("b", "2", "4").unwrap();
        q.connect("c", "1", "3").unwrap();
        q.connect("d", "3", "4").unwrap();
        let mut p = Presentation::new(Field::Rational, q);
        p.relate_str(&[(1, "b*a"), (-1, "d*c")]).unwrap();
        p
    }

    #[test]
    fn commutative_square_dimension() {
        let a = build_algebra(&commutative_square()).unwrap();
        assert_eq!(a.dim(), 9);
        a.check_axioms().unwrap();
        assert_eq!(a.generators().len(), 4);
    }

    #[test]
    fn cyclic_nakayama_dimensions() {
        let a = build_algebra(&cyclic(3, 2)).unwrap();
        assert_eq!(a.dim(), 6);
        let b = build_algebra(&cyclic(2, 3)).unwrap();
        assert_eq!(b.dim(), 6);
        b.check_axioms().unwrap();
    }

    #[test]
    fn graded_and_truncated_agree() {
        for p in [commutative_square(), cyclic(3, 2), cyclic(2, 3), cyclic(1, 4)] {
            let g = build_algebra_with(&p, BuildOptions { method: BuildMethod::Graded, ..Default::default() })
                .unwrap();
            let t =
                build_algebra_with(&p, BuildOptions { method: BuildMethod::Truncated, ..Default::default() })
                    .unwrap();
            assert_eq!(g.fingerprint(), t.fingerprint());
            assert_eq!(g.basis(), t.basis());
        }
    }

    #[test]
    fn unbounded_loop_rejected() {
        let mut q = Quiver::new();
        q.add_vertex("1").unwrap();
        q.connect("x", "1", "1").unwrap();
        q.connect("y", "1", "1").unwrap();
        let mut p = Presentation::new(Field::Rational, q);
        p.relate_str(&[(1, "x*y"), (-1, "y*x")]).unwrap();
        assert!(matches!(build_algebra(&p), Err(Error::NotAdmissible(_))));
    }

    #[test]
    fn non_homogeneous_relation() {
        // x^2 = x^3 forces x^2 = 0 once long paths are truncated
        let mut q = Quiver::new();
        q.add_vertex("1").unwrap();
        q.connect("x", "1", "1").unwrap();
        let mut p = Presentation::new(Field::Rational, q);
        p.relate_str(&[(1, "x*x"), (-1, "x*x*x")]).unwrap();
        let a = build_algebra(&p).unwrap();
        assert_eq!(a.dim(), 2);
    }
}
