use std::collections::{BTreeMap, HashMap, HashSet};

use crate::error::Result;
use crate::linalg::sparse::{self, SparseEchelon, SparseVec};

use super::fd::FDAlgebra;
use super::quiver::{PathWord, Presentation, Quiver, Relation};

/// Gabriel quiver of `A` with arrows the chosen lifts of `rad/rad^2`, and a
/// generating set of the relations found degree by degree.
pub fn quiver_of(a: &FDAlgebra) -> Result<Presentation> {
    let mut q = Quiver::new();
    for l in a.labels() {
        q.add_vertex(l.clone())?;
    }
    let mut used = HashSet::new();
    for (k, &g) in a.generators().iter().enumerate() {
        let b = a.basis_element(g);
        let base = match (&b.path, a.quiver()) {
            (Some(p), Some(aq)) if !p.is_trivial() => {
                p.arrows.iter().rev().map(|&x| aq.arrow(x).name.clone()).collect::<Vec<_>>().join(".")
            }
            _ => format!("g{k}"),
        };
        let mut name = base.clone();
        let mut n = 2;
        while !used.insert(name.clone()) {
            name = format!("{base}_{n}");
            n += 1;
        }
        q.add_arrow(name, b.source, b.target)?;
    }
    let field = a.field();
    let top = a.loewy_length();
    let mut pres = Presentation::new(field, q.clone());
    if top < 2 {
        return Ok(pres);
    }
    // paths of length 2..=top grouped by block, ascending path order
    let mut blocks: BTreeMap<(usize, usize), Vec<PathWord>> = BTreeMap::new();
    let mut value: HashMap<PathWord, SparseVec> = HashMap::new();
    let mut layer: Vec<(PathWord, SparseVec)> = (0..q.n_arrows())
        .map(|i| (PathWord::arrow(&q, i), a.unit(a.generators()[i])))
        .collect();
    for _ in 2..=top {
        let mut next = Vec::new();
        for (w, v) in &layer {
            for x in q.arrows_from(w.target) {
                let img = a.mul(&a.unit(a.generators()[x]), v);
                let nw = w.then_arrow(&q, x);
                blocks.entry((nw.source, nw.target)).or_default().push(nw.clone());
                value.insert(nw.clone(), img.clone());
                next.push((nw, img));
            }
        }
        layer = next;
    }
    for v in blocks.values_mut() {
        v.sort();
    }
    let col: HashMap<&PathWord, usize> =
        blocks.values().flat_map(|v| v.iter().enumerate().map(|(i, w)| (w, i))).collect();
    let mut found: Vec<SparseVec> = Vec::new();
    let mut found_block: Vec<(usize, usize)> = Vec::new();
    for d in 2..=top {
        for (&(s, t), paths) in &blocks {
            let cols: Vec<usize> = (0..paths.len()).filter(|&i| paths[i].len() <= d).collect();
            if cols.is_empty() {
                continue;
            }
            // equations: sum_j x_j value(path_j) = 0
            let mut eq: BTreeMap<usize, Vec<(usize, crate::linalg::Scalar)>> = BTreeMap::new();
            for &j in &cols {
                for (i, x) in &value[&paths[j]] {
                    eq.entry(*i).or_default().push((j, x.clone()));
                }
            }
            let rows: Vec<SparseVec> = eq.into_values().collect();
            let kernel = sparse::sparse_kernel(field, paths.len(), &rows);
            let kernel: Vec<SparseVec> =
                kernel.into_iter().filter(|v| v.iter().all(|(j, _)| paths[*j].len() <= d)).collect();
            let mut ideal = SparseEchelon::new(field, paths.len());
            for (g, &(gs, gt)) in found.iter().zip(&found_block) {
                let glen = g.iter().map(|(j, _)| blocks[&(gs, gt)][*j].len()).max().unwrap();
                if glen > d {
                    continue;
                }
                for (lv, lu) in (0..=(d - glen)).flat_map(|tot| (0..=tot).map(move |lv| (lv, tot - lv))) {
                    for pv in q.paths_to(gs, lv) {
                        if pv.source != s {
                            continue;
                        }
                        for pu in q.paths_from(gt, lu) {
                            if pu.target != t {
                                continue;
                            }
                            let row = g.iter().map(|(j, x)| {
                                let w = pv.then(&blocks[&(gs, gt)][*j]).unwrap().then(&pu).unwrap();
                                (col[&w], x.clone())
                            });
                            ideal.insert(&sparse::collect(field, row));
                        }
                    }
                }
            }
            for k in kernel {
                if ideal.insert(&k).is_some() {
                    found.push(k);
                    found_block.push((s, t));
                }
            }
        }
    }
    for (g, blk) in found.iter().zip(&found_block) {
        let terms = g.iter().map(|(j, x)| (x.clone(), blocks[blk][*j].clone())).collect();
        pres.add_relation(Relation::new(terms))?;
    }
    Ok(pres)
}
