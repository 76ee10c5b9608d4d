use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::linalg::sparse::{self, SparseVec};

use super::build::build_algebra;
use super::fd::FDAlgebra;
use super::quiver::Presentation;

/// Certificate that a presented algebra is isomorphic to `B`: a vertex
/// bijection and the image of every arrow. The images kill every relation and
/// span `rad B / rad^2 B`, and the dimensions agree.
#[derive(Clone, Debug)]
pub struct AlgebraIsomorphism {
    pub vertex_map: Vec<usize>,
    pub arrow_images: Vec<SparseVec>,
}

/// Matches vertices by label.
pub fn vertex_map_by_labels(p: &Presentation, b: &FDAlgebra) -> Result<Vec<usize>> {
    p.quiver.vertices().iter().map(|l| b.vertex_by_label(l)).collect()
}

/// Searches for an isomorphism sending each arrow to a signed generator lift
/// of `B` in the matching block. `Ok(None)` means the search found nothing,
/// which does not prove non-isomorphism.
pub fn find_isomorphism(
    p: &Presentation,
    b: &FDAlgebra,
    vertex_map: &[usize],
) -> Result<Option<AlgebraIsomorphism>> {
    let a = build_algebra(p)?;
    if a.field() != b.field() {
        return Err(Error::Linalg(crate::linalg::LinalgError::FieldMismatch));
    }
    let n = p.quiver.n_vertices();
    if vertex_map.len() != n || b.n_vertices() != n || a.dim() != b.dim() {
        return Ok(None);
    }
    let mut seen = vec![false; n];
    for &v in vertex_map {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return Err(Error::InvalidIdempotent("vertex map is not a bijection".into()));
        }
    }
    let mut gens_in: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for &g in b.generators() {
        let e = b.basis_element(g);
        gens_in.entry((e.source, e.target)).or_default().push(g);
    }
    let mut arrows_in: HashMap<(usize, usize), usize> = HashMap::new();
    for ar in p.quiver.arrows() {
        *arrows_in.entry((vertex_map[ar.source], vertex_map[ar.target])).or_default() += 1;
    }
    if arrows_in.len() != gens_in.len()
        || arrows_in.iter().any(|(k, c)| gens_in.get(k).map_or(0, Vec::len) != *c)
    {
        return Ok(None);
    }
    let m = p.quiver.n_arrows();
    // relations checked as soon as their last arrow is assigned
    let mut due: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (ri, r) in p.relations.iter().enumerate() {
        let last = r.terms.iter().flat_map(|(_, w)| w.arrows.iter().copied()).max().unwrap();
        due[last].push(ri);
    }
    let mut search = Search {
        p,
        b,
        vertex_map,
        gens_in: &gens_in,
        due: &due,
        images: vec![Vec::new(); m],
        used: HashMap::new(),
        budget: 2_000_000,
    };
    if search.assign(0) {
        return Ok(Some(AlgebraIsomorphism { vertex_map: vertex_map.to_vec(), arrow_images: search.images }));
    }
    Ok(None)
}

struct Search<'a> {
    p: &'a Presentation,
    b: &'a FDAlgebra,
    vertex_map: &'a [usize],
    gens_in: &'a HashMap<(usize, usize), Vec<usize>>,
    due: &'a [Vec<usize>],
    images: Vec<SparseVec>,
    used: HashMap<usize, bool>,
    budget: usize,
}

impl Search<'_> {
    fn assign(&mut self, k: usize) -> bool {
        if k == self.images.len() {
            return true;
        }
        let ar = self.p.quiver.arrow(k);
        let key = (self.vertex_map[ar.source], self.vertex_map[ar.target]);
        let field = self.b.field();
        for &g in &self.gens_in[&key] {
            if self.used.get(&g).copied().unwrap_or(false) {
                continue;
            }
            for sign in [field.one(), field.from_i64(-1)] {
                if self.budget == 0 {
                    return false;
                }
                self.budget -= 1;
                self.images[k] = vec![(g, sign)];
                self.used.insert(g, true);
                if self.due[k].iter().all(|&ri| self.relation_vanishes(ri)) && self.assign(k + 1) {
                    return true;
                }
                self.used.insert(g, false);
                if field.characteristic() == 2 {
                    break;
                }
            }
        }
        false
    }

    fn relation_vanishes(&self, ri: usize) -> bool {
        let field = self.b.field();
        let mut acc = Vec::new();
        for (c, w) in &self.p.relations[ri].terms {
            let mut v = self.images[w.arrows[0]].clone();
            for &a in &w.arrows[1..] {
                v = self.b.mul(&self.images[a], &v);
                if v.is_empty() {
                    break;
                }
            }
            acc.extend(v.into_iter().map(|(i, x)| (i, x.mul_ref(c))));
        }
        sparse::collect(field, acc).is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{quiver_of, Quiver};
    use crate::linalg::Field;

    #[test]
    fn quiver_of_roundtrip_recovers_square() {
        let mut q = Quiver::new();
        for v in ["1", "2", "3", "4"] {
            q.add_vertex(v).unwrap();
        }
        q.connect("a", "1", "2").unwrap();
        q.connect("b", "2", "4").unwrap();
        q.connect("c", "1", "3").unwrap();
        q.connect("d", "3", "4").unwrap();
        let mut p = Presentation::new(Field::Rational, q);
        p.relate_str(&[(1, "b*a"), (1, "d*c")]).unwrap();
        let a = build_algebra(&p).unwrap();
        let back = quiver_of(&a).unwrap();
        assert_eq!(back.quiver.n_arrows(), 4);
        assert_eq!(back.relations.len(), 1);
        let vm = vertex_map_by_labels(&p, &a).unwrap();
        assert!(find_isomorphism(&p, &a, &vm).unwrap().is_some());
        // the anticommutative square is reached through a sign change
        let mut p2 = p.clone();
        p2.relations.clear();
        p2.relate_str(&[(1, "b*a"), (-1, "d*c")]).unwrap();
        assert!(find_isomorphism(&p2, &a, &vm).unwrap().is_some());
        // the zero relation version is not
        let mut p3 = p.clone();
        p3.relations.clear();
        p3.relate_str(&[(1, "b*a")]).unwrap();
        assert!(find_isomorphism(&p3, &a, &vm).unwrap().is_none());
    }
}
