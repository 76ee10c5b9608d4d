use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock, Weak};

use crate::error::{Error, Result};
use crate::linalg::sparse::{self, SparseEchelon, SparseVec};
use crate::linalg::{Field, Scalar};

use super::quiver::{IdempotentSet, PathWord, Quiver};

/// Basis element living in `e_target A e_source`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasisElement {
    pub source: usize,
    pub target: usize,
    pub path: Option<PathWord>,
}

/// How an algebra was obtained from another one.
#[derive(Clone, Debug)]
pub enum Origin {
    Presentation,
    Opposite,
    Endomorphism,
    Corner {
        parent: Arc<FDAlgebra>,
        /// Parent vertex of each corner vertex.
        vertices: Vec<usize>,
        /// Parent basis index of each corner basis element.
        basis_map: Vec<usize>,
    },
    Quotient {
        parent: Arc<FDAlgebra>,
        killed: IdempotentSet,
        vertices: Vec<usize>,
        /// Parent basis index lifting each quotient basis element.
        lift: Vec<usize>,
        /// Image of each parent basis element in quotient coordinates.
        projection: Vec<SparseVec>,
    },
}

/// Finite-dimensional basic algebra given by a basis adapted to the vertex
/// idempotents and sparse structure constants.
#[derive(Debug)]
pub struct FDAlgebra {
    field: Field,
    labels: Vec<String>,
    basis: Vec<BasisElement>,
    idempotents: Vec<usize>,
    products: HashMap<(usize, usize), SparseVec>,
    generators: Vec<usize>,
    quiver: Option<Arc<Quiver>>,
    fingerprint: u64,
    origin: Origin,
    by_source: Vec<Vec<usize>>,
    by_target: Vec<Vec<usize>>,
    by_block: HashMap<(usize, usize), Vec<usize>>,
    loewy: usize,
    monomials: OnceLock<Vec<Vec<(Scalar, Vec<usize>)>>>,
    opposite: OnceLock<Arc<FDAlgebra>>,
    opposite_of: Option<Weak<FDAlgebra>>,
}

impl FDAlgebra {
    /// Assembles an algebra. `products[(l, r)]` is `b_l * b_r` (apply `b_r` first);
    /// missing keys are zero products. Every basis element other than the
    /// idempotents must lie in the radical.
    pub fn from_parts(
        field: Field,
        labels: Vec<String>,
        basis: Vec<BasisElement>,
        idempotents: Vec<usize>,
        products: HashMap<(usize, usize), SparseVec>,
        quiver: Option<Arc<Quiver>>,
        origin: Origin,
    ) -> Result<FDAlgebra> {
        let n = labels.len();
        if idempotents.len() != n {
            return Err(Error::InvalidPresentation("one idempotent per vertex required".into()));
        }
        for (v, &i) in idempotents.iter().enumerate() {
            let b = &basis[i];
            if b.source != v || b.target != v {
                return Err(Error::InvalidPresentation(format!("idempotent {i} misplaced")));
            }
        }
        let mut by_source = vec![Vec::new(); n];
        let mut by_target = vec![Vec::new(); n];
        let mut by_block: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        for (i, b) in basis.iter().enumerate() {
            by_source[b.source].push(i);
            by_target[b.target].push(i);
            by_block.entry((b.source, b.target)).or_default().push(i);
        }
        let products: HashMap<(usize, usize), SparseVec> =
            products.into_iter().filter(|(_, v)| !v.is_empty()).collect();
        let mut alg = FDAlgebra {
            field,
            labels,
            basis,
            idempotents,
            products,
            generators: Vec::new(),
            quiver,
            fingerprint: 0,
            origin,
            by_source,
            by_target,
            by_block,
            loewy: 0,
            monomials: OnceLock::new(),
            opposite: OnceLock::new(),
            opposite_of: None,
        };
        alg.generators = alg.compute_generators();
        alg.loewy = alg.compute_loewy_length();
        alg.fingerprint = alg.compute_fingerprint();
        Ok(alg)
    }

    fn compute_generators(&self) -> Vec<usize> {
        let dim = self.dim();
        let rad: Vec<usize> = (0..dim).filter(|i| !self.is_idempotent(*i)).collect();
        let mut ech = SparseEchelon::new(self.field, dim);
        for &a in &rad {
            for &b in &self.by_target[self.basis[a].source] {
                if self.is_idempotent(b) {
                    continue;
                }
                if let Some(p) = self.products.get(&(a, b)) {
                    ech.insert(p);
                }
            }
        }
        let mut gens = Vec::new();
        for &r in &rad {
            if ech.insert(&vec![(r, self.field.one())]).is_some() {
                gens.push(r);
            }
        }
        gens
    }

    fn compute_loewy_length(&self) -> usize {
        if self.dim() == 0 {
            return 0;
        }
        let mut layer: Vec<SparseVec> = self.generators.iter().map(|&g| self.unit(g)).collect();
        let mut len = 1;
        while !layer.is_empty() {
            len += 1;
            let mut ech = SparseEchelon::new(self.field, self.dim());
            let mut next = Vec::new();
            for &g in &self.generators {
                for w in &layer {
                    let p = self.mul(&self.unit(g), w);
                    if ech.insert(&p).is_some() {
                        next.push(p);
                    }
                }
            }
            layer = next;
        }
        len
    }

    fn compute_fingerprint(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.field.hash(&mut h);
        self.labels.hash(&mut h);
        for b in &self.basis {
            (b.source, b.target).hash(&mut h);
        }
        let mut keys: Vec<&(usize, usize)> = self.products.keys().collect();
        keys.sort();
        for k in keys {
            k.hash(&mut h);
            self.products[k].hash(&mut h);
        }
        std::mem::discriminant(&self.origin).hash(&mut h);
        h.finish()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn n_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn vertex_by_label(&self, l: &str) -> Result<usize> {
        self.labels.iter().position(|x| x == l).ok_or_else(|| Error::UnknownVertex(l.to_string()))
    }

    pub fn idempotents(&self, labels: &[&str]) -> Result<IdempotentSet> {
        IdempotentSet::from_labels(&self.labels, labels)
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn basis_element(&self, i: usize) -> &BasisElement {
        &self.basis[i]
    }

    pub fn idempotent(&self, v: usize) -> usize {
        self.idempotents[v]
    }

    pub fn is_idempotent(&self, i: usize) -> bool {
        let b = &self.basis[i];
        b.source == b.target && self.idempotents[b.source] == i
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn quiver(&self) -> Option<&Arc<Quiver>> {
        self.quiver.as_ref()
    }

    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn origin(&self) -> &Origin {
        &self.origin
    }

    /// Smallest `L` with `rad^L = 0`.
    pub fn loewy_length(&self) -> usize {
        self.loewy
    }

    /// Each basis element as a combination of words in the generators
    /// (indices into `generators()`, first factor first). Idempotents map to the empty word.
    pub fn monomials(&self) -> &[Vec<(Scalar, Vec<usize>)>] {
        self.monomials.get_or_init(|| self.compute_monomials())
    }

    fn compute_monomials(&self) -> Vec<Vec<(Scalar, Vec<usize>)>> {
        let dim = self.dim();
        let gens = &self.generators;
        let mut ech = SparseEchelon::new(self.field, dim);
        let mut chosen: Vec<(Vec<usize>, SparseVec)> = Vec::new();
        let mut layer: Vec<(Vec<usize>, SparseVec)> = Vec::new();
        for (k, &g) in gens.iter().enumerate() {
            let v = self.unit(g);
            if ech.insert(&v).is_some() {
                chosen.push((vec![k], v.clone()));
            }
            layer.push((vec![k], v));
        }
        while !layer.is_empty() {
            let mut lech = SparseEchelon::new(self.field, dim);
            let mut next = Vec::new();
            for (w, v) in &layer {
                let t = self.basis[gens[*w.last().unwrap()]].target;
                for (k, &g) in gens.iter().enumerate() {
                    if self.basis[g].source != t {
                        continue;
                    }
                    let nv = self.mul(&self.unit(g), v);
                    if lech.insert(&nv).is_none() {
                        continue;
                    }
                    let mut nw = w.clone();
                    nw.push(k);
                    if ech.insert(&nv).is_some() {
                        chosen.push((nw.clone(), nv.clone()));
                    }
                    next.push((nw, nv));
                }
            }
            layer = next;
        }
        let cols: Vec<Vec<Scalar>> =
            chosen.iter().map(|(_, v)| sparse::to_dense(self.field, v, dim)).collect();
        let m = crate::linalg::Matrix::from_columns(self.field, dim, &cols);
        let rad: Vec<usize> = (0..dim).filter(|&i| !self.is_idempotent(i)).collect();
        let rhs: Vec<Vec<Scalar>> =
            rad.iter().map(|&i| sparse::to_dense(self.field, &self.unit(i), dim)).collect();
        let x = m
            .solve_matrix(&crate::linalg::Matrix::from_columns(self.field, dim, &rhs))
            .unwrap()
            .expect("radical spanned by generator words");
        let mut out = vec![vec![(self.field.one(), Vec::new())]; dim];
        for (col, &i) in rad.iter().enumerate() {
            out[i] = x
                .column(col)
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(j, c)| (c, chosen[j].0.clone()))
                .collect();
        }
        out
    }

    pub fn from_source(&self, v: usize) -> &[usize] {
        &self.by_source[v]
    }

    pub fn to_target(&self, v: usize) -> &[usize] {
        &self.by_target[v]
    }

    pub fn block(&self, source: usize, target: usize) -> &[usize] {
        self.by_block.get(&(source, target)).map_or(&[], |v| v.as_slice())
    }

    pub fn unit(&self, i: usize) -> SparseVec {
        vec![(i, self.field.one())]
    }

    /// `b_left * b_right` (apply `b_right` first), `None` when zero.
    pub fn mul_basis(&self, left: usize, right: usize) -> Option<&SparseVec> {
        self.products.get(&(left, right))
    }

    pub fn mul(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut acc: Vec<(usize, Scalar)> = Vec::new();
        for (i, a) in x {
            for (j, b) in y {
                if let Some(p) = self.products.get(&(*i, *j)) {
                    let c = a.mul_ref(b);
                    acc.extend(p.iter().map(|(k, v)| (*k, v.mul_ref(&c))));
                }
            }
        }
        sparse::collect(self.field, acc)
    }

    pub fn element_name(&self, i: usize) -> String {
        match (&self.basis[i].path, &self.quiver) {
            (Some(p), Some(q)) => p.display(q).to_string(),
            _ => format!("b{i}"),
        }
    }

    /// Checks associativity and the unit axioms on all compatible basis triples.
    pub fn check_axioms(&self) -> Result<()> {
        for (i, b) in self.basis.iter().enumerate() {
            let et = self.idempotents[b.target];
            let es = self.idempotents[b.source];
            if self.mul(&self.unit(et), &self.unit(i)) != self.unit(i)
                || self.mul(&self.unit(i), &self.unit(es)) != self.unit(i)
            {
                return Err(Error::VerificationFailed(format!("unit axiom fails at {i}")));
            }
        }
        for a in 0..self.dim() {
            for &b in &self.by_target[self.basis[a].source] {
                let ab = self.mul(&self.unit(a), &self.unit(b));
                for &c in &self.by_target[self.basis[b].source] {
                    let lhs = self.mul(&ab, &self.unit(c));
                    let rhs = self.mul(&self.unit(a), &self.mul(&self.unit(b), &self.unit(c)));
                    if lhs != rhs {
                        return Err(Error::VerificationFailed(format!(
                            "associativity fails at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// The opposite algebra; `A.opposite().opposite()` is `A` itself while `A` is alive.
    pub fn opposite(self: &Arc<Self>) -> Arc<FDAlgebra> {
        if let Some(orig) = self.opposite_of.as_ref().and_then(Weak::upgrade) {
            return orig;
        }
        self.opposite
            .get_or_init(|| {
                let quiver = self.quiver.as_ref().map(|q| Arc::new(q.opposite()));
                let basis = self
                    .basis
                    .iter()
                    .map(|b| BasisElement {
                        source: b.target,
                        target: b.source,
                        path: b.path.as_ref().map(PathWord::reversed),
                    })
                    .collect();
                let products =
                    self.products.iter().map(|(&(l, r), v)| ((r, l), v.clone())).collect();
                let mut op = FDAlgebra::from_parts(
                    self.field,
                    self.labels.clone(),
                    basis,
                    self.idempotents.clone(),
                    products,
                    quiver,
                    Origin::Opposite,
                )
                .expect("opposite of a valid algebra");
                op.opposite_of = Some(Arc::downgrade(self));
                Arc::new(op)
            })
            .clone()
    }

    /// The corner algebra `eAe`, with vertices in increasing order.
    pub fn corner(self: &Arc<Self>, e: &IdempotentSet) -> Result<Arc<FDAlgebra>> {
        self.check_idempotent(e)?;
        let vertices = e.to_vec();
        let mut new_v = vec![usize::MAX; self.n_vertices()];
        for (i, &v) in vertices.iter().enumerate() {
            new_v[v] = i;
        }
        let basis_map: Vec<usize> = (0..self.dim())
            .filter(|&i| e.contains(self.basis[i].source) && e.contains(self.basis[i].target))
            .collect();
        let mut new_b = vec![usize::MAX; self.dim()];
        for (i, &b) in basis_map.iter().enumerate() {
            new_b[b] = i;
        }
        let basis = basis_map
            .iter()
            .map(|&b| {
                let old = &self.basis[b];
                BasisElement { source: new_v[old.source], target: new_v[old.target], path: old.path.clone() }
            })
            .collect();
        let mut products = HashMap::new();
        for (&(l, r), v) in &self.products {
            if new_b[l] != usize::MAX && new_b[r] != usize::MAX {
                let mapped: SparseVec = v.iter().map(|(k, x)| (new_b[*k], x.clone())).collect();
                products.insert((new_b[l], new_b[r]), mapped);
            }
        }
        let idempotents = vertices.iter().map(|&v| new_b[self.idempotents[v]]).collect();
        let labels = vertices.iter().map(|&v| self.labels[v].clone()).collect();
        let alg = FDAlgebra::from_parts(
            self.field,
            labels,
            basis,
            idempotents,
            products,
            self.quiver.clone(),
            Origin::Corner { parent: self.clone(), vertices, basis_map },
        )?;
        Ok(Arc::new(alg))
    }

    /// The quotient `A/AeA`.
    pub fn quotient(self: &Arc<Self>, e: &IdempotentSet) -> Result<Arc<FDAlgebra>> {
        self.check_idempotent(e)?;
        let dim = self.dim();
        // columns in reverse basis order so that longer elements become pivots
        let col = |i: usize| dim - 1 - i;
        let mut ech = SparseEchelon::new(self.field, dim);
        for v in e.iter() {
            for &y in &self.by_target[v] {
                for &x in &self.by_source[v] {
                    if let Some(p) = self.products.get(&(x, y)) {
                        let mut r: SparseVec = p.iter().map(|(k, c)| (col(*k), c.clone())).collect();
                        r.sort_by_key(|t| t.0);
                        ech.insert(&r);
                    }
                }
            }
        }
        let rows = ech.into_reduced();
        let mut pivot_row = HashMap::new();
        for (ri, r) in rows.iter().enumerate() {
            pivot_row.insert(dim - 1 - r[0].0, ri);
        }
        let lift: Vec<usize> = (0..dim).filter(|i| !pivot_row.contains_key(i)).collect();
        let mut qidx = vec![usize::MAX; dim];
        for (i, &b) in lift.iter().enumerate() {
            qidx[b] = i;
        }
        let projection: Vec<SparseVec> = (0..dim)
            .map(|i| match pivot_row.get(&i) {
                None => vec![(qidx[i], self.field.one())],
                Some(&ri) => {
                    let mut v: SparseVec = rows[ri][1..]
                        .iter()
                        .map(|(c, x)| (qidx[dim - 1 - c], x.neg_ref()))
                        .collect();
                    v.sort_by_key(|t| t.0);
                    v
                }
            })
            .collect();
        let vertices: Vec<usize> = (0..self.n_vertices()).filter(|v| !e.contains(*v)).collect();
        let mut new_v = vec![usize::MAX; self.n_vertices()];
        for (i, &v) in vertices.iter().enumerate() {
            new_v[v] = i;
        }
        let basis = lift
            .iter()
            .map(|&b| {
                let old = &self.basis[b];
                BasisElement { source: new_v[old.source], target: new_v[old.target], path: old.path.clone() }
            })
            .collect();
        let project = |v: &SparseVec| -> SparseVec {
            let mut acc = Vec::new();
            for (k, x) in v {
                acc.extend(projection[*k].iter().map(|(j, y)| (*j, y.mul_ref(x))));
            }
            sparse::collect(self.field, acc)
        };
        let mut products = HashMap::new();
        for (qi, &l) in lift.iter().enumerate() {
            for (qj, &r) in lift.iter().enumerate() {
                if let Some(p) = self.products.get(&(l, r)) {
                    let pr = project(p);
                    if !pr.is_empty() {
                        products.insert((qi, qj), pr);
                    }
                }
            }
        }
        let idempotents = vertices.iter().map(|&v| qidx[self.idempotents[v]]).collect();
        let labels = vertices.iter().map(|&v| self.labels[v].clone()).collect();
        let alg = FDAlgebra::from_parts(
            self.field,
            labels,
            basis,
            idempotents,
            products,
            self.quiver.clone(),
            Origin::Quotient { parent: self.clone(), killed: e.clone(), vertices, lift, projection },
        )?;
        Ok(Arc::new(alg))
    }

    pub fn check_idempotent(&self, e: &IdempotentSet) -> Result<()> {
        match e.iter().find(|&v| v >= self.n_vertices()) {
            Some(v) => Err(Error::InvalidIdempotent(format!("vertex index {v} out of range"))),
            None => Ok(()),
        }
    }

    /// Basis of `e rad(A) e` expressed in `A`-coordinates, for tests of corner compatibility.
    pub fn radical_dim(&self) -> usize {
        self.dim() - self.n_vertices()
    }

    pub fn same_algebra(&self, o: &FDAlgebra) -> bool {
        std::ptr::eq(self, o) || self.fingerprint == o.fingerprint
    }
}

#[cfg(test)]
mod tests {
    use super::super::{build_algebra, Presentation, Quiver};
    use super::*;

    fn a3() -> Arc<FDAlgebra> {
        let mut q = Quiver::new();
        for v in ["1", "2", "3"] {
            q.add_vertex(v).unwrap();
        }
        q.connect("a", "1", "2").unwrap();
        q.connect("b", "2", "3").unwrap();
        build_algebra(&Presentation::new(Field::Rational, q)).unwrap()
    }

    #[test]
    fn opposite_roundtrip_is_same_object() {
        let a = a3();
        let op = a.opposite();
        assert!(Arc::ptr_eq(&op.opposite(), &a));
        assert_eq!(op.dim(), a.dim());
        assert_ne!(op.fingerprint(), a.fingerprint());
        op.check_axioms().unwrap();
    }

    #[test]
    fn corner_and_quotient_dims() {
        let a = a3();
        assert_eq!(a.dim(), 6);
        let e = IdempotentSet::new([0, 2]);
        let c = a.corner(&e).unwrap();
        assert_eq!(c.dim(), 3);
        assert_eq!(c.generators().len(), 1);
        let qt = a.quotient(&IdempotentSet::new([1])).unwrap();
        assert_eq!(qt.dim(), 2);
        qt.check_axioms().unwrap();
        assert_eq!(a.loewy_length(), 3);
    }
}
