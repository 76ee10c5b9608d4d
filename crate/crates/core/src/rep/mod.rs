//! Representations of finite-dimensional algebras and their homomorphisms.

mod endo;
mod hom;
mod map;
mod random;

pub use endo::{
    add_multiplicities, endomorphism_algebra, endomorphism_radical, is_indecomposable, multiplicity,
};
pub use hom::{
    coordinates, hom_dim, hom_space, is_isomorphic, is_isomorphic_exhaustive, is_isomorphic_with, IsoCertificate,
    IsoMethod, DEFAULT_SEED,
};
pub use map::ModuleMap;
pub use random::random_module;

use std::sync::Arc;

use crate::algebra::{FDAlgebra, IdempotentSet, Origin};
use crate::error::{Error, Result};
use crate::linalg::{sparse, Field, Matrix, Scalar};

/// A left module given by one matrix per basis element of the algebra; the
/// block for an element `e_t b e_s` maps the space at `s` to the space at `t`.
#[derive(Clone, Debug)]
pub struct Representation {
    algebra: Arc<FDAlgebra>,
    dims: Vec<usize>,
    action: Arc<Vec<Matrix>>,
}

impl Representation {
    fn raw(algebra: Arc<FDAlgebra>, dims: Vec<usize>, action: Vec<Matrix>) -> Representation {
        Representation { algebra, dims, action: Arc::new(action) }
    }

    /// Module determined by matrices for the generators (`algebra.generators()` order).
    /// Validated against every structure constant.
    pub fn from_generator_matrices(
        algebra: Arc<FDAlgebra>,
        dims: Vec<usize>,
        gens: Vec<Matrix>,
    ) -> Result<Representation> {
        let field = algebra.field();
        if dims.len() != algebra.n_vertices() || gens.len() != algebra.generators().len() {
            return Err(Error::InvalidRepresentation("wrong number of dimensions or matrices".into()));
        }
        for (k, &g) in algebra.generators().iter().enumerate() {
            let b = algebra.basis_element(g);
            let m = &gens[k];
            if m.rows() != dims[b.target] || m.cols() != dims[b.source] || m.field() != field {
                return Err(Error::InvalidRepresentation(format!("matrix for generator {k} has the wrong shape")));
            }
        }
        let action: Vec<Matrix> = algebra
            .monomials()
            .iter()
            .enumerate()
            .map(|(i, combo)| {
                let b = algebra.basis_element(i);
                let mut acc = Matrix::zeros(field, dims[b.target], dims[b.source]);
                for (c, word) in combo {
                    let mut m = Matrix::identity(field, dims[b.source]);
                    for &k in word {
                        m = gens[k].mul(&m);
                    }
                    acc = acc.add(&m.scale(c));
                }
                acc
            })
            .collect();
        let rep = Representation::raw(algebra, dims, action);
        rep.validate()?;
        Ok(rep)
    }

    /// Module from matrices for every basis element, validated.
    pub fn from_action(algebra: Arc<FDAlgebra>, dims: Vec<usize>, action: Vec<Matrix>) -> Result<Representation> {
        if action.len() != algebra.dim() || dims.len() != algebra.n_vertices() {
            return Err(Error::InvalidRepresentation("wrong number of matrices".into()));
        }
        let rep = Representation::raw(algebra, dims, action);
        rep.validate()?;
        Ok(rep)
    }

    /// Checks block shapes, idempotent actions and multiplicativity.
    pub fn validate(&self) -> Result<()> {
        let a = &self.algebra;
        for (i, m) in self.action.iter().enumerate() {
            let b = a.basis_element(i);
            if m.rows() != self.dims[b.target] || m.cols() != self.dims[b.source] {
                return Err(Error::InvalidRepresentation(format!("block {i} has the wrong shape")));
            }
            if a.is_idempotent(i) && !m.is_identity() {
                return Err(Error::InvalidRepresentation(format!("idempotent {i} does not act as 1")));
            }
        }
        let field = a.field();
        for l in 0..a.dim() {
            let ls = a.basis_element(l).source;
            for &r in a.to_target(ls) {
                let lhs = self.action[l].mul(&self.action[r]);
                let mut rhs = Matrix::zeros(field, lhs.rows(), lhs.cols());
                if let Some(p) = a.mul_basis(l, r) {
                    for (k, c) in p {
                        rhs = rhs.add(&self.action[*k].scale(c));
                    }
                }
                if lhs != rhs {
                    return Err(Error::InvalidRepresentation(format!("relation violated at ({l},{r})")));
                }
            }
        }
        Ok(())
    }

    pub fn algebra(&self) -> &Arc<FDAlgebra> {
        &self.algebra
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_at(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn action(&self, b: usize) -> &Matrix {
        &self.action[b]
    }

    pub fn support(&self) -> IdempotentSet {
        IdempotentSet::new((0..self.dims.len()).filter(|&v| self.dims[v] > 0))
    }

    pub fn same_algebra(&self, o: &Representation) -> bool {
        Arc::ptr_eq(&self.algebra, &o.algebra) || self.algebra.same_algebra(&o.algebra)
    }

    pub fn zero(algebra: &Arc<FDAlgebra>) -> Representation {
        let field = algebra.field();
        let action = (0..algebra.dim()).map(|_| Matrix::zeros(field, 0, 0)).collect();
        Representation::raw(algebra.clone(), vec![0; algebra.n_vertices()], action)
    }

    /// Indecomposable projective `A e_v`.
    pub fn projective(algebra: &Arc<FDAlgebra>, v: usize) -> Representation {
        let a = algebra;
        let field = a.field();
        let n = a.n_vertices();
        let mut coord = vec![usize::MAX; a.dim()];
        let mut dims = vec![0; n];
        for &b in a.from_source(v) {
            let t = a.basis_element(b).target;
            coord[b] = dims[t];
            dims[t] += 1;
        }
        let action = (0..a.dim())
            .map(|x| {
                let e = a.basis_element(x);
                let mut m = Matrix::zeros(field, dims[e.target], dims[e.source]);
                for &b in a.from_source(v) {
                    if a.basis_element(b).target != e.source {
                        continue;
                    }
                    if let Some(p) = a.mul_basis(x, b) {
                        for (k, c) in p {
                            m.set(coord[*k], coord[b], c.clone());
                        }
                    }
                }
                m
            })
            .collect();
        Representation::raw(a.clone(), dims, action)
    }

    /// Indecomposable injective `D(e_v A)`.
    pub fn injective(algebra: &Arc<FDAlgebra>, v: usize) -> Representation {
        Representation::projective(&algebra.opposite(), v).dual()
    }

    pub fn simple(algebra: &Arc<FDAlgebra>, v: usize) -> Representation {
        let field = algebra.field();
        let mut dims = vec![0; algebra.n_vertices()];
        dims[v] = 1;
        let action = (0..algebra.dim())
            .map(|x| {
                let e = algebra.basis_element(x);
                if algebra.is_idempotent(x) && e.source == v {
                    Matrix::identity(field, 1)
                } else {
                    Matrix::zeros(field, dims[e.target], dims[e.source])
                }
            })
            .collect();
        Representation::raw(algebra.clone(), dims, action)
    }

    /// The regular module `A` as a direct sum of the `A e_v`.
    pub fn regular(algebra: &Arc<FDAlgebra>) -> Representation {
        let ps: Vec<Representation> =
            (0..algebra.n_vertices()).map(|v| Representation::projective(algebra, v)).collect();
        Representation::direct_sum(algebra, &ps).0
    }

    /// `DA` as a direct sum of the indecomposable injectives.
    pub fn dual_regular(algebra: &Arc<FDAlgebra>) -> Representation {
        let is: Vec<Representation> =
            (0..algebra.n_vertices()).map(|v| Representation::injective(algebra, v)).collect();
        Representation::direct_sum(algebra, &is).0
    }

    /// `D = Hom_k(-, k)`, landing over the opposite algebra.
    pub fn dual(&self) -> Representation {
        let op = self.algebra.opposite();
        let action = self.action.iter().map(Matrix::transpose).collect();
        Representation::raw(op, self.dims.clone(), action)
    }

    /// Direct sum with the inclusions of the summands.
    pub fn direct_sum(algebra: &Arc<FDAlgebra>, parts: &[Representation]) -> (Representation, Vec<ModuleMap>) {
        let field = algebra.field();
        let n = algebra.n_vertices();
        let mut dims = vec![0; n];
        for p in parts {
            for v in 0..n {
                dims[v] += p.dims[v];
            }
        }
        let action = (0..algebra.dim())
            .map(|x| {
                let mut m = Matrix::zeros(field, 0, 0);
                for p in parts {
                    m = m.direct_sum(&p.action[x]);
                }
                m
            })
            .collect();
        let sum = Representation::raw(algebra.clone(), dims, action);
        let mut offset = vec![0; n];
        let mut incl = Vec::new();
        for p in parts {
            let blocks = (0..n)
                .map(|v| {
                    let mut m = Matrix::zeros(field, sum.dims[v], p.dims[v]);
                    for i in 0..p.dims[v] {
                        m.set(offset[v] + i, i, field.one());
                    }
                    m
                })
                .collect();
            for v in 0..n {
                offset[v] += p.dims[v];
            }
            incl.push(ModuleMap::new_unchecked(p.clone(), sum.clone(), blocks));
        }
        (sum, incl)
    }

    pub fn plus(&self, o: &Representation) -> Representation {
        Representation::direct_sum(&self.algebra, &[self.clone(), o.clone()]).0
    }

    /// `M^k`.
    pub fn power(&self, k: usize) -> Representation {
        Representation::direct_sum(&self.algebra, &vec![self.clone(); k]).0
    }

    /// Submodule spanned at each vertex by the columns of `bases[v]` (full column rank).
    pub fn submodule(&self, bases: &[Matrix]) -> Result<(Representation, ModuleMap)> {
        let a = &self.algebra;
        let field = self.field();
        let n = a.n_vertices();
        if bases.len() != n || (0..n).any(|v| bases[v].rows() != self.dims[v]) {
            return Err(Error::InvalidRepresentation("subspace shapes do not match".into()));
        }
        let linv: Vec<Matrix> = bases.iter().map(left_inverse).collect::<Option<_>>().ok_or_else(|| {
            Error::InvalidRepresentation("subspace basis is not linearly independent".into())
        })?;
        for &g in a.generators() {
            let b = a.basis_element(g);
            let img = self.action[g].mul(&bases[b.source]);
            let back = bases[b.target].mul(&linv[b.target].mul(&img));
            if back != img {
                return Err(Error::NotASubmodule);
            }
        }
        let dims: Vec<usize> = bases.iter().map(Matrix::cols).collect();
        let action = (0..a.dim())
            .map(|x| {
                let b = a.basis_element(x);
                if a.is_idempotent(x) {
                    return Matrix::identity(field, dims[b.source]);
                }
                linv[b.target].mul(&self.action[x].mul(&bases[b.source]))
            })
            .collect();
        let sub = Representation::raw(a.clone(), dims, action);
        let incl = ModuleMap::new_unchecked(sub.clone(), self.clone(), bases.to_vec());
        Ok((sub, incl))
    }

    /// Quotient by the submodule spanned by the columns of `bases[v]`.
    pub fn quotient(&self, bases: &[Matrix]) -> Result<(Representation, ModuleMap)> {
        let a = &self.algebra;
        let field = self.field();
        let n = a.n_vertices();
        self.submodule(bases)?;
        let mut comp = Vec::with_capacity(n);
        let mut proj = Vec::with_capacity(n);
        for v in 0..n {
            let u = &bases[v];
            let d = self.dims[v];
            // complete the basis with unit vectors outside the span
            let mut cols: Vec<Vec<Scalar>> = (0..u.cols()).map(|j| u.column(j)).collect();
            let mut extra = Vec::new();
            let mut ech = sparse::SparseEchelon::new(field, d);
            for c in &cols {
                ech.insert(&sparse::from_dense(c));
            }
            for i in 0..d {
                let e = vec![(i, field.one())];
                if ech.insert(&e).is_some() {
                    let mut col = vec![field.zero(); d];
                    col[i] = field.one();
                    extra.push(col);
                }
            }
            let k = extra.len();
            let c = Matrix::from_columns(field, d, &extra);
            cols.extend(extra);
            let full = Matrix::from_columns(field, d, &cols);
            let inv = full.inverse().expect("completed basis");
            let rows: Vec<usize> = (u.cols()..u.cols() + k).collect();
            proj.push(inv.select_rows(&rows));
            comp.push(c);
        }
        let dims: Vec<usize> = comp.iter().map(Matrix::cols).collect();
        let action = (0..a.dim())
            .map(|x| {
                let b = a.basis_element(x);
                proj[b.target].mul(&self.action[x].mul(&comp[b.source]))
            })
            .collect();
        let q = Representation::raw(a.clone(), dims, action);
        let pi = ModuleMap::new_unchecked(self.clone(), q.clone(), proj);
        Ok((q, pi))
    }

    /// Submodule generated by the given elements, each living at one vertex.
    pub fn generated_by(&self, elements: &[(usize, Vec<Scalar>)]) -> Result<(Representation, ModuleMap)> {
        let a = &self.algebra;
        let field = self.field();
        let n = a.n_vertices();
        let mut span: Vec<sparse::SparseEchelon> =
            (0..n).map(|v| sparse::SparseEchelon::new(field, self.dims[v])).collect();
        let mut cols: Vec<Vec<Vec<Scalar>>> = vec![Vec::new(); n];
        for (v, x) in elements {
            if x.len() != self.dims[*v] {
                return Err(Error::InvalidRepresentation("element has the wrong length".into()));
            }
            for &b in a.from_source(*v) {
                let t = a.basis_element(b).target;
                let y = self.action[b].mul_vec(x);
                if span[t].insert(&sparse::from_dense(&y)).is_some() {
                    cols[t].push(y);
                }
            }
        }
        let bases: Vec<Matrix> =
            (0..n).map(|v| Matrix::from_columns(field, self.dims[v], &cols[v])).collect();
        self.submodule(&bases)
    }

    /// `rad M`, the sum of the images of the generators.
    pub fn radical(&self) -> (Representation, ModuleMap) {
        let a = &self.algebra;
        let field = self.field();
        let n = a.n_vertices();
        let mut cols: Vec<Vec<Vec<Scalar>>> = vec![Vec::new(); n];
        for &g in a.generators() {
            let t = a.basis_element(g).target;
            for j in 0..self.action[g].cols() {
                cols[t].push(self.action[g].column(j));
            }
        }
        let bases: Vec<Matrix> = (0..n)
            .map(|v| {
                let m = Matrix::from_columns(field, self.dims[v], &cols[v]);
                let piv = m.column_space_basis();
                m.select_columns(&piv)
            })
            .collect();
        self.submodule(&bases).expect("radical is a submodule")
    }

    pub fn top(&self) -> (Representation, ModuleMap) {
        let (_, incl) = self.radical();
        self.quotient(&incl.blocks).expect("radical is a submodule")
    }

    /// `soc M`, the elements killed by every generator.
    pub fn socle(&self) -> (Representation, ModuleMap) {
        let a = &self.algebra;
        let field = self.field();
        let n = a.n_vertices();
        let bases: Vec<Matrix> = (0..n)
            .map(|v| {
                let mut stacked = Matrix::zeros(field, 0, self.dims[v]);
                for &g in a.generators() {
                    if a.basis_element(g).source == v {
                        stacked = stacked.vstack(&self.action[g]);
                    }
                }
                Matrix::from_columns(field, self.dims[v], &stacked.kernel_basis())
            })
            .collect();
        self.submodule(&bases).expect("socle is a submodule")
    }

    /// Multiplicity of each simple in `top M`.
    pub fn top_vector(&self) -> Vec<usize> {
        self.top().0.dims.clone()
    }

    pub fn socle_vector(&self) -> Vec<usize> {
        self.socle().0.dims.clone()
    }

    /// `eM` as a module over the corner algebra `eAe`.
    pub fn restrict_to_corner(&self, corner: &Arc<FDAlgebra>) -> Result<Representation> {
        let Origin::Corner { parent, vertices, basis_map } = corner.origin() else {
            return Err(Error::IncompatibleAlgebra);
        };
        if !parent.same_algebra(&self.algebra) {
            return Err(Error::IncompatibleAlgebra);
        }
        let dims = vertices.iter().map(|&v| self.dims[v]).collect();
        let action = basis_map.iter().map(|&b| self.action[b].clone()).collect();
        Ok(Representation::raw(corner.clone(), dims, action))
    }

    /// Regards a module over `A/AeA` as an `A`-module.
    pub fn inflate(&self) -> Result<Representation> {
        let Origin::Quotient { parent, vertices, projection, .. } = self.algebra.origin() else {
            return Err(Error::IncompatibleAlgebra);
        };
        let field = self.field();
        let mut dims = vec![0; parent.n_vertices()];
        for (i, &v) in vertices.iter().enumerate() {
            dims[v] = self.dims[i];
        }
        let action = (0..parent.dim())
            .map(|x| {
                let b = parent.basis_element(x);
                let mut m = Matrix::zeros(field, dims[b.target], dims[b.source]);
                if dims[b.target] == 0 || dims[b.source] == 0 {
                    return m;
                }
                for (k, c) in &projection[x] {
                    m = m.add(&self.action[*k].scale(c));
                }
                m
            })
            .collect();
        Ok(Representation::raw(parent.clone(), dims, action))
    }

    /// Regards an `A`-module killed by `AeA` as a module over the quotient algebra.
    pub fn deflate(&self, quotient: &Arc<FDAlgebra>) -> Result<Representation> {
        let Origin::Quotient { parent, killed, vertices, lift, .. } = quotient.origin() else {
            return Err(Error::IncompatibleAlgebra);
        };
        if !parent.same_algebra(&self.algebra) {
            return Err(Error::IncompatibleAlgebra);
        }
        if killed.iter().any(|v| self.dims[v] > 0) {
            return Err(Error::InvalidRepresentation("module is not killed by the idempotent ideal".into()));
        }
        let dims = vertices.iter().map(|&v| self.dims[v]).collect();
        let action = lift.iter().map(|&b| self.action[b].clone()).collect();
        Ok(Representation::raw(quotient.clone(), dims, action))
    }

    /// Same module regarded over an equal algebra object (matching fingerprints).
    pub fn rebase(&self, algebra: &Arc<FDAlgebra>) -> Result<Representation> {
        if !algebra.same_algebra(&self.algebra) {
            return Err(Error::IncompatibleAlgebra);
        }
        Ok(Representation { algebra: algebra.clone(), dims: self.dims.clone(), action: self.action.clone() })
    }

    /// Action of the basis element `b` on a vector at its source.
    pub fn act(&self, b: usize, x: &[Scalar]) -> Vec<Scalar> {
        self.action[b].mul_vec(x)
    }

    /// A compact textual description `dims=[...]`.
    pub fn describe(&self) -> String {
        let parts: Vec<String> = self.dims.iter().map(usize::to_string).collect();
        format!("[{}]", parts.join(","))
    }
}

/// Left inverse of a full-column-rank matrix, built from a set of independent rows.
pub(crate) fn left_inverse(u: &Matrix) -> Option<Matrix> {
    let field = u.field();
    if u.cols() == 0 {
        return Some(Matrix::zeros(field, 0, u.rows()));
    }
    let rows = u.transpose().column_space_basis();
    if rows.len() != u.cols() {
        return None;
    }
    let sq = u.select_rows(&rows).inverse()?;
    let mut l = Matrix::zeros(field, u.cols(), u.rows());
    for (j, &r) in rows.iter().enumerate() {
        for i in 0..u.cols() {
            l.set(i, r, sq.get(i, j).clone());
        }
    }
    Some(l)
}

#[cfg(test)]
mod tests;
