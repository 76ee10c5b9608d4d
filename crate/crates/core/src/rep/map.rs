use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar};

use super::Representation;

/// Module homomorphism given by one matrix per vertex
/// (`blocks[v]` maps `source` at `v` to `target` at `v`).
#[derive(Clone, Debug)]
pub struct ModuleMap {
    pub source: Representation,
    pub target: Representation,
    pub blocks: Vec<Matrix>,
}

impl ModuleMap {
    pub(crate) fn new_unchecked(source: Representation, target: Representation, blocks: Vec<Matrix>) -> ModuleMap {
        ModuleMap { source, target, blocks }
    }

    /// Validated constructor: shapes and commutation with every generator.
    pub fn new(source: Representation, target: Representation, blocks: Vec<Matrix>) -> Result<ModuleMap> {
        if !source.same_algebra(&target) {
            return Err(Error::IncompatibleAlgebra);
        }
        let m = ModuleMap { source, target, blocks };
        m.validate()?;
        Ok(m)
    }

    pub fn validate(&self) -> Result<()> {
        let a = self.source.algebra();
        let n = a.n_vertices();
        if self.blocks.len() != n {
            return Err(Error::InvalidRepresentation("map has the wrong number of blocks".into()));
        }
        for v in 0..n {
            let b = &self.blocks[v];
            if b.rows() != self.target.dim_at(v) || b.cols() != self.source.dim_at(v) {
                return Err(Error::InvalidRepresentation(format!("map block {v} has the wrong shape")));
            }
        }
        for &g in a.generators() {
            let e = a.basis_element(g);
            let l = self.target.action(g).mul(&self.blocks[e.source]);
            let r = self.blocks[e.target].mul(self.source.action(g));
            if l != r {
                return Err(Error::InvalidRepresentation("map is not a module homomorphism".into()));
            }
        }
        Ok(())
    }

    pub fn identity(m: &Representation) -> ModuleMap {
        let f = m.field();
        let blocks = m.dims().iter().map(|&d| Matrix::identity(f, d)).collect();
        ModuleMap::new_unchecked(m.clone(), m.clone(), blocks)
    }

    pub fn zero(source: &Representation, target: &Representation) -> ModuleMap {
        let f = source.field();
        let blocks = (0..source.dims().len())
            .map(|v| Matrix::zeros(f, target.dim_at(v), source.dim_at(v)))
            .collect();
        ModuleMap::new_unchecked(source.clone(), target.clone(), blocks)
    }

    /// `self` after `first`.
    pub fn compose(&self, first: &ModuleMap) -> ModuleMap {
        let blocks = self.blocks.iter().zip(&first.blocks).map(|(a, b)| a.mul(b)).collect();
        ModuleMap::new_unchecked(first.source.clone(), self.target.clone(), blocks)
    }

    pub fn add(&self, o: &ModuleMap) -> ModuleMap {
        let blocks = self.blocks.iter().zip(&o.blocks).map(|(a, b)| a.add(b)).collect();
        ModuleMap::new_unchecked(self.source.clone(), self.target.clone(), blocks)
    }

    pub fn scale(&self, c: &Scalar) -> ModuleMap {
        let blocks = self.blocks.iter().map(|a| a.scale(c)).collect();
        ModuleMap::new_unchecked(self.source.clone(), self.target.clone(), blocks)
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(Matrix::rank).sum()
    }

    pub fn is_mono(&self) -> bool {
        self.rank() == self.source.total_dim()
    }

    pub fn is_epi(&self) -> bool {
        self.rank() == self.target.total_dim()
    }

    pub fn is_iso(&self) -> bool {
        self.source.dims() == self.target.dims() && self.is_mono()
    }

    /// Kernel with its inclusion into the source.
    pub fn kernel(&self) -> (Representation, ModuleMap) {
        let f = self.source.field();
        let bases: Vec<Matrix> = self
            .blocks
            .iter()
            .map(|b| Matrix::from_columns(f, b.cols(), &b.kernel_basis()))
            .collect();
        self.source.submodule(&bases).expect("kernel is a submodule")
    }

    /// Image with its inclusion into the target.
    pub fn image(&self) -> (Representation, ModuleMap) {
        let bases: Vec<Matrix> = self
            .blocks
            .iter()
            .map(|b| {
                let piv = b.column_space_basis();
                b.select_columns(&piv)
            })
            .collect();
        self.target.submodule(&bases).expect("image is a submodule")
    }

    /// Cokernel with the projection from the target.
    pub fn cokernel(&self) -> (Representation, ModuleMap) {
        let (_, incl) = self.image();
        self.target.quotient(&incl.blocks).expect("image is a submodule")
    }

    /// Block matrix of maps `maps[i][j]: sources[j] -> targets[i]` between direct sums.
    pub fn from_block_matrix(
        source: &Representation,
        target: &Representation,
        source_parts: &[Vec<usize>],
        target_parts: &[Vec<usize>],
        maps: &[Vec<Option<ModuleMap>>],
    ) -> ModuleMap {
        let f = source.field();
        let n = source.dims().len();
        let blocks = (0..n)
            .map(|v| {
                let mut m = Matrix::zeros(f, target.dim_at(v), source.dim_at(v));
                let mut r0 = 0;
                for (i, tp) in target_parts.iter().enumerate() {
                    let mut c0 = 0;
                    for (j, sp) in source_parts.iter().enumerate() {
                        if let Some(phi) = &maps[i][j] {
                            m.set_block(r0, c0, &phi.blocks[v]);
                        }
                        c0 += sp[v];
                    }
                    r0 += tp[v];
                }
                m
            })
            .collect();
        ModuleMap::new_unchecked(source.clone(), target.clone(), blocks)
    }

    /// Dual map `D(target) -> D(source)` over the opposite algebra.
    pub fn dual(&self) -> ModuleMap {
        let blocks = self.blocks.iter().map(Matrix::transpose).collect();
        ModuleMap::new_unchecked(self.target.dual(), self.source.dual(), blocks)
    }

    /// Flattened coordinates (vertex blocks in order, row-major).
    pub fn to_vector(&self) -> Vec<Scalar> {
        let mut out = Vec::new();
        for b in &self.blocks {
            for i in 0..b.rows() {
                out.extend(b.row(i).iter().cloned());
            }
        }
        out
    }

    /// Inverse of [`ModuleMap::to_vector`].
    pub fn from_vector(source: &Representation, target: &Representation, x: &[Scalar]) -> ModuleMap {
        let f = source.field();
        let mut k = 0;
        let blocks = (0..source.dims().len())
            .map(|v| {
                let (r, c) = (target.dim_at(v), source.dim_at(v));
                let mut m = Matrix::zeros(f, r, c);
                for i in 0..r {
                    for j in 0..c {
                        m.set(i, j, x[k].clone());
                        k += 1;
                    }
                }
                m
            })
            .collect();
        ModuleMap::new_unchecked(source.clone(), target.clone(), blocks)
    }

    /// Trace of an endomorphism.
    pub fn trace(&self) -> Scalar {
        let f = self.source.field();
        let mut t = f.zero();
        for b in &self.blocks {
            for i in 0..b.rows().min(b.cols()) {
                t = t.add_ref(b.get(i, i));
            }
        }
        t
    }
}
