use std::sync::Arc;

use crate::algebra::FDAlgebra;
use crate::linalg::{sparse, Matrix, Scalar};
use crate::rep::{ModuleMap, Representation};

/// A direct sum of indecomposable projectives `Ae_v`, one entry per summand.
/// The coordinates of the summand `Ae_v` at a vertex `w` are the basis
/// elements of `e_w A e_v` in index order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ProjSum {
    pub copies: Vec<usize>,
}

impl ProjSum {
    pub fn from_multiplicities(mult: &[usize]) -> ProjSum {
        let copies = mult.iter().enumerate().flat_map(|(v, &m)| std::iter::repeat_n(v, m)).collect();
        ProjSum { copies }
    }

    pub fn is_empty(&self) -> bool {
        self.copies.is_empty()
    }

    pub fn multiplicities(&self, n: usize) -> Vec<usize> {
        let mut m = vec![0; n];
        for &v in &self.copies {
            m[v] += 1;
        }
        m
    }

    /// Vertices occurring as summands.
    pub fn support(&self) -> Vec<usize> {
        let mut s = self.copies.clone();
        s.sort_unstable();
        s.dedup();
        s
    }

    pub fn module(&self, a: &Arc<FDAlgebra>) -> Representation {
        let ps: Vec<Representation> = self.copies.iter().map(|&v| Representation::projective(a, v)).collect();
        Representation::direct_sum(a, &ps).0
    }

    /// `(summand, basis element)` for each coordinate at vertex `w`.
    pub fn coords(&self, a: &FDAlgebra, w: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (c, &v) in self.copies.iter().enumerate() {
            for &b in a.from_source(v) {
                if a.basis_element(b).target == w {
                    out.push((c, b));
                }
            }
        }
        out
    }

    /// Position of the generator `e_v` of summand `c` among the coordinates at `v`.
    pub fn generator_index(&self, a: &FDAlgebra, c: usize) -> usize {
        let v = self.copies[c];
        let e = a.idempotent(v);
        self.coords(a, v).iter().position(|&(k, b)| k == c && b == e).expect("idempotent coordinate")
    }

    /// The map `P -> N` sending the generator of summand `c` to `images[c]`.
    pub fn map_from_images(
        &self,
        a: &FDAlgebra,
        p: &Representation,
        n: &Representation,
        images: &[Vec<Scalar>],
    ) -> ModuleMap {
        let field = a.field();
        let blocks = (0..a.n_vertices())
            .map(|w| {
                let coords = self.coords(a, w);
                let cols: Vec<Vec<Scalar>> = coords.iter().map(|&(c, b)| n.act(b, &images[c])).collect();
                Matrix::from_columns(field, n.dim_at(w), &cols)
            })
            .collect();
        ModuleMap::new_unchecked(p.clone(), n.clone(), blocks)
    }

    /// The element of `P` at vertex `w` given by a coordinate vector, as a sparse
    /// combination of algebra basis elements per summand.
    pub fn split(&self, a: &FDAlgebra, w: usize, x: &[Scalar]) -> Vec<sparse::SparseVec> {
        let mut parts = vec![Vec::new(); self.copies.len()];
        for (r, (c, b)) in self.coords(a, w).into_iter().enumerate() {
            if !x[r].is_zero() {
                parts[c].push((b, x[r].clone()));
            }
        }
        parts
    }
}
