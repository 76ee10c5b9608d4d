use std::collections::HashMap;
use std::sync::Arc;

use crate::algebra::{BasisElement, FDAlgebra, Origin};
use crate::error::{Error, Result};
use crate::linalg::sparse::{self, SparseVec};
use crate::linalg::{Field, Matrix, Scalar};

use super::hom::{hom_space, is_isomorphic};
use super::{left_inverse, ModuleMap, Representation};

fn trace_form_ok(field: Field, dim: usize) -> Result<()> {
    match field {
        Field::Prime(p) if (p as u128) <= dim as u128 => Err(Error::Unsupported(format!(
            "trace form test needs characteristic 0 or larger than {dim}"
        ))),
        _ => Ok(()),
    }
}

/// Basis of `End(M)` together with a basis of its radical, computed as the
/// kernel of the trace form.
pub fn endomorphism_radical(m: &Representation) -> Result<(Vec<ModuleMap>, Vec<ModuleMap>)> {
    trace_form_ok(m.field(), m.total_dim())?;
    let end = hom_space(m, m)?;
    let field = m.field();
    let k = end.len();
    let mut g = Matrix::zeros(field, k, k);
    for i in 0..k {
        for j in i..k {
            let t = end[i].compose(&end[j]).trace();
            g.set(i, j, t.clone());
            g.set(j, i, t);
        }
    }
    let rad = g
        .kernel_basis()
        .into_iter()
        .map(|c| {
            let mut acc = ModuleMap::zero(m, m);
            for (phi, x) in end.iter().zip(&c) {
                if !x.is_zero() {
                    acc = acc.add(&phi.scale(x));
                }
            }
            acc
        })
        .collect();
    Ok((end, rad))
}

/// `M` is indecomposable. A nonzero module whose endomorphism ring modulo its
/// radical is the ground field is indecomposable; when the top is larger, an
/// endomorphism that is neither nilpotent nor invertible proves decomposability.
pub fn is_indecomposable(m: &Representation) -> Result<bool> {
    if m.is_zero() {
        return Ok(false);
    }
    let (end, rad) = endomorphism_radical(m)?;
    if end.len() - rad.len() == 1 {
        return Ok(true);
    }
    let d = m.total_dim();
    let fitting_witness = |phi: &ModuleMap| {
        let mut pw = phi.clone();
        for _ in 0..d {
            pw = pw.compose(phi);
        }
        let r = pw.rank();
        r != 0 && r != d
    };
    for (i, phi) in end.iter().enumerate() {
        if fitting_witness(phi) {
            return Ok(false);
        }
        for psi in &end[..i] {
            if fitting_witness(&phi.add(&psi.scale(&m.field().from_i64(-1)))) {
                return Ok(false);
            }
        }
    }
    Err(Error::Unsupported("endomorphism ring has a top that is not split".into()))
}

/// Number of summands of `M` isomorphic to the indecomposable `X`, the rank of
/// the pairing `(phi, psi) -> tr(psi phi)` on `Hom(X, M) x Hom(M, X)`.
pub fn multiplicity(x: &Representation, m: &Representation) -> Result<usize> {
    trace_form_ok(m.field(), x.total_dim())?;
    let into = hom_space(x, m)?;
    let back = hom_space(m, x)?;
    if into.is_empty() || back.is_empty() {
        return Ok(0);
    }
    let field = m.field();
    let mut g = Matrix::zeros(field, into.len(), back.len());
    for (i, phi) in into.iter().enumerate() {
        for (j, psi) in back.iter().enumerate() {
            g.set(i, j, psi.compose(phi).trace());
        }
    }
    Ok(g.rank())
}

/// Multiplicities of pairwise non-isomorphic indecomposables in `M`, and
/// whether they exhaust `M` (that is, `M` lies in their additive closure).
pub fn add_multiplicities(xs: &[Representation], m: &Representation) -> Result<(Vec<usize>, bool)> {
    let mult: Vec<usize> = xs.iter().map(|x| multiplicity(x, m)).collect::<Result<_>>()?;
    let covered: usize = mult.iter().zip(xs).map(|(k, x)| k * x.total_dim()).sum();
    Ok((mult.clone(), covered == m.total_dim()))
}

/// `End_A(M_1 ⊕ ... ⊕ M_r)^op` for pairwise non-isomorphic indecomposables
/// with split local endomorphism rings. Vertex `i` corresponds to `M_i`; a map
/// `M_j -> M_i` has source `i` and target `j`, and `y' * y = y ∘ y'`.
pub fn endomorphism_algebra(summands: &[Representation], labels: Option<Vec<String>>) -> Result<Arc<FDAlgebra>> {
    let r = summands.len();
    if r == 0 {
        return Err(Error::InvalidRepresentation("no summands".into()));
    }
    let field = summands[0].field();
    for (i, s) in summands.iter().enumerate() {
        if !s.same_algebra(&summands[0]) {
            return Err(Error::IncompatibleAlgebra);
        }
        let (end, rad) = endomorphism_radical(s)?;
        if s.is_zero() || end.len() - rad.len() != 1 {
            return Err(Error::SummandDecomposable(i));
        }
    }
    for i in 0..r {
        for j in 0..i {
            if is_isomorphic(&summands[i], &summands[j])?.is_some() {
                return Err(Error::SummandsNotDistinct(j, i));
            }
        }
    }
    let labels = labels.unwrap_or_else(|| (0..r).map(|i| format!("M{}", i + 1)).collect());
    let mut basis = Vec::new();
    let mut maps: Vec<ModuleMap> = Vec::new();
    let mut idempotents = vec![0; r];
    let mut block_of: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    // first the identities, so that the idempotents come first
    for (i, s) in summands.iter().enumerate() {
        idempotents[i] = basis.len();
        block_of.entry((i, i)).or_default().push(basis.len());
        basis.push(BasisElement { source: i, target: i, path: None });
        maps.push(ModuleMap::identity(s));
    }
    for t in 0..r {
        for s in 0..r {
            // maps M_t -> M_s live in e_t B e_s
            let elems = if s == t { endomorphism_radical(&summands[s])?.1 } else { hom_space(&summands[t], &summands[s])? };
            for phi in elems {
                block_of.entry((s, t)).or_default().push(basis.len());
                basis.push(BasisElement { source: s, target: t, path: None });
                maps.push(phi);
            }
        }
    }
    let mut inv: HashMap<(usize, usize), (Matrix, Vec<usize>)> = HashMap::new();
    for (key, idx) in &block_of {
        let cols: Vec<Vec<Scalar>> = idx.iter().map(|&b| maps[b].to_vector()).collect();
        let len = cols[0].len();
        let m = Matrix::from_columns(field, len, &cols);
        let l = left_inverse(&m).ok_or_else(|| Error::VerificationFailed("dependent Hom basis".into()))?;
        inv.insert(*key, (l, idx.clone()));
    }
    let mut products: HashMap<(usize, usize), SparseVec> = HashMap::new();
    for l in 0..basis.len() {
        for rr in 0..basis.len() {
            if basis[l].source != basis[rr].target {
                continue;
            }
            // l * rr = rr ∘ l
            let comp = maps[rr].compose(&maps[l]);
            if comp.is_zero() {
                continue;
            }
            let key = (basis[rr].source, basis[l].target);
            let (li, idx) = inv
                .get(&key)
                .ok_or_else(|| Error::VerificationFailed("product outside the Hom blocks".into()))?;
            let x = li.mul_vec(&comp.to_vector());
            let v = sparse::collect(field, idx.iter().zip(x).map(|(&b, c)| (b, c)));
            products.insert((l, rr), v);
        }
    }
    let alg = FDAlgebra::from_parts(field, labels, basis, idempotents, products, None, Origin::Endomorphism)?;
    alg.check_axioms()?;
    Ok(Arc::new(alg))
}
