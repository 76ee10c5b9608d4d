use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::sparse::{self, SparseEchelon};
use crate::linalg::{Field, Matrix, Scalar, CERT_PRIME};

use super::{ModuleMap, Representation};

/// Seed used when the caller does not supply one.
pub const DEFAULT_SEED: u64 = 0x9e37_79b9_7f4a_7c15;

/// How an isomorphism was certified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoMethod {
    /// A random combination of a Hom basis had full rank modulo `prime`,
    /// hence over the ground field.
    Randomized { seed: u64, trial: usize, prime: u64 },
    /// Exact rank computation over the ground field.
    Exact { seed: u64, trial: usize },
    /// Enumeration of all maps over a small prime field.
    Exhaustive,
}

/// An explicit isomorphism `M -> N`.
#[derive(Clone, Debug)]
pub struct IsoCertificate {
    pub map: ModuleMap,
    pub method: IsoMethod,
}

fn offsets(m: &Representation, n: &Representation) -> (Vec<usize>, usize) {
    let mut off = Vec::with_capacity(m.dims().len());
    let mut k = 0;
    for v in 0..m.dims().len() {
        off.push(k);
        k += n.dim_at(v) * m.dim_at(v);
    }
    (off, k)
}

/// Basis of `Hom_A(M, N)`.
pub fn hom_space(m: &Representation, n: &Representation) -> Result<Vec<ModuleMap>> {
    if !m.same_algebra(n) {
        return Err(Error::IncompatibleAlgebra);
    }
    let a = m.algebra();
    let field = m.field();
    let (off, nvars) = offsets(m, n);
    let var = |v: usize, i: usize, j: usize| off[v] + i * m.dim_at(v) + j;
    let mut ech = SparseEchelon::new(field, nvars);
    for &g in a.generators() {
        let e = a.basis_element(g);
        let (s, t) = (e.source, e.target);
        let ng = n.action(g);
        let mg = m.action(g);
        // (N(g) phi_s - phi_t M(g))[i][j] = 0
        for i in 0..n.dim_at(t) {
            for j in 0..m.dim_at(s) {
                let mut row: Vec<(usize, Scalar)> = Vec::new();
                for k in 0..n.dim_at(s) {
                    let c = ng.get(i, k);
                    if !c.is_zero() {
                        row.push((var(s, k, j), c.clone()));
                    }
                }
                for k in 0..m.dim_at(t) {
                    let c = mg.get(k, j);
                    if !c.is_zero() {
                        row.push((var(t, i, k), c.neg_ref()));
                    }
                }
                let row = sparse::collect(field, row);
                if !row.is_empty() {
                    ech.insert(&row);
                }
            }
        }
    }
    Ok(ech
        .kernel()
        .into_iter()
        .map(|x| ModuleMap::from_vector(m, n, &sparse::to_dense(field, &x, nvars)))
        .collect())
}

pub fn hom_dim(m: &Representation, n: &Representation) -> Result<usize> {
    Ok(hom_space(m, n)?.len())
}

fn full_rank_mod(maps: &[ModuleMap], coeffs: &[u64], p: u64) -> Option<bool> {
    let field = Field::Prime(p);
    let nv = maps[0].blocks.len();
    for v in 0..nv {
        let (r, c) = (maps[0].blocks[v].rows(), maps[0].blocks[v].cols());
        let mut acc = Matrix::zeros(field, r, c);
        for (phi, &x) in maps.iter().zip(coeffs) {
            let b = phi.blocks[v].to_mod_p(p)?;
            acc = acc.add(&b.scale(&Scalar::Mod(x % p, p)));
        }
        if acc.rank() != r {
            return Some(false);
        }
    }
    Some(true)
}

fn combine(maps: &[ModuleMap], coeffs: &[u64]) -> ModuleMap {
    let field = maps[0].source.field();
    let mut acc = ModuleMap::zero(&maps[0].source, &maps[0].target);
    for (phi, &x) in maps.iter().zip(coeffs) {
        let c = match field {
            Field::Rational => field.from_i64(x as i64),
            Field::Prime(p) => Scalar::Mod(x % p, p),
        };
        acc = acc.add(&phi.scale(&c));
    }
    acc
}

/// Trials needed so that `(dim / range)^t <= 2^-64`, capped at 64.
fn trials_for_bound(dim: usize, range: u64) -> usize {
    let ratio = (range as f64) / (dim.max(1) as f64);
    if ratio <= 2.0 {
        return 64;
    }
    ((64.0 / ratio.log2()).ceil() as usize).clamp(1, 64)
}

/// Decides `M ≅ N` and returns an explicit isomorphism when one is found.
///
/// Random combinations of a basis of `Hom(M, N)` are tested; the answer
/// `None` is wrong with probability at most `2^-64` (at most `(dim M / p)^trials`
/// with coefficients drawn from `[0, p)`).
pub fn is_isomorphic(m: &Representation, n: &Representation) -> Result<Option<IsoCertificate>> {
    is_isomorphic_with(m, n, DEFAULT_SEED, 2)
}

pub fn is_isomorphic_with(
    m: &Representation,
    n: &Representation,
    seed: u64,
    trials: usize,
) -> Result<Option<IsoCertificate>> {
    if !m.same_algebra(n) {
        return Err(Error::IncompatibleAlgebra);
    }
    if m.dims() != n.dims() {
        return Ok(None);
    }
    if m.is_zero() {
        return Ok(Some(IsoCertificate { map: ModuleMap::zero(m, n), method: IsoMethod::Exhaustive }));
    }
    let hom = hom_space(m, n)?;
    if hom.is_empty() {
        return Ok(None);
    }
    let h_mm = hom_dim(m, m)?;
    if h_mm != hom.len() || hom_dim(n, n)? != hom.len() {
        return Ok(None);
    }
    let field = m.field();
    if let Field::Prime(p) = field {
        let small = (p as f64).powi(hom.len() as i32) <= 50_000.0;
        if small {
            return Ok(is_isomorphic_exhaustive(m, n)?.map(|map| IsoCertificate { map, method: IsoMethod::Exhaustive }));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let range = match field {
        Field::Prime(p) => p,
        Field::Rational => CERT_PRIME,
    };
    let trials = trials.max(trials_for_bound(m.total_dim(), range));
    for trial in 0..trials {
        let coeffs: Vec<u64> = (0..hom.len()).map(|_| rng.gen_range(0..range)).collect();
        let (ok, method) = match field {
            Field::Rational => match full_rank_mod(&hom, &coeffs, CERT_PRIME) {
                Some(ok) => (ok, IsoMethod::Randomized { seed, trial, prime: CERT_PRIME }),
                None => (combine(&hom, &coeffs).is_iso(), IsoMethod::Exact { seed, trial }),
            },
            Field::Prime(_) => (combine(&hom, &coeffs).is_iso(), IsoMethod::Exact { seed, trial }),
        };
        if ok {
            return Ok(Some(IsoCertificate { map: combine(&hom, &coeffs), method }));
        }
    }
    Ok(None)
}

/// Searches every map in `Hom(M, N)` over a prime field. Intended for small cases.
pub fn is_isomorphic_exhaustive(m: &Representation, n: &Representation) -> Result<Option<ModuleMap>> {
    let Field::Prime(p) = m.field() else {
        return Err(Error::Unsupported("exhaustive search needs a prime field".into()));
    };
    if m.dims() != n.dims() {
        return Ok(None);
    }
    let hom = hom_space(m, n)?;
    if hom.is_empty() {
        return Ok((m.total_dim() == 0).then(|| ModuleMap::zero(m, n)));
    }
    let mut coeffs = vec![0u64; hom.len()];
    loop {
        let phi = combine(&hom, &coeffs);
        if phi.is_iso() {
            return Ok(Some(phi));
        }
        let mut k = 0;
        loop {
            if k == coeffs.len() {
                return Ok(None);
            }
            coeffs[k] += 1;
            if coeffs[k] < p {
                break;
            }
            coeffs[k] = 0;
            k += 1;
        }
    }
}

/// Coordinates of `phi` in a basis of maps, if it lies in their span.
pub fn coordinates(basis: &[ModuleMap], phi: &ModuleMap) -> Option<Vec<Scalar>> {
    let field = phi.source.field();
    let x = phi.to_vector();
    let cols: Vec<Vec<Scalar>> = basis.iter().map(ModuleMap::to_vector).collect();
    Matrix::from_columns(field, x.len(), &cols).solve(&x).ok().flatten()
}
