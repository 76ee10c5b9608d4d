use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rep::Representation;

use super::{minimal_resolution_with, Direction, Resolution, ResolveOptions};

/// Matrix of `Hom(P_i, N) -> Hom(P_{i+1}, N)`, precomposition with
/// `d_{i+1}`. `Hom(P, N)` is coordinatized by the images of the summand
/// generators, summand by summand.
pub fn hom_complex_dual(res: &Resolution, i: usize, n: &Representation) -> Matrix {
    let a = res.module.algebra();
    let field = a.field();
    let src = &res.terms[i];
    let tgt = &res.terms[i + 1];
    let d = &res.differentials[i + 1];
    let col_off: Vec<usize> = src
        .copies
        .iter()
        .scan(0, |acc, &v| {
            let o = *acc;
            *acc += n.dim_at(v);
            Some(o)
        })
        .collect();
    let ncols: usize = src.copies.iter().map(|&v| n.dim_at(v)).sum();
    let nrows: usize = tgt.copies.iter().map(|&w| n.dim_at(w)).sum();
    let mut m = Matrix::zeros(field, nrows, ncols);
    let mut r0 = 0;
    for (c2, &w) in tgt.copies.iter().enumerate() {
        let g = tgt.generator_index(a, c2);
        let coords = src.coords(a, w);
        for (r, &(c, b)) in coords.iter().enumerate() {
            let k = d.blocks[w].get(r, g);
            if k.is_zero() {
                continue;
            }
            let act = n.action(b).scale(k);
            for x in 0..act.rows() {
                for y in 0..act.cols() {
                    m.add_at(r0 + x, col_off[c] + y, act.get(x, y));
                }
            }
        }
        r0 += n.dim_at(w);
    }
    m
}

fn hom_dim_from_proj(res: &Resolution, i: usize, n: &Representation) -> usize {
    res.terms[i].copies.iter().map(|&v| n.dim_at(v)).sum()
}

/// `dim Ext^i(M, N)` for `i = 0..=max_i`, from the Hom complex of the minimal
/// projective resolution of `M`.
pub fn ext_dims(m: &Representation, n: &Representation, max_i: usize) -> Result<Vec<usize>> {
    if !m.same_algebra(n) {
        return Err(Error::IncompatibleAlgebra);
    }
    let res = minimal_resolution_with(m, Direction::Projective, ResolveOptions { terms: max_i + 2, detect_period: false });
    Ok(ext_dims_from(&res, n, max_i))
}

/// `dim Ext^i(M, N)` for `i = 0..=max_i` from a resolution holding at least
/// `max_i + 2` terms (or terminating earlier).
pub fn ext_dims_from(res: &Resolution, n: &Representation, max_i: usize) -> Vec<usize> {
    let len = res.terms.len();
    let rank = |i: usize| -> usize {
        if i + 1 < len {
            hom_complex_dual(res, i, n).rank()
        } else {
            0
        }
    };
    let mut out = Vec::with_capacity(max_i + 1);
    let mut prev_rank = 0;
    for i in 0..=max_i {
        if i >= len {
            out.push(0);
            prev_rank = 0;
            continue;
        }
        let r = rank(i);
        out.push(hom_dim_from_proj(res, i, n) - r - prev_rank);
        prev_rank = r;
    }
    out
}

pub fn ext_dim(m: &Representation, n: &Representation, i: usize) -> Result<usize> {
    Ok(ext_dims(m, n, i)?[i])
}
