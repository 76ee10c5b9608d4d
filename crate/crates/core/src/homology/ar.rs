use crate::linalg::{sparse, Scalar};
use crate::rep::{ModuleMap, Representation};

use super::{minimal_resolution_with, Direction, ResolveOptions};

/// `Hom_A(d_1, A): Hom(P_0, A) -> Hom(P_1, A)` for a minimal presentation
/// `P_1 -> P_0 -> M`, as a map of projective `A^op`-modules.
fn dual_presentation(m: &Representation) -> ModuleMap {
    let a = m.algebra();
    let op = a.opposite();
    let field = a.field();
    let res = minimal_resolution_with(m, Direction::Projective, ResolveOptions { terms: 2, detect_period: false });
    let p0 = res.terms.first().cloned().unwrap_or_default();
    let p1 = res.terms.get(1).cloned().unwrap_or_default();
    let src = p0.module(&op);
    let tgt = p1.module(&op);
    // x[c][c2] in e_w A e_v: the component of d_1(generator c2) in summand c
    let mut x: Vec<Vec<sparse::SparseVec>> = vec![vec![Vec::new(); p1.copies.len()]; p0.copies.len()];
    if !p1.is_empty() {
        let d = &res.differentials[1];
        for (c2, &w) in p1.copies.iter().enumerate() {
            let g = p1.generator_index(a, c2);
            let col = d.blocks[w].column(g);
            for (c, part) in p0.split(a, w, &col).into_iter().enumerate() {
                x[c][c2] = part;
            }
        }
    }
    // generator of summand c of Hom(P_0, A) goes to sum over c2 of x[c][c2]
    let images: Vec<Vec<Scalar>> = p0
        .copies
        .iter()
        .enumerate()
        .map(|(c, &v)| {
            let mut vec = vec![field.zero(); tgt.dim_at(v)];
            for (r, (c2, b)) in p1.coords(&op, v).into_iter().enumerate() {
                if let Some(k) = sparse::get(&x[c][c2], b) {
                    vec[r] = k.clone();
                }
            }
            vec
        })
        .collect();
    p0.map_from_images(&op, &src, &tgt, &images)
}

/// `Tr M`, an `A^op`-module.
pub fn transpose(m: &Representation) -> Representation {
    dual_presentation(m).cokernel().0
}

/// `τ M = D Tr M`.
pub fn ar_translate(m: &Representation) -> Representation {
    transpose(m).dual()
}

/// `τ⁻ M = Tr D M`.
pub fn ar_translate_inverse(m: &Representation) -> Representation {
    transpose(&m.dual())
}

/// `ν M = D Hom_A(M, A)`.
pub fn nakayama(m: &Representation) -> Representation {
    dual_presentation(m).kernel().0.dual()
}

/// `ν⁻ M = Hom_A(DA, M)`, computed as `D ν_{A^op} D M`.
pub fn nakayama_inverse(m: &Representation) -> Representation {
    nakayama(&m.dual()).dual()
}
