use std::sync::Arc;

use rand::Rng;

use crate::algebra::FDAlgebra;
use crate::linalg::Scalar;

use super::Representation;

fn random_vector<R: Rng>(a: &FDAlgebra, rng: &mut R, d: usize) -> Vec<Scalar> {
    let field = a.field();
    loop {
        let x: Vec<Scalar> = (0..d).map(|_| field.from_i64(rng.gen_range(-2..=2))).collect();
        if x.iter().any(|c| !c.is_zero()) {
            return x;
        }
    }
}

fn random_quotient<R: Rng>(a: &Arc<FDAlgebra>, rng: &mut R, max_dim: usize) -> Option<Representation> {
    let n = a.n_vertices();
    let k = rng.gen_range(1..=2);
    let parts: Vec<Representation> = (0..k).map(|_| Representation::projective(a, rng.gen_range(0..n))).collect();
    let mut m = Representation::direct_sum(a, &parts).0;
    for _ in 0..4 * max_dim + 8 {
        if m.is_zero() {
            return None;
        }
        if m.total_dim() <= max_dim && rng.gen_bool(0.5) {
            return Some(m);
        }
        let occupied: Vec<usize> = (0..n).filter(|&v| m.dim_at(v) > 0).collect();
        let w = occupied[rng.gen_range(0..occupied.len())];
        let x = random_vector(a, rng, m.dim_at(w));
        let (_, incl) = m.generated_by(&[(w, x)]).ok()?;
        m = incl.cokernel().0;
    }
    (!m.is_zero() && m.total_dim() <= max_dim).then_some(m)
}

/// A seeded pseudo-random nonzero module of total dimension at most `max_dim`:
/// a quotient of one or two indecomposable projectives, or the dual of such a
/// module over the opposite algebra. Falls back to a simple module.
pub fn random_module<R: Rng>(a: &Arc<FDAlgebra>, rng: &mut R, max_dim: usize) -> Representation {
    for _ in 0..16 {
        let m = if rng.gen_bool(0.5) {
            random_quotient(a, rng, max_dim)
        } else {
            random_quotient(&a.opposite(), rng, max_dim).map(|m| m.dual())
        };
        if let Some(m) = m {
            return m;
        }
    }
    Representation::simple(a, rng.gen_range(0..a.n_vertices()))
}
