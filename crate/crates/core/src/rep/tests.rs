use super::*;
use crate::linalg::Field;
use crate::test_algebras::{a3, cyclic, kronecker};

fn kron_module(a: &Arc<FDAlgebra>, x: i64, y: i64) -> Representation {
    let f = a.field();
    let gens = a
        .generators()
        .iter()
        .enumerate()
        .map(|(k, _)| Matrix::from_i64(f, 1, 1, &[if k == 0 { x } else { y }]))
        .collect();
    Representation::from_generator_matrices(a.clone(), vec![1, 1], gens).unwrap()
}

#[test]
fn standard_modules_over_a3() {
    let a = a3();
    let p: Vec<_> = (0..3).map(|v| Representation::projective(&a, v)).collect();
    let i: Vec<_> = (0..3).map(|v| Representation::injective(&a, v)).collect();
    assert_eq!(p[0].dims(), &[1, 1, 1]);
    assert_eq!(p[2].dims(), &[0, 0, 1]);
    assert_eq!(i[0].dims(), &[1, 0, 0]);
    assert_eq!(i[2].dims(), &[1, 1, 1]);
    for m in p.iter().chain(&i) {
        m.validate().unwrap();
        assert!(Arc::ptr_eq(m.algebra(), &a));
    }
    assert!(is_isomorphic(&p[0], &i[2]).unwrap().is_some());
    assert!(is_isomorphic(&p[1], &i[2]).unwrap().is_none());
    let (rad, incl) = p[0].radical();
    assert!(incl.is_mono());
    assert!(is_isomorphic(&rad, &p[1]).unwrap().is_some());
    assert_eq!(p[0].top_vector(), vec![1, 0, 0]);
    assert_eq!(p[0].socle_vector(), vec![0, 0, 1]);
}

#[test]
fn hom_from_projective_is_evaluation() {
    let a = cyclic(3, 3, Field::Rational);
    let ms: Vec<_> = (0..3)
        .flat_map(|v| [Representation::projective(&a, v), Representation::injective(&a, v), Representation::simple(&a, v)])
        .collect();
    for v in 0..3 {
        let p = Representation::projective(&a, v);
        for m in &ms {
            let h = hom_space(&p, m).unwrap();
            assert_eq!(h.len(), m.dim_at(v));
            for phi in &h {
                phi.validate().unwrap();
            }
        }
    }
}

#[test]
fn generator_matrices_reproduce_action() {
    let a = cyclic(2, 3, Field::Rational);
    for v in 0..2 {
        let p = Representation::projective(&a, v);
        let gens = a.generators().iter().map(|&g| p.action(g).clone()).collect();
        let q = Representation::from_generator_matrices(a.clone(), p.dims().to_vec(), gens).unwrap();
        for b in 0..a.dim() {
            assert_eq!(q.action(b), p.action(b));
        }
    }
}

#[test]
fn dual_is_involutive() {
    let a = a3();
    let m = Representation::projective(&a, 0).plus(&Representation::simple(&a, 1));
    let dd = m.dual().dual();
    assert!(Arc::ptr_eq(dd.algebra(), &a));
    for b in 0..a.dim() {
        assert_eq!(dd.action(b), m.action(b));
    }
}

#[test]
fn multiplicities_and_add() {
    let a = a3();
    let p1 = Representation::projective(&a, 0);
    let s2 = Representation::simple(&a, 1);
    let m = Representation::direct_sum(&a, &[p1.clone(), s2.clone(), p1.clone()]).0;
    assert_eq!(multiplicity(&p1, &m).unwrap(), 2);
    assert_eq!(multiplicity(&s2, &m).unwrap(), 1);
    assert_eq!(multiplicity(&Representation::simple(&a, 0), &m).unwrap(), 0);
    let (mult, inside) = add_multiplicities(&[p1.clone(), s2.clone()], &m).unwrap();
    assert_eq!(mult, vec![2, 1]);
    assert!(inside);
    assert!(!add_multiplicities(&[p1], &m).unwrap().1);
    assert!(is_indecomposable(&s2).unwrap());
    assert!(!is_indecomposable(&m).unwrap());
}

#[test]
fn endomorphism_algebra_of_regular_module() {
    let a = cyclic(3, 2, Field::Rational);
    let ps: Vec<_> = (0..3).map(|v| Representation::projective(&a, v)).collect();
    let b = endomorphism_algebra(&ps, None).unwrap();
    assert_eq!(b.dim(), a.dim());
    for s in 0..3 {
        for t in 0..3 {
            assert_eq!(b.block(s, t).len(), a.block(s, t).len(), "block {s}->{t}");
        }
    }
    assert_eq!(b.loewy_length(), a.loewy_length());
    let dup = vec![ps[0].clone(), ps[0].clone()];
    assert!(matches!(endomorphism_algebra(&dup, None), Err(Error::SummandsNotDistinct(0, 1))));
    let sum = vec![ps[0].plus(&ps[1])];
    assert!(matches!(endomorphism_algebra(&sum, None), Err(Error::SummandDecomposable(0))));
}

#[test]
fn kronecker_band_modules() {
    let a = kronecker(Field::Rational);
    let m = kron_module(&a, 1, 1);
    let n = kron_module(&a, 2, 2);
    let o = kron_module(&a, 1, 2);
    assert!(is_isomorphic(&m, &n).unwrap().is_some());
    assert!(is_isomorphic(&m, &o).unwrap().is_none());
    let cert = is_isomorphic(&m, &n).unwrap().unwrap();
    cert.map.validate().unwrap();
    assert!(cert.map.is_iso());
}

#[test]
fn exhaustive_search_agrees_over_small_field() {
    let f = Field::prime(3).unwrap();
    let a = kronecker(f);
    for (x, y) in [(0, 1), (1, 0), (1, 1), (1, 2), (2, 1)] {
        for (u, w) in [(0, 1), (1, 0), (1, 1), (1, 2), (2, 2)] {
            let m = kron_module(&a, x, y);
            let n = kron_module(&a, u, w);
            let fast = is_isomorphic(&m, &n).unwrap().is_some();
            let slow = is_isomorphic_exhaustive(&m, &n).unwrap().is_some();
            assert_eq!(fast, slow);
        }
    }
}

#[test]
fn submodules_and_quotients() {
    let a = a3();
    let p1 = Representation::projective(&a, 0);
    let (soc, incl) = p1.socle();
    let (q, pi) = p1.quotient(&incl.blocks).unwrap();
    assert_eq!(soc.total_dim() + q.total_dim(), p1.total_dim());
    assert!(pi.compose(&incl).is_zero());
    pi.validate().unwrap();
    let bad = vec![
        Matrix::from_i64(a.field(), 1, 1, &[1]),
        Matrix::zeros(a.field(), 1, 0),
        Matrix::zeros(a.field(), 1, 0),
    ];
    assert!(matches!(p1.submodule(&bad), Err(Error::NotASubmodule)));
}

#[test]
fn corner_restriction_and_inflation() {
    let a = a3();
    let e = IdempotentSet::new([0, 2]);
    let c = a.corner(&e).unwrap();
    let p = Representation::projective(&a, 0).restrict_to_corner(&c).unwrap();
    p.validate().unwrap();
    assert_eq!(p.dims(), &[1, 1]);
    let qa = a.quotient(&IdempotentSet::new([2])).unwrap();
    let s = Representation::projective(&qa, 0);
    let lifted = s.inflate().unwrap();
    lifted.validate().unwrap();
    assert_eq!(lifted.dims(), &[1, 1, 0]);
    let back = lifted.deflate(&qa).unwrap();
    assert_eq!(back.dims(), s.dims());
}
