use super::*;
use crate::algebra::IdempotentSet;
use crate::linalg::Field;
use crate::par::Execution;
use crate::test_algebras::{a3, cyclic, linear};

fn iso(m: &Representation, n: &Representation) -> bool {
    is_isomorphic(m, n).unwrap().is_some()
}

#[test]
fn cover_and_syzygy_over_a3() {
    let a = a3();
    let s1 = Representation::simple(&a, 0);
    let c = projective_cover(&s1);
    assert_eq!(c.summands.copies, vec![0]);
    assert!(c.map.is_epi());
    c.map.validate().unwrap();
    let om = syzygy(&s1);
    assert!(iso(&om, &Representation::projective(&a, 1)));
    assert_eq!(proj_dim(&s1, 5), HomDim::Finite(1));
    assert_eq!(proj_dim(&Representation::projective(&a, 0), 5), HomDim::Finite(0));
    assert_eq!(global_dimension(&a, 5, Execution::Sequential), HomDim::Finite(1));
    let env = injective_envelope(&Representation::simple(&a, 2));
    assert!(env.map.is_mono());
    assert!(iso(&env.module, &Representation::injective(&a, 2)));
}

#[test]
fn ext_between_simples_of_a2() {
    let a = linear(2, Field::Rational);
    let s1 = Representation::simple(&a, 0);
    let s2 = Representation::simple(&a, 1);
    assert_eq!(ext_dims(&s1, &s2, 2).unwrap(), vec![0, 1, 0]);
    assert_eq!(ext_dims(&s2, &s1, 2).unwrap(), vec![0, 0, 0]);
    assert_eq!(ext_dims(&s1, &s1, 1).unwrap(), vec![1, 0]);
}

#[test]
fn resolution_is_exact() {
    let a = cyclic(3, 3, Field::Rational);
    let s = Representation::simple(&a, 0);
    let res = minimal_resolution_with(&s, Direction::Projective, ResolveOptions { terms: 5, detect_period: false });
    assert_eq!(res.terms.len(), 5);
    for i in 1..res.differentials.len() {
        assert!(res.differentials[i - 1].compose(&res.differentials[i]).is_zero());
        let (k, _) = res.differentials[i - 1].kernel();
        let (im, _) = res.differentials[i].image();
        assert_eq!(k.dims(), im.dims());
    }
    for i in 0..res.terms.len() {
        for v in 0..3 {
            assert_eq!(res.syzygies[i + 1].dim_at(v), res.modules[i].dim_at(v) - res.syzygies[i].dim_at(v));
        }
    }
}

#[test]
fn self_injective_nakayama_is_periodic() {
    let a = cyclic(2, 2, Field::Rational);
    assert!(is_self_injective(&a));
    let s = Representation::simple(&a, 0);
    let res = minimal_resolution(&s, Direction::Projective, 8);
    match res.status {
        Termination::Periodic { period, .. } => assert!(period <= 2),
        other => panic!("unexpected {other:?}"),
    }
    assert!(matches!(proj_dim(&s, 8), HomDim::Infinite { period: Some(_) }));
    assert_eq!(gorenstein_dimension(&a, 8, Execution::Sequential), HomDim::Finite(0));
    assert!(!dominant_dimension(&a, 8, Execution::Sequential).is_finite());
}

#[test]
fn path_algebra_dimensions() {
    let a = linear(2, Field::Rational);
    assert!(!is_self_injective(&a));
    assert_eq!(gorenstein_dimension(&a, 6, Execution::Sequential), HomDim::Finite(1));
    assert_eq!(dominant_dimension(&a, 6, Execution::Sequential), HomDim::Finite(1));
}

#[test]
fn ar_translate_on_a3() {
    let a = a3();
    let s: Vec<_> = (0..3).map(|v| Representation::simple(&a, v)).collect();
    assert!(ar_translate(&Representation::projective(&a, 0)).is_zero());
    assert!(iso(&ar_translate(&s[1]), &s[2]));
    assert!(iso(&ar_translate(&s[0]), &s[1]));
    let i2 = Representation::injective(&a, 1);
    assert!(iso(&ar_translate(&i2), &Representation::projective(&a, 1)));
    assert!(ar_translate_inverse(&Representation::injective(&a, 2)).is_zero());
    for m in [&s[0], &s[1], &i2] {
        assert!(iso(&ar_translate_inverse(&ar_translate(m)), m));
    }
}

#[test]
fn nakayama_functor_on_projectives() {
    for a in [a3(), cyclic(3, 2, Field::Rational)] {
        for v in 0..a.n_vertices() {
            let p = Representation::projective(&a, v);
            let i = Representation::injective(&a, v);
            assert!(iso(&nakayama(&p), &i));
            assert!(iso(&nakayama_inverse(&i), &p));
        }
    }
}

#[test]
fn ext_dimension_shift() {
    let a = cyclic(3, 3, Field::Rational);
    let ms: Vec<_> = (0..3)
        .flat_map(|v| [Representation::simple(&a, v), Representation::projective(&a, v).radical().0])
        .collect();
    for m in &ms {
        let om = syzygy(m);
        for n in &ms {
            let e = ext_dims(m, n, 3).unwrap();
            let f = ext_dims(&om, n, 2).unwrap();
            assert_eq!(&e[2..], &f[1..]);
        }
    }
}

#[test]
fn gen_membership_methods_agree() {
    let a = cyclic(3, 2, Field::Rational);
    let e = IdempotentSet::new([0, 1]);
    for v in 0..3 {
        for l in [Level::Finite(0), Level::Finite(2), Level::Infinite] {
            let r = gen_membership(&Representation::simple(&a, v), &e, l, 10).unwrap();
            assert!(r.agree(), "{r:?}");
        }
    }
    let r = gen_membership(&Representation::projective(&a, 0), &e, Level::Infinite, 10).unwrap();
    assert_eq!(r.verdict(), Some(true));
    let r = gen_membership(&Representation::simple(&a, 2), &e, Level::Finite(0), 10).unwrap();
    assert_eq!(r.verdict(), Some(false));
}

#[test]
fn gorenstein_projectives_over_self_injective() {
    let a = cyclic(2, 3, Field::Rational);
    let s = Representation::simple(&a, 0);
    assert!(is_gorenstein_projective(&s, 6).unwrap().verdict);
    assert!(is_gorenstein_injective(&s, 6).unwrap().verdict);
}

#[test]
fn cutoff_env_override() {
    let a = a3();
    assert_eq!(default_cutoff(&a), 4 * 3 + 3);
}
