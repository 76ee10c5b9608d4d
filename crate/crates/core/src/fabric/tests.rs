use super::*;
use crate::algebra::build_algebra;
use crate::fixtures;
use crate::homology::{minimal_resolution, syzygy, Direction};
use crate::rep::{is_isomorphic, DEFAULT_SEED};

fn set(a: &FDAlgebra, labels: &[&str]) -> IdempotentSet {
    IdempotentSet::from_labels(a.labels(), labels).unwrap()
}

fn opts(a: &FDAlgebra) -> FabricOptions {
    FabricOptions { cutoff: crate::homology::default_cutoff(a), seed: DEFAULT_SEED, exec: Execution::Sequential, h: None }
}

#[test]
fn apt_example_is_fabric_with_both_methods() {
    let fx = fixtures::apt_example().unwrap();
    let a = build_algebra(&fx.presentation).unwrap();
    let f = set(&a, &["2", "3", "5"]);
    let r = analyze_fabric(&a, Some(&fx.presentation), &f, &opts(&a)).unwrap();
    assert_eq!(r.companion, Some(set(&a, &["1", "3", "4"])));
    assert_eq!(r.methods_agree(), Some(true));
    assert_eq!(r.definitional.search, CompanionSearch::Socle);
    assert_eq!(r.fabric_dimension(), Some(HomDim::Finite(1)));
}

#[test]
fn apt_example_syzygies_of_injectives() {
    let fx = fixtures::apt_example().unwrap();
    let a = build_algebra(&fx.presentation).unwrap();
    let v = |l: &str| a.vertex_by_label(l).unwrap();
    let s4 = Representation::simple(&a, v("4"));
    let s1 = Representation::simple(&a, v("1"));
    let om1 = syzygy(&Representation::injective(&a, v("1")));
    let om4 = syzygy(&Representation::injective(&a, v("4")));
    assert!(is_isomorphic(&om1, &s4).unwrap().is_some());
    assert!(is_isomorphic(&om4, &s1).unwrap().is_some());
}

#[test]
fn apt_example_tau_of_quotient_is_dual_of_companion_quotient() {
    let fx = fixtures::apt_example().unwrap();
    let a = build_algebra(&fx.presentation).unwrap();
    let f = set(&a, &["2", "3", "5"]);
    let e = set(&a, &["1", "3", "4"]);
    let taus: Vec<Representation> = quotient_projectives(&a, &f).unwrap().iter().map(|(_, q)| crate::homology::ar_translate(q)).collect();
    let tau = Representation::direct_sum(&a, &taus).0;
    let injs: Vec<Representation> = quotient_injectives(&a, &e).unwrap().into_iter().map(|(_, i)| i).collect();
    let d = Representation::direct_sum(&a, &injs).0;
    assert!(is_isomorphic(&tau, &d).unwrap().is_some());
}

#[test]
fn apt_example_special_tilting() {
    let fx = fixtures::apt_example().unwrap();
    let a = build_algebra(&fx.presentation).unwrap();
    let f = set(&a, &["2", "3", "5"]);
    let e = set(&a, &["1", "3", "4"]);
    let r = special_tilting_report(&a, &f, &e).unwrap();
    assert!(r.passes(), "{:?}", r.transcript);
    assert!(r.has_full_rank());
}

#[test]
fn empty_f_is_fabric_with_everything() {
    let fx = fixtures::apt_example().unwrap();
    let a = build_algebra(&fx.presentation).unwrap();
    let f = IdempotentSet::default();
    let c = check_fabric_definitional(&a, &f).unwrap();
    assert_eq!(c.companion, Some(IdempotentSet::new(0..5)));
    let t = special_tilting_report(&a, &f, &c.companion.unwrap()).unwrap();
    assert!(t.passes());
    assert_eq!(t.summands.len(), 5);
}

#[test]
fn full_f_is_vacuously_fabric() {
    let a = crate::test_algebras::cyclic(3, 2, crate::linalg::Field::Rational);
    let f = IdempotentSet::new(0..3);
    let c = check_fabric_definitional(&a, &f).unwrap();
    assert_eq!(c.companion, Some(IdempotentSet::new(0..3)));
}

#[test]
fn two_ag_square_is_fabric() {
    let fx = fixtures::two_ag_square().unwrap();
    let a = build_algebra(&fx.presentation).unwrap();
    let f = set(&a, &["2", "3", "4"]);
    let r = analyze_fabric(&a, Some(&fx.presentation), &f, &opts(&a)).unwrap();
    assert!(r.is_fabric());
    assert_eq!(r.methods_agree(), Some(true));
    let t = special_tilting_report(&a, &f, r.companion.as_ref().unwrap()).unwrap();
    assert!(t.passes(), "{:?}", t.transcript);
}

#[test]
fn canonical_221_companion() {
    let fx = fixtures::canonical_2_221().unwrap();
    let a = build_algebra(&fx.presentation).unwrap();
    let f = fx.f_set().unwrap().unwrap();
    let r = analyze_fabric(&a, Some(&fx.presentation), &f, &opts(&a)).unwrap();
    assert_eq!(r.methods_agree(), Some(true));
    // fabric, but the translates are not the full dual of A/<e>
    assert_eq!(r.companion, Some(set(&a, &["3", "5", "7"])));
    assert_eq!(r.definitional.strong, None);
    let c = r.combinatorial.as_ref().unwrap();
    assert_eq!(c.failure.as_ref().map(|x| x.condition), Some(2));
    let corner = a.corner(&f).unwrap();
    let target = fixtures::canonical_2_211().unwrap();
    let map = crate::algebra::vertex_map_by_labels(&target.presentation, &corner).unwrap();
    assert!(crate::algebra::find_isomorphism(&target.presentation, &corner, &map).unwrap().is_some());
}

#[test]
fn canonical_211_reduces_to_beilinson() {
    let fx = fixtures::canonical_2_211().unwrap();
    let a = build_algebra(&fx.presentation).unwrap();
    let f = fx.f_set().unwrap().unwrap();
    let r = analyze_fabric(&a, Some(&fx.presentation), &f, &opts(&a)).unwrap();
    assert!(r.is_fabric());
    assert_eq!(r.methods_agree(), Some(true));
    assert_eq!(r.definitional.strong, None);
    let corner = a.corner(&f).unwrap();
    let target = fixtures::beilinson_2().unwrap();
    let map = crate::algebra::vertex_map_by_labels(&target.presentation, &corner).unwrap();
    assert!(crate::algebra::find_isomorphism(&target.presentation, &corner, &map).unwrap().is_some());
}

#[test]
fn condition_one_failure_is_reported() {
    // two arrows from 1 into f = {2}
    let a = crate::test_algebras::kronecker(crate::linalg::Field::Rational);
    let mut q = crate::algebra::Quiver::new();
    q.add_vertex("1").unwrap();
    q.add_vertex("2").unwrap();
    q.connect("x", "1", "2").unwrap();
    q.connect("y", "1", "2").unwrap();
    let p = crate::algebra::Presentation::new(crate::linalg::Field::Rational, q);
    let f = IdempotentSet::new([1]);
    let c = check_fabric_combinatorial_in(&p, &a, &f).unwrap();
    assert_eq!(c.failure.as_ref().map(|x| x.condition), Some(1));
    let d = check_fabric_definitional(&a, &f).unwrap();
    assert!(!d.is_fabric());
}

#[test]
fn cofabric_of_opposite_matches_fabric() {
    let fx = fixtures::apt_example().unwrap();
    let a = build_algebra(&fx.presentation).unwrap();
    let f = set(&a, &["2", "3", "5"]);
    let direct = check_fabric_definitional(&a, &f).unwrap();
    let via_op = check_cofabric(&a.opposite(), &f).unwrap();
    assert_eq!(direct.companion, via_op.companion);
}

#[test]
fn generator_switching_on_apt_example() {
    let fx = fixtures::apt_example().unwrap();
    let a = build_algebra(&fx.presentation).unwrap();
    let f = set(&a, &["2", "3", "5"]);
    let e = set(&a, &["1", "3", "4"]);
    let r = verify_generator_switching(&a, &f, &[(e, 1)], DEFAULT_BUDGET, DEFAULT_SEED, 12).unwrap();
    assert_eq!(r.gorenstein_dimension, 2);
    assert!(r.passes(), "{:?}", r.violations);
    assert_eq!(r.samples.len(), DEFAULT_BUDGET);
}

#[test]
fn resolution_patterns_apt_example() {
    let fx = fixtures::apt_example().unwrap();
    let a = build_algebra(&fx.presentation).unwrap();
    let v = |l: &str| a.vertex_by_label(l).unwrap();
    let terms = |w: &str| {
        let r = minimal_resolution(&Representation::injective(&a, v(w)), Direction::Projective, 4);
        (0..3).map(|i| {
            let mut t: Vec<String> = r.term(i).unwrap().copies.iter().map(|&c| a.label(c).to_string()).collect();
            t.sort();
            t.join("+")
        }).collect::<Vec<_>>()
    };
    assert_eq!(terms("2"), ["4", "4", "5"]);
    assert_eq!(terms("5"), ["1", "1", "2"]);
    assert_eq!(terms("3"), ["3", "1+4", "2+5"]);
}
