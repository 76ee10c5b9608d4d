use super::*;
use crate::algebra::{find_isomorphism, quiver_of, vertex_map_by_labels, Presentation, Quiver};
use crate::homology::{default_cutoff, gorenstein_dimension, is_self_injective, HomDim};
use crate::par::Execution;

fn series(l: &[usize]) -> KupischSeries {
    KupischSeries::new(l.to_vec()).unwrap()
}

/// Number of shifts `J + tk` interlacing with `I`:
/// `i_1 <= j_1 < i_2 <= j_2 < ... <= j_n < i_1 + n + l_{i_1} - 1`.
fn oracle_dim(n: usize, l: &KupischSeries, i: &[i64], j: &[i64]) -> usize {
    let k = l.k() as i64;
    let bound = i[0] + n as i64 + l.at(i[0]) as i64 - 1;
    (-4..8)
        .filter(|t| {
            let jj: Vec<i64> = j.iter().map(|x| x + t * k).collect();
            (0..n).all(|m| i[m] <= jj[m] && (m + 1 == n || jj[m] < i[m + 1])) && jj[n - 1] < bound
        })
        .count()
}

#[test]
fn kupisch_axioms() {
    assert!(KupischSeries::new(vec![4, 3, 3, 3]).is_ok());
    assert!(KupischSeries::new(vec![2, 2, 2]).is_ok());
    assert!(matches!(KupischSeries::new(vec![2, 4]), Err(Error::InvalidKupisch(_))));
    assert!(KupischSeries::new(vec![1, 2, 3]).is_ok());
    assert!(KupischSeries::new(vec![3, 1]).is_err());
    assert!(KupischSeries::new(vec![]).is_err());
}

#[test]
fn worked_example_vertices() {
    let h = higher_nakayama(2, &series(&[4, 3, 3, 3])).unwrap();
    let labels: Vec<&str> = h.algebra.labels().iter().map(String::as_str).collect();
    assert_eq!(labels, ["01", "02", "03", "04", "12", "13", "14", "23", "24", "25", "34", "35", "36"]);
    assert_eq!(h.presentation.quiver.n_arrows(), 18);
}

#[test]
fn block_dimensions_match_interlacing_count() {
    for (n, l) in [(1, vec![3, 2, 2]), (2, vec![4, 3, 3, 3]), (2, vec![2, 2, 2]), (3, vec![3, 3]), (2, vec![3, 3, 2])] {
        let l = series(&l);
        let h = higher_nakayama(n, &l).unwrap();
        let a = &h.algebra;
        for (s, i) in h.vertices.iter().enumerate() {
            for (t, j) in h.vertices.iter().enumerate() {
                assert_eq!(a.block(s, t).len(), oracle_dim(n, &l, i, j), "n={n} l={l} {i:?}->{j:?}");
            }
        }
    }
}

#[test]
fn two_cycle_with_square_zero() {
    let h = higher_nakayama(1, &series(&[2, 2])).unwrap();
    assert_eq!(h.algebra.n_vertices(), 2);
    assert_eq!(h.algebra.dim(), 4);
    assert_eq!(h.algebra.loewy_length(), 2);
    assert!(is_self_injective(&h.algebra));
}

#[test]
fn n_equal_one_projectives_are_uniserial() {
    let h = higher_nakayama(1, &series(&[3, 2, 2])).unwrap();
    for v in 0..h.algebra.n_vertices() {
        let p = crate::rep::Representation::projective(&h.algebra, v);
        let mut m = p;
        while !m.is_zero() {
            assert_eq!(m.top_vector().iter().sum::<usize>(), 1);
            m = m.radical().0;
        }
    }
}

#[test]
fn reduction_of_worked_example() {
    assert_eq!(kupisch_reduce(2, &series(&[4, 3, 3, 3])).unwrap(), Some(series(&[2, 2, 2])));
    assert_eq!(kupisch_reduce(1, &series(&[3, 2, 2])).unwrap(), None);
    assert_eq!(kupisch_reduce(2, &series(&[2, 2, 2])).unwrap(), Some(series(&[2, 2, 2])));
    assert!(matches!(kupisch_reduce(2, &series(&[3, 3, 4])), Err(Error::HypothesisViolated(_))));
}

#[test]
fn contraction_pass_selects_residues() {
    let h = higher_nakayama(2, &series(&[4, 3, 3, 3])).unwrap();
    let f = contraction_pass(&h.vertices, 1, 4);
    assert_eq!(f.labels(h.algebra.labels()), ["12", "13", "14", "23", "24", "25", "34", "35", "36"]);
    assert!(contraction_pass(&h.vertices, 1, 1).is_empty());
}

#[test]
fn relabel_removes_multiples() {
    assert_eq!(relabel_after_reduction(&[1, 2], 4), vec![0, 1]);
    assert_eq!(relabel_after_reduction(&[3, 6], 4), vec![2, 4]);
    assert_eq!(relabel_after_reduction(&[2, 5], 4), vec![1, 3]);
}

fn printed_pass_one() -> Presentation {
    let mut q = Quiver::new();
    for v in ["12", "13", "14", "23", "24", "25", "34", "35", "36"] {
        q.add_vertex(v).unwrap();
    }
    let arrows = [
        ("12", "13"), ("13", "14"), ("23", "24"), ("24", "25"), ("34", "35"), ("35", "36"),
        ("13", "23"), ("14", "24"), ("24", "34"), ("25", "35"), ("36", "12"),
    ];
    for (s, t) in arrows {
        q.connect(&format!("{s}_{t}"), s, t).unwrap();
    }
    let mut p = Presentation::new(crate::linalg::Field::Rational, q);
    for z in ["13_23*12_13", "24_34*23_24", "36_12*35_36", "24_25*14_24", "35_36*25_35", "12_13*36_12"] {
        p.relate_str(&[(1, z)]).unwrap();
    }
    p.relate_str(&[(1, "14_24*13_14"), (-1, "23_24*13_23")]).unwrap();
    p.relate_str(&[(1, "25_35*24_25"), (-1, "34_35*24_34")]).unwrap();
    p
}

#[test]
fn worked_example_pipeline() {
    let l = series(&[4, 3, 3, 3]);
    let h = higher_nakayama(2, &l).unwrap();
    let t = reduce_to_selfinjective(2, &l, default_cutoff(&h.algebra)).unwrap();
    assert_eq!(t.terminal, Terminal::SelfInjective);
    assert_eq!(t.rounds.len(), 1);
    let round = &t.rounds[0];
    assert_eq!(round.rotation, 0);
    assert_eq!(round.reduced, Some(series(&[2, 2, 2])));
    assert!(round.rebuilt);
    let pass1 = &round.stages[0];
    assert_eq!(round.stages[1].companion_labels, ["12", "13", "14", "23", "24", "34", "36"]);
    let p = printed_pass_one();
    let map = vertex_map_by_labels(&p, &pass1.corner).unwrap();
    assert!(find_isomorphism(&p, &pass1.corner, &map).unwrap().is_some());
    let last = t.last_corner().unwrap();
    assert_eq!(last.corner.labels(), ["12", "13", "23", "25", "35", "36"]);
    assert!(is_self_injective(&last.corner));
    let q = quiver_of(&last.corner).unwrap();
    assert_eq!(q.quiver.n_arrows(), 6);
    assert_eq!(last.corner.loewy_length(), 2);
}

#[test]
fn worked_example_gorenstein_dimension() {
    let h = higher_nakayama(2, &series(&[4, 3, 3, 3])).unwrap();
    assert_eq!(gorenstein_dimension(&h.algebra, 20, Execution::default()), HomDim::Finite(6));
}

#[test]
fn constant_series_is_terminal() {
    let l = series(&[3, 3]);
    let t = reduce_to_selfinjective(2, &l, 10).unwrap();
    assert!(t.rounds.is_empty());
    assert_eq!(t.terminal, Terminal::SelfInjective);
}

#[test]
fn leading_one_is_trivial() {
    let l = series(&[1, 2, 3]);
    let t = reduce_to_selfinjective(1, &l, 10).unwrap();
    assert_eq!(t.terminal, Terminal::TrivialSingularity);
    assert!(t.terminal_global_dimension.unwrap().is_finite());
}

#[test]
fn rotated_series_reduce() {
    let l = series(&[3, 3, 4]);
    let t = reduce_to_selfinjective(1, &l, 20).unwrap();
    assert_eq!(t.rounds[0].rotation, 2);
}

#[test]
fn worked_example_syzygies_of_injectives() {
    use crate::homology::syzygy_n;
    use crate::rep::{is_isomorphic, Representation};
    let h = higher_nakayama(2, &series(&[4, 3, 3, 3])).unwrap();
    let a = &h.algebra;
    let v = |s: &str| a.vertex_by_label(s).unwrap();
    for (inj, steps, proj) in [("03", 2, "14"), ("13", 6, "12"), ("23", 6, "13")] {
        let om = syzygy_n(&Representation::injective(a, v(inj)), steps);
        let p = Representation::projective(a, v(proj));
        assert!(is_isomorphic(&om, &p).unwrap().is_some(), "syzygy {steps} of I{inj}");
    }
}

#[test]
fn worked_example_generator_switching() {
    use crate::fabric::{check_fabric_definitional, verify_generator_switching, DEFAULT_BUDGET};
    let h = higher_nakayama(2, &series(&[4, 3, 3, 3])).unwrap();
    let a = &h.algebra;
    let f = contraction_pass(&h.vertices, 1, 4);
    let e = check_fabric_definitional(a, &f).unwrap().companion.unwrap();
    assert_eq!(e.labels(a.labels()), ["01", "02", "03", "04", "23", "24", "25", "34", "35", "36"]);
    let mut e14 = e.to_vec();
    e14.push(a.vertex_by_label("14").unwrap());
    let e14 = crate::algebra::IdempotentSet::new(e14);
    let r = verify_generator_switching(a, &f, &[(e.clone(), 1), (e14, 5)], DEFAULT_BUDGET, crate::rep::DEFAULT_SEED, 20)
        .unwrap();
    assert_eq!(r.gorenstein_dimension, 6);
    assert!(r.hypotheses.iter().all(|h| h.holds), "{:?}", r.hypotheses);
    assert!(r.passes(), "{:?}", r.violations);
}


#[test]
fn first_quotient_has_global_dimension_n_minus_one() {
    use crate::homology::global_dimension;
    let mut seen = 0;
    for k in 2..=4usize {
        for code in 0..3usize.pow(k as u32) {
            let l: Vec<usize> = (0..k).map(|i| 2 + code / 3usize.pow(i as u32) % 3).collect();
            let Ok(s) = KupischSeries::new(l.clone()) else { continue };
            if s.is_constant() || l[1] >= l[0] || l[k - 1] > l[0] {
                continue;
            }
            for n in 1..=3 {
                let h = higher_nakayama(n, &s).unwrap();
                let f = contraction_pass(&h.vertices, 1, k);
                let q = h.algebra.quotient(&f).unwrap();
                assert_eq!(global_dimension(&q, 20, Execution::Sequential), HomDim::Finite(n - 1), "n={n} l={s}");
                seen += 1;
            }
        }
    }
    assert!(seen >= 12);
}
