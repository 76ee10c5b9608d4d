use super::*;
use crate::error::Error;
use crate::fixtures;

#[test]
fn single_vertex() {
    let p = parse_presentation("field Q\nvertex 1\n").unwrap();
    assert_eq!(p.quiver.n_vertices(), 1);
    assert_eq!(p.quiver.n_arrows(), 0);
    let a = crate::algebra::build_algebra(&p).unwrap();
    assert_eq!(a.dim(), 1);
}

#[test]
fn comments_and_default_field() {
    let p = parse_presentation("# nothing\nvertex x   # one\n\nvertex y\narrow a: x -> y\n").unwrap();
    assert_eq!(p.field, crate::linalg::Field::Rational);
    assert_eq!(p.quiver.arrow(0).source, 0);
}

#[test]
fn fixtures_round_trip() {
    for fx in fixtures::all_small().unwrap() {
        let text = print_presentation(&fx.presentation);
        let back = parse_presentation(&text).unwrap();
        assert_eq!(back, fx.presentation, "{}", fx.name);
        assert_eq!(print_presentation(&back), text);
    }
}

#[test]
fn coefficients_and_prime_field() {
    let text = "field F 5\nvertex 1\nvertex 2\nvertex 3\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 1 -> 3\narrow d: 3 -> 3\nrelation 3*d*c - 2*d*b*a\n";
    let p = parse_presentation(text).unwrap();
    assert_eq!(p.relations[0].terms.len(), 2);
    assert_eq!(p.relations[0].terms[1].0.to_string(), "3");
    assert_eq!(parse_presentation(&print_presentation(&p)).unwrap(), p);
    let q = parse_presentation("vertex 1\narrow a: 1 -> 1\nrelation 1/2*a*a + a*a*a\n").unwrap();
    assert_eq!(q.relations[0].terms[0].0.to_string(), "1/2");
}

#[test]
fn composition_is_right_to_left() {
    let p = parse_presentation("vertex 1\nvertex 2\nvertex 3\narrow a: 1 -> 2\narrow b: 2 -> 3\nrelation b*a\n").unwrap();
    let path = &p.relations[0].terms[0].1;
    assert_eq!((path.source, path.target), (0, 2));
    assert!(matches!(
        parse_presentation("vertex 1\nvertex 2\nvertex 3\narrow a: 1 -> 2\narrow b: 2 -> 3\nrelation a*b\n"),
        Err(Error::Syntax { line: 6, col: 10, .. })
    ));
}

#[test]
fn error_positions() {
    let base = "vertex 1\nvertex 2\narrow a: 1 -> 2\narrow b: 2 -> 1\n";
    let err = |extra: &str| parse_presentation(&format!("{base}{extra}")).unwrap_err();
    assert_eq!(err("relation b a\n"), Error::Syntax { line: 5, col: 12, msg: "arrows must be joined by `*`".into() });
    assert!(matches!(err("relation 2b*a\n"), Error::Syntax { line: 5, col: 11, .. }));
    assert!(matches!(err("relation b*a +\n"), Error::Syntax { line: 5, col: 15, .. }));
    assert!(matches!(err("  relation b*a ?\n"), Error::Syntax { line: 5, col: 16, .. }));
    assert!(matches!(err("wibble\n"), Error::Syntax { line: 5, col: 1, .. }));
    assert!(matches!(err("field Q\n"), Error::Syntax { line: 5, .. }));
    assert_eq!(err("relation c*a\n"), Error::UnknownArrow("c".into()));
    assert_eq!(err("arrow c: 1 -> 9\n"), Error::UnknownVertex("9".into()));
    assert!(matches!(err("relation 0*b*a\n"), Error::Syntax { col: 10, .. }));
}

#[test]
fn non_parallel_relation() {
    let text = "vertex 1\nvertex 2\nvertex 3\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 2 -> 1\nrelation b*a + c*a\n";
    assert!(matches!(parse_presentation(text), Err(Error::NonParallelRelation(_))));
}

#[test]
fn dot_single_node() {
    let p = parse_presentation("vertex 1\n").unwrap();
    assert_eq!(presentation_to_dot(&p), "digraph quiver {\n  \"1\";\n}\n");
}

#[test]
fn dot_higher_nakayama() {
    let fx = fixtures::fixture("higher-nakayama(2;4,3,3,3)").unwrap();
    let dot = presentation_to_dot(&fx.presentation);
    let nodes = dot.lines().filter(|l| l.ends_with("\";") && !l.contains("->")).count();
    let solid = dot.lines().filter(|l| l.contains("[label=")).count();
    assert_eq!(nodes, 13);
    assert_eq!(solid, 18);
    assert!(dot.contains("\"01\" -> \"02\" [label="));
    assert!(dot.contains("\"36\" -> \"02\" [label="));
}

#[test]
fn dot_resolution() {
    use crate::homology::{minimal_resolution, Direction};
    use crate::rep::Representation;
    let a = crate::test_algebras::linear(2, crate::linalg::Field::Rational);
    let p = Representation::projective(&a, 0);
    let r = minimal_resolution(&p, Direction::Projective, 3);
    assert!(resolution_to_dot(&r, &a).contains("t0 [label="));
    let z = Representation::zero(&a);
    let r = minimal_resolution(&z, Direction::Projective, 3);
    assert_eq!(resolution_to_dot(&r, &a), "digraph resolution {\n}\n");
}

#[test]
fn report_round_trip() {
    let mut r = Report::new();
    r.push("command", "fabric").push("seed", 7).push_list("e", ["1", "3", "4"]);
    let text = r.to_string();
    assert_eq!(text, "command = fabric\nseed = 7\ne = 1,3,4\n");
    assert_eq!(Report::parse(&text).unwrap(), r);
    assert_eq!(r.get("e"), Some("1,3,4"));
}
