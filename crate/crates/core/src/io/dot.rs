use std::fmt::Write as _;

use crate::algebra::{FDAlgebra, Presentation};
use crate::homology::{Direction, Resolution};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Quiver as a DOT digraph. Arrows are solid; each relation is drawn as a
/// dotted edge from its source to its target.
pub fn presentation_to_dot(p: &Presentation) -> String {
    let q = &p.quiver;
    let mut s = String::from("digraph quiver {\n");
    for v in q.vertices() {
        let _ = writeln!(s, "  {};", quote(v));
    }
    for a in q.arrows() {
        let _ = writeln!(
            s,
            "  {} -> {} [label={}];",
            quote(&q.vertices()[a.source]),
            quote(&q.vertices()[a.target]),
            quote(&a.name)
        );
    }
    for r in &p.relations {
        let _ = writeln!(
            s,
            "  {} -> {} [style=dotted, arrowhead=none, tooltip={}];",
            quote(&q.vertices()[r.source()]),
            quote(&q.vertices()[r.target()]),
            quote(&r.display(q).to_string())
        );
    }
    s.push_str("}\n");
    s
}

/// Resolution as a chain of nodes, one per term, labelled by its summands.
pub fn resolution_to_dot(res: &Resolution, a: &FDAlgebra) -> String {
    let (letter, name) = match res.direction {
        Direction::Projective => ("P", "resolution"),
        Direction::Injective => ("I", "coresolution"),
    };
    let mut s = format!("digraph {name} {{\n");
    if res.terms.is_empty() {
        s.push_str("}\n");
        return s;
    }
    s.push_str("  rankdir=RL;\n");
    for (i, t) in res.terms.iter().enumerate() {
        let summands: Vec<String> = t.copies.iter().map(|&v| format!("{letter}{}", a.label(v))).collect();
        let label = if summands.is_empty() { "0".to_string() } else { summands.join(" + ") };
        let _ = writeln!(s, "  t{i} [label={}];", quote(&format!("{i}: {label}")));
    }
    for i in 1..res.terms.len() {
        let (from, to) = match res.direction {
            Direction::Projective => (i, i - 1),
            Direction::Injective => (i - 1, i),
        };
        let _ = writeln!(s, "  t{from} -> t{to};");
    }
    s.push_str("}\n");
    s
}
