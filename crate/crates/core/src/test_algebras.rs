use std::sync::Arc;

use crate::algebra::{build_algebra, FDAlgebra, Presentation, Quiver};
use crate::linalg::Field;

pub fn linear(n: usize, field: Field) -> Arc<FDAlgebra> {
    let mut q = Quiver::new();
    for i in 1..=n {
        q.add_vertex(i.to_string()).unwrap();
    }
    for i in 1..n {
        q.connect(&format!("a{i}"), &i.to_string(), &(i + 1).to_string()).unwrap();
    }
    build_algebra(&Presentation::new(field, q)).unwrap()
}

pub fn a3() -> Arc<FDAlgebra> {
    linear(3, Field::Rational)
}

/// Cyclic quiver with `n` vertices, paths of length `l` set to zero.
pub fn cyclic(n: usize, l: usize, field: Field) -> Arc<FDAlgebra> {
    let mut q = Quiver::new();
    for i in 0..n {
        q.add_vertex(i.to_string()).unwrap();
    }
    for i in 0..n {
        q.add_arrow(format!("a{i}"), i, (i + 1) % n).unwrap();
    }
    let mut p = Presentation::new(field, q);
    for i in 0..n {
        let names: Vec<String> = (0..l).map(|k| format!("a{}", (i + k) % n)).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        p.relate(&[(1, &refs)]).unwrap();
    }
    build_algebra(&p).unwrap()
}

pub fn kronecker(field: Field) -> Arc<FDAlgebra> {
    let mut q = Quiver::new();
    q.add_vertex("1").unwrap();
    q.add_vertex("2").unwrap();
    q.connect("x", "1", "2").unwrap();
    q.connect("y", "1", "2").unwrap();
    build_algebra(&Presentation::new(field, q)).unwrap()
}
