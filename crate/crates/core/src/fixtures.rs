//! Named example algebras.

use crate::algebra::{IdempotentSet, Presentation, Quiver};
use crate::error::{Error, Result};
use crate::linalg::Field;
use crate::nakayama::{higher_nakayama_in, KupischSeries};

/// An example presentation with its distinguished idempotents, if any.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub presentation: Presentation,
    /// Labels of the fabric idempotent `f`.
    pub f: Option<Vec<String>>,
    /// Labels of the companion idempotent as stated with the example.
    pub e: Option<Vec<String>>,
}

impl Fixture {
    fn new(name: &str, presentation: Presentation) -> Fixture {
        Fixture { name: name.into(), presentation, f: None, e: None }
    }

    fn with(mut self, f: &[&str], e: Option<&[&str]>) -> Fixture {
        self.f = Some(f.iter().map(|s| s.to_string()).collect());
        self.e = e.map(|e| e.iter().map(|s| s.to_string()).collect());
        self
    }

    pub fn f_set(&self) -> Result<Option<IdempotentSet>> {
        self.f.as_ref().map(|f| IdempotentSet::from_labels(self.presentation.quiver.vertices(), f)).transpose()
    }

    pub fn e_set(&self) -> Result<Option<IdempotentSet>> {
        self.e.as_ref().map(|e| IdempotentSet::from_labels(self.presentation.quiver.vertices(), e)).transpose()
    }
}

/// Names accepted by [`fixture`]; parameters go in parentheses.
pub const FIXTURE_NAMES: &[&str] = &[
    "apt-example",
    "two-ag-square",
    "canonical-2-221",
    "canonical-2-211",
    "beilinson-2",
    "preprojective-A(n)",
    "higher-nakayama(n;l0,l1,...)",
];

fn quiver(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Result<Quiver> {
    let mut q = Quiver::new();
    for v in vertices {
        q.add_vertex(*v)?;
    }
    for (name, s, t) in arrows {
        q.connect(name, s, t)?;
    }
    Ok(q)
}

/// Five vertices on two 3-cycles through vertex 3; `f = {2,3,5}`, `e = {1,3,4}`.
pub fn apt_example() -> Result<Fixture> {
    let q = quiver(
        &["1", "2", "3", "4", "5"],
        &[
            ("alpha", "1", "2"),
            ("beta", "2", "3"),
            ("gamma", "3", "1"),
            ("delta", "3", "4"),
            ("epsilon", "4", "5"),
            ("zeta", "5", "3"),
        ],
    )?;
    let mut p = Presentation::new(Field::Rational, q);
    p.relate_str(&[(1, "zeta*epsilon*delta"), (-1, "beta*alpha*gamma")])?;
    p.relate_str(&[(1, "alpha*gamma*beta")])?;
    p.relate_str(&[(1, "epsilon*delta*zeta")])?;
    Ok(Fixture::new("apt-example", p).with(&["2", "3", "5"], Some(&["1", "3", "4"])))
}

/// Four vertices, a commutative square `4 -> 2,3 -> 1` closed by `1 -> 4`; `f = {2,3,4}`.
pub fn two_ag_square() -> Result<Fixture> {
    let q = quiver(
        &["1", "2", "3", "4"],
        &[
            ("alpha", "4", "2"),
            ("beta", "4", "3"),
            ("gamma", "2", "1"),
            ("delta", "3", "1"),
            ("epsilon", "1", "4"),
        ],
    )?;
    let mut p = Presentation::new(Field::Rational, q);
    p.relate_str(&[(1, "gamma*alpha"), (-1, "delta*beta")])?;
    p.relate_str(&[(1, "epsilon*gamma*alpha")])?;
    p.relate_str(&[(1, "alpha*epsilon*gamma")])?;
    p.relate_str(&[(1, "beta*epsilon*delta")])?;
    Ok(Fixture::new("two-ag-square", p).with(&["2", "3", "4"], Some(&["1", "2", "3"])))
}

/// Vertices with arrows `x_g: s -> t`, and `x_g x_h = x_h x_g` wherever both
/// composites exist.
fn lattice(name: &str, vertices: &[&str], arrows: &[(usize, &str, &str)]) -> Result<Presentation> {
    let named: Vec<(String, &str, &str)> =
        arrows.iter().map(|(g, s, t)| (format!("x{g}_{s}{t}"), *s, *t)).collect();
    let refs: Vec<(&str, &str, &str)> = named.iter().map(|(n, s, t)| (n.as_str(), *s, *t)).collect();
    let q = quiver(vertices, &refs)?;
    let mut p = Presentation::new(Field::Rational, q);
    let step = |g: usize, s: &str| arrows.iter().position(|(h, a, _)| *h == g && *a == s);
    let gens: Vec<usize> = {
        let mut g: Vec<usize> = arrows.iter().map(|a| a.0).collect();
        g.sort_unstable();
        g.dedup();
        g
    };
    for v in vertices {
        for (i, &g) in gens.iter().enumerate() {
            for &h in &gens[i + 1..] {
                let gh = step(g, v).and_then(|a| step(h, arrows[a].2).map(|b| (a, b)));
                let hg = step(h, v).and_then(|a| step(g, arrows[a].2).map(|b| (a, b)));
                if let (Some((a1, b1)), Some((a2, b2))) = (gh, hg) {
                    if arrows[b1].2 != arrows[b2].2 {
                        return Err(Error::InvalidPresentation(format!("{name}: squares do not close at {v}")));
                    }
                    let p1 = [named[a1].0.as_str(), named[b1].0.as_str()];
                    let p2 = [named[a2].0.as_str(), named[b2].0.as_str()];
                    p.relate(&[(1, &p1), (-1, &p2)])?;
                }
            }
        }
    }
    Ok(p)
}

/// The 2-canonical algebra of type (2,2,1) on eight vertices.
pub fn canonical_2_221() -> Result<Fixture> {
    let p = lattice(
        "canonical-2-221",
        &["1", "2", "3", "4", "5", "6", "7", "8"],
        &[
            (1, "1", "2"),
            (1, "2", "4"),
            (1, "3", "5"),
            (1, "5", "7"),
            (1, "4", "6"),
            (1, "6", "8"),
            (2, "1", "3"),
            (2, "2", "5"),
            (2, "3", "4"),
            (2, "4", "7"),
            (2, "5", "6"),
            (2, "7", "8"),
            (3, "1", "4"),
            (3, "2", "6"),
            (3, "3", "7"),
            (3, "4", "8"),
        ],
    )?;
    Ok(Fixture::new("canonical-2-221", p).with(&["1", "2", "4", "6", "8"], Some(&["3", "5", "6", "7", "8"])))
}

/// The 2-canonical algebra of type (2,1,1) on vertices 1, 2, 4, 6, 8.
pub fn canonical_2_211() -> Result<Fixture> {
    let p = lattice(
        "canonical-2-211",
        &["1", "2", "4", "6", "8"],
        &[
            (1, "1", "2"),
            (1, "2", "4"),
            (1, "4", "6"),
            (1, "6", "8"),
            (2, "1", "4"),
            (2, "2", "6"),
            (2, "4", "8"),
            (3, "1", "4"),
            (3, "2", "6"),
            (3, "4", "8"),
        ],
    )?;
    Ok(Fixture::new("canonical-2-211", p).with(&["1", "4", "8"], None))
}

/// The 2-Beilinson algebra: three arrows `1 -> 4` and three `4 -> 8`, commuting.
pub fn beilinson_2() -> Result<Fixture> {
    let p = lattice(
        "beilinson-2",
        &["1", "4", "8"],
        &[(1, "1", "4"), (1, "4", "8"), (2, "1", "4"), (2, "4", "8"), (3, "1", "4"), (3, "4", "8")],
    )?;
    Ok(Fixture::new("beilinson-2", p))
}

/// Preprojective algebra of the linearly oriented `A_n`, `1 <= n <= 6`:
/// arrows `a_i: i -> i+1`, `b_i: i+1 -> i` and at each vertex the sum of the
/// two-cycles through it, with alternating signs.
pub fn preprojective_a(n: usize) -> Result<Fixture> {
    if !(1..=6).contains(&n) {
        return Err(Error::ParameterOutOfRange(format!("preprojective-A({n}) needs 1 <= n <= 6")));
    }
    let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let mut q = Quiver::new();
    for l in &labels {
        q.add_vertex(l.clone())?;
    }
    for i in 1..n {
        q.connect(&format!("a{i}"), &labels[i - 1], &labels[i])?;
        q.connect(&format!("b{i}"), &labels[i], &labels[i - 1])?;
    }
    let mut p = Presentation::new(Field::Rational, q);
    for v in 1..=n {
        let out = (v < n).then(|| [format!("a{v}"), format!("b{v}")]);
        let inn = (v > 1).then(|| [format!("b{}", v - 1), format!("a{}", v - 1)]);
        let mut terms: Vec<(i64, Vec<&str>)> = Vec::new();
        if let Some(w) = &out {
            terms.push((1, w.iter().map(String::as_str).collect()));
        }
        if let Some(w) = &inn {
            terms.push((-1, w.iter().map(String::as_str).collect()));
        }
        if terms.is_empty() {
            continue;
        }
        let borrowed: Vec<(i64, &[&str])> = terms.iter().map(|(c, w)| (*c, w.as_slice())).collect();
        p.relate(&borrowed)?;
    }
    Ok(Fixture::new(&format!("preprojective-A({n})"), p))
}

/// `A^(n)_l` as a fixture.
pub fn higher_nakayama_fixture(n: usize, l: &[usize]) -> Result<Fixture> {
    if !(1..=4).contains(&n) {
        return Err(Error::ParameterOutOfRange(format!("higher-nakayama needs 1 <= n <= 4, got {n}")));
    }
    let series = KupischSeries::new(l.to_vec())?;
    let h = higher_nakayama_in(Field::Rational, n, &series)?;
    let s: Vec<String> = l.iter().map(usize::to_string).collect();
    Ok(Fixture::new(&format!("higher-nakayama({n};{})", s.join(",")), h.presentation))
}

fn parse_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|x| x.trim().parse().map_err(|_| Error::ParameterOutOfRange(format!("not a number: {x}"))))
        .collect()
}

/// Looks a fixture up by name, e.g. `apt-example`, `preprojective-A(3)`,
/// `higher-nakayama(2;4,3,3,3)`.
pub fn fixture(name: &str) -> Result<Fixture> {
    let name = name.trim();
    let (base, args) = match name.find('(') {
        Some(i) if name.ends_with(')') => (&name[..i], Some(&name[i + 1..name.len() - 1])),
        _ => (name, None),
    };
    match (base, args) {
        ("apt-example", None) => apt_example(),
        ("two-ag-square", None) => two_ag_square(),
        ("canonical-2-221", None) => canonical_2_221(),
        ("canonical-2-211", None) => canonical_2_211(),
        ("beilinson-2", None) => beilinson_2(),
        ("preprojective-A", Some(a)) => {
            let n = parse_list(a)?;
            match n.as_slice() {
                [n] => preprojective_a(*n),
                _ => Err(Error::ParameterOutOfRange(format!("preprojective-A takes one parameter, got {a}"))),
            }
        }
        ("higher-nakayama", Some(a)) => {
            let (n, l) = a
                .split_once(';')
                .ok_or_else(|| Error::ParameterOutOfRange("expected higher-nakayama(n;l0,l1,...)".into()))?;
            let n = parse_list(n)?;
            match n.as_slice() {
                [n] => higher_nakayama_fixture(*n, &parse_list(l)?),
                _ => Err(Error::ParameterOutOfRange(format!("bad n: {a}"))),
            }
        }
        _ => Err(Error::UnknownFixture(name.into())),
    }
}

/// Every parameter-free fixture together with small parametrised ones.
pub fn all_small() -> Result<Vec<Fixture>> {
    Ok(vec![
        apt_example()?,
        two_ag_square()?,
        canonical_2_221()?,
        canonical_2_211()?,
        beilinson_2()?,
        preprojective_a(2)?,
        preprojective_a(3)?,
        higher_nakayama_fixture(1, &[3, 2, 2])?,
        higher_nakayama_fixture(2, &[2, 2, 2])?,
    ])
}
