use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// Finite quiver with labelled vertices and named arrows.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new() -> Quiver {
        Quiver::default()
    }

    pub fn add_vertex(&mut self, label: impl Into<String>) -> Result<usize> {
        let label = label.into();
        if self.vertex_index(&label).is_some() {
            return Err(Error::InvalidPresentation(format!("duplicate vertex `{label}`")));
        }
        self.vertices.push(label);
        Ok(self.vertices.len() - 1)
    }

    pub fn add_arrow(&mut self, name: impl Into<String>, source: usize, target: usize) -> Result<usize> {
        let name = name.into();
        if self.arrow_index(&name).is_some() {
            return Err(Error::InvalidPresentation(format!("duplicate arrow `{name}`")));
        }
        if source >= self.vertices.len() || target >= self.vertices.len() {
            return Err(Error::UnknownVertex(format!("{source} or {target}")));
        }
        self.arrows.push(Arrow { name, source, target });
        Ok(self.arrows.len() - 1)
    }

    /// Adds an arrow between labelled vertices.
    pub fn connect(&mut self, name: &str, source: &str, target: &str) -> Result<usize> {
        let s = self.vertex_index(source).ok_or_else(|| Error::UnknownVertex(source.into()))?;
        let t = self.vertex_index(target).ok_or_else(|| Error::UnknownVertex(target.into()))?;
        self.add_arrow(name, s, t)
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, i: usize) -> &Arrow {
        &self.arrows[i]
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn n_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn arrows_from(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&i| self.arrows[i].source == v)
    }

    pub fn arrows_to(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&i| self.arrows[i].target == v)
    }

    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow { name: a.name.clone(), source: a.target, target: a.source })
                .collect(),
        }
    }

    /// All paths of length exactly `len` starting at `v`.
    pub fn paths_from(&self, v: usize, len: usize) -> Vec<PathWord> {
        let mut cur = vec![PathWord::trivial(v)];
        for _ in 0..len {
            let mut next = Vec::new();
            for p in &cur {
                for a in self.arrows_from(p.target) {
                    next.push(p.then_arrow(self, a));
                }
            }
            cur = next;
        }
        cur
    }

    /// All paths of length exactly `len` ending at `v`.
    pub fn paths_to(&self, v: usize, len: usize) -> Vec<PathWord> {
        let mut cur = vec![PathWord::trivial(v)];
        for _ in 0..len {
            let mut next = Vec::new();
            for p in &cur {
                for a in self.arrows_to(p.source) {
                    next.push(PathWord::arrow(self, a).then(p).unwrap());
                }
            }
            cur = next;
        }
        cur
    }
}

/// A path recorded as its arrows in traversal order (first arrow first).
/// It is displayed right to left, so `b*a` means `a` then `b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PathWord {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl PathWord {
    pub fn trivial(v: usize) -> PathWord {
        PathWord { source: v, target: v, arrows: Vec::new() }
    }

    pub fn arrow(q: &Quiver, a: usize) -> PathWord {
        let ar = q.arrow(a);
        PathWord { source: ar.source, target: ar.target, arrows: vec![a] }
    }

    pub fn from_arrows(q: &Quiver, arrows: &[usize]) -> Result<PathWord> {
        let Some(&first) = arrows.first() else {
            return Err(Error::InvalidPresentation("empty arrow sequence".into()));
        };
        let mut p = PathWord::arrow(q, first);
        for &a in &arrows[1..] {
            if q.arrow(a).source != p.target {
                return Err(Error::InvalidPresentation(format!(
                    "arrow `{}` does not start where the path ends",
                    q.arrow(a).name
                )));
            }
            p = p.then_arrow(q, a);
        }
        Ok(p)
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `self` followed by `after`.
    pub fn then(&self, after: &PathWord) -> Option<PathWord> {
        if self.target != after.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&after.arrows);
        Some(PathWord { source: self.source, target: after.target, arrows })
    }

    pub fn then_arrow(&self, q: &Quiver, a: usize) -> PathWord {
        debug_assert_eq!(q.arrow(a).source, self.target);
        let mut arrows = self.arrows.clone();
        arrows.push(a);
        PathWord { source: self.source, target: q.arrow(a).target, arrows }
    }

    pub fn reversed(&self) -> PathWord {
        PathWord {
            source: self.target,
            target: self.source,
            arrows: self.arrows.iter().rev().copied().collect(),
        }
    }

    pub fn display<'a>(&'a self, q: &'a Quiver) -> PathDisplay<'a> {
        PathDisplay { path: self, quiver: q }
    }
}

impl Ord for PathWord {
    fn cmp(&self, o: &PathWord) -> Ordering {
        self.arrows
            .len()
            .cmp(&o.arrows.len())
            .then_with(|| self.arrows.cmp(&o.arrows))
            .then_with(|| self.source.cmp(&o.source))
            .then_with(|| self.target.cmp(&o.target))
    }
}

impl PartialOrd for PathWord {
    fn partial_cmp(&self, o: &PathWord) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

pub struct PathDisplay<'a> {
    path: &'a PathWord,
    quiver: &'a Quiver,
}

impl fmt::Display for PathDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.path.is_trivial() {
            return write!(f, "e_{}", self.quiver.vertices()[self.path.source]);
        }
        let names: Vec<&str> =
            self.path.arrows.iter().rev().map(|&a| self.quiver.arrow(a).name.as_str()).collect();
        write!(f, "{}", names.join("*"))
    }
}

/// Linear combination of parallel paths.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation {
    pub terms: Vec<(Scalar, PathWord)>,
}

impl Relation {
    pub fn new(terms: Vec<(Scalar, PathWord)>) -> Relation {
        Relation { terms }
    }

    pub fn source(&self) -> usize {
        self.terms[0].1.source
    }

    pub fn target(&self) -> usize {
        self.terms[0].1.target
    }

    pub fn min_len(&self) -> usize {
        self.terms.iter().map(|t| t.1.len()).min().unwrap_or(0)
    }

    pub fn max_len(&self) -> usize {
        self.terms.iter().map(|t| t.1.len()).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.min_len() == self.max_len()
    }

    pub fn display<'a>(&'a self, q: &'a Quiver) -> RelationDisplay<'a> {
        RelationDisplay { rel: self, quiver: q }
    }
}

pub struct RelationDisplay<'a> {
    rel: &'a Relation,
    quiver: &'a Quiver,
}

impl fmt::Display for RelationDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (c, p)) in self.rel.terms.iter().enumerate() {
            let (neg, mag) = if c.is_negative() { (true, c.neg_ref()) } else { (false, c.clone()) };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "{}", p.display(self.quiver))?;
        }
        Ok(())
    }
}

/// Quiver with relations over a field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Presentation {
    pub field: Field,
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
    /// Paths of at least this length are declared zero.
    pub length_bound: Option<usize>,
}

impl Presentation {
    pub fn new(field: Field, quiver: Quiver) -> Presentation {
        Presentation { field, quiver, relations: Vec::new(), length_bound: None }
    }

    /// Adds a relation given as `(coefficient, arrow names in traversal order)`.
    pub fn relate(&mut self, terms: &[(i64, &[&str])]) -> Result<()> {
        let mut out = Vec::new();
        for (c, names) in terms {
            let ids = names
                .iter()
                .map(|n| self.quiver.arrow_index(n).ok_or_else(|| Error::UnknownArrow(n.to_string())))
                .collect::<Result<Vec<_>>>()?;
            out.push((self.field.from_i64(*c), PathWord::from_arrows(&self.quiver, &ids)?));
        }
        self.add_relation(Relation::new(out))
    }

    /// Adds a relation written with arrows separated by `*`, right to left.
    pub fn relate_str(&mut self, terms: &[(i64, &str)]) -> Result<()> {
        let owned: Vec<(i64, Vec<&str>)> = terms
            .iter()
            .map(|(c, w)| (*c, w.split('*').map(str::trim).rev().collect()))
            .collect();
        let borrowed: Vec<(i64, &[&str])> = owned.iter().map(|(c, v)| (*c, v.as_slice())).collect();
        self.relate(&borrowed)
    }

    pub fn add_relation(&mut self, r: Relation) -> Result<()> {
        self.check_relation(&r)?;
        self.relations.push(r);
        Ok(())
    }

    fn check_relation(&self, r: &Relation) -> Result<()> {
        let show = || r.display(&self.quiver).to_string();
        if r.terms.is_empty() {
            return Err(Error::InvalidPresentation("empty relation".into()));
        }
        let (s, t) = (r.source(), r.target());
        if r.terms.iter().any(|(_, p)| p.source != s || p.target != t) {
            return Err(Error::NonParallelRelation(show()));
        }
        if r.terms.iter().any(|(c, _)| !self.field.contains(c)) {
            return Err(Error::Linalg(crate::linalg::LinalgError::FieldMismatch));
        }
        if r.terms.iter().any(|(_, p)| p.len() < 2) {
            return Err(Error::NotAdmissible(format!("relation {} has a term of length < 2", show())));
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        for r in &self.relations {
            self.check_relation(r)?;
        }
        if self.length_bound == Some(0) || self.length_bound == Some(1) {
            return Err(Error::NotAdmissible("length bound below 2".into()));
        }
        Ok(())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.relations.iter().all(Relation::is_homogeneous)
    }

    pub fn max_relation_length(&self) -> usize {
        self.relations.iter().map(Relation::max_len).max().unwrap_or(0)
    }
}

/// Set of vertices, standing for the sum of the corresponding primitive idempotents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IdempotentSet(pub BTreeSet<usize>);

impl IdempotentSet {
    pub fn new(v: impl IntoIterator<Item = usize>) -> IdempotentSet {
        IdempotentSet(v.into_iter().collect())
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn complement(&self, n: usize) -> IdempotentSet {
        IdempotentSet((0..n).filter(|v| !self.0.contains(v)).collect())
    }

    pub fn union(&self, o: &IdempotentSet) -> IdempotentSet {
        IdempotentSet(self.0.union(&o.0).copied().collect())
    }

    pub fn is_subset(&self, o: &IdempotentSet) -> bool {
        self.0.is_subset(&o.0)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.0.iter().copied().collect()
    }

    /// Looks up vertices by label.
    pub fn from_labels<S: AsRef<str>>(labels: &[String], names: &[S]) -> Result<IdempotentSet> {
        let index: HashMap<&str, usize> =
            labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        names
            .iter()
            .map(|n| {
                index.get(n.as_ref()).copied().ok_or_else(|| Error::UnknownVertex(n.as_ref().to_string()))
            })
            .collect::<Result<BTreeSet<_>>>()
            .map(IdempotentSet)
    }

    pub fn labels(&self, labels: &[String]) -> Vec<String> {
        self.iter().map(|v| labels[v].clone()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> Presentation {
        let mut q = Quiver::new();
        for v in ["1", "2", "3", "4"] {
            q.add_vertex(v).unwrap();
        }
        q.connect("a", "1", "2").unwrap();
        q.connect("b", "2", "4").unwrap();
        q.connect("c", "1", "3").unwrap();
        q.connect("d", "3", "4").unwrap();
        Presentation::new(Field::Rational, q)
    }

    #[test]
    fn relation_display_right_to_left() {
        let mut p = square();
        p.relate_str(&[(1, "b*a"), (-1, "d*c")]).unwrap();
        assert_eq!(p.relations[0].display(&p.quiver).to_string(), "b*a - d*c");
        assert_eq!(p.relations[0].source(), 0);
        assert_eq!(p.relations[0].target(), 3);
    }

    #[test]
    fn non_parallel_rejected() {
        let mut p = square();
        assert!(matches!(p.relate_str(&[(1, "b*a"), (1, "c")]), Err(Error::NonParallelRelation(_))));
        assert!(matches!(p.relate_str(&[(1, "a*b")]), Err(Error::InvalidPresentation(_))));
    }

    #[test]
    fn path_order_is_length_then_lex() {
        let p = square();
        let q = &p.quiver;
        let ba = PathWord::from_arrows(q, &[0, 1]).unwrap();
        let dc = PathWord::from_arrows(q, &[2, 3]).unwrap();
        let a = PathWord::arrow(q, 0);
        assert!(a < ba && ba < dc);
        assert_eq!(q.paths_from(0, 2).len(), 2);
        assert_eq!(q.paths_to(3, 2).len(), 2);
    }
}
