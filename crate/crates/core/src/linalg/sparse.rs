use std::collections::HashMap;

use super::{Field, Scalar};

/// Sparse vector: strictly increasing indices, no stored zeros.
pub type SparseVec = Vec<(usize, Scalar)>;

/// `acc += c * v` for sparse vectors.
pub fn axpy(acc: &SparseVec, c: &Scalar, v: &SparseVec) -> SparseVec {
    if c.is_zero() {
        return acc.clone();
    }
    let mut out = Vec::with_capacity(acc.len() + v.len());
    let (mut i, mut j) = (0, 0);
    while i < acc.len() || j < v.len() {
        let take_a = j == v.len() || (i < acc.len() && acc[i].0 < v[j].0);
        let take_b = i == acc.len() || (j < v.len() && v[j].0 < acc[i].0);
        if take_a {
            out.push(acc[i].clone());
            i += 1;
        } else if take_b {
            out.push((v[j].0, c.mul_ref(&v[j].1)));
            j += 1;
        } else {
            let s = acc[i].1.add_ref(&c.mul_ref(&v[j].1));
            if !s.is_zero() {
                out.push((acc[i].0, s));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn scale(v: &SparseVec, c: &Scalar) -> SparseVec {
    if c.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(i, x)| (*i, x.mul_ref(c))).collect()
}

/// Builds a sparse vector from unsorted entries, summing duplicates.
pub fn collect(field: Field, entries: impl IntoIterator<Item = (usize, Scalar)>) -> SparseVec {
    let mut map: std::collections::BTreeMap<usize, Scalar> = std::collections::BTreeMap::new();
    for (i, x) in entries {
        let e = map.entry(i).or_insert_with(|| field.zero());
        *e = e.add_ref(&x);
    }
    map.into_iter().filter(|(_, x)| !x.is_zero()).collect()
}

pub fn to_dense(field: Field, v: &SparseVec, n: usize) -> Vec<Scalar> {
    let mut d = vec![field.zero(); n];
    for (i, x) in v {
        d[*i] = x.clone();
    }
    d
}

pub fn from_dense(v: &[Scalar]) -> SparseVec {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

pub fn get(v: &SparseVec, i: usize) -> Option<&Scalar> {
    v.binary_search_by_key(&i, |e| e.0).ok().map(|k| &v[k].1)
}

/// Incremental row echelon form for sparse rows.
#[derive(Clone, Debug)]
pub struct SparseEchelon {
    field: Field,
    ncols: usize,
    rows: Vec<SparseVec>,
    pivot_row: HashMap<usize, usize>,
}

impl SparseEchelon {
    pub fn new(field: Field, ncols: usize) -> SparseEchelon {
        SparseEchelon { field, ncols, rows: Vec::new(), pivot_row: HashMap::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Remainder of `v` after eliminating every pivot column.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        if self.rows.is_empty() || v.is_empty() {
            return v.clone();
        }
        let mut acc: Vec<Option<Scalar>> = vec![None; self.ncols];
        let mut lo = usize::MAX;
        for (i, x) in v {
            acc[*i] = Some(x.clone());
            lo = lo.min(*i);
        }
        for c in lo..self.ncols {
            let Some(x) = acc[c].take() else { continue };
            if x.is_zero() {
                continue;
            }
            match self.pivot_row.get(&c) {
                Some(&r) => {
                    for (j, y) in &self.rows[r] {
                        if *j == c {
                            continue;
                        }
                        let d = x.mul_ref(y);
                        acc[*j] = Some(match acc[*j].take() {
                            Some(z) => z.sub_ref(&d),
                            None => d.neg_ref(),
                        });
                    }
                }
                None => acc[c] = Some(x),
            }
        }
        acc.into_iter()
            .enumerate()
            .filter_map(|(i, x)| x.filter(|x| !x.is_zero()).map(|x| (i, x)))
            .collect()
    }

    /// Adds a row; returns its pivot column when it was independent.
    pub fn insert(&mut self, v: &SparseVec) -> Option<usize> {
        let r = self.reduce(v);
        let (p, lead) = r.first()?.clone();
        let inv = lead.inv().unwrap();
        let r = scale(&r, &inv);
        self.pivot_row.insert(p, self.rows.len());
        self.rows.push(r);
        Some(p)
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    pub fn pivots(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.pivot_row.keys().copied().collect();
        p.sort_unstable();
        p
    }

    /// Fully reduced rows sorted by pivot column.
    pub fn into_reduced(self) -> Vec<SparseVec> {
        let mut rows = self.rows;
        rows.sort_by_key(|r| r[0].0);
        for i in (0..rows.len()).rev() {
            let p = rows[i][0].0;
            for j in 0..i {
                if let Some(c) = get(&rows[j], p).cloned() {
                    let ri = rows[i].clone();
                    rows[j] = axpy(&rows[j], &c.neg_ref(), &ri);
                }
            }
        }
        rows
    }

    /// Canonical kernel basis of the system whose equations are the inserted rows.
    pub fn kernel(self) -> Vec<SparseVec> {
        let field = self.field;
        let ncols = self.ncols;
        let rows = self.into_reduced();
        let mut is_pivot = vec![false; ncols];
        for r in &rows {
            is_pivot[r[0].0] = true;
        }
        let mut ker: HashMap<usize, SparseVec> = HashMap::new();
        for f in (0..ncols).filter(|&c| !is_pivot[c]) {
            ker.insert(f, vec![(f, field.one())]);
        }
        for r in &rows {
            let p = r[0].0;
            for (f, x) in &r[1..] {
                ker.get_mut(f).unwrap().push((p, x.neg_ref()));
            }
        }
        let mut out: Vec<(usize, SparseVec)> = ker.into_iter().collect();
        out.sort_by_key(|e| e.0);
        out.into_iter()
            .map(|(_, mut v)| {
                v.sort_by_key(|e| e.0);
                v
            })
            .collect()
    }
}

pub fn sparse_rank(field: Field, ncols: usize, rows: &[SparseVec]) -> usize {
    let mut e = SparseEchelon::new(field, ncols);
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

pub fn sparse_kernel(field: Field, ncols: usize, rows: &[SparseVec]) -> Vec<SparseVec> {
    let mut e = SparseEchelon::new(field, ncols);
    for r in rows {
        e.insert(r);
    }
    e.kernel()
}

#[cfg(test)]
mod tests {
    use super::super::Matrix;
    use super::*;

    #[test]
    fn kernel_matches_dense() {
        let q = Field::Rational;
        let m = Matrix::from_i64(q, 3, 4, &[1, 2, 0, 1, 0, 0, 1, 1, 1, 2, 1, 2]);
        let rows: Vec<SparseVec> = (0..3).map(|i| from_dense(m.row(i))).collect();
        let sk = sparse_kernel(q, 4, &rows);
        let dk: Vec<SparseVec> = m.kernel_basis().iter().map(|v| from_dense(v)).collect();
        assert_eq!(sk, dk);
        assert_eq!(sparse_rank(q, 4, &rows), m.rank());
    }

    #[test]
    fn axpy_cancels() {
        let q = Field::Rational;
        let a = vec![(0, q.one()), (2, q.from_i64(3))];
        let b = vec![(2, q.one()), (5, q.one())];
        let c = axpy(&a, &q.from_i64(-3), &b);
        assert_eq!(c, vec![(0, q.one()), (5, q.from_i64(-3))]);
    }
}
