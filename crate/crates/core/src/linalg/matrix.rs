use std::fmt;

use super::{Field, LinalgError, Scalar};

/// Dense row-major matrix over an exact field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: Field,
    data: Vec<Scalar>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, field, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Matrix, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(LinalgError::DimensionMismatch { expected: c, found: row.len() });
            }
            for x in row {
                if !field.contains(&x) {
                    return Err(LinalgError::FieldMismatch);
                }
                data.push(x);
            }
        }
        Ok(Matrix { rows: r, cols: c, field, data })
    }

    pub fn from_i64(field: Field, rows: usize, cols: usize, entries: &[i64]) -> Matrix {
        assert_eq!(entries.len(), rows * cols);
        Matrix { rows, cols, field, data: entries.iter().map(|&x| field.from_i64(x)).collect() }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: Field, rows: usize, columns: &[Vec<Scalar>]) -> Matrix {
        let mut m = Matrix::zeros(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, x) in col.iter().enumerate() {
                m.data[i * m.cols + j] = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn add_at(&mut self, r: usize, c: usize, v: &Scalar) {
        let i = r * self.cols + c;
        self.data[i] = self.data[i].add_ref(v);
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn try_mul(&self, o: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != o.rows {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, found: o.rows });
        }
        if self.field != o.field {
            return Err(LinalgError::FieldMismatch);
        }
        let mut out = Matrix::zeros(self.field, self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        let idx = i * o.cols + j;
                        out.data[idx] = out.data[idx].add_ref(&a.mul_ref(b));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Product; panics on a shape mismatch.
    pub fn mul(&self, o: &Matrix) -> Matrix {
        self.try_mul(o).expect("matrix product shape mismatch")
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.add_ref(&a.mul_ref(b));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, o: &Matrix) -> Matrix {
        assert!(self.rows == o.rows && self.cols == o.cols);
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.add_ref(b)).collect(),
        }
    }

    pub fn sub(&self, o: &Matrix) -> Matrix {
        assert!(self.rows == o.rows && self.cols == o.cols);
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.sub_ref(b)).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            data: self.data.iter().map(|a| a.mul_ref(s)).collect(),
        }
    }

    /// Block diagonal sum.
    pub fn direct_sum(&self, o: &Matrix) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.rows + o.rows, self.cols + o.cols);
        m.set_block(0, 0, self);
        m.set_block(self.rows, self.cols, o);
        m
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Matrix) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self.set(r0 + i, c0 + j, b.get(i, j).clone());
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        let mut m = Matrix::zeros(self.field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, self.get(r0 + i, c0 + j).clone());
            }
        }
        m
    }

    pub fn hstack(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.rows, o.rows);
        let mut m = Matrix::zeros(self.field, self.rows, self.cols + o.cols);
        m.set_block(0, 0, self);
        m.set_block(0, self.cols, o);
        m
    }

    pub fn vstack(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.cols);
        let mut m = Matrix::zeros(self.field, self.rows + o.rows, self.cols);
        m.set_block(0, 0, self);
        m.set_block(self.rows, 0, o);
        m
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(self.field, idx.len(), self.cols);
        for (i, &r) in idx.iter().enumerate() {
            for j in 0..self.cols {
                m.set(i, j, self.get(r, j).clone());
            }
        }
        m
    }

    pub fn select_columns(&self, idx: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.rows, idx.len());
        for i in 0..self.rows {
            for (j, &c) in idx.iter().enumerate() {
                m.set(i, j, self.get(i, c).clone());
            }
        }
        m
    }

    pub fn rref(&self) -> Echelon {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m.get(r, c).inv().unwrap();
            for j in c..m.cols {
                let idx = r * m.cols + j;
                m.data[idx] = m.data[idx].mul_ref(&inv);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let pv = m.data[r * m.cols + j].clone();
                    if !pv.is_zero() {
                        let idx = i * m.cols + j;
                        m.data[idx] = m.data[idx].sub_ref(&f.mul_ref(&pv));
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon { reduced: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Canonical kernel basis: one vector per free column, in increasing order,
    /// with a 1 in that column and zeros in the other free columns.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let e = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &e.pivots {
            is_pivot[p] = true;
        }
        let mut out = Vec::new();
        for f in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![self.field.zero(); self.cols];
            v[f] = self.field.one();
            for (i, &p) in e.pivots.iter().enumerate() {
                v[p] = e.reduced.get(i, f).neg_ref();
            }
            out.push(v);
        }
        out
    }

    /// Some solution of `self * x = b` with free variables set to zero, or `None`.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>, LinalgError> {
        if b.len() != self.rows {
            return Err(LinalgError::DimensionMismatch { expected: self.rows, found: b.len() });
        }
        let aug = self.hstack(&Matrix::from_columns(self.field, self.rows, &[b.to_vec()]));
        let e = aug.rref();
        if e.pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (i, &p) in e.pivots.iter().enumerate() {
            x[p] = e.reduced.get(i, self.cols).clone();
        }
        Ok(Some(x))
    }

    /// Solves `self * X = B` column by column.
    pub fn solve_matrix(&self, b: &Matrix) -> Result<Option<Matrix>, LinalgError> {
        if b.rows != self.rows {
            return Err(LinalgError::DimensionMismatch { expected: self.rows, found: b.rows });
        }
        let aug = self.hstack(b);
        let e = aug.rref();
        if e.pivots.iter().any(|&p| p >= self.cols) {
            return Ok(None);
        }
        let mut x = Matrix::zeros(self.field, self.cols, b.cols);
        for (i, &p) in e.pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(p, j, e.reduced.get(i, self.cols + j).clone());
            }
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let x = self.solve_matrix(&Matrix::identity(self.field, self.rows)).ok()??;
        (self.rank() == self.rows).then_some(x)
    }

    /// Basis of the column space given by the pivot columns.
    pub fn column_space_basis(&self) -> Vec<usize> {
        self.rref().pivots
    }

    /// Reduction of every entry modulo `p`; `None` when a denominator vanishes.
    pub fn to_mod_p(&self, p: u64) -> Option<Matrix> {
        let data = self.data.iter().map(|x| x.to_mod_p(p)).collect::<Option<Vec<_>>>()?;
        Some(Matrix { rows: self.rows, cols: self.cols, field: Field::Prime(p), data })
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn rref_of_rank_two() {
        let m = Matrix::from_i64(q(), 3, 3, &[1, 2, 3, 4, 5, 6, 7, 8, 9]);
        let e = m.rref();
        assert_eq!(e.pivots, vec![0, 1]);
        assert_eq!(m.rank(), 2);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], vec![q().from_i64(1), q().from_i64(-2), q().from_i64(1)]);
        assert!(m.mul_vec(&k[0]).iter().all(Scalar::is_zero));
    }

    #[test]
    fn solve_consistent_and_not() {
        let m = Matrix::from_i64(q(), 2, 2, &[1, 1, 2, 2]);
        let s = m.solve(&[q().from_i64(3), q().from_i64(6)]).unwrap().unwrap();
        assert_eq!(s, vec![q().from_i64(3), q().zero()]);
        assert!(m.solve(&[q().from_i64(1), q().from_i64(1)]).unwrap().is_none());
        assert!(m.solve(&[q().zero()]).is_err());
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Matrix::from_i64(q(), 2, 2, &[2, 1, 1, 1]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(Matrix::from_i64(q(), 2, 2, &[1, 1, 1, 1]).inverse().is_none());
    }

    #[test]
    fn prime_field_rank_drops() {
        let m = Matrix::from_i64(q(), 2, 2, &[1, 1, 1, 3]);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.to_mod_p(2).unwrap().rank(), 1);
    }
}
