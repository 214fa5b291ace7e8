use std::fmt;

use super::field::Field;
use super::scalar::Scalar;
use super::LinalgError;

/// Dense row-major matrix over an exact field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Result of Gauss-Jordan elimination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl Matrix {
    /// Builds a matrix, mapping every entry into `field`.
    pub fn new(
        field: Field,
        rows: usize,
        cols: usize,
        data: Vec<Scalar>,
    ) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        let data = data
            .iter()
            .map(|x| field.embed(x))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Matrix { field, rows, cols, data })
    }

    /// Entries must already be canonical for `field`.
    pub(crate) fn from_canonical(field: Field, rows: usize, cols: usize, data: Vec<Scalar>) -> Self {
        debug_assert_eq!(data.len(), rows * cols);
        Matrix { field, rows, cols, data }
    }

    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![Scalar::ZERO; rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = Scalar::ONE;
        }
        m
    }

    pub fn from_ints(field: Field, rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.iter().map(|&x| field.from_int(x)));
        }
        Matrix { field, rows: r, cols: c, data }
    }

    /// Rows given as vectors of scalars; `cols` is needed for the empty case.
    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Self, LinalgError> {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            if row.len() != cols {
                return Err(LinalgError::Shape(format!("row of length {} in {cols} columns", row.len())));
            }
            data.extend(row);
        }
        Matrix::new(field, r, cols, data)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Scalar) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix { field: self.field, rows: self.cols, cols: self.rows, data }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let f = self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * other.cols + j;
                    out.data[idx] = f.add(&out.data[idx], &f.mul(a, b));
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in sum");
        let f = self.field;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.add(a, b)).collect();
        Matrix { field: f, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.add(&other.scale(&self.field.from_int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let f = self.field;
        let data = self.data.iter().map(|a| f.mul(a, c)).collect();
        Matrix { field: f, rows: self.rows, cols: self.cols, data }
    }

    /// `v * self` for a row vector `v`.
    pub fn left_apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.rows);
        let f = self.field;
        let mut out = vec![Scalar::ZERO; self.cols];
        for (i, a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                let b = self.get(i, j);
                if !b.is_zero() {
                    *o = f.add(o, &f.mul(a, b));
                }
            }
        }
        out
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "column mismatch in vstack");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { field: self.field, rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "row mismatch in hstack");
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            data.extend(self.row(i).iter().cloned());
            data.extend(other.row(i).iter().cloned());
        }
        Matrix { field: self.field, rows: self.rows, cols, data }
    }

    pub fn block_diag(field: Field, blocks: &[Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set(r0 + i, c0 + j, b.get(i, j).clone());
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend(self.row(i).iter().cloned());
        }
        Matrix { field: self.field, rows: idx.len(), cols: self.cols, data }
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(idx.len() * self.rows);
        for i in 0..self.rows {
            for &j in idx {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix { field: self.field, rows: self.rows, cols: idx.len(), data }
    }

    /// Gauss-Jordan elimination with the first nonzero entry of each
    /// column as pivot.
    pub fn rref(&self) -> Rref {
        let f = self.field;
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
            let inv = f.inv(m.get(r, c)).expect("nonzero pivot");
            for j in c..m.cols {
                let idx = r * m.cols + j;
                m.data[idx] = f.mul(&m.data[idx], &inv);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let b = m.data[r * m.cols + j].clone();
                    let idx = i * m.cols + j;
                    m.data[idx] = f.sub_mul(&m.data[idx], &factor, &b);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { reduced: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank()
    }

    /// Basis of the right kernel `{v : A v^T = 0}`, one vector per row.
    pub fn nullspace_basis(&self) -> Matrix {
        let Rref { reduced, pivots } = self.rref();
        let f = self.field;
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix::zeros(f, free.len(), self.cols);
        for (k, &fc) in free.iter().enumerate() {
            out.set(k, fc, Scalar::ONE);
            for (r, &pc) in pivots.iter().enumerate() {
                let v = reduced.get(r, fc);
                if !v.is_zero() {
                    out.set(k, pc, f.neg(v));
                }
            }
        }
        out
    }

    /// Basis of `{x : x A = 0}`, one vector per row.
    pub fn left_kernel(&self) -> Matrix {
        self.transpose().nullspace_basis()
    }

    /// Echelon basis of the row space.
    pub fn row_space(&self) -> Matrix {
        let rr = self.rref();
        let k = rr.rank();
        rr.reduced.select_rows(&(0..k).collect::<Vec<_>>())
    }

    /// Column-space basis (as columns) and a projection `P` of shape
    /// `(rows - rank) x rows` whose kernel is exactly the column space.
    pub fn image_cokernel(&self) -> (Matrix, Matrix) {
        let rr = self.rref();
        let image = self.select_cols(&rr.pivots);
        let coker = self.left_kernel();
        (image, coker)
    }

    /// Standard basis rows completing the row space of `self` to the
    /// whole space.
    pub fn complement_rows(&self) -> Matrix {
        let rr = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !rr.pivots.contains(c)).collect();
        let mut out = Matrix::zeros(self.field, free.len(), self.cols);
        for (k, &c) in free.iter().enumerate() {
            out.set(k, c, Scalar::ONE);
        }
        out
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        let aug = self.hstack(&Matrix::identity(self.field, n)).rref();
        if aug.pivots.len() < n || aug.pivots[n - 1] != n - 1 {
            return None;
        }
        let cols: Vec<usize> = (n..2 * n).collect();
        Some(aug.reduced.select_cols(&cols))
    }

    /// Some `X` with `A X = B`, if one exists.
    pub fn solve_right(&self, b: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, b.rows, "shape mismatch in solve");
        let n = self.cols;
        let aug = self.hstack(b).rref();
        if aug.pivots.iter().any(|&p| p >= n) {
            return None;
        }
        let mut x = Matrix::zeros(self.field, n, b.cols);
        for (r, &pc) in aug.pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(pc, j, aug.reduced.get(r, n + j).clone());
            }
        }
        Some(x)
    }

    /// Some `X` with `X A = B`, if one exists.
    pub fn solve_left(&self, b: &Matrix) -> Option<Matrix> {
        self.transpose()
            .solve_right(&b.transpose())
            .map(|x| x.transpose())
    }

    pub fn pow(&self, e: usize) -> Matrix {
        let mut acc = Matrix::identity(self.field, self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix[{}x{} over {}]", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            write!(f, "\n  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    #[test]
    fn identity_rref() {
        let rr = Matrix::identity(Q, 3).rref();
        assert_eq!(rr.pivots, vec![0, 1, 2]);
        assert_eq!(rr.rank(), 3);
    }

    #[test]
    fn equal_rows_over_f2() {
        let f2 = Field::prime(2).unwrap();
        assert_eq!(Matrix::from_ints(f2, &[&[1, 1], &[1, 1]]).rank(), 1);
    }

    #[test]
    fn hand_elimination() {
        let rr = Matrix::from_ints(Q, &[&[2, 4], &[1, 2]]).rref();
        assert_eq!(rr.rank(), 1);
        assert_eq!(rr.reduced, Matrix::from_ints(Q, &[&[1, 2], &[0, 0]]));
    }

    #[test]
    fn kernels() {
        assert_eq!(Matrix::identity(Q, 3).nullspace_basis().rows(), 0);
        assert_eq!(Matrix::zeros(Q, 2, 3).nullspace_basis().rows(), 3);
        let f3 = Field::prime(3).unwrap();
        let k = Matrix::from_ints(f3, &[&[1, 1]]).nullspace_basis();
        assert_eq!(k, Matrix::from_ints(f3, &[&[2, 1]]));
        // (2,1) and the spec's (1,2) span the same line
        assert_eq!(k.scale(&f3.from_int(2)), Matrix::from_ints(f3, &[&[1, 2]]));
    }

    #[test]
    fn image_and_cokernel() {
        let (_, c) = Matrix::identity(Q, 2).image_cokernel();
        assert_eq!(c.rows(), 0);
        let (im, c) = Matrix::zeros(Q, 2, 2).image_cokernel();
        assert_eq!((im.cols(), c.rows()), (0, 2));
        let col = Matrix::from_ints(Q, &[&[1], &[1]]);
        let (im, c) = col.image_cokernel();
        assert_eq!((im.cols(), c.rows()), (1, 1));
        assert!(c.mul(&col).is_zero());
    }

    #[test]
    fn inverse_and_solve() {
        let a = Matrix::from_ints(Q, &[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(Q, 2));
        assert!(Matrix::from_ints(Q, &[&[1, 2], &[2, 4]]).inverse().is_none());
        let b = Matrix::from_ints(Q, &[&[3, 2]]);
        let x = a.solve_left(&b).unwrap();
        assert_eq!(x.mul(&a), b);
    }
}
