use super::field::Field;
use super::matrix::Matrix;
use super::scalar::Scalar;

/// Incrementally built echelon basis of a subspace of `F^n`.
#[derive(Clone, Debug)]
pub struct Span {
    field: Field,
    dim: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Span {
    pub fn new(field: Field, dim: usize) -> Self {
        Span { field, dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_rows(field: Field, dim: usize, rows: impl IntoIterator<Item = Vec<Scalar>>) -> Self {
        let mut s = Span::new(field, dim);
        for r in rows {
            s.insert(r);
        }
        s
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    /// Reduces `v` against the current rows; the result is zero iff `v`
    /// lies in the span.
    pub fn reduce(&self, mut v: Vec<Scalar>) -> Vec<Scalar> {
        let f = self.field;
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p].clone();
            if c.is_zero() {
                continue;
            }
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = f.sub_mul(x, &c, r);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v.to_vec()).iter().all(Scalar::is_zero)
    }

    /// Adds `v`; returns whether the span grew.
    pub fn insert(&mut self, v: Vec<Scalar>) -> bool {
        assert_eq!(v.len(), self.dim, "vector length mismatch");
        let f = self.field;
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = f.inv(&v[p]).expect("nonzero");
        for x in v.iter_mut() {
            *x = f.mul(x, &inv);
        }
        // keep earlier rows reduced at the new pivot
        for row in self.rows.iter_mut() {
            let c = row[p].clone();
            if c.is_zero() {
                continue;
            }
            for (x, r) in row.iter_mut().zip(&v) {
                if !r.is_zero() {
                    *x = f.sub_mul(x, &c, r);
                }
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }

    pub fn basis(&self) -> Matrix {
        let data = self.rows.iter().flatten().cloned().collect();
        Matrix::from_canonical(self.field, self.rows.len(), self.dim, data)
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grows_and_detects_membership() {
        let q = Field::Rationals;
        let v = |a: i64, b: i64, c: i64| vec![Scalar::from_int(a), Scalar::from_int(b), Scalar::from_int(c)];
        let mut s = Span::new(q, 3);
        assert!(s.insert(v(1, 1, 0)));
        assert!(s.insert(v(0, 1, 1)));
        assert!(!s.insert(v(1, 2, 1)));
        assert!(s.contains(&v(1, 0, -1)));
        assert!(!s.contains(&v(0, 0, 1)));
        assert_eq!(s.rank(), 2);
    }
}
