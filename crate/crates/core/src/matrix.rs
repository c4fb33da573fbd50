//! Dense row-major matrices over a finite field.

use thiserror::Error;

use crate::gf::{Field, GfError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("matrix is singular")]
    Singular,
    #[error(transparent)]
    Field(#[from] GfError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: F, rows: usize, cols: usize) -> Self {
        let data = vec![field.zero(); rows * cols];
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = m.field.one();
        }
        m
    }

    pub fn from_rows(field: F, rows: Vec<Vec<F::Elem>>) -> Result<Self, MatrixError> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(MatrixError::DimensionMismatch("ragged rows".into()));
        }
        let n_rows = rows.len();
        Ok(Matrix {
            field,
            rows: n_rows,
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_canonical(field: F, rows: &[Vec<u64>]) -> Result<Self, MatrixError> {
        let rows = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&v| field.from_canonical(v))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_rows(field, rows)
    }

    pub fn to_canonical(&self) -> Vec<Vec<u64>> {
        self.row_iter()
            .map(|r| r.iter().map(|&v| self.field.to_canonical(v)).collect())
            .collect()
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> F::Elem {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F::Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[F::Elem]> {
        self.data.chunks(self.cols.max(1)).take(self.rows)
    }

    pub fn mul(&self, other: &Self) -> Result<Self, MatrixError> {
        if self.field != other.field {
            return Err(MatrixError::FieldMismatch);
        }
        if self.cols != other.rows {
            return Err(MatrixError::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Self::zeros(f.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for t in 0..self.cols {
                let a = self.get(i, t);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = f.add(out.data[idx], f.mul(a, other.get(t, j)));
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix.
    pub fn left_mul(&self, v: &[F::Elem]) -> Result<Vec<F::Elem>, MatrixError> {
        if v.len() != self.rows {
            return Err(MatrixError::DimensionMismatch(format!(
                "vector of length {} against {} rows",
                v.len(),
                self.rows
            )));
        }
        let f = &self.field;
        let mut out = vec![f.zero(); self.cols];
        for (i, &a) in v.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (o, &g) in out.iter_mut().zip(self.row(i)) {
                *o = f.add(*o, f.mul(a, g));
            }
        }
        Ok(out)
    }

    /// Rank by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let f = &self.field;
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(pivot) = (rank..self.rows).find(|&r| !f.is_zero(m.get(r, col))) else {
                continue;
            };
            m.swap_rows(rank, pivot);
            let inv = f.inv(m.get(rank, col)).expect("pivot is nonzero");
            for r in rank + 1..self.rows {
                let factor = f.mul(m.get(r, col), inv);
                if f.is_zero(factor) {
                    continue;
                }
                for c in col..self.cols {
                    let v = f.sub(m.get(r, c), f.mul(factor, m.get(rank, c)));
                    m.set(r, c, v);
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }

    /// Inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Self, MatrixError> {
        if self.rows != self.cols {
            return Err(MatrixError::DimensionMismatch(format!(
                "inverse of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let f = &self.field;
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(f.clone(), n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !f.is_zero(a.get(r, col)))
                .ok_or(MatrixError::Singular)?;
            a.swap_rows(col, pivot);
            inv.swap_rows(col, pivot);
            let s = f.inv(a.get(col, col))?;
            a.scale_row(col, s);
            inv.scale_row(col, s);
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = a.get(r, col);
                if f.is_zero(factor) {
                    continue;
                }
                for c in 0..n {
                    let v = f.sub(a.get(r, c), f.mul(factor, a.get(col, c)));
                    a.set(r, c, v);
                    let w = f.sub(inv.get(r, c), f.mul(factor, inv.get(col, c)));
                    inv.set(r, c, w);
                }
            }
        }
        Ok(inv)
    }

    pub fn row_weights(&self) -> Vec<usize> {
        self.row_iter()
            .map(|r| r.iter().filter(|&&v| !self.field.is_zero(v)).count())
            .collect()
    }

    pub fn column_weights(&self) -> Vec<usize> {
        let mut w = vec![0; self.cols];
        for r in self.row_iter() {
            for (c, &v) in r.iter().enumerate() {
                if !self.field.is_zero(v) {
                    w[c] += 1;
                }
            }
        }
        w
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, s: F::Elem) {
        let f = self.field.clone();
        for v in &mut self.data[r * self.cols..(r + 1) * self.cols] {
            *v = f.mul(*v, s);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Gf;

    fn gf7() -> Gf {
        Gf::builder(7, 1).alpha(3).build().unwrap()
    }

    #[test]
    fn rank_of_zero_and_identity() {
        let f = gf7();
        assert_eq!(Matrix::zeros(f.clone(), 3, 5).rank(), 0);
        assert_eq!(Matrix::identity(f, 4).rank(), 4);
    }

    #[test]
    fn rank_detects_dependent_rows() {
        let f = gf7();
        let m = Matrix::from_canonical(f, &[vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]).unwrap();
        assert_eq!(m.rank(), 2);
        assert_eq!(m.inverse(), Err(MatrixError::Singular));
    }

    #[test]
    fn inverse_round_trip() {
        let f = gf7();
        let p = Matrix::from_canonical(
            f.clone(),
            &[
                vec![1, 3, 1, 6],
                vec![1, 2, 2, 1],
                vec![1, 4, 1, 1],
                vec![1, 5, 2, 6],
            ],
        )
        .unwrap();
        let inv = p.inverse().unwrap();
        assert_eq!(p.mul(&inv).unwrap(), Matrix::identity(f.clone(), 4));
        assert_eq!(inv.mul(&p).unwrap(), Matrix::identity(f, 4));
    }

    #[test]
    fn left_mul_matches_mul() {
        let f = Gf::with_order(16).unwrap();
        let m = Matrix::from_canonical(f.clone(), &[vec![1, 2, 3], vec![4, 5, 6]]).unwrap();
        let v = vec![f.element(7).unwrap(), f.element(9).unwrap()];
        let row = Matrix::from_rows(f.clone(), vec![v.clone()]).unwrap();
        assert_eq!(
            m.left_mul(&v).unwrap(),
            row.mul(&m).unwrap().row(0).to_vec()
        );
        assert!(matches!(
            m.left_mul(&v[..1]),
            Err(MatrixError::DimensionMismatch(_))
        ));
    }

    #[test]
    fn ragged_rows_rejected() {
        let f = gf7();
        assert!(Matrix::from_canonical(f, &[vec![1, 2], vec![1]]).is_err());
    }

    #[test]
    fn weights() {
        let f = gf7();
        let m = Matrix::from_canonical(f, &[vec![1, 0, 3], vec![0, 0, 6]]).unwrap();
        assert_eq!(m.row_weights(), vec![2, 1]);
        assert_eq!(m.column_weights(), vec![1, 0, 2]);
    }
}
