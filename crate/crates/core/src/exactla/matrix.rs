use std::fmt;

use crate::error::{check_dim, Result};
use crate::exactla::vector::{self, Vector};
use crate::field::{FieldSpec, Scalar};

/// Dense matrix of exact scalars, stored row-major as a list of rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: FieldSpec,
    cols: usize,
    rows: Vec<Vector>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            cols,
            rows: vec![vector::zero(field, cols); rows],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        Matrix {
            field,
            cols: n,
            rows: (0..n).map(|i| vector::unit(field, n, i)).collect(),
        }
    }

    pub fn from_rows(field: FieldSpec, cols: usize, rows: Vec<Vector>) -> Result<Self> {
        for r in &rows {
            check_dim(cols, r.len())?;
        }
        Ok(Matrix { field, cols, rows })
    }

    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix {
            field,
            cols,
            rows: rows.iter().map(|r| vector::from_i64s(field, r)).collect(),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[Vector] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.rows[i][j] = v;
    }

    pub fn into_rows(self) -> Vec<Vector> {
        self.rows
    }

    pub fn transpose(&self) -> Matrix {
        let rows = (0..self.cols)
            .map(|j| self.rows.iter().map(|r| r[j].clone()).collect())
            .collect();
        Matrix {
            field: self.field,
            cols: self.rows.len(),
            rows,
        }
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        check_dim(self.cols, other.nrows())?;
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut acc = vector::zero(self.field, other.cols);
                for (c, orow) in r.iter().zip(&other.rows) {
                    vector::axpy(&mut acc, c, orow);
                }
                acc
            })
            .collect();
        Ok(Matrix {
            field: self.field,
            cols: other.cols,
            rows,
        })
    }

    /// `M v` for a column vector `v`.
    pub fn apply(&self, v: &[Scalar]) -> Result<Vector> {
        check_dim(self.cols, v.len())?;
        Ok(self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .zip(v)
                    .fold(self.field.zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.len().min(self.cols)).fold(self.field.zero(), |acc, i| acc + &self.rows[i][i])
    }

    /// Reduced row-echelon form with zero rows dropped, plus pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut rows = self.rows.clone();
        let pivots = rref_in_place(&mut rows, self.cols);
        rows.truncate(pivots.len());
        (
            Matrix {
                field: self.field,
                cols: self.cols,
                rows,
            },
            pivots,
        )
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{ x : M x = 0 }`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vector> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vector::unit(self.field, self.cols, f);
                for (row, &pc) in r.rows.iter().zip(&pivots) {
                    x[pc] = -&row[f];
                }
                x
            })
            .collect()
    }

    /// Solves `M x = b`; `None` when inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vector>> {
        check_dim(self.rows.len(), b.len())?;
        let aug: Vec<Vector> = self
            .rows
            .iter()
            .zip(b)
            .map(|(r, bi)| {
                let mut r = r.clone();
                r.push(bi.clone());
                r
            })
            .collect();
        let aug = Matrix {
            field: self.field,
            cols: self.cols + 1,
            rows: aug,
        };
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vector::zero(self.field, self.cols);
        for (row, &pc) in r.rows.iter().zip(&pivots) {
            x[pc] = row[self.cols].clone();
        }
        Ok(Some(x))
    }
}

/// Gauss-Jordan elimination; returns pivot columns. Zero rows end up last.
pub(crate) fn rref_in_place(rows: &mut [Vector], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(pr) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        if !inv.is_one() {
            for x in rows[r].iter_mut() {
                *x = &*x * &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = -&row[c];
                vector::axpy(row, &f, &pivot_row);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in r.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}
