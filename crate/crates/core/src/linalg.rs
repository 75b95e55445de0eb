//! Exact dense linear algebra.
//!
//! Rank, kernels and solves assume the coefficient ring is a field; the
//! determinant and adjugate of small matrices work over any commutative ring.

use crate::ring::{Elem, Ring};

#[derive(Clone, Debug)]
pub struct Matrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    data: Vec<Vec<Elem>>,
}

/// Reduced row echelon form together with its pivot columns.
struct Echelon {
    rows: Vec<Vec<Elem>>,
    pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(ring: &Ring, rows: usize, cols: usize) -> Matrix {
        Matrix {
            ring: ring.clone(),
            rows,
            cols,
            data: vec![vec![ring.zero(); cols]; rows],
        }
    }

    pub fn identity(ring: &Ring, n: usize) -> Matrix {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.data[i][i] = ring.one();
        }
        m
    }

    pub fn from_rows(ring: &Ring, data: Vec<Vec<Elem>>) -> Matrix {
        let rows = data.len();
        let cols = data.first().map_or(0, |r| r.len());
        assert!(data.iter().all(|r| r.len() == cols), "ragged matrix");
        Matrix {
            ring: ring.clone(),
            rows,
            cols,
            data,
        }
    }

    /// Builds a `rows x columns.len()` matrix from column vectors.
    pub fn from_columns(ring: &Ring, rows: usize, columns: &[Vec<Elem>]) -> Matrix {
        let mut m = Self::zeros(ring, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column {j} has wrong length");
            for (i, x) in col.iter().enumerate() {
                m.data[i][j] = x.clone();
            }
        }
        m
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Elem {
        &self.data[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Elem) {
        self.data[i][j] = x;
    }

    pub fn column(&self, j: usize) -> Vec<Elem> {
        self.data.iter().map(|r| r[j].clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Self::zeros(&self.ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j][i] = self.data[i][j].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let r = &self.ring;
        let mut out = Self::zeros(r, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if r.is_zero(&self.data[i][k]) {
                    continue;
                }
                for j in 0..other.cols {
                    let p = r.mul(&self.data[i][k], &other.data[k][j]);
                    out.data[i][j] = r.add(&out.data[i][j], &p);
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Elem]) -> Vec<Elem> {
        assert_eq!(v.len(), self.cols);
        let r = &self.ring;
        self.data
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .fold(r.zero(), |acc, (a, b)| r.add(&acc, &r.mul(a, b)))
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().flatten().all(|x| self.ring.is_zero(x))
    }

    /// Matrix with the given columns appended.
    pub fn hcat(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.iter().chain(b).cloned().collect())
            .collect();
        Matrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols + other.cols,
            data,
        }
    }

    /// Keeps only the listed rows, in order.
    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        let data: Vec<Vec<Elem>> = rows.iter().map(|&i| self.data[i].clone()).collect();
        Matrix {
            ring: self.ring.clone(),
            rows: rows.len(),
            cols: self.cols,
            data,
        }
    }

    fn echelon(&self) -> Echelon {
        let r = &self.ring;
        let mut rows = self.data.clone();
        let mut pivots = Vec::new();
        let mut lead = 0;
        for col in 0..self.cols {
            let Some(p) = (lead..self.rows).find(|&i| !r.is_zero(&rows[i][col])) else {
                continue;
            };
            rows.swap(lead, p);
            let inv = r.try_invert(&rows[lead][col]).expect("linear algebra needs a field");
            for x in rows[lead].iter_mut() {
                *x = r.mul(x, &inv);
            }
            let pivot_row = rows[lead].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i == lead || r.is_zero(&row[col]) {
                    continue;
                }
                let factor = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x = r.sub(x, &r.mul(&factor, p));
                }
            }
            pivots.push(col);
            lead += 1;
            if lead == self.rows {
                break;
            }
        }
        Echelon { rows, pivots }
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// Basis of `{x : A x = 0}`.
    pub fn kernel(&self) -> Vec<Vec<Elem>> {
        let r = &self.ring;
        let ech = self.echelon();
        let free: Vec<usize> = (0..self.cols).filter(|c| !ech.pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![r.zero(); self.cols];
                v[f] = r.one();
                for (row, &pc) in ech.pivots.iter().enumerate() {
                    v[pc] = r.neg(&ech.rows[row][f]);
                }
                v
            })
            .collect()
    }

    /// Some `x` with `A x = b`, if the system is consistent.
    pub fn solve(&self, b: &[Elem]) -> Option<Vec<Elem>> {
        assert_eq!(b.len(), self.rows);
        let r = &self.ring;
        let aug = self.hcat(&Matrix::from_columns(r, self.rows, &[b.to_vec()]));
        let ech = aug.echelon();
        if ech.pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![r.zero(); self.cols];
        for (row, &pc) in ech.pivots.iter().enumerate() {
            x[pc] = ech.rows[row][self.cols].clone();
        }
        Some(x)
    }

    /// Whether every column of `other` lies in the column space of `self`.
    pub fn column_space_contains(&self, other: &Matrix) -> bool {
        self.rank() == self.hcat(other).rank()
    }

    /// Determinant by cofactor expansion; valid over any commutative ring.
    pub fn det(&self) -> Elem {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let r = &self.ring;
        match self.rows {
            0 => r.one(),
            1 => self.data[0][0].clone(),
            n => {
                let mut acc = r.zero();
                for j in 0..n {
                    if r.is_zero(&self.data[0][j]) {
                        continue;
                    }
                    let term = r.mul(&self.data[0][j], &self.minor(0, j).det());
                    acc = if j % 2 == 0 {
                        r.add(&acc, &term)
                    } else {
                        r.sub(&acc, &term)
                    };
                }
                acc
            }
        }
    }

    fn minor(&self, skip_row: usize, skip_col: usize) -> Matrix {
        let data = self
            .data
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != skip_row)
            .map(|(_, row)| {
                row.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != skip_col)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        Matrix::from_rows(&self.ring, data)
    }

    pub fn adjugate(&self) -> Matrix {
        let r = &self.ring;
        let n = self.rows;
        let mut adj = Self::zeros(r, n, n);
        for i in 0..n {
            for j in 0..n {
                let c = self.minor(i, j).det();
                adj.data[j][i] = if (i + j) % 2 == 0 { c } else { r.neg(&c) };
            }
        }
        adj
    }

    /// Inverse over any commutative ring, when the determinant is a unit.
    pub fn inverse(&self) -> Option<Matrix> {
        let r = &self.ring;
        let d = r.try_invert(&self.det()).ok()?;
        let mut adj = self.adjugate();
        for row in adj.data.iter_mut() {
            for x in row.iter_mut() {
                *x = r.mul(x, &d);
            }
        }
        Some(adj)
    }
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}
