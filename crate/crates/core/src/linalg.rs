//! Dense matrices over a [`GaloisField`] with Gauss-Jordan elimination.

use crate::field::GaloisField;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<u32>) -> Self {
        assert_eq!(rows * cols, data.len());
        Self { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<u32>], cols: usize) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols);
            data.extend_from_slice(r);
        }
        Self {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[u32]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn push_row(&mut self, row: &[u32]) {
        assert_eq!(row.len(), self.cols);
        self.data.extend_from_slice(row);
        self.rows += 1;
    }

    pub fn map(&self, f: impl Fn(u32) -> u32) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| f(x)).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn vstack(&self, other: &Matrix) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Self {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn mul(&self, other: &Matrix, f: &GaloisField) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), f.mul(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u32], f: &GaloisField) -> Vec<u32> {
        assert_eq!(self.cols, v.len());
        self.row_iter().map(|row| dot(row, v, f)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Brings the matrix to reduced row-echelon form in place and returns
    /// the pivot columns. Zero rows end up at the bottom.
    pub fn rref(&mut self, f: &GaloisField) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..self.cols {
            if lead == self.rows {
                break;
            }
            let Some(pr) = (lead..self.rows).find(|&r| self.get(r, c) != 0) else {
                continue;
            };
            self.swap_rows(pr, lead);
            let inv = f.inv(self.get(lead, c)).expect("nonzero pivot");
            for j in c..self.cols {
                let v = f.mul(self.get(lead, j), inv);
                self.set(lead, j, v);
            }
            for r in 0..self.rows {
                if r == lead {
                    continue;
                }
                let factor = self.get(r, c);
                if factor == 0 {
                    continue;
                }
                for j in c..self.cols {
                    let v = f.sub(self.get(r, j), f.mul(factor, self.get(lead, j)));
                    self.set(r, j, v);
                }
            }
            pivots.push(c);
            lead += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Reduced row-echelon form with zero rows removed: the canonical basis
    /// of the row space.
    pub fn reduced(&self, f: &GaloisField) -> Matrix {
        let mut m = self.clone();
        let rank = m.rref(f).len();
        m.data.truncate(rank * m.cols);
        m.rows = rank;
        m
    }

    pub fn rank(&self, f: &GaloisField) -> usize {
        self.clone().rref(f).len()
    }

    /// Canonical basis (reduced row-echelon) of `{v : self * v = 0}`.
    pub fn nullspace(&self, f: &GaloisField) -> Matrix {
        let r = self.reduced(f);
        let mut pivot_of_col = vec![None; self.cols];
        for (i, row) in r.row_iter().enumerate() {
            let c = row
                .iter()
                .position(|&x| x != 0)
                .expect("reduced rows are nonzero");
            pivot_of_col[c] = Some(i);
        }
        let mut basis = Matrix::zeros(0, self.cols);
        for free in (0..self.cols).filter(|&c| pivot_of_col[c].is_none()) {
            let mut v = vec![0u32; self.cols];
            v[free] = 1;
            for (c, pr) in pivot_of_col.iter().enumerate() {
                if let Some(i) = pr {
                    v[c] = f.neg(r.get(*i, free));
                }
            }
            basis.push_row(&v);
        }
        basis.reduced(f)
    }

    pub fn inverse(&self, f: &GaloisField) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, n + r, 1);
        }
        let pivots = aug.rref(f);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, aug.get(r, n + c));
            }
        }
        Some(inv)
    }
}

pub fn dot(a: &[u32], b: &[u32], f: &GaloisField) -> u32 {
    a.iter()
        .zip(b)
        .fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
}

/// Whether two matrices span the same row space.
pub fn same_row_space(a: &Matrix, b: &Matrix, f: &GaloisField) -> bool {
    a.cols == b.cols && a.reduced(f) == b.reduced(f)
}

/// Dimension of the intersection of two row spaces.
pub fn intersection_dim(a: &Matrix, b: &Matrix, f: &GaloisField) -> usize {
    a.rank(f) + b.rank(f) - a.vstack(b).rank(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_nullity_small() {
        let f = GaloisField::smallest(2, 2).unwrap();
        let m = Matrix::from_rows(&[vec![1, 2, 3], vec![2, 3, 1]], 3);
        // row 2 = omega * row 1
        assert_eq!(m.rank(&f), 1);
        let ns = m.nullspace(&f);
        assert_eq!(ns.rows(), 2);
        for v in ns.row_iter() {
            assert!(m.mul_vec(v, &f).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn inverse_round_trip() {
        let f = GaloisField::smallest(3, 1).unwrap();
        let m = Matrix::from_rows(&[vec![1, 2], vec![0, 1]], 2);
        let inv = m.inverse(&f).unwrap();
        assert_eq!(m.mul(&inv, &f), Matrix::identity(2));
        let singular = Matrix::from_rows(&[vec![1, 2], vec![2, 1]], 2);
        assert!(singular.inverse(&f).is_none());
    }
}
