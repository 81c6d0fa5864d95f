//! Dense exact linear algebra over the cyclotomic field Q(q): Gaussian
//! elimination, kernels, images, solving, and inverses.  Dimensions at desk
//! scale stay small (a few hundred), so dense elimination is the simplest
//! correct choice.

use crate::coeff::{Cyclotomic, Q};

#[derive(Clone, PartialEq, Debug)]
pub struct Mat {
    pub ell: u32,
    pub rows: usize,
    pub cols: usize,
    data: Vec<Cyclotomic>,
}

impl Mat {
    pub fn zero(ell: u32, rows: usize, cols: usize) -> Self {
        Mat {
            ell,
            rows,
            cols,
            data: vec![Cyclotomic::zero(ell); rows * cols],
        }
    }

    pub fn identity(ell: u32, n: usize) -> Self {
        let mut m = Self::zero(ell, n, n);
        for i in 0..n {
            m.set(i, i, Cyclotomic::one(ell));
        }
        m
    }

    pub fn from_fn(ell: u32, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Cyclotomic) -> Self {
        let mut m = Self::zero(ell, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Cyclotomic {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Cyclotomic) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a = a.add(b);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a = a.sub(b);
        }
        out
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = a.mul(c);
        }
        out
    }

    pub fn scale_q(&self, c: &Q) -> Self {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = a.scale(c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matmul shape mismatch");
        let mut out = Self::zero(self.ell, self.rows, other.cols);
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
                    let cur = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        assert_eq!(self.rows, self.cols);
        let mut out = Self::identity(self.ell, self.rows);
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.ell, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Kronecker product in row-major block order: entry ((i1,i2),(j1,j2))
    /// with the second index fastest.
    pub fn kron(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.ell, self.rows * other.rows, self.cols * other.cols);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = self.get(i1, j1);
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..other.rows {
                    for j2 in 0..other.cols {
                        let b = other.get(i2, j2);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(i1 * other.rows + i2, j1 * other.cols + j2, a.mul(b));
                    }
                }
            }
        }
        out
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        Self::from_fn(self.ell, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        Self::from_fn(self.ell, self.rows + other.rows, self.cols, |i, j| {
            if i < self.rows {
                self.get(i, j).clone()
            } else {
                other.get(i - self.rows, j).clone()
            }
        })
    }

    pub fn column(&self, j: usize) -> Vec<Cyclotomic> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn from_columns(ell: u32, rows: usize, cols: &[Vec<Cyclotomic>]) -> Self {
        Self::from_fn(ell, rows, cols.len(), |i, j| cols[j][i].clone())
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            // find a pivot in column c at or below row r
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    let a = self.get(r, j).clone();
                    let b = self.get(p, j).clone();
                    self.set(r, j, b);
                    self.set(p, j, a);
                }
            }
            let inv = self.get(r, c).inv().expect("pivot is nonzero");
            for j in 0..self.cols {
                let v = self.get(r, j).mul(&inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i != r && !self.get(i, c).is_zero() {
                    let factor = self.get(i, c).clone();
                    for j in 0..self.cols {
                        let v = self.get(i, j).sub(&factor.mul(self.get(r, j)));
                        self.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right kernel, as columns of a matrix.
    pub fn kernel(&self) -> Mat {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivot_set.contains(c)).collect();
        let mut out = Mat::zero(self.ell, self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            out.set(fc, k, Cyclotomic::one(self.ell));
            for (r, &pc) in pivots.iter().enumerate() {
                out.set(pc, k, m.get(r, fc).neg());
            }
        }
        out
    }

    /// Basis of the column space, as columns of a matrix.
    pub fn image(&self) -> Mat {
        let mut m = self.transpose();
        let _ = m.rref();
        // nonzero rows of the rref of the transpose span the column space
        let mut cols: Vec<Vec<Cyclotomic>> = Vec::new();
        for i in 0..m.rows {
            let row: Vec<Cyclotomic> = (0..m.cols).map(|j| m.get(i, j).clone()).collect();
            if row.iter().any(|c| !c.is_zero()) {
                cols.push(row);
            }
        }
        Mat::from_columns(self.ell, self.rows, &cols)
    }

    /// Solve `self * x = b` for each column of `b`; `None` if inconsistent.
    pub fn solve(&self, b: &Mat) -> Option<Mat> {
        assert_eq!(self.rows, b.rows);
        let mut aug = self.hstack(b);
        let pivots = aug.rref();
        // inconsistent when a pivot lies in the b-section
        if pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = Mat::zero(self.ell, self.cols, b.cols);
        for (r, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(pc, j, aug.get(r, self.cols + j).clone());
            }
        }
        Some(x)
    }

    /// Inverse of a square matrix; `None` if singular.
    pub fn inverse(&self) -> Option<Mat> {
        assert_eq!(self.rows, self.cols);
        let id = Mat::identity(self.ell, self.rows);
        let x = self.solve(&id)?;
        if self.mul(&x) == id {
            Some(x)
        } else {
            None
        }
    }

    /// Left inverse of a full-column-rank matrix: `p` with `p * self = id`.
    pub fn left_inverse(&self) -> Option<Mat> {
        // transpose, solve self^T y = id_cols as right-inverse problem
        let t = self.transpose();
        let id = Mat::identity(self.ell, self.cols);
        let y = t.solve(&id)?;
        let p = y.transpose();
        if p.mul(self) == id {
            Some(p)
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(ell: u32, n: i64) -> Cyclotomic {
        Cyclotomic::from_int(ell, n)
    }

    fn m2(ell: u32, e: [[i64; 2]; 2]) -> Mat {
        Mat::from_fn(ell, 2, 2, |i, j| c(ell, e[i][j]))
    }

    #[test]
    fn inverse_and_solve() {
        let a = m2(3, [[1, 2], [3, 4]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Mat::identity(3, 2));
        let singular = m2(3, [[1, 2], [2, 4]]);
        assert!(singular.inverse().is_none());
    }

    #[test]
    fn kernel_and_rank() {
        let a = m2(5, [[1, 2], [2, 4]]);
        assert_eq!(a.rank(), 1);
        let k = a.kernel();
        assert_eq!(k.cols, 1);
        assert!(a.mul(&k).is_zero());
    }

    #[test]
    fn kernel_with_q_entries() {
        // row (1, q): kernel spanned by (-q, 1)
        let ell = 5;
        let mut a = Mat::zero(ell, 1, 2);
        a.set(0, 0, Cyclotomic::one(ell));
        a.set(0, 1, Cyclotomic::q_pow(ell, 1));
        let k = a.kernel();
        assert_eq!(k.cols, 1);
        assert!(a.mul(&k).is_zero());
    }

    #[test]
    fn left_inverse() {
        let ell = 3;
        let mut a = Mat::zero(ell, 3, 2);
        a.set(0, 0, c(ell, 1));
        a.set(1, 1, c(ell, 2));
        a.set(2, 0, c(ell, 5));
        let p = a.left_inverse().unwrap();
        assert_eq!(p.mul(&a), Mat::identity(ell, 2));
    }

    #[test]
    fn image_columns_span() {
        let a = m2(3, [[1, 2], [2, 4]]);
        let im = a.image();
        assert_eq!(im.cols, 1);
        // the image column must be a multiple of (1, 2)
        let x = im.get(0, 0);
        let y = im.get(1, 0);
        assert_eq!(y.clone(), x.mul(&c(3, 2)));
    }

    #[test]
    fn kron_shapes() {
        let a = m2(3, [[1, 0], [0, 1]]);
        let b = m2(3, [[2, 1], [0, 2]]);
        let k = a.kron(&b);
        assert_eq!((k.rows, k.cols), (4, 4));
        assert_eq!(k.get(0, 1).clone(), c(3, 1));
        assert_eq!(k.get(2, 3).clone(), c(3, 1));
    }
}
