//! Echelonized subspaces of a fixed coordinate space, used for submodule
//! closures, socles, radicals, and subspace arithmetic (sum, intersection,
//! containment) with exact coefficients.

use crate::coeff::Cyclotomic;
use crate::linalg::Mat;

#[derive(Clone)]
pub struct Subspace {
    pub ell: u32,
    pub ambient: usize,
    /// Rows in reduced echelon form, each paired with its pivot column.
    rows: Vec<(usize, Vec<Cyclotomic>)>,
}

impl Subspace {
    pub fn empty(ell: u32, ambient: usize) -> Self {
        Subspace { ell, ambient, rows: Vec::new() }
    }

    pub fn full(ell: u32, ambient: usize) -> Self {
        let mut s = Self::empty(ell, ambient);
        for i in 0..ambient {
            let mut v = vec![Cyclotomic::zero(ell); ambient];
            v[i] = Cyclotomic::one(ell);
            s.insert(v);
        }
        s
    }

    pub fn from_columns(m: &Mat) -> Self {
        let mut s = Self::empty(m.ell, m.rows);
        for j in 0..m.cols {
            s.insert(m.column(j));
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the rows; the remainder is returned.
    pub fn reduce(&self, mut v: Vec<Cyclotomic>) -> Vec<Cyclotomic> {
        for (p, row) in &self.rows {
            if !v[*p].is_zero() {
                let c = v[*p].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    *x = x.sub(&c.mul(r));
                }
            }
        }
        v
    }

    /// Insert a vector; returns true if it enlarged the space.
    pub fn insert(&mut self, v: Vec<Cyclotomic>) -> bool {
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().expect("leading coefficient is nonzero");
        for x in v.iter_mut() {
            *x = x.mul(&inv);
        }
        // back-substitute into existing rows to keep reduced form
        for (_, row) in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let c = row[p].clone();
                for (x, r) in row.iter_mut().zip(&v) {
                    *x = x.sub(&c.mul(r));
                }
            }
        }
        self.rows.push((p, v));
        self.rows.sort_by_key(|(p, _)| *p);
        true
    }

    pub fn contains(&self, v: &[Cyclotomic]) -> bool {
        self.reduce(v.to_vec()).iter().all(|c| c.is_zero())
    }

    pub fn contains_space(&self, other: &Subspace) -> bool {
        other.rows.iter().all(|(_, r)| self.contains(r))
    }

    pub fn equals(&self, other: &Subspace) -> bool {
        self.dim() == other.dim() && self.contains_space(other)
    }

    /// Basis as columns of a matrix (inclusion into the ambient space).
    pub fn basis_matrix(&self) -> Mat {
        let cols: Vec<Vec<Cyclotomic>> = self.rows.iter().map(|(_, r)| r.clone()).collect();
        Mat::from_columns(self.ell, self.ambient, &cols)
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for (_, r) in &other.rows {
            s.insert(r.clone());
        }
        s
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        // solve A x = B y: kernel of [A | -B], read off the A-part
        let a = self.basis_matrix();
        let b = other.basis_matrix();
        if a.cols == 0 || b.cols == 0 {
            return Subspace::empty(self.ell, self.ambient);
        }
        let neg_b = b.scale(&Cyclotomic::from_int(self.ell, -1));
        let ker = a.hstack(&neg_b).kernel();
        let mut out = Subspace::empty(self.ell, self.ambient);
        for j in 0..ker.cols {
            let mut v = vec![Cyclotomic::zero(self.ell); self.ambient];
            for k in 0..a.cols {
                let c = ker.get(k, j);
                if c.is_zero() {
                    continue;
                }
                for i in 0..self.ambient {
                    v[i] = v[i].add(&c.mul(a.get(i, k)));
                }
            }
            out.insert(v);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vecq(ell: u32, xs: &[i64]) -> Vec<Cyclotomic> {
        xs.iter().map(|&x| Cyclotomic::from_int(ell, x)).collect()
    }

    #[test]
    fn insert_and_contains() {
        let ell = 3;
        let mut s = Subspace::empty(ell, 3);
        assert!(s.insert(vecq(ell, &[1, 2, 3])));
        assert!(s.insert(vecq(ell, &[0, 1, 1])));
        assert!(!s.insert(vecq(ell, &[1, 3, 4])));
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&vecq(ell, &[2, 5, 7])));
        assert!(!s.contains(&vecq(ell, &[0, 0, 1])));
    }

    #[test]
    fn sum_and_intersection() {
        let ell = 5;
        let mut a = Subspace::empty(ell, 3);
        a.insert(vecq(ell, &[1, 0, 0]));
        a.insert(vecq(ell, &[0, 1, 0]));
        let mut b = Subspace::empty(ell, 3);
        b.insert(vecq(ell, &[0, 1, 1]));
        b.insert(vecq(ell, &[0, 0, 1]));
        let s = a.sum(&b);
        assert_eq!(s.dim(), 3);
        let i = a.intersect(&b);
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&vecq(ell, &[0, 1, 0])));
    }
}
