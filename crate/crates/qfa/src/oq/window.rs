//! Finite-dimensional degree windows of the coordinate algebra.
//!
//! Relations only preserve the degree filtration (the determinant relation
//! drops degree by two), so the span of monomials of degree at most N with
//! degree parity N mod 2 is stable under both translation actions; these
//! windows carry all the desk-scale linear algebra.

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

use crate::coeff::Cyclotomic;
use crate::linalg::Mat;
use crate::oq::actions::{act_divided, act_k, act_kbinom, mono_elem, Side};
use crate::oq::algebra::{OqElem, OqMono};
use crate::uq::rep::{generating_set, Gen};

pub struct Window {
    pub ell: u32,
    pub max_deg: u32,
    /// `Some(p)`: only degrees congruent to p mod 2; `None`: all degrees.
    pub parity: Option<u32>,
    pub basis: Vec<OqMono>,
    index: HashMap<OqMono, usize>,
    ops: RefCell<HashMap<(Side, Gen), Rc<Mat>>>,
}

impl Window {
    pub fn new(ell: u32, max_deg: u32, parity: Option<u32>) -> Self {
        let mut basis = Vec::new();
        for d in 0..=max_deg {
            if let Some(p) = parity {
                if d % 2 != p % 2 {
                    continue;
                }
            }
            // monomials of degree d: |ad| = m, b + c = d - m
            for ad in -(d as i64)..=(d as i64) {
                let m = ad.unsigned_abs() as u32;
                if m > d {
                    continue;
                }
                let rest = d - m;
                for b in 0..=rest {
                    if ad == 0 || m > 0 {
                        basis.push(OqMono { ad, b, c: rest - b });
                    }
                }
            }
        }
        // dedupe the ad = 0 row (it is emitted once per sign path above)
        basis.sort();
        basis.dedup();
        let index = basis.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        Window {
            ell,
            max_deg,
            parity,
            basis,
            index,
            ops: RefCell::new(HashMap::new()),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, m: &OqMono) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn to_vec(&self, f: &OqElem) -> Option<Vec<Cyclotomic>> {
        let mut v = vec![Cyclotomic::zero(self.ell); self.dim()];
        for (m, c) in &f.terms {
            let i = self.index_of(m)?;
            v[i] = c.clone();
        }
        Some(v)
    }

    pub fn to_elem(&self, v: &[Cyclotomic]) -> OqElem {
        let mut f = OqElem::zero(self.ell);
        for (i, c) in v.iter().enumerate() {
            f.add_term(self.basis[i], c);
        }
        f
    }

    /// Weight of each basis monomial for the given translation side.
    pub fn side_weights(&self, side: Side) -> Vec<i64> {
        self.basis
            .iter()
            .map(|m| match side {
                Side::Right => m.rweight(),
                Side::Left => m.lweight(),
            })
            .collect()
    }

    /// Matrix of a generator's translation action on the window.
    pub fn op(&self, side: Side, g: Gen) -> Rc<Mat> {
        if let Some(m) = self.ops.borrow().get(&(side, g)) {
            return m.clone();
        }
        let ell = self.ell;
        let mut mat = Mat::zero(ell, self.dim(), self.dim());
        for (j, mono) in self.basis.iter().enumerate() {
            let f = mono_elem(*mono);
            let acted = match g {
                Gen::E(k) => act_divided(side, true, k, &f),
                Gen::F(k) => act_divided(side, false, k, &f),
                Gen::K => act_k(side, 1, &f),
                Gen::KInv => act_k(side, -1, &f),
                Gen::KBinom(c, t) => act_kbinom(side, c, t, &f),
            };
            let spec = acted.specialize(ell);
            for (m, c) in &spec.terms {
                let i = self
                    .index_of(m)
                    .expect("translation actions preserve the window");
                mat.set(i, j, mat.get(i, j).add(c));
            }
        }
        let mat = Rc::new(mat);
        self.ops.borrow_mut().insert((side, g), mat.clone());
        mat
    }

    /// Basis of the cocommutative functionals in the window: elements with
    /// `f(xu) = f(ux)` for every `u`, found as the joint kernel of
    /// (right translation - left translation) over the generating set.
    pub fn cocommutative_basis(&self) -> Vec<OqElem> {
        let mut stacked: Option<Mat> = None;
        for g in generating_set(self.ell) {
            let d = self.op(Side::Right, g).sub(&self.op(Side::Left, g));
            stacked = Some(match stacked {
                None => d,
                Some(s) => s.vstack(&d),
            });
        }
        let ker = stacked.expect("nonempty generating set").kernel();
        (0..ker.cols).map(|j| self.to_elem(&ker.column(j))).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oq::algebra::Letter;
    use crate::uq::subspace::Subspace;

    #[test]
    fn window_dimensions() {
        // monomials of degree exactly d number (d+1)^2
        let w = Window::new(3, 2, None);
        assert_eq!(w.dim(), 1 + 4 + 9);
        let w = Window::new(3, 3, Some(1));
        assert_eq!(w.dim(), 4 + 16);
    }

    #[test]
    fn right_translation_relations() {
        // the right-translation family is an algebra map: K E = q^2 E K etc.
        let ell = 3;
        let w = Window::new(ell, 3, None);
        let e = w.op(Side::Right, Gen::E(1));
        let f = w.op(Side::Right, Gen::F(1));
        let k = w.op(Side::Right, Gen::K);
        let kinv = w.op(Side::Right, Gen::KInv);
        let q2 = Cyclotomic::q_pow(ell, 2);
        assert_eq!(k.mul(&e), e.mul(&k).scale(&q2));
        let denom = Cyclotomic::q_pow(ell, 1).sub(&Cyclotomic::q_pow(ell, -1));
        let rhs = k.sub(&kinv).scale(&denom.inv().unwrap());
        assert_eq!(e.mul(&f).sub(&f.mul(&e)), rhs);
    }

    #[test]
    fn left_translation_is_opposite() {
        // left translation composes contravariantly: K then E corresponds to
        // the element E K, so the matrix identity flips
        let ell = 3;
        let w = Window::new(ell, 3, None);
        let e = w.op(Side::Left, Gen::E(1));
        let k = w.op(Side::Left, Gen::K);
        let q2 = Cyclotomic::q_pow(ell, 2);
        assert_eq!(e.mul(&k), k.mul(&e).scale(&q2));
    }

    #[test]
    fn cocommutative_dimension_and_trace_powers() {
        use Letter::*;
        for ell in [3u32, 5] {
            for max_deg in [2u32, 4] {
                let w = Window::new(ell, max_deg, None);
                let basis = w.cocommutative_basis();
                assert_eq!(basis.len(), max_deg as usize + 1, "ell={ell} D={max_deg}");
                // the span equals powers of (a + d)
                let apd = OqElem::gen_letter(ell, A).add(&OqElem::gen_letter(ell, D));
                let mut space = Subspace::empty(ell, w.dim());
                for b in &basis {
                    space.insert(w.to_vec(b).unwrap());
                }
                let mut p = OqElem::one(ell);
                for _ in 0..=max_deg {
                    assert!(space.contains(&w.to_vec(&p).unwrap()));
                    p = p.mul(&apd);
                }
            }
        }
    }
}
