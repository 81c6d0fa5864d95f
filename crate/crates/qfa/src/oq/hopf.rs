//! Hopf structure on the coordinate algebra: matrix coproduct, counit, and
//! antipode, all computed letter-by-letter from the 2x2 entry matrix
//! (a b; c d).

use std::collections::BTreeMap;

use crate::coeff::Cyclotomic;
use crate::oq::algebra::{Letter, OqElem, OqMono};

/// Element of the two-fold tensor square of the coordinate algebra.
#[derive(Clone, PartialEq, Debug)]
pub struct TensorElem {
    pub ell: u32,
    pub terms: BTreeMap<(OqMono, OqMono), Cyclotomic>,
}

impl TensorElem {
    pub fn zero(ell: u32) -> Self {
        TensorElem { ell, terms: BTreeMap::new() }
    }

    pub fn add_term(&mut self, m: (OqMono, OqMono), c: &Cyclotomic) {
        if c.is_zero() {
            return;
        }
        let e = self
            .terms
            .entry(m)
            .or_insert_with(|| Cyclotomic::zero(self.ell));
        *e = e.add(c);
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    /// Multiply by an elementary tensor (x tensor y) on the right.
    fn mul_pair(&self, x: &OqElem, y: &OqElem) -> Self {
        let ell = self.ell;
        let mut out = Self::zero(ell);
        for ((m1, m2), c) in &self.terms {
            let p1 = OqElem::monomial(ell, *m1, Cyclotomic::one(ell)).mul(x);
            let p2 = OqElem::monomial(ell, *m2, Cyclotomic::one(ell)).mul(y);
            for (a, ca) in &p1.terms {
                for (b, cb) in &p2.terms {
                    out.add_term((*a, *b), &c.mul(ca).mul(cb));
                }
            }
        }
        out
    }
}

/// Coproduct: `delta(x_ij) = sum_k x_ik tensor x_kj`, extended
/// multiplicatively.
pub fn comultiply(f: &OqElem) -> TensorElem {
    let ell = f.ell;
    let gl = |l| OqElem::gen_letter(ell, l);
    let delta_letter = |l: Letter| -> Vec<(OqElem, OqElem)> {
        use Letter::*;
        match l {
            A => vec![(gl(A), gl(A)), (gl(B), gl(C))],
            B => vec![(gl(A), gl(B)), (gl(B), gl(D))],
            C => vec![(gl(C), gl(A)), (gl(D), gl(C))],
            D => vec![(gl(C), gl(B)), (gl(D), gl(D))],
        }
    };
    let mut out = TensorElem::zero(ell);
    for (mono, coeff) in &f.terms {
        let mut acc = TensorElem::zero(ell);
        acc.add_term((OqMono::ONE, OqMono::ONE), &Cyclotomic::one(ell));
        for l in mono.letters() {
            let mut next = TensorElem::zero(ell);
            for (x, y) in delta_letter(l) {
                let part = acc.mul_pair(&x, &y);
                for (m, c) in &part.terms {
                    next.add_term(*m, c);
                }
            }
            acc = next;
        }
        for (m, c) in &acc.terms {
            out.add_term(*m, &c.mul(coeff));
        }
    }
    out
}

/// Counit: a, d -> 1 and b, c -> 0.
pub fn counit(f: &OqElem) -> Cyclotomic {
    let mut out = Cyclotomic::zero(f.ell);
    for (m, c) in &f.terms {
        if m.b == 0 && m.c == 0 {
            out = out.add(c);
        }
    }
    out
}

/// Antipode: the algebra antihomomorphism with
/// `S(a) = d, S(b) = -v^-1 b, S(c) = -v c, S(d) = a`.
pub fn antipode(f: &OqElem) -> OqElem {
    let ell = f.ell;
    let s_letter = |l: Letter| -> OqElem {
        use Letter::*;
        match l {
            A => OqElem::gen_letter(ell, D),
            B => OqElem::gen_letter(ell, B).scale(&Cyclotomic::q_pow(ell, -1).neg()),
            C => OqElem::gen_letter(ell, C).scale(&Cyclotomic::q_pow(ell, 1).neg()),
            D => OqElem::gen_letter(ell, A),
        }
    };
    let mut out = OqElem::zero(ell);
    for (mono, coeff) in &f.terms {
        let mut acc = OqElem::one(ell);
        for l in mono.letters().into_iter().rev() {
            acc = acc.mul(&s_letter(l));
        }
        out = out.add(&acc.scale(coeff));
    }
    out
}
