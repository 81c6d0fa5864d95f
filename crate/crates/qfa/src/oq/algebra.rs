//! The quantized coordinate algebra of SL(2) in normal form.
//!
//! Generators a, b, c, d (matrix entries of the two-dimensional module, with
//! a the highest-weight coefficient) satisfy
//! `ab = v ba`, `ac = v ca`, `bd = v db`, `cd = v dc`, `bc = cb`,
//! `ad - da = (v - v^-1) bc`, and `ad - v bc = 1`.
//! The determinant relation eliminates mixed `a..d` monomials: a basis is
//! given by `a^m b^k c^h` and `d^l b^k c^h` (l >= 1).  Products are computed
//! over Z[v, v^-1] and can be specialized to any root order afterwards.

use std::collections::BTreeMap;

use crate::coeff::{Cyclotomic, LaurentPoly};

/// A normal-form monomial: `ad > 0` means `a^ad`, `ad < 0` means `d^(-ad)`,
/// then `b^b c^c` (b and c commute).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct OqMono {
    pub ad: i64,
    pub b: u32,
    pub c: u32,
}

/// A single generator letter.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Letter {
    A,
    B,
    C,
    D,
}

impl OqMono {
    pub const ONE: OqMono = OqMono { ad: 0, b: 0, c: 0 };

    pub fn letter(l: Letter) -> Self {
        match l {
            Letter::A => OqMono { ad: 1, b: 0, c: 0 },
            Letter::B => OqMono { ad: 0, b: 1, c: 0 },
            Letter::C => OqMono { ad: 0, b: 0, c: 1 },
            Letter::D => OqMono { ad: -1, b: 0, c: 0 },
        }
    }

    pub fn degree(&self) -> u32 {
        self.ad.unsigned_abs() as u32 + self.b + self.c
    }

    /// Weight for the left translation action (row weight).
    pub fn lweight(&self) -> i64 {
        self.ad + self.b as i64 - self.c as i64
    }

    /// Weight for the right translation action (column weight).
    pub fn rweight(&self) -> i64 {
        self.ad - self.b as i64 + self.c as i64
    }

    /// The monomial as its letter word in normal order.
    pub fn letters(&self) -> Vec<Letter> {
        let mut w = Vec::with_capacity(self.degree() as usize);
        for _ in 0..self.ad.max(0) {
            w.push(Letter::A);
        }
        for _ in 0..(-self.ad).max(0) {
            w.push(Letter::D);
        }
        for _ in 0..self.b {
            w.push(Letter::B);
        }
        for _ in 0..self.c {
            w.push(Letter::C);
        }
        w
    }
}

/// Element with generic Laurent-polynomial coefficients.
#[derive(Clone, PartialEq, Debug, Default)]
pub struct GElem {
    pub terms: BTreeMap<OqMono, LaurentPoly>,
}

impl GElem {
    pub fn zero() -> Self {
        GElem { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(OqMono::ONE, LaurentPoly::one())
    }

    pub fn monomial(m: OqMono, coeff: LaurentPoly) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(m, coeff);
        }
        GElem { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: OqMono, coeff: &LaurentPoly) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(LaurentPoly::zero);
        *entry = entry.add(coeff);
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c);
        }
        out
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = GElem::zero();
        for (m, x) in &self.terms {
            out.add_term(*m, &x.mul(c));
        }
        out
    }

    /// Right-multiply by a single generator letter, re-normalizing.
    pub fn mul_letter(&self, l: Letter) -> Self {
        let mut out = GElem::zero();
        for (m, coeff) in &self.terms {
            for (m2, c2) in mono_mul_letter(*m, l) {
                out.add_term(m2, &coeff.mul(&c2));
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = GElem::zero();
        for (m2, c2) in &other.terms {
            let mut part = GElem::zero();
            part.add_term(*m2, c2);
            // build self * m2 by appending m2's letters to self
            let mut acc = self.clone();
            for l in m2.letters() {
                acc = acc.mul_letter(l);
            }
            for (m, c) in &acc.terms {
                out.add_term(*m, &c.mul(c2));
            }
        }
        out
    }

    pub fn specialize(&self, ell: u32) -> OqElem {
        let mut out = OqElem::zero(ell);
        for (m, c) in &self.terms {
            out.add_term(*m, &Cyclotomic::specialize(c, ell));
        }
        out
    }
}

/// Normal form of (monomial) * (letter), derived from the defining
/// relations; the only non-unit steps are
/// `a^m d = a^(m-1) (1 + v b c)` and `d^l a = d^(l-1) (1 + v^-1 b c)`.
pub fn mono_mul_letter(m: OqMono, l: Letter) -> Vec<(OqMono, LaurentPoly)> {
    let (bk, ch) = (m.b, m.c);
    let tot = (bk + ch) as i64;
    match l {
        Letter::B => vec![(OqMono { ad: m.ad, b: bk + 1, c: ch }, LaurentPoly::one())],
        Letter::C => vec![(OqMono { ad: m.ad, b: bk, c: ch + 1 }, LaurentPoly::one())],
        Letter::A => {
            if m.ad >= 0 {
                // b^k c^h a = v^-(k+h) a b^k c^h
                vec![(
                    OqMono { ad: m.ad + 1, b: bk, c: ch },
                    LaurentPoly::v_pow(-tot),
                )]
            } else {
                // d^l b^k c^h a = v^-(k+h) d^(l-1) (1 + v^-1 b c) b^k c^h
                vec![
                    (
                        OqMono { ad: m.ad + 1, b: bk, c: ch },
                        LaurentPoly::v_pow(-tot),
                    ),
                    (
                        OqMono { ad: m.ad + 1, b: bk + 1, c: ch + 1 },
                        LaurentPoly::v_pow(-tot - 1),
                    ),
                ]
            }
        }
        Letter::D => {
            if m.ad <= 0 {
                // b^k c^h d = v^(k+h) d b^k c^h
                vec![(
                    OqMono { ad: m.ad - 1, b: bk, c: ch },
                    LaurentPoly::v_pow(tot),
                )]
            } else {
                // a^m b^k c^h d = v^(k+h) a^(m-1) (1 + v b c) b^k c^h
                vec![
                    (
                        OqMono { ad: m.ad - 1, b: bk, c: ch },
                        LaurentPoly::v_pow(tot),
                    ),
                    (
                        OqMono { ad: m.ad - 1, b: bk + 1, c: ch + 1 },
                        LaurentPoly::v_pow(tot + 1),
                    ),
                ]
            }
        }
    }
}

/// Element with coefficients in the cyclotomic field at a fixed root order.
#[derive(Clone, PartialEq, Debug)]
pub struct OqElem {
    pub ell: u32,
    pub terms: BTreeMap<OqMono, Cyclotomic>,
}

impl OqElem {
    pub fn zero(ell: u32) -> Self {
        OqElem { ell, terms: BTreeMap::new() }
    }

    pub fn one(ell: u32) -> Self {
        Self::monomial(ell, OqMono::ONE, Cyclotomic::one(ell))
    }

    pub fn gen_letter(ell: u32, l: Letter) -> Self {
        Self::monomial(ell, OqMono::letter(l), Cyclotomic::one(ell))
    }

    pub fn monomial(ell: u32, m: OqMono, coeff: Cyclotomic) -> Self {
        let mut e = Self::zero(ell);
        e.add_term(m, &coeff);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: OqMono, coeff: &Cyclotomic) {
        if coeff.is_zero() {
            return;
        }
        let entry = self
            .terms
            .entry(m)
            .or_insert_with(|| Cyclotomic::zero(self.ell));
        *entry = entry.add(coeff);
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.ell, other.ell);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&Cyclotomic::from_int(self.ell, -1)))
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        let mut out = Self::zero(self.ell);
        for (m, x) in &self.terms {
            out.add_term(*m, &x.mul(c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.ell, other.ell);
        let mut out = Self::zero(self.ell);
        for (m2, c2) in &other.terms {
            // structure constants are computed generically, then specialized
            for (m1, c1) in &self.terms {
                let mut prod = GElem::monomial(*m1, LaurentPoly::one());
                for l in m2.letters() {
                    prod = prod.mul_letter(l);
                }
                for (m, c) in &prod.terms {
                    let coeff = Cyclotomic::specialize(c, self.ell).mul(c1).mul(c2);
                    out.add_term(*m, &coeff);
                }
            }
        }
        out
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(l: Letter) -> GElem {
        GElem::monomial(OqMono::letter(l), LaurentPoly::one())
    }
    fn v(k: i64) -> LaurentPoly {
        LaurentPoly::v_pow(k)
    }

    #[test]
    fn defining_relations() {
        use Letter::*;
        let (a, b, c, d) = (g(A), g(B), g(C), g(D));
        // ab = v ba, ac = v ca, bd = v db, cd = v dc
        assert_eq!(a.mul(&b), b.mul(&a).scale(&v(1)));
        assert_eq!(a.mul(&c), c.mul(&a).scale(&v(1)));
        assert_eq!(b.mul(&d), d.mul(&b).scale(&v(1)));
        assert_eq!(c.mul(&d), d.mul(&c).scale(&v(1)));
        // bc = cb
        assert_eq!(b.mul(&c), c.mul(&b));
        // ad - da = (v - v^-1) bc
        let comm = a.mul(&d).add(&d.mul(&a).scale(&LaurentPoly::from_int(-1)));
        let rhs = b.mul(&c).scale(&v(1).sub(&v(-1)));
        assert_eq!(comm, rhs);
        // ad - v bc = 1
        let det = a.mul(&d).add(&b.mul(&c).scale(&v(1)).scale(&LaurentPoly::from_int(-1)));
        assert_eq!(det, GElem::one());
    }

    #[test]
    fn associativity_random_words() {
        use Letter::*;
        // deterministic pseudo-random letter words; check (xy)z = x(yz)
        let letters = [A, B, C, D];
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..30 {
            let word: Vec<Letter> =
                (0..6).map(|_| letters[(next() % 4) as usize]).collect();
            let factor = |w: &[Letter]| {
                let mut e = GElem::one();
                for &l in w {
                    e = e.mul_letter(l);
                }
                e
            };
            let (x, y, z) = (factor(&word[0..2]), factor(&word[2..4]), factor(&word[4..6]));
            assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        }
    }

    #[test]
    fn degree_parity_preserved() {
        use Letter::*;
        let x = g(A).mul(&g(D)); // 1 + v bc: degrees 0 and 2
        for m in x.terms.keys() {
            assert_eq!(m.degree() % 2, 0);
        }
        let y = g(D).mul(&g(D)).mul(&g(A)); // degree 3 and 1 terms
        for m in y.terms.keys() {
            assert_eq!(m.degree() % 2, 1);
        }
    }

    #[test]
    fn specialization_roundtrip() {
        use Letter::*;
        let x = g(A).mul(&g(D)).mul(&g(B));
        let s = x.specialize(3);
        assert!(!s.is_zero());
        // multiply specialized elements directly and compare
        let ga = OqElem::gen_letter(3, A);
        let gd = OqElem::gen_letter(3, D);
        let gb = OqElem::gen_letter(3, B);
        assert_eq!(ga.mul(&gd).mul(&gb), s);
    }
}
