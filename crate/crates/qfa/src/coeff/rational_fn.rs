//! Rational functions in `v` over Q, kept in lowest terms with a monic
//! denominator of minimal degree.  Used by generic-parameter oracles that
//! need division before any specialization happens.

use super::laurent::{LaurentPoly, Q};
use super::poly::{self, Poly};
use num::{One, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalFn {
    /// Numerator, a Laurent polynomial (carries the `v`-power unit).
    num: LaurentPoly,
    /// Denominator, an ordinary monic polynomial with nonzero constant term.
    den: Poly,
}

fn poly_gcd(a: &Poly, b: &Poly) -> Poly {
    let (g, _, _) = poly::extended_gcd(a, b);
    g
}

fn laurent_from_poly(p: &Poly) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for (i, c) in p.iter().enumerate() {
        out.add_term(i as i64, c);
    }
    out
}

impl RationalFn {
    pub fn zero() -> Self {
        RationalFn {
            num: LaurentPoly::zero(),
            den: vec![Q::one()],
        }
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentPoly::one())
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        RationalFn {
            num: p,
            den: vec![Q::one()],
        }
    }

    pub fn new(num: &LaurentPoly, den: &LaurentPoly) -> Result<Self, String> {
        if den.is_zero() {
            return Err("zero denominator".into());
        }
        let mut out = Self::from_laurent(num.clone());
        // divide by den via multiplication with its reciprocal
        let shift = den.min_exp().unwrap();
        let mut d = vec![Q::zero(); (den.max_exp().unwrap() - shift + 1) as usize];
        for (e, c) in den.terms() {
            d[(e - shift) as usize] = c.clone();
        }
        out.num = out.num.mul_v_pow(-shift);
        out.den = poly::mul(&out.den, &d);
        out.reduce();
        Ok(out)
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = vec![Q::one()];
            return;
        }
        // strip v-powers out of the denominator (units)
        let k = self.den.iter().position(|c| !c.is_zero()).unwrap();
        if k > 0 {
            self.den.drain(0..k);
            self.num = self.num.mul_v_pow(-(k as i64));
        }
        let shift = self.num.min_exp().unwrap();
        let mut n = vec![Q::zero(); (self.num.max_exp().unwrap() - shift + 1) as usize];
        for (e, c) in self.num.terms() {
            n[(e - shift) as usize] = c.clone();
        }
        let g = poly_gcd(&n, &self.den);
        if poly::deg(&g) > Some(0) {
            let (n2, r1) = poly::div_rem(&n, &g);
            let (d2, r2) = poly::div_rem(&self.den, &g);
            debug_assert!(poly::is_zero(&r1) && poly::is_zero(&r2));
            n = n2;
            self.den = d2;
        }
        // normalize the denominator to be monic
        let lead = self.den[poly::deg(&self.den).unwrap()].clone();
        if !lead.is_one() {
            let inv = Q::one() / lead;
            self.den = poly::scale(&self.den, &inv);
            n = poly::scale(&n, &inv);
        }
        self.num = laurent_from_poly(&n).mul_v_pow(shift);
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        let num = self
            .num
            .mul(&laurent_from_poly(&other.den))
            .add(&other.num.mul(&laurent_from_poly(&self.den)));
        let mut out = RationalFn {
            num,
            den: poly::mul(&self.den, &other.den),
        };
        out.reduce();
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RationalFn {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = RationalFn {
            num: self.num.mul(&other.num),
            den: poly::mul(&self.den, &other.den),
        };
        out.reduce();
        out
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let den_l = laurent_from_poly(&self.den);
        Some(Self::new(&den_l, &self.num).expect("nonzero numerator"))
    }

    pub fn div(&self, other: &Self) -> Option<Self> {
        Some(self.mul(&other.inv()?))
    }

    /// When the denominator is 1, the underlying Laurent polynomial.
    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        if poly::deg(&self.den) == Some(0) {
            Some(&self.num)
        } else {
            None
        }
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(p) = self.as_laurent() {
            write!(f, "{}", p)
        } else {
            write!(f, "({}) / ({})", self.num, laurent_from_poly(&self.den))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(s: &str) -> LaurentPoly {
        LaurentPoly::parse(s).unwrap()
    }

    #[test]
    fn cancellation_to_polynomial() {
        // (v^2 - v^-2) / (v - v^-1) = v + v^-1
        let r = RationalFn::new(&l("v^2 - v^-2"), &l("v - v^-1")).unwrap();
        assert_eq!(r.as_laurent(), Some(&l("v + v^-1")));
    }

    #[test]
    fn field_operations() {
        let a = RationalFn::new(&l("1"), &l("v - 1")).unwrap();
        let b = RationalFn::new(&l("1"), &l("v + 1")).unwrap();
        let s = a.add(&b); // 2v / (v^2 - 1)
        let expected = RationalFn::new(&l("2*v"), &l("v^2 - 1")).unwrap();
        assert_eq!(s, expected);
        assert_eq!(s.mul(&s.inv().unwrap()), RationalFn::one());
        assert!(RationalFn::zero().inv().is_none());
        assert!(RationalFn::new(&l("1"), &l("0")).is_err());
    }
}
