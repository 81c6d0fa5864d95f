//! The cyclotomic field Q(q) = Q[v] / Phi_ell(v) for an odd prime-free odd
//! integer ell >= 3, with `q` the class of `v`.  Elements are kept eagerly
//! reduced: coefficient vectors of length phi(ell), no lazy normal forms.

use super::laurent::{LaurentPoly, Q};
use super::poly::{self, Poly};
use num::{One, Zero};
use once_cell::sync::Lazy;
use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

/// The ell-th cyclotomic polynomial, computed recursively as
/// `(v^ell - 1) / prod_{d | ell, d < ell} Phi_d(v)`.
pub fn cyclotomic_poly(ell: u32) -> Poly {
    assert!(ell >= 1, "cyclotomic polynomial needs ell >= 1");
    static CACHE: Lazy<Mutex<HashMap<u32, Poly>>> = Lazy::new(|| Mutex::new(HashMap::new()));
    if let Some(p) = CACHE.lock().unwrap().get(&ell) {
        return p.clone();
    }
    let result = if ell == 1 {
        vec![-Q::one(), Q::one()]
    } else {
        let mut div = vec![Q::one()];
        for d in 1..ell {
            if ell % d == 0 {
                div = poly::mul(&div, &cyclotomic_poly(d));
            }
        }
        let (q, r) = poly::div_rem(&poly::x_pow_minus_one(ell), &div);
        assert!(poly::is_zero(&r), "cyclotomic recursion must divide exactly");
        q
    };
    CACHE.lock().unwrap().insert(ell, result.clone());
    result
}

pub fn euler_phi(ell: u32) -> u32 {
    (1..=ell).filter(|k| gcd(*k, ell) == 1).count() as u32
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Reduction table: `v^k mod Phi_ell` for `0 <= k < ell`, as coefficient
/// vectors of length phi(ell).  Since `v^ell = 1` in the quotient, every
/// power reduces through this table.
fn power_table(ell: u32) -> Vec<Vec<Q>> {
    static CACHE: Lazy<Mutex<HashMap<u32, Vec<Vec<Q>>>>> =
        Lazy::new(|| Mutex::new(HashMap::new()));
    if let Some(t) = CACHE.lock().unwrap().get(&ell) {
        return t.clone();
    }
    let phi = cyclotomic_poly(ell);
    let d = poly::deg(&phi).unwrap();
    let mut table = Vec::with_capacity(ell as usize);
    let mut cur: Poly = vec![Q::one()];
    for _ in 0..ell {
        let mut row = vec![Q::zero(); d];
        for (i, c) in cur.iter().enumerate() {
            row[i] = c.clone();
        }
        table.push(row);
        // multiply by v and reduce
        let mut next = vec![Q::zero()];
        next.extend(cur.iter().cloned());
        let (_, r) = poly::div_rem(&next, &phi);
        cur = r;
    }
    CACHE.lock().unwrap().insert(ell, table.clone());
    table
}

/// An element of Q(q), eagerly reduced modulo Phi_ell.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cyclotomic {
    ell: u32,
    /// Length phi(ell); coefficient of q^i at index i.
    coeffs: Vec<Q>,
}

impl Cyclotomic {
    pub fn zero(ell: u32) -> Self {
        Cyclotomic {
            ell,
            coeffs: vec![Q::zero(); euler_phi(ell) as usize],
        }
    }

    pub fn one(ell: u32) -> Self {
        let mut z = Self::zero(ell);
        z.coeffs[0] = Q::one();
        z
    }

    pub fn from_q(ell: u32, c: Q) -> Self {
        let mut z = Self::zero(ell);
        z.coeffs[0] = c;
        z
    }

    pub fn from_int(ell: u32, n: i64) -> Self {
        Self::from_q(ell, super::laurent::q_int(n))
    }

    /// `q^k` for any integer `k` (exponents reduce mod ell).
    pub fn q_pow(ell: u32, k: i64) -> Self {
        let k = k.rem_euclid(ell as i64) as usize;
        Cyclotomic {
            ell,
            coeffs: power_table(ell)[k].clone(),
        }
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn check(&self, other: &Self) {
        assert_eq!(
            self.ell, other.ell,
            "mixing cyclotomic fields of different orders"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Cyclotomic {
            ell: self.ell,
            coeffs,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Cyclotomic {
            ell: self.ell,
            coeffs,
        }
    }

    pub fn neg(&self) -> Self {
        Cyclotomic {
            ell: self.ell,
            coeffs: self.coeffs.iter().map(|a| -a.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let table = power_table(self.ell);
        let d = self.coeffs.len();
        let mut conv = vec![Q::zero(); 2 * d];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                conv[i + j] += a * b;
            }
        }
        let mut out = Self::zero(self.ell);
        for (k, c) in conv.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k < d {
                out.coeffs[k] += c;
            } else {
                let row = &table[k % self.ell as usize];
                for (i, r) in row.iter().enumerate() {
                    if !r.is_zero() {
                        out.coeffs[i] += &c * r;
                    }
                }
            }
        }
        out
    }

    pub fn scale(&self, c: &Q) -> Self {
        Cyclotomic {
            ell: self.ell,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// Phi_ell; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let phi = cyclotomic_poly(self.ell);
        let mut a: Poly = self.coeffs.clone();
        poly::trim(&mut a);
        let (g, s, _) = poly::extended_gcd(&a, &phi);
        assert_eq!(
            poly::deg(&g),
            Some(0),
            "a nonzero element of a field must be invertible"
        );
        let ginv = Q::one() / g[0].clone();
        let s = poly::scale(&s, &ginv);
        let (_, r) = poly::div_rem(&s, &phi);
        let mut out = Self::zero(self.ell);
        for (i, c) in r.into_iter().enumerate() {
            out.coeffs[i] = c;
        }
        Some(out)
    }

    pub fn pow(&self, n: i64) -> Self {
        if n < 0 {
            return self
                .inv()
                .expect("negative power of zero")
                .pow(-n);
        }
        let mut out = Self::one(self.ell);
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// The image of a Laurent polynomial under `v -> q`.
    pub fn specialize(p: &LaurentPoly, ell: u32) -> Self {
        let mut out = Self::zero(ell);
        for (e, c) in p.terms() {
            out = out.add(&Self::q_pow(ell, e).scale(c));
        }
        out
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut p = LaurentPoly::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            p.add_term(i as i64, c);
        }
        if p.is_zero() {
            return write!(f, "0");
        }
        write!(f, "{}", p.to_string().replace('v', "q"))
    }
}
