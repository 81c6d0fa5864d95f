//! Dense polynomials over Q, used for cyclotomic polynomials and the
//! extended Euclidean algorithm behind field inversion.  A polynomial is a
//! coefficient vector `c[0] + c[1] x + ...` with no trailing zeros.

use super::laurent::{q_int, Q};
use num::{One, Zero};

pub type Poly = Vec<Q>;

pub fn trim(p: &mut Poly) {
    while let Some(last) = p.last() {
        if last.is_zero() {
            p.pop();
        } else {
            break;
        }
    }
}

pub fn is_zero(p: &Poly) -> bool {
    p.iter().all(|c| c.is_zero())
}

pub fn deg(p: &Poly) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub fn mul(a: &Poly, b: &Poly) -> Poly {
    if is_zero(a) || is_zero(b) {
        return vec![];
    }
    let mut out = vec![Q::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            if cb.is_zero() {
                continue;
            }
            out[i + j] += ca * cb;
        }
    }
    trim(&mut out);
    out
}

pub fn add(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![Q::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    trim(&mut out);
    out
}

pub fn sub(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![Q::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    trim(&mut out);
    out
}

pub fn scale(a: &Poly, c: &Q) -> Poly {
    if c.is_zero() {
        return vec![];
    }
    a.iter().map(|x| x * c).collect()
}

/// Division with remainder; the divisor must be nonzero.
pub fn div_rem(a: &Poly, b: &Poly) -> (Poly, Poly) {
    let db = deg(b).expect("division by the zero polynomial");
    let mut rem = a.clone();
    trim(&mut rem);
    let mut quot: Poly = vec![];
    let lead = b[db].clone();
    while let Some(dr) = deg(&rem) {
        if dr < db {
            break;
        }
        let c = &rem[dr] / &lead;
        let shift = dr - db;
        if quot.len() <= shift {
            quot.resize(shift + 1, Q::zero());
        }
        quot[shift] = c.clone();
        for (j, cb) in b.iter().enumerate() {
            if !cb.is_zero() {
                let delta = &c * cb;
                rem[j + shift] -= delta;
            }
        }
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

/// Extended Euclid: returns `(g, s, t)` with `s a + t b = g`, `g` monic
/// (or zero when both inputs are zero).
pub fn extended_gcd(a: &Poly, b: &Poly) -> (Poly, Poly, Poly) {
    let mut r0 = a.clone();
    let mut r1 = b.clone();
    trim(&mut r0);
    trim(&mut r1);
    let mut s0: Poly = vec![Q::one()];
    let mut s1: Poly = vec![];
    let mut t0: Poly = vec![];
    let mut t1: Poly = vec![Q::one()];
    while !is_zero(&r1) {
        let (q, r) = div_rem(&r0, &r1);
        let s = sub(&s0, &mul(&q, &s1));
        let t = sub(&t0, &mul(&q, &t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
        t0 = t1;
        t1 = t;
    }
    if let Some(d) = deg(&r0) {
        let lead = r0[d].clone();
        let inv = Q::one() / lead;
        r0 = scale(&r0, &inv);
        s0 = scale(&s0, &inv);
        t0 = scale(&t0, &inv);
    }
    (r0, s0, t0)
}

/// `x^n - 1`.
pub fn x_pow_minus_one(n: u32) -> Poly {
    let mut p = vec![Q::zero(); n as usize + 1];
    p[0] = -Q::one();
    p[n as usize] = Q::one();
    p
}

pub fn constant(c: i64) -> Poly {
    let mut p = vec![q_int(c)];
    trim(&mut p);
    p
}
