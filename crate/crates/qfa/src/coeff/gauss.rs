//! Gaussian (balanced q-analog) integers, factorials, and binomial
//! coefficients as Laurent polynomials in `v`, with root-of-unity
//! specializations.
//!
//! Conventions: `[n] = (v^n - v^-n)/(v - v^-1)`, `[m]! = [m][m-1]...[1]`,
//! and `[n m] = prod_{j=1}^{m} (v^{n-j+1} - v^{-(n-j+1)}) / (v^j - v^-j)`,
//! valid for any integer `n` and m >= 0.

use super::cyclotomic::Cyclotomic;
use super::laurent::LaurentPoly;
use super::rational_fn::RationalFn;

/// `[n] = v^{n-1} + v^{n-3} + ... + v^{1-n}` (antisymmetric in `n`).
pub fn gauss_int(n: i64) -> LaurentPoly {
    if n == 0 {
        return LaurentPoly::zero();
    }
    if n < 0 {
        return gauss_int(-n).neg();
    }
    let mut out = LaurentPoly::zero();
    let mut e = n - 1;
    while e >= 1 - n {
        out.add_term(e, &num::BigRational::from(num::BigInt::from(1)));
        e -= 2;
    }
    out
}

/// `[m]!` for m >= 0.
pub fn gauss_factorial(m: u32) -> LaurentPoly {
    let mut out = LaurentPoly::one();
    for j in 1..=m as i64 {
        out = out.mul(&gauss_int(j));
    }
    out
}

/// `[n m]` for any integer `n` and m >= 0, always a Laurent polynomial.
///
/// Computed as `prod_{j=1}^m [n-j+1]` divided exactly by `[m]!`; the
/// division is asserted to be exact rather than trusted.
pub fn gauss_binom(n: i64, m: u32) -> LaurentPoly {
    let mut num = LaurentPoly::one();
    for j in 1..=m as i64 {
        num = num.mul(&gauss_int(n - j + 1));
    }
    num.exact_div(&gauss_factorial(m))
        .expect("a Gaussian binomial is integral over Z[v, v^-1]")
}

/// `[n m]` computed through the rational-function field, as an independent
/// cross-check oracle: the product of ratios must collapse to a Laurent
/// polynomial.
pub fn gauss_binom_rational(n: i64, m: u32) -> Option<LaurentPoly> {
    let mut acc = RationalFn::one();
    for j in 1..=m as i64 {
        let num = LaurentPoly::v_pow(n - j + 1).sub(&LaurentPoly::v_pow(-(n - j + 1)));
        let den = LaurentPoly::v_pow(j).sub(&LaurentPoly::v_pow(-j));
        let factor = RationalFn::new(&num, &den).ok()?;
        acc = acc.mul(&factor);
    }
    acc.as_laurent().cloned()
}

/// `[n]` at `v = q`, a primitive ell-th root of unity.
pub fn gauss_int_at(n: i64, ell: u32) -> Cyclotomic {
    Cyclotomic::specialize(&gauss_int(n), ell)
}

/// `[m]!` at `v = q`.
pub fn gauss_factorial_at(m: u32, ell: u32) -> Cyclotomic {
    Cyclotomic::specialize(&gauss_factorial(m), ell)
}

/// `[n m]` at `v = q`.
pub fn gauss_binom_at(n: i64, m: u32, ell: u32) -> Cyclotomic {
    Cyclotomic::specialize(&gauss_binom(n, m), ell)
}
