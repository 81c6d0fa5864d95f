//! Sparse Laurent polynomials in one variable `v` with rational coefficients.
//!
//! This is the coefficient ring everything generic-in-`v` lives in: Gaussian
//! integers and binomials, structure constants of the quantum function
//! algebra, and the generic matrices whose exact divisibility by `[j]!`
//! justifies divided-power operators.  The zero polynomial is the empty term
//! map; a nonzero coefficient is never stored for any exponent.

use num::{BigInt, BigRational, One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

pub type Q = BigRational;

pub fn q_int(n: i64) -> Q {
    Q::from(BigInt::from(n))
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Q>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(0, Q::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::monomial(0, q_int(n))
    }

    pub fn from_q(c: Q) -> Self {
        Self::monomial(0, c)
    }

    /// `c * v^k`.
    pub fn monomial(exp: i64, c: Q) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { terms }
    }

    /// `v^k`.
    pub fn v_pow(exp: i64) -> Self {
        Self::monomial(exp, Q::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Q)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: i64) -> Q {
        self.terms.get(&exp).cloned().unwrap_or_else(Q::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn add_term(&mut self, exp: i64, c: &Q) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(Q::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, &(-c.clone()));
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero();
        for (e, c) in self.terms() {
            out.add_term(e, &(-c.clone()));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut out = Self::zero();
        for (e, a) in self.terms() {
            out.add_term(e, &(a * c));
        }
        out
    }

    pub fn mul_v_pow(&self, k: i64) -> Self {
        let mut out = Self::zero();
        for (e, c) in self.terms() {
            out.add_term(e + k, c);
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// The bar involution `v -> v^{-1}`.
    pub fn bar(&self) -> Self {
        let mut out = Self::zero();
        for (e, c) in self.terms() {
            out.add_term(-e, c);
        }
        out
    }

    /// Value at `v = 1` (the classical limit).
    pub fn eval_at_one(&self) -> Q {
        let mut s = Q::zero();
        for (_, c) in self.terms() {
            s += c;
        }
        s
    }

    /// Exact division; returns `None` when `other` does not divide `self`.
    ///
    /// Both operands are shifted to ordinary polynomials, divided with
    /// remainder, and the quotient is accepted only when the remainder
    /// vanishes.  `v`-power units are divided out exactly.
    pub fn exact_div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let shift_self = self.min_exp().unwrap();
        let shift_other = other.min_exp().unwrap();
        let a = self.to_dense_from(shift_self);
        let b = other.to_dense_from(shift_other);
        let (q, r) = super::poly::div_rem(&a, &b);
        if !super::poly::is_zero(&r) {
            return None;
        }
        let mut out = Self::zero();
        for (i, c) in q.iter().enumerate() {
            out.add_term(shift_self - shift_other + i as i64, c);
        }
        Some(out)
    }

    /// Coefficient vector of `self / v^from` as an ordinary polynomial.
    fn to_dense_from(&self, from: i64) -> Vec<Q> {
        let hi = self.max_exp().unwrap();
        let mut out = vec![Q::zero(); (hi - from + 1) as usize];
        for (e, c) in self.terms() {
            out[(e - from) as usize] = c.clone();
        }
        out
    }

    /// JSON form: a list of `[exponent, numerator, denominator]` triples,
    /// ascending in the exponent, integers rendered as decimal strings.
    pub fn to_json(&self) -> serde_json::Value {
        let triples: Vec<serde_json::Value> = self
            .terms()
            .map(|(e, c)| {
                serde_json::json!([e, c.numer().to_string(), c.denom().to_string()])
            })
            .collect();
        serde_json::Value::Array(triples)
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self, String> {
        let arr = value.as_array().ok_or("expected an array of triples")?;
        let mut out = Self::zero();
        for t in arr {
            let t = t.as_array().ok_or("expected [exp, num, den]")?;
            if t.len() != 3 {
                return Err("expected [exp, num, den]".into());
            }
            let e = t[0].as_i64().ok_or("exponent must be an integer")?;
            let numer: BigInt = t[1]
                .as_str()
                .ok_or("numerator must be a string")?
                .parse()
                .map_err(|_| "bad numerator")?;
            let denom: BigInt = t[2]
                .as_str()
                .ok_or("denominator must be a string")?
                .parse()
                .map_err(|_| "bad denominator")?;
            if denom.is_zero() {
                return Err("zero denominator".into());
            }
            out.add_term(e, &Q::new(numer, denom));
        }
        Ok(out)
    }
}

fn fmt_coeff(c: &Q) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for LaurentPoly {
    /// Text grammar: terms in descending exponent order joined by ` + ` /
    /// ` - `, e.g. `v^4 + 2 - v^-2`; the zero polynomial prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coeff_is_one = abs.is_one();
            match (*e, coeff_is_one) {
                (0, _) => write!(f, "{}", fmt_coeff(&abs))?,
                (1, true) => write!(f, "v")?,
                (1, false) => write!(f, "{}*v", fmt_coeff(&abs))?,
                (_, true) => write!(f, "v^{}", e)?,
                (_, false) => write!(f, "{}*v^{}", fmt_coeff(&abs), e)?,
            }
        }
        Ok(())
    }
}

impl LaurentPoly {
    /// Parses the display grammar: `v^4 + 2 - v^-2`, coefficients rational
    /// (`3/2*v^-1`), `*` between coefficient and `v` optional.
    pub fn parse(input: &str) -> Result<Self, String> {
        let mut out = Self::zero();
        let s: Vec<char> = input.chars().collect();
        let mut i = 0usize;
        let n = s.len();
        let skip_ws = |i: &mut usize| {
            while *i < n && s[*i].is_whitespace() {
                *i += 1;
            }
        };
        skip_ws(&mut i);
        if i == n {
            return Err("empty input".into());
        }
        let mut sign = Q::one();
        loop {
            skip_ws(&mut i);
            if i < n && (s[i] == '+' || s[i] == '-') {
                if s[i] == '-' {
                    sign = -sign;
                }
                i += 1;
                skip_ws(&mut i);
                continue;
            }
            if i >= n {
                break;
            }
            // parse one term: [coeff] [*] [v [^exp]]
            let mut coeff = Q::one();
            let mut saw_coeff = false;
            if s[i].is_ascii_digit() {
                let start = i;
                while i < n && (s[i].is_ascii_digit() || s[i] == '/') {
                    i += 1;
                }
                let text: String = s[start..i].iter().collect();
                coeff = parse_rational(&text)?;
                saw_coeff = true;
                skip_ws(&mut i);
                if i < n && s[i] == '*' {
                    i += 1;
                    skip_ws(&mut i);
                }
            } else if s[i] == '(' {
                // parenthesised rational, e.g. (1/2)
                let close = s[i..]
                    .iter()
                    .position(|&c| c == ')')
                    .ok_or("unclosed parenthesis")?
                    + i;
                let text: String = s[i + 1..close].iter().collect();
                let t = text.trim();
                let (sg, t) = if let Some(rest) = t.strip_prefix('-') {
                    (-Q::one(), rest)
                } else {
                    (Q::one(), t)
                };
                coeff = sg * parse_rational(t.trim())?;
                saw_coeff = true;
                i = close + 1;
                skip_ws(&mut i);
                if i < n && s[i] == '*' {
                    i += 1;
                    skip_ws(&mut i);
                }
            }
            let mut exp = 0i64;
            if i < n && s[i] == 'v' {
                i += 1;
                exp = 1;
                if i < n && s[i] == '^' {
                    i += 1;
                    let start = i;
                    if i < n && s[i] == '-' {
                        i += 1;
                    }
                    while i < n && s[i].is_ascii_digit() {
                        i += 1;
                    }
                    let text: String = s[start..i].iter().collect();
                    exp = text.parse().map_err(|_| format!("bad exponent `{}`", text))?;
                }
            } else if !saw_coeff {
                return Err(format!("unexpected character at offset {}", i));
            }
            out.add_term(exp, &(sign.clone() * coeff));
            sign = Q::one();
            skip_ws(&mut i);
            if i >= n {
                break;
            }
            if s[i] != '+' && s[i] != '-' {
                return Err(format!("expected + or - at offset {}", i));
            }
        }
        Ok(out)
    }
}

pub fn parse_rational(text: &str) -> Result<Q, String> {
    if let Some((a, b)) = text.split_once('/') {
        let numer: BigInt = a.trim().parse().map_err(|_| format!("bad numerator `{}`", a))?;
        let denom: BigInt = b.trim().parse().map_err(|_| format!("bad denominator `{}`", b))?;
        if denom.is_zero() {
            return Err("zero denominator".into());
        }
        Ok(Q::new(numer, denom))
    } else {
        let numer: BigInt = text
            .trim()
            .parse()
            .map_err(|_| format!("bad integer `{}`", text))?;
        Ok(Q::from(numer))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_round_trip() {
        let p = LaurentPoly::v_pow(2).add(&LaurentPoly::v_pow(-2));
        let q = LaurentPoly::v_pow(1).sub(&LaurentPoly::v_pow(-1));
        let prod = p.mul(&q);
        assert_eq!(
            prod,
            LaurentPoly::v_pow(3)
                .add(&LaurentPoly::v_pow(-1))
                .sub(&LaurentPoly::v_pow(1))
                .sub(&LaurentPoly::v_pow(-3))
        );
        assert_eq!(prod.exact_div(&q), Some(p.clone()));
        assert_eq!(prod.exact_div(&p), Some(q));
    }

    #[test]
    fn exact_div_rejects_non_divisor() {
        let p = LaurentPoly::v_pow(1).add(&LaurentPoly::one());
        let q = LaurentPoly::v_pow(1).sub(&LaurentPoly::one());
        assert_eq!(p.exact_div(&q), None);
    }

    #[test]
    fn display_and_parse() {
        let p = LaurentPoly::v_pow(4)
            .add(&LaurentPoly::from_int(2))
            .sub(&LaurentPoly::v_pow(-2));
        assert_eq!(p.to_string(), "v^4 + 2 - v^-2");
        assert_eq!(LaurentPoly::parse("v^4 + 2 - v^-2").unwrap(), p);
        assert_eq!(LaurentPoly::parse("3/2*v^-1 - 1").unwrap().to_string(), "-1 + 3/2*v^-1");
        assert!(LaurentPoly::parse("").is_err());
        assert!(LaurentPoly::parse("v^").is_err());
    }

    #[test]
    fn json_round_trip() {
        let p = LaurentPoly::parse("v^4 + 2 - 1/3*v^-2").unwrap();
        let j = p.to_json();
        assert_eq!(LaurentPoly::from_json(&j).unwrap(), p);
    }
}
