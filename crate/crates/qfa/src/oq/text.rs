//! Text form for coordinate-algebra elements:
//! `a^2*b - (1/2)q^-1*c*d` style, with `q` powers in coefficients and
//! parentheses for multi-term coefficients.

use std::fmt::Write as _;

use num::{BigRational, Zero};

use crate::coeff::{Cyclotomic, Q};
use crate::oq::algebra::{Letter, OqElem, OqMono};

fn mono_text(m: &OqMono) -> String {
    if *m == OqMono::ONE {
        return "1".to_string();
    }
    let mut parts: Vec<String> = Vec::new();
    let mut push = |sym: &str, e: u32| {
        if e == 1 {
            parts.push(sym.to_string());
        } else if e > 1 {
            parts.push(format!("{sym}^{e}"));
        }
    };
    if m.ad > 0 {
        push("a", m.ad as u32);
    }
    if m.ad < 0 {
        push("d", (-m.ad) as u32);
    }
    push("b", m.b);
    push("c", m.c);
    parts.join("*")
}

/// A cyclotomic coefficient as `(sign, text, needs_star)`; single
/// q-monomials render inline, anything longer is parenthesized.
fn coeff_text(c: &Cyclotomic) -> (bool, String) {
    let nonzero: Vec<(usize, &Q)> = c
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .collect();
    if nonzero.len() == 1 {
        let (k, r) = nonzero[0];
        let negative = r < &Q::from_integer(0.into());
        let rabs = if negative { -r.clone() } else { r.clone() };
        let mut s = String::new();
        let rat = rational_text(&rabs);
        if k == 0 {
            s.push_str(&rat);
        } else {
            if rabs != Q::from_integer(1.into()) {
                let _ = write!(s, "({rat})");
            }
            if k == 1 {
                s.push('q');
            } else {
                let _ = write!(s, "q^{k}");
            }
        }
        (negative, s)
    } else {
        (false, format!("({c})"))
    }
}

fn rational_text(r: &Q) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn display(f: &OqElem) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in f.terms.iter().enumerate() {
        let (neg, ctext) = coeff_text(c);
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mtext = mono_text(m);
        let coeff_is_one = ctext == "1";
        if coeff_is_one {
            out.push_str(&mtext);
        } else if mtext == "1" {
            out.push_str(&ctext);
        } else {
            let _ = write!(out, "{ctext}*{mtext}");
        }
    }
    out
}

struct Parser<'a> {
    ell: u32,
    chars: std::iter::Peekable<std::str::Chars<'a>>,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while matches!(self.chars.peek(), Some(c) if c.is_whitespace()) {
            self.chars.next();
        }
    }

    fn element(&mut self) -> Result<OqElem, String> {
        let mut out;
        self.skip_ws();
        let mut sign = 1i64;
        if matches!(self.chars.peek(), Some('-')) {
            self.chars.next();
            sign = -1;
        } else if matches!(self.chars.peek(), Some('+')) {
            self.chars.next();
        }
        out = self.term()?.scale(&Cyclotomic::from_int(self.ell, sign));
        loop {
            self.skip_ws();
            match self.chars.peek() {
                Some('+') => {
                    self.chars.next();
                    let t = self.term()?;
                    out = out.add(&t);
                }
                Some('-') => {
                    self.chars.next();
                    let t = self.term()?;
                    out = out.sub(&t);
                }
                _ => break,
            }
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<OqElem, String> {
        let mut out = OqElem::one(self.ell);
        let mut first = true;
        loop {
            self.skip_ws();
            if matches!(self.chars.peek(), Some('*')) {
                self.chars.next();
                self.skip_ws();
            }
            match self.chars.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let r = self.rational()?;
                    out = out.scale(&Cyclotomic::from_q(self.ell, r));
                }
                Some('q') => {
                    self.chars.next();
                    let e = self.exponent()?;
                    out = out.scale(&Cyclotomic::q_pow(self.ell, e));
                }
                Some(&l @ ('a' | 'b' | 'c' | 'd')) => {
                    self.chars.next();
                    let e = self.exponent()?;
                    if e < 0 {
                        return Err("generator exponents must be nonnegative".into());
                    }
                    let letter = match l {
                        'a' => Letter::A,
                        'b' => Letter::B,
                        'c' => Letter::C,
                        _ => Letter::D,
                    };
                    for _ in 0..e {
                        out = out.mul(&OqElem::gen_letter(self.ell, letter));
                    }
                }
                Some('(') => {
                    self.chars.next();
                    let inner = self.element()?;
                    self.skip_ws();
                    if self.chars.next() != Some(')') {
                        return Err("expected closing parenthesis".into());
                    }
                    out = out.mul(&inner);
                }
                _ => {
                    if first {
                        return Err("expected a term".into());
                    }
                    break;
                }
            }
            first = false;
        }
        Ok(out)
    }

    fn exponent(&mut self) -> Result<i64, String> {
        if matches!(self.chars.peek(), Some('^')) {
            self.chars.next();
            let mut sign = 1i64;
            if matches!(self.chars.peek(), Some('-')) {
                self.chars.next();
                sign = -1;
            }
            let n = self.digits()?;
            Ok(sign * n)
        } else {
            Ok(1)
        }
    }

    fn digits(&mut self) -> Result<i64, String> {
        let mut s = String::new();
        while matches!(self.chars.peek(), Some(c) if c.is_ascii_digit()) {
            s.push(self.chars.next().unwrap());
        }
        s.parse().map_err(|_| "expected digits".to_string())
    }

    fn rational(&mut self) -> Result<Q, String> {
        let n = self.digits()?;
        if matches!(self.chars.peek(), Some('/')) {
            self.chars.next();
            let d = self.digits()?;
            if d == 0 {
                return Err("zero denominator".into());
            }
            Ok(BigRational::new(n.into(), d.into()))
        } else {
            Ok(Q::from_integer(n.into()))
        }
    }
}

impl std::fmt::Display for OqElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&display(self))
    }
}

pub fn parse(ell: u32, s: &str) -> Result<OqElem, String> {
    let mut p = Parser { ell, chars: s.chars().peekable() };
    let e = p.element()?;
    p.skip_ws();
    if p.chars.peek().is_some() {
        return Err(format!("trailing input: {}", p.chars.collect::<String>()));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_normalize() {
        // products re-normalize: a*d = 1 + q*b*c
        let e = parse(3, "a*d").unwrap();
        assert_eq!(display(&e), "1 + q*b*c");
        // da = 1 + q^-1 bc
        let e = parse(3, "d*a").unwrap();
        let expected = parse(3, "1 + q^-1*b*c").unwrap();
        assert_eq!(e, expected);
    }

    #[test]
    fn grammar_sample() {
        let e = parse(5, "a^2*b - (1/2)q^-1*c*d").unwrap();
        assert_eq!(e.terms.len(), 2);
        let rt = parse(5, &display(&e)).unwrap();
        assert_eq!(rt, e);
    }

    #[test]
    fn roundtrip_assorted() {
        for s in [
            "1",
            "0 + a",
            "b^2*c - d",
            "(2/3)*a^3 + q^2*b - (q + q^-1)*c",
            "d^2*b*c + 7",
        ] {
            let e = parse(3, s).unwrap();
            let rt = parse(3, &display(&e)).unwrap();
            assert_eq!(rt, e, "roundtrip of {s}");
        }
    }
}
