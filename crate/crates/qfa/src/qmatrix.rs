//! Generic-coefficient quantum matrix algebra for SL(n): words in the
//! generators `X[i,j]` are straightened onto the normal-form basis (exponent
//! matrices with at least one zero diagonal entry) using the four
//! commutation families and the quantum determinant relation.
//!
//! Straightening brings adjacent out-of-order factors into row-major order;
//! a fully sorted monomial whose diagonal exponents are all positive has one
//! copy of each diagonal generator commuted to the front (corrections are
//! re-queued) and the determinant relation, solved for the ordered diagonal
//! product, drops the total degree by `n`.  Confluence of the combined
//! system is tested empirically, not proven; a step budget guards against
//! non-termination.

use std::collections::BTreeMap;

use num::BigRational;

use crate::coeff::{LaurentPoly, Q};

/// A generator index pair, 1-based: `(row, column)`.
pub type Pair = (u8, u8);

/// A word in the generators; sorted words in row-major order with at least
/// one zero diagonal exponent are the normal-form basis.
pub type Word = Vec<Pair>;

/// An element as a combination of normal-form words.
#[derive(Clone, Debug, PartialEq)]
pub struct QMatElement {
    pub n: u8,
    pub terms: BTreeMap<Word, LaurentPoly>,
}

impl QMatElement {
    pub fn zero(n: u8) -> Self {
        QMatElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: u8) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Vec::new(), LaurentPoly::one());
        QMatElement { n, terms }
    }

    pub fn generator(n: u8, i: u8, j: u8) -> Self {
        assert!(1 <= i && i <= n && 1 <= j && j <= n);
        let mut terms = BTreeMap::new();
        terms.insert(vec![(i, j)], LaurentPoly::one());
        QMatElement { n, terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (w, c) in &other.terms {
            add_term(&mut out.terms, w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (w, c) in &other.terms {
            add_term(&mut out.terms, w.clone(), c.neg());
        }
        out
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut terms = BTreeMap::new();
        for (w, x) in &self.terms {
            let p = x.mul(c);
            if !p.is_zero() {
                terms.insert(w.clone(), p);
            }
        }
        QMatElement { n: self.n, terms }
    }

    /// Product by concatenation followed by reduction to normal form.
    pub fn mul(&self, other: &Self) -> Result<Self, String> {
        assert_eq!(self.n, other.n);
        let mut raw: Vec<(Word, LaurentPoly)> = Vec::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                raw.push((w, ca.mul(cb)));
            }
        }
        reduce_terms(self.n, raw)
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(|w| w.len()).max().unwrap_or(0)
    }
}

fn add_term(terms: &mut BTreeMap<Word, LaurentPoly>, w: Word, c: LaurentPoly) {
    if c.is_zero() {
        return;
    }
    let entry = terms.entry(w).or_insert_with(LaurentPoly::zero);
    *entry = entry.add(&c);
    let zero = entry.is_zero();
    if zero {
        // remove to keep supports canonical
        let key: Vec<Word> = terms
            .iter()
            .filter(|(_, v)| v.is_zero())
            .map(|(k, _)| k.clone())
            .collect();
        for k in key {
            terms.remove(&k);
        }
    }
}

/// Rewrite the adjacent pair `a b` as a combination of `b a` (and one
/// correction word when the factors sit in strictly increasing or strictly
/// decreasing position): returns the coefficient of `b a` and the optional
/// correction `(word, coefficient)`.
fn swap_pair(a: Pair, b: Pair) -> (LaurentPoly, Option<(Vec<Pair>, LaurentPoly)>) {
    let (l, i) = a;
    let (m, j) = b;
    if a == b {
        return (LaurentPoly::one(), None);
    }
    let vv = LaurentPoly::v_pow(1).sub(&LaurentPoly::v_pow(-1));
    if l == m || i == j {
        // same row or same column: smaller factor first carries v
        if (l, i) < (m, j) {
            (LaurentPoly::v_pow(1), None)
        } else {
            (LaurentPoly::v_pow(-1), None)
        }
    } else if (l < m) == (i > j) {
        // opposite orders in rows and columns: the factors commute
        (LaurentPoly::one(), None)
    } else if l < m {
        // strictly increasing: X[l,i] X[m,j] = X[m,j] X[l,i] + (v - v^-1) X[l,j] X[m,i]
        (LaurentPoly::one(), Some((vec![(l, j), (m, i)], vv)))
    } else {
        // strictly decreasing: the increasing relation read backwards
        (LaurentPoly::one(), Some((vec![(m, i), (l, j)], vv.neg())))
    }
}

/// All permutation words of the determinant relation with their signs:
/// `sum_sigma (-v)^(inversions) X[sigma(1),1] ... X[sigma(n),n] = 1`.
fn determinant_terms(n: u8) -> Vec<(Word, LaurentPoly)> {
    let mut perms = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for p in &perms {
            for r in 1..=n {
                if !p.contains(&r) {
                    let mut q = p.clone();
                    q.push(r);
                    next.push(q);
                }
            }
        }
        perms = next;
    }
    perms
        .into_iter()
        .map(|p| {
            let mut inv = 0i64;
            for x in 0..p.len() {
                for y in (x + 1)..p.len() {
                    if p[x] > p[y] {
                        inv += 1;
                    }
                }
            }
            let word: Word = p
                .iter()
                .enumerate()
                .map(|(col, &row)| (row, col as u8 + 1))
                .collect();
            let mut c = LaurentPoly::v_pow(inv);
            if inv % 2 == 1 {
                c = c.neg();
            }
            (word, c)
        })
        .collect()
}

fn first_disorder(w: &Word) -> Option<usize> {
    (0..w.len().saturating_sub(1)).find(|&k| w[k] > w[k + 1])
}

fn diagonal_positions(n: u8, w: &Word) -> Option<Vec<usize>> {
    // for a sorted word: position of one copy of each diagonal generator
    let mut out = Vec::with_capacity(n as usize);
    for d in 1..=n {
        out.push(w.iter().position(|&p| p == (d, d))?);
    }
    Some(out)
}

/// Whether a word lies in the normal-form basis: non-decreasing and missing
/// at least one diagonal generator.
pub fn in_normal_basis(n: u8, w: &Word) -> bool {
    first_disorder(w).is_none() && diagonal_positions(n, w).is_none()
}

/// Seeded sampler of small reduced elements, for cross-checks.
pub fn random_element(n: u8, rng: &mut impl rand::Rng) -> QMatElement {
    let mut raw = Vec::new();
    let terms = rng.gen_range(1..=2);
    for _ in 0..terms {
        let len = rng.gen_range(0..=3);
        let w: Word = (0..len)
            .map(|_| (rng.gen_range(1..=n), rng.gen_range(1..=n)))
            .collect();
        let c = LaurentPoly::monomial(
            rng.gen_range(-2..=2),
            Q::from_integer(rng.gen_range(-3..=3i64).into()),
        );
        raw.push((w, c));
    }
    reduce_terms(n, raw).expect("small random elements reduce within budget")
}

const STEP_BUDGET: usize = 2_000_000;

/// Reduce a combination of words to the normal-form basis.
pub fn reduce_terms(
    n: u8,
    raw: Vec<(Word, LaurentPoly)>,
) -> Result<QMatElement, String> {
    let det = determinant_terms(n);
    let mut out: BTreeMap<Word, LaurentPoly> = BTreeMap::new();
    let mut queue: Vec<(Word, LaurentPoly)> = raw;
    let mut steps = 0usize;
    while let Some((mut w, mut c)) = queue.pop() {
        if c.is_zero() {
            continue;
        }
        loop {
            steps += 1;
            if steps > STEP_BUDGET {
                return Err("reduction step budget exceeded".to_string());
            }
            if let Some(k) = first_disorder(&w) {
                let (coef, corr) = swap_pair(w[k], w[k + 1]);
                if let Some((pair, cc)) = corr {
                    let mut u = w.clone();
                    u[k] = pair[0];
                    u[k + 1] = pair[1];
                    queue.push((u, c.mul(&cc)));
                }
                w.swap(k, k + 1);
                c = c.mul(&coef);
                continue;
            }
            // sorted; eliminate the determinant if every diagonal exponent
            // is positive
            let Some(pos) = diagonal_positions(n, &w) else {
                add_term(&mut out, w, c);
                break;
            };
            // commute one copy of each diagonal generator to the front, in
            // order, re-queueing the corrections produced along the way
            for (d, &p) in pos.iter().enumerate() {
                let mut at = p;
                while at > d {
                    steps += 1;
                    if steps > STEP_BUDGET {
                        return Err("reduction step budget exceeded".to_string());
                    }
                    let (coef, corr) = swap_pair(w[at - 1], w[at]);
                    if let Some((pair, cc)) = corr {
                        let mut u = w.clone();
                        u[at - 1] = pair[0];
                        u[at] = pair[1];
                        queue.push((u, c.mul(&cc)));
                    }
                    w.swap(at - 1, at);
                    c = c.mul(&coef);
                    at -= 1;
                }
            }
            // now w = X[1,1] X[2,2] ... X[n,n] rest; substitute the relation
            let rest: Word = w[n as usize..].to_vec();
            queue.push((rest.clone(), c.clone()));
            for (dw, dc) in &det {
                if dw.iter().enumerate().all(|(k, &p)| p == (k as u8 + 1, k as u8 + 1)) {
                    continue; // the identity permutation is the solved-for side
                }
                let mut u = dw.clone();
                u.extend_from_slice(&rest);
                queue.push((u, c.mul(dc).neg()));
            }
            break;
        }
    }
    Ok(QMatElement { n, terms: out })
}

pub fn reduce(x: &QMatElement) -> Result<QMatElement, String> {
    reduce_terms(
        x.n,
        x.terms.iter().map(|(w, c)| (w.clone(), c.clone())).collect(),
    )
}

/// All normal-form exponent matrices of total degree at most `d`, as sorted
/// words.
pub fn xi_monomials(n: u8, d: u32) -> Vec<Word> {
    let pairs: Vec<Pair> = (1..=n)
        .flat_map(|i| (1..=n).map(move |j| (i, j)))
        .collect();
    let mut out: Vec<Word> = vec![Vec::new()];
    let mut layer: Vec<Word> = vec![Vec::new()];
    for _ in 0..d {
        let mut next = Vec::new();
        for w in &layer {
            let start = w.last().copied().unwrap_or((1, 1));
            for &p in pairs.iter().filter(|&&p| p >= start) {
                let mut u = w.clone();
                u.push(p);
                next.push(u);
            }
        }
        layer = next;
        out.extend(layer.iter().cloned());
    }
    out.retain(|w| diagonal_positions(n, w).is_none());
    out.sort();
    out.dedup();
    out
}

/// Text form: `v^-1*X[1,2]*X[2,1] - (v + v^-1)*X[1,1]`.
pub fn display(x: &QMatElement) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (w, c)) in x.terms.iter().enumerate() {
        let (neg, ctext) = coeff_text(c);
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let wtext = word_text(w);
        if ctext == "1" {
            out.push_str(&wtext);
        } else if wtext == "1" {
            out.push_str(&ctext);
        } else {
            out.push_str(&ctext);
            out.push('*');
            out.push_str(&wtext);
        }
    }
    out
}

fn word_text(w: &Word) -> String {
    if w.is_empty() {
        return "1".to_string();
    }
    let mut parts: Vec<String> = Vec::new();
    let mut k = 0;
    while k < w.len() {
        let mut e = 1;
        while k + e < w.len() && w[k + e] == w[k] {
            e += 1;
        }
        let (i, j) = w[k];
        if e == 1 {
            parts.push(format!("X[{i},{j}]"));
        } else {
            parts.push(format!("X[{i},{j}]^{e}"));
        }
        k += e;
    }
    parts.join("*")
}

fn coeff_text(c: &LaurentPoly) -> (bool, String) {
    if c.num_terms() == 1 {
        let e = c.min_exp().unwrap();
        let r = c.coeff(e);
        let negative = r < Q::from_integer(0.into());
        let rabs = if negative { -r } else { r };
        let rat = if rabs.is_integer() {
            rabs.numer().to_string()
        } else {
            format!("{}/{}", rabs.numer(), rabs.denom())
        };
        let s = if e == 0 {
            rat
        } else {
            let vpart = if e == 1 {
                "v".to_string()
            } else {
                format!("v^{e}")
            };
            if rabs == Q::from_integer(1.into()) {
                vpart
            } else {
                format!("({rat})*{vpart}")
            }
        };
        (negative, s)
    } else {
        (false, format!("({c})"))
    }
}

struct Parser<'a> {
    n: u8,
    chars: std::iter::Peekable<std::str::Chars<'a>>,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while matches!(self.chars.peek(), Some(c) if c.is_whitespace()) {
            self.chars.next();
        }
    }

    fn element(&mut self) -> Result<Vec<(Word, LaurentPoly)>, String> {
        let mut out: Vec<(Word, LaurentPoly)> = Vec::new();
        self.skip_ws();
        let mut sign = match self.chars.peek() {
            Some('-') => {
                self.chars.next();
                -1i64
            }
            Some('+') => {
                self.chars.next();
                1
            }
            _ => 1,
        };
        loop {
            let (w, c) = self.term()?;
            out.push((w, c.scale(&Q::from_integer(sign.into()))));
            self.skip_ws();
            sign = match self.chars.peek() {
                Some('+') => {
                    self.chars.next();
                    1
                }
                Some('-') => {
                    self.chars.next();
                    -1
                }
                _ => break,
            };
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<(Word, LaurentPoly), String> {
        let mut word = Word::new();
        let mut coeff = LaurentPoly::one();
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
                    coeff = coeff.scale(&r);
                }
                Some('v') => {
                    self.chars.next();
                    let e = self.exponent()?;
                    coeff = coeff.mul_v_pow(e);
                }
                Some('X') => {
                    self.chars.next();
                    if self.chars.next() != Some('[') {
                        return Err("expected [ after X".to_string());
                    }
                    let i = self.digits()?;
                    self.skip_ws();
                    if self.chars.next() != Some(',') {
                        return Err("expected comma in X[i,j]".to_string());
                    }
                    self.skip_ws();
                    let j = self.digits()?;
                    if self.chars.next() != Some(']') {
                        return Err("expected ] in X[i,j]".to_string());
                    }
                    if i < 1 || i > self.n as i64 || j < 1 || j > self.n as i64 {
                        return Err(format!("generator X[{i},{j}] out of range"));
                    }
                    let e = self.exponent()?;
                    if e < 0 {
                        return Err("generator exponents must be nonnegative".to_string());
                    }
                    for _ in 0..e {
                        word.push((i as u8, j as u8));
                    }
                }
                _ => {
                    if first {
                        return Err("expected a term".to_string());
                    }
                    break;
                }
            }
            first = false;
        }
        Ok((word, coeff))
    }

    fn exponent(&mut self) -> Result<i64, String> {
        if matches!(self.chars.peek(), Some('^')) {
            self.chars.next();
            let mut sign = 1i64;
            if matches!(self.chars.peek(), Some('-')) {
                self.chars.next();
                sign = -1;
            }
            Ok(sign * self.digits()?)
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
        let a = self.digits()?;
        if matches!(self.chars.peek(), Some('/')) {
            self.chars.next();
            let b = self.digits()?;
            if b == 0 {
                return Err("zero denominator".to_string());
            }
            Ok(BigRational::new(a.into(), b.into()))
        } else {
            Ok(Q::from_integer(a.into()))
        }
    }
}

/// Parse and reduce an expression like `X[2,2]*X[1,1] - v^-1 X[1,2]*X[2,1]`.
pub fn parse(n: u8, s: &str) -> Result<QMatElement, String> {
    let mut p = Parser {
        n,
        chars: s.chars().peekable(),
    };
    let raw = p.element()?;
    p.skip_ws();
    if p.chars.peek().is_some() {
        return Err(format!(
            "trailing input: {}",
            p.chars.collect::<String>()
        ));
    }
    reduce_terms(n, raw)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn relation_examples() {
        // da = 1 + v^-1 bc
        let e = parse(2, "X[2,2]*X[1,1]").unwrap();
        assert_eq!(display(&e), "1 + v^-1*X[1,2]*X[2,1]");
        // column relation for any n
        let e = parse(3, "X[2,1]*X[1,1]").unwrap();
        assert_eq!(display(&e), "v^-1*X[1,1]*X[2,1]");
        // row relation
        let e = parse(2, "X[1,2]*X[1,1]").unwrap();
        assert_eq!(display(&e), "v^-1*X[1,1]*X[1,2]");
        // determinant at n = 3: the ordered diagonal product reduces to 1
        // plus the five other permutation monomials
        let e = parse(3, "X[1,1]*X[2,2]*X[3,3]").unwrap();
        assert!(e.terms.contains_key(&Vec::new()));
        assert_eq!(e.terms.len(), 6);
        for w in e.terms.keys() {
            assert!(diagonal_positions(3, w).is_none());
        }
    }

    #[test]
    fn xi_enumeration() {
        assert_eq!(xi_monomials(2, 1).len(), 5);
        // degree <= 2: 14 = 1 + 4 + 9, matching the dimension of the
        // degree-two window of the coordinate algebra
        assert_eq!(xi_monomials(2, 2).len(), 14);
        assert_eq!(xi_monomials(3, 0).len(), 1);
    }

    #[test]
    fn reduction_is_idempotent_and_supported_on_xi() {
        let e = parse(2, "X[2,2]^2*X[1,1]^2 + v*X[2,1]*X[1,2]*X[1,1]").unwrap();
        let again = reduce(&e).unwrap();
        assert_eq!(e, again);
        let basis = xi_monomials(2, e.degree() as u32);
        for w in e.terms.keys() {
            assert!(basis.contains(w));
        }
    }

    #[test]
    fn empirical_confluence_via_associativity() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in [2u8, 3] {
            for _ in 0..150 {
                let x = random_element(n, &mut rng);
                let y = random_element(n, &mut rng);
                let z = random_element(n, &mut rng);
                let a = x.mul(&y).unwrap().mul(&z).unwrap();
                let b = x.mul(&y.mul(&z).unwrap()).unwrap();
                assert_eq!(a, b, "n={n}");
            }
        }
    }

    #[test]
    fn two_by_two_matches_the_root_of_unity_normal_form() {
        use crate::oq::algebra::{Letter, OqElem};

        let ell = 5u32;
        let letter_of = |p: Pair| match p {
            (1, 1) => Letter::A,
            (1, 2) => Letter::B,
            (2, 1) => Letter::C,
            (2, 2) => Letter::D,
            _ => unreachable!(),
        };
        let to_oq = |x: &QMatElement| -> OqElem {
            let mut out = OqElem::zero(ell);
            for (w, c) in &x.terms {
                let mut t = OqElem::one(ell);
                for &p in w {
                    t = t.mul(&OqElem::gen_letter(ell, letter_of(p)));
                }
                out = out.add(&t.scale(&crate::coeff::Cyclotomic::specialize(c, ell)));
            }
            out
        };
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        for _ in 0..100 {
            let x = random_element(2, &mut rng);
            let y = random_element(2, &mut rng);
            let p = x.mul(&y).unwrap();
            assert_eq!(to_oq(&p), to_oq(&x).mul(&to_oq(&y)));
        }
    }
}
