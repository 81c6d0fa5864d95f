//! Translation actions of the enveloping algebra on the coordinate algebra.
//!
//! Right translation (`f -> f(. u)`) acts on the column index of matrix
//! coefficients; left translation (`f -> f(u .)`) acts on the row index.
//! Both are skew derivations determined by their effect on the four letters
//! plus a diagonal weight twist, and both are computed over Z[v, v^-1] so
//! divided powers can be formed by exact division.

use crate::coeff::{gauss_factorial, LaurentPoly};
use crate::oq::algebra::{GElem, Letter, OqMono};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Side {
    /// Right translation: `(E -> b->a, d->c)`, `(F -> a->b, c->d)`,
    /// K-eigenvalue = column weight.
    Right,
    /// Left translation: `(E -> a->c, b->d)`, `(F -> c->a, d->b)`,
    /// K-eigenvalue = row weight.
    Left,
}

fn letter_weight(side: Side, l: Letter) -> i64 {
    // column weights: a,c -> +1; b,d -> -1.  row weights: a,b -> +1; c,d -> -1
    match (side, l) {
        (Side::Right, Letter::A | Letter::C) => 1,
        (Side::Right, Letter::B | Letter::D) => -1,
        (Side::Left, Letter::A | Letter::B) => 1,
        (Side::Left, Letter::C | Letter::D) => -1,
    }
}

fn letter_image(side: Side, raising: bool, l: Letter) -> Option<Letter> {
    use Letter::*;
    match (side, raising, l) {
        (Side::Right, true, B) => Some(A),
        (Side::Right, true, D) => Some(C),
        (Side::Right, false, A) => Some(B),
        (Side::Right, false, C) => Some(D),
        (Side::Left, true, A) => Some(C),
        (Side::Left, true, B) => Some(D),
        (Side::Left, false, C) => Some(A),
        (Side::Left, false, D) => Some(B),
        _ => None,
    }
}

fn renormalize(word: &[Letter]) -> GElem {
    let mut e = GElem::one();
    for &l in word {
        e = e.mul_letter(l);
    }
    e
}

/// One application of E (raising) or F (lowering) as a skew derivation.
/// E carries the K-twist on the prefix, F carries the inverse twist on the
/// suffix (matching the coproducts E -> E x 1 + K x E, F -> F x K^-1 + 1 x F).
pub fn act_ef(side: Side, raising: bool, f: &GElem) -> GElem {
    let mut out = GElem::zero();
    for (mono, coeff) in &f.terms {
        let letters = mono.letters();
        for t in 0..letters.len() {
            let Some(img) = letter_image(side, raising, letters[t]) else {
                continue;
            };
            let twist: i64 = if raising {
                letters[..t].iter().map(|&l| letter_weight(side, l)).sum()
            } else {
                -letters[t + 1..]
                    .iter()
                    .map(|&l| letter_weight(side, l))
                    .sum::<i64>()
            };
            let mut word = letters.clone();
            word[t] = img;
            let term = renormalize(&word).scale(&coeff.mul_v_pow(twist));
            out = out.add(&term);
        }
    }
    out
}

/// Diagonal action of K to a signed power.
pub fn act_k(side: Side, pow: i64, f: &GElem) -> GElem {
    let mut out = GElem::zero();
    for (mono, coeff) in &f.terms {
        let w = match side {
            Side::Right => mono.rweight(),
            Side::Left => mono.lweight(),
        };
        out.add_term(*mono, &coeff.mul_v_pow(pow * w));
    }
    out
}

/// Divided power: apply E (or F) j times, then divide every coefficient by
/// the Gaussian factorial [j]! (an exact division, asserted).
pub fn act_divided(side: Side, raising: bool, j: u32, f: &GElem) -> GElem {
    let mut acc = f.clone();
    for _ in 0..j {
        acc = act_ef(side, raising, &acc);
    }
    if j < 2 {
        return acc;
    }
    let jf = gauss_factorial(j);
    let mut out = GElem::zero();
    for (m, c) in &acc.terms {
        out.add_term(
            *m,
            &c.exact_div(&jf)
                .expect("translation-action powers are divisible by [j]!"),
        );
    }
    out
}

/// Gaussian-binomial Cartan action `[weight + c choose t]`, diagonal.
pub fn act_kbinom(side: Side, c: i64, t: u32, f: &GElem) -> GElem {
    let mut out = GElem::zero();
    for (mono, coeff) in &f.terms {
        let w = match side {
            Side::Right => mono.rweight(),
            Side::Left => mono.lweight(),
        };
        out.add_term(*mono, &coeff.mul(&crate::coeff::gauss_binom(w + c, t)));
    }
    out
}

/// Generic basis monomial as a one-term element.
pub fn mono_elem(m: OqMono) -> GElem {
    GElem::monomial(m, LaurentPoly::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oq::mc::evaluate;
    use crate::uq::engine::Engine;
    use crate::uq::rep::Gen;

    /// Right translation must satisfy `<act f, u> = <f, u followed by the
    /// acting element>`, left translation `<act f, u> = <f, element then u>`.
    #[test]
    fn translations_match_the_pairing() {
        use Letter::*;
        let ell = 3;
        let eng = Engine::new(ell);
        let monos = [
            OqMono::letter(A),
            OqMono::letter(B),
            OqMono::letter(C),
            OqMono::letter(D),
            OqMono { ad: 2, b: 1, c: 0 },
            OqMono { ad: -1, b: 1, c: 1 },
            OqMono { ad: 0, b: 2, c: 1 },
        ];
        let words: Vec<Vec<Gen>> = vec![
            vec![],
            vec![Gen::K],
            vec![Gen::E(1)],
            vec![Gen::F(1), Gen::K],
            vec![Gen::E(2)],
        ];
        for m in monos {
            let f = mono_elem(m);
            for u in &words {
                // E on the right: append E
                let acted = act_ef(Side::Right, true, &f).specialize(ell);
                let mut ext = u.clone();
                ext.push(Gen::E(1));
                assert_eq!(
                    evaluate(&acted, u, &eng),
                    evaluate(&f.specialize(ell), &ext, &eng),
                    "right E on {m:?} against {u:?}"
                );
                // F on the left: prepend F
                let acted = act_ef(Side::Left, false, &f).specialize(ell);
                let mut ext = vec![Gen::F(1)];
                ext.extend(u.iter().copied());
                assert_eq!(
                    evaluate(&acted, u, &eng),
                    evaluate(&f.specialize(ell), &ext, &eng),
                    "left F on {m:?} against {u:?}"
                );
                // K on the right
                let acted = act_k(Side::Right, 1, &f).specialize(ell);
                let mut ext = u.clone();
                ext.push(Gen::K);
                assert_eq!(
                    evaluate(&acted, u, &eng),
                    evaluate(&f.specialize(ell), &ext, &eng),
                    "right K on {m:?} against {u:?}"
                );
                // divided power on the right: append E(2)
                let acted = act_divided(Side::Right, true, 2, &f).specialize(ell);
                let mut ext = u.clone();
                ext.push(Gen::E(2));
                assert_eq!(
                    evaluate(&acted, u, &eng),
                    evaluate(&f.specialize(ell), &ext, &eng),
                    "right E(2) on {m:?} against {u:?}"
                );
            }
        }
    }

    #[test]
    fn left_and_right_translations_commute() {
        use Letter::*;
        for m in [
            OqMono::letter(A),
            OqMono { ad: 1, b: 1, c: 1 },
            OqMono { ad: -2, b: 0, c: 1 },
        ] {
            let f = mono_elem(m);
            let rl = act_ef(Side::Left, true, &act_ef(Side::Right, true, &f));
            let lr = act_ef(Side::Right, true, &act_ef(Side::Left, true, &f));
            assert_eq!(rl, lr);
            let rl = act_ef(Side::Left, false, &act_ef(Side::Right, true, &f));
            let lr = act_ef(Side::Right, true, &act_ef(Side::Left, false, &f));
            assert_eq!(rl, lr);
        }
    }
}
