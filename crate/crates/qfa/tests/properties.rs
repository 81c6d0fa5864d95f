//! Randomized property tests for the algebraic kernels: coefficient
//! arithmetic, the coordinate-algebra normal form, and the generic
//! quantum-matrix rewriting system.

use proptest::prelude::*;

use qfa::coeff::{gauss_binom, gauss_binom_at, Cyclotomic};
use qfa::oq::algebra::{Letter, OqElem};
use qfa::oq::text;
use qfa::qmatrix;

fn letter(i: u8) -> Letter {
    match i % 4 {
        0 => Letter::A,
        1 => Letter::B,
        2 => Letter::C,
        _ => Letter::D,
    }
}

/// A small random element of the coordinate algebra, built as a sum of
/// scaled products of generators (so it exercises the straightening laws).
fn oq_elem(ell: u32) -> impl Strategy<Value = OqElem> {
    prop::collection::vec(
        (prop::collection::vec(0u8..4, 0..4), -2i64..=2, -3i64..=3),
        1..4,
    )
    .prop_map(move |terms| {
        let mut out = OqElem::zero(ell);
        for (word, qexp, num) in terms {
            let mut t = OqElem::one(ell);
            for l in word {
                t = t.mul(&OqElem::gen_letter(ell, letter(l)));
            }
            let c = Cyclotomic::q_pow(ell, qexp).mul(&Cyclotomic::from_int(ell, num));
            out = out.add(&t.scale(&c));
        }
        out
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn binomial_symmetry_and_specialization(n in 0i64..20, m in 0u32..20, ell in prop::sample::select(vec![3u32, 5, 7])) {
        prop_assume!((m as i64) <= n);
        let b = gauss_binom(n, m);
        prop_assert_eq!(&b, &gauss_binom(n, n as u32 - m));
        prop_assert_eq!(Cyclotomic::specialize(&b, ell), gauss_binom_at(n, m, ell));
    }

    #[test]
    fn coordinate_algebra_is_associative(x in oq_elem(5), y in oq_elem(5), z in oq_elem(5)) {
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
    }

    #[test]
    fn coordinate_text_round_trips(x in oq_elem(3)) {
        let s = text::display(&x);
        let back = text::parse(3, &s).unwrap();
        prop_assert_eq!(back, x);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn quantum_matrix_reduction_is_idempotent(seed in any::<u64>(), n in 2u8..=3) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let x = qmatrix::random_element(n, &mut rng);
        let again = qmatrix::reduce(&x).unwrap();
        prop_assert_eq!(&x, &again);
        for w in x.terms.keys() {
            prop_assert!(qmatrix::in_normal_basis(n, w));
        }
    }
}
