//! End-to-end verification suite.  Each check exercises one published
//! guarantee of the engine with exact arithmetic; a check either passes or
//! reports the first counterexample it found.  The quick scope keeps every
//! check under a few seconds; the full scope runs the complete battery
//! (several minutes, dominated by the bimodule filtrations at ell = 5).

use std::rc::Rc;

use num::{BigInt, BigRational};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bimodule::birep::{
    bihom_space, is_indecomposable_bi, loewy_bi, socle_bi, sub_birep, BiRep,
};
use crate::bimodule::filtration::{
    build_filtration, coefficient_bimodule, coefficient_span, equivariant_formula,
    equivariant_vectors, proportional,
};
use crate::coeff::{
    gauss_binom, gauss_binom_at, gauss_factorial_at, gauss_int, gauss_int_at, Cyclotomic,
};
use crate::linalg::Mat;
use crate::oq::algebra::{Letter, OqElem};
use crate::oq::mc::{evaluate, McCache};
use crate::oq::window::Window;
use crate::qmatrix;
use crate::uq::engine::Engine;
use crate::uq::homs::{hom_space, iso_certificate, is_indecomposable};
use crate::uq::rep::{check_relations, Gen, Rep};
use crate::uq::subspace::Subspace;
use crate::weights::sl2_prime;

/// Outcome of one verification check.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn pass(name: &'static str, detail: String) -> Self {
        Check { name, pass: true, detail }
    }
    fn fail(name: &'static str, detail: String) -> Self {
        Check { name, pass: false, detail }
    }
}

fn outcome(name: &'static str, fails: Vec<String>, ok: String) -> Check {
    if fails.is_empty() {
        Check::pass(name, ok)
    } else {
        Check::fail(name, fails.join("; "))
    }
}

/// Run the whole suite.  `full` selects the complete battery; otherwise a
/// faster subset with the same checks over smaller ranges.
pub fn run_suite(full: bool, seed: u64) -> Vec<Check> {
    vec![
        check_gauss(full),
        check_relation_suite(full),
        check_standard_structure(full),
        check_tilting_characters(full, seed),
        check_hom_orthogonality(full),
        check_coordinate_pairing(full),
        check_filtrations(full, seed),
        check_loewy_and_intersection(),
        check_equivariant_vector(full),
        check_cocommutative(full),
        check_quantum_matrix(full),
    ]
}

fn module_ells(full: bool) -> Vec<u32> {
    if full {
        vec![3, 5]
    } else {
        vec![3]
    }
}

/// Balanced quantum integers and binomials: vanishing at a root of unity of
/// odd order, and the classical values at v = 1.
pub fn check_gauss(full: bool) -> Check {
    let mut fails = Vec::new();
    for ell in [3u32, 5, 7] {
        if !gauss_int_at(ell as i64, ell).is_zero() {
            fails.push(format!("[{ell}] nonzero at order {ell}"));
        }
        for m in 1..ell {
            if !gauss_binom_at(ell as i64, m, ell).is_zero() {
                fails.push(format!("[{ell} choose {m}] nonzero at order {ell}"));
            }
        }
        // multiples of the order also vanish
        if !gauss_int_at(2 * ell as i64, ell).is_zero() {
            fails.push(format!("[2*{ell}] nonzero at order {ell}"));
        }
    }
    let nmax: i64 = if full { 12 } else { 8 };
    for n in 0..=nmax {
        if gauss_int(n).eval_at_one() != BigRational::from_integer(BigInt::from(n)) {
            fails.push(format!("[{n}] at v=1 is not {n}"));
        }
        let mut classical = BigRational::from_integer(BigInt::from(1));
        for m in 0..=(n as u32) {
            if gauss_binom(n, m).eval_at_one() != classical {
                fails.push(format!("[{n} choose {m}] at v=1 wrong"));
            }
            // C(n, m+1) = C(n, m) * (n-m) / (m+1)
            classical = classical * BigRational::from_integer(BigInt::from(n - m as i64))
                / BigRational::from_integer(BigInt::from(m as i64 + 1));
        }
    }
    outcome(
        "gaussian-binomials",
        fails,
        format!("root-of-unity vanishing at orders 3,5,7; classical limits up to n={nmax}"),
    )
}

/// Defining relations and divided-power compatibilities on a family of
/// modules, including E^j = [j]! E^(j) up to j = 2*ell.
pub fn check_relation_suite(full: bool) -> Check {
    let mut fails = Vec::new();
    let mut count = 0usize;
    for ell in module_ells(full) {
        let eng = Engine::new(ell);
        let reps = vec![
            eng.weyl(2 * ell),
            eng.dual_weyl(2 * ell - 1),
            Rep::tensor(&eng.weyl(1), &eng.weyl(1)),
            eng.tilting(ell + 1),
        ];
        for rep in &reps {
            if let Err(e) = check_relations(rep, 2 * ell) {
                fails.push(format!("ell={ell}: {e}"));
            }
            count += 1;
        }
        // divided-power integrality: the ordinary power E^j equals
        // [j]! E^(j), so E^(j) stays defined even where [j]! vanishes
        let rep = eng.weyl(2 * ell);
        for j in 0..=(2 * ell) {
            let lhs = rep.act(Gen::E(1)).pow(j);
            let rhs = rep.act(Gen::E(j)).scale(&gauss_factorial_at(j, ell));
            if lhs != rhs {
                fails.push(format!("ell={ell}: E^{j} != [{j}]! E({j})"));
            }
            let lhs = rep.act(Gen::F(1)).pow(j);
            let rhs = rep.act(Gen::F(j)).scale(&gauss_factorial_at(j, ell));
            if lhs != rhs {
                fails.push(format!("ell={ell}: F^{j} != [{j}]! F({j})"));
            }
        }
    }
    outcome(
        "module-relations",
        fails,
        format!("relations and divided powers verified on {count} modules"),
    )
}

/// Socle and head of every standard module in range: socle is the linked
/// simple, head is the highest-weight simple, and the predicted
/// irreducible cases really are irreducible.
pub fn check_standard_structure(full: bool) -> Check {
    let mut fails = Vec::new();
    let mut mixed = 0usize;
    let mut irred = 0usize;
    for ell in module_ells(full) {
        let eng = Engine::new(ell);
        for n in 0..=(3 * ell) {
            let v = eng.weyl(n);
            match sl2_prime(n as u64, ell) {
                None => {
                    if eng.simple(n).dim() != v.dim() {
                        fails.push(format!("ell={ell}, n={n}: predicted irreducible but dim L < dim V"));
                    } else if !is_indecomposable(&v) {
                        fails.push(format!("ell={ell}, n={n}: decomposable standard module"));
                    }
                    irred += 1;
                }
                Some(np) => {
                    let socle = eng.socle_rep(&v);
                    if iso_certificate(&socle, &eng.simple(np as u32), 11).is_none() {
                        fails.push(format!("ell={ell}, n={n}: socle is not the simple of weight {np}"));
                    }
                    let head = eng.head_rep(&v);
                    if iso_certificate(&head, &eng.simple(n), 11).is_none() {
                        fails.push(format!("ell={ell}, n={n}: head is not the simple of weight {n}"));
                    }
                    mixed += 1;
                }
            }
        }
    }
    outcome(
        "standard-module-structure",
        fails,
        format!("{mixed} two-step standard modules and {irred} irreducible ones"),
    )
}

/// Indecomposable tilting characters: ch T_n = ch V_n + ch V_{n'} in the
/// mixed range (just ch V_n otherwise), and T_n is self-dual.
pub fn check_tilting_characters(full: bool, seed: u64) -> Check {
    let mut fails = Vec::new();
    let mut count = 0usize;
    for ell in module_ells(full) {
        let eng = Engine::new(ell);
        for n in 0..=(3 * ell) {
            let t = eng.tilting(n);
            let mut expected = eng.weyl(n).character();
            if let Some(np) = sl2_prime(n as u64, ell) {
                expected = expected.add(&eng.weyl(np as u32).character());
            }
            if t.character() != expected {
                fails.push(format!("ell={ell}, n={n}: tilting character mismatch"));
            }
            if iso_certificate(&Rep::dual(&t), &t, seed).is_none() {
                fails.push(format!("ell={ell}, n={n}: tilting module not self-dual"));
            }
            count += 1;
        }
    }
    outcome(
        "tilting-characters",
        fails,
        format!("{count} tilting modules: character sums and self-duality"),
    )
}

/// Hom(V_m, costandard of weight k) is one-dimensional when m = k and zero
/// otherwise.
pub fn check_hom_orthogonality(full: bool) -> Check {
    let mut fails = Vec::new();
    let mut pairs = 0usize;
    for ell in module_ells(full) {
        let eng = Engine::new(ell);
        for m in 0..=(2 * ell) {
            for k in 0..=(2 * ell) {
                let d = hom_space(&eng.weyl(m), &eng.dual_weyl(k)).len();
                let want = if m == k { 1 } else { 0 };
                if d != want {
                    fails.push(format!("ell={ell}: dim Hom(V_{m}, costd {k}) = {d}, want {want}"));
                }
                pairs += 1;
            }
        }
    }
    outcome(
        "hom-orthogonality",
        fails,
        format!("{pairs} standard/costandard pairs"),
    )
}

/// The pairing between the coordinate algebra and the enveloping algebra:
/// K^ell - 1 pairs to zero with every low-degree coordinate monomial, yet
/// the pairing is non-degenerate on the degree <= 2 window.
pub fn check_coordinate_pairing(full: bool) -> Check {
    let mut fails = Vec::new();
    let deg = if full { 6 } else { 4 };
    let mut monos = 0usize;
    for ell in module_ells(full) {
        let eng = Engine::new(ell);
        let window = Window::new(ell, deg, None);
        let kword = vec![Gen::K; ell as usize];
        for m in &window.basis {
            let f = OqElem::monomial(ell, m.clone(), Cyclotomic::one(ell));
            if evaluate(&f, &kword, &eng) != evaluate(&f, &[], &eng) {
                fails.push(format!("ell={ell}: K^{ell} - 1 pairs nontrivially in degree {}", m.degree()));
            }
            monos += 1;
        }
        // non-degeneracy on the degree <= 2 window against a small
        // spanning family E^(e) K^k F^(f)
        let small = Window::new(ell, 2, None);
        let mut words: Vec<Vec<Gen>> = Vec::new();
        for e in 0..=2u32 {
            for f in 0..=2u32 {
                for k in -2i64..=2 {
                    let mut w = Vec::new();
                    if e > 0 {
                        w.push(Gen::E(e));
                    }
                    for _ in 0..k.abs() {
                        w.push(if k > 0 { Gen::K } else { Gen::KInv });
                    }
                    if f > 0 {
                        w.push(Gen::F(f));
                    }
                    words.push(w);
                }
            }
        }
        let pairing = Mat::from_fn(ell, small.dim(), words.len(), |i, j| {
            let f = OqElem::monomial(ell, small.basis[i].clone(), Cyclotomic::one(ell));
            evaluate(&f, &words[j], &eng)
        });
        if pairing.rank() != small.dim() {
            fails.push(format!(
                "ell={ell}: pairing degenerate on the degree-2 window (rank {} of {})",
                pairing.rank(),
                small.dim()
            ));
        }
    }
    outcome(
        "coordinate-pairing",
        fails,
        format!("K^ell - 1 annihilates {monos} monomials of degree <= {deg}; degree-2 pairing has full rank"),
    )
}

/// Coefficient bimodules of the linked tilting family carry an increasing
/// filtration whose layers are certified isomorphic to outer squares of
/// costandard modules.
pub fn check_filtrations(full: bool, seed: u64) -> Check {
    let mut fails = Vec::new();
    let mut detail = Vec::new();
    let scopes: Vec<(u32, Vec<u32>)> = if full {
        vec![(3, vec![0, 1]), (5, vec![0, 1, 2, 3])]
    } else {
        vec![(3, vec![0, 1])]
    };
    for (ell, blocks) in scopes {
        let eng = Engine::new(ell);
        for b in blocks {
            match build_filtration(&eng, b, 2) {
                Err(e) => fails.push(format!("ell={ell}, block {b}: {e}")),
                Ok(f) => {
                    let dims: Vec<usize> = (0..f.ns.len()).map(|i| f.member(i).dim()).collect();
                    for i in 0..f.ns.len() {
                        if f.layer_iso(i, seed).is_none() {
                            fails.push(format!(
                                "ell={ell}, block {b}: layer {i} is not an outer square of costandard modules"
                            ));
                        }
                    }
                    detail.push(format!("ell={ell} block {b}: members {dims:?}"));
                }
            }
        }
    }
    outcome("bimodule-filtration", fails, detail.join("; "))
}

/// Loewy structure of the two smallest principal-block coefficient
/// bimodules at ell = 3, and the intersection identity tying consecutive
/// members to standard coefficient spans.
pub fn check_loewy_and_intersection() -> Check {
    let mut fails = Vec::new();
    let eng = Engine::new(3);
    let mut simple_pair = |a: u32, b: u32| BiRep::external(&eng.simple(a), &eng.simple(b));

    let f = match build_filtration(&eng, 0, 2) {
        Ok(f) => f,
        Err(e) => return Check::fail("loewy-structure", e),
    };
    // span of the weight-4 tilting coefficients: layers 1 / 8 / 17 from the top
    let m4 = f.member(1);
    let ls = loewy_bi(&m4, &mut simple_pair);
    if ls.radical_layers != vec![1, 8, 17] {
        fails.push(format!("weight-4 layers {:?}, want [1, 8, 17]", ls.radical_layers));
    }
    if !ls.rigid {
        fails.push("weight-4 coefficient span is not rigid".into());
    }
    if !is_indecomposable_bi(&m4) {
        fails.push("weight-4 coefficient span is decomposable".into());
    }
    // its socle splits as trivial + outer square of the weight-4 simple
    let socle = socle_bi(&m4, &mut simple_pair);
    let bottom = sub_birep(&m4, &socle);
    let triv = BiRep::external(&eng.simple(0), &eng.simple(0));
    let big = BiRep::external(&eng.simple(4), &eng.simple(4));
    if socle.dim() != 17
        || bihom_space(&triv, &bottom).len() != 1
        || bihom_space(&big, &bottom).len() != 1
    {
        fails.push("weight-4 socle is not trivial + outer square of the weight-4 simple".into());
    }

    // span of the weight-6 tilting coefficients alone: layers 16 / 32 / 26
    let window = Rc::new(Window::new(3, 6, Some(0)));
    let mut mc = McCache::new();
    match coefficient_bimodule(&window, &mut mc, &eng.tilting(6)) {
        Err(e) => fails.push(e),
        Ok(m6) => {
            let ls6 = loewy_bi(&m6, &mut simple_pair);
            if ls6.radical_layers != vec![16, 32, 26] {
                fails.push(format!("weight-6 layers {:?}, want [16, 32, 26]", ls6.radical_layers));
            }
            if !ls6.rigid {
                fails.push("weight-6 coefficient span is not rigid".into());
            }
            if !is_indecomposable_bi(&m6) {
                fails.push("weight-6 coefficient span is decomposable".into());
            }
            // intersection identity: span(T_4) meets span(T_6) exactly in
            // span(V_4) + span(dual V_4)
            let span4 = coefficient_span(&window, &mut mc, &eng.tilting(4)).unwrap();
            let span6 = coefficient_span(&window, &mut mc, &eng.tilting(6)).unwrap();
            let std4 = coefficient_span(&window, &mut mc, &eng.weyl_realized(4)).unwrap();
            let costd4 = coefficient_span(&window, &mut mc, &eng.dual_weyl_realized(4)).unwrap();
            if !span4.intersect(&span6).equals(&std4.sum(&costd4)) {
                fails.push("intersection of consecutive coefficient spans is not the standard + costandard span".into());
            }
        }
    }
    outcome(
        "loewy-structure",
        fails,
        "rigid indecomposable spans with layers [1,8,17] and [16,32,26]; intersection identity holds".into(),
    )
}

/// The invariants of an outer square of a costandard module form a line,
/// spanned by the explicit alternating sum with binomial coefficients.
pub fn check_equivariant_vector(full: bool) -> Check {
    let mut fails = Vec::new();
    let mut count = 0usize;
    for ell in module_ells(full) {
        for n in 0..=(2 * ell) {
            let vs = equivariant_vectors(ell, n);
            if vs.len() != 1 {
                fails.push(format!("ell={ell}, n={n}: invariant space has dimension {}", vs.len()));
            } else if !proportional(ell, &vs[0], &equivariant_formula(ell, n)) {
                fails.push(format!("ell={ell}, n={n}: invariant vector differs from the closed formula"));
            }
            count += 1;
        }
    }
    outcome(
        "equivariant-vector",
        fails,
        format!("{count} invariant lines match the closed formula"),
    )
}

/// Cocommutative elements of bounded degree: dimension D+1, spanned by the
/// powers of the quantum trace a + d; module traces realize them and
/// satisfy multiplicativity and additivity.
pub fn check_cocommutative(full: bool) -> Check {
    let mut fails = Vec::new();
    let dmax = if full { 6 } else { 4 };
    for ell in module_ells(full) {
        for d in 0..=dmax {
            let w = Window::new(ell, d, None);
            let basis = w.cocommutative_basis();
            if basis.len() != (d as usize) + 1 {
                fails.push(format!("ell={ell}, degree {d}: dimension {}", basis.len()));
                continue;
            }
            let mut span = Subspace::empty(ell, w.dim());
            for b in &basis {
                span.insert(w.to_vec(b).unwrap());
            }
            let trace = OqElem::gen_letter(ell, Letter::A).add(&OqElem::gen_letter(ell, Letter::D));
            let mut pw = OqElem::one(ell);
            let mut powers = Subspace::empty(ell, w.dim());
            for _ in 0..=d {
                powers.insert(w.to_vec(&pw).unwrap());
                pw = pw.mul(&trace);
            }
            if !span.equals(&powers) {
                fails.push(format!("ell={ell}, degree {d}: basis does not span the trace powers"));
            }
        }
        // trace identities on modules
        let eng = Engine::new(ell);
        let mut mc = McCache::new();
        let v1 = eng.weyl(1);
        let t_tensor = mc.trace(&Rep::tensor(&v1, &v1)).unwrap();
        let t1 = mc.trace(&v1).unwrap();
        if t_tensor != t1.mul(&t1) {
            fails.push(format!("ell={ell}: trace of a tensor product is not the product of traces"));
        }
        let n = ell + 1;
        let np = sl2_prime(n as u64, ell).unwrap() as u32;
        let lhs = mc.trace(&eng.tilting(n)).unwrap();
        let rhs = mc
            .trace(&eng.weyl_realized(n))
            .unwrap()
            .add(&mc.trace(&eng.weyl_realized(np)).unwrap());
        if lhs != rhs {
            fails.push(format!("ell={ell}: trace not additive over the standard filtration of T_{n}"));
        }
    }
    outcome(
        "cocommutative-elements",
        fails,
        format!("dimensions and trace-power spans up to degree {dmax}; trace identities hold"),
    )
}

/// Quantum-matrix straightening: agrees with the independent rank-two
/// normal form on random products, and multiplication is associative on
/// random triples (empirical confluence); reduced supports lie in the
/// normal-form basis.
pub fn check_quantum_matrix(full: bool) -> Check {
    let mut fails = Vec::new();
    let ell = 5u32;
    let letter_of = |p: qmatrix::Pair| match p {
        (1, 1) => Letter::A,
        (1, 2) => Letter::B,
        (2, 1) => Letter::C,
        (2, 2) => Letter::D,
        _ => unreachable!(),
    };
    let to_oq = |x: &qmatrix::QMatElement| -> OqElem {
        let mut out = OqElem::zero(ell);
        for (w, c) in &x.terms {
            let mut t = OqElem::one(ell);
            for &p in w {
                t = t.mul(&OqElem::gen_letter(ell, letter_of(p)));
            }
            out = out.add(&t.scale(&Cyclotomic::specialize(c, ell)));
        }
        out
    };
    let products = if full { 100 } else { 25 };
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for i in 0..products {
        let x = qmatrix::random_element(2, &mut rng);
        let y = qmatrix::random_element(2, &mut rng);
        let p = x.mul(&y).unwrap();
        if to_oq(&p) != to_oq(&x).mul(&to_oq(&y)) {
            fails.push(format!("product {i} disagrees with the rank-two normal form"));
        }
        for w in p.terms.keys() {
            if !qmatrix::in_normal_basis(2, w) {
                fails.push(format!("product {i} has support outside the normal-form basis"));
            }
        }
    }
    let triples = if full { 150 } else { 40 };
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in [2u8, 3] {
        for i in 0..triples {
            let x = qmatrix::random_element(n, &mut rng);
            let y = qmatrix::random_element(n, &mut rng);
            let z = qmatrix::random_element(n, &mut rng);
            let a = x.mul(&y).unwrap().mul(&z).unwrap();
            let b = x.mul(&y.mul(&z).unwrap()).unwrap();
            if a != b {
                fails.push(format!("n={n}, triple {i}: associativity fails after reduction"));
            }
            for w in a.terms.keys() {
                if !qmatrix::in_normal_basis(n, w) {
                    fails.push(format!("n={n}, triple {i}: support outside the normal-form basis"));
                }
            }
        }
    }
    outcome(
        "quantum-matrix-rewriting",
        fails,
        format!("{products} seeded cross-checked products; {} associativity triples for n = 2, 3", 2 * triples),
    )
}
