//! Coefficient spans of the indecomposable tiltings in one linkage block,
//! their increasing filtration of the coordinate window, and the certified
//! identification of each successive quotient with an outer product of
//! costandard modules.

use std::rc::Rc;

use crate::bimodule::birep::{
    bi_span_closure, iso_certificate_bi, quotient_birep, BiRep,
};
use crate::coeff::{gauss_binom_at, Cyclotomic};
use crate::linalg::Mat;
use crate::oq::mc::McCache;
use crate::oq::window::Window;
use crate::uq::engine::Engine;
use crate::uq::homs::hom_space;
use crate::uq::rep::Rep;
use crate::uq::subspace::Subspace;
use crate::weights::sl2_sequence;

/// Span of all matrix coefficients of a module inside a window.  The span
/// is closed under both translation actions by construction; this is
/// asserted by comparing with the two-sided closure.
pub fn coefficient_span(
    window: &Rc<Window>,
    mc: &mut McCache,
    rep: &Rep,
) -> Result<Subspace, String> {
    let panel = mc.matrix_coeffs(rep)?;
    let mut plain = Subspace::empty(window.ell, window.dim());
    let mut vecs = Vec::new();
    for row in panel.iter() {
        for f in row {
            let v = window
                .to_vec(f)
                .ok_or_else(|| "window too small for the coefficient span".to_string())?;
            plain.insert(v.clone());
            vecs.push(v);
        }
    }
    let closed = bi_span_closure(window, &vecs);
    assert_eq!(
        closed.dim(),
        plain.dim(),
        "a coefficient span is stable under both translation actions"
    );
    Ok(closed)
}

/// The coefficient span of a module as a bimodule in its own coordinates.
pub fn coefficient_bimodule(
    window: &Rc<Window>,
    mc: &mut McCache,
    rep: &Rep,
) -> Result<BiRep, String> {
    let sub = coefficient_span(window, mc, rep)?;
    Ok(BiRep::window_sub(window, &sub))
}

/// The increasing filtration of one linkage block: member `i` is the sum of
/// the coefficient spans of the indecomposable tiltings with the `i + 1`
/// smallest highest weights linked to `block`.
pub struct Filtration {
    pub ell: u32,
    pub block: u32,
    /// Highest weights of the tiltings, in increasing linkage order.
    pub ns: Vec<u64>,
    pub window: Rc<Window>,
    /// `spaces[i]` is the `i`-th member, inside the window.
    pub spaces: Vec<Subspace>,
}

pub fn build_filtration(engine: &Engine, block: u32, depth: usize) -> Result<Filtration, String> {
    let ell = engine.ell();
    let ns = sl2_sequence(block as u64, ell, depth + 1)?;
    let top = *ns.last().unwrap() as u32;
    let window = Rc::new(Window::new(ell, top, Some(top % 2)));
    let mut mc = McCache::new();
    let mut spaces = Vec::new();
    let mut acc = Subspace::empty(ell, window.dim());
    for &n in &ns {
        let t = engine.tilting(n as u32);
        let span = coefficient_span(&window, &mut mc, &t)?;
        acc = acc.sum(&span);
        spaces.push(acc.clone());
    }
    Ok(Filtration {
        ell,
        block,
        ns,
        window,
        spaces,
    })
}

impl Filtration {
    /// Member `i` as a bimodule in its own coordinates.
    pub fn member(&self, i: usize) -> BiRep {
        BiRep::window_sub(&self.window, &self.spaces[i])
    }

    /// Quotient of member `i` by member `i - 1` (or member 0 itself).
    pub fn layer(&self, i: usize) -> BiRep {
        let m = self.member(i);
        if i == 0 {
            return m;
        }
        // express the previous member in the coordinates of this one
        let incl = self.spaces[i].basis_matrix();
        let proj = incl.left_inverse().expect("echelon basis");
        let prev = self.spaces[i - 1].basis_matrix();
        let sub = Subspace::from_columns(&proj.mul(&prev));
        assert_eq!(sub.dim(), self.spaces[i - 1].dim());
        quotient_birep(&m, &sub)
    }

    /// A certified invertible bimodule map from layer `i` to the outer
    /// product of two copies of the costandard module of its highest weight.
    pub fn layer_iso(&self, i: usize, seed: u64) -> Option<Mat> {
        let n = self.ns[i] as u32;
        let d = Rep::dual_weyl(self.ell, n);
        let target = BiRep::external(&d, &d);
        iso_certificate_bi(&self.layer(i), &target, seed)
    }
}

/// All invariant vectors in the two-fold tensor square of the costandard
/// module of highest weight `n` (maps from the trivial module).
pub fn equivariant_vectors(ell: u32, n: u32) -> Vec<Vec<Cyclotomic>> {
    let d = Rep::dual_weyl(ell, n);
    let t = Rep::tensor(&d, &d);
    let triv = Rep::weyl(ell, 0);
    hom_space(&triv, &t).iter().map(|f| f.column(0)).collect()
}

/// The closed-form invariant vector in the same tensor square:
/// `sum_i (-1)^i q^(i(n-i+1)) [n choose i] e_i (x) e_(n-i)`.
pub fn equivariant_formula(ell: u32, n: u32) -> Vec<Cyclotomic> {
    let dim = (n + 1) as usize;
    let mut v = vec![Cyclotomic::zero(ell); dim * dim];
    for i in 0..=n {
        let mut c = Cyclotomic::q_pow(ell, (i as i64) * ((n - i) as i64 + 1));
        if i % 2 == 1 {
            c = c.neg();
        }
        c = c.mul(&gauss_binom_at(n as i64, i, ell));
        v[(i as usize) * dim + (n - i) as usize] = c;
    }
    v
}

/// Whether two vectors are proportional by a nonzero scalar.
pub fn proportional(_ell: u32, a: &[Cyclotomic], b: &[Cyclotomic]) -> bool {
    assert_eq!(a.len(), b.len());
    let Some(i0) = a.iter().position(|c| !c.is_zero()) else {
        return b.iter().all(|c| c.is_zero());
    };
    if b[i0].is_zero() {
        return false;
    }
    let Some(inv) = a[i0].inv() else {
        return false;
    };
    let s = b[i0].mul(&inv);
    a.iter()
        .zip(b)
        .all(|(x, y)| x.mul(&s).sub(y).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bimodule::birep::{bihom_space, is_indecomposable_bi, loewy_bi};

    #[test]
    fn fundamental_block_filtration() {
        let engine = Engine::new(3);
        let f = build_filtration(&engine, 1, 1).unwrap();
        assert_eq!(f.ns, vec![1, 3]);
        assert_eq!(f.spaces[0].dim(), 4);
        assert_eq!(f.layer(1).dim(), 16);
        assert!(f.layer_iso(0, 11).is_some());
        assert!(f.layer_iso(1, 11).is_some());
    }

    #[test]
    fn principal_block_filtration_and_loewy_structure() {
        let engine = Engine::new(3);
        let f = build_filtration(&engine, 0, 1).unwrap();
        assert_eq!(f.ns, vec![0, 4]);
        assert_eq!(f.spaces[0].dim(), 1);
        assert_eq!(f.spaces[1].dim(), 26);
        let layer = f.layer(1);
        assert_eq!(layer.dim(), 25);
        assert!(f.layer_iso(1, 11).is_some());

        // the full member of weight 4 is rigid and indecomposable with
        // semisimple layers 1 / 8 / 17 from the top down
        let m = f.member(1);
        let mut simple_pair =
            |a: u32, b: u32| BiRep::external(&engine.simple(a), &engine.simple(b));
        let ls = loewy_bi(&m, &mut simple_pair);
        assert_eq!(ls.radical_layers, vec![1, 8, 17]);
        assert_eq!(ls.socle_layers, vec![17, 8, 1]);
        assert!(ls.rigid);
        assert!(is_indecomposable_bi(&m));
        // the 17-dimensional socle splits as trivial + (simple x simple):
        // one copy of L0 x L0 and one of L4 x L4
        let socle = crate::bimodule::birep::socle_bi(&m, &mut simple_pair);
        assert_eq!(socle.dim(), 17);
        let bottom = crate::bimodule::birep::sub_birep(&m, &socle);
        let triv = BiRep::external(&engine.simple(0), &engine.simple(0));
        let big = BiRep::external(&engine.simple(4), &engine.simple(4));
        assert_eq!(bihom_space(&triv, &bottom).len(), 1);
        assert_eq!(bihom_space(&big, &bottom).len(), 1);
    }

    #[test]
    fn coefficient_spans_intersect_in_the_standard_spans() {
        // at root order 3 the weight-4 and weight-6 coefficient spans meet
        // exactly in the sum of the standard and costandard spans of weight 4
        let engine = Engine::new(3);
        let window = Rc::new(Window::new(3, 6, Some(0)));
        let mut mc = McCache::new();
        let m4 = coefficient_span(&window, &mut mc, &engine.tilting(4)).unwrap();
        let m6 = coefficient_span(&window, &mut mc, &engine.tilting(6)).unwrap();
        let v4 = coefficient_span(&window, &mut mc, &engine.weyl_realized(4)).unwrap();
        let v4d = coefficient_span(&window, &mut mc, &engine.dual_weyl_realized(4)).unwrap();
        let meet = m4.intersect(&m6);
        assert!(meet.equals(&v4.sum(&v4d)));
    }

    #[test]
    fn invariant_vector_is_unique_and_matches_the_formula() {
        for ell in [3u32, 5] {
            for n in 0..=(ell + 2) {
                let vs = equivariant_vectors(ell, n);
                assert_eq!(vs.len(), 1, "ell={ell} n={n}");
                let formula = equivariant_formula(ell, n);
                assert!(
                    proportional(ell, &vs[0], &formula),
                    "ell={ell} n={n}"
                );
            }
        }
    }
}
