//! Intertwiner spaces and the module-theoretic toolbox built on them:
//! generated submodules, quotients, socle and radical series, isomorphism
//! testing, direct-summand peeling, and an indecomposability certificate.
//!
//! All solving is done against the finite generating set of the divided-power
//! algebra; at a fixed odd root order every divided power in desk range is a
//! word in these generators (up to invertible scalars), so joint intertwiners
//! are honest module maps.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coeff::Cyclotomic;
use crate::linalg::Mat;
use crate::uq::rep::{generating_set, Rep};
use crate::uq::subspace::Subspace;

/// Basis of the space of module maps `a -> b`, each as a `dim b x dim a`
/// matrix.  Unknowns are restricted to weight-matching positions and the
/// kernel is accumulated one generator at a time.
pub fn hom_space(a: &Rep, b: &Rep) -> Vec<Mat> {
    assert_eq!(a.ell(), b.ell());
    let ell = a.ell();
    // unknown entries f[i][j] with matching weights
    let mut upos: Vec<(usize, usize)> = Vec::new();
    let mut uidx: HashMap<(usize, usize), usize> = HashMap::new();
    for i in 0..b.dim() {
        for j in 0..a.dim() {
            if b.weights()[i] == a.weights()[j] {
                uidx.insert((i, j), upos.len());
                upos.push((i, j));
            }
        }
    }
    if upos.is_empty() {
        return Vec::new();
    }
    // parameter space: columns of `param` are the surviving unknown vectors
    let mut param = Mat::identity(ell, upos.len());
    for g in generating_set(ell) {
        if param.cols == 0 {
            break;
        }
        let ga = a.act(g);
        let gb = b.act(g);
        // sparse rows of the constraint (f ga - gb f) = 0, keyed by output
        let mut eqs: HashMap<(usize, usize), Vec<(usize, Cyclotomic)>> = HashMap::new();
        for (u, &(i, k)) in upos.iter().enumerate() {
            // f[i][k] * ga[k][j] lands at output (i, j)
            for j in 0..a.dim() {
                let c = ga.get(k, j);
                if !c.is_zero() {
                    eqs.entry((i, j)).or_default().push((u, c.clone()));
                }
            }
            // -gb[i'][i] * f[i][k] lands at output (i', k)  (here (i,k)=(k',j'))
        }
        for (u, &(k, j)) in upos.iter().enumerate() {
            for i in 0..b.dim() {
                let c = gb.get(i, k);
                if !c.is_zero() {
                    eqs.entry((i, j)).or_default().push((u, c.neg()));
                }
            }
        }
        // reduce each constraint row through the current parameter space and
        // echelonize; the kernel of the echelon cuts the parameters down
        let mut ech = Subspace::empty(ell, param.cols);
        for row in eqs.values() {
            let mut reduced = vec![Cyclotomic::zero(ell); param.cols];
            for (u, c) in row {
                for t in 0..param.cols {
                    let p = param.get(*u, t);
                    if !p.is_zero() {
                        reduced[t] = reduced[t].add(&c.mul(p));
                    }
                }
            }
            ech.insert(reduced);
        }
        if ech.dim() == 0 {
            continue;
        }
        let constraint = ech.basis_matrix().transpose(); // rows = equations
        let ker = constraint.kernel();
        param = param.mul(&ker);
    }
    (0..param.cols)
        .map(|t| {
            let mut f = Mat::zero(ell, b.dim(), a.dim());
            for (u, &(i, j)) in upos.iter().enumerate() {
                f.set(i, j, param.get(u, t).clone());
            }
            f
        })
        .collect()
}

/// Smallest submodule of `parent` containing the given vectors (closure
/// under the generating set), as a derived module.
pub fn submodule_generated(parent: &Rep, vectors: &[Vec<Cyclotomic>]) -> Rep {
    let sub = span_closure(parent, vectors);
    sub_to_rep(parent, &sub)
}

/// Stable-subspace closure of a set of vectors.
pub fn span_closure(parent: &Rep, vectors: &[Vec<Cyclotomic>]) -> Subspace {
    let ell = parent.ell();
    let mut sub = Subspace::empty(ell, parent.dim());
    let mut queue: Vec<Vec<Cyclotomic>> = Vec::new();
    for v in vectors {
        if sub.insert(v.clone()) {
            queue.push(v.clone());
        }
    }
    let gens = generating_set(ell);
    while let Some(v) = queue.pop() {
        for &g in &gens {
            let m = parent.act(g);
            let mut w = vec![Cyclotomic::zero(ell); parent.dim()];
            for (j, c) in v.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for i in 0..parent.dim() {
                    let a = m.get(i, j);
                    if !a.is_zero() {
                        w[i] = w[i].add(&a.mul(c));
                    }
                }
            }
            if sub.insert(w.clone()) {
                queue.push(w);
            }
        }
    }
    sub
}

/// The module carried by a stable subspace, as a derived module of `parent`.
pub fn sub_to_rep(parent: &Rep, sub: &Subspace) -> Rep {
    let incl = sub.basis_matrix();
    let proj = incl
        .left_inverse()
        .expect("echelonized basis has full column rank");
    Rep::derived(parent, proj, incl)
}

/// Quotient of `parent` by a stable subspace, carried by the complementary
/// coordinates of the subspace's echelon pivots.
pub fn quotient_rep(parent: &Rep, sub: &Subspace) -> Rep {
    let ell = parent.ell();
    let incl_sub = sub.basis_matrix();
    // pivot coordinates of the subspace
    let mut is_pivot = vec![false; parent.dim()];
    {
        // pivots are the leading coordinates of the echelon rows
        let m = incl_sub.transpose();
        for i in 0..m.rows {
            if let Some(p) = (0..m.cols).find(|&j| !m.get(i, j).is_zero()) {
                is_pivot[p] = true;
            }
        }
    }
    let free: Vec<usize> = (0..parent.dim()).filter(|&i| !is_pivot[i]).collect();
    let mut incl = Mat::zero(ell, parent.dim(), free.len());
    for (c, &i) in free.iter().enumerate() {
        incl.set(i, c, Cyclotomic::one(ell));
    }
    // projection: reduce modulo the subspace, then restrict to free coords
    let mut proj = Mat::zero(ell, free.len(), parent.dim());
    for j in 0..parent.dim() {
        let mut e = vec![Cyclotomic::zero(ell); parent.dim()];
        e[j] = Cyclotomic::one(ell);
        let r = sub.reduce(e);
        for (c, &i) in free.iter().enumerate() {
            proj.set(c, j, r[i].clone());
        }
    }
    Rep::derived(parent, proj, incl)
}

/// Socle of `m` inside its own coordinates: the sum of images of all maps
/// from the simple modules whose highest weights occur in `m`.
pub fn socle(m: &Rep, simple: &mut dyn FnMut(u32) -> Rep) -> Subspace {
    let ell = m.ell();
    let mut out = Subspace::empty(ell, m.dim());
    for a in candidate_highest_weights(m) {
        let l = simple(a);
        for f in hom_space(&l, m) {
            for j in 0..f.cols {
                out.insert(f.column(j));
            }
        }
    }
    out
}

/// Radical of `m`: intersection of kernels of all maps onto simples.
pub fn radical(m: &Rep, simple: &mut dyn FnMut(u32) -> Rep) -> Subspace {
    let ell = m.ell();
    let mut stacked: Option<Mat> = None;
    for a in candidate_highest_weights(m) {
        let l = simple(a);
        for f in hom_space(m, &l) {
            stacked = Some(match stacked {
                None => f,
                Some(s) => s.vstack(&f),
            });
        }
    }
    match stacked {
        None => Subspace::full(ell, m.dim()),
        Some(s) => Subspace::from_columns(&s.kernel()),
    }
}

fn candidate_highest_weights(m: &Rep) -> Vec<u32> {
    let mut ws: Vec<u32> = m
        .weights()
        .iter()
        .filter(|&&w| w >= 0)
        .map(|&w| w as u32)
        .collect();
    ws.sort_unstable();
    ws.dedup();
    ws
}

/// Socle and radical filtrations with layer dimensions, plus a rigidity
/// flag (socle series equals the reversed radical series as subspaces).
pub struct LoewySeries {
    /// Dimensions of the members of the socle series `0 < S_1 < ... < m`.
    pub socle_dims: Vec<usize>,
    /// Dimensions of the members of the radical series `m > R_1 > ... > 0`.
    pub radical_dims: Vec<usize>,
    /// Layer dimensions of the radical series, top layer first.
    pub radical_layers: Vec<usize>,
    /// Layer dimensions of the socle series, bottom layer first.
    pub socle_layers: Vec<usize>,
    pub rigid: bool,
}

pub fn loewy_series(m: &Rep, simple: &mut dyn FnMut(u32) -> Rep) -> LoewySeries {
    let ell = m.ell();
    // radical series as subspaces of m
    let mut rad_spaces: Vec<Subspace> = Vec::new();
    let mut current = Subspace::full(ell, m.dim());
    loop {
        let cur_rep = if current.dim() == m.dim() {
            m.clone()
        } else {
            sub_to_rep(m, &current)
        };
        if cur_rep.dim() == 0 {
            break;
        }
        let rad_inner = radical(&cur_rep, simple);
        // push forward through the inclusion into m, and all the way down a
        // chain of inclusions is just the top-level incl since cur_rep is
        // derived directly from m
        let mut next = Subspace::empty(ell, m.dim());
        let incl = current.basis_matrix();
        let inner_basis = rad_inner.basis_matrix();
        let pushed = incl.mul(&inner_basis);
        for j in 0..pushed.cols {
            next.insert(pushed.column(j));
        }
        assert!(next.dim() < current.dim(), "radical must strictly decrease");
        rad_spaces.push(next.clone());
        if next.dim() == 0 {
            break;
        }
        current = next;
    }
    // socle series as subspaces of m
    let mut soc_spaces: Vec<Subspace> = Vec::new();
    let mut below = Subspace::empty(ell, m.dim());
    loop {
        if below.dim() == m.dim() {
            break;
        }
        let q = if below.dim() == 0 {
            m.clone()
        } else {
            quotient_rep(m, &below)
        };
        let soc_q = socle(&q, simple);
        // preimage: below + incl(soc of quotient) .. quotient coordinates
        // are free coordinates of m, so inclusion is the derived incl
        let mut next = below.clone();
        let (proj_of_q, incl_of_q) = derived_maps(&q, m);
        let _ = proj_of_q;
        let pushed = incl_of_q.mul(&soc_q.basis_matrix());
        for j in 0..pushed.cols {
            next.insert(pushed.column(j));
        }
        assert!(next.dim() > below.dim(), "socle must strictly increase");
        soc_spaces.push(next.clone());
        below = next;
    }
    let radical_dims: Vec<usize> = rad_spaces.iter().map(|s| s.dim()).collect();
    let socle_dims: Vec<usize> = soc_spaces.iter().map(|s| s.dim()).collect();
    let mut radical_layers = Vec::new();
    let mut prev = m.dim();
    for &d in &radical_dims {
        radical_layers.push(prev - d);
        prev = d;
    }
    if prev > 0 {
        radical_layers.push(prev);
    }
    let mut socle_layers = Vec::new();
    let mut prev = 0usize;
    for &d in &socle_dims {
        socle_layers.push(d - prev);
        prev = d;
    }
    // rigidity: same length and S_i = R_(k-i) as subspaces
    let k = socle_layers.len();
    let rigid = k == radical_layers.len() && {
        // R list: [R_1, ..], socle list: [S_1, ..]; S_i should equal R_(k-i)
        (1..k).all(|i| {
            let s = &soc_spaces[i - 1];
            let r = &rad_spaces[k - i - 1];
            s.equals(r)
        })
    };
    LoewySeries {
        socle_dims,
        radical_dims,
        radical_layers,
        socle_layers,
        rigid,
    }
}

/// For a module derived from `parent`, its (proj, incl) pair.
fn derived_maps(derived: &Rep, parent: &Rep) -> (Mat, Mat) {
    use crate::uq::rep::RepKind;
    match derived.kind() {
        RepKind::Derived { parent: p, proj, incl } if Rep::same(p, parent) => {
            (proj.clone(), incl.clone())
        }
        _ => {
            assert!(Rep::same(derived, parent), "expected a module derived from the given parent");
            let id = Mat::identity(parent.ell(), parent.dim());
            (id.clone(), id)
        }
    }
}

/// Invertible intertwiner `a -> b` if one exists (searching basis maps and
/// seeded random combinations).
pub fn iso_certificate(a: &Rep, b: &Rep, seed: u64) -> Option<Mat> {
    if a.dim() != b.dim() {
        return None;
    }
    let homs = hom_space(a, b);
    invertible_combination(&homs, a.ell(), seed)
}

fn invertible_combination(homs: &[Mat], ell: u32, seed: u64) -> Option<Mat> {
    for f in homs {
        if f.inverse().is_some() {
            return Some(f.clone());
        }
    }
    if homs.len() < 2 {
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..64 {
        let mut f = Mat::zero(ell, homs[0].rows, homs[0].cols);
        for h in homs {
            let c = Cyclotomic::from_int(ell, rng.gen_range(-5..=5));
            f = f.add(&h.scale(&c));
        }
        if f.inverse().is_some() {
            return Some(f);
        }
    }
    None
}

/// If `t` is a direct summand of `m`, return a complement of one copy of it
/// (a derived submodule of `m`), found via a pair of maps `f: t -> m`,
/// `g: m -> t` with `g f` invertible.
pub fn peel_summand(m: &Rep, t: &Rep, seed: u64) -> Option<Rep> {
    let fs = hom_space(t, m);
    let gs = hom_space(m, t);
    if fs.is_empty() || gs.is_empty() {
        return None;
    }
    let try_pair = |f: &Mat, g: &Mat| -> Option<Rep> {
        let gf = g.mul(f);
        let inv = gf.inverse()?;
        // h = (g f)^-1 g satisfies h f = id; m = im(f) + ker(h) directly
        let h = inv.mul(g);
        let ker = h.kernel();
        let sub = Subspace::from_columns(&ker);
        assert_eq!(sub.dim(), m.dim() - t.dim());
        Some(sub_to_rep(m, &sub))
    };
    for f in &fs {
        for g in &gs {
            if let Some(r) = try_pair(f, g) {
                return Some(r);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ell = m.ell();
    for _ in 0..64 {
        let mut f = Mat::zero(ell, m.dim(), t.dim());
        for b in &fs {
            f = f.add(&b.scale(&Cyclotomic::from_int(ell, rng.gen_range(-5..=5))));
        }
        let mut g = Mat::zero(ell, t.dim(), m.dim());
        for b in &gs {
            g = g.add(&b.scale(&Cyclotomic::from_int(ell, rng.gen_range(-5..=5))));
        }
        if let Some(r) = try_pair(&f, &g) {
            return Some(r);
        }
    }
    None
}

/// Indecomposability via the endomorphism algebra: the trace form's radical
/// is the Jacobson radical in characteristic zero, so the module is
/// indecomposable exactly when the trace form has rank one.
pub fn is_indecomposable(m: &Rep) -> bool {
    let end = hom_space(m, m);
    let d = end.len();
    if d == 0 {
        return false; // zero module
    }
    let ell = m.ell();
    let gram = Mat::from_fn(ell, d, d, |i, j| {
        let prod = end[i].mul(&end[j]);
        let mut tr = Cyclotomic::zero(ell);
        for k in 0..prod.rows {
            tr = tr.add(prod.get(k, k));
        }
        tr
    });
    gram.rank() == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::uq::rep::check_relations;

    /// The simple module with highest weight `n`, built as the image of the
    /// (unique up to scalar) map from the standard to the costandard module.
    fn simple(ell: u32, n: u32) -> Rep {
        let v = Rep::weyl(ell, n);
        let d = Rep::dual_weyl(ell, n);
        let homs = hom_space(&v, &d);
        assert_eq!(homs.len(), 1, "standard -> costandard maps are one-dimensional");
        let f = &homs[0];
        let sub = Subspace::from_columns(&f.image());
        sub_to_rep(&d, &sub)
    }

    #[test]
    fn standard_to_costandard_hom_and_simples() {
        // dim of the simple with highest weight n0 + l*n1 is (n0+1)(n1+1)
        for ell in [3u32, 5] {
            for n in 0..=(2 * ell) {
                let l = simple(ell, n);
                let (n0, n1) = (n % ell, n / ell);
                assert_eq!(l.dim() as u32, (n0 + 1) * (n1 + 1), "ell={ell} n={n}");
                check_relations(&l, 2 * ell).unwrap();
            }
        }
    }

    #[test]
    fn hom_orthogonality_between_standard_families() {
        let ell = 3;
        for m in 0..=5u32 {
            for k in 0..=5u32 {
                let h = hom_space(&Rep::weyl(ell, m), &Rep::dual_weyl(ell, k));
                assert_eq!(h.len(), usize::from(m == k), "m={m} k={k}");
            }
        }
    }

    #[test]
    fn self_homs_of_standard_modules_are_scalars() {
        // a standard module has simple head, so its only proper images are
        // submodules that are not quotients: every self-map is a scalar,
        // even in the non-semisimple case n = 4 at root order 3
        let h = hom_space(&Rep::weyl(3, 4), &Rep::weyl(3, 4));
        assert_eq!(h.len(), 1);
        let h = hom_space(&Rep::weyl(3, 2), &Rep::weyl(3, 2));
        assert_eq!(h.len(), 1);
    }

    #[test]
    fn indecomposability_certificate() {
        // the highest-weight-4 standard module at root order 3 is
        // indecomposable but not simple
        assert!(is_indecomposable(&Rep::weyl(3, 4)));
        // while the two-fold tensor square splits at root order 3, since
        // n = 2 falls in the Steinberg family there
        let v1 = Rep::weyl(3, 1);
        assert!(!is_indecomposable(&Rep::tensor(&v1, &v1)));
    }

    #[test]
    fn peel_at_three_splits_steinberg_summand() {
        let ell = 3;
        let v1 = Rep::weyl(ell, 1);
        let t = Rep::tensor(&v1, &v1);
        let rest = peel_summand(&t, &Rep::weyl(ell, 2), 1).expect("splits");
        assert_eq!(rest.dim(), 1);
        assert!(iso_certificate(&rest, &Rep::weyl(ell, 0), 1).is_some());
    }

    #[test]
    fn peel_at_five_leaves_trivial_summand() {
        // at root order 5 the two-fold tensor square splits off the
        // three-dimensional standard module, leaving the trivial one
        let ell = 5;
        let v1 = Rep::weyl(ell, 1);
        let t = Rep::tensor(&v1, &v1);
        let v2 = Rep::weyl(ell, 2);
        let rest = peel_summand(&t, &v2, 1).expect("summand must split off");
        assert_eq!(rest.dim(), 1);
        assert_eq!(rest.weights(), &[0]);
        // and the complement is the trivial module
        assert!(iso_certificate(&rest, &Rep::weyl(ell, 0), 1).is_some());
    }

    #[test]
    fn loewy_series_of_standard_module() {
        // at root order 3, the standard module of highest weight 4 has
        // socle L_0 (dim 1) under L_4 (dim 4): layers [4, 1] from the top
        let ell = 3;
        let v = Rep::weyl(ell, 4);
        let mut simple_fn = |n: u32| simple(ell, n);
        let ls = loewy_series(&v, &mut simple_fn);
        assert_eq!(ls.radical_layers, vec![4, 1]);
        assert_eq!(ls.socle_layers, vec![1, 4]);
        assert!(ls.rigid);
    }

    #[test]
    fn submodule_generated_closure() {
        let ell = 3;
        let v1 = Rep::weyl(ell, 1);
        let t = Rep::tensor(&v1, &v1);
        // the highest vector generates a three-dimensional stable subspace
        let mut hw = vec![Cyclotomic::zero(ell); 4];
        hw[3] = Cyclotomic::one(ell);
        let sub = submodule_generated(&t, &[hw]);
        assert_eq!(sub.dim(), 3);
        check_relations(&sub, 2 * ell).unwrap();
    }
}
