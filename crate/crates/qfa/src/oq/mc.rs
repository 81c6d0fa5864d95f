//! Matrix coefficients of modules as coordinate-algebra elements.
//!
//! A module whose construction chain bottoms out in copies of the
//! two-dimensional module (tensor products and derived submodules/quotients
//! of such) has a panel of matrix coefficients `mc[i][j]` with
//! `rho(u)[i][j] = <mc[i][j], u>` for every algebra element `u`.  Formulaic
//! modules of dimension three or more and antipode-duals carry no such chain
//! and report an error.

use std::collections::HashMap;
use std::rc::Rc;

use crate::coeff::Cyclotomic;
use crate::oq::algebra::{Letter, OqElem};
use crate::uq::rep::{Rep, RepKind};

pub type McPanel = Rc<Vec<Vec<OqElem>>>;

/// Memoizing matrix-coefficient computer.  Panels are keyed by module
/// identity; handles are retained so keys stay unique.
#[derive(Default)]
pub struct McCache {
    panels: HashMap<usize, McPanel>,
    keep_alive: Vec<Rep>,
}

impl McCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn matrix_coeffs(&mut self, rep: &Rep) -> Result<McPanel, String> {
        let key = Rc::as_ptr(&rep.0) as usize;
        if let Some(p) = self.panels.get(&key) {
            return Ok(p.clone());
        }
        let ell = rep.ell();
        let panel: Vec<Vec<OqElem>> = match rep.kind() {
            RepKind::Weyl(0) => vec![vec![OqElem::one(ell)]],
            RepKind::Weyl(1) => {
                let g = |l| OqElem::gen_letter(ell, l);
                // basis f_0 (weight -1), f_1 (weight 1 = highest):
                // rows/cols in that order
                vec![
                    vec![g(Letter::D), g(Letter::C)],
                    vec![g(Letter::B), g(Letter::A)],
                ]
            }
            RepKind::Weyl(_) | RepKind::DualWeyl(_) | RepKind::Dual(_) => {
                return Err(
                    "module carries no construction chain down to the two-dimensional leaves"
                        .into(),
                )
            }
            RepKind::Tensor(a, b) => {
                let pa = self.matrix_coeffs(a)?;
                let pb = self.matrix_coeffs(b)?;
                let (da, db) = (a.dim(), b.dim());
                let dim = da * db;
                let mut panel = vec![vec![OqElem::zero(ell); dim]; dim];
                for i1 in 0..da {
                    for j1 in 0..da {
                        for i2 in 0..db {
                            for j2 in 0..db {
                                panel[i1 * db + i2][j1 * db + j2] =
                                    pa[i1][j1].mul(&pb[i2][j2]);
                            }
                        }
                    }
                }
                panel
            }
            RepKind::Derived { parent, proj, incl } => {
                let pp = self.matrix_coeffs(parent)?;
                let d = rep.dim();
                let pd = parent.dim();
                let mut panel = vec![vec![OqElem::zero(ell); d]; d];
                for j in 0..d {
                    for k in 0..d {
                        let mut acc = OqElem::zero(ell);
                        for r in 0..pd {
                            let pjr = proj.get(j, r);
                            if pjr.is_zero() {
                                continue;
                            }
                            for s in 0..pd {
                                let isk = incl.get(s, k);
                                if isk.is_zero() {
                                    continue;
                                }
                                acc = acc.add(&pp[r][s].scale(&pjr.mul(isk)));
                            }
                        }
                        panel[j][k] = acc;
                    }
                }
                panel
            }
        };
        let p = Rc::new(panel);
        self.panels.insert(key, p.clone());
        self.keep_alive.push(rep.clone());
        Ok(p)
    }

    /// Trace form of the module: the sum of diagonal matrix coefficients.
    pub fn trace(&mut self, rep: &Rep) -> Result<OqElem, String> {
        let p = self.matrix_coeffs(rep)?;
        let mut t = OqElem::zero(rep.ell());
        for i in 0..rep.dim() {
            t = t.add(&p[i][i]);
        }
        Ok(t)
    }
}

/// Pairing of a coordinate-algebra element against a word of generator
/// symbols (empty word = identity): each degree-N monomial is a matrix
/// entry of the N-fold tensor power of the two-dimensional module.
pub fn evaluate(
    f: &OqElem,
    word: &[crate::uq::rep::Gen],
    eng: &crate::uq::engine::Engine,
) -> Cyclotomic {
    let ell = f.ell;
    assert_eq!(ell, eng.ell());
    let mut out = Cyclotomic::zero(ell);
    for (mono, coeff) in &f.terms {
        let n = mono.degree();
        let rep = eng.tensor_power_v1(n);
        let mat = rep.act_word(word);
        // letter -> (row bit, col bit): a=(1,1), b=(1,0), c=(0,1), d=(0,0),
        // first factor slowest
        let (mut row, mut col) = (0usize, 0usize);
        for l in mono.letters() {
            let (i, j) = match l {
                Letter::A => (1, 1),
                Letter::B => (1, 0),
                Letter::C => (0, 1),
                Letter::D => (0, 0),
            };
            row = row * 2 + i;
            col = col * 2 + j;
        }
        out = out.add(&mat.get(row, col).mul(coeff));
    }
    out
}
