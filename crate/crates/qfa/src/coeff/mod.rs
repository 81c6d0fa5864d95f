//! Exact coefficient arithmetic: Laurent polynomials over Q, the cyclotomic
//! field Q(q) at a primitive ell-th root of unity, rational functions in `v`,
//! and Gaussian integers / factorials / binomials.

pub mod cyclotomic;
pub mod gauss;
pub mod laurent;
pub mod poly;
pub mod rational_fn;

pub use cyclotomic::{cyclotomic_poly, euler_phi, Cyclotomic};
pub use gauss::{
    gauss_binom, gauss_binom_at, gauss_binom_rational, gauss_factorial, gauss_factorial_at,
    gauss_int, gauss_int_at,
};
pub use laurent::{q_int, LaurentPoly, Q};
pub use rational_fn::RationalFn;
