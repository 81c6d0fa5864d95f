//! Exact computer algebra for the quantum function algebra of SL2 at an odd
//! root of unity, together with the quantized enveloping algebra side needed
//! to analyse it: divided-power module actions, tilting modules, matrix
//! coefficients, the bimodule filtration of the function algebra, and a
//! generic-parameter quantum matrix rewriting engine.

pub mod bimodule;
pub mod coeff;
pub mod qmatrix;
pub mod linalg;
pub mod oq;
pub mod uq;
pub mod verify;
pub mod weights;

pub type Error = String;

/// The long-form guide, shared verbatim with the rendered book under
/// `book/`.  Each chapter's code blocks compile and run as doc-tests, so
/// the guide cannot drift out of sync with the library.
pub mod guide {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/coefficients.md")]
    pub mod coefficients {}
    #[doc = include_str!("../../../book/src/modules.md")]
    pub mod modules {}
    #[doc = include_str!("../../../book/src/coordinates.md")]
    pub mod coordinates {}
    #[doc = include_str!("../../../book/src/bimodules.md")]
    pub mod bimodules {}
    #[doc = include_str!("../../../book/src/qmatrix.md")]
    pub mod quantum_matrices {}
    #[doc = include_str!("../../../book/src/cli.md")]
    pub mod cli {}
}
