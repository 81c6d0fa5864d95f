//! Quantized enveloping algebra engine: generator symbols, module
//! constructions, homomorphism spaces, and tilting-module assembly.

pub mod qplane;
pub mod engine;
pub mod homs;
pub mod rep;
pub mod subspace;
