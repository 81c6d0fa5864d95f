//! Quantized coordinate algebra of SL(2): normal-form arithmetic, Hopf
//! structure, the pairing with the enveloping algebra, matrix coefficients,
//! and translation-action operators on degree windows.

pub mod algebra;
pub mod actions;
pub mod hopf;
pub mod mc;
pub mod text;
pub mod window;
