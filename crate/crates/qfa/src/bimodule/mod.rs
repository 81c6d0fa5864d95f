//! Two-sided translation modules carried by coordinate windows: spans of
//! matrix coefficients, their filtrations by smaller coefficient spaces, and
//! the structure theory (intertwiners, Loewy series, indecomposability) of
//! the resulting bimodules.

pub mod birep;
pub mod filtration;
