//! Resurgent trans-series, WKB spectral functions, and high-precision
//! spectra for one-dimensional potentials with degenerate minima.
//!
//! The library computes, to arbitrary order and exactly at the coefficient
//! level, the pair of spectral functions B(E,g) and A(E,g) that enter the
//! generalized Bohr–Sommerfeld quantization conditions of double-well-like
//! potentials, solves those conditions perturbatively and as trans-series in
//! the instanton fugacity, and validates everything against an independent
//! arbitrary-precision Schrödinger eigensolver and principal-value Borel
//! resummation.

pub mod algebra;
pub mod numeric;
pub mod error;

pub use error::{Error, Result};
