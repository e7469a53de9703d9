//! Exact evaluation of moments of matrix elements of Haar-distributed random
//! matrices on the classical compact groups U(n), O(n), Sp(2n) and on the
//! seven series of classical compact symmetric spaces (the circular, chiral
//! and Bogoliubov-de Gennes ensembles).
//!
//! Everything on the exact path is computed over arbitrary-precision
//! rationals; no floating point is involved anywhere in this crate.
//!
//! The crate is organized in four layers:
//!
//! * [`symgroup`] — partitions, permutations, the hyperoctahedral subgroup
//!   `H_k` of `S_{2k}`, perfect matchings and double-coset reduction;
//! * [`charalg`] — irreducible characters of symmetric groups, zonal and
//!   twisted spherical functions, the `*` and `⋆` convolutions, and signed
//!   evaluations of Schur/zonal polynomials;
//! * [`weingarten`] — the `T`-functions and the ten Weingarten functions,
//!   with pole tracking and a process-wide table cache;
//! * [`moments`] — contraction symbols, the exact moment evaluator for every
//!   ensemble class, and brute-force oracles (tensor contraction, exact Gram
//!   pseudo-inverse).

pub mod charalg;
pub mod error;
pub mod moments;
pub mod scalar;
pub mod symgroup;
pub mod weingarten;

pub use error::{Error, Result};
pub use scalar::Rational;
