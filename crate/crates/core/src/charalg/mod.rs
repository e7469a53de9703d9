//! The function algebras of Weingarten calculus: irreducible characters of
//! `S_k`, class functions under `*`, `H_k`-(bi/twisted-)invariant functions
//! under `⋆`, zonal and twisted spherical functions, and signed evaluations
//! of Schur, zonal and twisted zonal polynomials.

mod characters;
mod functions;
mod spherical;
mod symfunc;

pub use characters::{character, dimension};
pub use functions::{
    convolve_dense, convolve_star_dense, ClassFunction, CosetFunction, Twist,
};
pub use spherical::{twisted_spherical, zonal_spherical};
pub use symfunc::{
    matchings_of_coset_type, power_sum_signed, schur_signed, twisted_zonal_signed, zonal_signed,
};
