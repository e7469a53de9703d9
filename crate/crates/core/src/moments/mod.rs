//! The exact moment evaluator: contraction symbols (`δ`, `Δ`, `Δ'`), the
//! per-class moment theorems, and the brute-force oracles (tensor
//! contraction `𝒯_σ(X, Y)` and the exact Gram pseudo-inverse over `M_{2k}`)
//! used to validate the closed forms.

mod contraction;
mod evaluate;
mod gram;
mod ratmat;

pub use contraction::{
    contraction_t, delta, delta_pair, delta_pair_symplectic, i_dprime_matrix, i_prime_matrix,
    j_matrix, PairingTable, CONTRACTION_BUDGET,
};
pub use evaluate::{
    evaluate_moment, evaluate_moment_with, plain_to_tilde, EvalConfig, IndexSequence,
    MomentQuery,
};
pub use gram::gram_pseudo_inverse_oracle;
pub use ratmat::RatMat;
