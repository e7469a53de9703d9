//! Symmetric-group combinatorics: partitions, permutations, the
//! hyperoctahedral subgroup `H_k` of `S_{2k}`, perfect-matching coset
//! representatives `M_{2k}`, and double-coset reduction with sign tracking.
//!
//! All operations here are pure; the types are immutable after construction
//! and freely shareable across threads.

mod hyperoctahedral;
mod partition;
mod permutation;

pub use hyperoctahedral::{
    coset_type, double_coset_factor, double_coset_reduce, enumerate_m2k, enumerate_m2k_unchecked,
    hyperoctahedral_elements, is_hyperoctahedral, matchings_count, sigma_mu, Matching,
    M2K_DEFAULT_CAP,
};
pub use partition::Partition;
pub use permutation::Permutation;
