use std::collections::HashSet;
use std::sync::LazyLock;

use dashmap::DashMap;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::factorial;
use crate::symgroup::Partition;

/// `f^λ`, the dimension of the irreducible `S_k`-representation indexed by
/// `λ`, via the hook length formula `k!/∏ hooks`.
pub fn dimension(lambda: &Partition) -> BigInt {
    let mut hooks = BigInt::one();
    for (i, j) in lambda.cells() {
        hooks *= lambda.hook_length(i, j);
    }
    factorial(lambda.weight()) / hooks
}

/// Murnaghan–Nakayama evaluations re-enter heavily across Weingarten table
/// builds, so results are memoized process-wide. DashMap gives the required
/// insert-if-absent semantics under concurrent use.
static CHARACTER_CACHE: LazyLock<DashMap<(Partition, Partition), BigInt>> =
    LazyLock::new(DashMap::new);

/// The irreducible character value `χ^λ(σ)` for any `σ` of cycle-type `μ`,
/// by the Murnaghan–Nakayama border-strip recursion.
pub fn character(lambda: &Partition, mu: &Partition) -> Result<BigInt> {
    if lambda.weight() != mu.weight() {
        return Err(Error::DegreeMismatch {
            left: lambda.weight(),
            right: mu.weight(),
        });
    }
    Ok(character_rec(lambda, mu))
}

fn character_rec(lambda: &Partition, mu: &Partition) -> BigInt {
    if lambda.weight() == 0 {
        return BigInt::one();
    }
    let key = (lambda.clone(), mu.clone());
    if let Some(hit) = CHARACTER_CACHE.get(&key) {
        return hit.clone();
    }

    // Remove a border strip of the largest part's length; recurse on the rest.
    let strip = mu.part(0);
    let rest = Partition::new(mu.parts()[1..].to_vec()).expect("suffix of a partition");

    // First-column hook lengths ("beta set") of λ, padded to ℓ(λ) entries.
    let rows = lambda.len();
    let beta: Vec<usize> = (0..rows).map(|i| lambda.part(i) + rows - 1 - i).collect();
    let beta_set: HashSet<usize> = beta.iter().copied().collect();

    let mut total = BigInt::zero();
    for (idx, &b) in beta.iter().enumerate() {
        if b < strip || beta_set.contains(&(b - strip)) {
            continue;
        }
        // Height parity of the strip = number of beta entries jumped over.
        let crossed = beta.iter().filter(|&&c| c > b - strip && c < b).count();
        let mut next_beta = beta.clone();
        next_beta[idx] = b - strip;
        next_beta.sort_unstable_by(|x, y| y.cmp(x));
        let next_lambda = Partition::from_unsorted(
            next_beta
                .iter()
                .enumerate()
                .map(|(i, &c)| c + i + 1 - rows)
                .collect(),
        );
        let term = character_rec(&next_lambda, &rest);
        if crossed % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }

    CHARACTER_CACHE.insert(key, total.clone());
    total
}
