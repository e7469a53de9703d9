use std::collections::BTreeMap;
use std::sync::{Arc, LazyLock};

use dashmap::DashMap;
use num_bigint::BigInt;

use crate::charalg::characters::character;
use crate::error::{Error, Result};
use crate::scalar::{factorial, rat_big, Rational};
use crate::symgroup::{hyperoctahedral_elements, sigma_mu, Partition};

/// For a coset-type `μ ⊢ k`: the histogram of cycle-types of `σ_μ ζ` as `ζ`
/// runs over `H_k`. Computing it once per `μ` lets every spherical function
/// at that `μ` be a cheap character-weighted sum.
static HISTOGRAM_CACHE: LazyLock<DashMap<Partition, Arc<BTreeMap<Partition, u64>>>> =
    LazyLock::new(DashMap::new);

fn coset_histogram(mu: &Partition) -> Arc<BTreeMap<Partition, u64>> {
    if let Some(hit) = HISTOGRAM_CACHE.get(mu) {
        return hit.clone();
    }
    let k = mu.weight();
    let rep = sigma_mu(mu);
    let mut hist: BTreeMap<Partition, u64> = BTreeMap::new();
    for zeta in hyperoctahedral_elements(k) {
        *hist.entry(rep.compose(&zeta).cycle_type()).or_insert(0) += 1;
    }
    let arc = Arc::new(hist);
    HISTOGRAM_CACHE.insert(mu.clone(), arc.clone());
    arc
}

static OMEGA_CACHE: LazyLock<DashMap<(Partition, Partition), Rational>> =
    LazyLock::new(DashMap::new);

/// The zonal spherical function of the Gelfand pair `(S_{2k}, H_k)` at the
/// canonical representative:
/// `ω^λ(σ_μ) = (2^k k!)⁻¹ Σ_{ζ ∈ H_k} χ^{2λ}(σ_μ ζ)`.
pub fn zonal_spherical(lambda: &Partition, mu: &Partition) -> Result<Rational> {
    if lambda.weight() != mu.weight() {
        return Err(Error::DegreeMismatch {
            left: lambda.weight(),
            right: mu.weight(),
        });
    }
    let key = (lambda.clone(), mu.clone());
    if let Some(hit) = OMEGA_CACHE.get(&key) {
        return Ok(hit.clone());
    }
    let k = mu.weight();
    let doubled = lambda.doubled();
    let mut total = BigInt::ZERO;
    for (class, count) in coset_histogram(mu).iter() {
        total += character(&doubled, class)? * count;
    }
    let order = rat_big(factorial(k) * BigInt::from(1u64 << k));
    let value = rat_big(total) / order;
    OMEGA_CACHE.insert(key, value.clone());
    Ok(value)
}

/// The twisted spherical function of `(S_{2k}, H_k, ε)` at the canonical
/// representative: `π^λ(σ_μ) = ω^{λ'}(σ_μ)`. Values away from the
/// representatives extend by the ε-twist.
pub fn twisted_spherical(lambda: &Partition, mu: &Partition) -> Result<Rational> {
    zonal_spherical(&lambda.conjugate(), mu)
}
