use num_bigint::BigInt;

use crate::charalg::characters::character;
use crate::charalg::spherical::{twisted_spherical, zonal_spherical};
use crate::error::Result;
use crate::scalar::{factorial, rat, rat_big, Rational};
use crate::symgroup::Partition;

/// `p_μ(1^a, (-1)^b) = ∏_i (a + (-1)^{μ_i} b)`, the power-sum evaluation at
/// `a` ones and `b` minus-ones.
pub fn power_sum_signed(mu: &Partition, a: usize, b: usize) -> Rational {
    let a = a as i64;
    let b = b as i64;
    mu.parts()
        .iter()
        .map(|&m| rat(if m % 2 == 0 { a + b } else { a - b }))
        .product()
}

/// Number of elements of `M_{2k}` with coset-type `μ`:
/// `2^k k! / (2^{ℓ(μ)} z_μ)`.
pub fn matchings_of_coset_type(mu: &Partition) -> BigInt {
    let k = mu.weight();
    let order = factorial(k) * BigInt::from(1u64 << k);
    order / (mu.centralizer_order() * BigInt::from(1u64 << mu.len()))
}

/// `s_λ(1^a, (-1)^b)` via the power-sum expansion
/// `s_λ = Σ_μ z_μ⁻¹ χ^λ(μ) p_μ`.
pub fn schur_signed(lambda: &Partition, a: usize, b: usize) -> Result<Rational> {
    let k = lambda.weight();
    let mut total = Rational::from_integer(BigInt::ZERO);
    for mu in Partition::all(k) {
        total += rat_big(character(lambda, &mu)?) * power_sum_signed(&mu, a, b)
            / rat_big(mu.centralizer_order());
    }
    Ok(total)
}

/// `Z_λ(1^a, (-1)^b)`, the zonal polynomial evaluation, via the inverse of
/// the `p_μ`-in-`ω` expansion: `Z_λ = Σ_μ m_μ ω^λ(σ_μ) p_μ` where `m_μ`
/// counts matchings of coset-type `μ`. Normalized so `Z_λ(1^n) = D_λ(n)`.
pub fn zonal_signed(lambda: &Partition, a: usize, b: usize) -> Result<Rational> {
    let k = lambda.weight();
    let mut total = Rational::from_integer(BigInt::ZERO);
    for mu in Partition::all(k) {
        total += rat_big(matchings_of_coset_type(&mu))
            * zonal_spherical(lambda, &mu)?
            * power_sum_signed(&mu, a, b);
    }
    Ok(total)
}

/// `Z'_λ(1^a, (-1)^b)`, the twisted zonal polynomial evaluation:
/// `Z'_λ = Σ_μ m_μ (-1)^{k-ℓ(μ)} 2^{ℓ(μ)} π^λ(σ_μ) p_μ`, normalized so
/// `Z'_λ(1^n) = D'_λ(n)`.
pub fn twisted_zonal_signed(lambda: &Partition, a: usize, b: usize) -> Result<Rational> {
    let k = lambda.weight();
    let mut total = Rational::from_integer(BigInt::ZERO);
    for mu in Partition::all(k) {
        let sign = if (k - mu.len()) % 2 == 0 { 1 } else { -1 };
        total += rat(sign * (1i64 << mu.len()))
            * rat_big(matchings_of_coset_type(&mu))
            * twisted_spherical(lambda, &mu)?
            * power_sum_signed(&mu, a, b);
    }
    Ok(total)
}
