use crate::charalg::{ClassFunction, CosetFunction, Twist};
use crate::error::{Error, Result};
use num_traits::Zero;

use crate::scalar::{rat, sign_rat, Rational};
use crate::symgroup::{coset_type, double_coset_reduce, Partition, Permutation};
use crate::weingarten::class::EnsembleClass;
use crate::weingarten::polys::rat_pow;

/// `T^U(σ; z) = z^{ℓ(μ)}` with `μ` the cycle-type of `σ ∈ S_k`.
pub fn t_unitary(sigma: &Permutation, z: &Rational) -> Rational {
    rat_pow(z, sigma.cycle_type().len())
}

/// `T^O(σ; z) = z^{ℓ(μ)}` with `μ` the coset-type of `σ ∈ S_{2k}`.
pub fn t_orthogonal(sigma: &Permutation, z: &Rational) -> Result<Rational> {
    Ok(rat_pow(z, coset_type(sigma)?.len()))
}

/// `T^Sp(σ; z) = (-1)^k ε(σ) (-2z)^{ℓ(μ)}` with `μ` the coset-type.
pub fn t_symplectic(sigma: &Permutation, z: &Rational) -> Result<Rational> {
    let mu = coset_type(sigma)?;
    let k = sigma.degree() / 2;
    let body = rat_pow(&(rat(-2) * z), mu.len());
    let sign = if k % 2 == 0 { 1 } else { -1 };
    Ok(sign_rat(sign * sigma.signature()) * body)
}

fn chiral_body(mu: &Partition, a: usize, b: usize) -> Rational {
    let s = rat((a + b) as i64);
    let d = rat(a as i64 - b as i64);
    rat_pow(&s, mu.even_part_count()) * rat_pow(&d, mu.odd_part_count())
}

/// `T^{A III}(σ) = (a+b)^{ℓᵉ(μ)} (a-b)^{ℓᵒ(μ)}` with `μ` the cycle-type of
/// `σ ∈ S_k` (the trace product of `I'_{ab}` over the cycles).
pub fn t_chiral_cycle(sigma: &Permutation, a: usize, b: usize) -> Rational {
    chiral_body(&sigma.cycle_type(), a, b)
}

/// `T^{BD I}(σ) = (a+b)^{ℓᵉ(μ)} (a-b)^{ℓᵒ(μ)}` with `μ` the coset-type of
/// `σ ∈ S_{2k}`.
pub fn t_chiral_orthogonal(sigma: &Permutation, a: usize, b: usize) -> Result<Rational> {
    Ok(chiral_body(&coset_type(sigma)?, a, b))
}

/// `T^{C II}(σ) = (-1)^{k-ℓ(μ)} ε(σ) 2^{ℓ(μ)} (a+b)^{ℓᵉ(μ)} (a-b)^{ℓᵒ(μ)}`.
pub fn t_chiral_symplectic(sigma: &Permutation, a: usize, b: usize) -> Result<Rational> {
    let mu = coset_type(sigma)?;
    let k = sigma.degree() / 2;
    let sign = if (k - mu.len()) % 2 == 0 { 1 } else { -1 };
    Ok(sign_rat(sign * sigma.signature())
        * rat(1i64 << mu.len())
        * chiral_body(&mu, a, b))
}

/// `T^{D III}(σ; n)`: `ε(ζ)(-2n)^{ℓ(μ)}` on even coset-types for
/// `σ = ζ σ_μ ζ'`, zero otherwise. Vanishes identically for odd `k`.
pub fn t_bdg_orthogonal(sigma: &Permutation, n: usize) -> Result<Rational> {
    let (mu, left, _) = double_coset_reduce(sigma)?;
    if !mu.is_even() {
        return Ok(Rational::zero());
    }
    Ok(sign_rat(left) * rat_pow(&rat(-2 * n as i64), mu.len()))
}

/// `T^{C I}(σ; n)`: `ε(ζ')(-2n)^{ℓ(μ)}` on even coset-types, zero
/// otherwise. Vanishes identically for odd `k`.
pub fn t_bdg_symplectic(sigma: &Permutation, n: usize) -> Result<Rational> {
    let (mu, _, right) = double_coset_reduce(sigma)?;
    if !mu.is_even() {
        return Ok(Rational::zero());
    }
    Ok(sign_rat(right) * rat_pow(&rat(-2 * n as i64), mu.len()))
}

/// Class-level `T`-function dispatch. A I and A II have no `T`-function of
/// their own (their calculus rides on the unitary one), so they are
/// rejected here.
pub fn t_function(class: &EnsembleClass, sigma: &Permutation) -> Result<Rational> {
    class.validate()?;
    match *class {
        EnsembleClass::Unitary { n } => Ok(t_unitary(sigma, &rat(n as i64))),
        EnsembleClass::Orthogonal { n } => t_orthogonal(sigma, &rat(n as i64)),
        EnsembleClass::Symplectic { n } => t_symplectic(sigma, &rat(n as i64)),
        EnsembleClass::ChiralUnitary { a, b } => Ok(t_chiral_cycle(sigma, a, b)),
        EnsembleClass::ChiralOrthogonal { a, b } => t_chiral_orthogonal(sigma, a, b),
        EnsembleClass::ChiralSymplectic { a, b } => t_chiral_symplectic(sigma, a, b),
        EnsembleClass::BdgOrthogonal { n } => t_bdg_orthogonal(sigma, n),
        EnsembleClass::BdgSymplectic { n } => t_bdg_symplectic(sigma, n),
        EnsembleClass::Coe { .. } | EnsembleClass::Cse { .. } => {
            Err(Error::InvalidParameters(format!(
                "class {} has no T-function of its own",
                class.tag()
            )))
        }
    }
}

/// `T^U(·; z)` tabulated as a class function on `S_k`.
pub fn t_unitary_table(k: usize, z: &Rational) -> ClassFunction {
    ClassFunction::from_fn(k, |mu| rat_pow(z, mu.len()))
}

/// `T^O(·; z)` tabulated on coset-types.
pub fn t_orthogonal_table(k: usize, z: &Rational) -> CosetFunction {
    CosetFunction::from_fn(k, Twist::None, |mu| rat_pow(z, mu.len()))
        .expect("untwisted table")
}

/// `T^Sp(·; z)` tabulated at the representatives `σ_μ` (where `ε = +1`).
pub fn t_symplectic_table(k: usize, z: &Rational) -> CosetFunction {
    let sign = if k % 2 == 0 { 1 } else { -1 };
    CosetFunction::from_fn(k, Twist::Both, |mu| {
        sign_rat(sign) * rat_pow(&(rat(-2) * z), mu.len())
    })
    .expect("twisted table")
}

/// `T^{A III}` tabulated as a class function on `S_k`.
pub fn t_chiral_cycle_table(k: usize, a: usize, b: usize) -> ClassFunction {
    ClassFunction::from_fn(k, |mu| chiral_body(mu, a, b))
}

/// `T^{BD I}` tabulated on coset-types.
pub fn t_chiral_orthogonal_table(k: usize, a: usize, b: usize) -> CosetFunction {
    CosetFunction::from_fn(k, Twist::None, |mu| chiral_body(mu, a, b))
        .expect("untwisted table")
}

/// `T^{C II}` tabulated at the representatives `σ_μ`.
pub fn t_chiral_symplectic_table(k: usize, a: usize, b: usize) -> CosetFunction {
    CosetFunction::from_fn(k, Twist::Both, |mu| {
        let sign = if (k - mu.len()) % 2 == 0 { 1 } else { -1 };
        sign_rat(sign) * rat(1i64 << mu.len()) * chiral_body(mu, a, b)
    })
    .expect("twisted table")
}

/// `T^{D III}(·; n)` tabulated at the representatives, left twist.
pub fn t_bdg_orthogonal_table(k: usize, n: usize) -> CosetFunction {
    CosetFunction::from_fn(k, Twist::Left, |mu| {
        if mu.is_even() {
            rat_pow(&rat(-2 * n as i64), mu.len())
        } else {
            Rational::zero()
        }
    })
    .expect("even-type support")
}

/// `T^{C I}(·; n)` tabulated at the representatives, right twist.
pub fn t_bdg_symplectic_table(k: usize, n: usize) -> CosetFunction {
    CosetFunction::from_fn(k, Twist::Right, |mu| {
        if mu.is_even() {
            rat_pow(&rat(-2 * n as i64), mu.len())
        } else {
            Rational::zero()
        }
    })
    .expect("even-type support")
}
