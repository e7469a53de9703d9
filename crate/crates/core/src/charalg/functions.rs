use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::charalg::characters::{character, dimension};
use crate::error::{Error, Result};
use crate::scalar::{factorial, rat_big, Rational};
use crate::symgroup::{
    coset_type, double_coset_reduce, enumerate_m2k, sigma_mu, Partition, Permutation,
};

/// How a function on `S_{2k}` transforms under `σ ↦ ζ σ ζ'` for
/// `ζ, ζ' ∈ H_k`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Twist {
    /// `f(ζσζ') = f(σ)`: the `H_k`-biinvariant functions.
    None,
    /// `f(ζσζ') = ε(ζ)ε(ζ')f(σ)`: the ε-twisted algebra.
    Both,
    /// `f(ζσζ') = ε(ζ)f(σ)`: left sign only.
    Left,
    /// `f(ζσζ') = ε(ζ')f(σ)`: right sign only.
    Right,
}

impl Twist {
    pub fn name(self) -> &'static str {
        match self {
            Twist::None => "none",
            Twist::Both => "both-sides",
            Twist::Left => "left-only",
            Twist::Right => "right-only",
        }
    }

    /// Output twist of `f ⋆ g` for supported input combinations.
    fn star_output(f: Twist, g: Twist) -> Result<Twist> {
        match (f, g) {
            (Twist::None, Twist::None) => Ok(Twist::None),
            (Twist::Both, Twist::Both) => Ok(Twist::Both),
            (Twist::Left, Twist::None) => Ok(Twist::Left),
            (Twist::Right, Twist::Both) => Ok(Twist::Right),
            _ => Err(Error::TwistIncompatible {
                left: f.name(),
                right: g.name(),
            }),
        }
    }
}

/// An element of the center `Z(L(S_k))`: a function constant on conjugacy
/// classes, stored by cycle-type.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClassFunction {
    k: usize,
    values: BTreeMap<Partition, Rational>,
}

impl ClassFunction {
    /// Builds the table from a closure over cycle-types.
    pub fn from_fn(k: usize, mut f: impl FnMut(&Partition) -> Rational) -> Self {
        let values = Partition::all(k)
            .into_iter()
            .map(|mu| {
                let v = f(&mu);
                (mu, v)
            })
            .collect();
        ClassFunction { k, values }
    }

    /// `δ_id`: 1 on the identity, 0 elsewhere (a class function, since the
    /// identity is alone in its class).
    pub fn delta_identity(k: usize) -> Self {
        Self::from_fn(k, |mu| {
            if *mu == Partition::ones(k) {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    /// Value on the class of cycle-type `mu`.
    pub fn value(&self, mu: &Partition) -> &Rational {
        &self.values[mu]
    }

    /// Evaluation at a permutation.
    pub fn eval(&self, p: &Permutation) -> Rational {
        debug_assert_eq!(p.degree(), self.k);
        self.values[&p.cycle_type()].clone()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.values.iter()
    }

    /// Fourier coefficients: `f = Σ_λ f̂_λ χ^λ` with
    /// `f̂_λ = Σ_μ z_μ⁻¹ f(μ) χ^λ(μ)`.
    pub fn character_coefficients(&self) -> BTreeMap<Partition, Rational> {
        Partition::all(self.k)
            .into_iter()
            .map(|lam| {
                let coeff: Rational = self
                    .values
                    .iter()
                    .map(|(mu, v)| {
                        v * rat_big(character(&lam, mu).unwrap())
                            / rat_big(mu.centralizer_order())
                    })
                    .sum();
                (lam, coeff)
            })
            .collect()
    }

    /// Rebuilds the value table from character coefficients.
    pub fn from_character_coefficients(
        k: usize,
        coeffs: &BTreeMap<Partition, Rational>,
    ) -> Self {
        Self::from_fn(k, |mu| {
            coeffs
                .iter()
                .map(|(lam, c)| c * rat_big(character(lam, mu).unwrap()))
                .sum()
        })
    }

    /// Convolution `(f*g)(σ) = Σ_τ f(τ) g(τ⁻¹σ)`, computed class-wise via
    /// `χ^λ * χ^μ = δ_{λμ} (k!/f^λ) χ^λ` instead of the `k!`-term sum.
    pub fn convolve(&self, other: &ClassFunction) -> Result<ClassFunction> {
        if self.k != other.k {
            return Err(Error::DegreeMismatch {
                left: self.k,
                right: other.k,
            });
        }
        let kf = rat_big(factorial(self.k));
        let fs = self.character_coefficients();
        let gs = other.character_coefficients();
        let coeffs = fs
            .into_iter()
            .map(|(lam, fc)| {
                let gc = &gs[&lam];
                let dim = rat_big(dimension(&lam));
                let c = fc * gc * &kf / dim;
                (lam, c)
            })
            .collect();
        Ok(Self::from_character_coefficients(self.k, &coeffs))
    }
}

/// A function on `S_{2k}` determined by its values on the canonical
/// double-coset representatives `σ_μ` together with a [`Twist`] descriptor.
///
/// For the `Left`/`Right` twists a value at a non-even coset-type would be
/// sign-ambiguous, so it is required to be zero (this is exactly the
/// vanishing behaviour of the BdG `T`- and `Wg`-functions).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CosetFunction {
    k: usize,
    twist: Twist,
    values: BTreeMap<Partition, Rational>,
}

impl CosetFunction {
    pub fn from_fn(
        k: usize,
        twist: Twist,
        mut f: impl FnMut(&Partition) -> Rational,
    ) -> Result<Self> {
        let values: BTreeMap<Partition, Rational> = Partition::all(k)
            .into_iter()
            .map(|mu| {
                let v = f(&mu);
                (mu, v)
            })
            .collect();
        Self::new(k, twist, values)
    }

    pub fn new(
        k: usize,
        twist: Twist,
        values: BTreeMap<Partition, Rational>,
    ) -> Result<Self> {
        if matches!(twist, Twist::Left | Twist::Right) {
            for (mu, v) in &values {
                if !mu.is_even() && !v.is_zero() {
                    return Err(Error::InvalidParameters(format!(
                        "{}-twisted value at non-even coset-type {mu} must be 0, got {v}",
                        twist.name()
                    )));
                }
            }
        }
        Ok(CosetFunction { k, twist, values })
    }

    /// `𝟙_k`: the indicator of `H_k`, the identity of `(L(S_2k,H_k), ⋆)`.
    pub fn one(k: usize) -> Self {
        CosetFunction {
            k,
            twist: Twist::None,
            values: Partition::all(k)
                .into_iter()
                .map(|mu| {
                    let v = if mu == Partition::ones(k) {
                        Rational::one()
                    } else {
                        Rational::zero()
                    };
                    (mu, v)
                })
                .collect(),
        }
    }

    /// `𝟙_k^ε`: `ε` on `H_k`, 0 elsewhere; the identity of the twisted
    /// algebra.
    pub fn one_eps(k: usize) -> Self {
        let mut f = Self::one(k);
        f.twist = Twist::Both;
        f
    }

    /// Half-degree `k`; the function lives on `S_{2k}`.
    pub fn half_degree(&self) -> usize {
        self.k
    }

    pub fn twist(&self) -> Twist {
        self.twist
    }

    /// Value at the representative `σ_μ`.
    pub fn value_at_type(&self, mu: &Partition) -> &Rational {
        &self.values[mu]
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.values.iter()
    }

    /// Evaluation at an arbitrary permutation, reconstructing the sign from
    /// the twist: `f(ζ σ_μ ζ') = (twist sign) · f(σ_μ)`.
    pub fn eval(&self, p: &Permutation) -> Rational {
        debug_assert_eq!(p.degree(), 2 * self.k);
        match self.twist {
            Twist::None => self.values[&coset_type(p).expect("even degree")].clone(),
            Twist::Both => {
                // ε(ζ)ε(ζ') = ε(p) since ε(σ_μ) = +1.
                let v = &self.values[&coset_type(p).expect("even degree")];
                if p.signature() >= 0 {
                    v.clone()
                } else {
                    -v.clone()
                }
            }
            Twist::Left | Twist::Right => {
                let (mu, left, right) = double_coset_reduce(p).expect("even degree");
                let sign = if self.twist == Twist::Left { left } else { right };
                let v = &self.values[&mu];
                if sign >= 0 {
                    v.clone()
                } else {
                    -v.clone()
                }
            }
        }
    }

    /// The `⋆` convolution `(f ⋆ g)(σ) = Σ_{τ ∈ M_2k} f(τ) g(τ⁻¹σ)`,
    /// tabulated on the representatives `σ_μ`. The output twist follows the
    /// composition rules; unsupported twist combinations are an error.
    pub fn star(&self, other: &CosetFunction) -> Result<CosetFunction> {
        if self.k != other.k {
            return Err(Error::DegreeMismatch {
                left: self.k,
                right: other.k,
            });
        }
        let twist = Twist::star_output(self.twist, other.twist)?;
        let reps: Vec<Permutation> = enumerate_m2k(self.k)?
            .iter()
            .map(|m| m.to_permutation())
            .collect();
        let f_vals: Vec<Rational> = reps.iter().map(|t| self.eval(t)).collect();
        let inv: Vec<Permutation> = reps.iter().map(|t| t.inverse()).collect();
        Self::from_fn(self.k, twist, |mu| {
            let s = sigma_mu(mu);
            reps.iter()
                .enumerate()
                .map(|(i, _)| &f_vals[i] * other.eval(&inv[i].compose(&s)))
                .sum()
        })
    }
}

/// Brute-force convolution `(f*g)(σ) = Σ_{τ ∈ S_m} f(τ) g(τ⁻¹ σ)` by
/// enumeration of `S_m`. Exponential; meant for small degrees and for
/// cross-checking the class-wise route.
pub fn convolve_dense(
    m: usize,
    f: impl Fn(&Permutation) -> Rational,
    g: impl Fn(&Permutation) -> Rational,
    sigma: &Permutation,
) -> Rational {
    Permutation::all(m)
        .iter()
        .map(|tau| f(tau) * g(&tau.inverse().compose(sigma)))
        .sum()
}

/// Brute-force `⋆` convolution `(f ⋆ g)(σ) = Σ_{τ ∈ M_2k} f(τ) g(τ⁻¹ σ)`.
pub fn convolve_star_dense(
    k: usize,
    f: impl Fn(&Permutation) -> Rational,
    g: impl Fn(&Permutation) -> Rational,
    sigma: &Permutation,
) -> Result<Rational> {
    Ok(enumerate_m2k(k)?
        .iter()
        .map(|m| {
            let tau = m.to_permutation();
            f(&tau) * g(&tau.inverse().compose(sigma))
        })
        .sum())
}
