use num_traits::Zero;

use crate::error::{Error, Result};
use crate::moments::evaluate::IndexSequence;
use crate::moments::ratmat::RatMat;
use crate::scalar::{rat, Rational};
use crate::symgroup::Permutation;

/// Default budget on the number of terms `m^{2k}` in the brute-force tensor
/// contraction. The contraction is a test oracle used at tiny sizes only.
pub const CONTRACTION_BUDGET: u128 = 10_000_000;

/// The skew pairing `⟨i, j⟩` on `[2n]`: `+1` if `j = i + n` with `i ≤ n`,
/// `-1` if `i = j + n` with `j ≤ n`, `0` otherwise. Encodes the matrix `J`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PairingTable {
    n: usize,
}

impl PairingTable {
    pub fn new(n: usize) -> Self {
        PairingTable { n }
    }

    /// Matrix side `2n`.
    pub fn dim(&self) -> usize {
        2 * self.n
    }

    /// `⟨i, j⟩` for 1-based `i, j ∈ [2n]`.
    pub fn pair(&self, i: usize, j: usize) -> i8 {
        if i <= self.n && j == i + self.n {
            1
        } else if j <= self.n && i == j + self.n {
            -1
        } else {
            0
        }
    }
}

/// `δ_σ(i, i') = ∏_s δ_{i_{σ(s)}, i'_s}` for `σ ∈ S_k`.
pub fn delta(sigma: &Permutation, i: &IndexSequence, i_prime: &IndexSequence) -> Result<bool> {
    let k = sigma.degree();
    if i.len() != k || i_prime.len() != k {
        return Err(Error::DegreeMismatch {
            left: i.len().max(i_prime.len()),
            right: k,
        });
    }
    Ok((0..k).all(|s| i.entry(sigma.apply(s)) == i_prime.entry(s)))
}

/// `Δ_σ(i) = ∏_s δ_{i_{σ(2s-1)}, i_{σ(2s)}}` for `σ ∈ S_{2k}`.
pub fn delta_pair(sigma: &Permutation, i: &IndexSequence) -> Result<bool> {
    let m = sigma.degree();
    if i.len() != m {
        return Err(Error::DegreeMismatch {
            left: i.len(),
            right: m,
        });
    }
    Ok((0..m / 2).all(|s| i.entry(sigma.apply(2 * s)) == i.entry(sigma.apply(2 * s + 1))))
}

/// `Δ'_σ(i) = ∏_r ⟨i_{σ(2r-1)}, i_{σ(2r)}⟩ ∈ {-1, 0, +1}`.
pub fn delta_pair_symplectic(
    sigma: &Permutation,
    i: &IndexSequence,
    pairing: &PairingTable,
) -> Result<i8> {
    let m = sigma.degree();
    if i.len() != m {
        return Err(Error::DegreeMismatch {
            left: i.len(),
            right: m,
        });
    }
    let mut sign = 1i8;
    for r in 0..m / 2 {
        let p = pairing.pair(i.entry(sigma.apply(2 * r)), i.entry(sigma.apply(2 * r + 1)));
        if p == 0 {
            return Ok(0);
        }
        sign *= p;
    }
    Ok(sign)
}

/// `I'_{ab} = diag(I_a, -I_b)`.
pub fn i_prime_matrix(a: usize, b: usize) -> RatMat {
    RatMat::from_fn(a + b, a + b, |i, j| {
        if i != j {
            Rational::zero()
        } else if i < a {
            rat(1)
        } else {
            rat(-1)
        }
    })
}

/// `I''_{ab} = diag(I'_{ab}, I'_{ab})`, of side `2(a+b)`.
pub fn i_dprime_matrix(a: usize, b: usize) -> RatMat {
    let n = a + b;
    RatMat::from_fn(2 * n, 2 * n, |i, j| {
        if i != j {
            Rational::zero()
        } else if i % n < a {
            rat(1)
        } else {
            rat(-1)
        }
    })
}

/// The `2n × 2n` matrix `J = (⟨i, j⟩)`.
pub fn j_matrix(n: usize) -> RatMat {
    let p = PairingTable::new(n);
    RatMat::from_fn(2 * n, 2 * n, |i, j| rat(p.pair(i + 1, j + 1) as i64))
}

/// The brute-force tensor contraction
/// `𝒯_σ(X, Y) = Σ_{p ∈ [m]^{2k}} ∏_r x_{p_{σ(2r-1)}, p_{σ(2r)}} y_{p_{2r-1}, p_{2r}}`,
/// by direct summation over all index tuples.
pub fn contraction_t(sigma: &Permutation, x: &RatMat, y: &RatMat) -> Result<Rational> {
    contraction_t_with_budget(sigma, x, y, CONTRACTION_BUDGET)
}

pub fn contraction_t_with_budget(
    sigma: &Permutation,
    x: &RatMat,
    y: &RatMat,
    budget: u128,
) -> Result<Rational> {
    let m = x.rows();
    if x.cols() != m || y.rows() != m || y.cols() != m {
        return Err(Error::DegreeMismatch {
            left: x.cols(),
            right: y.rows(),
        });
    }
    let two_k = sigma.degree();
    if two_k % 2 != 0 {
        return Err(Error::OddDomain { size: two_k });
    }
    let terms = (m as u128)
        .checked_pow(two_k as u32)
        .unwrap_or(u128::MAX);
    if terms > budget {
        return Err(Error::BudgetExceeded { terms, budget });
    }

    let mut total = Rational::zero();
    let mut p = vec![0usize; two_k];
    'outer: loop {
        let mut term = Rational::from_integer(1.into());
        let mut nonzero = true;
        for r in 0..two_k / 2 {
            let xf = x.get(p[sigma.apply(2 * r)], p[sigma.apply(2 * r + 1)]);
            if xf.is_zero() {
                nonzero = false;
                break;
            }
            let yf = y.get(p[2 * r], p[2 * r + 1]);
            if yf.is_zero() {
                nonzero = false;
                break;
            }
            term *= xf;
            term *= yf;
        }
        if nonzero {
            total += term;
        }
        // Odometer over [m]^{2k}.
        for slot in (0..two_k).rev() {
            p[slot] += 1;
            if p[slot] < m {
                continue 'outer;
            }
            p[slot] = 0;
        }
        break;
    }
    Ok(total)
}
