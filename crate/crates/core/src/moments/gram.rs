use crate::error::{Error, Result};
use crate::moments::ratmat::RatMat;
use crate::scalar::rat;
use crate::symgroup::enumerate_m2k;
use crate::weingarten::t_symplectic;

/// Cap on `k` for the Gram oracle; `(2k-1)!!` is the matrix side and the
/// exact pseudo-inverse is cubic in it.
const GRAM_CAP: usize = 3;

/// Builds the Gram matrix `G = (T^Sp(σ⁻¹τ; n))_{σ,τ ∈ M_{2k}}` exactly and
/// returns it together with its exact Moore–Penrose pseudo-inverse `W`.
///
/// `W` is computed by generic rational linear algebra, independent of the
/// Weingarten tables, so the pair serves as an oracle for the identity
/// `w(σ, τ) = Wg^Sp(σ⁻¹τ; n)`.
pub fn gram_pseudo_inverse_oracle(k: usize, n: usize) -> Result<(RatMat, RatMat)> {
    if k > GRAM_CAP {
        return Err(Error::CapExceeded {
            what: "Gram oracle k",
            requested: k,
            cap: GRAM_CAP,
        });
    }
    let reps: Vec<_> = enumerate_m2k(k)?
        .iter()
        .map(|m| m.to_permutation())
        .collect();
    let z = rat(n as i64);
    let m = reps.len();
    let mut g = RatMat::zeros(m, m);
    for (s, sigma) in reps.iter().enumerate() {
        let si = sigma.inverse();
        for (t, tau) in reps.iter().enumerate() {
            *g.get_mut(s, t) = t_symplectic(&si.compose(tau), &z)?;
        }
    }
    let w = g.pseudo_inverse();
    Ok((g, w))
}
