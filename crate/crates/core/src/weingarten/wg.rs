use std::sync::{Arc, LazyLock};

use dashmap::DashMap;
use num_bigint::BigInt;
use num_traits::Zero;

use crate::charalg::{
    character, dimension, twisted_spherical, zonal_spherical, ClassFunction, CosetFunction,
};
use crate::error::{Error, Result};
use crate::scalar::{factorial, rat_big, Rational};
use crate::symgroup::{Partition, Permutation};
use crate::weingarten::class::EnsembleClass;
use crate::weingarten::polys::{c_poly, d_poly, dprime_poly};
use crate::weingarten::tfunc::{
    t_bdg_orthogonal_table, t_bdg_symplectic_table, t_chiral_cycle_table,
    t_chiral_orthogonal_table, t_chiral_symplectic_table,
};

/// Cap on the moment degree `k` for the two cycle-type classes (U, A III),
/// whose functions live on `S_k`.
pub const WG_DEGREE_CAP: usize = 12;

/// Cap on the half-degree `k` for every class living on `S_{2k}`. Matches
/// the `M_{2k}` enumeration cap.
pub const WG_HALF_DEGREE_CAP: usize = crate::symgroup::M2K_DEFAULT_CAP;

/// A fully evaluated Weingarten table for one class at one degree: exact
/// rational values indexed by cycle- or coset-type, plus the list of
/// partitions whose coefficient denominator vanished and were skipped
/// (the pseudo-inverse prescription).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WgEvaluation {
    pub class: EnsembleClass,
    pub k: usize,
    pub table: WgTable,
    pub pole_report: Vec<Partition>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum WgTable {
    /// Function on `S_k` by cycle-type (classes U, A III).
    Class(ClassFunction),
    /// Function on `S_{2k}` by coset-type with a twist (everything else).
    Coset(CosetFunction),
}

impl WgTable {
    pub fn eval(&self, sigma: &Permutation) -> Rational {
        match self {
            WgTable::Class(f) => f.eval(sigma),
            WgTable::Coset(f) => f.eval(sigma),
        }
    }

    /// Table value at a cycle- or coset-type representative.
    pub fn value_at_type(&self, mu: &Partition) -> &Rational {
        match self {
            WgTable::Class(f) => f.value(mu),
            WgTable::Coset(f) => f.value_at_type(mu),
        }
    }
}

/// `Wg^U(·; z)` on `S_k`: `(1/k!) Σ_{λ: C_λ(z) ≠ 0} (f^λ/C_λ(z)) χ^λ`,
/// with skipped `λ` reported.
pub fn wg_unitary(k: usize, z: &Rational) -> (ClassFunction, Vec<Partition>) {
    let mut poles = Vec::new();
    let mut terms: Vec<(Partition, Rational)> = Vec::new();
    for lam in Partition::all(k) {
        let c = c_poly(&lam, z);
        if c.is_zero() {
            poles.push(lam);
        } else {
            let dim = rat_big(dimension(&lam));
            terms.push((lam, dim / c));
        }
    }
    let kf = rat_big(factorial(k));
    let table = ClassFunction::from_fn(k, |mu| {
        terms
            .iter()
            .map(|(lam, coeff)| coeff * rat_big(character(lam, mu).unwrap()))
            .sum::<Rational>()
            / &kf
    });
    (table, poles)
}

/// `Wg^O(·; z)` on `S_{2k}`:
/// `(2^k k!/(2k)!) Σ_{λ: D_λ(z) ≠ 0} (f^{2λ}/D_λ(z)) ω^λ`.
pub fn wg_orthogonal(k: usize, z: &Rational) -> (CosetFunction, Vec<Partition>) {
    let mut poles = Vec::new();
    let mut terms: Vec<(Partition, Rational)> = Vec::new();
    for lam in Partition::all(k) {
        let d = d_poly(&lam, z);
        if d.is_zero() {
            poles.push(lam);
        } else {
            terms.push((lam.clone(), rat_big(dimension(&lam.doubled())) / d));
        }
    }
    let scale = rat_big(factorial(k) * BigInt::from(1u64 << k)) / rat_big(factorial(2 * k));
    let table = CosetFunction::from_fn(k, crate::charalg::Twist::None, |mu| {
        &scale
            * terms
                .iter()
                .map(|(lam, coeff)| coeff * zonal_spherical(lam, mu).unwrap())
                .sum::<Rational>()
    })
    .expect("untwisted table");
    (table, poles)
}

/// `Wg^Sp(·; z)` on `S_{2k}`:
/// `(2^k k!/(2k)!) Σ_{λ: D'_λ(z) ≠ 0} (f^{λ∪λ}/D'_λ(z)) π^λ`, tabulated at
/// the representatives `σ_μ` and extended by the ε-twist.
pub fn wg_symplectic(k: usize, z: &Rational) -> (CosetFunction, Vec<Partition>) {
    let mut poles = Vec::new();
    let mut terms: Vec<(Partition, Rational)> = Vec::new();
    for lam in Partition::all(k) {
        let d = dprime_poly(&lam, z);
        if d.is_zero() {
            poles.push(lam);
        } else {
            terms.push((
                lam.clone(),
                rat_big(dimension(&lam.union_double())) / d,
            ));
        }
    }
    let scale = rat_big(factorial(k) * BigInt::from(1u64 << k)) / rat_big(factorial(2 * k));
    let table = CosetFunction::from_fn(k, crate::charalg::Twist::Both, |mu| {
        &scale
            * terms
                .iter()
                .map(|(lam, coeff)| coeff * twisted_spherical(lam, mu).unwrap())
                .sum::<Rational>()
    })
    .expect("twisted table");
    (table, poles)
}

static WG_CACHE: LazyLock<DashMap<(EnsembleClass, usize), Arc<WgEvaluation>>> =
    LazyLock::new(DashMap::new);

/// The Weingarten function for `class` at moment (half-)degree `k`, from
/// the process-wide cache. `k` is the degree on `S_k` for U and A III and
/// the half-degree (functions on `S_{2k}`) for every other class.
pub fn wg_function(class: &EnsembleClass, k: usize) -> Result<Arc<WgEvaluation>> {
    class.validate()?;
    let cap = if class.on_cycle_types() {
        WG_DEGREE_CAP
    } else {
        WG_HALF_DEGREE_CAP
    };
    if k > cap {
        return Err(Error::CapExceeded {
            what: "Weingarten degree k",
            requested: k,
            cap,
        });
    }
    let key = (*class, k);
    if let Some(hit) = WG_CACHE.get(&key) {
        return Ok(hit.clone());
    }

    let z = class.base_parameter();
    let (table, pole_report) = match *class {
        EnsembleClass::Unitary { .. } => {
            let (t, p) = wg_unitary(k, &z);
            (WgTable::Class(t), p)
        }
        EnsembleClass::Orthogonal { .. } | EnsembleClass::Coe { .. } => {
            let (t, p) = wg_orthogonal(k, &z);
            (WgTable::Coset(t), p)
        }
        EnsembleClass::Symplectic { .. } | EnsembleClass::Cse { .. } => {
            let (t, p) = wg_symplectic(k, &z);
            (WgTable::Coset(t), p)
        }
        EnsembleClass::ChiralUnitary { a, b } => {
            let (wg_u, p) = wg_unitary(k, &z);
            let t = t_chiral_cycle_table(k, a, b);
            (WgTable::Class(t.convolve(&wg_u)?), p)
        }
        EnsembleClass::ChiralOrthogonal { a, b } => {
            let (wg_o, p) = wg_orthogonal(k, &z);
            let t = t_chiral_orthogonal_table(k, a, b);
            (WgTable::Coset(t.star(&wg_o)?), p)
        }
        EnsembleClass::ChiralSymplectic { a, b } => {
            let (wg_sp, p) = wg_symplectic(k, &z);
            let t = t_chiral_symplectic_table(k, a, b);
            (WgTable::Coset(t.star(&wg_sp)?), p)
        }
        EnsembleClass::BdgOrthogonal { n } => {
            let (wg_o, p) = wg_orthogonal(k, &z);
            let t = t_bdg_orthogonal_table(k, n);
            (WgTable::Coset(t.star(&wg_o)?), p)
        }
        EnsembleClass::BdgSymplectic { n } => {
            let (wg_sp, p) = wg_symplectic(k, &z);
            let t = t_bdg_symplectic_table(k, n);
            (WgTable::Coset(t.star(&wg_sp)?), p)
        }
    };

    let eval = Arc::new(WgEvaluation {
        class: *class,
        k,
        table,
        pole_report,
    });
    WG_CACHE.insert(key, eval.clone());
    Ok(eval)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charalg::{convolve_dense, convolve_star_dense};
    use crate::scalar::{rat, ratio, sign_rat};
    use crate::symgroup::{is_hyperoctahedral, sigma_mu};
    use crate::weingarten::polys::rat_pow;
    use crate::weingarten::tfunc::{
        t_bdg_orthogonal, t_bdg_symplectic, t_orthogonal_table, t_symplectic_table,
        t_unitary_table,
    };

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn wg(class: EnsembleClass, k: usize) -> Arc<WgEvaluation> {
        wg_function(&class, k).unwrap()
    }

    #[test]
    fn golden_unitary() {
        for n in [2i64, 3, 5] {
            let w1 = wg(EnsembleClass::Unitary { n: n as usize }, 1);
            assert_eq!(*w1.table.value_at_type(&p("1")), ratio(1, n));
            let w2 = wg(EnsembleClass::Unitary { n: n as usize }, 2);
            assert_eq!(
                *w2.table.value_at_type(&p("1,1")),
                rat(1) / rat((n + 1) * (n - 1))
            );
            assert_eq!(
                *w2.table.value_at_type(&p("2")),
                rat(-1) / rat(n * (n + 1) * (n - 1))
            );
            assert!(w2.pole_report.is_empty());
        }
    }

    #[test]
    fn golden_orthogonal() {
        for n in [2i64, 3, 5] {
            let w1 = wg(EnsembleClass::Orthogonal { n: n as usize }, 1);
            assert_eq!(*w1.table.value_at_type(&p("1")), ratio(1, n));
            let w2 = wg(EnsembleClass::Orthogonal { n: n as usize }, 2);
            let den = rat(n * (n + 2) * (n - 1));
            assert_eq!(*w2.table.value_at_type(&p("1,1")), rat(n + 1) / &den);
            assert_eq!(*w2.table.value_at_type(&p("2")), rat(-1) / &den);
        }
    }

    #[test]
    fn golden_symplectic() {
        for n in [2i64, 3, 4] {
            let w1 = wg(EnsembleClass::Symplectic { n: n as usize }, 1);
            assert_eq!(*w1.table.value_at_type(&p("1")), ratio(1, 2 * n));
            let w2 = wg(EnsembleClass::Symplectic { n: n as usize }, 2);
            let den = rat(4 * n * (n - 1) * (2 * n + 1));
            assert_eq!(*w2.table.value_at_type(&p("1,1")), rat(2 * n - 1) / &den);
            assert_eq!(*w2.table.value_at_type(&p("2")), rat(1) / &den);
            // ε-twist: an odd element of H_2 flips the sign.
            assert_eq!(w2.table.eval(&perm("2,1,3,4")), rat(-(2 * n - 1)) / &den);
        }
    }

    #[test]
    fn golden_coe() {
        // Wg^{A I}(·; n) = Wg^O(·; n+1).
        for n in [2i64, 3, 4] {
            let w1 = wg(EnsembleClass::Coe { n: n as usize }, 1);
            assert_eq!(*w1.table.value_at_type(&p("1")), ratio(1, n + 1));
            let w2 = wg(EnsembleClass::Coe { n: n as usize }, 2);
            let den = rat(n * (n + 1) * (n + 3));
            assert_eq!(*w2.table.value_at_type(&p("1,1")), rat(n + 2) / &den);
            assert_eq!(*w2.table.value_at_type(&p("2")), rat(-1) / &den);
        }
    }

    #[test]
    fn golden_cse() {
        // Wg^{A II}(·; n) = Wg^Sp(·; n - 1/2).
        for n in [2i64, 3, 4] {
            let w1 = wg(EnsembleClass::Cse { n: n as usize }, 1);
            assert_eq!(*w1.table.value_at_type(&p("1")), ratio(1, 2 * n - 1));
            let w2 = wg(EnsembleClass::Cse { n: n as usize }, 2);
            assert_eq!(
                *w2.table.value_at_type(&p("1,1")),
                rat(n - 1) / rat(n * (2 * n - 1) * (2 * n - 3))
            );
            assert_eq!(
                *w2.table.value_at_type(&p("2")),
                rat(1) / rat(2 * n * (2 * n - 1) * (2 * n - 3))
            );
        }
    }

    #[test]
    fn golden_chiral_unitary() {
        for (a, b) in [(2i64, 1i64), (3, 1), (3, 2)] {
            let n = a + b;
            let class = EnsembleClass::ChiralUnitary {
                a: a as usize,
                b: b as usize,
            };
            let w1 = wg(class, 1);
            assert_eq!(*w1.table.value_at_type(&p("1")), rat(a - b) / rat(n));
            let w2 = wg(class, 2);
            assert_eq!(
                *w2.table.value_at_type(&p("1,1")),
                rat((a - b + 1) * (a - b - 1)) / rat((n + 1) * (n - 1))
            );
            assert_eq!(
                *w2.table.value_at_type(&p("2")),
                rat(4 * a * b) / rat(n * (n - 1) * (n + 1))
            );
        }
    }

    #[test]
    fn golden_chiral_orthogonal() {
        for (a, b) in [(2i64, 1i64), (3, 1), (3, 2)] {
            let n = a + b;
            let class = EnsembleClass::ChiralOrthogonal {
                a: a as usize,
                b: b as usize,
            };
            let w1 = wg(class, 1);
            assert_eq!(*w1.table.value_at_type(&p("1")), rat(a - b) / rat(n));
            let w2 = wg(class, 2);
            let den = rat(n * (n + 2) * (n - 1));
            assert_eq!(
                *w2.table.value_at_type(&p("1,1")),
                rat((a - b) * (a - b) * (n + 1) - 2 * n) / &den
            );
            assert_eq!(*w2.table.value_at_type(&p("2")), rat(4 * a * b) / &den);
            // Biinvariance: both coset-(2) permutations take the same value.
            assert_eq!(
                w2.table.eval(&perm("1,3,2,4")),
                w2.table.eval(&perm("1,4,2,3"))
            );
        }
    }

    #[test]
    fn golden_chiral_symplectic() {
        for (a, b) in [(2i64, 1i64), (3, 1), (3, 2)] {
            let n = a + b;
            let class = EnsembleClass::ChiralSymplectic {
                a: a as usize,
                b: b as usize,
            };
            let w1 = wg(class, 1);
            assert_eq!(*w1.table.value_at_type(&p("1")), rat(a - b) / rat(n));
            let w2 = wg(class, 2);
            let den = rat(n * (n - 1) * (2 * n + 1));
            assert_eq!(
                *w2.table.value_at_type(&p("1,1")),
                rat((a - b) * (a - b) * (2 * n - 1) - n) / &den
            );
            // At σ_(2) = (1,4,2,3) the value is -4ab/den; its odd translate
            // (1,3,2,4) flips the ε-twist sign. (Any other sign assignment
            // would make E[(w̃_13)²] = Wg(id) - Wg(σ_(2)) negative at a = b,
            // which is impossible: w̃_13 = W_33 is real for Hermitian W.)
            assert_eq!(*w2.table.value_at_type(&p("2")), rat(-4 * a * b) / &den);
            assert_eq!(w2.table.eval(&perm("1,4,2,3")), rat(-4 * a * b) / &den);
            assert_eq!(w2.table.eval(&perm("1,3,2,4")), rat(4 * a * b) / &den);
        }
    }

    #[test]
    fn golden_bdg() {
        for n in [1i64, 2, 3] {
            let diii = EnsembleClass::BdgOrthogonal { n: n as usize };
            let ci = EnsembleClass::BdgSymplectic { n: n as usize };
            // Odd k vanishes identically.
            for class in [diii, ci] {
                let w1 = wg(class, 1);
                assert!(w1.table.value_at_type(&p("1")).is_zero());
            }
            let w2 = wg(diii, 2);
            assert!(w2.table.value_at_type(&p("1,1")).is_zero());
            assert_eq!(*w2.table.value_at_type(&p("2")), rat(-1) / rat(2 * n - 1));
            // Left twist: (1,3,2,4) = (3 4)·σ_(2) picks up ε((3 4)) = -1.
            assert_eq!(w2.table.eval(&perm("1,4,2,3")), rat(-1) / rat(2 * n - 1));
            assert_eq!(w2.table.eval(&perm("1,3,2,4")), rat(1) / rat(2 * n - 1));

            let w2 = wg(ci, 2);
            assert!(w2.table.value_at_type(&p("1,1")).is_zero());
            assert_eq!(*w2.table.value_at_type(&p("2")), rat(-1) / rat(2 * n + 1));
            // Right twist: left translation does not change the value.
            assert_eq!(w2.table.eval(&perm("1,4,2,3")), rat(-1) / rat(2 * n + 1));
            assert_eq!(w2.table.eval(&perm("1,3,2,4")), rat(-1) / rat(2 * n + 1));
        }
    }

    #[test]
    fn pole_reports() {
        let (_, poles) = wg_unitary(2, &rat(1));
        assert_eq!(poles, vec![p("1,1")]);
        let (_, poles) = wg_unitary(2, &rat(3));
        assert!(poles.is_empty());
        let (_, poles) = wg_orthogonal(2, &rat(1));
        assert_eq!(poles, vec![p("1,1")]);
        let (_, poles) = wg_symplectic(3, &rat(2));
        assert_eq!(poles, vec![p("1,1,1")]);
        // Away from the documented pole set the report is empty.
        for n in 2..=4i64 {
            let (_, poles) = wg_unitary(2, &rat(n));
            assert!(poles.is_empty(), "z = {n} ∉ {{0, ±1}} must be pole-free");
        }
    }

    #[test]
    fn pseudo_inverse_identities_small() {
        // T * Wg * T = T (U) and T ⋆ Wg ⋆ T = T (O, Sp) at k ≤ 2, n = 1..3.
        for k in 1..=2usize {
            for n in 1..=3i64 {
                let z = rat(n);
                let t = t_unitary_table(k, &z);
                let (w, _) = wg_unitary(k, &z);
                let twt = t.convolve(&w).unwrap().convolve(&t).unwrap();
                assert_eq!(twt, t, "U k={k} n={n}");

                let t = t_orthogonal_table(k, &z);
                let (w, _) = wg_orthogonal(k, &z);
                let twt = t.star(&w).unwrap().star(&t).unwrap();
                assert_eq!(twt, t, "O k={k} n={n}");

                let t = t_symplectic_table(k, &z);
                let (w, _) = wg_symplectic(k, &z);
                let twt = t.star(&w).unwrap().star(&t).unwrap();
                assert_eq!(twt, t, "Sp k={k} n={n}");
            }
        }
    }

    #[test]
    fn symplectic_is_twisted_orthogonal() {
        // Wg^Sp(σ; z) = (-1)^k ε(σ) Wg^O(σ; -2z) at pole-free rational z.
        let points = [ratio(5, 2), ratio(7, 3), rat(4)];
        for k in 1..=3usize {
            for z in &points {
                let (wsp, _) = wg_symplectic(k, z);
                let (wo, _) = wg_orthogonal(k, &(rat(-2) * z));
                let sign = if k % 2 == 0 { 1 } else { -1 };
                for sigma in Permutation::all(2 * k) {
                    assert_eq!(
                        wsp.eval(&sigma),
                        sign_rat(sign * sigma.signature()) * wo.eval(&sigma),
                        "k={k} z={z} σ={sigma}"
                    );
                }
            }
        }
    }

    #[test]
    fn t_expansions_in_spherical_functions() {
        // T^O(·; z) = (2^k k!/(2k)!) Σ_λ f^{2λ} D_λ(z) ω^λ and the π-basis
        // analogue for T^Sp, as linear identities over the σ_μ tables, k ≤ 3.
        let points = [rat(2), ratio(7, 2), rat(5)];
        for k in 1..=3usize {
            let scale =
                rat_big(factorial(k) * BigInt::from(1u64 << k)) / rat_big(factorial(2 * k));
            for z in &points {
                for mu in Partition::all(k) {
                    let lhs_o = rat_pow(z, mu.len());
                    let rhs_o: Rational = Partition::all(k)
                        .iter()
                        .map(|lam| {
                            rat_big(dimension(&lam.doubled()))
                                * d_poly(lam, z)
                                * zonal_spherical(lam, &mu).unwrap()
                        })
                        .sum();
                    assert_eq!(lhs_o, &scale * rhs_o, "T^O k={k} μ={mu} z={z}");

                    let sign = if (k - mu.len()) % 2 == 0 { 1 } else { -1 };
                    let lhs_sp = sign_rat(sign) * rat_pow(&(rat(2) * z), mu.len());
                    let rhs_sp: Rational = Partition::all(k)
                        .iter()
                        .map(|lam| {
                            rat_big(dimension(&lam.union_double()))
                                * dprime_poly(lam, z)
                                * twisted_spherical(lam, &mu).unwrap()
                        })
                        .sum();
                    assert_eq!(lhs_sp, &scale * rhs_sp, "T^Sp k={k} μ={mu} z={z}");
                }
            }
        }
    }

    #[test]
    fn coe_equals_convolution_route() {
        // Wg^{A I}(·; n) = T^O(·; n) * Wg^U(·; n) on S_{2k}, k ≤ 2.
        for k in 1..=2usize {
            for n in [2i64, 3] {
                let z = rat(n);
                let coe = wg(EnsembleClass::Coe { n: n as usize }, k);
                let t = t_orthogonal_table(k, &z);
                let (wu, _) = wg_unitary(2 * k, &z);
                for sigma in Permutation::all(2 * k) {
                    let conv =
                        convolve_dense(2 * k, |x| t.eval(x), |x| wu.eval(x), &sigma);
                    assert_eq!(coe.table.eval(&sigma), conv, "k={k} n={n} σ={sigma}");
                }
            }
        }
    }

    #[test]
    fn cse_equals_convolution_route() {
        // Wg^{A II}(·; n) = T^Sp(·; n) * Wg^U(·; 2n) on S_{2k}, k ≤ 2.
        for k in 1..=2usize {
            for n in [2i64, 3] {
                let cse = wg(EnsembleClass::Cse { n: n as usize }, k);
                let t = t_symplectic_table(k, &rat(n));
                let (wu, _) = wg_unitary(2 * k, &rat(2 * n));
                for sigma in Permutation::all(2 * k) {
                    let conv =
                        convolve_dense(2 * k, |x| t.eval(x), |x| wu.eval(x), &sigma);
                    assert_eq!(cse.table.eval(&sigma), conv, "k={k} n={n} σ={sigma}");
                }
            }
        }
    }

    #[test]
    fn bdg_tables_match_pointwise_star() {
        // The stored twist reconstruction agrees with the defining ⋆ sum at
        // every σ ∈ S_4, not just at representatives.
        let n = 2usize;
        let diii = wg(EnsembleClass::BdgOrthogonal { n }, 2);
        let (wo, _) = wg_orthogonal(2, &rat(2 * n as i64));
        let ci = wg(EnsembleClass::BdgSymplectic { n }, 2);
        let (wsp, _) = wg_symplectic(2, &rat(n as i64));
        for sigma in Permutation::all(4) {
            let direct = convolve_star_dense(
                2,
                |t| t_bdg_orthogonal(t, n).unwrap(),
                |t| wo.eval(t),
                &sigma,
            )
            .unwrap();
            assert_eq!(diii.table.eval(&sigma), direct, "D III σ={sigma}");
            let direct = convolve_star_dense(
                2,
                |t| t_bdg_symplectic(t, n).unwrap(),
                |t| wsp.eval(t),
                &sigma,
            )
            .unwrap();
            assert_eq!(ci.table.eval(&sigma), direct, "C I σ={sigma}");
        }
    }

    #[test]
    fn bdg_covariances_exhaustive() {
        // Wg^{D III}(ζσζ') = ε(ζ) Wg^{D III}(σ) and
        // Wg^{C I}(ζσζ') = ε(ζ') Wg^{C I}(σ), exhaustively at k = 2; both
        // vanish on H_k.
        let diii = wg(EnsembleClass::BdgOrthogonal { n: 2 }, 2);
        let ci = wg(EnsembleClass::BdgSymplectic { n: 2 }, 2);
        let h2 = crate::symgroup::hyperoctahedral_elements(2);
        for sigma in Permutation::all(4) {
            if is_hyperoctahedral(&sigma) {
                assert!(diii.table.eval(&sigma).is_zero());
                assert!(ci.table.eval(&sigma).is_zero());
            }
            for z in &h2 {
                for zp in &h2 {
                    let moved = z.compose(&sigma).compose(zp);
                    assert_eq!(
                        diii.table.eval(&moved),
                        sign_rat(z.signature()) * diii.table.eval(&sigma)
                    );
                    assert_eq!(
                        ci.table.eval(&moved),
                        sign_rat(zp.signature()) * ci.table.eval(&sigma)
                    );
                }
            }
        }
    }

    #[test]
    fn caps_are_enforced() {
        assert!(wg_function(&EnsembleClass::Orthogonal { n: 3 }, 7).is_err());
        assert!(wg_function(&EnsembleClass::Unitary { n: 3 }, 13).is_err());
    }

    #[test]
    fn sigma_mu_representative_sanity() {
        // The table indexing convention: value_at_type(μ) is the value at
        // σ_μ, which for the twisted classes has ε(σ_μ) = +1.
        let w = wg(EnsembleClass::Symplectic { n: 2 }, 2);
        for mu in Partition::all(2) {
            assert_eq!(w.table.eval(&sigma_mu(&mu)), *w.table.value_at_type(&mu));
        }
    }
}
