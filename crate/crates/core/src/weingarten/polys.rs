use num_traits::One;

use crate::scalar::{rat, Rational};
use crate::symgroup::Partition;

/// `x^e` for a rational base and small exponent.
pub fn rat_pow(base: &Rational, exp: usize) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// `C_λ(z) = ∏_{(i,j) ∈ λ} (z + j - i)`, the content product driving the
/// unitary Weingarten denominators.
pub fn c_poly(lambda: &Partition, z: &Rational) -> Rational {
    lambda
        .cells()
        .map(|(i, j)| z + rat(j as i64 - i as i64))
        .product()
}

/// `D_λ(z) = ∏_{(i,j) ∈ λ} (z + 2j - i - 1)`.
pub fn d_poly(lambda: &Partition, z: &Rational) -> Rational {
    lambda
        .cells()
        .map(|(i, j)| z + rat(2 * j as i64 - i as i64 - 1))
        .product()
}

/// `D'_λ(z) = ∏_{(i,j) ∈ λ} (2z - 2i + j + 1)`.
pub fn dprime_poly(lambda: &Partition, z: &Rational) -> Rational {
    lambda
        .cells()
        .map(|(i, j)| rat(2) * z + rat(j as i64 - 2 * i as i64 + 1))
        .product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn single_cell() {
        let z = ratio(7, 2);
        assert_eq!(c_poly(&p("1"), &z), z);
        assert_eq!(d_poly(&p("1"), &z), z);
        assert_eq!(dprime_poly(&p("1"), &z), rat(2) * &z);
    }

    #[test]
    fn small_shapes() {
        let n = rat(5);
        // C_(2)(z) = z(z+1), C_(1,1)(z) = z(z-1).
        assert_eq!(c_poly(&p("2"), &n), rat(5 * 6));
        assert_eq!(c_poly(&p("1,1"), &n), rat(5 * 4));
        // D_(2)(z) = z(z+2), D_(1,1)(z) = z(z-1).
        assert_eq!(d_poly(&p("2"), &n), rat(5 * 7));
        assert_eq!(d_poly(&p("1,1"), &n), rat(5 * 4));
        // D'_(2)(z) = 2z(2z+1), D'_(1,1)(z) = 2z(2z-2).
        assert_eq!(dprime_poly(&p("2"), &n), rat(10 * 11));
        assert_eq!(dprime_poly(&p("1,1"), &n), rat(10 * 8));
    }

    #[test]
    fn dprime_shift_identity() {
        // D'_λ(z)/C_{λ∪λ}(2z) = 1/D'_λ(z - 1/2) for λ ⊢ k ≤ 4, checked in
        // the division-free form D'_λ(z)·D'_λ(z - 1/2) = C_{λ∪λ}(2z) so the
        // sample points may sit on zeros of either side.
        let points = [ratio(7, 2), ratio(9, 4), rat(6), ratio(13, 3), ratio(11, 5)];
        for k in 1..=4 {
            for lam in Partition::all(k) {
                for z in &points {
                    let lhs = dprime_poly(&lam, z) * dprime_poly(&lam, &(z - ratio(1, 2)));
                    let rhs = c_poly(&lam.union_double(), &(rat(2) * z));
                    assert_eq!(lhs, rhs, "λ={lam} z={z}");
                }
            }
        }
    }
}
