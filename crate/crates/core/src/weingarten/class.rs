use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{rat, ratio, Rational};

/// One of the ten matrix ensembles the engine knows how to integrate over:
/// the three classical compact groups and the seven symmetric-space series
/// (circular, chiral, and Bogoliubov-de Gennes). ASCII tags follow the
/// Cartan labels: `U O Sp AI AII AIII BDI CII DIII CI`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum EnsembleClass {
    /// Haar unitary `U(n)`; tag `U`.
    Unitary { n: usize },
    /// Haar orthogonal `O(n)`; tag `O`.
    Orthogonal { n: usize },
    /// Haar symplectic `Sp(2n)` realized in `U(2n)`; tag `Sp`.
    Symplectic { n: usize },
    /// Circular orthogonal ensemble `ᵀU U`, class A I; tag `AI`.
    Coe { n: usize },
    /// Circular symplectic ensemble `U^D U` (2n×2n), class A II; tag `AII`.
    Cse { n: usize },
    /// Chiral unitary ensemble `U* I'_{ab} U`, class A III; tag `AIII`.
    ChiralUnitary { a: usize, b: usize },
    /// Chiral orthogonal ensemble `ᵀR I'_{ab} R`, class BD I; tag `BDI`.
    ChiralOrthogonal { a: usize, b: usize },
    /// Chiral symplectic ensemble `S^D I''_{ab} S`, class C II; tag `CII`.
    ChiralSymplectic { a: usize, b: usize },
    /// BdG orthogonal ensemble `R^D R` over `O(2n)`, class D III; tag `DIII`.
    BdgOrthogonal { n: usize },
    /// BdG symplectic ensemble `S^D I'_{nn} S` over `Sp(2n)`, class C I; tag `CI`.
    BdgSymplectic { n: usize },
}

impl EnsembleClass {
    /// Builds and validates a class from its ASCII tag and parameters.
    /// Chiral classes take `(a, b)`; everything else takes `n`.
    pub fn from_tag(tag: &str, n: Option<usize>, ab: Option<(usize, usize)>) -> Result<Self> {
        let need_n = || {
            n.ok_or_else(|| {
                Error::InvalidParameters(format!("class {tag} requires a dimension parameter n"))
            })
        };
        let need_ab = || {
            ab.ok_or_else(|| {
                Error::InvalidParameters(format!("class {tag} requires parameters a and b"))
            })
        };
        let class = match tag {
            "U" => EnsembleClass::Unitary { n: need_n()? },
            "O" => EnsembleClass::Orthogonal { n: need_n()? },
            "Sp" => EnsembleClass::Symplectic { n: need_n()? },
            "AI" => EnsembleClass::Coe { n: need_n()? },
            "AII" => EnsembleClass::Cse { n: need_n()? },
            "AIII" => {
                let (a, b) = need_ab()?;
                EnsembleClass::ChiralUnitary { a, b }
            }
            "BDI" => {
                let (a, b) = need_ab()?;
                EnsembleClass::ChiralOrthogonal { a, b }
            }
            "CII" => {
                let (a, b) = need_ab()?;
                EnsembleClass::ChiralSymplectic { a, b }
            }
            "DIII" => EnsembleClass::BdgOrthogonal { n: need_n()? },
            "CI" => EnsembleClass::BdgSymplectic { n: need_n()? },
            other => {
                return Err(Error::InvalidParameters(format!(
                    "unknown ensemble class {other:?} (expected one of U O Sp AI AII AIII BDI CII DIII CI)"
                )))
            }
        };
        class.validate()?;
        Ok(class)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            EnsembleClass::ChiralUnitary { a, b }
            | EnsembleClass::ChiralOrthogonal { a, b }
            | EnsembleClass::ChiralSymplectic { a, b } => {
                if b < 1 || a < b {
                    return Err(Error::InvalidParameters(format!(
                        "chiral class {} requires a ≥ b ≥ 1, got a={a}, b={b}",
                        self.tag()
                    )));
                }
            }
            EnsembleClass::Unitary { n }
            | EnsembleClass::Orthogonal { n }
            | EnsembleClass::Symplectic { n }
            | EnsembleClass::Coe { n }
            | EnsembleClass::Cse { n }
            | EnsembleClass::BdgOrthogonal { n }
            | EnsembleClass::BdgSymplectic { n } => {
                if n < 1 {
                    return Err(Error::InvalidParameters(format!(
                        "class {} requires n ≥ 1",
                        self.tag()
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn tag(&self) -> &'static str {
        match self {
            EnsembleClass::Unitary { .. } => "U",
            EnsembleClass::Orthogonal { .. } => "O",
            EnsembleClass::Symplectic { .. } => "Sp",
            EnsembleClass::Coe { .. } => "AI",
            EnsembleClass::Cse { .. } => "AII",
            EnsembleClass::ChiralUnitary { .. } => "AIII",
            EnsembleClass::ChiralOrthogonal { .. } => "BDI",
            EnsembleClass::ChiralSymplectic { .. } => "CII",
            EnsembleClass::BdgOrthogonal { .. } => "DIII",
            EnsembleClass::BdgSymplectic { .. } => "CI",
        }
    }

    /// Side length of the sampled matrices.
    pub fn matrix_dim(&self) -> usize {
        match *self {
            EnsembleClass::Unitary { n }
            | EnsembleClass::Orthogonal { n }
            | EnsembleClass::Coe { n } => n,
            EnsembleClass::Symplectic { n }
            | EnsembleClass::Cse { n }
            | EnsembleClass::BdgOrthogonal { n }
            | EnsembleClass::BdgSymplectic { n } => 2 * n,
            EnsembleClass::ChiralUnitary { a, b } => a + b,
            EnsembleClass::ChiralOrthogonal { a, b } => a + b,
            EnsembleClass::ChiralSymplectic { a, b } => 2 * (a + b),
        }
    }

    /// True for the two classes whose Weingarten function lives on `S_k`
    /// (cycle-type indexed) rather than `S_{2k}`.
    pub fn on_cycle_types(&self) -> bool {
        matches!(
            self,
            EnsembleClass::Unitary { .. } | EnsembleClass::ChiralUnitary { .. }
        )
    }

    /// The parameter at which the underlying group Weingarten function is
    /// evaluated: `n` itself for the groups, `n+1` for A I (orthogonal),
    /// `n - 1/2` for A II (symplectic), `a+b` or `2n` for the rest.
    pub fn base_parameter(&self) -> Rational {
        match *self {
            EnsembleClass::Unitary { n }
            | EnsembleClass::Orthogonal { n }
            | EnsembleClass::Symplectic { n } => rat(n as i64),
            EnsembleClass::Coe { n } => rat(n as i64 + 1),
            EnsembleClass::Cse { n } => rat(n as i64) - ratio(1, 2),
            EnsembleClass::ChiralUnitary { a, b }
            | EnsembleClass::ChiralOrthogonal { a, b }
            | EnsembleClass::ChiralSymplectic { a, b } => rat((a + b) as i64),
            EnsembleClass::BdgOrthogonal { n } => rat(2 * n as i64),
            EnsembleClass::BdgSymplectic { n } => rat(n as i64),
        }
    }
}

impl fmt::Display for EnsembleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            EnsembleClass::ChiralUnitary { a, b }
            | EnsembleClass::ChiralOrthogonal { a, b }
            | EnsembleClass::ChiralSymplectic { a, b } => {
                write!(f, "{}(a={a},b={b})", self.tag())
            }
            EnsembleClass::Unitary { n }
            | EnsembleClass::Orthogonal { n }
            | EnsembleClass::Coe { n } => write!(f, "{}(n={n})", self.tag()),
            EnsembleClass::Symplectic { n }
            | EnsembleClass::Cse { n }
            | EnsembleClass::BdgOrthogonal { n }
            | EnsembleClass::BdgSymplectic { n } => write!(f, "{}(n={n})", self.tag()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tags_roundtrip() {
        let classes = [
            EnsembleClass::from_tag("U", Some(3), None).unwrap(),
            EnsembleClass::from_tag("Sp", Some(2), None).unwrap(),
            EnsembleClass::from_tag("AIII", None, Some((2, 1))).unwrap(),
            EnsembleClass::from_tag("CI", Some(2), None).unwrap(),
        ];
        assert_eq!(classes[0].tag(), "U");
        assert_eq!(classes[1].matrix_dim(), 4);
        assert_eq!(classes[2].matrix_dim(), 3);
        assert_eq!(classes[3].tag(), "CI");
    }

    #[test]
    fn parameter_validation() {
        assert!(EnsembleClass::from_tag("AIII", None, Some((1, 2))).is_err());
        assert!(EnsembleClass::from_tag("BDI", None, Some((2, 0))).is_err());
        assert!(EnsembleClass::from_tag("U", Some(0), None).is_err());
        assert!(EnsembleClass::from_tag("U", None, None).is_err());
        assert!(EnsembleClass::from_tag("XYZ", Some(1), None).is_err());
    }

    #[test]
    fn shifted_parameters() {
        assert_eq!(
            EnsembleClass::Coe { n: 4 }.base_parameter(),
            rat(5)
        );
        assert_eq!(
            EnsembleClass::Cse { n: 3 }.base_parameter(),
            ratio(5, 2)
        );
        assert_eq!(
            EnsembleClass::BdgOrthogonal { n: 3 }.base_parameter(),
            rat(6)
        );
    }
}
