use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::symgroup::Partition;

/// A permutation of `{0, …, m-1}` in one-line form.
///
/// Internally 0-based; every external boundary (text format, JSON) is
/// 1-based, matching the usual one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Identity permutation on `m` points.
    pub fn identity(m: usize) -> Self {
        Permutation {
            images: (0..m).collect(),
        }
    }

    /// From 0-based images; validates bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let m = images.len();
        let mut seen = vec![false; m];
        for &x in &images {
            if x >= m || seen[x] {
                return Err(Error::InvalidPermutation(format!(
                    "not a bijection of 0..{m}: {images:?}"
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// From 1-based one-line images, e.g. `[3,1,2,4,6,5]`.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        if images.iter().any(|&x| x == 0) {
            return Err(Error::InvalidPermutation(
                "one-line form is 1-based; found 0".into(),
            ));
        }
        Self::from_images(images.iter().map(|&x| x - 1).collect())
    }

    /// The transposition `(a b)` (1-based) inside `S_m`.
    pub fn transposition(m: usize, a: usize, b: usize) -> Result<Self> {
        if a == 0 || b == 0 || a > m || b > m || a == b {
            return Err(Error::InvalidPermutation(format!(
                "bad transposition ({a} {b}) in S_{m}"
            )));
        }
        let mut images: Vec<usize> = (0..m).collect();
        images.swap(a - 1, b - 1);
        Ok(Permutation { images })
    }

    /// Number of points acted on.
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of `x` (0-based).
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// 0-based images.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// 1-based one-line images.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x + 1).collect()
    }

    /// `self ∘ other`: applies `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y] = x;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x == y)
    }

    /// The signature `ε(σ) ∈ {+1, -1}`, from cycle parity.
    pub fn signature(&self) -> i8 {
        let cycles = self.cycle_lengths().len();
        if (self.degree() - cycles) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    fn cycle_lengths(&self) -> Vec<usize> {
        let m = self.degree();
        let mut seen = vec![false; m];
        let mut lengths = Vec::new();
        for start in 0..m {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = self.images[x];
            }
            lengths.push(len);
        }
        lengths
    }

    /// The cycle-type: sorted cycle lengths as a partition of the degree.
    pub fn cycle_type(&self) -> Partition {
        Partition::from_unsorted(self.cycle_lengths())
    }

    /// A canonical permutation in `S_k` with the given cycle-type: cycles
    /// laid out consecutively, `(1 … μ_1)(μ_1+1 … μ_1+μ_2)⋯`.
    pub fn with_cycle_type(mu: &Partition) -> Permutation {
        let m = mu.weight();
        let mut images = vec![0usize; m];
        let mut offset = 0;
        for &part in mu.parts() {
            for i in 0..part {
                images[offset + i] = offset + (i + 1) % part;
            }
            offset += part;
        }
        Permutation { images }
    }

    /// All `m!` permutations of `S_m`, in lexicographic one-line order.
    pub fn all(m: usize) -> Vec<Permutation> {
        use itertools::Itertools;
        (0..m)
            .permutations(m)
            .map(|images| Permutation { images })
            .collect()
    }
}

impl fmt::Display for Permutation {
    /// 1-based comma-separated one-line form, e.g. `3,1,2,4,6,5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &x) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", x + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let images = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad permutation image {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_one_line(&images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_cycle_type() {
        // The S_6 permutation with one-line form 3,1,2,4,6,5 has cycle-type (3,2,1).
        let p: Permutation = "3,1,2,4,6,5".parse().unwrap();
        assert_eq!(p.cycle_type().to_string(), "3,2,1");
        assert_eq!(
            Permutation::identity(4).cycle_type(),
            Partition::ones(4)
        );
        let t = Permutation::transposition(2, 1, 2).unwrap();
        assert_eq!(t.cycle_type().to_string(), "2");
    }

    #[test]
    fn compose_applies_right_first() {
        let a: Permutation = "2,1,3".parse().unwrap();
        let b: Permutation = "1,3,2".parse().unwrap();
        // (a∘b)(2): b sends 2→3, a sends 3→3.
        assert_eq!(a.compose(&b).to_string(), "2,3,1");
        assert_eq!(b.compose(&a).to_string(), "3,1,2");
    }

    #[test]
    fn inverse_and_identity() {
        let p: Permutation = "3,1,2,4,6,5".parse().unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
        assert!(p.inverse().compose(&p).is_identity());
    }

    #[test]
    fn signature_multiplicative_exhaustive_s4() {
        let all = Permutation::all(4);
        assert_eq!(all.len(), 24);
        for a in &all {
            for b in &all {
                assert_eq!(
                    a.compose(b).signature(),
                    a.signature() * b.signature()
                );
            }
        }
    }

    #[test]
    fn canonical_cycle_type_representative() {
        let mu: Partition = "3,2,1".parse().unwrap();
        let p = Permutation::with_cycle_type(&mu);
        assert_eq!(p.cycle_type(), mu);
        assert_eq!(p.to_string(), "2,3,1,5,4,6");
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_one_line(&[1, 1, 3]).is_err());
        assert!(Permutation::from_one_line(&[1, 4]).is_err());
        assert!(Permutation::from_one_line(&[0, 1]).is_err());
    }
}
