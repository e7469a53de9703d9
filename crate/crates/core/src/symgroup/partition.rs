use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

/// An integer partition: a weakly decreasing sequence of positive integers.
///
/// Partitions index conjugacy classes (cycle-types), `H_k`-double cosets
/// (coset-types) and the irreducible objects of every function algebra used
/// by the engine.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, validating that the parts are positive and weakly
    /// decreasing.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!(
                "zero part in {parts:?}"
            )));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts not weakly decreasing: {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from parts in any order, dropping zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// `(1^k)`.
    pub fn ones(k: usize) -> Self {
        Partition { parts: vec![1; k] }
    }

    /// The one-row partition `(k)`; the empty partition when `k == 0`.
    pub fn row(k: usize) -> Self {
        if k == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![k] }
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The weight `|λ|`.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The length `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part at `i` (0-based), 0 beyond the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of parts of even size.
    pub fn even_part_count(&self) -> usize {
        self.parts.iter().filter(|&&p| p % 2 == 0).count()
    }

    /// Number of parts of odd size.
    pub fn odd_part_count(&self) -> usize {
        self.parts.iter().filter(|&&p| p % 2 == 1).count()
    }

    /// True iff every part is even, i.e. `λ = 2ν` for some partition `ν`.
    pub fn is_even(&self) -> bool {
        self.parts.iter().all(|&p| p % 2 == 0)
    }

    /// The conjugate partition `λ'`.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// The doubled partition `2λ = (2λ_1, 2λ_2, …)`.
    pub fn doubled(&self) -> Partition {
        Partition {
            parts: self.parts.iter().map(|&p| 2 * p).collect(),
        }
    }

    /// The union `λ ∪ λ = (λ_1, λ_1, λ_2, λ_2, …)`.
    pub fn union_double(&self) -> Partition {
        let mut parts = Vec::with_capacity(2 * self.parts.len());
        for &p in &self.parts {
            parts.push(p);
            parts.push(p);
        }
        Partition { parts }
    }

    /// Iterates over the cells `(i, j)` of the Young diagram, 1-based.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| (i + 1, j)))
    }

    /// The hook length of cell `(i, j)` (1-based).
    pub fn hook_length(&self, i: usize, j: usize) -> usize {
        let arm = self.part(i - 1) - j;
        let leg = self.parts.iter().skip(i).filter(|&&p| p >= j).count();
        arm + leg + 1
    }

    /// The centralizer order `z_λ = ∏ i^{m_i} m_i!` where `m_i` is the
    /// multiplicity of `i` among the parts.
    pub fn centralizer_order(&self) -> BigInt {
        let mut z = BigInt::one();
        let mut run = 0usize;
        for (idx, &p) in self.parts.iter().enumerate() {
            run += 1;
            z *= p;
            if idx + 1 == self.parts.len() || self.parts[idx + 1] != p {
                for m in 2..=run {
                    z *= m;
                }
                run = 0;
            }
        }
        z
    }

    /// All partitions of `k`, in descending lexicographic order starting at
    /// `(k)` and ending at `(1^k)`. `k = 0` yields the empty partition.
    pub fn all(k: usize) -> Vec<Partition> {
        if k == 0 {
            return vec![Partition::empty()];
        }
        let mut out = Vec::new();
        let mut current = vec![k];
        loop {
            out.push(Partition {
                parts: current.clone(),
            });
            // Find the last part greater than 1.
            let Some(pos) = current.iter().rposition(|&p| p > 1) else {
                break;
            };
            let reduced = current[pos] - 1;
            let mut remainder = current[pos..].iter().sum::<usize>() - reduced;
            current.truncate(pos);
            current.push(reduced);
            while remainder > 0 {
                let next = remainder.min(reduced);
                current.push(next);
                remainder -= next;
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    /// Comma-separated parts, e.g. `3,2,1`. The empty partition prints as `-`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition part {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}
