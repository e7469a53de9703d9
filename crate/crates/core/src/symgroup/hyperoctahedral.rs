use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::scalar::double_factorial_odd;
use crate::symgroup::{Partition, Permutation};

/// Default cap on `k` for `M_{2k}` enumeration. `(2k-1)!!` representatives
/// at `k = 6` is 10395, which is still comfortable; beyond that both memory
/// and the sums over `S_{2k}` blow up.
pub const M2K_DEFAULT_CAP: usize = 6;

/// A perfect matching of `[2k]`, identified with its canonical permutation
/// representative in `M_{2k}`: the unique `σ` in the coset with
/// `σ(2i-1) < σ(2i)` and `σ(1) < σ(3) < ⋯ < σ(2k-1)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    /// 0-based pairs `(a, b)` with `a < b`, sorted by `a`.
    pairs: Vec<(usize, usize)>,
}

impl Matching {
    pub fn k(&self) -> usize {
        self.pairs.len()
    }

    /// 0-based pairs, `(a, b)` with `a < b`, ascending in `a`.
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// The identity matching `{{1,2}, {3,4}, …}`.
    pub fn identity(k: usize) -> Self {
        Matching {
            pairs: (0..k).map(|i| (2 * i, 2 * i + 1)).collect(),
        }
    }

    /// The canonical permutation representative in `M_{2k}`.
    pub fn to_permutation(&self) -> Permutation {
        let mut images = Vec::with_capacity(2 * self.pairs.len());
        for &(a, b) in &self.pairs {
            images.push(a);
            images.push(b);
        }
        Permutation::from_images(images).expect("matching pairs form a bijection")
    }

    /// Interprets a permutation in `M_{2k}` normal form as a matching.
    pub fn from_permutation(p: &Permutation) -> Result<Self> {
        let m = p.degree();
        if m % 2 != 0 {
            return Err(Error::OddDomain { size: m });
        }
        let k = m / 2;
        let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(k);
        for i in 0..k {
            let a = p.apply(2 * i);
            let b = p.apply(2 * i + 1);
            if a >= b {
                return Err(Error::InvalidPermutation(format!(
                    "{p} is not in M_{{2k}} normal form: σ(2i-1) ≥ σ(2i)"
                )));
            }
            if i > 0 && pairs[i - 1].0 >= a {
                return Err(Error::InvalidPermutation(format!(
                    "{p} is not in M_{{2k}} normal form: odd positions not increasing"
                )));
            }
            pairs.push((a, b));
        }
        Ok(Matching { pairs })
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_permutation())
    }
}

impl fmt::Debug for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matching({self})")
    }
}

/// `(2k-1)!!`, the size of `M_{2k}`.
pub fn matchings_count(k: usize) -> BigInt {
    double_factorial_odd(k)
}

/// Enumerates all `(2k-1)!!` matchings of `[2k]`, ordered lexicographically
/// by the sequence of pair partners `(σ(2), σ(4), …)`. The order is
/// deterministic and part of the contract (it fixes Gram-matrix indexing).
pub fn enumerate_m2k(k: usize) -> Result<Vec<Matching>> {
    if k > M2K_DEFAULT_CAP {
        return Err(Error::CapExceeded {
            what: "matching enumeration k",
            requested: k,
            cap: M2K_DEFAULT_CAP,
        });
    }
    Ok(enumerate_m2k_unchecked(k))
}

/// As [`enumerate_m2k`] but without the cap. Callers are responsible for
/// keeping `k` sane.
pub fn enumerate_m2k_unchecked(k: usize) -> Vec<Matching> {
    let mut out = Vec::new();
    let mut free: Vec<usize> = (0..2 * k).collect();
    let mut acc: Vec<(usize, usize)> = Vec::with_capacity(k);
    fn rec(free: &mut Vec<usize>, acc: &mut Vec<(usize, usize)>, out: &mut Vec<Matching>) {
        if free.is_empty() {
            out.push(Matching { pairs: acc.clone() });
            return;
        }
        let a = free[0];
        for idx in 1..free.len() {
            let b = free[idx];
            let mut rest: Vec<usize> = free[1..].to_vec();
            rest.remove(idx - 1);
            acc.push((a, b));
            rec(&mut rest, acc, out);
            acc.pop();
        }
    }
    if k == 0 {
        out.push(Matching { pairs: vec![] });
    } else {
        rec(&mut free, &mut acc, &mut out);
    }
    out
}

/// The canonical coset-type-`μ` representative `σ_μ ∈ M_{2k} ⊂ S_{2k}`:
/// block-wise, the block for a part of size `m` maps
/// `1 ↦ 1`, `2 ↦ 2m`, and `p ↦ p-1` for `3 ≤ p ≤ 2m` (offsets omitted).
/// It has coset-type `μ` and signature `+1`; `σ_{(1^k)} = id`.
pub fn sigma_mu(mu: &Partition) -> Permutation {
    let mut images = vec![0usize; 2 * mu.weight()];
    let mut offset = 0usize;
    for &m in mu.parts() {
        // 0-based: position offset+0 ↦ offset+0, offset+1 ↦ offset+2m-1,
        // and offset+p ↦ offset+p-1 for 2 ≤ p ≤ 2m-1.
        images[offset] = offset;
        images[offset + 1] = offset + 2 * m - 1;
        for p in 2..2 * m {
            images[offset + p] = offset + p - 1;
        }
        offset += 2 * m;
    }
    Permutation::from_images(images).expect("sigma_mu is a bijection")
}

/// True iff `p ∈ H_k`, the hyperoctahedral subgroup of `S_{2k}` stabilizing
/// the pair partition `{{1,2}, {3,4}, …}`.
pub fn is_hyperoctahedral(p: &Permutation) -> bool {
    let m = p.degree();
    if m % 2 != 0 {
        return false;
    }
    (0..m / 2).all(|i| p.apply(2 * i) ^ 1 == p.apply(2 * i + 1))
}

/// All `2^k k!` elements of `H_k`, as signed block permutations.
pub fn hyperoctahedral_elements(k: usize) -> Vec<Permutation> {
    let mut out = Vec::with_capacity((1usize << k) * (1..=k).product::<usize>().max(1));
    for block in Permutation::all(k) {
        for signs in 0..(1usize << k) {
            let mut images = vec![0usize; 2 * k];
            for i in 0..k {
                let target = block.apply(i);
                let flip = (signs >> i) & 1;
                images[2 * i] = 2 * target + flip;
                images[2 * i + 1] = 2 * target + 1 - flip;
            }
            out.push(Permutation::from_images(images).expect("bijection"));
        }
    }
    out
}

struct Dsu {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
    }
}

/// The coset-type of `p ∈ S_{2k}`: halved component sizes of the graph on
/// `[2k]` whose red edges are `{2r-1, 2r}` and blue edges
/// `{p(2r-1), p(2r)}`. Classifies the double coset `H_k p H_k`.
pub fn coset_type(p: &Permutation) -> Result<Partition> {
    let m = p.degree();
    if m % 2 != 0 {
        return Err(Error::OddDomain { size: m });
    }
    let mut dsu = Dsu::new(m);
    for r in 0..m / 2 {
        dsu.union(2 * r, 2 * r + 1);
        dsu.union(p.apply(2 * r), p.apply(2 * r + 1));
    }
    let mut sizes = std::collections::HashMap::new();
    for v in 0..m {
        *sizes.entry(dsu.find(v)).or_insert(0usize) += 1;
    }
    Ok(Partition::from_unsorted(
        sizes.values().map(|&s| s / 2).collect(),
    ))
}

/// Walks the alternating red/blue cycles of `p`'s graph and lays each onto
/// the corresponding cycle of `σ_μ`, producing an explicit factorization
/// `p = ζ · σ_μ · ζ'` with `ζ, ζ' ∈ H_k`.
///
/// The factorization is not unique; this returns one deterministic choice
/// (components ordered by size, ties by smallest vertex, each walked from
/// its smallest vertex along the red edge first).
pub fn double_coset_factor(p: &Permutation) -> Result<(Partition, Permutation, Permutation)> {
    let m = p.degree();
    if m % 2 != 0 {
        return Err(Error::OddDomain { size: m });
    }
    let k = m / 2;

    // blue_of[v] = (domain pair index, other value of that blue pair)
    let mut blue_of = vec![(0usize, 0usize); m];
    for i in 0..k {
        let a = p.apply(2 * i);
        let b = p.apply(2 * i + 1);
        blue_of[a] = (i, b);
        blue_of[b] = (i, a);
    }

    // Walk components: values alternate red, blue, red, … starting at the
    // smallest unvisited value.
    let mut visited = vec![false; m];
    let mut components: Vec<Vec<usize>> = Vec::new();
    for start in 0..m {
        if visited[start] {
            continue;
        }
        let mut walk = Vec::new();
        let mut v = start;
        loop {
            // red edge
            visited[v] = true;
            walk.push(v);
            let w = v ^ 1;
            visited[w] = true;
            walk.push(w);
            // blue edge
            let (_, next) = blue_of[w];
            if next == start {
                break;
            }
            v = next;
        }
        components.push(walk);
    }
    components.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));

    let mu = Partition::new(components.iter().map(|c| c.len() / 2).collect())
        .expect("component sizes are weakly decreasing by construction");
    let target = sigma_mu(&mu);

    // ζ maps the values of σ_μ's graph onto the values of p's graph,
    // component by component in walk order.
    let mut zeta_images = vec![0usize; m];
    let mut offset = 0usize;
    for comp in &components {
        for (idx, &w) in comp.iter().enumerate() {
            zeta_images[offset + idx] = w;
        }
        offset += comp.len();
    }
    let zeta = Permutation::from_images(zeta_images).expect("walk covers each value once");

    // ζ'⁻¹ maps σ_μ's domain pairs onto p's domain pairs: target positions
    // (2t, 2t+1) go to the p-positions whose blue pair matches ζ of the
    // target blue pair, aligned by entry value.
    let mut zp_inv = vec![0usize; m];
    for t in 0..k {
        let q1 = 2 * t;
        let q2 = 2 * t + 1;
        let v1 = zeta.apply(target.apply(q1));
        let v2 = zeta.apply(target.apply(q2));
        let (i, other) = blue_of[v1];
        debug_assert_eq!(other, v2);
        if p.apply(2 * i) == v1 {
            zp_inv[q1] = 2 * i;
            zp_inv[q2] = 2 * i + 1;
        } else {
            zp_inv[q1] = 2 * i + 1;
            zp_inv[q2] = 2 * i;
        }
    }
    let zeta_prime = Permutation::from_images(zp_inv)
        .expect("pair alignment is a bijection")
        .inverse();

    debug_assert_eq!(zeta.compose(&target).compose(&zeta_prime), *p);
    Ok((mu, zeta, zeta_prime))
}

/// Reduces `p ∈ S_{2k}` to `(μ, ε(ζ), ε(ζ'))` for a factorization
/// `p = ζ σ_μ ζ'`.
///
/// When `μ` is even both signs are determined by `p`. Otherwise the pair is
/// determined only up to a simultaneous flip (an odd component admits a
/// stabilizer pair of odd signs), and the canonical choice `(ε(p), +1)` is
/// returned. Either way the signs make the left- and right-twisted
/// `T`-evaluations well defined: those vanish on non-even coset types.
pub fn double_coset_reduce(p: &Permutation) -> Result<(Partition, i8, i8)> {
    let (mu, zeta, zeta_prime) = double_coset_factor(p)?;
    if mu.is_even() {
        Ok((mu, zeta.signature(), zeta_prime.signature()))
    } else {
        Ok((mu, p.signature(), 1))
    }
}
