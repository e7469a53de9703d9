use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::charalg::matchings_of_coset_type;
use crate::error::{Error, Result};
use crate::moments::contraction::{delta_pair, delta_pair_symplectic, PairingTable};
use crate::scalar::{factorial, rat_big, sign_rat, Rational};
use crate::symgroup::{enumerate_m2k, Permutation};
use crate::weingarten::{wg_function, EnsembleClass, WgTable};

/// A sequence of 1-based matrix indices bounded by the ambient dimension.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IndexSequence {
    entries: Vec<usize>,
    dim: usize,
}

impl IndexSequence {
    pub fn new(entries: Vec<usize>, dim: usize) -> Result<Self> {
        if let Some(&bad) = entries.iter().find(|&&e| e < 1 || e > dim) {
            return Err(Error::InvalidParameters(format!(
                "index {bad} out of range 1..={dim}"
            )));
        }
        Ok(IndexSequence { entries, dim })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// 1-based entry at 0-based position.
    pub fn entry(&self, pos: usize) -> usize {
        self.entries[pos]
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }
}

/// One moment to evaluate: the ensemble class plus the index sequences the
/// class's theorem consumes.
///
/// Shapes by class:
/// * `U` — `i, j` (holomorphic rows/columns, length k) and
///   `i_conj, j_conj` (conjugated rows/columns, length l); zero when k ≠ l.
/// * `O`, `Sp` — `i, j` of equal length (rows/columns of the plain product);
///   zero for odd length.
/// * `AI`, `AII` — `i` (indices of the holomorphic entry pairs, length 2k)
///   and `j` (conjugated, length 2l); zero when k ≠ l. A II consumes tilde
///   entries.
/// * `AIII` — `i, j` of equal length k (rows and columns of the W-product).
/// * `BDI`, `CII`, `DIII`, `CI` — a single `i` of even length 2k; C II,
///   D III and C I consume tilde entries, and the BdG classes vanish for
///   odd k.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MomentQuery {
    pub class: EnsembleClass,
    pub i: IndexSequence,
    pub j: Option<IndexSequence>,
    pub i_conj: Option<IndexSequence>,
    pub j_conj: Option<IndexSequence>,
}

impl MomentQuery {
    /// A query for the single-sequence classes (BDI, CII, DIII, CI).
    pub fn single(class: EnsembleClass, i: IndexSequence) -> Self {
        MomentQuery {
            class,
            i,
            j: None,
            i_conj: None,
            j_conj: None,
        }
    }

    /// A query with a holomorphic and a conjugated/second sequence
    /// (AI, AII, AIII, O, Sp).
    pub fn with_j(class: EnsembleClass, i: IndexSequence, j: IndexSequence) -> Self {
        MomentQuery {
            class,
            i,
            j: Some(j),
            i_conj: None,
            j_conj: None,
        }
    }

    /// A unitary-group query with all four sequences.
    pub fn unitary(
        n: usize,
        i: IndexSequence,
        j: IndexSequence,
        i_conj: IndexSequence,
        j_conj: IndexSequence,
    ) -> Self {
        MomentQuery {
            class: EnsembleClass::Unitary { n },
            i,
            j: Some(j),
            i_conj: Some(i_conj),
            j_conj: Some(j_conj),
        }
    }
}

/// Degree caps and knobs for the evaluator.
#[derive(Clone, Copy, Debug)]
pub struct EvalConfig {
    /// Cap on k for the single-sum classes (AI, AII, AIII, BDI, CII, DIII, CI).
    pub max_single_sum_degree: usize,
    /// Cap on k for the double-sum classes (U, O, Sp).
    pub max_double_sum_degree: usize,
}

impl Default for EvalConfig {
    fn default() -> Self {
        // (2k-1)!!² terms at k = 4 is 11025 Weingarten lookups — cheap;
        // k = 6 double sums are not.
        EvalConfig {
            max_single_sum_degree: 5,
            max_double_sum_degree: 4,
        }
    }
}

/// Evaluates the exact moment for `q` with default caps.
pub fn evaluate_moment(q: &MomentQuery) -> Result<Rational> {
    evaluate_moment_with(q, &EvalConfig::default())
}

/// Evaluates the exact moment for `q`.
///
/// Vanishing clauses (mismatched conjugation degrees, odd total degree for
/// O/Sp, odd k for the BdG classes) return exact zero before any Weingarten
/// table is built, so they are not subject to the degree caps.
pub fn evaluate_moment_with(q: &MomentQuery, cfg: &EvalConfig) -> Result<Rational> {
    q.class.validate()?;
    let dim = q.class.matrix_dim();
    let check_dim = |s: &IndexSequence, name: &str| -> Result<()> {
        if s.dim() != dim {
            return Err(Error::ShapeError {
                class: q.class.tag(),
                message: format!(
                    "sequence {name} has ambient dimension {}, class needs {dim}",
                    s.dim()
                ),
            });
        }
        Ok(())
    };
    check_dim(&q.i, "i")?;
    if let Some(j) = &q.j {
        check_dim(j, "j")?;
    }
    if let Some(s) = &q.i_conj {
        check_dim(s, "iconj")?;
    }
    if let Some(s) = &q.j_conj {
        check_dim(s, "jconj")?;
    }

    match q.class {
        EnsembleClass::Unitary { n } => eval_unitary(q, n, cfg),
        EnsembleClass::Orthogonal { .. } => eval_orthogonal_group(q, cfg),
        EnsembleClass::Symplectic { n } => eval_symplectic_group(q, n, cfg),
        EnsembleClass::Coe { .. } | EnsembleClass::Cse { .. } => eval_circular(q, cfg),
        EnsembleClass::ChiralUnitary { .. } => eval_chiral_unitary(q, cfg),
        EnsembleClass::ChiralOrthogonal { .. } | EnsembleClass::BdgOrthogonal { .. } => {
            eval_pair_single_sum(q, cfg)
        }
        EnsembleClass::ChiralSymplectic { a, b } => eval_pairing_single_sum(q, a + b, cfg),
        EnsembleClass::BdgSymplectic { n } => eval_pairing_single_sum(q, n, cfg),
    }
}

fn shape_err(class: &EnsembleClass, message: impl Into<String>) -> Error {
    Error::ShapeError {
        class: class.tag(),
        message: message.into(),
    }
}

fn require_j<'q>(q: &'q MomentQuery, what: &str) -> Result<&'q IndexSequence> {
    q.j.as_ref()
        .ok_or_else(|| shape_err(&q.class, format!("class requires {what}")))
}

/// All `σ` with `δ_σ(i, j) = 1`, i.e. bijections sending each position `s`
/// to a position of `i` holding the value `j[s]`, assembled value class by
/// value class. The count is `∏_v m_v!`, which collapses to nothing when the
/// value multisets differ.
fn delta_support(i: &IndexSequence, j: &IndexSequence) -> Vec<Permutation> {
    use std::collections::HashMap;
    let k = i.len();
    debug_assert_eq!(k, j.len());
    let mut pos_i: HashMap<usize, Vec<usize>> = HashMap::new();
    let mut pos_j: HashMap<usize, Vec<usize>> = HashMap::new();
    for s in 0..k {
        pos_i.entry(i.entry(s)).or_default().push(s);
        pos_j.entry(j.entry(s)).or_default().push(s);
    }
    if pos_i.len() != pos_j.len()
        || pos_i
            .iter()
            .any(|(v, ps)| pos_j.get(v).map(|qs| qs.len()) != Some(ps.len()))
    {
        return Vec::new();
    }
    let groups: Vec<(&Vec<usize>, &Vec<usize>)> = pos_i
        .iter()
        .map(|(v, ps)| (&pos_j[v], ps))
        .collect();

    let mut out = Vec::new();
    let mut images = vec![0usize; k];
    fn rec(
        groups: &[(&Vec<usize>, &Vec<usize>)],
        level: usize,
        images: &mut Vec<usize>,
        out: &mut Vec<Permutation>,
    ) {
        if level == groups.len() {
            out.push(Permutation::from_images(images.clone()).expect("bijection by construction"));
            return;
        }
        let (j_positions, i_positions) = groups[level];
        // Assign i-positions to j-positions in every order.
        let m = i_positions.len();
        let mut idx: Vec<usize> = (0..m).collect();
        loop {
            for (t, &jp) in j_positions.iter().enumerate() {
                images[jp] = i_positions[idx[t]];
            }
            rec(groups, level + 1, images, out);
            // Next permutation of idx (lexicographic).
            let Some(pivot) = (0..m.saturating_sub(1)).rev().find(|&t| idx[t] < idx[t + 1])
            else {
                break;
            };
            let swap = (pivot + 1..m).rev().find(|&t| idx[t] > idx[pivot]).unwrap();
            idx.swap(pivot, swap);
            idx[pivot + 1..].reverse();
        }
    }
    rec(&groups, 0, &mut images, &mut out);
    out
}

/// True iff `δ_σ(i, j) = 1` for every `σ`, i.e. both sequences are constant
/// with the same value.
fn delta_is_full(i: &IndexSequence, j: &IndexSequence) -> bool {
    !i.is_empty()
        && i.entries().iter().all(|&e| e == i.entry(0))
        && j.entries().iter().all(|&e| e == i.entry(0))
}

/// `Σ_{σ ∈ S_m} f(σ)` for a Weingarten table, by class/double-coset counts
/// instead of enumeration. For the sign-twisted tables the signed
/// double-coset sums cancel to zero (each H_k has as many odd as even
/// elements).
fn sum_over_symmetric_group(table: &WgTable, m: usize) -> Rational {
    match table {
        WgTable::Class(f) => {
            let mf = rat_big(factorial(m));
            f.iter()
                .map(|(mu, v)| v * &mf / rat_big(mu.centralizer_order()))
                .sum()
        }
        WgTable::Coset(f) => match f.twist() {
            crate::charalg::Twist::None => {
                let k = m / 2;
                let h = rat_big(factorial(k) * BigInt::from(1u64 << k));
                f.iter()
                    .map(|(mu, v)| v * rat_big(matchings_of_coset_type(mu)) * &h)
                    .sum()
            }
            _ => Rational::zero(),
        },
    }
}

fn eval_unitary(q: &MomentQuery, _n: usize, cfg: &EvalConfig) -> Result<Rational> {
    let j = require_j(q, "j (and iconj, jconj)")?;
    let (ic, jc) = match (&q.i_conj, &q.j_conj) {
        (Some(ic), Some(jc)) => (ic, jc),
        _ => return Err(shape_err(&q.class, "class requires iconj and jconj")),
    };
    if q.i.len() != j.len() {
        return Err(shape_err(&q.class, "i and j must have equal length"));
    }
    if ic.len() != jc.len() {
        return Err(shape_err(&q.class, "iconj and jconj must have equal length"));
    }
    let k = q.i.len();
    if k != ic.len() {
        return Ok(Rational::zero());
    }
    if k == 0 {
        return Ok(Rational::one());
    }
    if k > cfg.max_double_sum_degree {
        return Err(Error::CapExceeded {
            what: "double-sum degree k",
            requested: k,
            cap: cfg.max_double_sum_degree,
        });
    }
    let wg = wg_function(&q.class, k)?;
    // Σ_{σ,τ} δ_σ(i, i') δ_τ(j, j') Wg(σ⁻¹τ).
    let rows = delta_support(&q.i, ic);
    if rows.is_empty() {
        return Ok(Rational::zero());
    }
    let cols = delta_support(j, jc);
    let mut total = Rational::zero();
    for sigma in &rows {
        let si = sigma.inverse();
        for tau in &cols {
            total += wg.table.eval(&si.compose(tau));
        }
    }
    Ok(total)
}

fn matching_reps(k: usize) -> Result<Vec<Permutation>> {
    Ok(enumerate_m2k(k)?
        .iter()
        .map(|m| m.to_permutation())
        .collect())
}

fn eval_orthogonal_group(q: &MomentQuery, cfg: &EvalConfig) -> Result<Rational> {
    let j = require_j(q, "j")?;
    if q.i.len() != j.len() {
        return Err(shape_err(&q.class, "i and j must have equal length"));
    }
    let m = q.i.len();
    if m % 2 != 0 {
        return Ok(Rational::zero());
    }
    if m == 0 {
        return Ok(Rational::one());
    }
    let k = m / 2;
    if k > cfg.max_double_sum_degree {
        return Err(Error::CapExceeded {
            what: "double-sum half-degree k",
            requested: k,
            cap: cfg.max_double_sum_degree,
        });
    }
    let wg = wg_function(&q.class, k)?;
    let reps = matching_reps(k)?;
    let rows: Vec<&Permutation> = reps
        .iter()
        .filter(|s| delta_pair(s, &q.i).expect("length checked"))
        .collect();
    if rows.is_empty() {
        return Ok(Rational::zero());
    }
    let cols: Vec<&Permutation> = reps
        .iter()
        .filter(|s| delta_pair(s, j).expect("length checked"))
        .collect();
    let mut total = Rational::zero();
    for sigma in &rows {
        let si = sigma.inverse();
        for tau in &cols {
            total += wg.table.eval(&si.compose(tau));
        }
    }
    Ok(total)
}

fn eval_symplectic_group(q: &MomentQuery, n: usize, cfg: &EvalConfig) -> Result<Rational> {
    let j = require_j(q, "j")?;
    if q.i.len() != j.len() {
        return Err(shape_err(&q.class, "i and j must have equal length"));
    }
    let m = q.i.len();
    if m % 2 != 0 {
        return Ok(Rational::zero());
    }
    if m == 0 {
        return Ok(Rational::one());
    }
    let k = m / 2;
    if k > cfg.max_double_sum_degree {
        return Err(Error::CapExceeded {
            what: "double-sum half-degree k",
            requested: k,
            cap: cfg.max_double_sum_degree,
        });
    }
    let wg = wg_function(&q.class, k)?;
    let pairing = PairingTable::new(n);
    let reps = matching_reps(k)?;
    let rows: Vec<(i8, &Permutation)> = reps
        .iter()
        .filter_map(|s| {
            let sign = delta_pair_symplectic(s, &q.i, &pairing).expect("length checked");
            (sign != 0).then_some((sign, s))
        })
        .collect();
    if rows.is_empty() {
        return Ok(Rational::zero());
    }
    let cols: Vec<(i8, &Permutation)> = reps
        .iter()
        .filter_map(|s| {
            let sign = delta_pair_symplectic(s, j, &pairing).expect("length checked");
            (sign != 0).then_some((sign, s))
        })
        .collect();
    let mut total = Rational::zero();
    for (si_sign, sigma) in &rows {
        let si = sigma.inverse();
        for (tau_sign, tau) in &cols {
            total += sign_rat(si_sign * tau_sign) * wg.table.eval(&si.compose(tau));
        }
    }
    Ok(total)
}

/// A I and A II: a single sum over `S_{2k}` of `δ_σ(i, j) Wg(σ)`.
fn eval_circular(q: &MomentQuery, cfg: &EvalConfig) -> Result<Rational> {
    let j = require_j(q, "j")?;
    if q.i.len() % 2 != 0 || j.len() % 2 != 0 {
        return Err(shape_err(
            &q.class,
            "entry-pair sequences must have even length",
        ));
    }
    if q.i.len() != j.len() {
        // Mismatched holomorphic/antiholomorphic degrees vanish.
        return Ok(Rational::zero());
    }
    let k = q.i.len() / 2;
    if k == 0 {
        return Ok(Rational::one());
    }
    if k > cfg.max_single_sum_degree {
        return Err(Error::CapExceeded {
            what: "single-sum half-degree k",
            requested: k,
            cap: cfg.max_single_sum_degree,
        });
    }
    let wg = wg_function(&q.class, k)?;
    if delta_is_full(&q.i, j) {
        return Ok(sum_over_symmetric_group(&wg.table, 2 * k));
    }
    Ok(delta_support(&q.i, j)
        .iter()
        .map(|sigma| wg.table.eval(sigma))
        .sum())
}

/// A III: a single sum over `S_k` of `δ_σ(i, j) Wg(σ)`.
fn eval_chiral_unitary(q: &MomentQuery, cfg: &EvalConfig) -> Result<Rational> {
    let j = require_j(q, "j")?;
    if q.i.len() != j.len() {
        return Err(shape_err(&q.class, "i and j must have equal length"));
    }
    let k = q.i.len();
    if k == 0 {
        return Ok(Rational::one());
    }
    if k > cfg.max_single_sum_degree {
        return Err(Error::CapExceeded {
            what: "single-sum degree k",
            requested: k,
            cap: cfg.max_single_sum_degree,
        });
    }
    let wg = wg_function(&q.class, k)?;
    if delta_is_full(&q.i, j) {
        return Ok(sum_over_symmetric_group(&wg.table, k));
    }
    Ok(delta_support(&q.i, j)
        .iter()
        .map(|sigma| wg.table.eval(sigma))
        .sum())
}

/// BD I and D III: a single sum over `M_{2k}` of `Δ_σ(i) Wg(σ)`.
fn eval_pair_single_sum(q: &MomentQuery, cfg: &EvalConfig) -> Result<Rational> {
    if q.j.is_some() {
        return Err(shape_err(&q.class, "class takes a single sequence i"));
    }
    if q.i.len() % 2 != 0 {
        return Err(shape_err(&q.class, "sequence must have even length 2k"));
    }
    let k = q.i.len() / 2;
    if k == 0 {
        return Ok(Rational::one());
    }
    if matches!(q.class, EnsembleClass::BdgOrthogonal { .. }) && k % 2 != 0 {
        return Ok(Rational::zero());
    }
    if k > cfg.max_single_sum_degree {
        return Err(Error::CapExceeded {
            what: "single-sum half-degree k",
            requested: k,
            cap: cfg.max_single_sum_degree,
        });
    }
    let wg = wg_function(&q.class, k)?;
    let mut total = Rational::zero();
    for sigma in matching_reps(k)? {
        if delta_pair(&sigma, &q.i).expect("length checked") {
            total += wg.table.eval(&sigma);
        }
    }
    Ok(total)
}

/// C II and C I: a single sum over `M_{2k}` of `Δ'_σ(i) Wg(σ)`.
fn eval_pairing_single_sum(q: &MomentQuery, n: usize, cfg: &EvalConfig) -> Result<Rational> {
    if q.j.is_some() {
        return Err(shape_err(&q.class, "class takes a single sequence i"));
    }
    if q.i.len() % 2 != 0 {
        return Err(shape_err(&q.class, "sequence must have even length 2k"));
    }
    let k = q.i.len() / 2;
    if k == 0 {
        return Ok(Rational::one());
    }
    if matches!(q.class, EnsembleClass::BdgSymplectic { .. }) && k % 2 != 0 {
        return Ok(Rational::zero());
    }
    if k > cfg.max_single_sum_degree {
        return Err(Error::CapExceeded {
            what: "single-sum half-degree k",
            requested: k,
            cap: cfg.max_single_sum_degree,
        });
    }
    let wg = wg_function(&q.class, k)?;
    let pairing = PairingTable::new(n);
    let mut total = Rational::zero();
    for sigma in matching_reps(k)? {
        let sign = delta_pair_symplectic(&sigma, &q.i, &pairing).expect("length checked");
        if sign != 0 {
            total += sign_rat(sign) * wg.table.eval(&sigma);
        }
    }
    Ok(total)
}

/// Rewrites a plain-entry index sequence for the tilde-entry classes:
/// `v_{ij} = -ṽ_{i+n, j}` for `1 ≤ i ≤ n` and `v_{ij} = ṽ_{i-n, j}` for
/// `n+1 ≤ i ≤ 2n`. Row indices sit at the even positions (0-based) of the
/// flattened sequence; returns the accumulated sign and the tilde sequence.
pub fn plain_to_tilde(n: usize, seq: &IndexSequence) -> Result<(i8, IndexSequence)> {
    if seq.dim() != 2 * n {
        return Err(Error::InvalidParameters(format!(
            "sequence dimension {} does not match 2n = {}",
            seq.dim(),
            2 * n
        )));
    }
    if seq.len() % 2 != 0 {
        return Err(Error::InvalidParameters(
            "entry-pair sequence must have even length".into(),
        ));
    }
    let mut sign = 1i8;
    let mut entries = seq.entries().to_vec();
    for pos in (0..entries.len()).step_by(2) {
        let row = entries[pos];
        if row <= n {
            entries[pos] = row + n;
            sign = -sign;
        } else {
            entries[pos] = row - n;
        }
    }
    Ok((sign, IndexSequence::new(entries, 2 * n)?))
}
