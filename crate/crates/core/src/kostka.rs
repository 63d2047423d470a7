//! Generalized Kostka polynomials `K_{λγη}(q)`.
//!
//! Two engines compute the same value. The Kostant engine is an alternating
//! sum over `S_n` of a `q`-counting partition function on the block-upper
//! roots of `η`. The vertex engine applies the word of vertex operators
//! indexed by the blocks of `γ` to `1` and reads off a Schur coefficient.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, LazyLock};

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::coeffs::QPoly;
use crate::error::{Error, Result};
use crate::memo::Memo;
use crate::symfunc::{multiply, Basis, SymFunc};
use crate::vertexop::apply_h_word;
use crate::weights::{
    is_vertical_strip, rho, vertical_strip_grow, vertical_strip_shrink, BlockedWeight,
    DominantWeight, Partition, Shape, Weight,
};

/// Positions `(i, j)`, 1-based, with `i <= η_1+…+η_k < j` for some cut `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootsSet {
    n: usize,
    roots: Vec<(usize, usize)>,
}

impl RootsSet {
    pub fn roots(&self) -> &[(usize, usize)] {
        &self.roots
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.roots.contains(&(i, j))
    }
}

pub fn roots_set(eta: &Shape) -> RootsSet {
    let n = eta.total();
    // block index of each position
    let block: Vec<usize> = eta
        .blocks()
        .iter()
        .enumerate()
        .flat_map(|(b, &len)| std::iter::repeat_n(b, len))
        .collect();
    let mut roots = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if block[i] < block[j] {
                roots.push((i + 1, j + 1));
            }
        }
    }
    RootsSet { n, roots }
}

/// Key of a generalized Kostka polynomial; the shape is `gamma.shape()`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KostkaKey {
    pub lambda: DominantWeight,
    pub gamma: BlockedWeight,
}

impl KostkaKey {
    pub fn new(lambda: DominantWeight, gamma: BlockedWeight) -> Result<Self> {
        let n = gamma.shape().total();
        if lambda.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                got: lambda.len(),
            });
        }
        Ok(KostkaKey { lambda, gamma })
    }

    pub fn eta(&self) -> &Shape {
        self.gamma.shape()
    }

    pub fn n(&self) -> usize {
        self.lambda.len()
    }

    pub fn shifted(&self, a: i64) -> KostkaKey {
        KostkaKey {
            lambda: self.lambda.shifted(a),
            gamma: self.gamma.shifted(a),
        }
    }

    pub fn to_json(&self) -> Value {
        let gamma: Vec<&[i64]> = self.gamma.blocks().iter().map(|b| b.entries()).collect();
        json!({
            "lambda": self.lambda.entries(),
            "gamma": gamma,
            "eta": self.eta().blocks(),
        })
    }
}

impl fmt::Display for KostkaKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "lambda={} gamma={} eta={}",
            self.lambda,
            self.gamma,
            self.eta()
        )
    }
}

static SERIES: LazyLock<Memo<(Shape, Weight), QPoly>> = LazyLock::new(Memo::new);

/// `Σ_m q^{|m|}` over `m: Roots_η → ℕ` with `Σ m(i,j)(ε_i − ε_j) = d`.
pub fn kostant_series(eta: &Shape, d: &Weight) -> Result<QPoly> {
    let n = eta.total();
    if d.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: d.len(),
        });
    }
    let mut prefix = 0;
    for &x in d.entries() {
        prefix += x;
        if prefix < 0 {
            return Ok(QPoly::zero());
        }
    }
    if prefix != 0 {
        return Ok(QPoly::zero());
    }
    let key = (eta.clone(), d.clone());
    Ok((*SERIES.get_or_insert_with(&key, || {
        let roots = roots_set(eta);
        let mut targets = vec![Vec::new(); n];
        for &(i, j) in roots.roots() {
            targets[i - 1].push(j - 1);
        }
        let mut memo = HashMap::new();
        let counts = flow(0, &vec![0; n], d.entries(), &targets, &mut memo);
        QPoly::from_terms(
            counts
                .iter()
                .enumerate()
                .filter(|(_, c)| **c != 0)
                .map(|(e, c)| (e as i64, BigInt::from(*c))),
        )
    }))
    .clone())
}

type FlowMemo = HashMap<(usize, Vec<i64>), Arc<Vec<u64>>>;

/// Counts, by total size, the ways to route the remaining flow from
/// position `l` on. `incoming[j]` is the flow already sent into `j`.
fn flow(
    l: usize,
    incoming: &[i64],
    d: &[i64],
    targets: &[Vec<usize>],
    memo: &mut FlowMemo,
) -> Arc<Vec<u64>> {
    let n = d.len();
    if l == n {
        return Arc::new(vec![1]);
    }
    let key = (l, incoming[l..].to_vec());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let out = d[l] + incoming[l];
    let mut acc: Vec<u64> = Vec::new();
    if out >= 0 && (out == 0 || !targets[l].is_empty()) {
        let mut next = incoming.to_vec();
        distribute(out, &targets[l], 0, &mut next, &mut |inc| {
            let rest = flow(l + 1, inc, d, targets, memo);
            let shift = out as usize;
            if acc.len() < rest.len() + shift {
                acc.resize(rest.len() + shift, 0);
            }
            for (e, c) in rest.iter().enumerate() {
                acc[e + shift] += c;
            }
        });
    }
    let acc = Arc::new(acc);
    memo.insert(key, acc.clone());
    acc
}

/// Calls `visit` once per way to split `amount` over `targets[idx..]`.
fn distribute(
    amount: i64,
    targets: &[usize],
    idx: usize,
    incoming: &mut Vec<i64>,
    visit: &mut dyn FnMut(&[i64]),
) {
    if idx + 1 >= targets.len() {
        if let Some(&t) = targets.get(idx) {
            incoming[t] += amount;
            visit(incoming);
            incoming[t] -= amount;
        } else if amount == 0 {
            visit(incoming);
        }
        return;
    }
    let t = targets[idx];
    for x in 0..=amount {
        incoming[t] += x;
        distribute(amount - x, targets, idx + 1, incoming, visit);
        incoming[t] -= x;
    }
}

static KOSTANT: LazyLock<Memo<KostkaKey, QPoly>> = LazyLock::new(Memo::new);
static VERTEX: LazyLock<Memo<KostkaKey, Result<QPoly>>> = LazyLock::new(Memo::new);
static WORDS: LazyLock<Memo<BlockedWeight, SymFunc>> = LazyLock::new(Memo::new);

/// Alternating sum over `S_n` of `kostant_series(η, σ(λ+ρ) − (γ+ρ))`.
pub fn kostka_kostant(key: &KostkaKey) -> QPoly {
    (*KOSTANT.get_or_insert_with(key, || {
        let n = key.n();
        let r = rho(n);
        let top: Vec<i64> = key
            .lambda
            .entries()
            .iter()
            .zip(r.entries())
            .map(|(a, b)| a + b)
            .collect();
        let bottom: Vec<i64> = key
            .gamma
            .flatten()
            .entries()
            .iter()
            .zip(r.entries())
            .map(|(a, b)| a + b)
            .collect();
        let mut total = QPoly::zero();
        let mut perm = Vec::with_capacity(n);
        let mut used = vec![false; n];
        signed_permutations(&top, &bottom, &mut perm, &mut used, 0, 0, &mut |d, sign| {
            let term = kostant_series(key.eta(), &Weight::new(d.to_vec())).expect("length n");
            total = if sign > 0 {
                &total + &term
            } else {
                &total - &term
            };
        });
        total
    }))
    .clone()
}

/// Visits `σ(top) − bottom` for every permutation whose difference has
/// nonnegative prefix sums, with the sign of `σ`.
fn signed_permutations(
    top: &[i64],
    bottom: &[i64],
    diff: &mut Vec<i64>,
    used: &mut [bool],
    prefix: i64,
    inversions: usize,
    visit: &mut dyn FnMut(&[i64], i8),
) {
    let pos = diff.len();
    if pos == top.len() {
        if prefix == 0 {
            visit(diff, if inversions.is_multiple_of(2) { 1 } else { -1 });
        }
        return;
    }
    for src in 0..top.len() {
        if used[src] {
            continue;
        }
        let d = top[src] - bottom[pos];
        if prefix + d < 0 {
            continue;
        }
        // unused sources before `src` will land later: each is an inversion
        let skipped = used[..src].iter().filter(|u| !**u).count();
        used[src] = true;
        diff.push(d);
        signed_permutations(
            top,
            bottom,
            diff,
            used,
            prefix + d,
            inversions + skipped,
            visit,
        );
        diff.pop();
        used[src] = false;
    }
}

/// Smallest `a >= 0` making every entry of `λ + a` and `γ + a` nonnegative.
fn nonnegative_shift(key: &KostkaKey) -> i64 {
    let low = key
        .lambda
        .entries()
        .iter()
        .chain(key.gamma.flatten().entries())
        .copied()
        .min()
        .unwrap_or(0);
    (-low).max(0)
}

/// `H_{γ(1)} ⋯ H_{γ(t)} 1` for partition blocks, cached.
pub fn h_word_on_one(gamma: &BlockedWeight) -> Arc<SymFunc> {
    WORDS.get_or_insert_with(gamma, || apply_h_word(gamma, &SymFunc::one()))
}

/// Coefficient of `s_{λ+a}` in `H_{γ+a} 1`, with `a` shifting everything to
/// nonnegative entries.
pub fn kostka_vertex(key: &KostkaKey) -> Result<QPoly> {
    (*VERTEX.get_or_insert_with(key, || {
        if key.lambda.size() != key.gamma.size() {
            return Ok(QPoly::zero());
        }
        let shifted = key.shifted(nonnegative_shift(key));
        let lambda = shifted
            .lambda
            .to_partition()
            .expect("shifted to nonnegative");
        let word = h_word_on_one(&shifted.gamma);
        let c = word.coeff(&lambda);
        c.as_integral_polynomial()
            .cloned()
            .ok_or_else(|| Error::NonIntegral(format!("{c} at {key}")))
    }))
    .clone()
}

/// Both engines; a mismatch is an error carrying the key.
pub fn kostka_both(key: &KostkaKey) -> Result<QPoly> {
    let a = kostka_kostant(key);
    let b = kostka_vertex(key)?;
    if a != b {
        return Err(Error::EngineDisagreement {
            key: key.to_string(),
            kostant: a.to_string(),
            vertex: b.to_string(),
        });
    }
    Ok(a)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Kostant,
    Vertex,
    Both,
}

pub fn kostka(key: &KostkaKey, method: Method) -> Result<QPoly> {
    match method {
        Method::Kostant => Ok(kostka_kostant(key)),
        Method::Vertex => kostka_vertex(key),
        Method::Both => kostka_both(key),
    }
}

/// The Kostka–Foulkes polynomial `K_{λμ}(q)`: all blocks of size one.
pub fn kostka_foulkes(lambda: &Partition, mu: &Partition) -> Result<QPoly> {
    if lambda.size() != mu.size() {
        return Err(Error::InvalidArgument(format!(
            "sizes differ: |{lambda}| != |{mu}|"
        )));
    }
    let n = lambda.len().max(mu.len());
    let l = lambda.to_dominant(n).expect("fits");
    let m = mu.to_dominant(n).expect("fits");
    let key = KostkaKey::new(l, BlockedWeight::split(&Shape::singletons(n), m.weight())?)?;
    Ok(kostka_kostant(&key))
}

/// One row of a [`KostkaTable`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KostkaEntry {
    pub key: KostkaKey,
    pub value: QPoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KostkaTable {
    pub eta: Shape,
    pub max_degree: u32,
    pub entries: Vec<KostkaEntry>,
    /// Keys whose value has a negative coefficient.
    pub warnings: Vec<String>,
}

impl KostkaTable {
    pub fn nonzero(&self) -> impl Iterator<Item = &KostkaEntry> {
        self.entries.iter().filter(|e| !e.value.is_zero())
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .nonzero()
            .map(|e| {
                let mut row = e.key.to_json();
                row["K"] = e.value.to_json();
                row
            })
            .collect();
        json!({ "eta": self.eta.blocks(), "max_degree": self.max_degree, "rows": rows, "warnings": self.warnings })
    }
}

/// Blocked weights on `eta` whose blocks are partitions, with total size `n`.
pub fn partition_blocks(eta: &Shape, n: u32) -> Vec<BlockedWeight> {
    fn rec(
        blocks: &[usize],
        left: u32,
        cur: &mut Vec<DominantWeight>,
        out: &mut Vec<BlockedWeight>,
    ) {
        match blocks.split_first() {
            None => {
                if left == 0 {
                    out.push(BlockedWeight::new(cur.clone()).expect("nonempty blocks"));
                }
            }
            Some((&len, rest)) => {
                for size in 0..=left {
                    for p in Partition::with_max_len(size, len) {
                        cur.push(p.to_dominant(len).expect("fits"));
                        rec(rest, left - size, cur, out);
                        cur.pop();
                    }
                }
            }
        }
    }
    let mut out = Vec::new();
    rec(eta.blocks(), n, &mut Vec::new(), &mut out);
    out
}

/// All keys on `eta` with nonnegative entries and `|λ| = |γ| = d`.
pub fn keys_of_degree(eta: &Shape, d: u32) -> Vec<KostkaKey> {
    let n = eta.total();
    let lambdas = Partition::with_max_len(d, n);
    let gammas = partition_blocks(eta, d);
    let mut keys = Vec::new();
    for g in &gammas {
        for l in &lambdas {
            keys.push(KostkaKey {
                lambda: l.to_dominant(n).expect("fits"),
                gamma: g.clone(),
            });
        }
    }
    keys
}

/// Every key with nonnegative entries and `|λ| = |γ| <= max_degree`, computed
/// with `method` in parallel.
pub fn kostka_table(eta: &Shape, max_degree: u32, method: Method) -> Result<KostkaTable> {
    let keys: Vec<KostkaKey> = (0..=max_degree)
        .flat_map(|d| keys_of_degree(eta, d))
        .collect();
    let values: Vec<Result<QPoly>> = keys.par_iter().map(|k| kostka(k, method)).collect();
    let mut entries = Vec::with_capacity(keys.len());
    let mut warnings = Vec::new();
    for (key, value) in keys.into_iter().zip(values) {
        let value = value?;
        if value.terms().any(|(_, c)| c < &BigInt::zero()) {
            warnings.push(format!("negative coefficient at {key}: {value}"));
        }
        entries.push(KostkaEntry { key, value });
    }
    Ok(KostkaTable {
        eta: eta.clone(),
        max_degree,
        entries,
        warnings,
    })
}

/// Both sides of the column-skew recurrence:
/// `Σ_ν K_{α,ν,η}` over `γ(i)/ν(i)` vertical strips, and
/// `Σ_λ K_{λ,γ,η}` over `λ/α` vertical strips of size `k`.
pub fn col_skew_sides(
    alpha: &DominantWeight,
    gamma: &BlockedWeight,
    k: u32,
) -> Result<(QPoly, QPoly)> {
    let n = gamma.shape().total();
    if alpha.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: alpha.len(),
        });
    }
    if gamma.size() - alpha.size() != i64::from(k) {
        return Err(Error::InvalidArgument(format!(
            "|{gamma}| - |{alpha}| is not {k}"
        )));
    }
    let mut left = QPoly::zero();
    let choices: Vec<Vec<DominantWeight>> =
        gamma.blocks().iter().map(vertical_strip_shrink).collect();
    let mut idx = vec![0usize; choices.len()];
    'outer: loop {
        let blocks: Vec<DominantWeight> = idx
            .iter()
            .zip(&choices)
            .map(|(&i, c)| c[i].clone())
            .collect();
        let nu = BlockedWeight::new(blocks)?;
        if nu.size() == alpha.size() {
            left = &left + &kostka_kostant(&KostkaKey::new(alpha.clone(), nu)?);
        }
        for pos in (0..idx.len()).rev() {
            idx[pos] += 1;
            if idx[pos] < choices[pos].len() {
                continue 'outer;
            }
            idx[pos] = 0;
        }
        break;
    }
    let mut right = QPoly::zero();
    for lambda in vertical_strip_grow(alpha) {
        debug_assert!(is_vertical_strip(&lambda, alpha)?);
        if lambda.size() - alpha.size() == i64::from(k) {
            right = &right + &kostka_kostant(&KostkaKey::new(lambda, gamma.clone())?);
        }
    }
    Ok((left, right))
}

pub fn check_col_skew(alpha: &DominantWeight, gamma: &BlockedWeight, k: u32) -> Result<bool> {
    let (l, r) = col_skew_sides(alpha, gamma, k)?;
    Ok(l == r)
}

/// `s_{γ(1)} ⋯ s_{γ(t)}` for partition blocks.
pub fn schur_block_product(gamma: &BlockedWeight) -> Option<SymFunc> {
    let mut acc = SymFunc::one();
    for b in gamma.blocks() {
        acc = multiply(&acc, &SymFunc::schur(b.to_partition()?));
    }
    Some(acc.to_basis(Basis::Schur))
}

#[cfg(test)]
mod tests;
