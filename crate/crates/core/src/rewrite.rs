//! Formal `Z[q]`-combinations of two-factor operator words `H_μ H_ν`, the
//! commutation relations between them, and three rewriting procedures:
//! making every concatenated index dominant, moving one part across the
//! factor boundary, and swapping factor lengths.
//!
//! Rewriting is purely formal. [`evaluate`] and [`is_zero_operator`] apply
//! the words to Schur functions so results can be certified independently.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::coeffs::QRat;
use crate::error::{Error, Result};
use crate::symfunc::{coeff_prefix, Basis, SymFunc};
use crate::vertexop::apply_h_factors;
use crate::weights::{
    parse_ints_at, straighten, vertical_strip_grow, vertical_strip_shrink, DominantWeight,
    Partition, Straightened, Weight,
};

/// A composite `H_{v1} H_{v2} ⋯`, leftmost factor applied last.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct OpWord {
    factors: Vec<Weight>,
}

impl OpWord {
    pub fn new(factors: Vec<Weight>) -> Self {
        OpWord { factors }
    }

    pub fn pair(left: Weight, right: Weight) -> Self {
        OpWord::new(vec![left, right])
    }

    pub fn factors(&self) -> &[Weight] {
        &self.factors
    }

    /// Factor lengths.
    pub fn lengths(&self) -> Vec<usize> {
        self.factors.iter().map(Weight::len).collect()
    }

    fn two(&self) -> Result<(&Weight, &Weight)> {
        match self.factors.as_slice() {
            [l, r] => Ok((l, r)),
            _ => Err(Error::InvalidArgument(format!(
                "expected a two-factor word, got {self}"
            ))),
        }
    }

    /// Whether the concatenation of all factors is weakly decreasing.
    pub fn is_dominant(&self) -> bool {
        let flat: Vec<i64> = self
            .factors
            .iter()
            .flat_map(|f| f.entries().iter().copied())
            .collect();
        flat.windows(2).all(|w| w[0] >= w[1])
    }

    /// Whether every factor is dominant on its own.
    pub fn is_blockwise_dominant(&self) -> bool {
        self.factors.iter().all(Weight::is_dominant)
    }

    pub fn to_json(&self) -> Value {
        let f: Vec<&[i64]> = self.factors.iter().map(|w| w.entries()).collect();
        json!(f)
    }
}

/// `H[2,2]H[4,1]`.
impl fmt::Display for OpWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for w in &self.factors {
            write!(f, "H[{w}]")?;
        }
        Ok(())
    }
}

/// Parses `H[2,2]H[4,1]`; whitespace between factors is ignored.
pub fn parse_word(s: &str) -> Result<OpWord> {
    let bytes = s.as_bytes();
    let mut i = 0;
    let mut factors = Vec::new();
    loop {
        while i < bytes.len() && bytes[i].is_ascii_whitespace() {
            i += 1;
        }
        if i == bytes.len() {
            break;
        }
        if bytes[i] != b'H' {
            return Err(Error::parse(i, "expected 'H'"));
        }
        if bytes.get(i + 1) != Some(&b'[') {
            return Err(Error::parse(i + 1, "expected '['"));
        }
        let start = i + 2;
        let Some(len) = s[start..].find(']') else {
            return Err(Error::parse(s.len(), "missing ']'"));
        };
        let inner = &s[start..start + len];
        factors.push(Weight::new(parse_ints_at(inner, start)?));
        i = start + len + 1;
    }
    if factors.is_empty() {
        return Err(Error::parse(0, "empty word"));
    }
    Ok(OpWord::new(factors))
}

/// A finite `Q(q)`-combination of words with every factor straightened.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct OpSum {
    terms: BTreeMap<OpWord, QRat>,
}

impl OpSum {
    pub fn zero() -> Self {
        OpSum::default()
    }

    /// A single word with coefficient 1, normalized.
    pub fn word(w: OpWord) -> Self {
        normalize([(w, QRat::one())])
    }

    pub fn terms(&self) -> &BTreeMap<OpWord, QRat> {
        &self.terms
    }

    pub fn coeff(&self, w: &OpWord) -> QRat {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c · w` for a word that is already normalized.
    fn add_normal(&mut self, w: OpWord, c: &QRat) {
        if c.is_zero() {
            return;
        }
        let sum = &self.coeff(&w) + c;
        if sum.is_zero() {
            self.terms.remove(&w);
        } else {
            self.terms.insert(w, sum);
        }
    }

    pub fn add_scaled(&mut self, other: &OpSum, c: &QRat) {
        for (w, v) in &other.terms {
            self.add_normal(w.clone(), &(v * c));
        }
    }

    pub fn scale(&self, c: &QRat) -> OpSum {
        let mut out = OpSum::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn sub(&self, other: &OpSum) -> OpSum {
        let mut out = self.clone();
        out.add_scaled(other, &QRat::from(-1i64));
        out
    }

    /// Whether every coefficient is a polynomial in `q` with integer
    /// coefficients.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(QRat::is_integral_polynomial)
    }

    fn ensure_integral(self) -> Result<OpSum> {
        match self.terms.iter().find(|(_, c)| !c.is_integral_polynomial()) {
            Some((w, c)) => Err(Error::NonIntegral(format!("{c} at {w}"))),
            None => Ok(self),
        }
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(w, c)| {
                let coeff = match c.as_integral_polynomial() {
                    Some(p) => p.to_json(),
                    None => c.to_json(),
                };
                json!({ "word": w.to_json(), "coeff": coeff })
            })
            .collect();
        json!({ "terms": terms })
    }
}

impl fmt::Debug for OpSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `(q^2-q) * H[3,3]H[3,0] - q^3 * H[4,3]H[1,1]`; the empty sum is `0`.
impl fmt::Display for OpSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let (neg, prefix) = coeff_prefix(c);
            if neg {
                write!(f, "{}", if i == 0 { "-" } else { " - " })?;
            } else if i > 0 {
                write!(f, " + ")?;
            }
            match prefix.strip_suffix('*') {
                Some(p) => write!(f, "{p} * {w}")?,
                None => write!(f, "{w}")?,
            }
        }
        Ok(())
    }
}

/// Straightens every factor, folds signs into coefficients, drops words
/// with a vanishing factor, and combines like terms.
pub fn normalize(raw: impl IntoIterator<Item = (OpWord, QRat)>) -> OpSum {
    let mut out = OpSum::zero();
    'words: for (w, c) in raw {
        let mut sign = 1i64;
        let mut factors = Vec::with_capacity(w.factors.len());
        for v in &w.factors {
            match straighten(v) {
                Straightened::Zero => continue 'words,
                Straightened::Signed { sign: s, weight } => {
                    sign *= i64::from(s);
                    factors.push(weight.into());
                }
            }
        }
        out.add_normal(OpWord::new(factors), &c.scale_int(sign));
    }
    out
}

/// `(-q)^e`.
fn neg_q_power(e: i64) -> QRat {
    QRat::monomial(if e % 2 == 0 { 1 } else { -1 }, e)
}

fn cat(a: &[i64], b: &[i64]) -> Weight {
    Weight::new(a.iter().chain(b).copied().collect())
}

fn with_last(a: &[i64], x: i64) -> Weight {
    cat(a, &[x])
}

fn with_first(x: i64, b: &[i64]) -> Weight {
    cat(&[x], b)
}

fn dominant(w: &Weight, what: &str) -> Result<DominantWeight> {
    DominantWeight::new(w.entries().to_vec()).map_err(|_| Error::NotDominant(format!("{what} {w}")))
}

/// Parameters of a commutation relation between two-factor words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Relation {
    /// `μ ∈ DIW^k`, `a`, `b`, `ν ∈ DIW^n`.
    Com1 {
        mu: DominantWeight,
        a: i64,
        b: i64,
        nu: DominantWeight,
    },
    /// The `b = a + 1` case of [`Relation::Com1`].
    Com2 {
        mu: DominantWeight,
        a: i64,
        nu: DominantWeight,
    },
    /// Moves one part of the left factor into the right one.
    Move {
        mu: DominantWeight,
        a: i64,
        nu: DominantWeight,
    },
    /// Left word `H_(α,β) H_γ` with `len α = len γ`.
    BigMove {
        alpha: Weight,
        beta: Weight,
        gamma: Weight,
    },
}

/// Both sides of a relation, each normalized.
pub fn relation_sides(rel: &Relation) -> Result<(OpSum, OpSum)> {
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    match rel {
        Relation::Com1 { mu, a, b, nu } => {
            let (a, b) = (*a, *b);
            for alpha in vertical_strip_grow(mu) {
                let da = alpha.size() - mu.size();
                for beta in vertical_strip_shrink(nu) {
                    let db = nu.size() - beta.size();
                    let c = neg_q_power(da + db);
                    let (al, be) = (alpha.entries(), beta.entries());
                    let qc = &c * &QRat::q();
                    let w = |x: i64, y: i64| OpWord::pair(with_last(al, x), with_first(y, be));
                    lhs.push((w(a + db, b - da), c.clone()));
                    lhs.push((w(a + db + 1, b - da - 1), -&qc));
                    rhs.push((w(b + db, a - da), qc));
                    rhs.push((w(b + db - 1, a - da + 1), -&c));
                }
            }
        }
        Relation::Com2 { mu, a, nu } => {
            let a = *a;
            for alpha in vertical_strip_grow(mu) {
                let da = alpha.size() - mu.size();
                for beta in vertical_strip_shrink(nu) {
                    let db = nu.size() - beta.size();
                    let c = neg_q_power(da + db);
                    let (al, be) = (alpha.entries(), beta.entries());
                    let w = |x: i64, y: i64| OpWord::pair(with_last(al, x), with_first(y, be));
                    lhs.push((w(a + db, a + 1 - da), c.clone()));
                    rhs.push((w(a + db + 1, a - da), &c * &QRat::q()));
                }
            }
        }
        Relation::Move { mu, a, nu } => {
            let a = *a;
            for beta in vertical_strip_shrink(nu) {
                let db = nu.size() - beta.size();
                let w = OpWord::pair(with_last(mu.entries(), a + db), beta.into());
                lhs.push((w, neg_q_power(db)));
            }
            for alpha in vertical_strip_grow(mu) {
                let da = alpha.size() - mu.size();
                let w = OpWord::pair(alpha.into(), with_first(a - da, nu.entries()));
                rhs.push((w, neg_q_power(da)));
            }
        }
        Relation::BigMove { alpha, beta, gamma } => {
            let (k, l) = (alpha.len(), beta.len());
            if gamma.len() != k {
                return Err(Error::LengthMismatch {
                    expected: k,
                    got: gamma.len(),
                });
            }
            if k * l > 20 {
                return Err(Error::InvalidArgument(format!(
                    "block sizes {k} x {l} are too large to expand"
                )));
            }
            // subsets of a k-by-l grid; only row and column counts matter
            for mask in 0u32..(1 << (k * l)) {
                let mut rows = vec![0i64; l];
                let mut cols = vec![0i64; k];
                for (i, col) in cols.iter_mut().enumerate() {
                    for (j, row) in rows.iter_mut().enumerate() {
                        if mask & (1 << (i * l + j)) != 0 {
                            *row += 1;
                            *col += 1;
                        }
                    }
                }
                let c = neg_q_power(i64::from(mask.count_ones()));
                let add = |v: &Weight, d: &[i64], s: i64| -> Vec<i64> {
                    v.entries().iter().zip(d).map(|(x, y)| x + s * y).collect()
                };
                lhs.push((
                    OpWord::pair(
                        cat(alpha.entries(), &add(beta, &rows, 1)),
                        Weight::new(add(gamma, &cols, -1)),
                    ),
                    c.clone(),
                ));
                rhs.push((
                    OpWord::pair(
                        Weight::new(add(alpha, &cols, 1)),
                        cat(&add(beta, &rows, -1), gamma.entries()),
                    ),
                    c,
                ));
            }
        }
    }
    Ok((normalize(lhs), normalize(rhs)))
}

/// `LHS − RHS` of a relation; this is the zero operator.
pub fn relation_instance(rel: &Relation) -> Result<OpSum> {
    let (l, r) = relation_sides(rel)?;
    Ok(l.sub(&r))
}

fn rect(a: i64, k: usize) -> Weight {
    Weight::new(vec![a; k])
}

/// `H_{(a^n)} H_{(a^k)} − H_{(a^k)} H_{(a^n)}`.
pub fn same_width_identity(a: i64, k: usize, n: usize) -> OpSum {
    normalize([
        (OpWord::pair(rect(a, n), rect(a, k)), QRat::one()),
        (OpWord::pair(rect(a, k), rect(a, n)), QRat::from(-1i64)),
    ])
}

/// `H_{(a^k)} H_{((a+1)^k)} − q^k H_{((a+1)^k)} H_{(a^k)}`.
pub fn one_more_identity(a: i64, k: usize) -> OpSum {
    normalize([
        (OpWord::pair(rect(a, k), rect(a + 1, k)), QRat::one()),
        (
            OpWord::pair(rect(a + 1, k), rect(a, k)),
            QRat::monomial(-1, k as i64),
        ),
    ])
}

/// `H_{(a^k)} H_{(a^k)} − H_{(a^{k+1})} H_{(a^{k-1})} − q^k H_{((a+1)^k)} H_{((a-1)^k)}`.
pub fn quad_identity(a: i64, k: usize) -> OpSum {
    normalize([
        (OpWord::pair(rect(a, k), rect(a, k)), QRat::one()),
        (
            OpWord::pair(rect(a, k + 1), rect(a, k.saturating_sub(1))),
            QRat::from(-1i64),
        ),
        (
            OpWord::pair(rect(a + 1, k), rect(a - 1, k)),
            QRat::monomial(-1, k as i64),
        ),
    ])
}

/// Upper bound on relation applications in one rewriting run.
const MAX_STEPS: usize = 100_000;

/// Replaces `target` in `sum` using a relation `rel = 0` in which `target`
/// appears with coefficient 1.
fn eliminate(sum: &mut OpSum, target: &OpWord, rel: &OpSum) -> Result<()> {
    let own = rel.coeff(target);
    if !own.is_one() {
        return Err(Error::Termination(format!(
            "{target} has coefficient {own} in its own relation"
        )));
    }
    let c = sum.coeff(target);
    sum.add_scaled(rel, &-&c);
    Ok(())
}

/// Worklist driver: repeatedly picks the pending word with the largest
/// `measure` and eliminates it with `relation_for`. Every pending word the
/// relation introduces must have a strictly smaller measure.
fn run_worklist(
    start: OpSum,
    pending: impl Fn(&OpWord) -> bool,
    measure: impl Fn(&OpWord) -> i64,
    relation_for: impl Fn(&OpWord) -> Result<OpSum>,
) -> Result<OpSum> {
    let mut sum = start;
    for _ in 0..MAX_STEPS {
        let next = sum
            .terms
            .keys()
            .filter(|w| pending(w))
            .max_by_key(|w| (measure(w), std::cmp::Reverse((*w).clone())))
            .cloned();
        let Some(w) = next else {
            return sum.ensure_integral();
        };
        let m = measure(&w);
        let rel = relation_for(&w)?;
        if let Some(bad) = rel
            .terms
            .keys()
            .find(|v| *v != &w && pending(v) && measure(v) >= m)
        {
            return Err(Error::Termination(format!(
                "eliminating {w} (measure {m}) introduced {bad} (measure {})",
                measure(bad)
            )));
        }
        eliminate(&mut sum, &w, &rel)?;
    }
    Err(Error::Termination(format!("more than {MAX_STEPS} steps")))
}

/// Rewrites a two-factor word so that every term's concatenated index is
/// dominant. Factors of the input must be dominant.
pub fn rewrite_dominant(word: &OpWord) -> Result<OpSum> {
    let (l, r) = word.two()?;
    dominant(l, "left factor")?;
    dominant(r, "right factor")?;
    if l.is_empty() || r.is_empty() {
        return Ok(OpSum::word(word.clone()));
    }
    let (k, n) = (l.len(), r.len());
    let measure = |w: &OpWord| {
        let (l, r) = (&w.factors[0], &w.factors[1]);
        r.entries()[0] - l.entries()[l.len() - 1]
    };
    run_worklist(
        OpSum::word(word.clone()),
        |w| !w.is_dominant(),
        measure,
        |w| {
            let (l, r) = (&w.factors[0], &w.factors[1]);
            debug_assert_eq!((l.len(), r.len()), (k, n));
            let mu = dominant(&Weight::new(l.entries()[..k - 1].to_vec()), "prefix")?;
            let nu = dominant(&Weight::new(r.entries()[1..].to_vec()), "suffix")?;
            let a = l.entries()[k - 1];
            let b = r.entries()[0];
            let rel = if b == a + 1 {
                Relation::Com2 { mu, a, nu }
            } else {
                Relation::Com1 { mu, a, b, nu }
            };
            relation_instance(&rel)
        },
    )
}

/// Which factor gives up a part in [`shift_support`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShiftDirection {
    /// Lengths `(k, n)` become `(k-1, n+1)`; needs `k > n`.
    LeftToRight,
    /// Lengths `(n, k)` become `(n+1, k-1)`; needs `k > n`.
    RightToLeft,
}

/// Rewrites a two-factor word into words whose factor lengths differ by
/// one part moved across the boundary.
pub fn shift_support(word: &OpWord, direction: ShiftDirection) -> Result<OpSum> {
    let (l, r) = word.two()?;
    dominant(l, "left factor")?;
    dominant(r, "right factor")?;
    let (k, n) = (l.len(), r.len());
    match direction {
        ShiftDirection::LeftToRight => {
            if k <= n {
                return Err(Error::InvalidArgument(format!(
                    "left factor of {word} must be longer than the right"
                )));
            }
            // first minus last entry of the left factor
            let measure = |w: &OpWord| {
                let l = w.factors[0].entries();
                l[0] - l[l.len() - 1]
            };
            run_worklist(
                OpSum::word(word.clone()),
                |w| w.factors[0].len() == k,
                measure,
                |w| {
                    let l = w.factors[0].entries();
                    let mu = dominant(&Weight::new(l[..k - 1].to_vec()), "prefix")?;
                    let nu = dominant(&w.factors[1], "right factor")?;
                    relation_instance(&Relation::Move {
                        mu,
                        a: l[k - 1],
                        nu,
                    })
                },
            )
        }
        ShiftDirection::RightToLeft => {
            if n <= k {
                return Err(Error::InvalidArgument(format!(
                    "right factor of {word} must be longer than the left"
                )));
            }
            let measure = |w: &OpWord| {
                let r = w.factors[1].entries();
                r[0] - r[r.len() - 1]
            };
            run_worklist(
                OpSum::word(word.clone()),
                |w| w.factors[1].len() == n,
                measure,
                |w| {
                    let r = w.factors[1].entries();
                    let mu = dominant(&w.factors[0], "left factor")?;
                    let nu = dominant(&Weight::new(r[1..].to_vec()), "suffix")?;
                    // the target sits on the right-hand side
                    let rel = relation_instance(&Relation::Move { mu, a: r[0], nu })?;
                    Ok(rel.scale(&QRat::from(-1i64)))
                },
            )
        }
    }
}

/// Rewrites `H_ρ H_γ` with factor lengths `(p, m)` into words with lengths
/// `(m, p)`. Equal lengths return the word unchanged.
pub fn swap_factors(word: &OpWord) -> Result<OpSum> {
    let (l, r) = word.two()?;
    dominant(l, "left factor")?;
    dominant(r, "right factor")?;
    let (p, m) = (l.len(), r.len());
    if p == m {
        return Ok(OpSum::word(word.clone()));
    }
    if m == 0 || p == 0 {
        // an empty factor is the identity
        return Ok(OpSum::word(OpWord::pair(r.clone(), l.clone())));
    }
    if p > m {
        // left = (α, β) with len α = len γ = m; the left sum strictly grows
        let k = m;
        run_worklist(
            OpSum::word(word.clone()),
            |w| w.factors[0].len() == p,
            |w| -w.factors[0].size(),
            |w| {
                let left = w.factors[0].entries();
                relation_instance(&Relation::BigMove {
                    alpha: Weight::new(left[..k].to_vec()),
                    beta: Weight::new(left[k..].to_vec()),
                    gamma: w.factors[1].clone(),
                })
            },
        )
    } else {
        // right = (β, γ) with len γ = len α = p; the right sum strictly shrinks
        let k = p;
        let l_len = m - p;
        run_worklist(
            OpSum::word(word.clone()),
            |w| w.factors[1].len() == m,
            |w| w.factors[1].size(),
            |w| {
                let right = w.factors[1].entries();
                let rel = relation_instance(&Relation::BigMove {
                    alpha: w.factors[0].clone(),
                    beta: Weight::new(right[..l_len].to_vec()),
                    gamma: Weight::new(right[l_len..].to_vec()),
                })?;
                debug_assert_eq!(right.len() - l_len, k);
                // the target sits on the right-hand side
                Ok(rel.scale(&QRat::from(-1i64)))
            },
        )
    }
}

/// `Σ c · (word applied to f)`.
pub fn evaluate(sum: &OpSum, f: &SymFunc) -> SymFunc {
    let mut out = SymFunc::zero(Basis::Schur);
    for (w, c) in &sum.terms {
        out.add_scaled(&apply_h_factors(&w.factors, f), c);
    }
    out
}

/// Whether `sum` kills every `s_τ` with `|τ| <= max_degree`.
pub fn is_zero_operator(sum: &OpSum, max_degree: u32) -> bool {
    first_nonzero_witness(sum, max_degree).is_none()
}

/// Some `τ` with `|τ| <= max_degree` and `sum(s_τ) != 0`, if any.
pub fn first_nonzero_witness(sum: &OpSum, max_degree: u32) -> Option<Partition> {
    let taus: Vec<Partition> = (0..=max_degree).flat_map(Partition::all).collect();
    taus.into_par_iter()
        .find_first(|tau| !evaluate(sum, &SymFunc::schur(tau.clone())).is_zero())
}

/// Whether two sums agree on every `s_τ` with `|τ| <= max_degree`.
pub fn evaluation_equal(a: &OpSum, b: &OpSum, max_degree: u32) -> bool {
    is_zero_operator(&a.sub(b), max_degree)
}

#[cfg(test)]
mod tests;
