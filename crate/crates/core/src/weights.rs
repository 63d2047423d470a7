//! Integer-vector combinatorics: weights, dominant weights, partitions,
//! block shapes, ρ-shifted straightening and vertical strips.

use std::fmt;

use crate::error::{Error, Result};

/// A vector in `Z^k`. The empty weight (`k = 0`) is legal and indexes the
/// identity operator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(entries: Vec<i64>) -> Self {
        Weight(entries)
    }

    pub fn empty() -> Self {
        Weight(Vec::new())
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<i64> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// Adds `a` to every entry.
    pub fn shifted(&self, a: i64) -> Weight {
        Weight(self.0.iter().map(|x| x + a).collect())
    }

    pub fn concat(&self, other: &Weight) -> Weight {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Weight(v)
    }
}

impl From<Vec<i64>> for Weight {
    fn from(v: Vec<i64>) -> Self {
        Weight(v)
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Comma-separated entries, e.g. `2,-1`; the empty weight renders empty.
impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// A weakly decreasing integer vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DominantWeight(Weight);

impl DominantWeight {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        DominantWeight::try_from(Weight(entries))
    }

    pub fn empty() -> Self {
        DominantWeight(Weight::empty())
    }

    /// `(a, a, …, a)` of length `k`.
    pub fn rectangle(a: i64, k: usize) -> Self {
        DominantWeight(Weight(vec![a; k]))
    }

    pub fn weight(&self) -> &Weight {
        &self.0
    }

    pub fn entries(&self) -> &[i64] {
        &self.0 .0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> i64 {
        self.0.size()
    }

    pub fn shifted(&self, a: i64) -> DominantWeight {
        DominantWeight(self.0.shifted(a))
    }

    pub fn min_entry(&self) -> Option<i64> {
        self.entries().last().copied()
    }

    /// The partition with the same entries, if all entries are nonnegative.
    pub fn to_partition(&self) -> Option<Partition> {
        if self.min_entry().unwrap_or(0) < 0 {
            return None;
        }
        Some(Partition::from_sorted(
            self.entries().iter().map(|&x| x as u32).collect(),
        ))
    }
}

impl TryFrom<Weight> for DominantWeight {
    type Error = Error;
    fn try_from(w: Weight) -> Result<Self> {
        if w.is_dominant() {
            Ok(DominantWeight(w))
        } else {
            Err(Error::NotDominant(w.to_string()))
        }
    }
}

impl From<DominantWeight> for Weight {
    fn from(d: DominantWeight) -> Weight {
        d.0
    }
}

impl fmt::Debug for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0)
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// An integer partition. Stored without trailing zeros, so equality is
/// equality modulo trailing zeros; [`Partition::padded`] gives the length-`k`
/// view.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition::from_sorted(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub(crate) fn from_sorted(mut parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Length-`k` view with trailing zeros; `None` if there are more than `k` parts.
    pub fn padded(&self, k: usize) -> Option<Vec<u32>> {
        if self.len() > k {
            return None;
        }
        let mut v = self.0.clone();
        v.resize(k, 0);
        Some(v)
    }

    pub fn to_dominant(&self, k: usize) -> Option<DominantWeight> {
        self.padded(k)
            .map(|v| DominantWeight(Weight(v.into_iter().map(i64::from).collect())))
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn conjugate(&self) -> Partition {
        let w = self.part(0) as usize;
        Partition(
            (0..w)
                .map(|j| self.0.iter().filter(|&&p| p as usize > j).count() as u32)
                .collect(),
        )
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all(n: u32) -> Vec<Partition> {
        Partition::bounded(n, usize::MAX, n)
    }

    /// Partitions of `n` with at most `max_len` parts.
    pub fn with_max_len(n: u32, max_len: usize) -> Vec<Partition> {
        Partition::bounded(n, max_len, n)
    }

    /// Partitions of `n` with at most `max_len` parts, each at most `max_part`.
    pub fn bounded(n: u32, max_len: usize, max_part: u32) -> Vec<Partition> {
        fn rec(
            n: u32,
            max_len: usize,
            max_part: u32,
            cur: &mut Vec<u32>,
            out: &mut Vec<Partition>,
        ) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if max_len == 0 {
                return;
            }
            for p in (1..=max_part.min(n)).rev() {
                cur.push(p);
                rec(n - p, max_len - 1, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, max_len, max_part, &mut Vec::new(), &mut out);
        out
    }

    /// Partitions of every size `0..=n` with at most `max_len` parts.
    pub fn up_to(n: u32, max_len: usize) -> Vec<Partition> {
        (0..=n)
            .flat_map(|m| Partition::with_max_len(m, max_len))
            .collect()
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

/// Block sizes `(η_1, …, η_t)`, all positive.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Shape(Vec<usize>);

impl Shape {
    pub fn new(eta: Vec<usize>) -> Result<Self> {
        if eta.contains(&0) {
            return Err(Error::InvalidArgument(format!(
                "shape {eta:?} has a zero block"
            )));
        }
        Ok(Shape(eta))
    }

    /// `(1^n)`.
    pub fn singletons(n: usize) -> Self {
        Shape(vec![1; n])
    }

    pub fn blocks(&self) -> &[usize] {
        &self.0
    }

    /// Total size `n`.
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// All compositions of `n` (shapes with total `n`).
    pub fn compositions(n: usize) -> Vec<Shape> {
        if n == 0 {
            return vec![Shape(Vec::new())];
        }
        let mut out = Vec::new();
        for first in 1..=n {
            for rest in Shape::compositions(n - first) {
                let mut v = vec![first];
                v.extend(rest.0);
                out.push(Shape(v));
            }
        }
        out
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

/// A concatenation of dominant blocks whose lengths follow a [`Shape`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct BlockedWeight {
    shape: Shape,
    blocks: Vec<DominantWeight>,
}

impl BlockedWeight {
    pub fn new(blocks: Vec<DominantWeight>) -> Result<Self> {
        let shape = Shape::new(blocks.iter().map(DominantWeight::len).collect())?;
        Ok(BlockedWeight { shape, blocks })
    }

    /// Splits a flat weight according to `shape`; every block must be dominant.
    pub fn split(shape: &Shape, flat: &Weight) -> Result<Self> {
        if flat.len() != shape.total() {
            return Err(Error::LengthMismatch {
                expected: shape.total(),
                got: flat.len(),
            });
        }
        let mut blocks = Vec::with_capacity(shape.blocks().len());
        let mut at = 0;
        for &len in shape.blocks() {
            blocks.push(DominantWeight::new(flat.entries()[at..at + len].to_vec())?);
            at += len;
        }
        Ok(BlockedWeight {
            shape: shape.clone(),
            blocks,
        })
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn blocks(&self) -> &[DominantWeight] {
        &self.blocks
    }

    pub fn flatten(&self) -> Weight {
        Weight(
            self.blocks
                .iter()
                .flat_map(|b| b.entries().iter().copied())
                .collect(),
        )
    }

    pub fn size(&self) -> i64 {
        self.blocks.iter().map(DominantWeight::size).sum()
    }

    pub fn shifted(&self, a: i64) -> BlockedWeight {
        BlockedWeight {
            shape: self.shape.clone(),
            blocks: self.blocks.iter().map(|b| b.shifted(a)).collect(),
        }
    }
}

/// Blocks separated by `;`, e.g. `2,2;4,1`.
impl fmt::Display for BlockedWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.blocks.iter().map(|b| b.to_string()).collect();
        write!(f, "{}", s.join(";"))
    }
}

/// `(k-1, k-2, …, 0)`.
pub fn rho(k: usize) -> Weight {
    Weight((0..k as i64).rev().collect())
}

/// Result of ρ-shifted straightening.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Straightened {
    /// `v + ρ` has a repeated entry.
    Zero,
    Signed {
        sign: i8,
        weight: DominantWeight,
    },
}

impl Straightened {
    pub fn is_zero(&self) -> bool {
        matches!(self, Straightened::Zero)
    }
}

/// Sorts `v + ρ` into strictly decreasing order and subtracts `ρ` again,
/// tracking the sign of the sorting permutation.
pub fn straighten(v: &Weight) -> Straightened {
    let k = v.len();
    let mut shifted: Vec<i64> = v
        .entries()
        .iter()
        .enumerate()
        .map(|(i, x)| x + (k - 1 - i) as i64)
        .collect();
    // insertion sort, counting transpositions
    let mut swaps = 0usize;
    for i in 1..k {
        let mut j = i;
        while j > 0 && shifted[j - 1] <= shifted[j] {
            if shifted[j - 1] == shifted[j] {
                return Straightened::Zero;
            }
            shifted.swap(j - 1, j);
            swaps += 1;
            j -= 1;
        }
    }
    if shifted.windows(2).any(|w| w[0] == w[1]) {
        return Straightened::Zero;
    }
    let entries = shifted
        .iter()
        .enumerate()
        .map(|(i, x)| x - (k - 1 - i) as i64)
        .collect();
    Straightened::Signed {
        sign: if swaps.is_multiple_of(2) { 1 } else { -1 },
        weight: DominantWeight(Weight(entries)),
    }
}

/// `(-v_k, …, -v_1)`.
pub fn dual_weight(v: &Weight) -> Weight {
    Weight(v.entries().iter().rev().map(|x| -x).collect())
}

/// Whether `nu - mu` has every entry in `{0, 1}`.
pub fn is_vertical_strip(nu: &DominantWeight, mu: &DominantWeight) -> Result<bool> {
    if nu.len() != mu.len() {
        return Err(Error::LengthMismatch {
            expected: nu.len(),
            got: mu.len(),
        });
    }
    Ok(nu
        .entries()
        .iter()
        .zip(mu.entries())
        .all(|(a, b)| a - b == 0 || a - b == 1))
}

fn strip_neighbours(base: &DominantWeight, step: i64) -> Vec<DominantWeight> {
    fn rec(base: &[i64], step: i64, cur: &mut Vec<i64>, out: &mut Vec<DominantWeight>) {
        let i = cur.len();
        if i == base.len() {
            out.push(DominantWeight(Weight(cur.clone())));
            return;
        }
        for delta in [0, step] {
            let x = base[i] + delta;
            if cur.last().is_some_and(|&prev| prev < x) {
                continue;
            }
            cur.push(x);
            rec(base, step, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(
        base.entries(),
        step,
        &mut Vec::with_capacity(base.len()),
        &mut out,
    );
    out
}

/// All dominant `beta` with `nu / beta` a vertical strip.
pub fn vertical_strip_shrink(nu: &DominantWeight) -> Vec<DominantWeight> {
    strip_neighbours(nu, -1)
}

/// All dominant `alpha` with `alpha / mu` a vertical strip.
pub fn vertical_strip_grow(mu: &DominantWeight) -> Vec<DominantWeight> {
    strip_neighbours(mu, 1)
}

/// Positive and (reversed, negated) negative parts of a dominant weight.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlphaBeta {
    /// Length of the weight the split came from.
    pub k: usize,
    pub alpha: Partition,
    pub beta: Partition,
}

impl AlphaBeta {
    pub fn alpha_padded(&self) -> Vec<u32> {
        self.alpha.padded(self.k).expect("alpha fits in k parts")
    }

    pub fn beta_padded(&self) -> Vec<u32> {
        self.beta.padded(self.k).expect("beta fits in k parts")
    }
}

pub fn alpha_beta(gamma: &DominantWeight) -> AlphaBeta {
    let g = gamma.entries();
    let k = g.len();
    let alpha = g.iter().map(|&x| x.max(0) as u32).collect();
    let beta = (0..k).map(|i| (-g[k - 1 - i].min(0)) as u32).collect();
    AlphaBeta {
        k,
        alpha: Partition::from_sorted(alpha),
        beta: Partition::from_sorted(beta),
    }
}

/// Parses comma-separated integers. `offset` is added to reported positions.
pub(crate) fn parse_ints_at(s: &str, offset: usize) -> Result<Vec<i64>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut pos = 0;
    for piece in s.split(',') {
        let t = piece.trim();
        let lead = piece.len() - piece.trim_start().len();
        match t.parse::<i64>() {
            Ok(x) => out.push(x),
            Err(_) => {
                return Err(Error::parse(
                    offset + pos + lead,
                    format!("expected an integer, found {t:?}"),
                ))
            }
        }
        pos += piece.len() + 1;
    }
    Ok(out)
}

/// Parses the weight notation `2,-1`.
pub fn parse_weight(s: &str) -> Result<Weight> {
    parse_ints_at(s, 0).map(Weight)
}

pub fn parse_dominant(s: &str) -> Result<DominantWeight> {
    DominantWeight::try_from(parse_weight(s)?)
}

pub fn parse_partition(s: &str) -> Result<Partition> {
    let v = parse_ints_at(s, 0)?;
    if let Some(i) = v.iter().position(|&x| x < 0) {
        return Err(Error::parse(
            0,
            format!("negative part {} in partition", v[i]),
        ));
    }
    Partition::new(v.into_iter().map(|x| x as u32).collect())
}

/// Parses the blocked notation `2,2;4,1`; each block must be dominant.
pub fn parse_blocked(s: &str) -> Result<BlockedWeight> {
    let mut blocks = Vec::new();
    let mut pos = 0;
    for piece in s.split(';') {
        let w = Weight(parse_ints_at(piece, pos)?);
        if w.is_empty() {
            return Err(Error::parse(pos, "empty block"));
        }
        blocks.push(DominantWeight::try_from(w)?);
        pos += piece.len() + 1;
    }
    BlockedWeight::new(blocks)
}

pub fn parse_shape(s: &str) -> Result<Shape> {
    let v = parse_ints_at(s, 0)?;
    if let Some(i) = v.iter().position(|&x| x <= 0) {
        return Err(Error::parse(
            0,
            format!("shape entry {} must be positive", v[i]),
        ));
    }
    Shape::new(v.into_iter().map(|x| x as usize).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(v: &[i64]) -> Weight {
        Weight(v.to_vec())
    }

    fn d(v: &[i64]) -> DominantWeight {
        DominantWeight::new(v.to_vec()).unwrap()
    }

    #[test]
    fn rho_values() {
        assert_eq!(rho(1), w(&[0]));
        assert_eq!(rho(2), w(&[1, 0]));
        assert_eq!(rho(3), w(&[2, 1, 0]));
    }

    #[test]
    fn straighten_examples() {
        assert_eq!(straighten(&w(&[1, 2])), Straightened::Zero);
        assert_eq!(
            straighten(&w(&[3, 1])),
            Straightened::Signed {
                sign: 1,
                weight: d(&[3, 1])
            }
        );
        assert_eq!(
            straighten(&w(&[0, 2])),
            Straightened::Signed {
                sign: -1,
                weight: d(&[1, 1])
            }
        );
        assert_eq!(
            straighten(&Weight::empty()),
            Straightened::Signed {
                sign: 1,
                weight: DominantWeight::empty()
            }
        );
        // (a^{k-1}, a+k) straightens to ((a+1)^k) with sign (-1)^{k-1}
        assert_eq!(
            straighten(&w(&[2, 2, 5])),
            Straightened::Signed {
                sign: 1,
                weight: d(&[3, 3, 3])
            }
        );
    }

    #[test]
    fn dual_weight_examples() {
        assert_eq!(dual_weight(&w(&[2, 0, -1])), w(&[1, 0, -2]));
        assert_eq!(dual_weight(&Weight::empty()), Weight::empty());
        assert_eq!(dual_weight(&dual_weight(&w(&[5, 3]))), w(&[5, 3]));
    }

    #[test]
    fn vertical_strip_examples() {
        assert!(is_vertical_strip(&d(&[2, 1]), &d(&[1, 1])).unwrap());
        assert!(!is_vertical_strip(&d(&[3, 1]), &d(&[1, 1])).unwrap());
        assert!(is_vertical_strip(&d(&[4, 4, 0]), &d(&[4, 4, 0])).unwrap());
        assert!(is_vertical_strip(&d(&[1]), &d(&[1, 0])).is_err());

        let mut s = vertical_strip_shrink(&d(&[1, 0]));
        s.sort();
        assert_eq!(s, vec![d(&[0, -1]), d(&[0, 0]), d(&[1, -1]), d(&[1, 0])]);
        let mut s = vertical_strip_shrink(&d(&[0]));
        s.sort();
        assert_eq!(s, vec![d(&[-1]), d(&[0])]);
        let mut s = vertical_strip_shrink(&d(&[1, 1]));
        s.sort();
        assert_eq!(s, vec![d(&[0, 0]), d(&[1, 0]), d(&[1, 1])]);

        let mut g = vertical_strip_grow(&d(&[0]));
        g.sort();
        assert_eq!(g, vec![d(&[0]), d(&[1])]);
        let mut g = vertical_strip_grow(&d(&[1, 1]));
        g.sort();
        assert_eq!(g, vec![d(&[1, 1]), d(&[2, 1]), d(&[2, 2])]);
    }

    #[test]
    fn alpha_beta_examples() {
        let ab = alpha_beta(&d(&[2, -1]));
        assert_eq!(ab.alpha, Partition::new(vec![2]).unwrap());
        assert_eq!(ab.beta, Partition::new(vec![1]).unwrap());
        assert_eq!(ab.alpha_padded(), vec![2, 0]);
        let ab = alpha_beta(&d(&[3, 1, 0]));
        assert_eq!(ab.alpha, Partition::new(vec![3, 1, 0]).unwrap());
        assert!(ab.beta.is_empty());
        let ab = alpha_beta(&d(&[-1, -2]));
        assert!(ab.alpha.is_empty());
        assert_eq!(ab.beta, Partition::new(vec![2, 1]).unwrap());
    }

    #[test]
    fn parsing() {
        assert_eq!(parse_weight("2,-1").unwrap(), w(&[2, -1]));
        assert_eq!(parse_weight("").unwrap(), Weight::empty());
        let b = parse_blocked("2,2;4,1").unwrap();
        assert_eq!(b.shape().blocks(), &[2, 2]);
        assert_eq!(b.flatten(), w(&[2, 2, 4, 1]));
        assert_eq!(b.to_string(), "2,2;4,1");
        match parse_blocked("1,1;2,x") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 6),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_blocked("1,2"), Err(Error::NotDominant(_))));
        assert!(parse_shape("1,0").is_err());
    }

    #[test]
    fn partition_enumeration() {
        let counts: Vec<usize> = (0..=8).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(Partition::with_max_len(4, 2).len(), 3);
        assert_eq!(Shape::compositions(4).len(), 8);
        assert_eq!(
            Partition::new(vec![3, 1]).unwrap().conjugate(),
            Partition::new(vec![2, 1, 1]).unwrap()
        );
    }

    fn brute_strips(base: &DominantWeight, step: i64) -> Vec<DominantWeight> {
        let k = base.len();
        let mut out: Vec<DominantWeight> = (0..1u32 << k)
            .filter_map(|mask| {
                let v: Vec<i64> = (0..k)
                    .map(|i| base.entries()[i] + if mask >> i & 1 == 1 { step } else { 0 })
                    .collect();
                DominantWeight::new(v).ok()
            })
            .collect();
        out.sort();
        out
    }

    fn arb_dominant(max_len: usize) -> impl Strategy<Value = DominantWeight> {
        prop::collection::vec(-3i64..4, 0..=max_len).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            DominantWeight::new(v).unwrap()
        })
    }

    proptest! {
        #[test]
        fn straighten_fixes_dominant(nu in arb_dominant(6)) {
            prop_assert_eq!(
                straighten(nu.weight()),
                Straightened::Signed { sign: 1, weight: nu.clone() }
            );
        }

        #[test]
        fn adjacent_move_flips_sign(v in prop::collection::vec(-4i64..5, 2..6), i in 0usize..5) {
            let i = i % (v.len() - 1);
            let mut moved = v.clone();
            moved[i] = v[i + 1] - 1;
            moved[i + 1] = v[i] + 1;
            match (straighten(&Weight(v)), straighten(&Weight(moved))) {
                (Straightened::Zero, Straightened::Zero) => {}
                (Straightened::Signed { sign: s1, weight: w1 },
                 Straightened::Signed { sign: s2, weight: w2 }) => {
                    prop_assert_eq!(w1, w2);
                    prop_assert_eq!(s1, -s2);
                }
                (a, b) => prop_assert!(false, "mismatch {:?} vs {:?}", a, b),
            }
        }

        #[test]
        fn strips_match_brute_force(base in arb_dominant(6)) {
            let mut shrink = vertical_strip_shrink(&base);
            shrink.sort();
            prop_assert_eq!(&shrink, &brute_strips(&base, -1));
            for b in &shrink {
                prop_assert!(is_vertical_strip(&base, b).unwrap());
            }
            let mut grow = vertical_strip_grow(&base);
            grow.sort();
            prop_assert_eq!(&grow, &brute_strips(&base, 1));
            for a in &grow {
                prop_assert!(is_vertical_strip(a, &base).unwrap());
                let diff = a.size() - base.size();
                prop_assert!((0..=base.len() as i64).contains(&diff));
            }
        }

        #[test]
        fn alpha_beta_of_partition(nu in arb_dominant(5)) {
            if nu.min_entry().unwrap_or(0) >= 0 {
                let ab = alpha_beta(&nu);
                prop_assert_eq!(Some(ab.alpha), nu.to_partition());
                prop_assert!(ab.beta.is_empty());
            }
        }
    }
}
