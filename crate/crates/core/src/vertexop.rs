//! Hall–Littlewood vertex operators `H_ν` and their conjugates `B_ν`, as
//! linear operators on [`SymFunc`].
//!
//! `H_ν f = Σ_{λ,μ} c̄^λ_{μν} s_λ · s_μ[X(q-1)]^⊥ f`, with `λ, μ` partitions of
//! at most `k = len(ν)` parts. Only `|μ| <= deg f` contributes, so the sum is
//! finite on every input. [`apply_h`] uses an equivalent row form built from
//! Pieri rules; [`apply_h_expansion`] evaluates the sum above directly.

use std::collections::BTreeMap;
use std::sync::{Arc, LazyLock};

use crate::coeffs::QRat;
use crate::memo::Memo;
use crate::symfunc::{
    multiply_schur, plethysm_substitute, rational_tensor_expand, row_perp_q_minus_one,
    schur_plethysm, skew, Basis, PowerSumSubst, SymFunc,
};
use crate::weights::{straighten, BlockedWeight, DominantWeight, Partition, Straightened, Weight};

/// One `(λ, μ, c̄^λ_{μν})` contribution to the expansion of `H_ν`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorTerm {
    pub lambda: Partition,
    pub mu: Partition,
    pub mult: u64,
}

/// Expansion triples of `H_ν`, memoized per `(ν, |μ|)`.
pub struct OperatorTermCache {
    memo: Memo<(DominantWeight, u32), Vec<OperatorTerm>>,
}

impl OperatorTermCache {
    pub fn new() -> Self {
        OperatorTermCache { memo: Memo::new() }
    }

    /// Triples with `|μ| = degree`.
    pub fn terms(&self, nu: &DominantWeight, degree: u32) -> Arc<Vec<OperatorTerm>> {
        let key = (nu.clone(), degree);
        self.memo.get_or_insert_with(&key, || {
            let k = nu.len();
            let mut out = Vec::new();
            for mu in Partition::with_max_len(degree, k) {
                let mu_w = mu.to_dominant(k).expect("at most k parts");
                for (lambda, mult) in rational_tensor_expand(k, &mu_w, nu) {
                    if let Some(lambda) = lambda.to_partition() {
                        out.push(OperatorTerm {
                            lambda,
                            mu: mu.clone(),
                            mult,
                        });
                    }
                }
            }
            out
        })
    }

    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl Default for OperatorTermCache {
    fn default() -> Self {
        OperatorTermCache::new()
    }
}

static TERMS: LazyLock<OperatorTermCache> = LazyLock::new(OperatorTermCache::new);
static ACTIONS: LazyLock<Memo<(DominantWeight, Partition), SymFunc>> = LazyLock::new(Memo::new);

/// The process-wide term cache used by [`apply_h_expansion`].
pub fn term_cache() -> &'static OperatorTermCache {
    &TERMS
}

/// `H_ν s_τ`, cached.
///
/// Evaluated in the row form `H_ν = Σ_{j ∈ N^k} s_{ν+j} · Π_i h_{j_i}[X(q-1)]^⊥`,
/// where `s_{ν+j}` is the Jacobi–Trudi determinant of an integer vector
/// (straightened, possibly zero). Only Pieri rules are involved. Coefficients
/// stay in `Z[q]`, so machine integers are tried first.
fn act_on_schur(nu: &DominantWeight, tau: &Partition) -> Arc<SymFunc> {
    let key = (nu.clone(), tau.clone());
    ACTIONS.get_or_insert_with(&key, || {
        fast::act_on_schur(nu, tau).unwrap_or_else(|| act_on_schur_exact(nu, tau))
    })
}

fn act_on_schur_exact(nu: &DominantWeight, tau: &Partition) -> SymFunc {
    let mut grouped: BTreeMap<Partition, SymFunc> = BTreeMap::new();
    let mut shift = nu.entries().to_vec();
    row_expand(
        nu.len(),
        0,
        SymFunc::schur(tau.clone()),
        &mut shift,
        &mut grouped,
    );
    let mut out = SymFunc::zero(Basis::Schur);
    for (lambda, g) in grouped {
        out.add_scaled(&multiply_schur(&lambda, &g), &QRat::one());
    }
    out
}

/// `s_v` for an integer vector `v`: `±s_λ` or zero.
fn jacobi_trudi(v: &[i64]) -> Option<(i8, Partition)> {
    match straighten(&Weight::new(v.to_vec())) {
        Straightened::Signed { sign, weight } => weight.to_partition().map(|l| (sign, l)),
        Straightened::Zero => None,
    }
}

fn row_expand(
    k: usize,
    i: usize,
    g: SymFunc,
    shift: &mut Vec<i64>,
    grouped: &mut BTreeMap<Partition, SymFunc>,
) {
    if i == k {
        if let Some((sign, lambda)) = jacobi_trudi(shift) {
            let g = if sign < 0 { -&g } else { g };
            grouped
                .entry(lambda)
                .or_insert_with(|| SymFunc::zero(Basis::Schur))
                .add_scaled(&g, &QRat::one());
        }
        return;
    }
    for j in 0..=g.degree() {
        let next = row_perp_q_minus_one(j, &g);
        if next.is_zero() {
            continue;
        }
        shift[i] += i64::from(j);
        row_expand(k, i + 1, next, shift, grouped);
        shift[i] -= i64::from(j);
    }
}

/// The row form over `Z[q]` with `i64` coefficients. Every function returns
/// `None` on overflow.
mod fast {
    use std::sync::{Arc, LazyLock};

    use rustc_hash::FxHashMap as HashMap;

    use super::jacobi_trudi;
    use crate::coeffs::{QPoly, QRat};
    use crate::memo::Memo;
    use crate::symfunc::{
        lr_product, remove_horizontal_strips, remove_vertical_strips, Basis, SymFunc,
    };
    use crate::weights::{DominantWeight, Partition};

    /// Dense coefficients of `q^0, q^1, ...`.
    type Poly = Vec<i64>;
    type Sym = HashMap<Partition, Poly>;
    type Terms = Vec<(Partition, Poly)>;

    static ROW_PERP: LazyLock<Memo<(u32, Partition), Terms>> = LazyLock::new(Memo::new);

    /// `acc += c * q^s * p`.
    fn add_into(acc: &mut Poly, p: &[i64], c: i64, s: usize) -> Option<()> {
        if acc.len() < p.len() + s {
            acc.resize(p.len() + s, 0);
        }
        for (i, x) in p.iter().enumerate() {
            acc[i + s] = acc[i + s].checked_add(x.checked_mul(c)?)?;
        }
        Some(())
    }

    fn add_product(acc: &mut Poly, a: &[i64], b: &[i64]) -> Option<()> {
        for (s, &c) in b.iter().enumerate() {
            if c != 0 {
                add_into(acc, a, c, s)?;
            }
        }
        Some(())
    }

    fn trim(mut p: Poly) -> Poly {
        while p.last() == Some(&0) {
            p.pop();
        }
        p
    }

    fn row_perp(j: u32, kappa: &Partition) -> Arc<Vec<(Partition, Poly)>> {
        ROW_PERP.get_or_insert_with(&(j, kappa.clone()), || {
            let mut acc: Sym = HashMap::default();
            for t in 0..=j {
                let sign = if (j - t) % 2 == 1 { -1 } else { 1 };
                for rho in remove_vertical_strips(kappa, j - t) {
                    for sigma in remove_horizontal_strips(&rho, t) {
                        let p = acc.entry(sigma).or_default();
                        if p.len() <= t as usize {
                            p.resize(t as usize + 1, 0);
                        }
                        p[t as usize] += sign;
                    }
                }
            }
            let mut out: Vec<(Partition, Poly)> = acc
                .into_iter()
                .map(|(k, p)| (k, trim(p)))
                .filter(|(_, p)| !p.is_empty())
                .collect();
            out.sort();
            out
        })
    }

    fn apply_row_perp(j: u32, g: &Sym) -> Option<Sym> {
        let mut out: Sym = HashMap::default();
        for (kappa, c) in g {
            if kappa.size() < j {
                continue;
            }
            for (sigma, p) in row_perp(j, kappa).iter() {
                add_product(out.entry(sigma.clone()).or_default(), c, p)?;
            }
        }
        out.retain(|_, p| p.iter().any(|&x| x != 0));
        Some(out)
    }

    fn expand(
        k: usize,
        i: usize,
        g: Sym,
        shift: &mut Vec<i64>,
        grouped: &mut HashMap<Partition, Sym>,
    ) -> Option<()> {
        if i == k {
            if let Some((sign, lambda)) = jacobi_trudi(shift) {
                let slot = grouped.entry(lambda).or_default();
                for (kappa, p) in g {
                    add_into(slot.entry(kappa).or_default(), &p, i64::from(sign), 0)?;
                }
            }
            return Some(());
        }
        let degree = g.keys().map(Partition::size).max().unwrap_or(0);
        for j in 0..=degree {
            let next = if j == 0 {
                g.clone()
            } else {
                apply_row_perp(j, &g)?
            };
            if next.is_empty() {
                continue;
            }
            shift[i] += i64::from(j);
            expand(k, i + 1, next, shift, grouped)?;
            shift[i] -= i64::from(j);
        }
        Some(())
    }

    static ACTIONS: LazyLock<Memo<(DominantWeight, Partition), Option<Terms>>> =
        LazyLock::new(Memo::new);

    fn action(nu: &DominantWeight, tau: &Partition) -> Arc<Option<Vec<(Partition, Poly)>>> {
        ACTIONS.get_or_insert_with(&(nu.clone(), tau.clone()), || compute_action(nu, tau))
    }

    fn compute_action(nu: &DominantWeight, tau: &Partition) -> Option<Vec<(Partition, Poly)>> {
        let mut grouped = HashMap::default();
        let mut shift = nu.entries().to_vec();
        let start: Sym = HashMap::from_iter([(tau.clone(), vec![1])]);
        expand(nu.len(), 0, start, &mut shift, &mut grouped)?;
        let mut out: Sym = HashMap::default();
        for (lambda, g) in grouped {
            for (b, c) in g {
                if c.iter().all(|&x| x == 0) {
                    continue;
                }
                for (l, m) in lr_product(&lambda, &b, usize::MAX).iter() {
                    add_into(
                        out.entry(l.clone()).or_default(),
                        &c,
                        i64::try_from(*m).ok()?,
                        0,
                    )?;
                }
            }
        }
        let mut out: Vec<(Partition, Poly)> = out
            .into_iter()
            .map(|(k, p)| (k, trim(p)))
            .filter(|(_, p)| !p.is_empty())
            .collect();
        out.sort();
        Some(out)
    }

    pub(super) fn act_on_schur(nu: &DominantWeight, tau: &Partition) -> Option<SymFunc> {
        let single: Sym = HashMap::from_iter([(tau.clone(), vec![1])]);
        apply(nu, &single).map(|g| to_symfunc(&g))
    }

    /// `H_ν g`, or `None` on overflow.
    pub(super) fn apply(nu: &DominantWeight, g: &Sym) -> Option<Sym> {
        let mut out: Sym = HashMap::default();
        for (tau, c) in g {
            let act = action(nu, tau);
            for (l, p) in act.as_ref().as_ref()? {
                add_product(out.entry(l.clone()).or_default(), c, p)?;
            }
        }
        out.retain(|_, p| p.iter().any(|&x| x != 0));
        Some(out)
    }

    pub(super) fn negate(g: &mut Sym) {
        for p in g.values_mut() {
            for x in p.iter_mut() {
                *x = -*x;
            }
        }
    }

    /// Schur-basis functions with coefficients in `Z[q]` (no negative
    /// powers) that fit in `i64`.
    pub(super) fn from_symfunc(f: &SymFunc) -> Option<Sym> {
        if f.basis() != Basis::Schur {
            return None;
        }
        let mut out = HashMap::default();
        for (k, c) in f.terms() {
            let poly = c.as_integral_polynomial()?;
            let low = poly.low_degree().unwrap_or(0);
            if low < 0 {
                return None;
            }
            let mut dense = vec![0i64; poly.degree().unwrap_or(0) as usize + 1];
            for (e, x) in poly.terms() {
                dense[e as usize] = i64::try_from(x).ok()?;
            }
            out.insert(k.clone(), dense);
        }
        Some(out)
    }

    pub(super) fn to_symfunc(g: &Sym) -> SymFunc {
        let terms = g.iter().filter_map(|(l, p)| {
            let p = trim(p.clone());
            (!p.is_empty()).then(|| {
                let poly = QPoly::from_terms(p.into_iter().enumerate().map(|(e, c)| (e as i64, c)));
                (l.clone(), QRat::from(poly))
            })
        });
        SymFunc::from_terms(Basis::Schur, terms)
    }
}

/// `H_ν s_τ` through the tensor-multiplicity expansion
/// `Σ_{λ,μ} c̄^λ_{μν} s_λ · s_μ[X(q-1)]^⊥`. Slower than [`apply_h`]; kept as an
/// independent evaluation route.
pub fn apply_h_expansion(nu: &DominantWeight, f: &SymFunc) -> SymFunc {
    if nu.is_empty() {
        return f.clone();
    }
    let subst = PowerSumSubst::x_times_q_minus_one();
    let f = f.to_basis(Basis::Schur);
    let mut out = SymFunc::zero(Basis::Schur);
    for m in 0..=f.degree() {
        let terms = TERMS.terms(nu, m);
        let mut current: Option<(&Partition, SymFunc)> = None;
        for t in terms.iter() {
            // terms are grouped by mu
            if current.as_ref().is_none_or(|(mu, _)| *mu != &t.mu) {
                let skewed = skew(&schur_plethysm(&t.mu, &subst), &f);
                current = Some((&t.mu, skewed));
            }
            let skewed = &current.as_ref().unwrap().1;
            if skewed.is_zero() {
                continue;
            }
            let prod = multiply_schur(&t.lambda, skewed);
            out.add_scaled(&prod, &QRat::from(t.mult as i64));
        }
    }
    out
}

/// `H_ν f` for dominant `ν`. A length-0 weight acts as the identity.
pub fn apply_h(nu: &DominantWeight, f: &SymFunc) -> SymFunc {
    if nu.is_empty() {
        return f.clone();
    }
    let f = f.to_basis(Basis::Schur);
    if let Some(out) = fast::from_symfunc(&f).and_then(|g| fast::apply(nu, &g)) {
        return fast::to_symfunc(&out);
    }
    let mut out = SymFunc::zero(Basis::Schur);
    for (tau, c) in f.terms() {
        out.add_scaled(&act_on_schur(nu, tau), c);
    }
    out
}

/// `H_v f` for an arbitrary integer vector, via straightening.
pub fn apply_h_any(v: &Weight, f: &SymFunc) -> SymFunc {
    match straighten(v) {
        Straightened::Zero => SymFunc::zero(Basis::Schur),
        Straightened::Signed { sign, weight } => {
            let out = apply_h(&weight, f);
            if sign < 0 {
                -&out
            } else {
                out
            }
        }
    }
}

/// The factor chain on the integer path; `None` means fall back.
fn apply_h_factors_fast(factors: &[Weight], f: &SymFunc) -> Option<SymFunc> {
    let mut acc = fast::from_symfunc(f)?;
    for v in factors.iter().rev() {
        if acc.is_empty() {
            break;
        }
        match straighten(v) {
            Straightened::Zero => acc.clear(),
            Straightened::Signed { sign, weight } => {
                if !weight.is_empty() {
                    acc = fast::apply(&weight, &acc)?;
                }
                if sign < 0 {
                    fast::negate(&mut acc);
                }
            }
        }
    }
    Some(fast::to_symfunc(&acc))
}

/// `H_{γ(1)} ⋯ H_{γ(t)} f`, applying the last block first.
pub fn apply_h_word(gamma: &BlockedWeight, f: &SymFunc) -> SymFunc {
    gamma
        .blocks()
        .iter()
        .rev()
        .fold(f.to_basis(Basis::Schur), |acc, block| apply_h(block, &acc))
}

/// Composite of `H_v` over arbitrary factors, rightmost applied first.
pub fn apply_h_factors(factors: &[Weight], f: &SymFunc) -> SymFunc {
    let mut acc = f.to_basis(Basis::Schur);
    if let Some(out) = apply_h_factors_fast(factors, &acc) {
        return out;
    }
    for v in factors.iter().rev() {
        if acc.is_zero() {
            break;
        }
        acc = apply_h_any(v, &acc);
    }
    acc
}

/// `F f = f[X(1-q)]`, or `f[X/(1-q)]` when `inverse`.
pub fn apply_f(f: &SymFunc, inverse: bool) -> SymFunc {
    let subst = if inverse {
        PowerSumSubst::x_over_one_minus_q()
    } else {
        PowerSumSubst::x_times_one_minus_q()
    };
    plethysm_substitute(f, &subst)
}

/// `B_ν = F ∘ H_ν ∘ F⁻¹`.
pub fn apply_b(nu: &DominantWeight, f: &SymFunc) -> SymFunc {
    apply_f(&apply_h(nu, &apply_f(f, true)), false)
}

/// `B_{γ(1)} ⋯ B_{γ(t)} f`.
pub fn apply_b_word(gamma: &BlockedWeight, f: &SymFunc) -> SymFunc {
    gamma
        .blocks()
        .iter()
        .rev()
        .fold(f.to_basis(Basis::Schur), |acc, block| apply_b(block, &acc))
}
