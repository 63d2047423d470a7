//! The ring of symmetric functions over `Q(q)`, in the Schur and power-sum
//! bases.
//!
//! Conversions go through symmetric-group characters; Schur products and
//! skews go through Littlewood–Richardson enumeration. Power-sum products
//! are concatenation and power-sum skewing is `z`-weighted deletion, which
//! gives the test suites an independent route for every Schur operation.

mod characters;
mod lr;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::{Arc, LazyLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::coeffs::{QPoly, QRat};
use crate::error::{Error, Result};
use crate::memo::Memo;
use crate::weights::{DominantWeight, Partition};

pub use characters::{character, z_lambda};
pub use lr::{lr_coefficient, lr_product, skew_expansion};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Basis {
    Schur,
    PowerSum,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::Schur => "schur",
            Basis::PowerSum => "powersum",
        }
    }
}

/// A finite linear combination of basis elements with [`QRat`] coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct SymFunc {
    basis: Basis,
    terms: BTreeMap<Partition, QRat>,
}

/// Named basis elements accepted by [`basis_element`].
#[derive(Clone, Debug)]
pub enum BasisElement {
    Schur(Partition),
    PowerSum(Partition),
    Homogeneous(u32),
    Elementary(u32),
    One,
}

pub fn basis_element(kind: BasisElement) -> SymFunc {
    match kind {
        BasisElement::Schur(l) => SymFunc::schur(l),
        BasisElement::PowerSum(r) => SymFunc::power(r),
        BasisElement::Homogeneous(k) => SymFunc::h(k),
        BasisElement::Elementary(k) => SymFunc::e(k),
        BasisElement::One => SymFunc::one(),
    }
}

impl SymFunc {
    pub fn zero(basis: Basis) -> Self {
        SymFunc {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        SymFunc::schur(Partition::empty())
    }

    pub fn schur(lambda: Partition) -> Self {
        SymFunc::monomial(Basis::Schur, lambda, QRat::one())
    }

    pub fn power(rho: Partition) -> Self {
        SymFunc::monomial(Basis::PowerSum, rho, QRat::one())
    }

    /// `h_k = s_(k)`.
    pub fn h(k: u32) -> Self {
        SymFunc::schur(Partition::from_sorted(vec![k]))
    }

    /// `e_k = s_(1^k)`.
    pub fn e(k: u32) -> Self {
        SymFunc::schur(Partition::from_sorted(vec![1; k as usize]))
    }

    pub fn monomial(basis: Basis, index: Partition, coeff: QRat) -> Self {
        let mut f = SymFunc::zero(basis);
        f.add_term(index, &coeff);
        f
    }

    pub fn from_terms(basis: Basis, terms: impl IntoIterator<Item = (Partition, QRat)>) -> Self {
        let mut f = SymFunc::zero(basis);
        for (k, c) in terms {
            f.add_term(k, &c);
        }
        f
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Partition, QRat> {
        &self.terms
    }

    pub fn coeff(&self, index: &Partition) -> QRat {
        self.terms.get(index).cloned().unwrap_or_default()
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

    /// Largest `|λ|` among the terms (0 for the zero function).
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Partition::size).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, index: Partition, coeff: &QRat) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(index) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Adds `scale * other` in place; `other` is converted to this basis.
    pub fn add_scaled(&mut self, other: &SymFunc, scale: &QRat) {
        if scale.is_zero() {
            return;
        }
        let other = other.to_basis(self.basis);
        for (k, c) in &other.terms {
            self.add_term(k.clone(), &(c * scale));
        }
    }

    pub fn scale(&self, c: &QRat) -> SymFunc {
        if c.is_zero() {
            return SymFunc::zero(self.basis);
        }
        SymFunc {
            basis: self.basis,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn map_coeffs(&self, f: impl Fn(&QRat) -> QRat) -> SymFunc {
        SymFunc::from_terms(
            self.basis,
            self.terms.iter().map(|(k, v)| (k.clone(), f(v))),
        )
    }

    /// The same element expressed in `target`.
    pub fn to_basis(&self, target: Basis) -> SymFunc {
        if self.basis == target {
            return self.clone();
        }
        let mut out = SymFunc::zero(target);
        for (k, c) in &self.terms {
            let table = match target {
                Basis::PowerSum => characters::schur_to_power(k),
                Basis::Schur => characters::power_to_schur(k),
            };
            for (idx, t) in table.iter() {
                out.add_term(idx.clone(), &(c * t));
            }
        }
        out
    }

    /// Equality as elements of the ring, regardless of basis.
    pub fn same_element(&self, other: &SymFunc) -> bool {
        *self == other.to_basis(self.basis)
    }

    /// Coefficientwise evaluation at a rational value of `q`.
    pub fn specialize(&self, value: &BigRational) -> Result<BTreeMap<Partition, BigRational>> {
        let mut out = BTreeMap::new();
        for (k, c) in &self.terms {
            let v = c.specialize(value)?;
            if !v.is_zero() {
                out.insert(k.clone(), v);
            }
        }
        Ok(out)
    }

    /// Whether every coefficient lies in `Z[q]`.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(QRat::is_integral_polynomial)
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(k, c)| json!({ "index": k.parts(), "coeff": c.to_json() }))
            .collect();
        json!({ "basis": self.basis.name(), "terms": terms })
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `q*s[2]+s[1,1]` style; the zero function renders as `0`.
impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let letter = match self.basis {
            Basis::Schur => "s",
            Basis::PowerSum => "p",
        };
        // largest partitions first
        for (i, (k, c)) in self.terms.iter().rev().enumerate() {
            let (neg, body) = coeff_prefix(c);
            if neg {
                write!(f, "{}", if i == 0 { "-" } else { " - " })?;
            } else if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{body}{letter}[{k}]")?;
        }
        Ok(())
    }
}

/// Splits a coefficient into a sign and a multiplicative prefix such as
/// `q^2*` or `(q^2-q)*`; unit coefficients give an empty prefix.
pub(crate) fn coeff_prefix(c: &QRat) -> (bool, String) {
    if let Some(p) = c.as_integral_polynomial() {
        if p.num_terms() == 1 {
            let (e, v) = p.terms().next().unwrap();
            let neg = v < &BigInt::zero();
            let abs = QPoly::monomial(if neg { -v } else { v.clone() }, e);
            return if abs.is_one() {
                (neg, String::new())
            } else {
                (neg, format!("{abs}*"))
            };
        }
        return (false, format!("({p})*"));
    }
    (false, format!("({c})*"))
}

impl Add<&SymFunc> for &SymFunc {
    type Output = SymFunc;
    fn add(self, rhs: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        out.add_scaled(rhs, &QRat::one());
        out
    }
}

impl Sub<&SymFunc> for &SymFunc {
    type Output = SymFunc;
    fn sub(self, rhs: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        out.add_scaled(rhs, &QRat::from(-1i64));
        out
    }
}

impl Neg for &SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        self.scale(&QRat::from(-1i64))
    }
}

/// `convert(f, target)`.
pub fn convert(f: &SymFunc, target: Basis) -> SymFunc {
    f.to_basis(target)
}

fn concat_partitions(a: &Partition, b: &Partition) -> Partition {
    let mut v: Vec<u32> = a.parts().iter().chain(b.parts()).copied().collect();
    v.sort_unstable_by(|x, y| y.cmp(x));
    Partition::from_sorted(v)
}

/// Product in the ring. The result is in `f`'s basis.
pub fn multiply(f: &SymFunc, g: &SymFunc) -> SymFunc {
    let g = g.to_basis(f.basis);
    let mut out = SymFunc::zero(f.basis);
    for (a, ca) in &f.terms {
        for (b, cb) in &g.terms {
            let c = ca * cb;
            match f.basis {
                Basis::PowerSum => out.add_term(concat_partitions(a, b), &c),
                Basis::Schur => {
                    for (l, m) in lr_product(a, b, usize::MAX).iter() {
                        out.add_term(l.clone(), &c.scale_int(*m as i64));
                    }
                }
            }
        }
    }
    out
}

/// `s_lambda · f` for `f` in the Schur basis.
pub(crate) fn multiply_schur(lambda: &Partition, f: &SymFunc) -> SymFunc {
    debug_assert_eq!(f.basis, Basis::Schur);
    let mut out = SymFunc::zero(Basis::Schur);
    for (b, cb) in &f.terms {
        for (l, m) in lr_product(lambda, b, usize::MAX).iter() {
            out.add_term(l.clone(), &cb.scale_int(*m as i64));
        }
    }
    out
}

/// The Hall scalar product, `<p_λ, p_μ> = δ z_λ`; Schur functions are
/// orthonormal.
pub fn scalar_product(f: &SymFunc, g: &SymFunc) -> QRat {
    let g = g.to_basis(f.basis);
    let mut acc = QRat::zero();
    for (k, a) in &f.terms {
        if let Some(b) = g.terms.get(k) {
            let prod = a * b;
            acc += &match f.basis {
                Basis::Schur => prod,
                Basis::PowerSum => &prod * &QRat::from(z_lambda(k)),
            };
        }
    }
    acc
}

/// Multiset difference `sigma \ rho`, if `rho ⊆ sigma`.
fn remove_parts(sigma: &Partition, rho: &Partition) -> Option<Partition> {
    let mut rest: Vec<u32> = sigma.parts().to_vec();
    for r in rho.parts() {
        let pos = rest.iter().position(|x| x == r)?;
        rest.remove(pos);
    }
    Some(Partition::from_sorted(rest))
}

/// `f^⊥(g)`, the adjoint of multiplication by `f`. The result is in `g`'s
/// basis.
pub fn skew(f: &SymFunc, g: &SymFunc) -> SymFunc {
    let f = f.to_basis(g.basis);
    let mut out = SymFunc::zero(g.basis);
    for (a, ca) in &f.terms {
        for (b, cb) in &g.terms {
            if a.size() > b.size() {
                continue;
            }
            let c = ca * cb;
            match g.basis {
                Basis::Schur => {
                    for (k, m) in skew_expansion(b, a).iter() {
                        out.add_term(k.clone(), &c.scale_int(*m as i64));
                    }
                }
                Basis::PowerSum => {
                    if let Some(rest) = remove_parts(b, a) {
                        let ratio = QRat::new(
                            QPoly::constant(z_lambda(b)),
                            QPoly::constant(z_lambda(&rest)),
                        )
                        .expect("z is positive");
                        out.add_term(rest, &(&c * &ratio));
                    }
                }
            }
        }
    }
    out
}

/// `e_k^⊥ f` by vertical-strip deletion in the Schur basis.
pub fn elementary_perp(k: u32, f: &SymFunc) -> SymFunc {
    let f = f.to_basis(Basis::Schur);
    let mut out = SymFunc::zero(Basis::Schur);
    for (lambda, c) in &f.terms {
        for mu in remove_vertical_strips(lambda, k) {
            out.add_term(mu, c);
        }
    }
    out
}

/// Partitions `mu ⊆ lambda` with `lambda / mu` a vertical strip of size `k`.
pub(crate) fn remove_vertical_strips(lambda: &Partition, k: u32) -> Vec<Partition> {
    fn rec(parts: &[u32], i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if i == parts.len() {
            if left == 0 {
                out.push(Partition::from_sorted(cur.clone()));
            }
            return;
        }
        if ((parts.len() - i) as u32) < left {
            return;
        }
        for d in 0..=left.min(1) {
            let x = parts[i] - d;
            if cur.last().is_some_and(|&prev| prev < x) {
                continue;
            }
            cur.push(x);
            rec(parts, i + 1, left - d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(lambda.parts(), 0, k, &mut Vec::new(), &mut out);
    out
}

/// `h_k^⊥ f` by horizontal-strip deletion in the Schur basis.
pub fn complete_perp(k: u32, f: &SymFunc) -> SymFunc {
    let f = f.to_basis(Basis::Schur);
    let mut out = SymFunc::zero(Basis::Schur);
    for (lambda, c) in &f.terms {
        for mu in remove_horizontal_strips(lambda, k) {
            out.add_term(mu, c);
        }
    }
    out
}

/// Partitions `mu ⊆ lambda` with `lambda / mu` a horizontal strip of size `k`.
pub(crate) fn remove_horizontal_strips(lambda: &Partition, k: u32) -> Vec<Partition> {
    fn rec(parts: &[u32], i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if i == parts.len() {
            if left == 0 {
                out.push(Partition::from_sorted(cur.clone()));
            }
            return;
        }
        let floor = parts.get(i + 1).copied().unwrap_or(0);
        let room: u32 = parts[i..]
            .iter()
            .zip(parts[i + 1..].iter().chain([&0]))
            .map(|(a, b)| a - b)
            .sum();
        if room < left {
            return;
        }
        for d in 0..=left.min(parts[i] - floor) {
            cur.push(parts[i] - d);
            rec(parts, i + 1, left - d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(lambda.parts(), 0, k, &mut Vec::new(), &mut out);
    out
}

static ROW_PERP: LazyLock<Memo<(u32, Partition), SymFunc>> = LazyLock::new(Memo::new);

/// `h_j[X(q-1)]^⊥ s_τ = Σ_t q^t (-1)^{j-t} h_t^⊥ e_{j-t}^⊥ s_τ`, cached.
fn row_perp_schur(j: u32, tau: &Partition) -> Arc<SymFunc> {
    ROW_PERP.get_or_insert_with(&(j, tau.clone()), || {
        let s = SymFunc::schur(tau.clone());
        let mut out = SymFunc::zero(Basis::Schur);
        for t in 0..=j {
            let e = elementary_perp(j - t, &s);
            if e.is_zero() {
                continue;
            }
            let mut c = QRat::monomial(1, t as i64);
            if (j - t) % 2 == 1 {
                c = -&c;
            }
            out.add_scaled(&complete_perp(t, &e), &c);
        }
        out
    })
}

/// `h_j[X(q-1)]^⊥ f`.
pub fn row_perp_q_minus_one(j: u32, f: &SymFunc) -> SymFunc {
    if j == 0 {
        return f.to_basis(Basis::Schur);
    }
    let f = f.to_basis(Basis::Schur);
    let mut out = SymFunc::zero(Basis::Schur);
    for (tau, c) in &f.terms {
        if tau.size() >= j {
            out.add_scaled(&row_perp_schur(j, tau), c);
        }
    }
    out
}

/// A plethystic substitution `p_k ↦ φ(k) p_k` for an alphabet `c(q)·X`,
/// where `φ(k)` is `c` with `q ↦ q^k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PowerSumSubst {
    scale: QRat,
}

impl PowerSumSubst {
    pub fn alphabet(scale: QRat) -> Self {
        PowerSumSubst { scale }
    }

    /// `X(q-1)`.
    pub fn x_times_q_minus_one() -> Self {
        PowerSumSubst::alphabet(QRat::from(QPoly::from_terms([(1, 1), (0, -1)])))
    }

    /// `X(1-q)`.
    pub fn x_times_one_minus_q() -> Self {
        PowerSumSubst::alphabet(QRat::from(QPoly::from_terms([(0, 1), (1, -1)])))
    }

    /// `X/(q-1)`.
    pub fn x_over_q_minus_one() -> Self {
        PowerSumSubst::x_times_q_minus_one()
            .inverse()
            .expect("nonzero")
    }

    /// `X/(1-q)`.
    pub fn x_over_one_minus_q() -> Self {
        PowerSumSubst::x_times_one_minus_q()
            .inverse()
            .expect("nonzero")
    }

    pub fn scale(&self) -> &QRat {
        &self.scale
    }

    /// `φ(k)`.
    pub fn factor(&self, k: u32) -> QRat {
        self.scale.q_power_substitute(k)
    }

    pub fn inverse(&self) -> Result<Self> {
        Ok(PowerSumSubst::alphabet(self.scale.inverse()?))
    }

    fn factor_for(&self, rho: &Partition) -> QRat {
        rho.parts()
            .iter()
            .fold(QRat::one(), |acc, &k| &acc * &self.factor(k))
    }
}

static PLETHYSM_CACHE: LazyLock<Memo<(Partition, QRat), SymFunc>> = LazyLock::new(Memo::new);

/// `f[c·X]`, returned in `f`'s basis.
pub fn plethysm_substitute(f: &SymFunc, subst: &PowerSumSubst) -> SymFunc {
    match f.basis {
        Basis::PowerSum => f.map_coeffs_indexed(|rho, c| c * &subst.factor_for(rho)),
        Basis::Schur => {
            let mut out = SymFunc::zero(Basis::Schur);
            for (lambda, c) in &f.terms {
                out.add_scaled(&schur_plethysm(lambda, subst), c);
            }
            out
        }
    }
}

/// `s_λ[c·X]` in the Schur basis, cached.
pub(crate) fn schur_plethysm(lambda: &Partition, subst: &PowerSumSubst) -> Arc<SymFunc> {
    let key = (lambda.clone(), subst.scale.clone());
    PLETHYSM_CACHE.get_or_insert_with(&key, || {
        let p = SymFunc::schur(lambda.clone()).to_basis(Basis::PowerSum);
        p.map_coeffs_indexed(|rho, c| c * &subst.factor_for(rho))
            .to_basis(Basis::Schur)
    })
}

/// `f[E]` for a constant alphabet `E` with `p_k[E] = φ(k)`.
pub fn plethysm_constant(f: &SymFunc, subst: &PowerSumSubst) -> QRat {
    f.to_basis(Basis::PowerSum)
        .terms
        .iter()
        .map(|(rho, c)| c * &subst.factor_for(rho))
        .sum()
}

impl SymFunc {
    fn map_coeffs_indexed(&self, f: impl Fn(&Partition, &QRat) -> QRat) -> SymFunc {
        SymFunc::from_terms(
            self.basis,
            self.terms.iter().map(|(k, v)| (k.clone(), f(k, v))),
        )
    }
}

/// Checks `<s_μ[cX], s_τ[X/c]> = δ_{μτ}` for all `|μ|, |τ| <= max_degree`.
pub fn dual_basis_pair_check(subst: &PowerSumSubst, max_degree: u32) -> Result<bool> {
    let inv = subst.inverse()?;
    for n in 0..=max_degree {
        let parts = Partition::all(n);
        for mu in &parts {
            let a = schur_plethysm(mu, subst);
            for tau in &parts {
                let b = schur_plethysm(tau, &inv);
                let want = if mu == tau { QRat::one() } else { QRat::zero() };
                if scalar_product(&a, &b) != want {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Expands `f[x_1 + … + x_m]` as a polynomial: exponent vector ↦ coefficient.
pub fn expand_in_variables(f: &SymFunc, m: usize) -> BTreeMap<Vec<u32>, QRat> {
    type Poly = BTreeMap<Vec<u32>, QRat>;
    fn mul(a: &Poly, b: &Poly) -> Poly {
        let mut out = Poly::new();
        for (ea, ca) in a {
            for (eb, cb) in b {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                let c = out.entry(e).or_default();
                *c = &*c + &(ca * cb);
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }
    let power_sum = |k: u32| -> Poly {
        (0..m)
            .map(|i| {
                let mut e = vec![0; m];
                e[i] = k;
                (e, QRat::one())
            })
            .collect()
    };
    let mut out = Poly::new();
    for (rho, c) in &f.to_basis(Basis::PowerSum).terms {
        let mut term: Poly = [(vec![0; m], c.clone())].into_iter().collect();
        for &k in rho.parts() {
            term = mul(&term, &power_sum(k));
        }
        for (e, v) in term {
            let slot = out.entry(e).or_default();
            *slot = &*slot + &v;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// The `GL(k)` tensor multiplicity `c̄^λ_{μν}` for dominant weights,
/// computed by shifting `μ` and `ν` into partitions.
pub fn rational_tensor_multiplicity(
    k: usize,
    lambda: &DominantWeight,
    mu: &DominantWeight,
    nu: &DominantWeight,
) -> Result<u64> {
    rational_tensor_multiplicity_shifted(k, lambda, mu, nu, 0)
}

/// As [`rational_tensor_multiplicity`], with `extra` added to both shifts.
pub fn rational_tensor_multiplicity_shifted(
    k: usize,
    lambda: &DominantWeight,
    mu: &DominantWeight,
    nu: &DominantWeight,
    extra: i64,
) -> Result<u64> {
    for w in [lambda, mu, nu] {
        if w.len() != k {
            return Err(Error::LengthMismatch {
                expected: k,
                got: w.len(),
            });
        }
    }
    if lambda.size() != mu.size() + nu.size() {
        return Ok(0);
    }
    let m_mu = (-mu.min_entry().unwrap_or(0)).max(0) + extra;
    let m_nu = (-nu.min_entry().unwrap_or(0)).max(0) + extra;
    let (Some(mu_p), Some(nu_p), Some(lambda_p)) = (
        mu.shifted(m_mu).to_partition(),
        nu.shifted(m_nu).to_partition(),
        lambda.shifted(m_mu + m_nu).to_partition(),
    ) else {
        return Ok(0);
    };
    Ok(lr_coefficient(&lambda_p, &mu_p, &nu_p))
}

/// All `(λ, c̄^λ_{μν})` with `c̄ > 0`, for `μ, ν` dominant of length `k`.
pub fn rational_tensor_expand(
    k: usize,
    mu: &DominantWeight,
    nu: &DominantWeight,
) -> Vec<(DominantWeight, u64)> {
    debug_assert!(mu.len() == k && nu.len() == k);
    let m_mu = (-mu.min_entry().unwrap_or(0)).max(0);
    let m_nu = (-nu.min_entry().unwrap_or(0)).max(0);
    let mu_p = mu
        .shifted(m_mu)
        .to_partition()
        .expect("shifted to a partition");
    let nu_p = nu
        .shifted(m_nu)
        .to_partition()
        .expect("shifted to a partition");
    lr_product(&mu_p, &nu_p, k)
        .iter()
        .map(|(l, c)| {
            let w = l.to_dominant(k).expect("at most k rows");
            (w.shifted(-(m_mu + m_nu)), *c)
        })
        .collect()
}
