//! Exact coefficients: Laurent polynomials in `q` with integer coefficients
//! ([`QPoly`]) and reduced rational functions in `q` ([`QRat`]).
//!
//! Both types keep a canonical form at all times, so `==` is equality of the
//! underlying elements of `Z[q, 1/q]` and `Q(q)`.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{Map, Value};

use crate::error::{Error, Result};

/// Integer-coefficient Laurent polynomial in `q`.
///
/// Stored densely: `coeffs[i]` is the coefficient of `q^(low + i)`. The
/// first and last stored coefficients are nonzero; the zero polynomial has
/// no coefficients and `low == 0`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly::default()
    }

    pub fn one() -> Self {
        QPoly::constant(1)
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        QPoly::monomial(1, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        QPoly::monomial(c, 0)
    }

    /// `c * q^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        QPoly::from_dense(e, vec![c.into()])
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let terms: Vec<(i64, BigInt)> = terms.into_iter().map(|(e, c)| (e, c.into())).collect();
        let Some(lo) = terms.iter().map(|t| t.0).min() else {
            return QPoly::zero();
        };
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - lo) as usize] += c;
        }
        QPoly::from_dense(lo, coeffs)
    }

    fn from_dense(low: i64, mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        let lead_zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == coeffs.len() {
            return QPoly::zero();
        }
        coeffs.drain(..lead_zeros);
        QPoly {
            low: low + lead_zeros as i64,
            coeffs,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// True for nonzero constants and for zero.
    pub fn is_constant(&self) -> bool {
        self.is_zero() || (self.low == 0 && self.coeffs.len() == 1)
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn degree(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn low_degree(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        if e < self.low {
            return BigInt::zero();
        }
        self.coeffs
            .get((e - self.low) as usize)
            .cloned()
            .unwrap_or_default()
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Multiplication by `q^s`.
    pub fn shift(&self, s: i64) -> Self {
        if self.is_zero() {
            return QPoly::zero();
        }
        QPoly {
            low: self.low + s,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return QPoly::zero();
        }
        QPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// `q ↦ q^k`.
    pub fn substitute_power(&self, k: u32) -> Self {
        assert!(k >= 1, "q-power substitution needs k >= 1");
        QPoly::from_terms(self.terms().map(|(e, c)| (e * k as i64, c.clone())))
    }

    pub fn eval(&self, value: &BigRational) -> Result<BigRational> {
        if value.is_zero() {
            if self.low < 0 {
                return Err(Error::Pole("0".into()));
            }
            return Ok(BigRational::from_integer(self.coeff(0)));
        }
        // Horner on the dense part, then the q^low factor.
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * value + BigRational::from_integer(c.clone());
        }
        let factor = if self.low >= 0 {
            num_traits::pow(value.clone(), self.low as usize)
        } else {
            num_traits::pow(value.recip(), (-self.low) as usize)
        };
        Ok(acc * factor)
    }

    /// Gcd of the integer coefficients (nonnegative; zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    fn div_scalar_exact(&self, c: &BigInt) -> Self {
        QPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|x| x / c).collect(),
        }
    }

    fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            self.clone()
        } else {
            self.div_scalar_exact(&c)
        }
    }

    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        for (e, c) in self.terms() {
            map.insert(e.to_string(), bigint_json(c));
        }
        Value::Object(map)
    }
}

pub(crate) fn bigint_json(c: &BigInt) -> Value {
    match i64::try_from(c) {
        Ok(v) => Value::from(v),
        Err(_) => Value::String(c.to_string()),
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}

/// Decreasing exponent order, e.g. `q^4-q^3`, `2*q+1`, `-q^-1`.
impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if neg {
                write!(f, "-")?;
            } else if i > 0 {
                write!(f, "+")?;
            }
            match e {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}*")?;
                    }
                    if e == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

fn add_dense(a: &QPoly, b: &QPoly, negate_b: bool) -> QPoly {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if negate_b { -b } else { b.clone() };
    }
    let lo = a.low.min(b.low);
    let hi = a.degree().unwrap().max(b.degree().unwrap());
    let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
    for (i, c) in a.coeffs.iter().enumerate() {
        coeffs[(a.low - lo) as usize + i] += c;
    }
    for (i, c) in b.coeffs.iter().enumerate() {
        let slot = &mut coeffs[(b.low - lo) as usize + i];
        if negate_b {
            *slot -= c;
        } else {
            *slot += c;
        }
    }
    QPoly::from_dense(lo, coeffs)
}

impl Add<&QPoly> for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        add_dense(self, rhs, false)
    }
}

impl Sub<&QPoly> for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        add_dense(self, rhs, true)
    }
}

impl Mul<&QPoly> for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPoly::from_dense(self.low + rhs.low, coeffs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -&self
    }
}

macro_rules! forward_owned_binop {
    ($ty:ty, $tr:ident, $m:ident) => {
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: &$ty) -> $ty {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned_binop!(QPoly, Add, add);
forward_owned_binop!(QPoly, Sub, sub);
forward_owned_binop!(QPoly, Mul, mul);

/// Remainder of `a` by `b` after scaling `a` by a power of `lc(b)`, treating
/// both as ordinary polynomials (`low == 0`).
fn pseudo_rem(a: &QPoly, b: &QPoly) -> QPoly {
    let db = b.degree().expect("pseudo_rem by zero");
    let lb = b.leading_coeff().unwrap().clone();
    let mut r = a.clone();
    while let Some(dr) = r.degree() {
        if dr < db {
            break;
        }
        let lr = r.leading_coeff().unwrap().clone();
        let g = lr.gcd(&lb);
        let (sr, sb) = (&lb / &g, &lr / &g);
        r = r.scale(&sr) - b.scale(&sb).shift(dr - db);
    }
    r
}

/// Primitive gcd with positive leading coefficient of two nonzero ordinary
/// polynomials.
fn poly_gcd(a: &QPoly, b: &QPoly) -> QPoly {
    let (mut x, mut y) = (a.primitive_part(), b.primitive_part());
    if x.degree() < y.degree() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_zero() {
        let r = pseudo_rem(&x, &y).primitive_part();
        x = y;
        y = r;
    }
    if x.leading_coeff().is_some_and(Signed::is_negative) {
        x = -x;
    }
    x
}

/// Exact quotient of ordinary polynomials; panics when `b` does not divide `a`
/// over the integers.
fn div_exact(a: &QPoly, b: &QPoly) -> QPoly {
    let db = b.degree().expect("division by zero polynomial");
    let lb = b.leading_coeff().unwrap();
    let mut r = a.clone();
    let mut quot = Vec::new();
    while let Some(dr) = r.degree() {
        assert!(dr >= db, "inexact polynomial division");
        let (qc, rem) = r.leading_coeff().unwrap().div_rem(lb);
        assert!(rem.is_zero(), "inexact polynomial division");
        r = r - b.scale(&qc).shift(dr - db);
        quot.push((dr - db, qc));
    }
    QPoly::from_terms(quot)
}

/// Reduced rational function in `q`.
///
/// Canonical form: the denominator is an ordinary polynomial with nonzero
/// constant term and positive leading coefficient, numerator and denominator
/// are coprime in `Q[q, 1/q]`, and their joint integer content is 1. The
/// numerator may carry negative powers of `q`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QRat {
    num: QPoly,
    den: QPoly,
}

impl Default for QRat {
    fn default() -> Self {
        QRat::zero()
    }
}

impl From<QPoly> for QRat {
    fn from(num: QPoly) -> Self {
        QRat {
            num,
            den: QPoly::one(),
        }
    }
}

impl From<i64> for QRat {
    fn from(c: i64) -> Self {
        QRat::from(QPoly::constant(c))
    }
}

impl From<BigInt> for QRat {
    fn from(c: BigInt) -> Self {
        QRat::from(QPoly::constant(c))
    }
}

impl QRat {
    pub fn zero() -> Self {
        QRat::from(QPoly::zero())
    }

    pub fn one() -> Self {
        QRat::from(QPoly::one())
    }

    pub fn q() -> Self {
        QRat::from(QPoly::q())
    }

    /// `c * q^e`.
    pub fn monomial(c: i64, e: i64) -> Self {
        QRat::from(QPoly::monomial(c, e))
    }

    pub fn new(num: QPoly, den: QPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(QRat::normalized(num, den))
    }

    /// `n / d` for integers.
    pub fn ratio(n: impl Into<BigInt>, d: impl Into<BigInt>) -> Result<Self> {
        QRat::new(QPoly::constant(n), QPoly::constant(d))
    }

    fn normalized(num: QPoly, den: QPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return QRat::zero();
        }
        let s = den.low;
        let mut den = den.shift(-s);
        let num = num.shift(-s);
        let v = num.low;
        let mut n0 = num.shift(-v);
        if den.degree() > Some(0) && n0.degree() > Some(0) {
            let g = poly_gcd(&n0, &den);
            if g.degree() > Some(0) {
                n0 = div_exact(&n0, &g);
                den = div_exact(&den, &g);
            }
        }
        let c = n0.content().gcd(&den.content());
        if !c.is_one() {
            n0 = n0.div_scalar_exact(&c);
            den = den.div_scalar_exact(&c);
        }
        if den.leading_coeff().unwrap().is_negative() {
            n0 = -n0;
            den = -den;
        }
        QRat {
            num: n0.shift(v),
            den,
        }
    }

    pub fn numer(&self) -> &QPoly {
        &self.num
    }

    pub fn denom(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Division; errors when `rhs` is zero.
    pub fn checked_div(&self, rhs: &QRat) -> Result<QRat> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(QRat::normalized(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn inverse(&self) -> Result<QRat> {
        QRat::one().checked_div(self)
    }

    pub fn pow(&self, k: u32) -> QRat {
        (0..k).fold(QRat::one(), |acc, _| &acc * self)
    }

    /// `q ↦ q^k`.
    pub fn q_power_substitute(&self, k: u32) -> QRat {
        QRat::normalized(self.num.substitute_power(k), self.den.substitute_power(k))
    }

    /// Exact evaluation at a rational value of `q`.
    pub fn specialize(&self, value: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(value)?;
        if d.is_zero() {
            return Err(Error::Pole(value.to_string()));
        }
        Ok(self.num.eval(value)? / d)
    }

    /// Some(polynomial) when this is an element of `Z[q]`.
    pub fn as_integral_polynomial(&self) -> Option<&QPoly> {
        (self.den.is_one() && self.num.low_degree().unwrap_or(0) >= 0).then_some(&self.num)
    }

    pub fn is_integral_polynomial(&self) -> bool {
        self.as_integral_polynomial().is_some()
    }

    pub fn scale_int(&self, c: i64) -> QRat {
        if c == 0 {
            return QRat::zero();
        }
        let c = BigInt::from(c);
        if self.den.is_one() {
            return QRat::from(self.num.scale(&c));
        }
        QRat::normalized(self.num.scale(&c), self.den.clone())
    }

    pub fn to_json(&self) -> Value {
        match self.as_integral_polynomial() {
            Some(p) => p.to_json(),
            None => serde_json::json!({ "num": self.num.to_json(), "den": self.den.to_json() }),
        }
    }
}

impl fmt::Debug for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QRat({self})")
    }
}

impl fmt::Display for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &QPoly| {
            if p.num_terms() > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl Add<&QRat> for &QRat {
    type Output = QRat;
    fn add(self, rhs: &QRat) -> QRat {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return QRat::from(&self.num + &rhs.num);
        }
        if self.den == rhs.den {
            return QRat::normalized(&self.num + &rhs.num, self.den.clone());
        }
        QRat::normalized(
            &self.num * &rhs.den + &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl Sub<&QRat> for &QRat {
    type Output = QRat;
    fn sub(self, rhs: &QRat) -> QRat {
        self + &(-rhs)
    }
}

impl Mul<&QRat> for &QRat {
    type Output = QRat;
    fn mul(self, rhs: &QRat) -> QRat {
        if self.is_zero() || rhs.is_zero() {
            return QRat::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return QRat::from(&self.num * &rhs.num);
        }
        QRat::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        QRat {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        -&self
    }
}

forward_owned_binop!(QRat, Add, add);
forward_owned_binop!(QRat, Sub, sub);
forward_owned_binop!(QRat, Mul, mul);

impl AddAssign<&QRat> for QRat {
    fn add_assign(&mut self, rhs: &QRat) {
        *self = &*self + rhs;
    }
}

impl Sum for QRat {
    fn sum<I: Iterator<Item = QRat>>(iter: I) -> QRat {
        iter.fold(QRat::zero(), |a, b| a + b)
    }
}

impl PartialOrd for QPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order used only for deterministic output (by degree, then
/// coefficients from the top).
impl Ord for QPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let a: Vec<_> = self.terms().rev().collect();
            let b: Vec<_> = other.terms().rev().collect();
            a.cmp(&b)
        })
    }
}
