//! Exact arithmetic substrate: arbitrary-precision rationals and
//! π-expressions (finite sums Σ q·π^k with rational q and integer k).
//!
//! Every coefficient family and every exact ball-volume quantity in this
//! crate is built from these two types; nothing downstream touches floating
//! point until a value crosses into the interval engine.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid rational literal `{0}`")]
    Parse(String),
}

/// Arbitrary-precision signed rational, always normalized: gcd(|num|, den) = 1
/// and den > 0. Backed by GMP.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(rug::Rational);

impl Rational {
    /// Exact `num/den`. Panics if `den` is zero; use [`Rational::checked_div`]
    /// for data-driven denominators.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "rational denominator must be nonzero");
        Rational(rug::Rational::from((num, den)))
    }

    pub fn zero() -> Self {
        Rational(rug::Rational::new())
    }

    pub fn one() -> Self {
        Rational::from(1)
    }

    pub fn is_zero(&self) -> bool {
        self.0.cmp0() == std::cmp::Ordering::Equal
    }

    pub fn is_negative(&self) -> bool {
        self.0.cmp0() == std::cmp::Ordering::Less
    }

    pub fn is_positive(&self) -> bool {
        self.0.cmp0() == std::cmp::Ordering::Greater
    }

    pub fn abs(&self) -> Self {
        Rational(rug::Rational::from(self.0.abs_ref()))
    }

    pub fn recip(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Rational(rug::Rational::from(self.0.recip_ref())))
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Self, ExactError> {
        if rhs.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Rational(rug::Rational::from(&self.0 / &rhs.0)))
    }

    /// Exact integer power; negative exponents require a nonzero base.
    pub fn pow(&self, exp: i32) -> Result<Self, ExactError> {
        if exp < 0 && self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Rational(rug::Rational::from(rug::ops::Pow::pow(
            &self.0, exp,
        ))))
    }

    pub(crate) fn inner(&self) -> &rug::Rational {
        &self.0
    }

    pub fn numer_string(&self) -> String {
        self.0.numer().to_string()
    }

    pub fn denom_string(&self) -> String {
        self.0.denom().to_string()
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational(rug::Rational::from(n))
    }
}

impl From<u64> for Rational {
    fn from(n: u64) -> Self {
        Rational(rug::Rational::from(n))
    }
}

impl From<i32> for Rational {
    fn from(n: i32) -> Self {
        Rational(rug::Rational::from(n))
    }
}

impl FromStr for Rational {
    type Err = ExactError;

    /// Parses `"num/den"` or a bare integer `"num"`, base 10.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let r = rug::Rational::from_str(s).map_err(|_| ExactError::Parse(s.to_owned()))?;
        Ok(Rational(r))
    }
}

impl fmt::Display for Rational {
    /// `num/den` in base 10, or just `num` for integers (e.g. `-5/128`, `1`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(|e: ExactError| D::Error::custom(e))
    }
}

macro_rules! rational_binop {
    ($Op:ident, $method:ident, $OpAssign:ident, $assign:ident) => {
        impl $Op for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(rug::Rational::from((self.0).$method(&rhs.0)))
            }
        }
        impl $Op<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(rug::Rational::from((&self.0).$method(&rhs.0)))
            }
        }
        impl $Op<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((self.0).$method(&rhs.0))
            }
        }
        impl $Op<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(rug::Rational::from((&self.0).$method(&rhs.0)))
            }
        }
        impl $OpAssign<&Rational> for Rational {
            fn $assign(&mut self, rhs: &Rational) {
                (self.0).$assign(&rhs.0);
            }
        }
        impl $OpAssign<Rational> for Rational {
            fn $assign(&mut self, rhs: Rational) {
                (self.0).$assign(rhs.0);
            }
        }
    };
}

rational_binop!(Add, add, AddAssign, add_assign);
rational_binop!(Sub, sub, SubAssign, sub_assign);
rational_binop!(Mul, mul, MulAssign, mul_assign);

impl Div<&Rational> for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        self.checked_div(rhs).expect("division by zero rational")
    }
}

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        (&self).div(&rhs)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(rug::Rational::from(-&self.0))
    }
}

/// Generalized binomial coefficient `v(v-1)⋯(v-k+1)/k!` for rational `v`.
/// Returns 1 for `k = 0` (empty product).
pub fn binomial_general(v: &Rational, k: u32) -> Rational {
    let mut acc = Rational::one();
    let mut factor = v.clone();
    for i in 0..k {
        acc *= &factor;
        acc = acc / Rational::from(i as i64 + 1);
        factor -= Rational::one();
    }
    acc
}

/// Plain integer binomial C(n, k) as a rational.
pub fn binomial(n: u32, k: u32) -> Rational {
    if k > n {
        return Rational::zero();
    }
    binomial_general(&Rational::from(n as i64), k)
}

/// One monomial of a [`PiExpression`], used for serialization.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PiTerm {
    pub pi_pow: i32,
    pub coeff: Rational,
}

/// Exact value of the form Σ q·π^k, with rational q and integer k.
///
/// Closed under addition, subtraction, and multiplication. Zero coefficients
/// are never stored. Serializes as a JSON list of `{"pi_pow": k, "coeff": "num/den"}`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PiExpression {
    terms: BTreeMap<i32, Rational>,
}

impl PiExpression {
    pub fn zero() -> Self {
        PiExpression::default()
    }

    pub fn one() -> Self {
        PiExpression::from(Rational::one())
    }

    /// The monomial π^k.
    pub fn pi_pow(k: i32) -> Self {
        Self::monomial(Rational::one(), k)
    }

    /// The monomial q·π^k.
    pub fn monomial(coeff: Rational, k: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(k, coeff);
        }
        PiExpression { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, Rational)>>(iter: I) -> Self {
        let mut out = PiExpression::zero();
        for (k, q) in iter {
            out.add_term(k, q);
        }
        out
    }

    fn add_term(&mut self, k: i32, q: Rational) {
        if q.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(q);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += q;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// `(k, q)` if the value is a single monomial q·π^k.
    pub fn as_monomial(&self) -> Option<(i32, &Rational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(k, q)| (*k, q))
        } else {
            None
        }
    }

    /// The rational part if the value has no π dependence at all.
    pub fn as_rational(&self) -> Option<&Rational> {
        match self.terms.len() {
            0 => Some(RATIONAL_ZERO.get_or_init(Rational::zero)),
            1 => self.terms.get(&0),
            _ => None,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &Rational)> {
        self.terms.iter().map(|(k, q)| (*k, q))
    }

    pub fn coeff(&self, k: i32) -> Rational {
        self.terms.get(&k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return PiExpression::zero();
        }
        PiExpression {
            terms: self.terms.iter().map(|(k, c)| (*k, c * q)).collect(),
        }
    }

    /// Multiply by π^k (shift every exponent).
    pub fn mul_pi_pow(&self, k: i32) -> Self {
        PiExpression {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Exact division, defined only when `rhs` is a single monomial.
    pub fn div_monomial(&self, rhs: &PiExpression) -> Result<Self, ExactError> {
        let (k, q) = rhs.as_monomial().ok_or(ExactError::DivisionByZero)?;
        Ok(self.scale(&q.recip()?).mul_pi_pow(-k))
    }
}

static RATIONAL_ZERO: std::sync::OnceLock<Rational> = std::sync::OnceLock::new();

impl From<Rational> for PiExpression {
    fn from(q: Rational) -> Self {
        PiExpression::monomial(q, 0)
    }
}

impl From<i64> for PiExpression {
    fn from(n: i64) -> Self {
        PiExpression::from(Rational::from(n))
    }
}

impl Add<&PiExpression> for &PiExpression {
    type Output = PiExpression;
    fn add(self, rhs: &PiExpression) -> PiExpression {
        let mut out = self.clone();
        for (k, q) in rhs.terms() {
            out.add_term(k, q.clone());
        }
        out
    }
}

impl Sub<&PiExpression> for &PiExpression {
    type Output = PiExpression;
    fn sub(self, rhs: &PiExpression) -> PiExpression {
        let mut out = self.clone();
        for (k, q) in rhs.terms() {
            out.add_term(k, -q);
        }
        out
    }
}

impl Mul<&PiExpression> for &PiExpression {
    type Output = PiExpression;
    fn mul(self, rhs: &PiExpression) -> PiExpression {
        let mut out = PiExpression::zero();
        for (ka, qa) in self.terms() {
            for (kb, qb) in rhs.terms() {
                out.add_term(ka + kb, qa * qb);
            }
        }
        out
    }
}

impl Add for PiExpression {
    type Output = PiExpression;
    fn add(self, rhs: PiExpression) -> PiExpression {
        (&self) + (&rhs)
    }
}

impl Sub for PiExpression {
    type Output = PiExpression;
    fn sub(self, rhs: PiExpression) -> PiExpression {
        (&self) - (&rhs)
    }
}

impl Mul for PiExpression {
    type Output = PiExpression;
    fn mul(self, rhs: PiExpression) -> PiExpression {
        (&self) * (&rhs)
    }
}

impl Neg for &PiExpression {
    type Output = PiExpression;
    fn neg(self) -> PiExpression {
        PiExpression {
            terms: self.terms.iter().map(|(k, q)| (*k, -q)).collect(),
        }
    }
}

impl Neg for PiExpression {
    type Output = PiExpression;
    fn neg(self) -> PiExpression {
        -(&self)
    }
}

impl fmt::Display for PiExpression {
    /// Renders e.g. `4/3*pi`, `8/3*pi^-1`, `2 + 4/3*pi`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, q)) in self.terms.iter().enumerate() {
            if i > 0 {
                if q.is_negative() {
                    write!(f, " - {}", format_abs_term(&q.abs(), *k))?;
                } else {
                    write!(f, " + {}", format_abs_term(q, *k))?;
                }
            } else if q.is_negative() {
                write!(f, "-{}", format_abs_term(&q.abs(), *k))?;
            } else {
                write!(f, "{}", format_abs_term(q, *k))?;
            }
        }
        Ok(())
    }
}

fn format_abs_term(q: &Rational, k: i32) -> String {
    let one = q == &Rational::one();
    match (k, one) {
        (0, _) => q.to_string(),
        (1, true) => "pi".to_owned(),
        (1, false) => format!("{q}*pi"),
        (_, true) => format!("pi^{k}"),
        (_, false) => format!("{q}*pi^{k}"),
    }
}

impl Serialize for PiExpression {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<PiTerm> = self
            .terms()
            .map(|(k, q)| PiTerm {
                pi_pow: k,
                coeff: q.clone(),
            })
            .collect();
        terms.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PiExpression {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let terms = Vec::<PiTerm>::deserialize(deserializer)?;
        Ok(PiExpression::from_terms(
            terms.into_iter().map(|t| (t.pi_pow, t.coeff)),
        ))
    }
}
