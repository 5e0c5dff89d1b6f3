//! Bound expressions: closed forms over the scan variable n with exact
//! coefficients, evaluated to certified enclosures.
//!
//! The catalog builds these with ordinary operator syntax plus the helper
//! constructors at the bottom (`ln`, `sqrt`, `powi`, `inv_pow_poly`, ...).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::exact::{PiExpression, Rational};

use super::interval::PrecInterval;
use super::EvalError;

#[derive(Debug, Clone, PartialEq)]
pub enum BoundExpr {
    /// Exact rational constant.
    Rat(Rational),
    /// Exact π-polynomial constant Σ q·π^k.
    PiPoly(PiExpression),
    /// Euler's number e.
    EulerE,
    /// The scan variable.
    N,
    Add(Box<BoundExpr>, Box<BoundExpr>),
    Sub(Box<BoundExpr>, Box<BoundExpr>),
    Mul(Box<BoundExpr>, Box<BoundExpr>),
    Div(Box<BoundExpr>, Box<BoundExpr>),
    Neg(Box<BoundExpr>),
    Ln(Box<BoundExpr>),
    Exp(Box<BoundExpr>),
    Sqrt(Box<BoundExpr>),
    /// base^exponent via exp(exponent·ln(base)); base must be positive.
    Pow(Box<BoundExpr>, Box<BoundExpr>),
    /// Integer power, defined for sign-definite bases.
    PowInt(Box<BoundExpr>, i32),
}

impl BoundExpr {
    /// Certified enclosure of the expression at dimension `n`.
    pub fn enclose(&self, n: u64, prec_bits: u32) -> Result<PrecInterval, EvalError> {
        match self {
            BoundExpr::Rat(q) => Ok(PrecInterval::from_rational(q, prec_bits)),
            BoundExpr::PiPoly(p) => Ok(PrecInterval::from_pi_expression(p, prec_bits)),
            BoundExpr::EulerE => Ok(PrecInterval::euler_e(prec_bits)),
            BoundExpr::N => Ok(PrecInterval::from_u64(n, prec_bits)),
            BoundExpr::Add(a, b) => Ok(a.enclose(n, prec_bits)?.add(&b.enclose(n, prec_bits)?)),
            BoundExpr::Sub(a, b) => Ok(a.enclose(n, prec_bits)?.sub(&b.enclose(n, prec_bits)?)),
            BoundExpr::Mul(a, b) => Ok(a.enclose(n, prec_bits)?.mul(&b.enclose(n, prec_bits)?)),
            BoundExpr::Div(a, b) => a.enclose(n, prec_bits)?.div(&b.enclose(n, prec_bits)?),
            BoundExpr::Neg(a) => Ok(a.enclose(n, prec_bits)?.neg()),
            BoundExpr::Ln(a) => a.enclose(n, prec_bits)?.ln(),
            BoundExpr::Exp(a) => Ok(a.enclose(n, prec_bits)?.exp()),
            BoundExpr::Sqrt(a) => a.enclose(n, prec_bits)?.sqrt(),
            BoundExpr::Pow(base, expo) => base
                .enclose(n, prec_bits)?
                .pow(&expo.enclose(n, prec_bits)?),
            BoundExpr::PowInt(base, k) => base.enclose(n, prec_bits)?.pow_int(*k),
        }
    }

    /// Replaces the scan variable by `n + delta`; used to compare a bound at
    /// n against a bound at n+1 in one expression.
    pub fn shift_n(&self, delta: i64) -> BoundExpr {
        if delta == 0 {
            return self.clone();
        }
        let map = |e: &BoundExpr| Box::new(e.shift_n(delta));
        match self {
            BoundExpr::N => BoundExpr::Add(
                Box::new(BoundExpr::N),
                Box::new(BoundExpr::Rat(Rational::from(delta))),
            ),
            BoundExpr::Rat(_) | BoundExpr::PiPoly(_) | BoundExpr::EulerE => self.clone(),
            BoundExpr::Add(a, b) => BoundExpr::Add(map(a), map(b)),
            BoundExpr::Sub(a, b) => BoundExpr::Sub(map(a), map(b)),
            BoundExpr::Mul(a, b) => BoundExpr::Mul(map(a), map(b)),
            BoundExpr::Div(a, b) => BoundExpr::Div(map(a), map(b)),
            BoundExpr::Neg(a) => BoundExpr::Neg(map(a)),
            BoundExpr::Ln(a) => BoundExpr::Ln(map(a)),
            BoundExpr::Exp(a) => BoundExpr::Exp(map(a)),
            BoundExpr::Sqrt(a) => BoundExpr::Sqrt(map(a)),
            BoundExpr::Pow(a, b) => BoundExpr::Pow(map(a), map(b)),
            BoundExpr::PowInt(a, k) => BoundExpr::PowInt(map(a), *k),
        }
    }
}

macro_rules! expr_binop {
    ($Op:ident, $method:ident, $Variant:ident) => {
        impl $Op for BoundExpr {
            type Output = BoundExpr;
            fn $method(self, rhs: BoundExpr) -> BoundExpr {
                BoundExpr::$Variant(Box::new(self), Box::new(rhs))
            }
        }
    };
}

expr_binop!(Add, add, Add);
expr_binop!(Sub, sub, Sub);
expr_binop!(Mul, mul, Mul);
expr_binop!(Div, div, Div);

impl Neg for BoundExpr {
    type Output = BoundExpr;
    fn neg(self) -> BoundExpr {
        BoundExpr::Neg(Box::new(self))
    }
}

pub fn n() -> BoundExpr {
    BoundExpr::N
}

pub fn int(v: i64) -> BoundExpr {
    BoundExpr::Rat(Rational::from(v))
}

pub fn rat(num: i64, den: i64) -> BoundExpr {
    BoundExpr::Rat(Rational::new(num, den))
}

pub fn rational(q: Rational) -> BoundExpr {
    BoundExpr::Rat(q)
}

pub fn pi() -> BoundExpr {
    BoundExpr::PiPoly(PiExpression::pi_pow(1))
}

pub fn pi_poly<I: IntoIterator<Item = (i32, Rational)>>(terms: I) -> BoundExpr {
    BoundExpr::PiPoly(PiExpression::from_terms(terms))
}

pub fn pi_expression(p: PiExpression) -> BoundExpr {
    BoundExpr::PiPoly(p)
}

pub fn euler_e() -> BoundExpr {
    BoundExpr::EulerE
}

pub fn ln(e: BoundExpr) -> BoundExpr {
    BoundExpr::Ln(Box::new(e))
}

pub fn sqrt(e: BoundExpr) -> BoundExpr {
    BoundExpr::Sqrt(Box::new(e))
}

pub fn pow(base: BoundExpr, exponent: BoundExpr) -> BoundExpr {
    BoundExpr::Pow(Box::new(base), Box::new(exponent))
}

pub fn powi(base: BoundExpr, k: i32) -> BoundExpr {
    BoundExpr::PowInt(Box::new(base), k)
}

/// Σ coeff · n^{-power} over the given (power, coefficient) pairs, with
/// exact π-expression coefficients. Zero coefficients are skipped.
pub fn inv_pow_poly<I: IntoIterator<Item = (u32, PiExpression)>>(terms: I) -> BoundExpr {
    let mut acc: Option<BoundExpr> = None;
    for (power, coeff) in terms {
        if coeff.is_zero() {
            continue;
        }
        let term = if power == 0 {
            pi_expression(coeff)
        } else {
            pi_expression(coeff) * powi(n(), -(power as i32))
        };
        acc = Some(match acc {
            None => term,
            Some(prev) => prev + term,
        });
    }
    acc.unwrap_or_else(|| int(0))
}

impl fmt::Display for BoundExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundExpr::Rat(q) => write!(f, "{q}"),
            BoundExpr::PiPoly(p) => {
                if p.num_terms() > 1 {
                    write!(f, "({p})")
                } else {
                    write!(f, "{p}")
                }
            }
            BoundExpr::EulerE => write!(f, "e"),
            BoundExpr::N => write!(f, "n"),
            BoundExpr::Add(a, b) => write!(f, "({a} + {b})"),
            BoundExpr::Sub(a, b) => write!(f, "({a} - {b})"),
            BoundExpr::Mul(a, b) => write!(f, "{a}*{b}"),
            BoundExpr::Div(a, b) => write!(f, "{a}/{b}"),
            BoundExpr::Neg(a) => write!(f, "-{a}"),
            BoundExpr::Ln(a) => write!(f, "ln({a})"),
            BoundExpr::Exp(a) => write!(f, "exp({a})"),
            BoundExpr::Sqrt(a) => write!(f, "sqrt({a})"),
            BoundExpr::Pow(a, b) => write!(f, "({a})^({b})"),
            BoundExpr::PowInt(a, k) => write!(f, "({a})^{k}"),
        }
    }
}
