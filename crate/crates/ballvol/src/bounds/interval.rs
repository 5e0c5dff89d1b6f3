//! Certified interval arithmetic over multiprecision floats.
//!
//! Every operation rounds the lower endpoint toward -∞ and the upper toward
//! +∞, so the true real value of the represented expression always lies in
//! [lo, hi]. Exact rationals enter through directed conversion, never through
//! a decimal detour, and π/e come from the engine's certified constants.

use rug::float::{Constant, Round};
use rug::ops::{AddAssignRound, MulAssignRound, PowAssignRound, SubAssignRound};
use rug::Float;

use crate::exact::{PiExpression, Rational};

use super::EvalError;

/// Certified enclosure [lo, hi] of a real value at a stated precision.
#[derive(Debug, Clone)]
pub struct PrecInterval {
    lo: Float,
    hi: Float,
    prec_bits: u32,
}

fn dir(mut f: Float, op: impl FnOnce(&mut Float, Round)) -> Float {
    op(&mut f, Round::Down);
    f
}

impl PrecInterval {
    pub fn prec_bits(&self) -> u32 {
        self.prec_bits
    }

    pub fn lo(&self) -> &Float {
        &self.lo
    }

    pub fn hi(&self) -> &Float {
        &self.hi
    }

    fn make(lo: Float, hi: Float, prec_bits: u32) -> Self {
        debug_assert!(lo <= hi, "inverted interval: [{lo}, {hi}]");
        PrecInterval { lo, hi, prec_bits }
    }

    pub fn from_rational(q: &Rational, prec_bits: u32) -> Self {
        let lo = Float::with_val_round(prec_bits, q.inner(), Round::Down).0;
        let hi = Float::with_val_round(prec_bits, q.inner(), Round::Up).0;
        Self::make(lo, hi, prec_bits)
    }

    pub fn from_u64(n: u64, prec_bits: u32) -> Self {
        let lo = Float::with_val_round(prec_bits, n, Round::Down).0;
        let hi = Float::with_val_round(prec_bits, n, Round::Up).0;
        Self::make(lo, hi, prec_bits)
    }

    pub fn pi(prec_bits: u32) -> Self {
        let lo = Float::with_val_round(prec_bits, Constant::Pi, Round::Down).0;
        let hi = Float::with_val_round(prec_bits, Constant::Pi, Round::Up).0;
        Self::make(lo, hi, prec_bits)
    }

    /// Euler's number e (not the Euler-Mascheroni constant).
    pub fn euler_e(prec_bits: u32) -> Self {
        let mut lo = Float::with_val(prec_bits, 1);
        lo.exp_round(Round::Down);
        let mut hi = Float::with_val(prec_bits, 1);
        hi.exp_round(Round::Up);
        Self::make(lo, hi, prec_bits)
    }

    /// Enclosure of an exact Σ q·π^k value.
    pub fn from_pi_expression(x: &PiExpression, prec_bits: u32) -> Self {
        let mut acc = Self::from_u64(0, prec_bits);
        let pi = Self::pi(prec_bits);
        for (k, q) in x.terms() {
            let term = Self::from_rational(q, prec_bits).mul(&pi.pow_int(k).expect("pi > 0"));
            acc = acc.add(&term);
        }
        acc
    }

    /// ln of a strictly positive rational, computed as ln(num) - ln(den).
    pub fn ln_of_rational(q: &Rational, prec_bits: u32) -> Result<Self, EvalError> {
        if !q.is_positive() {
            return Err(EvalError::LogDomain);
        }
        let ln_dirset = |int: &rug::Integer, round: Round| {
            let mut f = Float::with_val_round(prec_bits, int, round).0;
            f.ln_round(round);
            f
        };
        let num = q.inner().numer();
        let den = q.inner().denom();
        let mut lo = ln_dirset(num, Round::Down);
        lo.sub_assign_round(&ln_dirset(den, Round::Up), Round::Down);
        let mut hi = ln_dirset(num, Round::Up);
        hi.sub_assign_round(&ln_dirset(den, Round::Down), Round::Up);
        Ok(Self::make(lo, hi, prec_bits))
    }

    pub fn contains_zero(&self) -> bool {
        self.lo <= 0 && self.hi >= 0
    }

    pub fn is_strictly_positive(&self) -> bool {
        self.lo > 0
    }

    pub fn is_strictly_negative(&self) -> bool {
        self.hi < 0
    }

    /// Upper bound on the interval width.
    pub fn width(&self) -> Float {
        let mut w = self.hi.clone();
        w.sub_assign_round(&self.lo, Round::Up);
        w
    }

    pub fn midpoint(&self) -> Float {
        let mut m = self.hi.clone();
        m.add_assign_round(&self.lo, Round::Nearest);
        m / 2u32
    }

    /// Largest absolute value attained on the interval.
    pub fn mag(&self) -> Float {
        let a = self.lo.clone().abs();
        let b = self.hi.clone().abs();
        if a > b {
            a
        } else {
            b
        }
    }

    /// True if `self` is contained in `other` (as sets of reals).
    pub fn subset_of(&self, other: &PrecInterval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    pub fn contains_float(&self, x: &Float) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn neg(&self) -> Self {
        Self::make(
            dir(self.hi.clone(), |f, _| *f = -f.clone()),
            -self.lo.clone(),
            self.prec_bits,
        )
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut lo = self.lo.clone();
        lo.add_assign_round(&rhs.lo, Round::Down);
        let mut hi = self.hi.clone();
        hi.add_assign_round(&rhs.hi, Round::Up);
        Self::make(lo, hi, self.prec_bits)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut lo = self.lo.clone();
        lo.sub_assign_round(&rhs.hi, Round::Down);
        let mut hi = self.hi.clone();
        hi.sub_assign_round(&rhs.lo, Round::Up);
        Self::make(lo, hi, self.prec_bits)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let pairs = [
            (&self.lo, &rhs.lo),
            (&self.lo, &rhs.hi),
            (&self.hi, &rhs.lo),
            (&self.hi, &rhs.hi),
        ];
        let mut lo: Option<Float> = None;
        let mut hi: Option<Float> = None;
        for (a, b) in pairs {
            let mut down = a.clone();
            down.mul_assign_round(b, Round::Down);
            let mut up = a.clone();
            up.mul_assign_round(b, Round::Up);
            lo = Some(match lo {
                Some(cur) if cur <= down => cur,
                _ => down,
            });
            hi = Some(match hi {
                Some(cur) if cur >= up => cur,
                _ => up,
            });
        }
        Self::make(lo.unwrap(), hi.unwrap(), self.prec_bits)
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, EvalError> {
        if rhs.lo == 0 && rhs.hi == 0 {
            return Err(EvalError::DivisionByZero);
        }
        if rhs.contains_zero() {
            return Err(EvalError::Indeterminate);
        }
        // Sign-definite divisor: reciprocal is monotone decreasing.
        let mut rlo = rhs.hi.clone();
        rlo.recip_round(Round::Down);
        let mut rhi = rhs.lo.clone();
        rhi.recip_round(Round::Up);
        Ok(self.mul(&Self::make(rlo, rhi, rhs.prec_bits)))
    }

    pub fn ln(&self) -> Result<Self, EvalError> {
        if self.hi <= 0 {
            return Err(EvalError::LogDomain);
        }
        if self.lo <= 0 {
            return Err(EvalError::Indeterminate);
        }
        let mut lo = self.lo.clone();
        lo.ln_round(Round::Down);
        let mut hi = self.hi.clone();
        hi.ln_round(Round::Up);
        Ok(Self::make(lo, hi, self.prec_bits))
    }

    pub fn exp(&self) -> Self {
        let mut lo = self.lo.clone();
        lo.exp_round(Round::Down);
        let mut hi = self.hi.clone();
        hi.exp_round(Round::Up);
        Self::make(lo, hi, self.prec_bits)
    }

    pub fn sqrt(&self) -> Result<Self, EvalError> {
        if self.hi < 0 {
            return Err(EvalError::SqrtDomain);
        }
        if self.lo < 0 {
            return Err(EvalError::Indeterminate);
        }
        let mut lo = self.lo.clone();
        lo.sqrt_round(Round::Down);
        let mut hi = self.hi.clone();
        hi.sqrt_round(Round::Up);
        Ok(Self::make(lo, hi, self.prec_bits))
    }

    /// Integer power. Sign-definite bases use monotonicity; a base enclosure
    /// through zero falls back to repeated interval products for k > 0 and is
    /// indeterminate for k < 0.
    pub fn pow_int(&self, k: i32) -> Result<Self, EvalError> {
        if k == 0 {
            return Ok(Self::from_u64(1, self.prec_bits));
        }
        if self.is_strictly_positive() {
            let map = |f: &Float, round: Round| {
                let mut x = f.clone();
                x.pow_assign_round(k, round);
                x
            };
            let (lo, hi) = if k > 0 {
                (map(&self.lo, Round::Down), map(&self.hi, Round::Up))
            } else {
                (map(&self.hi, Round::Down), map(&self.lo, Round::Up))
            };
            return Ok(Self::make(lo, hi, self.prec_bits));
        }
        if k > 0 {
            let mut acc = Self::from_u64(1, self.prec_bits);
            for _ in 0..k {
                acc = acc.mul(self);
            }
            return Ok(acc);
        }
        if self.is_strictly_negative() {
            let pos = self.neg().pow_int(-k)?;
            let inv = Self::from_u64(1, self.prec_bits).div(&pos)?;
            return if k % 2 == 0 { Ok(inv) } else { Ok(inv.neg()) };
        }
        Err(EvalError::Indeterminate)
    }

    /// General power of a positive base: exp(exponent · ln(base)).
    pub fn pow(&self, exponent: &Self) -> Result<Self, EvalError> {
        Ok(self.ln()?.mul(exponent).exp())
    }

    pub fn abs(&self) -> Self {
        if self.lo >= 0 {
            self.clone()
        } else if self.hi <= 0 {
            self.neg()
        } else {
            Self::make(Float::with_val(self.prec_bits, 0), self.mag(), self.prec_bits)
        }
    }
}

/// Decimal rendering of one float: `digits` significant digits, plain
/// notation near unit scale, scientific otherwise.
pub fn format_float(f: &Float, digits: usize) -> String {
    if f.is_zero() {
        return "0".to_owned();
    }
    if !f.is_finite() {
        return f.to_string();
    }
    let (neg, mantissa, exp) = f.to_sign_string_exp(10, Some(digits.max(1)));
    let exp = exp.unwrap_or(0);
    let sign = if neg { "-" } else { "" };
    let digits_len = mantissa.len() as i32;
    let body = if exp >= 1 && exp <= digits_len.max(1) + 3 {
        // Value = 0.mantissa * 10^exp; place the point after `exp` digits.
        if exp >= digits_len {
            let zeros = "0".repeat((exp - digits_len) as usize);
            format!("{mantissa}{zeros}")
        } else {
            format!("{}.{}", &mantissa[..exp as usize], &mantissa[exp as usize..])
        }
    } else if exp <= 0 && exp > -4 {
        let zeros = "0".repeat((-exp) as usize);
        format!("0.{zeros}{mantissa}")
    } else {
        let head = &mantissa[..1];
        let tail = &mantissa[1..];
        if tail.is_empty() {
            format!("{head}e{}", exp - 1)
        } else {
            format!("{head}.{tail}e{}", exp - 1)
        }
    };
    format!("{sign}{body}")
}

/// Renders an enclosure as a decimal string: the longest prefix (up to
/// `sig` significant digits) on which both endpoints print identically.
/// Falls back to an explicit `0±width` form when the enclosure straddles
/// zero too closely for any digit to be certified.
pub fn render_interval(iv: &PrecInterval, sig: usize) -> String {
    for d in (1..=sig).rev() {
        let a = format_float(iv.lo(), d);
        let b = format_float(iv.hi(), d);
        if a == b {
            return a;
        }
    }
    if iv.contains_zero() {
        format!("0±{}", format_float(&iv.mag(), 2))
    } else {
        // Endpoints agree on sign but on no printed digit: report the order
        // of magnitude honestly rather than a fake midpoint.
        format!(
            "[{};{}]",
            format_float(iv.lo(), 2),
            format_float(iv.hi(), 2)
        )
    }
}
