//! The target quantities the bound catalog brackets, evaluated as certified
//! enclosures of the exact values. Logarithms always go through the
//! ln(q) + k·ln(π) decomposition of the exact π-monomial; no floating-point
//! Gamma evaluation appears anywhere.

use serde::{Deserialize, Serialize};

use crate::ball;
use crate::exact::PiExpression;

use super::interval::PrecInterval;
use super::EvalError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Quantity {
    /// (1/n)·ln Ω_n
    #[serde(rename = "LOG_OMEGA_PER_N")]
    LogOmegaPerN,
    /// (1/n)·ln Ω_n − (1/(n+1))·ln Ω_{n+1}
    #[serde(rename = "LOG_OMEGA_DIFF")]
    LogOmegaDiff,
    /// ln(Ω_{n−1}/Ω_n)
    #[serde(rename = "LOG_RATIO")]
    LogRatio,
    /// Ω_{n−1}/Ω_n
    #[serde(rename = "RATIO")]
    Ratio,
    /// Ω_n/(Ω_{n−1} + Ω_{n+1})
    #[serde(rename = "SUM_RATIO")]
    SumRatio,
    /// Ω_n²/(Ω_{n−1}Ω_{n+1})
    #[serde(rename = "GEO_RATIO")]
    GeoRatio,
    /// ln(Ω_n²/(Ω_{n−1}Ω_{n+1}))
    #[serde(rename = "GEO_LOG")]
    GeoLog,
}

impl std::fmt::Display for Quantity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Quantity::LogOmegaPerN => "LOG_OMEGA_PER_N",
            Quantity::LogOmegaDiff => "LOG_OMEGA_DIFF",
            Quantity::LogRatio => "LOG_RATIO",
            Quantity::Ratio => "RATIO",
            Quantity::SumRatio => "SUM_RATIO",
            Quantity::GeoRatio => "GEO_RATIO",
            Quantity::GeoLog => "GEO_LOG",
        };
        f.write_str(s)
    }
}

/// ln of a single positive π-monomial q·π^k, decomposed exactly.
pub fn ln_monomial(value: &PiExpression, prec_bits: u32) -> Result<PrecInterval, EvalError> {
    let (k, q) = value.as_monomial().ok_or(EvalError::LogDomain)?;
    let ln_q = PrecInterval::ln_of_rational(q, prec_bits)?;
    if k == 0 {
        return Ok(ln_q);
    }
    let ln_pi = PrecInterval::pi(prec_bits).ln()?;
    let k_iv = PrecInterval::from_rational(&crate::exact::Rational::from(k as i64), prec_bits);
    Ok(ln_q.add(&ln_pi.mul(&k_iv)))
}

fn ln_omega(n: u64, prec_bits: u32) -> Result<PrecInterval, EvalError> {
    ln_monomial(&ball::omega_exact(n).value, prec_bits)
}

fn log_omega_per_n(n: u64, prec_bits: u32) -> Result<PrecInterval, EvalError> {
    ln_omega(n, prec_bits)?.div(&PrecInterval::from_u64(n, prec_bits))
}

/// Certified enclosure of the exact target quantity at dimension `n`.
/// Every quantity needs `n >= 1` so that Ω_{n-1} exists.
pub fn target_quantity(q: Quantity, n: u64, prec_bits: u32) -> Result<PrecInterval, EvalError> {
    assert!(n >= 1, "target quantities need n >= 1");
    match q {
        Quantity::LogOmegaPerN => log_omega_per_n(n, prec_bits),
        Quantity::LogOmegaDiff => {
            Ok(log_omega_per_n(n, prec_bits)?.sub(&log_omega_per_n(n + 1, prec_bits)?))
        }
        Quantity::LogRatio => ln_monomial(&ball::ratio_exact(n), prec_bits),
        Quantity::Ratio => Ok(PrecInterval::from_pi_expression(
            &ball::ratio_exact(n),
            prec_bits,
        )),
        Quantity::SumRatio => {
            let (num, den) = ball::sum_ratio_exact(n);
            PrecInterval::from_pi_expression(&num, prec_bits)
                .div(&PrecInterval::from_pi_expression(&den, prec_bits))
        }
        Quantity::GeoRatio => Ok(PrecInterval::from_pi_expression(
            &ball::geo_ratio_exact(n),
            prec_bits,
        )),
        Quantity::GeoLog => ln_monomial(&ball::geo_ratio_exact(n), prec_bits),
    }
}
