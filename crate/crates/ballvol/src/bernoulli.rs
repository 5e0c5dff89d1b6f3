//! Bernoulli numbers and polynomials over exact rationals.
//!
//! Convention: B_1 = -1/2 (generating function t/(e^t - 1)). The downstream
//! coefficient formulas only use B_{2j} and polynomial values, both of which
//! are convention-stable, but fixing the convention keeps the reflection and
//! half-argument identities exactly testable.

use std::sync::Mutex;

use crate::exact::{binomial, Rational};

/// Growable caches for B_0..B_j and for the monomial coefficients of B_t(x).
struct BernoulliCache {
    numbers: Vec<Rational>,
    // poly_coeffs[t][i] is the coefficient of x^i in B_t(x).
    poly_coeffs: Vec<Vec<Rational>>,
}

static CACHE: Mutex<BernoulliCache> = Mutex::new(BernoulliCache {
    numbers: Vec::new(),
    poly_coeffs: Vec::new(),
});

/// Exact Bernoulli number B_j.
pub fn bernoulli_number(j: u32) -> Rational {
    let mut cache = CACHE.lock().unwrap();
    extend_numbers(&mut cache, j);
    cache.numbers[j as usize].clone()
}

fn extend_numbers(cache: &mut BernoulliCache, j: u32) {
    if cache.numbers.is_empty() {
        cache.numbers.push(Rational::one());
    }
    // Defining recurrence: sum_{k=0}^{m} C(m+1, k) B_k = 0 for m >= 1.
    while cache.numbers.len() <= j as usize {
        let m = cache.numbers.len() as u32;
        let mut sum = Rational::zero();
        for (k, b) in cache.numbers.iter().enumerate() {
            sum += binomial(m + 1, k as u32) * b;
        }
        let neg_inv = Rational::new(-1, (m + 1) as i64);
        cache.numbers.push(sum * neg_inv);
    }
}

/// Monomial coefficients of B_t(x) = sum_k C(t, k) B_k x^{t-k}, indexed by
/// the power of x.
pub fn bernoulli_poly_coeffs(t: u32) -> Vec<Rational> {
    let mut cache = CACHE.lock().unwrap();
    extend_numbers(&mut cache, t);
    while cache.poly_coeffs.len() <= t as usize {
        let deg = cache.poly_coeffs.len() as u32;
        let mut coeffs = vec![Rational::zero(); deg as usize + 1];
        for k in 0..=deg {
            let c = binomial(deg, k) * &cache.numbers[k as usize];
            coeffs[(deg - k) as usize] = c;
        }
        cache.poly_coeffs.push(coeffs);
    }
    cache.poly_coeffs[t as usize].clone()
}

/// Exact B_t(x) by Horner evaluation of the cached coefficients.
pub fn bernoulli_poly_eval(t: u32, x: &Rational) -> Rational {
    let coeffs = bernoulli_poly_coeffs(t);
    let mut acc = Rational::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x.clone() + c;
    }
    acc
}

/// Checks the half-argument identity B_t(1/2) = (2^{1-t} - 1) B_t exactly.
pub fn half_argument_check(t: u32) -> bool {
    let lhs = bernoulli_poly_eval(t, &Rational::new(1, 2));
    let two_pow = Rational::from(2) * Rational::new(1, 2).pow(t as i32).unwrap();
    let rhs = (two_pow - Rational::one()) * bernoulli_number(t);
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ExactError;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    /// Independent oracle: B_j from the reciprocal of the series
    /// (e^t - 1)/t = sum t^k/(k+1)!, i.e. t/(e^t - 1) = sum B_j t^j / j!.
    /// Uses plain power-series inversion, not the defining recurrence.
    fn bernoulli_oracle(max_j: usize) -> Vec<Rational> {
        let mut denom = Vec::with_capacity(max_j + 1);
        let mut fact = Rational::one();
        for k in 0..=max_j {
            fact = fact * Rational::from((k + 1) as i64);
            denom.push(fact.recip().unwrap()); // 1/(k+1)!
        }
        // Invert: sum inv_k t^k with denom_0 = 1.
        let mut inv = vec![Rational::one()];
        for j in 1..=max_j {
            let mut s = Rational::zero();
            for k in 1..=j {
                s += &denom[k] * &inv[j - k];
            }
            inv.push(-s);
        }
        // B_j = inv_j * j!
        let mut fact = Rational::one();
        inv.into_iter()
            .enumerate()
            .map(|(j, c)| {
                if j > 0 {
                    fact = fact.clone() * Rational::from(j as i64);
                }
                c * fact.clone()
            })
            .collect()
    }

    #[test]
    fn numbers_match_series_inversion_oracle() {
        let oracle = bernoulli_oracle(24);
        for (j, expect) in oracle.iter().enumerate() {
            assert_eq!(&bernoulli_number(j as u32), expect, "B_{j}");
        }
    }

    #[test]
    fn known_values() {
        assert_eq!(bernoulli_number(0), Rational::one());
        assert_eq!(bernoulli_number(1), r(-1, 2));
        assert_eq!(bernoulli_number(2), r(1, 6));
        assert_eq!(bernoulli_number(10), r(5, 66));
        // 2^8 B_10 / (5*9) = 128/297, the b_5 tail constant downstream.
        let b5 = r(256, 1) * bernoulli_number(10) / r(45, 1);
        assert_eq!(b5, r(128, 297));
    }

    #[test]
    fn odd_numbers_vanish() {
        for k in 1..=12u32 {
            assert!(bernoulli_number(2 * k + 1).is_zero(), "B_{}", 2 * k + 1);
        }
    }

    #[test]
    fn poly_eval_examples() {
        assert_eq!(bernoulli_poly_eval(1, &r(1, 2)), Rational::zero());
        assert_eq!(bernoulli_poly_eval(2, &r(3, 2)), r(11, 12));
        assert_eq!(bernoulli_poly_eval(3, &r(3, 2)), r(3, 4));
        assert_eq!(bernoulli_poly_eval(10, &r(1, 2)), r(-2555, 33792));
    }

    #[test]
    fn poly_at_zero_is_number() {
        for t in 0..=20u32 {
            assert_eq!(bernoulli_poly_eval(t, &Rational::zero()), bernoulli_number(t));
        }
    }

    #[test]
    fn reflection_and_half_argument_identities() {
        for t in 0..=24u32 {
            let at_one = bernoulli_poly_eval(t, &Rational::one());
            let expect = if t % 2 == 0 {
                bernoulli_number(t)
            } else {
                -bernoulli_number(t)
            };
            assert_eq!(at_one, expect, "B_{t}(1) = (-1)^{t} B_{t}");
            assert!(half_argument_check(t), "half-argument identity at t={t}");
        }
    }

    #[test]
    fn odd_index_values_at_half_and_one_vanish() {
        // For even j >= 2: B_{j+1}(1/2) = B_{j+1}(1) = 0, the parity source
        // of the vanishing even-index mu coefficients.
        for j in (2..=12u32).step_by(2) {
            assert!(bernoulli_poly_eval(j + 1, &r(1, 2)).is_zero());
            assert!(bernoulli_poly_eval(j + 1, &Rational::one()).is_zero());
        }
    }

    #[test]
    fn forward_difference() {
        // B_t(x+1) - B_t(x) = t x^{t-1} on a grid of rational x.
        let xs: Vec<Rational> = (-6..=6)
            .flat_map(|n| [r(n, 1), r(n, 2), r(2 * n + 1, 3)])
            .collect();
        for t in 1..=20u32 {
            for x in &xs {
                let lhs = bernoulli_poly_eval(t, &(x + &Rational::one()))
                    - bernoulli_poly_eval(t, x);
                let rhs = Rational::from(t as i64)
                    * x.pow(t as i32 - 1).unwrap_or_else(|_| Rational::one());
                if x.is_zero() && t == 1 {
                    // 0^0 = 1 by the empty-product convention used here.
                    assert_eq!(lhs, Rational::one());
                } else if x.is_zero() && t > 1 {
                    assert_eq!(lhs, Rational::zero());
                } else {
                    assert_eq!(lhs, rhs, "t={t}, x={x}");
                }
            }
        }
    }

    #[test]
    fn zero_pow_negative_is_error() {
        assert_eq!(Rational::zero().pow(-1), Err(ExactError::DivisionByZero));
    }
}
