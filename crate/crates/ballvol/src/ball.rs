//! Exact volumes of unit balls and the ratios built from them.
//!
//! The n-ball volume is a rational multiple of π^⌊n/2⌋, so every quantity
//! here stays exact: even n gives π^m/m!, odd n = 2m+1 gives
//! π^m 4^{m+1} (m+1)!/(2m+2)! through the half-integer Gamma closed form.

use std::sync::Mutex;

use crate::exact::{PiExpression, Rational};

/// Exact volume of the unit ball in dimension `n`: a single monomial
/// q·π^⌊n/2⌋ with q > 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaValue {
    pub n: u64,
    pub value: PiExpression,
}

impl OmegaValue {
    /// The rational factor q and the π exponent ⌊n/2⌋.
    pub fn parts(&self) -> (Rational, i32) {
        let (k, q) = self
            .value
            .as_monomial()
            .expect("ball volume is a single pi-monomial");
        (q.clone(), k)
    }
}

// Memoized rational factors; index n holds q with Omega_n = q * pi^(n/2 floor).
static FACTORS: Mutex<Vec<Rational>> = Mutex::new(Vec::new());

fn factor(n: u64) -> Rational {
    let mut cache = FACTORS.lock().unwrap();
    if cache.is_empty() {
        cache.push(Rational::one()); // Omega_0 = 1
        cache.push(Rational::from(2)); // Omega_1 = 2
    }
    // Omega_n = Omega_{n-2} * 2*pi/n; the pi factor is carried by the
    // exponent, so the rational part obeys q_n = q_{n-2} * 2/n.
    while cache.len() <= n as usize {
        let m = cache.len();
        let prev = cache[m - 2].clone();
        cache.push(prev * Rational::new(2, m as i64));
    }
    cache[n as usize].clone()
}

/// Exact Ω_n. `omega_exact(0)` is 1 by the Γ(1) = 1 convention.
pub fn omega_exact(n: u64) -> OmegaValue {
    let q = factor(n);
    let k = (n / 2) as i32;
    OmegaValue {
        n,
        value: PiExpression::monomial(q, k),
    }
}

/// Exact Ω_{n-1}/Ω_n, a single π-monomial with exponent 0 (n odd) or
/// -1 (n even). Requires `n >= 1`.
pub fn ratio_exact(n: u64) -> PiExpression {
    assert!(n >= 1, "ratio needs n >= 1");
    let num = omega_exact(n - 1).value;
    let den = omega_exact(n).value;
    num.div_monomial(&den).expect("ball volume is nonzero")
}

/// Exact Ω_n²/(Ω_{n-1}Ω_{n+1}), a single π-monomial with exponent +1
/// (n even) or -1 (n odd). Requires `n >= 1`.
pub fn geo_ratio_exact(n: u64) -> PiExpression {
    assert!(n >= 1, "geometric ratio needs n >= 1");
    let num = {
        let v = omega_exact(n).value;
        &v * &v
    };
    let den = &omega_exact(n - 1).value * &omega_exact(n + 1).value;
    num.div_monomial(&den).expect("ball volume is nonzero")
}

/// Exact numerator Ω_n and denominator Ω_{n-1} + Ω_{n+1} of the sum ratio.
/// The denominator has at most two π-terms. Requires `n >= 1`.
pub fn sum_ratio_exact(n: u64) -> (PiExpression, PiExpression) {
    assert!(n >= 1, "sum ratio needs n >= 1");
    let num = omega_exact(n).value;
    let den = &omega_exact(n - 1).value + &omega_exact(n + 1).value;
    (num, den)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn omega_known_values() {
        assert_eq!(omega_exact(0).value, PiExpression::from(1));
        assert_eq!(omega_exact(1).value, PiExpression::from(2));
        assert_eq!(omega_exact(2).value, PiExpression::pi_pow(1));
        assert_eq!(omega_exact(3).value, PiExpression::monomial(r(4, 3), 1));
        assert_eq!(omega_exact(4).value, PiExpression::monomial(r(1, 2), 2));
        assert_eq!(omega_exact(5).value, PiExpression::monomial(r(8, 15), 2));
        assert_eq!(omega_exact(6).value, PiExpression::monomial(r(1, 6), 3));
        assert_eq!(omega_exact(7).value, PiExpression::monomial(r(16, 105), 3));
    }

    #[test]
    fn omega_matches_half_integer_gamma_closed_form() {
        // Even n = 2m: pi^m/m!. Odd n = 2m+1: pi^m 4^{m+1}(m+1)!/(2m+2)!.
        fn fact(n: u64) -> Rational {
            (1..=n).fold(Rational::one(), |acc, i| acc * Rational::from(i))
        }
        for m in 0..=15u64 {
            let (q_even, k_even) = omega_exact(2 * m).parts();
            assert_eq!(q_even, fact(m).recip().unwrap());
            assert_eq!(k_even, m as i32);

            let (q_odd, k_odd) = omega_exact(2 * m + 1).parts();
            let expect = Rational::from(4u64).pow(m as i32 + 1).unwrap() * fact(m + 1)
                / fact(2 * m + 2);
            assert_eq!(q_odd, expect);
            assert_eq!(k_odd, m as i32);
        }
    }

    #[test]
    fn recurrence_holds_up_to_1000() {
        for n in 2..=1000u64 {
            let lhs = omega_exact(n).value;
            let rhs = omega_exact(n - 2)
                .value
                .scale(&r(2, n as i64))
                .mul_pi_pow(1);
            assert_eq!(lhs, rhs, "n={n}");
        }
    }

    #[test]
    fn factors_positive_and_exponent_is_half_n() {
        for n in 0..=64u64 {
            let (q, k) = omega_exact(n).parts();
            assert!(q.is_positive());
            assert_eq!(k, (n / 2) as i32);
        }
    }

    #[test]
    fn ratio_examples() {
        assert_eq!(ratio_exact(1), PiExpression::from(r(1, 2)));
        assert_eq!(ratio_exact(3), PiExpression::from(r(3, 4)));
        assert_eq!(ratio_exact(4), PiExpression::monomial(r(8, 3), -1));
        for n in 1..=50u64 {
            let (k, _) = ratio_exact(n).as_monomial().map(|(k, q)| (k, q.clone())).unwrap();
            assert_eq!(k, if n % 2 == 1 { 0 } else { -1 }, "n={n}");
        }
    }

    #[test]
    fn geo_ratio_examples_by_direct_substitution() {
        assert_eq!(geo_ratio_exact(1), PiExpression::monomial(r(4, 1), -1));
        assert_eq!(geo_ratio_exact(2), PiExpression::monomial(r(3, 8), 1));
        assert_eq!(geo_ratio_exact(3), PiExpression::monomial(r(32, 9), -1));
        assert_eq!(geo_ratio_exact(6), PiExpression::monomial(r(175, 512), 1));
        for n in 1..=50u64 {
            let direct = {
                let on = omega_exact(n).value;
                (&on * &on)
                    .div_monomial(&(&omega_exact(n - 1).value * &omega_exact(n + 1).value))
                    .unwrap()
            };
            assert_eq!(geo_ratio_exact(n), direct);
            let (k, _) = direct.as_monomial().map(|(k, q)| (k, q.clone())).unwrap();
            assert_eq!(k, if n % 2 == 0 { 1 } else { -1 });
        }
    }

    #[test]
    fn sum_ratio_examples() {
        let (num, den) = sum_ratio_exact(1);
        assert_eq!(num, PiExpression::from(2));
        assert_eq!(den, PiExpression::from_terms([(0, r(1, 1)), (1, r(1, 1))]));

        let (num, den) = sum_ratio_exact(2);
        assert_eq!(num, PiExpression::pi_pow(1));
        assert_eq!(den, PiExpression::from_terms([(0, r(2, 1)), (1, r(4, 3))]));
        assert!(den.num_terms() <= 2);
    }

    #[test]
    fn sum_ratio_at_2_equals_alzer_equality_point() {
        // Omega_2/(Omega_1 + Omega_3) = pi/(2 + 4pi/3) = 3pi/(6 + 4pi),
        // which is the Alzer lower constant 3*pi*sqrt(2)/(4pi+6) over sqrt(2).
        let (num, den) = sum_ratio_exact(2);
        let three_pi = PiExpression::monomial(r(3, 1), 1);
        let six_plus_4pi = PiExpression::from_terms([(0, r(6, 1)), (1, r(4, 1))]);
        // Cross-multiplied identity: num * (6 + 4pi) = 3pi * den.
        assert_eq!(&num * &six_plus_4pi, &three_pi * &den);
    }
}
