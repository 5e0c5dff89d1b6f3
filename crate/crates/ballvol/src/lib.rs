//! Exact unit-ball volumes, the asymptotic coefficient families attached to
//! them, and a certified-interval harness for the two-sided inequalities
//! built from both.
//!
//! Layout:
//! - [`exact`]: big rationals and π-expressions, the exact substrate.
//! - [`bernoulli`]: Bernoulli numbers/polynomials over exact rationals.
//! - [`ball`]: exact Ω_n and the studied ratios.
//! - [`coeff`]: every coefficient family, generated from exact arithmetic.
//! - [`bounds`]: certified interval evaluation, target quantities, and the
//!   declarative bound catalog.
//! - [`verify`]: scans, monotonicity and decay-order checks, sharpness
//!   comparisons, report serialization.
//! - [`cli`]: command-line front end.

pub mod ball;
pub mod bounds;
pub mod bernoulli;
pub mod coeff;
pub mod exact;
