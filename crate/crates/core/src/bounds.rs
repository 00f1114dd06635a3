//! Closed-form bounds on the ABC index of a tree in terms of its order and
//! Roman domination number, plus the scalar functions used to establish them.
//!
//! Every formula is evaluated in `f64` with the operations in the order they
//! are usually written down; no algebraic simplification is applied.

use serde::Serialize;
use thiserror::Error;

const FRAC_1_SQRT_2: f64 = std::f64::consts::FRAC_1_SQRT_2;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BoundsError {
    #[error("order must be at least 1")]
    ZeroOrder,
    #[error("Roman domination number {gamma_r} is outside [1, {n}]")]
    GammaOutOfRange { n: usize, gamma_r: usize },
    #[error("{function} is defined for {domain}, got {got}")]
    Domain {
        function: &'static str,
        domain: &'static str,
        got: String,
    },
}

/// Lower and upper bound for trees of order `n` with Roman domination
/// number `gamma_r`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundPair {
    pub n: usize,
    pub gamma_r: usize,
    pub f_min: f64,
    pub f_max: f64,
}

impl BoundPair {
    pub fn new(n: usize, gamma_r: usize) -> Result<Self, BoundsError> {
        Ok(BoundPair {
            n,
            gamma_r,
            f_min: f_min(n, gamma_r)?,
            f_max: f_max(n, gamma_r)?,
        })
    }
}

fn check(n: usize, gamma_r: usize) -> Result<(), BoundsError> {
    if n == 0 {
        return Err(BoundsError::ZeroOrder);
    }
    if gamma_r == 0 || gamma_r > n {
        return Err(BoundsError::GammaOutOfRange { n, gamma_r });
    }
    Ok(())
}

/// `(n-1)/sqrt(2) + ceil(2n/3)(3/4 - 1/sqrt(2)) + gamma_r(1/sqrt(2) - 3/4)`
pub fn f_min(n: usize, gamma_r: usize) -> Result<f64, BoundsError> {
    check(n, gamma_r)?;
    let ceil = (2 * n).div_ceil(3) as f64;
    let (n, g) = (n as f64, gamma_r as f64);
    Ok(FRAC_1_SQRT_2 * (n - 1.0) + ceil * (0.75 - FRAC_1_SQRT_2) + g * (FRAC_1_SQRT_2 - 0.75))
}

/// `sqrt(n - gamma_r + 1) sqrt(n - gamma_r) - (gamma_r - 2)(1/2 - 3/sqrt(5))`
pub fn f_max(n: usize, gamma_r: usize) -> Result<f64, BoundsError> {
    check(n, gamma_r)?;
    let (n, g) = (n as f64, gamma_r as f64);
    Ok((n - g + 1.0).sqrt() * (n - g).sqrt() - (g - 2.0) * (0.5 - 3.0 / 5f64.sqrt()))
}

fn domain(function: &'static str, domain: &'static str, got: String) -> BoundsError {
    BoundsError::Domain {
        function,
        domain,
        got,
    }
}

/// `(a-1) sqrt((a-1)/a) - (a-2) sqrt((a-2)/(a-1))` for `a >= 3`.
pub fn lemma1_m(a: f64) -> Result<f64, BoundsError> {
    if !(a >= 3.0) || !a.is_finite() {
        return Err(domain("lemma1_m", "a >= 3", a.to_string()));
    }
    Ok((a - 1.0) * ((a - 1.0) / a).sqrt() - (a - 2.0) * ((a - 2.0) / (a - 1.0)).sqrt())
}

/// `sqrt((a+b-2)/(ab)) - sqrt((a+b-3)/((a-1)b))` for `a >= 3`, `b >= 2`.
pub fn lemma2_q(a: f64, b: f64) -> Result<f64, BoundsError> {
    if !(a >= 3.0 && b >= 2.0) || !a.is_finite() || !b.is_finite() {
        return Err(domain("lemma2_q", "a >= 3, b >= 2", format!("({a}, {b})")));
    }
    Ok(((a + b - 2.0) / (a * b)).sqrt() - ((a + b - 3.0) / ((a - 1.0) * b)).sqrt())
}

/// `lemma1_m(a) + lemma2_q(a, b)`.
pub fn lemma3_xi(a: f64, b: f64) -> Result<f64, BoundsError> {
    Ok(lemma1_m(a)? + lemma2_q(a, b)?)
}

/// `sqrt(t) sqrt(t-1) - sqrt(t+1) sqrt(t)` for `t >= 1`.
///
/// The two-variable form in `a` and `b` only depends on `t = a - b`.
pub fn lemma5_p(t: f64) -> Result<f64, BoundsError> {
    if !(t >= 1.0) || !t.is_finite() {
        return Err(domain("lemma5_p", "t >= 1", t.to_string()));
    }
    Ok((t * (t - 1.0)).sqrt() - (t * (t + 1.0)).sqrt())
}

/// `sqrt(t-1) sqrt(t-2) - sqrt(t+1) sqrt(t)` for `t >= 2`, again with
/// `t = a - b`.
pub fn lemma6_m2(t: f64) -> Result<f64, BoundsError> {
    if !(t >= 2.0) || !t.is_finite() {
        return Err(domain("lemma6_m2", "t >= 2", t.to_string()));
    }
    Ok(((t - 1.0) * (t - 2.0)).sqrt() - (t * (t + 1.0)).sqrt())
}
