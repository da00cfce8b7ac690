//! Numeric checks of the substitutions that carry the improved statements
//! back to the original ones.
//!
//! With `μ = δ − λ + 1` the minimum degree condition at λ,
//! `δ ≥ (n+2)/(δ−μ+2) + δ−μ−1`, is the same condition at μ,
//! `δ ≥ (n+2)/(μ+1) + μ−2`: both say `(μ+1)(δ−μ+2) ≥ n+2`.
//! With `μ = δ − λ + 2` the circumference bounds agree:
//! `λ(δ−λ+2) = μ(δ−μ+2)`.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdentityError {
    #[error("μ = {mu} must satisfy 1 ≤ μ ≤ δ = {delta}")]
    MuOutOfRange { mu: i64, delta: i64 },
    #[error("n must be at least 1")]
    OrderZero,
    #[error("μ = {mu} does not equal δ − λ + 2 = {expected}, or is below 2")]
    InconsistentMu { mu: i64, expected: i64 },
}

/// Whether `δ ≥ (n+2)/(δ−μ+2) + δ−μ−1` and `δ ≥ (n+2)/(μ+1) + μ−2` agree,
/// evaluated exactly.
pub fn check_reduction_identity(n: i64, delta: i64, mu: i64) -> Result<bool, IdentityError> {
    if n < 1 {
        return Err(IdentityError::OrderZero);
    }
    if mu < 1 || mu > delta {
        return Err(IdentityError::MuOutOfRange { mu, delta });
    }
    let d = Ratio::from_integer(delta);
    let at_lambda = d >= Ratio::new(n + 2, delta - mu + 2) + (delta - mu - 1);
    let at_mu = d >= Ratio::new(n + 2, mu + 1) + (mu - 2);
    Ok(at_lambda == at_mu)
}

/// Whether `λ(δ−λ+2) = μ(δ−μ+2)` for `μ = δ − λ + 2 ≥ 2`.
pub fn check_reduction_identity_thm8(delta: i64, lambda: i64, mu: i64) -> Result<bool, IdentityError> {
    let expected = delta - lambda + 2;
    if mu != expected || mu < 2 {
        return Err(IdentityError::InconsistentMu { mu, expected });
    }
    Ok(lambda * (delta - lambda + 2) == mu * (delta - mu + 2))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentitySweep {
    pub degree_cases: usize,
    pub degree_failures: Vec<(i64, i64, i64)>,
    pub bound_cases: usize,
    pub bound_failures: Vec<(i64, i64)>,
}

impl IdentitySweep {
    pub fn all_hold(&self) -> bool {
        self.degree_failures.is_empty() && self.bound_failures.is_empty()
    }
}

/// Sweeps `1 ≤ n ≤ n_max`, `1 ≤ δ ≤ delta_max` with `1 ≤ μ ≤ ⌊(δ+1)/2⌋`
/// for the degree identity, and `⌊(δ+3)/2⌋ ≤ λ ≤ δ` for the bound identity.
pub fn sweep_identities(delta_max: i64, n_max: i64) -> IdentitySweep {
    let mut sweep = IdentitySweep {
        degree_cases: 0,
        degree_failures: Vec::new(),
        bound_cases: 0,
        bound_failures: Vec::new(),
    };
    for delta in 1..=delta_max {
        for mu in 1..=(delta + 1) / 2 {
            for n in 1..=n_max {
                sweep.degree_cases += 1;
                if !check_reduction_identity(n, delta, mu).expect("in range") {
                    sweep.degree_failures.push((n, delta, mu));
                }
            }
        }
        for lambda in (delta + 3) / 2..=delta {
            sweep.bound_cases += 1;
            if !check_reduction_identity_thm8(delta, lambda, delta - lambda + 2).expect("in range") {
                sweep.bound_failures.push((delta, lambda));
            }
        }
    }
    sweep
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_cases() {
        assert_eq!(check_reduction_identity(10, 4, 2), Ok(true));
        assert_eq!(check_reduction_identity(2, 1, 1), Ok(true));
        assert_eq!(check_reduction_identity_thm8(5, 4, 3), Ok(true));
        // λ = μ at δ = 2λ − 2.
        assert_eq!(check_reduction_identity_thm8(6, 4, 4), Ok(true));
    }

    #[test]
    fn range_errors() {
        assert_eq!(check_reduction_identity(5, 3, 0), Err(IdentityError::MuOutOfRange { mu: 0, delta: 3 }));
        assert_eq!(check_reduction_identity(5, 3, 4), Err(IdentityError::MuOutOfRange { mu: 4, delta: 3 }));
        assert_eq!(check_reduction_identity(0, 3, 1), Err(IdentityError::OrderZero));
        assert_eq!(
            check_reduction_identity_thm8(5, 4, 2),
            Err(IdentityError::InconsistentMu { mu: 2, expected: 3 })
        );
        assert!(check_reduction_identity_thm8(5, 6, 1).is_err());
    }

    #[test]
    fn both_sides_reduce_to_the_product_form() {
        for delta in 1..=12i64 {
            for mu in 1..=delta {
                for n in 1..=60i64 {
                    let product = (mu + 1) * (delta - mu + 2) >= n + 2;
                    let d = Ratio::from_integer(delta);
                    assert_eq!(d >= Ratio::new(n + 2, mu + 1) + (mu - 2), product, "n={n} δ={delta} μ={mu}");
                }
            }
        }
    }
}
