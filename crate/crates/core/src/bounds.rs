//! Closed-form runtime bounds of MMAS* on minimum-weight edge cover.
//!
//! Each bound is an upper bound on the expected number of iterations; its
//! reciprocal is the lower bound on the probability that a single
//! construction yields the optimum `S` (`k = |S|` of `m` edges). Every
//! evaluator also returns the natural log so large instances do not overflow.

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BoundsError {
    #[error("invalid bound inputs: {0}")]
    InvalidInputs(String),
    #[error("need eta'_min > eta_1max, got {eta_prime_min} <= {eta_1_max}")]
    PreconditionViolated { eta_prime_min: f64, eta_1_max: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundValue {
    /// May be `inf` when the bound overflows; `log_value` stays finite.
    pub value: f64,
    pub log_value: f64,
}

impl BoundValue {
    fn from_log(log_value: f64) -> Self {
        Self { value: log_value.exp(), log_value }
    }

    /// Keeps a directly computed value unless it left the finite positive range.
    fn from_parts(value: f64, log_value: f64) -> Self {
        if value.is_finite() && value > 0.0 {
            Self { value, log_value }
        } else {
            Self::from_log(log_value)
        }
    }

    /// `1 / value`, i.e. the matching success probability (or time bound).
    pub fn reciprocal(self) -> Self {
        Self::from_parts(1.0 / self.value, -self.log_value)
    }
}

fn check_counts(m: usize, k: usize) -> Result<(), BoundsError> {
    if k > m {
        return Err(BoundsError::InvalidInputs(format!("k={k} exceeds m={m}")));
    }
    Ok(())
}

fn check_positive(name: &str, x: f64) -> Result<(), BoundsError> {
    if !(x > 0.0 && x.is_finite()) {
        return Err(BoundsError::InvalidInputs(format!("{name} must be positive, got {x}")));
    }
    Ok(())
}

fn check_beta(beta: f64) -> Result<(), BoundsError> {
    if !(beta >= 0.0 && beta.is_finite()) {
        return Err(BoundsError::InvalidInputs(format!("beta must be >= 0, got {beta}")));
    }
    Ok(())
}

/// `((m-k)c_n + k)! / (((m-k)c_n)! k!)` for `alpha = 1, beta = 0`.
///
/// With `a = (m-k) c_n` this is `prod_{i=1..k} (a+i)/i`, which equals
/// `Gamma(a+k+1) / (Gamma(a+1) k!)` for non-integral `a` as well.
pub fn theorem1_bound(m: usize, k: usize, c_n: f64) -> Result<BoundValue, BoundsError> {
    check_counts(m, k)?;
    if !(c_n >= 1.0 && c_n.is_finite()) {
        return Err(BoundsError::InvalidInputs(format!("c_n = h/l must be >= 1, got {c_n}")));
    }
    let a = (m - k) as f64 * c_n;
    let factors = (1..=k).map(|i| (a + i as f64) / i as f64);
    Ok(BoundValue::from_parts(factors.clone().product(), factors.map(f64::ln).sum()))
}

/// Worst-case single-construction success probability for `alpha = 1, beta = 0`.
pub fn theorem1_success_probability(m: usize, k: usize, c_n: f64) -> Result<BoundValue, BoundsError> {
    theorem1_bound(m, k, c_n).map(BoundValue::reciprocal)
}

/// `[1 + (eta_max/eta_min)^beta (m-k)]^k`, the reciprocal of `P_MIN`.
pub fn theorem2_bound(
    m: usize,
    k: usize,
    eta_max: f64,
    eta_min: f64,
    beta: f64,
) -> Result<BoundValue, BoundsError> {
    check_counts(m, k)?;
    check_positive("eta_max", eta_max)?;
    check_positive("eta_min", eta_min)?;
    check_beta(beta)?;
    if eta_max < eta_min {
        return Err(BoundsError::InvalidInputs(format!("eta_max {eta_max} < eta_min {eta_min}")));
    }
    let base = 1.0 + (eta_max / eta_min).powf(beta) * (m - k) as f64;
    Ok(BoundValue::from_parts(base.powf(k as f64), k as f64 * base.ln()))
}

pub fn theorem2_pmin(
    m: usize,
    k: usize,
    eta_max: f64,
    eta_min: f64,
    beta: f64,
) -> Result<BoundValue, BoundsError> {
    theorem2_bound(m, k, eta_max, eta_min, beta).map(BoundValue::reciprocal)
}

/// Smallest `beta` with `(eta_1max/eta'_min)^beta (m-k) <= 1/k`:
/// `ln(k(m-k)) / ln(eta'_min / eta_1max)`.
pub fn beta_star(m: usize, k: usize, eta_prime_min: f64, eta_1_max: f64) -> Result<f64, BoundsError> {
    check_positive("eta'_min", eta_prime_min)?;
    check_positive("eta_1max", eta_1_max)?;
    if !(1 <= k && k < m) {
        return Err(BoundsError::InvalidInputs(format!("need 1 <= k < m, got k={k}, m={m}")));
    }
    if eta_prime_min <= eta_1_max {
        return Err(BoundsError::PreconditionViolated { eta_prime_min, eta_1_max });
    }
    Ok(((k * (m - k)) as f64).ln() / (eta_prime_min / eta_1_max).ln())
}

/// `P'_MIN = [1 + (eta_1max/eta'_min)^beta (m-k)]^(-k)`.
pub fn theorem3_pmin(
    m: usize,
    k: usize,
    eta_prime_min: f64,
    eta_1_max: f64,
    beta: f64,
) -> Result<BoundValue, BoundsError> {
    check_counts(m, k)?;
    check_positive("eta'_min", eta_prime_min)?;
    check_positive("eta_1max", eta_1_max)?;
    check_beta(beta)?;
    let base = 1.0 + (eta_1_max / eta_prime_min).powf(beta) * (m - k) as f64;
    Ok(BoundValue::from_parts(base.powf(-(k as f64)), -(k as f64) * base.ln()))
}
