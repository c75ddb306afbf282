use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2};

use super::quadrature::integrate_adaptive;
use crate::{Error, Result};

/// Absolute tolerance used when a modulus caches its own quarter period.
pub const QUARTER_PERIOD_TOL: f64 = 1e-13;

/// Modulus `k ∈ (0, 1)` with its complementary modulus and quarter period `K(k)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipticModulus {
    k: f64,
    kprime: f64,
    quarter_period: f64,
}

impl EllipticModulus {
    pub fn new(k: f64) -> Result<Self> {
        check_open_modulus(k)?;
        // (1-k)(1+k) keeps k' accurate as k approaches 1.
        let kprime = ((1.0 - k) * (1.0 + k)).sqrt();
        Self::with_complement(k, kprime)
    }

    /// The self-complementary modulus `k = k' = 1/√2`.
    ///
    /// Both values are the same correctly rounded constant, so `k² + k'² = 1`
    /// holds to the last bit instead of drifting through a decimal literal.
    pub fn lemniscatic() -> Self {
        Self::with_complement(FRAC_1_SQRT_2, FRAC_1_SQRT_2)
            .expect("quarter period of 1/sqrt(2) converges")
    }

    fn with_complement(k: f64, kprime: f64) -> Result<Self> {
        let quarter_period = quarter_period_integral(kprime, QUARTER_PERIOD_TOL)?;
        Ok(Self {
            k,
            kprime,
            quarter_period,
        })
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn kprime(&self) -> f64 {
        self.kprime
    }

    /// `K(k)`.
    pub fn quarter_period(&self) -> f64 {
        self.quarter_period
    }

    /// `4K(k)`, the real period of `sn` and `cn`.
    pub fn period(&self) -> f64 {
        4.0 * self.quarter_period
    }
}

pub(crate) fn check_open_modulus(k: f64) -> Result<()> {
    if k.is_finite() && k > 0.0 && k < 1.0 {
        Ok(())
    } else {
        Err(Error::domain(format!("modulus must lie in (0, 1), got {k}")))
    }
}

/// Complete elliptic integral of the first kind,
/// `K(k) = ∫₀¹ dt / √((1 − t²)(1 − k²t²))`.
///
/// The substitution `t = sin θ` removes the endpoint singularity, leaving the
/// smooth integrand `1/√(1 − k² sin² θ)` on `[0, π/2]`.
pub fn complete_quarter_period(k: f64, tol: f64) -> Result<f64> {
    check_open_modulus(k)?;
    quarter_period_integral(((1.0 - k) * (1.0 + k)).sqrt(), tol)
}

fn quarter_period_integral(kprime: f64, tol: f64) -> Result<f64> {
    if !(tol > 0.0) {
        return Err(Error::domain(format!("tolerance must be positive, got {tol}")));
    }
    let kp2 = kprime * kprime;
    // 1 − k² sin²θ written as cos²θ + k'² sin²θ: no cancellation as k → 1.
    let r = integrate_adaptive(
        |theta: f64| {
            let (s, c) = theta.sin_cos();
            1.0 / (c * c + kp2 * s * s).sqrt()
        },
        0.0,
        FRAC_PI_2,
        tol,
    )?;
    Ok(r.value)
}
