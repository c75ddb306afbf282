use crate::catalog::{lambda_profile, ELLIPTIC_EDGE};
use crate::elliptic::EllipticModulus;
use crate::{Error, Result};

/// `|λ″ + 2λ³|` for `λ = (a/2)·sd(at, 1/√2)`, with `λ″` by a three-point central difference.
pub fn ode_residual(a: f64, t: f64, step: f64) -> Result<f64> {
    if !(a > 0.0 && a.is_finite()) {
        return Err(Error::parameter(format!("a must be positive, got {a}")));
    }
    if !(step > 0.0 && step.is_finite()) {
        return Err(Error::domain(format!("step must be positive, got {step}")));
    }
    let two_k = 2.0 * EllipticModulus::lemniscatic().quarter_period();
    let (lo, hi) = (ELLIPTIC_EDGE / a, (two_k - ELLIPTIC_EDGE) / a);
    if !(t - step > lo && t + step < hi) {
        return Err(Error::domain(format!(
            "stencil around t = {t} leaves ({lo}, {hi}), where sd is kept away from its zeros"
        )));
    }
    ode_residual_of(t, step, |s| lambda_profile(a, s))
}

/// `|f″ + 2f³|` for an arbitrary candidate profile.
pub fn ode_residual_of<F>(t: f64, step: f64, f: F) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    let (m, c, p) = (f(t - step)?, f(t)?, f(t + step)?);
    let second = (p - 2.0 * c + m) / (step * step);
    Ok((second + 2.0 * c * c * c).abs())
}
