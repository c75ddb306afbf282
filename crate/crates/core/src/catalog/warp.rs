//! Warped-product form `dt² + f(t)²(du² + cos²u dv²)` of the rotation families
//! and the one-variable profiles of family (c).

use crate::elliptic::{EllipticModulus, JacobiFunction, POLE_THRESHOLD};
use crate::linalg::Mat3;
use crate::{Error, Result};

/// Warping function of a metric over the round 2-sphere.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Warp {
    /// `f = a` (family a).
    Constant(f64),
    /// `f = a t` (family b).
    Linear(f64),
    /// `f = sd(at, 1/√2)/a` (family c).
    Elliptic(f64),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WarpedProductSpec {
    pub warp: Warp,
}

impl WarpedProductSpec {
    pub fn new(warp: Warp) -> Self {
        Self { warp }
    }

    pub fn warp_value(&self, t: f64) -> Result<f64> {
        match self.warp {
            Warp::Constant(a) => Ok(a),
            Warp::Linear(a) => Ok(a * t),
            Warp::Elliptic(a) => Ok(EllipticModulus::lemniscatic().sd(a * t)? / a),
        }
    }

    /// Metric components in the `(t, u, v)` chart.
    pub fn metric(&self, t: f64, u: f64) -> Result<Mat3> {
        let f = self.warp_value(t)?;
        if !(f > 0.0) {
            return Err(Error::domain(format!("warping function must be positive, got f({t}) = {f}")));
        }
        let f2 = f * f;
        let c = u.cos();
        Ok([[1.0, 0.0, 0.0], [0.0, f2, 0.0], [0.0, 0.0, f2 * c * c]])
    }
}

fn check_a(a: f64) -> Result<()> {
    if a > 0.0 && a.is_finite() {
        Ok(())
    } else {
        Err(Error::parameter(format!("a must be a positive real number, got {a}")))
    }
}

/// `λ(t) = (a/2)·sd(at, 1/√2)`, the repeated principal curvature of family (c).
pub fn lambda_profile(a: f64, t: f64) -> Result<f64> {
    check_a(a)?;
    Ok(0.5 * a * EllipticModulus::lemniscatic().sd(a * t)?)
}

/// Relative step of the central difference used for `f′`.
const WARP_STEP: f64 = 1e-3;

/// `|f′/f − a·cd(at)·ns(at)|` with `f = sd(at)/a` and `f′` by central differences.
pub fn warp_ode_check(a: f64, t: f64) -> Result<f64> {
    check_a(a)?;
    let m = EllipticModulus::lemniscatic();
    warp_ode_residual_of(a, t, |s| Ok(m.sd(a * s)? / a))
}

/// Same residual for an arbitrary candidate warping function.
pub fn warp_ode_residual_of<F>(a: f64, t: f64, warp: F) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    check_a(a)?;
    let m = EllipticModulus::lemniscatic();
    let x = a * t;
    if !(x > 0.0 && x < 2.0 * m.quarter_period()) {
        return Err(Error::domain(format!(
            "a·t = {x} lies outside (0, 2K) where the warping function is positive"
        )));
    }
    let s = m.sncndn(x)?;
    // The step must stay well inside the distance to the zeros of sn.
    let h = WARP_STEP / a;
    let gap = x.min(2.0 * m.quarter_period() - x);
    if s.sn.abs() < 1e3 * POLE_THRESHOLD || gap <= 4.0 * a * h {
        return Err(Error::Pole {
            function: "ns",
            u: x,
            nearest: if x < m.quarter_period() { 0.0 } else { 2.0 * m.quarter_period() },
        });
    }
    let f = warp(t)?;
    let df = (warp(t - 2.0 * h)? - 8.0 * warp(t - h)? + 8.0 * warp(t + h)? - warp(t + 2.0 * h)?) / (12.0 * h);
    let rhs = a * m.eval(JacobiFunction::Cd, x)? * m.eval(JacobiFunction::Ns, x)?;
    Ok((df / f - rhs).abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_1_SQRT_2;

    #[test]
    fn lambda_values() {
        let k = EllipticModulus::lemniscatic().quarter_period();
        assert!((lambda_profile(1.0, k).unwrap() - FRAC_1_SQRT_2).abs() < 1e-12);
        assert!(lambda_profile(2.0, 1e-9).unwrap().abs() < 1e-8);
        assert!(lambda_profile(0.0, 1.0).is_err());
    }

    #[test]
    fn warp_identity_and_detector() {
        assert!(warp_ode_check(1.0, 1.0).unwrap() <= 1e-6);
        assert!(warp_ode_check(2.5, 0.3).unwrap() <= 1e-6);
        let wrong = warp_ode_residual_of(1.0, 1.0, Ok).unwrap();
        assert!(wrong > 1e-2, "{wrong}");
    }

    #[test]
    fn warp_scaling_symmetry() {
        // f′/f for parameter a at t equals a times the a = 1 quantity at a·t.
        let (a, t) = (1.7, 0.6);
        let lhs = warp_ode_check(a, t).unwrap();
        let rhs = warp_ode_check(1.0, a * t).unwrap();
        assert!((lhs - a * rhs).abs() < 1e-9);
    }

    #[test]
    fn pole_proximity() {
        assert!(matches!(warp_ode_check(1.0, 1e-4), Err(Error::Pole { .. })));
        assert!(matches!(warp_ode_check(1.0, -0.5), Err(Error::Domain(_))));
    }

    #[test]
    fn warped_metric_shapes() {
        let cone = WarpedProductSpec::new(Warp::Linear(FRAC_1_SQRT_2));
        let g = cone.metric(2.0, 0.0).unwrap();
        assert!((g[1][1] - 2.0).abs() < 1e-15 && (g[2][2] - 2.0).abs() < 1e-15);
        assert!(cone.metric(0.0, 0.0).is_err());
    }
}
