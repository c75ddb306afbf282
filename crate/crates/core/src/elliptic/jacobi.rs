use std::fmt;
use std::str::FromStr;

use super::modulus::{check_open_modulus, EllipticModulus};
use super::quadrature::integrate_adaptive;
use crate::{Error, Result};

/// Upper bound on descending Landen steps; convergence is quadratic, so even
/// `k' ≈ 1e-300` finishes in about fifteen.
const MAX_AGM_STEPS: usize = 24;

/// Denominators of magnitude below this are treated as exact zeros.
pub const POLE_THRESHOLD: f64 = 64.0 * f64::EPSILON;

/// `(sn, cn, dn)` evaluated at one argument.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiState {
    pub u: f64,
    pub sn: f64,
    pub cn: f64,
    pub dn: f64,
}

impl EllipticModulus {
    /// `(sn, cn, dn)` at `u` for this modulus. Valid for every finite `u`.
    pub fn sncndn(&self, u: f64) -> Result<JacobiState> {
        if !u.is_finite() {
            return Err(Error::domain(format!("argument must be finite, got {u}")));
        }
        Ok(agm_state(u, self.k(), self.kprime()))
    }

    pub fn sd(&self, u: f64) -> Result<f64> {
        self.eval(JacobiFunction::Sd, u)
    }

    /// Evaluates any of the twelve Jacobi functions.
    pub fn eval(&self, f: JacobiFunction, u: f64) -> Result<f64> {
        let s = self.sncndn(u)?;
        quotient(f, &s, || nearest_zero(f, u, self.quarter_period()))
    }

    /// `sn⁻¹(x)` on the principal branch `[−K, K]`.
    pub fn invert_sn(&self, x: f64) -> Result<f64> {
        invert_sn_impl(x, self)
    }
}

/// Descending arithmetic-geometric-mean (Landen) evaluation.
fn agm_state(u: f64, k: f64, kprime: f64) -> JacobiState {
    let mut a = [0.0f64; MAX_AGM_STEPS + 1];
    let mut c = [0.0f64; MAX_AGM_STEPS + 1];
    a[0] = 1.0;
    c[0] = k;
    let mut b = kprime;
    let mut n = 0;
    while n < MAX_AGM_STEPS && c[n].abs() > f64::EPSILON * a[n] {
        a[n + 1] = 0.5 * (a[n] + b);
        c[n + 1] = 0.5 * (a[n] - b);
        b = (a[n] * b).sqrt();
        n += 1;
    }
    let mut phi = (1u64 << n) as f64 * a[n] * u;
    for j in (1..=n).rev() {
        phi = 0.5 * (phi + (c[j] / a[j] * phi.sin()).asin());
    }
    let sn = phi.sin();
    let cn = phi.cos();
    // dn > 0 for every real u when k < 1.
    let dn = (1.0 - k * k * sn * sn).sqrt();
    JacobiState { u, sn, cn, dn }
}

/// `(sn, cn, dn)` at `(u, k)`.
///
/// The closed endpoints are served by their limits: `k = 0` gives
/// `(sin u, cos u, 1)` and `k = 1` gives `(tanh u, sech u, sech u)`.
pub fn jacobi_sncndn(u: f64, k: f64) -> Result<JacobiState> {
    if !u.is_finite() {
        return Err(Error::domain(format!("argument must be finite, got {u}")));
    }
    if k == 0.0 {
        return Ok(JacobiState {
            u,
            sn: u.sin(),
            cn: u.cos(),
            dn: 1.0,
        });
    }
    if k == 1.0 {
        let sech = 1.0 / u.cosh();
        return Ok(JacobiState {
            u,
            sn: u.tanh(),
            cn: sech,
            dn: sech,
        });
    }
    check_open_modulus(k)?;
    Ok(agm_state(u, k, ((1.0 - k) * (1.0 + k)).sqrt()))
}

/// The twelve Jacobi functions `pq`, written as quotients of `sn`, `cn`, `dn`
/// (with `n` standing for the constant 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum JacobiFunction {
    Sn,
    Cn,
    Dn,
    Ns,
    Nc,
    Nd,
    Sc,
    Sd,
    Cs,
    Cd,
    Ds,
    Dc,
}

#[derive(Clone, Copy, PartialEq)]
enum Part {
    One,
    S,
    C,
    D,
}

impl JacobiFunction {
    pub const ALL: [JacobiFunction; 12] = [
        Self::Sn,
        Self::Cn,
        Self::Dn,
        Self::Ns,
        Self::Nc,
        Self::Nd,
        Self::Sc,
        Self::Sd,
        Self::Cs,
        Self::Cd,
        Self::Ds,
        Self::Dc,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Sn => "sn",
            Self::Cn => "cn",
            Self::Dn => "dn",
            Self::Ns => "ns",
            Self::Nc => "nc",
            Self::Nd => "nd",
            Self::Sc => "sc",
            Self::Sd => "sd",
            Self::Cs => "cs",
            Self::Cd => "cd",
            Self::Ds => "ds",
            Self::Dc => "dc",
        }
    }

    fn parts(self) -> (Part, Part) {
        use Part::*;
        match self {
            Self::Sn => (S, One),
            Self::Cn => (C, One),
            Self::Dn => (D, One),
            Self::Ns => (One, S),
            Self::Nc => (One, C),
            Self::Nd => (One, D),
            Self::Sc => (S, C),
            Self::Sd => (S, D),
            Self::Cs => (C, S),
            Self::Cd => (C, D),
            Self::Ds => (D, S),
            Self::Dc => (D, C),
        }
    }
}

impl fmt::Display for JacobiFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for JacobiFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        Self::ALL
            .into_iter()
            .find(|f| f.name() == lower)
            .ok_or_else(|| Error::domain(format!("unknown Jacobi function '{s}'")))
    }
}

fn part_value(p: Part, s: &JacobiState) -> f64 {
    match p {
        Part::One => 1.0,
        Part::S => s.sn,
        Part::C => s.cn,
        Part::D => s.dn,
    }
}

fn quotient(f: JacobiFunction, s: &JacobiState, nearest: impl FnOnce() -> f64) -> Result<f64> {
    let (num, den) = f.parts();
    let d = part_value(den, s);
    if d.abs() < POLE_THRESHOLD {
        return Err(Error::Pole {
            function: f.name(),
            u: s.u,
            nearest: nearest(),
        });
    }
    Ok(part_value(num, s) / d)
}

/// Nearest zero of the denominator of `f` (zeros of sn sit at 2mK, zeros of cn at (2m+1)K).
fn nearest_zero(f: JacobiFunction, u: f64, quarter: f64) -> f64 {
    let half_period = 2.0 * quarter;
    match f.parts().1 {
        Part::S => half_period * (u / half_period).round(),
        Part::C => quarter + half_period * ((u - quarter) / half_period).round(),
        Part::One | Part::D => f64::NAN,
    }
}

/// Evaluates a Jacobi function by name, e.g. `sd(u) = sn(u)/dn(u)`.
pub fn jacobi_minor(f: JacobiFunction, u: f64, k: f64) -> Result<f64> {
    let s = jacobi_sncndn(u, k)?;
    quotient(f, &s, || {
        if k == 0.0 {
            nearest_zero(f, u, std::f64::consts::FRAC_PI_2)
        } else if k == 1.0 {
            // sech has no zeros; tanh vanishes only at the origin.
            0.0
        } else {
            let m = EllipticModulus::new(k).expect("modulus validated by jacobi_sncndn");
            nearest_zero(f, u, m.quarter_period())
        }
    })
}

/// `sn⁻¹(x, k)` with values in `[−K, K]`.
pub fn invert_sn(x: f64, k: f64) -> Result<f64> {
    let m = EllipticModulus::new(k)?;
    invert_sn_impl(x, &m)
}

fn invert_sn_impl(x: f64, m: &EllipticModulus) -> Result<f64> {
    if !(x.abs() <= 1.0) {
        return Err(Error::domain(format!("sn⁻¹ needs |x| ≤ 1, got {x}")));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    if x.abs() == 1.0 {
        return Ok(x.signum() * m.quarter_period());
    }
    let kp2 = m.kprime() * m.kprime();
    let theta = x.abs().asin();
    let mut u = integrate_adaptive(
        |p: f64| {
            let (s, c) = p.sin_cos();
            1.0 / (c * c + kp2 * s * s).sqrt()
        },
        0.0,
        theta,
        1e-14,
    )?
    .value;
    // Newton polish; skipped near u = K where sn' = cn·dn vanishes.
    for _ in 0..3 {
        let s = m.sncndn(u)?;
        let slope = s.cn * s.dn;
        if slope.abs() < 1e-6 {
            break;
        }
        let step = (s.sn - x.abs()) / slope;
        u -= step;
        if step.abs() <= 1e-16 * u.abs().max(1.0) {
            break;
        }
    }
    Ok(x.signum() * u)
}
