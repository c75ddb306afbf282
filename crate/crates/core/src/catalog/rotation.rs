//! Hypersurfaces of rotation `(t, u, v) ↦ (height(t), radius(t)·S(u, v))` over
//! the unit 2-sphere `S(u, v) = (sin u, cos u sin v, cos u cos v)`.

use std::f64::consts::FRAC_PI_2;
use std::sync::Arc;

use crate::elliptic::{integrate_adaptive, EllipticModulus};
use crate::geom::{ChartBox, ChartPoint, Immersion, Partials};
use crate::linalg::{Vec3, Vec4};
use crate::{Error, Result};

/// Distance kept between `u` and the coordinate singularities `±π/2` of the sphere chart.
pub const POLAR_MARGIN: f64 = 0.1;

/// Value and first two derivatives of a profile function at one `t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet {
    pub value: f64,
    pub d1: f64,
    pub d2: f64,
}

/// Meridian curve of a rotation hypersurface.
pub trait Profile: Send + Sync {
    fn radius(&self, t: f64) -> Result<Jet>;

    /// Derivatives of the height; `value` may be left at zero.
    fn height_derivatives(&self, t: f64) -> Result<Jet>;

    fn height(&self, t: f64) -> Result<f64>;

    /// Whether the axis coordinate comes first (families a, b) or last (family c).
    fn axis_first(&self) -> bool;

    fn t_range(&self) -> (f64, f64);
}

fn sphere(u: f64, v: f64) -> [Vec3; 6] {
    let (su, cu) = u.sin_cos();
    let (sv, cv) = v.sin_cos();
    let s = [su, cu * sv, cu * cv];
    let s_u = [cu, -su * sv, -su * cv];
    let s_v = [0.0, cu * cv, -cu * sv];
    let s_uu = [-su, -cu * sv, -cu * cv];
    let s_uv = [0.0, -su * cv, su * sv];
    let s_vv = [0.0, -cu * sv, -cu * cv];
    [s, s_u, s_v, s_uu, s_uv, s_vv]
}

pub struct RotationHypersurface<P> {
    profile: P,
    domain: ChartBox,
}

impl<P: Profile> RotationHypersurface<P> {
    pub fn new(profile: P) -> Result<Self> {
        let (lo, hi) = profile.t_range();
        let domain = ChartBox::new(
            [lo, -FRAC_PI_2 + POLAR_MARGIN, -std::f64::consts::PI],
            [hi, FRAC_PI_2 - POLAR_MARGIN, std::f64::consts::PI],
        )?;
        Ok(Self { profile, domain })
    }

    pub fn profile(&self) -> &P {
        &self.profile
    }

    fn place(&self, axis: f64, rest: Vec3) -> Vec4 {
        if self.profile.axis_first() {
            [axis, rest[0], rest[1], rest[2]]
        } else {
            [rest[0], rest[1], rest[2], axis]
        }
    }
}

fn scale3(v: &Vec3, s: f64) -> Vec3 {
    [v[0] * s, v[1] * s, v[2] * s]
}

impl<P: Profile> Immersion for RotationHypersurface<P> {
    fn domain(&self) -> ChartBox {
        self.domain
    }

    fn position(&self, p: &ChartPoint) -> Result<Vec4> {
        let [t, u, v] = p.0;
        let r = self.profile.radius(t)?.value;
        let z = self.profile.height(t)?;
        Ok(self.place(z, scale3(&sphere(u, v)[0], r)))
    }

    fn partials(&self, p: &ChartPoint) -> Result<Partials> {
        let [t, u, v] = p.0;
        let r = self.profile.radius(t)?;
        let z = self.profile.height_derivatives(t)?;
        let [s, s_u, s_v, s_uu, s_uv, s_vv] = sphere(u, v);

        let first = [
            self.place(z.d1, scale3(&s, r.d1)),
            self.place(0.0, scale3(&s_u, r.value)),
            self.place(0.0, scale3(&s_v, r.value)),
        ];
        let tt = self.place(z.d2, scale3(&s, r.d2));
        let tu = self.place(0.0, scale3(&s_u, r.d1));
        let tv = self.place(0.0, scale3(&s_v, r.d1));
        let uu = self.place(0.0, scale3(&s_uu, r.value));
        let uv = self.place(0.0, scale3(&s_uv, r.value));
        let vv = self.place(0.0, scale3(&s_vv, r.value));
        Ok(Partials {
            first,
            second: [[tt, tu, tv], [tu, uu, uv], [tv, uv, vv]],
        })
    }
}

/// Family (a): `(t, a sin u, a cos u sin v, a cos u cos v)`.
#[derive(Debug, Clone, Copy)]
pub struct CylinderProfile {
    pub a: f64,
}

/// Half-length of the `t` interval served for the cylinder.
pub const CYLINDER_HALF_LENGTH: f64 = 2.0;

impl Profile for CylinderProfile {
    fn radius(&self, _t: f64) -> Result<Jet> {
        Ok(Jet {
            value: self.a,
            d1: 0.0,
            d2: 0.0,
        })
    }
    fn height_derivatives(&self, t: f64) -> Result<Jet> {
        Ok(Jet {
            value: t,
            d1: 1.0,
            d2: 0.0,
        })
    }
    fn height(&self, t: f64) -> Result<f64> {
        Ok(t)
    }
    fn axis_first(&self) -> bool {
        true
    }
    fn t_range(&self) -> (f64, f64) {
        (-CYLINDER_HALF_LENGTH, CYLINDER_HALF_LENGTH)
    }
}

/// Family (b): `(√(1−a²) t, a t sin u, a t cos u sin v, a t cos u cos v)`.
#[derive(Debug, Clone, Copy)]
pub struct ConeProfile {
    pub a: f64,
}

/// Served `t` interval for the cone; the apex `t = 0` is excluded.
pub const CONE_T_RANGE: (f64, f64) = (0.25, 2.5);

impl Profile for ConeProfile {
    fn radius(&self, t: f64) -> Result<Jet> {
        Ok(Jet {
            value: self.a * t,
            d1: self.a,
            d2: 0.0,
        })
    }
    fn height_derivatives(&self, t: f64) -> Result<Jet> {
        let c = ((1.0 - self.a) * (1.0 + self.a)).sqrt();
        Ok(Jet {
            value: c * t,
            d1: c,
            d2: 0.0,
        })
    }
    fn height(&self, t: f64) -> Result<f64> {
        Ok(((1.0 - self.a) * (1.0 + self.a)).sqrt() * t)
    }
    fn axis_first(&self) -> bool {
        true
    }
    fn t_range(&self) -> (f64, f64) {
        CONE_T_RANGE
    }
}

/// Number of checkpoint intervals in the family-(c) height cache.
const HEIGHT_KNOTS: usize = 64;
const HEIGHT_TOL: f64 = 1e-13;

/// Family (c): radius `sd(at)/a` and height `½∫₀ᵗ sd²(as) ds`, modulus `1/√2`.
#[derive(Debug, Clone)]
pub struct EllipticProfile {
    a: f64,
    modulus: EllipticModulus,
    t_lo: f64,
    t_hi: f64,
    knot_spacing: f64,
    /// `cumulative[j]` is the height at `t = j·knot_spacing`.
    cumulative: Arc<[f64]>,
}

/// Distance in `at` kept from the zeros `0` and `2K` of `sd`.
pub const ELLIPTIC_EDGE: f64 = 0.1;

impl EllipticProfile {
    pub fn new(a: f64) -> Result<Self> {
        let modulus = EllipticModulus::lemniscatic();
        let big_k = modulus.quarter_period();
        let t_lo = ELLIPTIC_EDGE / a;
        let t_hi = (2.0 * big_k - ELLIPTIC_EDGE) / a;
        let knot_spacing = (2.0 * big_k / a) / HEIGHT_KNOTS as f64;
        let mut cumulative = Vec::with_capacity(HEIGHT_KNOTS + 1);
        cumulative.push(0.0);
        let mut acc = 0.0;
        for j in 0..HEIGHT_KNOTS {
            let lo = j as f64 * knot_spacing;
            acc += height_integral(&modulus, a, lo, lo + knot_spacing)?;
            cumulative.push(acc);
        }
        Ok(Self {
            a,
            modulus,
            t_lo,
            t_hi,
            knot_spacing,
            cumulative: cumulative.into(),
        })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn modulus(&self) -> &EllipticModulus {
        &self.modulus
    }
}

fn height_integral(m: &EllipticModulus, a: f64, lo: f64, hi: f64) -> Result<f64> {
    let r = integrate_adaptive(
        |s| {
            let st = m.sncndn(a * s).expect("finite argument");
            let sd = st.sn / st.dn;
            0.5 * sd * sd
        },
        lo,
        hi,
        HEIGHT_TOL,
    )?;
    Ok(r.value)
}

impl Profile for EllipticProfile {
    fn radius(&self, t: f64) -> Result<Jet> {
        let s = self.modulus.sncndn(self.a * t)?;
        let k2 = self.modulus.k() * self.modulus.k();
        // sd' = cn/dn², sd'' = sn(2k²cn² − dn²)/dn³
        Ok(Jet {
            value: s.sn / s.dn / self.a,
            d1: s.cn / (s.dn * s.dn),
            d2: self.a * s.sn * (2.0 * k2 * s.cn * s.cn - s.dn * s.dn) / s.dn.powi(3),
        })
    }

    fn height_derivatives(&self, t: f64) -> Result<Jet> {
        let s = self.modulus.sncndn(self.a * t)?;
        let sd = s.sn / s.dn;
        Ok(Jet {
            value: 0.0,
            d1: 0.5 * sd * sd,
            d2: self.a * s.sn * s.cn / s.dn.powi(3),
        })
    }

    fn height(&self, t: f64) -> Result<f64> {
        if !t.is_finite() {
            return Err(Error::domain(format!("t must be finite, got {t}")));
        }
        let j = ((t / self.knot_spacing).floor().max(0.0) as usize).min(HEIGHT_KNOTS);
        let knot = j as f64 * self.knot_spacing;
        Ok(self.cumulative[j] + height_integral(&self.modulus, self.a, knot, t)?)
    }

    fn axis_first(&self) -> bool {
        false
    }

    fn t_range(&self) -> (f64, f64) {
        (self.t_lo, self.t_hi)
    }
}
