//! Concrete immersions: the three ideal rotation families, the catenoid and
//! helicoid products, and polynomial graphs used as negative controls.

mod graph;
mod product;
mod rotation;
mod warp;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

pub use graph::{Graph, Polynomial, Term, GRAPH_HALF_WIDTH};
pub use product::{CatenoidProduct, HelicoidProduct, LINE_HALF_LENGTH};
pub use rotation::{
    ConeProfile, CylinderProfile, EllipticProfile, Jet, Profile, RotationHypersurface, CONE_T_RANGE,
    CYLINDER_HALF_LENGTH, ELLIPTIC_EDGE, POLAR_MARGIN,
};
pub use warp::{lambda_profile, warp_ode_check, warp_ode_residual_of, Warp, WarpedProductSpec};

use crate::geom::{AutoDiff, ChartBox, ImmersionMap};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyTag {
    A,
    B,
    C,
    L1,
    L2,
    Hyperplane,
    Graph,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 7] = [
        FamilyTag::A,
        FamilyTag::B,
        FamilyTag::C,
        FamilyTag::L1,
        FamilyTag::L2,
        FamilyTag::Hyperplane,
        FamilyTag::Graph,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyTag::A => "a",
            FamilyTag::B => "b",
            FamilyTag::C => "c",
            FamilyTag::L1 => "L1",
            FamilyTag::L2 => "L2",
            FamilyTag::Hyperplane => "hyperplane",
            FamilyTag::Graph => "graph",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            FamilyTag::A => "spherical cylinder R x S^2(a), a > 0",
            FamilyTag::B => "cone over S^2 with opening a, 0 < a < 1",
            FamilyTag::C => "Jacobi elliptic rotation hypersurface, a > 0",
            FamilyTag::L1 => "catenoid x R",
            FamilyTag::L2 => "helicoid x R in the catenoid chart",
            FamilyTag::Hyperplane => "flat hyperplane x4 = 0",
            FamilyTag::Graph => "graph x4 = P(t, u, v) of a polynomial (non-ideal control)",
        }
    }

    pub fn needs_a(self) -> bool {
        matches!(self, FamilyTag::A | FamilyTag::B | FamilyTag::C)
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyTag::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| {
                let names: Vec<_> = FamilyTag::ALL.iter().map(|t| t.name()).collect();
                Error::parameter(format!("unknown family '{s}' (expected one of {})", names.join(", ")))
            })
    }
}

/// A validated family choice together with the chart box it is served on.
#[derive(Debug, Clone, PartialEq)]
pub struct FamilyParams {
    pub family: FamilyTag,
    pub a: Option<f64>,
    pub coeffs: Option<Polynomial>,
    pub safe_domain: ChartBox,
}

impl FamilyParams {
    pub fn new(family: FamilyTag, a: Option<f64>, coeffs: Option<Polynomial>) -> Result<Self> {
        if family.needs_a() {
            let a = a.ok_or_else(|| Error::parameter(format!("family {family} needs a parameter a")))?;
            check_family_a(family, a)?;
        } else if a.is_some() {
            return Err(Error::parameter(format!("family {family} takes no parameter a")));
        }
        if coeffs.is_some() && family != FamilyTag::Graph {
            return Err(Error::parameter(format!("family {family} takes no coefficients")));
        }
        let mut params = Self {
            family,
            a,
            coeffs,
            safe_domain: ChartBox::new([0.0; 3], [1.0; 3])?,
        };
        params.safe_domain = params.build()?.domain();
        Ok(params)
    }

    /// Builds the immersion.
    pub fn build(&self) -> Result<ImmersionMap> {
        let a = self.a.unwrap_or(f64::NAN);
        match self.family {
            FamilyTag::A => family_a(a),
            FamilyTag::B => family_b(a),
            FamilyTag::C => family_c(a),
            FamilyTag::L1 => Ok(product_l1()),
            FamilyTag::L2 => Ok(product_l2()),
            FamilyTag::Hyperplane => Ok(hyperplane()),
            FamilyTag::Graph => generic_graph(self.coeffs.clone().unwrap_or_default()),
        }
    }

    /// Box sampled by default grids: the served box shrunk by 2%.
    pub fn default_grid_box(&self) -> ChartBox {
        self.safe_domain.shrunk(0.02)
    }

    /// Human-readable parameter string for reports.
    pub fn parameter_string(&self) -> String {
        match (&self.a, &self.coeffs) {
            (Some(a), _) => format!("a={a}"),
            (None, Some(p)) => format!("coeffs={p}"),
            (None, None) => String::new(),
        }
    }

    /// Warped-product form of the metric, for the rotation families.
    pub fn warped_product(&self) -> Option<WarpedProductSpec> {
        let a = self.a?;
        match self.family {
            FamilyTag::A => Some(WarpedProductSpec::new(Warp::Constant(a))),
            FamilyTag::B => Some(WarpedProductSpec::new(Warp::Linear(a))),
            FamilyTag::C => Some(WarpedProductSpec::new(Warp::Elliptic(a))),
            _ => None,
        }
    }
}

fn check_family_a(family: FamilyTag, a: f64) -> Result<()> {
    let ok = match family {
        FamilyTag::B => a > 0.0 && a < 1.0,
        _ => a > 0.0 && a.is_finite(),
    };
    if ok {
        Ok(())
    } else if family == FamilyTag::B {
        Err(Error::parameter(format!(
            "family b needs 0 < a < 1 (the endpoints are degenerate), got {a}"
        )))
    } else {
        Err(Error::parameter(format!("family {family} needs a > 0, got {a}")))
    }
}

/// Spherical cylinder `(t, a sin u, a cos u sin v, a cos u cos v)`.
pub fn family_a(a: f64) -> Result<ImmersionMap> {
    check_family_a(FamilyTag::A, a)?;
    Ok(Arc::new(RotationHypersurface::new(CylinderProfile { a })?))
}

/// Cone `(√(1−a²) t, a t sin u, a t cos u sin v, a t cos u cos v)`.
pub fn family_b(a: f64) -> Result<ImmersionMap> {
    check_family_a(FamilyTag::B, a)?;
    Ok(Arc::new(RotationHypersurface::new(ConeProfile { a })?))
}

/// Elliptic rotation hypersurface with radius `sd(at)/a` and height `½∫₀ᵗ sd²(as) ds`.
pub fn family_c(a: f64) -> Result<ImmersionMap> {
    check_family_a(FamilyTag::C, a)?;
    Ok(Arc::new(RotationHypersurface::new(EllipticProfile::new(a)?)?))
}

pub fn product_l1() -> ImmersionMap {
    Arc::new(CatenoidProduct)
}

pub fn product_l2() -> ImmersionMap {
    Arc::new(HelicoidProduct)
}

pub fn generic_graph(poly: Polynomial) -> Result<ImmersionMap> {
    if poly.terms.iter().any(|t| !t.coeff.is_finite()) {
        return Err(Error::parameter("graph coefficients must be finite"));
    }
    Ok(Arc::new(AutoDiff(Graph { poly })))
}

pub fn hyperplane() -> ImmersionMap {
    Arc::new(AutoDiff(Graph { poly: Polynomial::zero() }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elliptic::EllipticModulus;
    use crate::geom::{analyze, pullback_metric, ChartPoint};
    use std::f64::consts::{FRAC_1_SQRT_2, SQRT_2};

    fn close(x: &[f64; 3], y: &[f64; 3], tol: f64) -> bool {
        x.iter().zip(y).all(|(a, b)| (a - b).abs() <= tol)
    }

    #[test]
    fn cylinder_values() {
        let imm = family_a(1.0).unwrap();
        let p = ChartPoint::new(0.0, 0.0, 0.0);
        assert_eq!(imm.position(&p).unwrap(), [0.0, 0.0, 0.0, 1.0]);
        for a in [0.5, 2.0] {
            let imm = family_a(a).unwrap();
            let g = analyze(imm.as_ref(), &ChartPoint::new(0.3, 0.2, -1.0)).unwrap();
            let mut k = g.shape.principal_curvatures.map(f64::abs);
            k.sort_by(f64::total_cmp);
            assert!(close(&k, &[0.0, 1.0 / a, 1.0 / a], 1e-12), "{k:?}");
            assert!((g.curvature.delta - 1.0 / (a * a)).abs() < 1e-12);
            assert!((g.curvature.bound() - 1.0 / (a * a)).abs() < 1e-12);
        }
        assert!(family_a(0.0).is_err());
        assert!(family_a(-1.0).is_err());
    }

    #[test]
    fn cone_values() {
        let a = FRAC_1_SQRT_2;
        let imm = family_b(a).unwrap();
        let p = ChartPoint::new(1.0, 0.4, 0.7);
        let g = analyze(imm.as_ref(), &p).unwrap();
        let mut k = g.shape.principal_curvatures.map(f64::abs);
        k.sort_by(f64::total_cmp);
        assert!(close(&k, &[0.0, 1.0, 1.0], 1e-12), "{k:?}");
        assert!((g.curvature.delta - 1.0).abs() < 1e-12);
        let md = pullback_metric(imm.as_ref(), &ChartPoint::new(2.0, 0.4, 0.7)).unwrap();
        assert!((md.g[1][1] - 0.5 * 4.0).abs() < 1e-12);
        assert!((md.g[2][2] - 2.0 * 0.4f64.cos().powi(2)).abs() < 1e-12);
        for bad in [0.0, 1.0, 1.5, -0.2] {
            assert!(family_b(bad).is_err());
        }
    }

    #[test]
    fn elliptic_values() {
        let big_k = EllipticModulus::lemniscatic().quarter_period();
        let imm = family_c(1.0).unwrap();
        let g = analyze(imm.as_ref(), &ChartPoint::new(big_k, 0.1, 0.2)).unwrap();
        let mut k = g.shape.principal_curvatures.map(f64::abs);
        k.sort_by(f64::total_cmp);
        assert!(close(&k, &[FRAC_1_SQRT_2, FRAC_1_SQRT_2, SQRT_2], 1e-10), "{k:?}");
        assert!(imm.position(&ChartPoint::new(0.01, 0.0, 0.0)).is_ok());
        let md = pullback_metric(imm.as_ref(), &ChartPoint::new(1.0, 0.3, 0.0)).unwrap();
        let f = EllipticModulus::lemniscatic().sd(1.0).unwrap();
        assert!((md.g[0][0] - 1.0).abs() < 1e-12);
        assert!((md.g[1][1] - f * f).abs() < 1e-12);
    }

    #[test]
    fn elliptic_height_is_continuous_across_knots() {
        // Central differences of the cached height reproduce its derivative,
        // including at points straddling the checkpoint knots.
        let profile = EllipticProfile::new(2.0).unwrap();
        let (lo, hi) = profile.t_range();
        let h = 1e-4;
        for i in 1..200 {
            let t = lo + (hi - lo) * i as f64 / 200.0;
            let fd = (profile.height(t + h).unwrap() - profile.height(t - h).unwrap()) / (2.0 * h);
            let d1 = profile.height_derivatives(t).unwrap().d1;
            assert!((fd - d1).abs() < 1e-7, "t = {t}: {fd} vs {d1}");
        }
    }

    #[test]
    fn product_pair_is_isometric_but_differently_shaped() {
        let p = ChartPoint::new(0.3, 1.1, 0.2);
        let g1 = pullback_metric(product_l1().as_ref(), &p).unwrap();
        let g2 = pullback_metric(product_l2().as_ref(), &p).unwrap();
        let c2 = 0.3f64.cosh().powi(2);
        for (i, expected) in [c2, c2, 1.0].iter().enumerate() {
            assert!((g1.g[i][i] - expected).abs() < 1e-12);
            assert!((g2.g[i][i] - expected).abs() < 1e-12);
        }
        let s0 = analyze(product_l1().as_ref(), &ChartPoint::new(0.0, 1.0, 0.0)).unwrap();
        assert!(close(&s0.shape.principal_curvatures, &[-1.0, 0.0, 1.0], 1e-12));
    }

    #[test]
    fn graph_hessian_at_origin() {
        let imm = generic_graph("1,2,3".parse().unwrap()).unwrap();
        let g = analyze(imm.as_ref(), &ChartPoint::new(0.0, 0.0, 0.0)).unwrap();
        assert!(close(&g.shape.principal_curvatures.map(f64::abs), &[2.0, 4.0, 6.0], 1e-12));
        let flat = analyze(hyperplane().as_ref(), &ChartPoint::new(0.2, 0.1, 0.0)).unwrap();
        assert_eq!(flat.curvature.delta, 0.0);
    }

    #[test]
    fn params_by_name() {
        let tag: FamilyTag = "l1".parse().unwrap();
        assert_eq!(tag, FamilyTag::L1);
        assert!("d".parse::<FamilyTag>().is_err());
        let p = FamilyParams::new(FamilyTag::C, Some(2.0), None).unwrap();
        assert!(p.safe_domain.hi[0] < EllipticModulus::lemniscatic().quarter_period());
        assert!(FamilyParams::new(FamilyTag::B, Some(1.5), None).is_err());
        assert!(FamilyParams::new(FamilyTag::A, None, None).is_err());
        assert!(FamilyParams::new(FamilyTag::L1, Some(1.0), None).is_err());
        let g = FamilyParams::new(FamilyTag::Graph, None, Some("1,2,7".parse().unwrap())).unwrap();
        assert_eq!(g.parameter_string(), "coeffs=1:2,0,0;2:0,2,0;7:0,0,2");
    }
}
