//! Metric, normal, shape operator, and curvature of chart-parametrized
//! hypersurfaces `M³ → E⁴`.
//!
//! Immersions supply exact first and second partials, either analytically or
//! through [`AutoDiff`]. From those the pipeline builds
//! [`MetricData`] → [`ShapeData`] → [`CurvatureData`]; finite differences only
//! appear in the structure-equation residuals of [`structure`].

mod curvature;
mod immersion;
mod metric;
mod shape;
pub mod structure;
mod transform;

pub use curvature::{curvature_from_gauss, gauss_riemann, inf_sectional, CurvatureData, Riemann, AMBIENT_CURVATURE};
pub use immersion::{AutoDiff, ChartBox, ChartPoint, CoordinateProgram, Immersion, ImmersionMap, Partials};
pub use metric::{pullback_metric, MetricData, DEGENERACY};
pub use shape::{mean_curvature_sq, orthonormal_frame_form, second_fundamental, unit_normal, ShapeData};
pub use structure::{codazzi_residual, codazzi_residual_of, intrinsic_riemann};
pub use transform::Similarity;

use crate::Result;

/// Everything the pipeline knows about one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PointGeometry {
    pub metric: MetricData,
    pub shape: ShapeData,
    pub curvature: CurvatureData,
}

/// Runs metric, shape, and Gauss-equation curvature at `p`.
pub fn analyze(imm: &dyn Immersion, p: &ChartPoint) -> Result<PointGeometry> {
    immersion::check_domain(imm, p)?;
    let (metric, shape) = structure::shape_at(imm, p)?;
    let curvature = curvature_from_gauss(&shape, &metric)?;
    Ok(PointGeometry {
        metric,
        shape,
        curvature,
    })
}
