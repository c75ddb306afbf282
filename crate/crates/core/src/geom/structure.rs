//! Structure-equation residuals: intrinsic curvature from the metric alone,
//! and the Codazzi equation for the second fundamental form.

use super::curvature::Riemann;
use super::immersion::{check_domain, ChartPoint, Immersion};
use super::metric::{metric_from_partials, MetricData};
use super::shape::{shape_from_partials, ShapeData};
use crate::linalg::Mat3;
use crate::{Error, Result};

/// Fourth-order central difference weights for offsets `−2h, −h, +h, +2h`.
const OFFSETS: [f64; 4] = [-2.0, -1.0, 1.0, 2.0];
const WEIGHTS: [f64; 4] = [1.0 / 12.0, -8.0 / 12.0, 8.0 / 12.0, -1.0 / 12.0];

fn check_stencil(imm: &dyn Immersion, p: &ChartPoint, step: f64) -> Result<()> {
    if !(step > 0.0 && step.is_finite()) {
        return Err(Error::domain(format!("finite-difference step must be positive, got {step}")));
    }
    check_domain(imm, p)?;
    let d = imm.domain();
    for axis in 0..3 {
        let x = p.0[axis];
        if x - 2.0 * step <= d.lo[axis] || x + 2.0 * step >= d.hi[axis] {
            return Err(Error::domain(format!(
                "difference stencil of width {} around {p} leaves the served box on axis {axis}",
                2.0 * step
            )));
        }
    }
    Ok(())
}

/// Central-difference derivative of a matrix-valued field along each axis.
fn derivative_field<T, F>(p: &ChartPoint, step: f64, field: F) -> Result<[T; 3]>
where
    T: Copy + Default + AddScaled,
    F: Fn(&ChartPoint) -> Result<T>,
{
    let mut out = [T::default(); 3];
    for (axis, slot) in out.iter_mut().enumerate() {
        let mut acc = T::default();
        for (o, w) in OFFSETS.iter().zip(WEIGHTS) {
            let v = field(&p.shifted(axis, o * step))?;
            acc.add_scaled(&v, w / step);
        }
        *slot = acc;
    }
    Ok(out)
}

trait AddScaled {
    fn add_scaled(&mut self, other: &Self, s: f64);
}

impl AddScaled for Mat3 {
    fn add_scaled(&mut self, other: &Self, s: f64) {
        for (row, orow) in self.iter_mut().zip(other) {
            for (x, y) in row.iter_mut().zip(orow) {
                *x += s * y;
            }
        }
    }
}

impl AddScaled for [Mat3; 3] {
    fn add_scaled(&mut self, other: &Self, s: f64) {
        for (m, o) in self.iter_mut().zip(other) {
            m.add_scaled(o, s);
        }
    }
}

fn metric_at(imm: &dyn Immersion, p: &ChartPoint) -> Result<MetricData> {
    metric_from_partials(&imm.partials(p)?, p)
}

/// Riemann tensor computed from the Christoffel symbols and their
/// finite-difference derivatives; it never touches the normal direction, so
/// it is an independent check on the Gauss equation.
pub fn intrinsic_riemann(imm: &dyn Immersion, p: &ChartPoint, step: f64) -> Result<Riemann> {
    check_stencil(imm, p, step)?;
    let md = metric_at(imm, p)?;
    let gamma = md.christoffel;
    // dgamma[m][l][i][j] = ∂ₘ Γˡᵢⱼ
    let dgamma = derivative_field(p, step, |q| Ok(metric_at(imm, q)?.christoffel))?;

    let mut r = [[[[0.0; 3]; 3]; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                // (R(∂ᵢ, ∂ⱼ)∂ₖ)ˡ = ∂ᵢΓˡⱼₖ − ∂ⱼΓˡᵢₖ + ΓᵐⱼₖΓˡᵢₘ − ΓᵐᵢₖΓˡⱼₘ
                let mut vec = [0.0; 3];
                for (l, v) in vec.iter_mut().enumerate() {
                    let mut s = dgamma[i][l][j][k] - dgamma[j][l][i][k];
                    for m in 0..3 {
                        s += gamma[m][j][k] * gamma[l][i][m] - gamma[m][i][k] * gamma[l][j][m];
                    }
                    *v = s;
                }
                for w in 0..3 {
                    r[i][j][k][w] = (0..3).map(|l| md.g[l][w] * vec[l]).sum();
                }
            }
        }
    }
    Ok(Riemann(r))
}

/// Max over index triples of `|(∇ᵢh)(j,k) − (∇ⱼh)(i,k)|`.
pub fn codazzi_residual(imm: &dyn Immersion, p: &ChartPoint, step: f64) -> Result<f64> {
    codazzi_residual_of(imm, p, step, |q| {
        let d = imm.partials(q)?;
        let md = metric_from_partials(&d, q)?;
        Ok(shape_from_partials(&d, &md, q)?.h)
    })
}

/// Codazzi residual for an arbitrary symmetric 2-tensor field `h_field`, using
/// the Levi-Civita connection of `imm`. The normal connection of a
/// hypersurface with unit normal vanishes, so `∇̄h = ∇h`.
pub fn codazzi_residual_of<F>(imm: &dyn Immersion, p: &ChartPoint, step: f64, h_field: F) -> Result<f64>
where
    F: Fn(&ChartPoint) -> Result<Mat3>,
{
    check_stencil(imm, p, step)?;
    let md = metric_at(imm, p)?;
    let h = h_field(p)?;
    let dh = derivative_field(p, step, &h_field)?;
    let gamma = &md.christoffel;

    // nabla[i][j][k] = (∇ᵢh)(j, k) = ∂ᵢhⱼₖ − Γˡᵢⱼ hₗₖ − Γˡᵢₖ hⱼₗ
    let mut nabla = [[[0.0; 3]; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                let mut s = dh[i][j][k];
                for l in 0..3 {
                    s -= gamma[l][i][j] * h[l][k] + gamma[l][i][k] * h[j][l];
                }
                nabla[i][j][k] = s;
            }
        }
    }
    let mut worst: f64 = 0.0;
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                worst = worst.max((nabla[i][j][k] - nabla[j][i][k]).abs());
            }
        }
    }
    Ok(worst)
}

/// Shape data recomputed at `p`; helper for callers that already hold an immersion.
pub(crate) fn shape_at(imm: &dyn Immersion, p: &ChartPoint) -> Result<(MetricData, ShapeData)> {
    let d = imm.partials(p)?;
    let md = metric_from_partials(&d, p)?;
    let sd = shape_from_partials(&d, &md, p)?;
    Ok((md, sd))
}
