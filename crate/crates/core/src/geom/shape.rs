use super::immersion::{check_domain, ChartPoint, Immersion, Partials};
use super::metric::{check_immersion, gram, metric_from_partials, MetricData};
use crate::linalg::{
    cholesky3, congruence3, cross4, dot4, lower_inverse3, mat3_mul, norm4, sym_eigenvalues3, Mat3, Vec3, Vec4,
};
use crate::{Error, Result};

/// Normal-direction data of a hypersurface at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShapeData {
    /// Unit normal `e₄` with `det(∂₁L, ∂₂L, ∂₃L, e₄) > 0`.
    pub normal: Vec4,
    /// `hᵢⱼ = ⟨∂ᵢ∂ⱼL, e₄⟩`.
    pub h: Mat3,
    /// `A = g⁻¹h` in coordinate components (not symmetric as an array).
    pub shape_op: Mat3,
    /// Eigenvalues of `A`, ascending.
    pub principal_curvatures: Vec3,
}

impl ShapeData {
    pub fn trace(&self) -> f64 {
        self.principal_curvatures.iter().sum()
    }

    pub fn spectral_radius(&self) -> f64 {
        self.principal_curvatures.iter().fold(0.0, |m, k| m.max(k.abs()))
    }
}

/// The oriented unit normal at `p`.
pub fn unit_normal(imm: &dyn Immersion, p: &ChartPoint) -> Result<Vec4> {
    check_domain(imm, p)?;
    let d = imm.partials(p)?;
    normal_from_partials(&d, p)
}

pub(crate) fn normal_from_partials(d: &Partials, p: &ChartPoint) -> Result<Vec4> {
    check_immersion(d, &gram(&d.first), p)?;
    let n = cross4(&d.first[0], &d.first[1], &d.first[2]);
    let len = norm4(&n);
    if !(len > 0.0) {
        return Err(Error::Degenerate {
            point: p.0,
            reason: "partials have a vanishing cross product".into(),
        });
    }
    Ok([n[0] / len, n[1] / len, n[2] / len, n[3] / len])
}

/// Second fundamental form, shape operator, and principal curvatures at `p`.
pub fn second_fundamental(imm: &dyn Immersion, p: &ChartPoint) -> Result<ShapeData> {
    check_domain(imm, p)?;
    let d = imm.partials(p)?;
    let md = metric_from_partials(&d, p)?;
    shape_from_partials(&d, &md, p)
}

pub(crate) fn second_fundamental_form(d: &Partials, normal: &Vec4) -> Mat3 {
    let mut h = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in i..3 {
            let v = dot4(&d.second[i][j], normal);
            h[i][j] = v;
            h[j][i] = v;
        }
    }
    h
}

pub(crate) fn shape_from_partials(d: &Partials, md: &MetricData, p: &ChartPoint) -> Result<ShapeData> {
    let normal = normal_from_partials(d, p)?;
    let h = second_fundamental_form(d, &normal);
    let shape_op = mat3_mul(&md.g_inv, &h);
    let frame_h = orthonormal_frame_form(&md.g, &h).ok_or_else(|| Error::Degenerate {
        point: p.0,
        reason: "metric is not positive definite".into(),
    })?;
    let principal_curvatures = sym_eigenvalues3(&frame_h);
    Ok(ShapeData {
        normal,
        h,
        shape_op,
        principal_curvatures,
    })
}

/// Components of a symmetric bilinear form in a `g`-orthonormal frame.
///
/// With `g = C Cᵀ` (Cholesky), `C⁻¹ b C⁻ᵀ` is symmetric and similar to `g⁻¹ b`,
/// so its eigenvalues are the eigenvalues of the associated `g`-self-adjoint operator.
pub fn orthonormal_frame_form(g: &Mat3, b: &Mat3) -> Option<Mat3> {
    let c = cholesky3(g)?;
    Some(congruence3(&lower_inverse3(&c), b))
}

/// `H² = (trace A / 3)²`.
pub fn mean_curvature_sq(sd: &ShapeData) -> f64 {
    let h = sd.trace() / 3.0;
    h * h
}
