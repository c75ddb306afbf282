use super::metric::MetricData;
use super::shape::{mean_curvature_sq, orthonormal_frame_form, ShapeData};
use crate::linalg::{sym_eigenvalues3, Mat3, Vec3};
use crate::{Error, Result};

/// Curvature of the ambient space form. Only flat Euclidean 4-space is modeled.
pub const AMBIENT_CURVATURE: f64 = 0.0;

/// Coordinate components `R(∂ᵢ, ∂ⱼ; ∂ₖ, ∂ₗ)` of the Riemann tensor.
///
/// Sign convention: `R(X, Y; Y, X) = K(X ∧ Y)·(|X|²|Y|² − ⟨X, Y⟩²)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Riemann(pub [[[[f64; 3]; 3]; 3]; 3]);

impl Riemann {
    pub fn eval(&self, x: &Vec3, y: &Vec3, z: &Vec3, w: &Vec3) -> f64 {
        let mut s = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    for l in 0..3 {
                        s += self.0[i][j][k][l] * x[i] * y[j] * z[k] * w[l];
                    }
                }
            }
        }
        s
    }

    /// Sectional curvature of the plane spanned by `x` and `y`.
    pub fn sectional(&self, x: &Vec3, y: &Vec3, md: &MetricData) -> f64 {
        let area2 = md.inner(x, x) * md.inner(y, y) - md.inner(x, y).powi(2);
        self.eval(x, y, y, x) / area2
    }

    /// Ricci tensor `Ric(∂ⱼ, ∂ₖ) = Σ gⁱˡ R(∂ᵢ, ∂ⱼ; ∂ₖ, ∂ₗ)`.
    pub fn ricci(&self, g_inv: &Mat3) -> Mat3 {
        let mut ric = [[0.0; 3]; 3];
        for (j, row) in ric.iter_mut().enumerate() {
            for (k, r) in row.iter_mut().enumerate() {
                let mut s = 0.0;
                for i in 0..3 {
                    for l in 0..3 {
                        s += g_inv[i][l] * self.0[i][j][k][l];
                    }
                }
                *r = s;
            }
        }
        ric
    }

    pub fn max_abs_diff(&self, other: &Riemann) -> f64 {
        self.0
            .iter()
            .flatten()
            .flatten()
            .flatten()
            .zip(other.0.iter().flatten().flatten().flatten())
            .fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }
}

/// Intrinsic curvature data of the hypersurface at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvatureData {
    pub riemann: Riemann,
    /// Eigenvalues of the Ricci operator, ascending.
    pub ricci_spectrum: Vec3,
    /// `τ = Σ_{i<j} K(eᵢ ∧ eⱼ)`.
    pub tau: f64,
    /// Infimum of the sectional curvature over all tangent 2-planes.
    pub inf_k: f64,
    /// `δ = τ − inf K`.
    pub delta: f64,
    pub mean_sq: f64,
    pub epsilon: f64,
}

impl CurvatureData {
    /// `(9/4)H² + 2ε`.
    pub fn bound(&self) -> f64 {
        2.25 * self.mean_sq + 2.0 * self.epsilon
    }
}

/// Riemann tensor of a hypersurface of flat space from its second fundamental form:
/// `R(X, Y; Z, W) = h(X, W)h(Y, Z) − h(X, Z)h(Y, W)`.
pub fn gauss_riemann(h: &Mat3) -> Riemann {
    let mut r = [[[[0.0; 3]; 3]; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                for l in 0..3 {
                    r[i][j][k][l] = h[i][l] * h[j][k] - h[i][k] * h[j][l];
                }
            }
        }
    }
    Riemann(r)
}

/// Curvature data from the Gauss equation.
pub fn curvature_from_gauss(sd: &ShapeData, md: &MetricData) -> Result<CurvatureData> {
    let riemann = gauss_riemann(&sd.h);
    let ric = riemann.ricci(&md.g_inv);
    let frame_ric = orthonormal_frame_form(&md.g, &ric)
        .ok_or_else(|| Error::domain("metric is not positive definite"))?;
    let ricci_spectrum = sym_eigenvalues3(&frame_ric);
    let tau = 0.5 * ricci_spectrum.iter().sum::<f64>();
    let inf_k = inf_sectional(&ricci_spectrum, tau);
    Ok(CurvatureData {
        riemann,
        ricci_spectrum,
        tau,
        inf_k,
        delta: tau - inf_k,
        mean_sq: mean_curvature_sq(sd),
        epsilon: AMBIENT_CURVATURE,
    })
}

/// Smallest sectional curvature of a 3-manifold at a point.
///
/// In dimension three the plane orthogonal to a unit vector `n` has sectional
/// curvature `τ − Ric(n, n)`, so the infimum over planes is `τ − λ_max(Ric)`.
pub fn inf_sectional(ricci_spectrum: &Vec3, tau: f64) -> f64 {
    let max = ricci_spectrum.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    tau - max
}
