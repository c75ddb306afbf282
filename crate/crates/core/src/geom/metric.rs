use super::immersion::{check_domain, ChartPoint, Immersion, Partials};
use crate::linalg::{dot4, inverse3, norm4, Mat3};
use crate::{Error, Result};

/// Relative Gram-determinant threshold: `det g` must exceed `DEGENERACY * scale⁶`.
pub const DEGENERACY: f64 = 1e-12;

/// Induced metric with its inverse and Levi-Civita connection coefficients.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricData {
    pub g: Mat3,
    pub g_inv: Mat3,
    /// `christoffel[k][i][j] = Γᵏᵢⱼ`.
    pub christoffel: [Mat3; 3],
}

impl MetricData {
    /// `⟨X, Y⟩_g` for coordinate-component vectors.
    pub fn inner(&self, x: &[f64; 3], y: &[f64; 3]) -> f64 {
        let mut s = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                s += self.g[i][j] * x[i] * y[j];
            }
        }
        s
    }
}

/// `gᵢⱼ = ⟨∂ᵢL, ∂ⱼL⟩` and its Christoffel symbols at `p`.
pub fn pullback_metric(imm: &dyn Immersion, p: &ChartPoint) -> Result<MetricData> {
    check_domain(imm, p)?;
    let d = imm.partials(p)?;
    metric_from_partials(&d, p)
}

pub(crate) fn gram(first: &[[f64; 4]; 3]) -> Mat3 {
    let mut g = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in i..3 {
            let v = dot4(&first[i], &first[j]);
            g[i][j] = v;
            g[j][i] = v;
        }
    }
    g
}

pub(crate) fn check_immersion(d: &Partials, g: &Mat3, p: &ChartPoint) -> Result<()> {
    let scale = d.first.iter().map(norm4).fold(0.0, f64::max);
    let det = crate::linalg::det3(g);
    if !(scale > 0.0) || !(det > DEGENERACY * scale.powi(6)) {
        return Err(Error::Degenerate {
            point: p.0,
            reason: format!("Gram determinant {det:e} below threshold (partial scale {scale:e})"),
        });
    }
    Ok(())
}

pub(crate) fn metric_from_partials(d: &Partials, p: &ChartPoint) -> Result<MetricData> {
    let g = gram(&d.first);
    check_immersion(d, &g, p)?;
    let g_inv = inverse3(&g).ok_or_else(|| Error::Degenerate {
        point: p.0,
        reason: "metric is singular".into(),
    })?;

    // ∂ₖ gᵢⱼ = ⟨∂ₖ∂ᵢL, ∂ⱼL⟩ + ⟨∂ᵢL, ∂ₖ∂ⱼL⟩
    let mut dg = [[[0.0; 3]; 3]; 3];
    for (k, dgk) in dg.iter_mut().enumerate() {
        for i in 0..3 {
            for j in 0..3 {
                dgk[i][j] = dot4(&d.second[k][i], &d.first[j]) + dot4(&d.first[i], &d.second[k][j]);
            }
        }
    }
    // Γₗᵢⱼ = ½(∂ᵢ gⱼₗ + ∂ⱼ gᵢₗ − ∂ₗ gᵢⱼ), then raise the first index.
    let mut lowered = [[[0.0; 3]; 3]; 3];
    for (l, low) in lowered.iter_mut().enumerate() {
        for i in 0..3 {
            for j in 0..3 {
                low[i][j] = 0.5 * (dg[i][j][l] + dg[j][i][l] - dg[l][i][j]);
            }
        }
    }
    let mut christoffel = [[[0.0; 3]; 3]; 3];
    for (k, ck) in christoffel.iter_mut().enumerate() {
        for i in 0..3 {
            for j in 0..3 {
                ck[i][j] = (0..3).map(|l| g_inv[k][l] * lowered[l][i][j]).sum();
            }
        }
    }
    Ok(MetricData {
        g,
        g_inv,
        christoffel,
    })
}
