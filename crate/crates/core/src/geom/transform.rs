//! Immersions composed with similarity transformations of 4-space.

use super::immersion::{ChartBox, ChartPoint, Immersion, ImmersionMap, Partials};
use crate::linalg::{Mat4, Vec4};
use crate::{Error, Result};

fn apply(m: &Mat4, v: &Vec4) -> Vec4 {
    std::array::from_fn(|i| (0..4).map(|j| m[i][j] * v[j]).sum())
}

fn mat4_mul(a: &Mat4, b: &Mat4) -> Mat4 {
    std::array::from_fn(|i| std::array::from_fn(|j| (0..4).map(|k| a[i][k] * b[k][j]).sum()))
}

const IDENTITY4: Mat4 = [
    [1.0, 0.0, 0.0, 0.0],
    [0.0, 1.0, 0.0, 0.0],
    [0.0, 0.0, 1.0, 0.0],
    [0.0, 0.0, 0.0, 1.0],
];

/// `x ↦ scale · R x + b` applied after an immersion, with `R` orthogonal.
pub struct Similarity {
    inner: ImmersionMap,
    linear: Mat4,
    translation: Vec4,
}

impl Similarity {
    /// Rigid motion built from rotation angles in the six coordinate planes
    /// `(0,1), (0,2), (0,3), (1,2), (1,3), (2,3)`, applied in that order.
    pub fn rigid(inner: ImmersionMap, angles: [f64; 6], translation: Vec4) -> Self {
        let planes = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let mut r = IDENTITY4;
        for ((a, b), theta) in planes.into_iter().zip(angles) {
            let mut g = IDENTITY4;
            let (s, c) = theta.sin_cos();
            g[a][a] = c;
            g[b][b] = c;
            g[a][b] = -s;
            g[b][a] = s;
            r = mat4_mul(&g, &r);
        }
        Self {
            inner,
            linear: r,
            translation,
        }
    }

    /// Homothety `x ↦ c·x` with `c > 0`.
    pub fn scaled(inner: ImmersionMap, factor: f64) -> Result<Self> {
        if !(factor > 0.0 && factor.is_finite()) {
            return Err(Error::parameter(format!("scale factor must be positive, got {factor}")));
        }
        let mut m = IDENTITY4;
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = factor;
        }
        Ok(Self {
            inner,
            linear: m,
            translation: [0.0; 4],
        })
    }

    /// A reflection through the hyperplane `x₄ = 0`; reverses orientation.
    pub fn reflected(inner: ImmersionMap) -> Self {
        let mut m = IDENTITY4;
        m[3][3] = -1.0;
        Self {
            inner,
            linear: m,
            translation: [0.0; 4],
        }
    }
}

impl Immersion for Similarity {
    fn domain(&self) -> ChartBox {
        self.inner.domain()
    }

    fn position(&self, p: &ChartPoint) -> Result<Vec4> {
        let x = apply(&self.linear, &self.inner.position(p)?);
        Ok(std::array::from_fn(|i| x[i] + self.translation[i]))
    }

    fn partials(&self, p: &ChartPoint) -> Result<Partials> {
        let d = self.inner.partials(p)?;
        Ok(Partials {
            first: d.first.map(|v| apply(&self.linear, &v)),
            second: d.second.map(|row| row.map(|v| apply(&self.linear, &v))),
        })
    }
}
