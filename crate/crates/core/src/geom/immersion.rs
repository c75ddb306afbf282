use std::fmt;
use std::sync::Arc;

use crate::dual::{HyperDual, Scalar};
use crate::linalg::Vec4;
use crate::{Error, Result};

/// A point `(x¹, x², x³)` of a chart; catalog families call the coordinates `(t, u, v)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChartPoint(pub [f64; 3]);

impl ChartPoint {
    pub fn new(x1: f64, x2: f64, x3: f64) -> Self {
        Self([x1, x2, x3])
    }

    pub fn coords(&self) -> [f64; 3] {
        self.0
    }

    /// The point moved by `delta` along coordinate axis `axis`.
    pub fn shifted(&self, axis: usize, delta: f64) -> Self {
        let mut c = self.0;
        c[axis] += delta;
        Self(c)
    }
}

impl fmt::Display for ChartPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.0[0], self.0[1], self.0[2])
    }
}

/// Open box `∏ (loᵢ, hiᵢ)` in chart coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChartBox {
    pub lo: [f64; 3],
    pub hi: [f64; 3],
}

impl ChartBox {
    pub fn new(lo: [f64; 3], hi: [f64; 3]) -> Result<Self> {
        for i in 0..3 {
            if !(lo[i] < hi[i]) || !lo[i].is_finite() || !hi[i].is_finite() {
                return Err(Error::config(format!(
                    "axis {i}: empty or unbounded interval ({}, {})",
                    lo[i], hi[i]
                )));
            }
        }
        Ok(Self { lo, hi })
    }

    pub fn contains(&self, p: &ChartPoint) -> bool {
        (0..3).all(|i| p.0[i] > self.lo[i] && p.0[i] < self.hi[i])
    }

    /// The box with `fraction/2` of each axis width removed at both ends.
    pub fn shrunk(&self, fraction: f64) -> Self {
        let mut lo = self.lo;
        let mut hi = self.hi;
        for i in 0..3 {
            let pad = 0.5 * fraction * (self.hi[i] - self.lo[i]);
            lo[i] += pad;
            hi[i] -= pad;
        }
        Self { lo, hi }
    }

    pub fn center(&self) -> ChartPoint {
        ChartPoint([
            0.5 * (self.lo[0] + self.hi[0]),
            0.5 * (self.lo[1] + self.hi[1]),
            0.5 * (self.lo[2] + self.hi[2]),
        ])
    }

    pub fn intersect(&self, other: &ChartBox) -> Result<ChartBox> {
        let mut lo = [0.0; 3];
        let mut hi = [0.0; 3];
        for i in 0..3 {
            lo[i] = self.lo[i].max(other.lo[i]);
            hi[i] = self.hi[i].min(other.hi[i]);
        }
        ChartBox::new(lo, hi)
    }
}

/// First and second partial derivatives of an immersion at one chart point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Partials {
    /// `first[i] = ∂L/∂xⁱ`.
    pub first: [Vec4; 3],
    /// `second[i][j] = ∂²L/∂xⁱ∂xʲ`, symmetric in `(i, j)`.
    pub second: [[Vec4; 3]; 3],
}

/// A smooth map from an open box of 3-space into Euclidean 4-space.
///
/// Implementations are immutable after construction so one value can serve
/// concurrent per-point evaluations.
pub trait Immersion: Send + Sync {
    fn domain(&self) -> ChartBox;

    fn position(&self, p: &ChartPoint) -> Result<Vec4>;

    fn partials(&self, p: &ChartPoint) -> Result<Partials>;
}

pub type ImmersionMap = Arc<dyn Immersion>;

pub(crate) fn check_domain(imm: &dyn Immersion, p: &ChartPoint) -> Result<()> {
    if p.0.iter().any(|x| !x.is_finite()) {
        return Err(Error::domain(format!("chart point {p} is not finite")));
    }
    let d = imm.domain();
    if d.contains(p) {
        Ok(())
    } else {
        Err(Error::domain(format!(
            "chart point {p} lies outside the served box {:?}..{:?}",
            d.lo, d.hi
        )))
    }
}

/// Coordinate functions written once, generically over the scalar type.
///
/// Wrapping a program in [`AutoDiff`] yields an [`Immersion`] whose partials
/// come from hyper-dual evaluation, exact up to rounding.
pub trait CoordinateProgram: Send + Sync {
    fn eval<S: Scalar>(&self, x: [S; 3]) -> [S; 4];

    fn domain(&self) -> ChartBox;
}

/// Forward-mode differentiated immersion.
#[derive(Debug, Clone)]
pub struct AutoDiff<P>(pub P);

impl<P: CoordinateProgram> Immersion for AutoDiff<P> {
    fn domain(&self) -> ChartBox {
        self.0.domain()
    }

    fn position(&self, p: &ChartPoint) -> Result<Vec4> {
        Ok(self.0.eval(p.0))
    }

    fn partials(&self, p: &ChartPoint) -> Result<Partials> {
        let mut first = [[0.0; 4]; 3];
        let mut second = [[[0.0; 4]; 3]; 3];
        for i in 0..3 {
            for j in i..3 {
                let x = std::array::from_fn(|m| HyperDual::variable(p.0[m], m == i, m == j));
                let out = self.0.eval(x);
                for c in 0..4 {
                    second[i][j][c] = out[c].e12;
                    second[j][i][c] = out[c].e12;
                    if j == i {
                        first[i][c] = out[c].e1;
                    }
                }
            }
        }
        if first.iter().chain(second.iter().flatten()).flatten().any(|x| !x.is_finite()) {
            return Err(Error::domain(format!("coordinate program is not finite near {p}")));
        }
        Ok(Partials { first, second })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    struct Saddle;

    impl CoordinateProgram for Saddle {
        fn eval<S: Scalar>(&self, x: [S; 3]) -> [S; 4] {
            [x[0], x[1], x[2], x[0] * x[1] + x[2].sin()]
        }
        fn domain(&self) -> ChartBox {
            ChartBox::new([-1.0; 3], [1.0; 3]).unwrap()
        }
    }

    #[test]
    fn autodiff_partials() {
        let imm = AutoDiff(Saddle);
        let p = ChartPoint::new(0.2, -0.3, 0.5);
        let d = imm.partials(&p).unwrap();
        assert_eq!(d.first[0], [1.0, 0.0, 0.0, -0.3]);
        assert_eq!(d.first[1], [0.0, 1.0, 0.0, 0.2]);
        assert_eq!(d.first[2][3], 0.5f64.cos());
        assert_eq!(d.second[0][1][3], 1.0);
        assert_eq!(d.second[1][0][3], 1.0);
        assert_eq!(d.second[2][2][3], -(0.5f64.sin()));
        assert_eq!(d.second[0][0], [0.0; 4]);
    }

    #[test]
    fn box_helpers() {
        let b = ChartBox::new([0.0, -1.0, 2.0], [1.0, 1.0, 4.0]).unwrap();
        assert!(b.contains(&ChartPoint::new(0.5, 0.0, 3.0)));
        assert!(!b.contains(&ChartPoint::new(0.0, 0.0, 3.0)));
        let s = b.shrunk(0.02);
        assert!((s.lo[0] - 0.01).abs() < 1e-15 && (s.hi[1] - 0.98).abs() < 1e-15);
        assert_eq!(b.center(), ChartPoint::new(0.5, 0.0, 3.0));
        assert!(ChartBox::new([0.0; 3], [0.0, 1.0, 1.0]).is_err());
        let other = ChartBox::new([0.5, -2.0, 3.0], [2.0, 0.0, 5.0]).unwrap();
        let i = b.intersect(&other).unwrap();
        assert_eq!(i.lo, [0.5, -1.0, 3.0]);
        assert_eq!(i.hi, [1.0, 0.0, 4.0]);
    }
}
