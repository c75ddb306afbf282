//! Catenoid and helicoid, each crossed with a line, in one shared chart `(s, t, x)`.
//!
//! The helicoid is precomposed with the isometry
//! `(cosh s cos t, cosh s sin t, s) ↦ (sinh s cos t, sinh s sin t, t)`, so both
//! immersions induce `cosh²s (ds² + dt²) + dx²` on the same chart.

use std::f64::consts::PI;

use crate::geom::{ChartBox, ChartPoint, Immersion, Partials};
use crate::linalg::Vec4;
use crate::Result;

/// Half-width of the served `x` interval (the line factor is unbounded).
pub const LINE_HALF_LENGTH: f64 = 1.0;

pub(crate) fn product_domain() -> ChartBox {
    let s_max = 1f64.asinh();
    ChartBox::new([-s_max, 0.0, -LINE_HALF_LENGTH], [s_max, 2.0 * PI, LINE_HALF_LENGTH])
        .expect("non-empty box")
}

/// Catenoid × ℝ: `(cosh s cos t, cosh s sin t, s, x)`.
#[derive(Debug, Clone, Copy, Default)]
pub struct CatenoidProduct;

/// Helicoid × ℝ in the catenoid chart: `(sinh s cos t, sinh s sin t, t, x)`.
#[derive(Debug, Clone, Copy, Default)]
pub struct HelicoidProduct;

const E4: Vec4 = [0.0, 0.0, 0.0, 1.0];
const ZERO: Vec4 = [0.0; 4];

impl Immersion for CatenoidProduct {
    fn domain(&self) -> ChartBox {
        product_domain()
    }

    fn position(&self, p: &ChartPoint) -> Result<Vec4> {
        let [s, t, x] = p.0;
        Ok([s.cosh() * t.cos(), s.cosh() * t.sin(), s, x])
    }

    fn partials(&self, p: &ChartPoint) -> Result<Partials> {
        let [s, t, _] = p.0;
        let (ch, sh) = (s.cosh(), s.sinh());
        let (st, ct) = t.sin_cos();
        let ds = [sh * ct, sh * st, 1.0, 0.0];
        let dt = [-ch * st, ch * ct, 0.0, 0.0];
        let ss = [ch * ct, ch * st, 0.0, 0.0];
        let s_t = [-sh * st, sh * ct, 0.0, 0.0];
        let tt = [-ch * ct, -ch * st, 0.0, 0.0];
        Ok(Partials {
            first: [ds, dt, E4],
            second: [[ss, s_t, ZERO], [s_t, tt, ZERO], [ZERO, ZERO, ZERO]],
        })
    }
}

impl Immersion for HelicoidProduct {
    fn domain(&self) -> ChartBox {
        product_domain()
    }

    fn position(&self, p: &ChartPoint) -> Result<Vec4> {
        let [s, t, x] = p.0;
        Ok([s.sinh() * t.cos(), s.sinh() * t.sin(), t, x])
    }

    fn partials(&self, p: &ChartPoint) -> Result<Partials> {
        let [s, t, _] = p.0;
        let (ch, sh) = (s.cosh(), s.sinh());
        let (st, ct) = t.sin_cos();
        let ds = [ch * ct, ch * st, 0.0, 0.0];
        let dt = [-sh * st, sh * ct, 1.0, 0.0];
        let ss = [sh * ct, sh * st, 0.0, 0.0];
        let s_t = [-ch * st, ch * ct, 0.0, 0.0];
        let tt = [-sh * ct, -sh * st, 0.0, 0.0];
        Ok(Partials {
            first: [ds, dt, E4],
            second: [[ss, s_t, ZERO], [s_t, tt, ZERO], [ZERO, ZERO, ZERO]],
        })
    }
}
