use crate::geom::{pullback_metric, second_fundamental, Immersion};
use crate::grid::GridSpec;
use crate::linalg::Mat3;
use crate::{Error, Result};

fn check_shared(imm1: &dyn Immersion, imm2: &dyn Immersion, grid: &GridSpec) -> Result<()> {
    if grid.is_empty() {
        return Err(Error::config("grid has no nodes"));
    }
    grid.check_inside(&imm1.domain())
        .and_then(|_| grid.check_inside(&imm2.domain()))
        .map_err(|e| Error::config(format!("grid is not inside both charts: {e}")))
}

fn max_entry_diff(a: &Mat3, b: &Mat3, sign: f64) -> f64 {
    let mut m: f64 = 0.0;
    for i in 0..3 {
        for j in 0..3 {
            m = m.max((a[i][j] - sign * b[i][j]).abs());
        }
    }
    m
}

/// Max entrywise `|g¹ᵢⱼ − g²ᵢⱼ|` over the grid.
pub fn isometry_check(imm1: &dyn Immersion, imm2: &dyn Immersion, grid: &GridSpec) -> Result<f64> {
    check_shared(imm1, imm2, grid)?;
    let mut worst: f64 = 0.0;
    for p in grid.nodes() {
        let g1 = pullback_metric(imm1, &p)?.g;
        let g2 = pullback_metric(imm2, &p)?.g;
        worst = worst.max(max_entry_diff(&g1, &g2, 1.0));
    }
    Ok(worst)
}

/// Entrywise `|h¹ − h²|` and `|h¹ + h²|` (both normal orientations) at each node.
pub fn shape_discrepancies(imm1: &dyn Immersion, imm2: &dyn Immersion, grid: &GridSpec) -> Result<Vec<[f64; 2]>> {
    check_shared(imm1, imm2, grid)?;
    grid.nodes()
        .iter()
        .map(|p| {
            let h1 = second_fundamental(imm1, p)?.h;
            let h2 = second_fundamental(imm2, p)?.h;
            Ok([max_entry_diff(&h1, &h2, 1.0), max_entry_diff(&h1, &h2, -1.0)])
        })
        .collect()
}

/// Max over the grid of the sign-minimized second-fundamental-form discrepancy.
///
/// A large value shows the two maps differ as parametrized immersions; it is a
/// necessary condition for non-congruence, not a proof of it.
pub fn noncongruence_witness(imm1: &dyn Immersion, imm2: &dyn Immersion, grid: &GridSpec) -> Result<f64> {
    Ok(shape_discrepancies(imm1, imm2, grid)?
        .iter()
        .map(|d| d[0].min(d[1]))
        .fold(0.0, f64::max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{family_a, product_l1, product_l2};
    use crate::geom::Similarity;
    use std::f64::consts::FRAC_PI_2;

    fn at(p: [f64; 3]) -> GridSpec {
        GridSpec::new([1, 1, 1], p.map(|x| (x, x))).unwrap()
    }

    #[test]
    fn pair_examples() {
        let (l1, l2) = (product_l1(), product_l2());
        let grid = GridSpec::over([10, 10, 3], &l1.domain().shrunk(0.02)).unwrap();
        assert!(isometry_check(l1.as_ref(), l2.as_ref(), &grid).unwrap() <= 1e-9);
        assert_eq!(isometry_check(l1.as_ref(), l1.as_ref(), &grid).unwrap(), 0.0);
        let w = noncongruence_witness(l1.as_ref(), l2.as_ref(), &at([0.0, FRAC_PI_2, 0.0])).unwrap();
        assert!(w >= 0.5, "{w}");
        assert_eq!(noncongruence_witness(l1.as_ref(), l1.as_ref(), &grid).unwrap(), 0.0);

        let moved = Similarity::rigid(l1.clone(), [0.3, -1.1, 0.7, 2.0, 0.1, -0.4], [1.0, 2.0, -3.0, 0.5]);
        assert!(noncongruence_witness(l1.as_ref(), &moved, &grid).unwrap() <= 1e-10);
    }

    #[test]
    fn different_geometries_and_mismatched_charts() {
        let (l1, cyl) = (product_l1(), family_a(1.0).unwrap());
        let shared = l1.domain().intersect(&cyl.domain()).unwrap().shrunk(0.1);
        let grid = GridSpec::over([3, 3, 3], &shared).unwrap();
        assert!(isometry_check(l1.as_ref(), cyl.as_ref(), &grid).unwrap() > 0.1);
        let wide = GridSpec::over([3, 3, 3], &cyl.domain().shrunk(0.02)).unwrap();
        assert!(matches!(
            isometry_check(l1.as_ref(), cyl.as_ref(), &wide),
            Err(Error::Configuration(_))
        ));
    }
}
