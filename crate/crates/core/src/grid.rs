//! Tensor-product sampling grids over a chart box.

use std::fmt;
use std::str::FromStr;

use crate::geom::{ChartBox, ChartPoint};
use crate::{Error, Result};

/// Node counts per axis with one closed interval per axis.
///
/// Nodes run from `lo` to `hi` inclusive; an axis with a single node samples
/// the midpoint. Iteration order is lexicographic with the last index fastest.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub counts: [usize; 3],
    pub ranges: [(f64, f64); 3],
}

impl GridSpec {
    pub fn new(counts: [usize; 3], ranges: [(f64, f64); 3]) -> Result<Self> {
        if counts.contains(&0) {
            return Err(Error::config(format!(
                "grid {}x{}x{} has no nodes",
                counts[0], counts[1], counts[2]
            )));
        }
        for (i, &(lo, hi)) in ranges.iter().enumerate() {
            if !(lo.is_finite() && hi.is_finite() && lo <= hi) {
                return Err(Error::config(format!("axis {i}: invalid range {lo}:{hi}")));
            }
        }
        Ok(Self { counts, ranges })
    }

    pub fn over(counts: [usize; 3], domain: &ChartBox) -> Result<Self> {
        Self::new(counts, [0, 1, 2].map(|i| (domain.lo[i], domain.hi[i])))
    }

    pub fn with_range(mut self, axis: usize, range: (f64, f64)) -> Result<Self> {
        self.ranges[axis] = range;
        Self::new(self.counts, self.ranges)
    }

    pub fn len(&self) -> usize {
        self.counts.iter().product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn axis_values(&self, axis: usize) -> Vec<f64> {
        let n = self.counts[axis];
        let (lo, hi) = self.ranges[axis];
        if n == 1 {
            return vec![0.5 * (lo + hi)];
        }
        (0..n)
            .map(|i| if i + 1 == n { hi } else { lo + (hi - lo) * i as f64 / (n - 1) as f64 })
            .collect()
    }

    pub fn nodes(&self) -> Vec<ChartPoint> {
        let [a, b, c] = [0, 1, 2].map(|i| self.axis_values(i));
        let mut out = Vec::with_capacity(self.len());
        for &x in &a {
            for &y in &b {
                for &z in &c {
                    out.push(ChartPoint::new(x, y, z));
                }
            }
        }
        out
    }

    /// Errors unless every node lies strictly inside `domain`.
    pub fn check_inside(&self, domain: &ChartBox) -> Result<()> {
        for i in 0..3 {
            let vals = self.axis_values(i);
            let (lo, hi) = (vals[0], vals[vals.len() - 1]);
            if !(lo > domain.lo[i] && hi < domain.hi[i]) {
                return Err(Error::config(format!(
                    "axis {i}: grid range {lo}:{hi} leaves the served interval ({}, {})",
                    domain.lo[i], domain.hi[i]
                )));
            }
        }
        Ok(())
    }

    pub fn shape_string(&self) -> String {
        format!("{}x{}x{}", self.counts[0], self.counts[1], self.counts[2])
    }
}

impl fmt::Display for GridSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.shape_string())?;
        for (lo, hi) in &self.ranges {
            write!(f, " [{lo}:{hi}]")?;
        }
        Ok(())
    }
}

/// Parses `NtxNuxNv`, e.g. `8x8x8`.
pub fn parse_counts(s: &str) -> Result<[usize; 3]> {
    let bad = || Error::config(format!("grid '{s}' is not of the form NtxNuxNv"));
    let parts: Vec<usize> = s
        .trim()
        .split(['x', 'X'])
        .map(|p| p.trim().parse::<usize>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| bad())?;
    let counts: [usize; 3] = parts.try_into().map_err(|_| bad())?;
    if counts.contains(&0) {
        return Err(Error::config(format!("grid '{s}' is empty")));
    }
    Ok(counts)
}

/// Parses `lo:hi`.
pub fn parse_range(s: &str) -> Result<(f64, f64)> {
    let bad = || Error::config(format!("range '{s}' is not of the form lo:hi"));
    let (lo, hi) = s.split_once(':').ok_or_else(bad)?;
    let lo: f64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: f64 = hi.trim().parse().map_err(|_| bad())?;
    if !(lo.is_finite() && hi.is_finite() && lo <= hi) {
        return Err(bad());
    }
    Ok((lo, hi))
}

/// Counts parsed from `NtxNuxNv`; ranges default to the unit cube until set.
impl FromStr for GridSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GridSpec::new(parse_counts(s)?, [(0.0, 1.0); 3])
    }
}
