use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::ideality::{chen_check, IdealityVerdict};
use crate::geom::{codazzi_residual, gauss_riemann, intrinsic_riemann, Immersion, ChartPoint};
use crate::geom::structure;
use crate::grid::GridSpec;
use crate::{Error, Result};

/// Finite-difference step for the structure-equation residuals.
pub const STRUCTURE_STEP: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanOptions {
    pub tol: f64,
    /// Worker threads; 0 lets the pool pick.
    pub threads: usize,
    pub step: f64,
}

impl Default for ScanOptions {
    fn default() -> Self {
        Self {
            tol: 1e-6,
            threads: 0,
            step: STRUCTURE_STEP,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointRecord {
    pub point: [f64; 3],
    pub verdict: Option<IdealityVerdict>,
    pub gauss_residual: Option<f64>,
    pub codazzi_residual: Option<f64>,
    pub error: Option<String>,
}

/// Extrema over all successfully evaluated nodes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanSummary {
    pub nodes: usize,
    pub failed: usize,
    pub max_abs_slack: f64,
    /// `max |slack| / max(1, bound)`.
    pub max_rel_slack: f64,
    /// `min slack / max(1, bound)`; negative values would contradict the inequality.
    pub min_rel_slack: f64,
    pub max_pattern_residual: f64,
    pub max_gauss_residual: f64,
    pub max_codazzi_residual: f64,
    pub all_ideal: bool,
    /// Number of nodes per case tag; unclassified nodes are counted under `none`.
    pub case_counts: BTreeMap<String, usize>,
}

#[derive(Debug, Clone)]
pub struct ScanReport {
    pub grid: GridSpec,
    pub points: Vec<PointRecord>,
    pub summary: ScanSummary,
    pub wall_time: Duration,
}

fn gauss_residual(imm: &dyn Immersion, p: &ChartPoint, step: f64) -> Result<f64> {
    let intrinsic = intrinsic_riemann(imm, p, step)?;
    let (_, sd) = structure::shape_at(imm, p)?;
    Ok(intrinsic.max_abs_diff(&gauss_riemann(&sd.h)))
}

/// Ideality verdict plus Gauss and Codazzi residuals at one node.
pub fn evaluate_point(imm: &dyn Immersion, p: &ChartPoint, opts: &ScanOptions) -> PointRecord {
    let run = || -> Result<(IdealityVerdict, f64, f64)> {
        Ok((
            chen_check(imm, p, opts.tol)?,
            gauss_residual(imm, p, opts.step)?,
            codazzi_residual(imm, p, opts.step)?,
        ))
    };
    match run() {
        Ok((v, g, c)) => PointRecord {
            point: p.0,
            verdict: Some(v),
            gauss_residual: Some(g),
            codazzi_residual: Some(c),
            error: None,
        },
        Err(e) => PointRecord {
            point: p.0,
            verdict: None,
            gauss_residual: None,
            codazzi_residual: None,
            error: Some(e.to_string()),
        },
    }
}

/// Sequential fold so the result does not depend on evaluation order.
pub fn summarize(points: &[PointRecord]) -> ScanSummary {
    let mut s = ScanSummary {
        nodes: points.len(),
        failed: 0,
        max_abs_slack: 0.0,
        max_rel_slack: 0.0,
        min_rel_slack: f64::INFINITY,
        max_pattern_residual: 0.0,
        max_gauss_residual: 0.0,
        max_codazzi_residual: 0.0,
        all_ideal: true,
        case_counts: BTreeMap::new(),
    };
    for rec in points {
        let Some(v) = &rec.verdict else {
            s.failed += 1;
            s.all_ideal = false;
            continue;
        };
        let rel = v.slack / v.bound.max(1.0);
        s.max_abs_slack = s.max_abs_slack.max(v.slack.abs());
        s.max_rel_slack = s.max_rel_slack.max(rel.abs());
        s.min_rel_slack = s.min_rel_slack.min(rel);
        s.max_pattern_residual = s.max_pattern_residual.max(v.pattern_residual);
        s.max_gauss_residual = s.max_gauss_residual.max(rec.gauss_residual.unwrap_or(0.0));
        s.max_codazzi_residual = s.max_codazzi_residual.max(rec.codazzi_residual.unwrap_or(0.0));
        s.all_ideal &= v.is_ideal;
        let tag = v.case_tag.map_or("none", |t| t.name());
        *s.case_counts.entry(tag.to_string()).or_default() += 1;
    }
    if s.min_rel_slack == f64::INFINITY {
        s.min_rel_slack = 0.0;
    }
    s
}

/// Evaluates every grid node, in parallel, and aggregates the results.
pub fn scan(imm: &dyn Immersion, grid: &GridSpec, opts: &ScanOptions) -> Result<ScanReport> {
    if grid.is_empty() {
        return Err(Error::config("grid has no nodes"));
    }
    if !(opts.tol > 0.0 && opts.tol.is_finite()) {
        return Err(Error::parameter(format!("tolerance must be positive, got {}", opts.tol)));
    }
    grid.check_inside(&imm.domain())?;
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.threads)
        .build()
        .map_err(|e| Error::config(format!("cannot start worker pool: {e}")))?;
    let nodes = grid.nodes();
    let points: Vec<PointRecord> = pool.install(|| nodes.par_iter().map(|p| evaluate_point(imm, p, opts)).collect());
    let summary = summarize(&points);
    if summary.failed == summary.nodes {
        let first = points[0].error.clone().unwrap_or_default();
        return Err(Error::Numeric {
            message: format!("every grid node failed; first error: {first}"),
            estimate: f64::NAN,
        });
    }
    Ok(ScanReport {
        grid: *grid,
        points,
        summary,
        wall_time: start.elapsed(),
    })
}
