use serde::{Deserialize, Serialize};

use crate::geom::{analyze, ChartPoint, Immersion, ShapeData};
use crate::linalg::{sorted3, Vec3};
use crate::{Error, Result};

/// Which case of the ideal pattern `{λ, μ, λ+μ}` a point falls into.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseTag {
    TwoEqual,
    LambdaZero,
    MuZero,
    ThreeDistinct,
    UmbilicDegenerate,
}

impl CaseTag {
    pub fn name(self) -> &'static str {
        match self {
            CaseTag::TwoEqual => "two_equal",
            CaseTag::LambdaZero => "lambda_zero",
            CaseTag::MuZero => "mu_zero",
            CaseTag::ThreeDistinct => "three_distinct",
            CaseTag::UmbilicDegenerate => "umbilic_degenerate",
        }
    }
}

/// Labeling of a sorted triple as `λ`, `μ`, `λ + μ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PatternAssignment {
    pub lambda: f64,
    pub mu: f64,
    pub sum: f64,
    /// Position of the `λ + μ` entry in the sorted triple.
    pub sum_index: usize,
}

/// Relative slack below which two labelings count as tied.
const TIE: f64 = 4.0 * f64::EPSILON;

/// Best `{λ, μ, λ+μ}` labeling of `eigs` and its residual
/// `|κᵢ + κⱼ − κₖ| / max(1, Σ|κ|)`.
///
/// Ties prefer the labeling with the smaller `|λ|`; `λ` is always the entry
/// of smaller magnitude among the two summands.
pub fn equality_pattern(eigs: &Vec3, _tol: f64) -> (f64, PatternAssignment) {
    let e = sorted3(*eigs);
    let norm = e.iter().map(|x| x.abs()).sum::<f64>().max(1.0);
    let mut best: Option<(f64, PatternAssignment)> = None;
    for k in 0..3 {
        let (i, j) = match k {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        };
        let (lambda, mu) = if e[i].abs() <= e[j].abs() { (e[i], e[j]) } else { (e[j], e[i]) };
        let r = (e[i] + e[j] - e[k]).abs() / norm;
        let cand = PatternAssignment {
            lambda,
            mu,
            sum: e[k],
            sum_index: k,
        };
        best = match best {
            None => Some((r, cand)),
            Some((br, b)) => {
                if r < br - TIE || (r <= br + TIE && lambda.abs() < b.lambda.abs()) {
                    Some((r, cand))
                } else {
                    Some((br, b))
                }
            }
        };
    }
    best.expect("three candidates")
}

fn scale(eigs: &Vec3) -> f64 {
    eigs.iter().fold(1.0f64, |m, k| m.max(k.abs()))
}

/// Proof case of an ideal point.
pub fn case_classifier(sd: &ShapeData, tol: f64) -> Result<CaseTag> {
    classify_triple(&sd.principal_curvatures, tol)
}

pub fn classify_triple(eigs: &Vec3, tol: f64) -> Result<CaseTag> {
    let (residual, pat) = equality_pattern(eigs, tol);
    if residual > tol {
        return Err(Error::Classification { residual, tol });
    }
    let eps = tol * scale(eigs);
    let e = sorted3(*eigs);
    Ok(if e[2] - e[0] <= eps {
        CaseTag::UmbilicDegenerate
    } else if (pat.lambda - pat.mu).abs() <= eps {
        CaseTag::TwoEqual
    } else if pat.lambda.abs() <= eps {
        CaseTag::LambdaZero
    } else if pat.mu.abs() <= eps {
        CaseTag::MuZero
    } else {
        CaseTag::ThreeDistinct
    })
}

/// Number of principal curvatures with `|κ| > tol·max(1, spectral radius)`.
pub fn type_number(sd: &ShapeData, tol: f64) -> usize {
    let eps = tol * scale(&sd.principal_curvatures);
    sd.principal_curvatures.iter().filter(|k| k.abs() > eps).count()
}

/// Number of distinct values in the triple, merging neighbours closer than `gap`.
pub fn distinct_count(eigs: &Vec3, gap: f64) -> usize {
    let e = sorted3(*eigs);
    1 + (e[1] - e[0] > gap) as usize + (e[2] - e[1] > gap) as usize
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IdealityVerdict {
    pub delta: f64,
    pub tau: f64,
    pub inf_k: f64,
    pub mean_sq: f64,
    /// `(9/4)H² + 2ε`.
    pub bound: f64,
    /// `bound − delta`.
    pub slack: f64,
    pub pattern_residual: f64,
    pub assignment: PatternAssignment,
    /// Principal curvatures, ascending.
    pub eigen_triple: Vec3,
    /// `None` when the pattern residual exceeds the tolerance.
    pub case_tag: Option<CaseTag>,
    pub is_ideal: bool,
    pub minimal: bool,
    pub type_number: usize,
    pub distinct: usize,
}

/// Compares `δ` against `(9/4)H²` at `p`.
pub fn chen_check(imm: &dyn Immersion, p: &ChartPoint, tol: f64) -> Result<IdealityVerdict> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::parameter(format!("tolerance must be positive, got {tol}")));
    }
    let g = analyze(imm, p)?;
    let c = &g.curvature;
    let eigs = sorted3(g.shape.principal_curvatures);
    let bound = c.bound();
    let slack = bound - c.delta;
    let (pattern_residual, assignment) = equality_pattern(&eigs, tol);
    let radius = g.shape.spectral_radius();
    Ok(IdealityVerdict {
        delta: c.delta,
        tau: c.tau,
        inf_k: c.inf_k,
        mean_sq: c.mean_sq,
        bound,
        slack,
        pattern_residual,
        assignment,
        eigen_triple: eigs,
        case_tag: classify_triple(&eigs, tol).ok(),
        is_ideal: slack.abs() <= tol * bound.max(1.0),
        minimal: g.shape.trace().abs() <= tol * radius,
        type_number: type_number(&g.shape, tol),
        distinct: distinct_count(&eigs, tol * scale(&eigs)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{family_a, family_c, generic_graph, hyperplane, product_l1};

    #[test]
    fn pattern_examples() {
        let (r, p) = equality_pattern(&[1.0, 2.0, 3.0], 1e-9);
        assert_eq!(r, 0.0);
        assert_eq!((p.lambda, p.mu, p.sum), (1.0, 2.0, 3.0));
        assert_eq!(equality_pattern(&[-1.0, 0.0, 1.0], 1e-9).0, 0.0);
        assert!((equality_pattern(&[1.0, 1.0, 1.0], 1e-9).0 - 1.0 / 3.0).abs() < 1e-15);
        let (_, z) = equality_pattern(&[0.0, 0.0, 0.0], 1e-9);
        assert_eq!(z.lambda, 0.0);
        let (r, p) = equality_pattern(&[0.0, 2.0, 2.0], 1e-9);
        assert_eq!((r, p.lambda, p.mu), (0.0, 0.0, 2.0));
    }

    #[test]
    fn classifier_cases() {
        assert_eq!(classify_triple(&[0.5, 0.5, 1.0], 1e-9).unwrap(), CaseTag::TwoEqual);
        assert_eq!(classify_triple(&[0.0, 1.0, 1.0], 1e-9).unwrap(), CaseTag::LambdaZero);
        assert_eq!(classify_triple(&[-0.6, 0.0, 0.6], 1e-9).unwrap(), CaseTag::ThreeDistinct);
        assert_eq!(classify_triple(&[1.0, 2.0, 3.0], 1e-9).unwrap(), CaseTag::ThreeDistinct);
        assert_eq!(classify_triple(&[0.0; 3], 1e-9).unwrap(), CaseTag::UmbilicDegenerate);
        assert!(matches!(
            classify_triple(&[1.0, 1.0, 1.0], 1e-6),
            Err(Error::Classification { .. })
        ));
    }

    #[test]
    fn verdict_examples() {
        let v = chen_check(family_a(1.0).unwrap().as_ref(), &ChartPoint::new(0.5, 0.3, 1.0), 1e-9).unwrap();
        assert!((v.delta - 1.0).abs() < 1e-12 && (v.bound - 1.0).abs() < 1e-12);
        assert!(v.is_ideal && v.slack.abs() < 1e-12);
        assert_eq!(v.case_tag, Some(CaseTag::LambdaZero));
        assert_eq!(v.type_number, 2);

        let flat = chen_check(hyperplane().as_ref(), &ChartPoint::new(0.1, 0.2, 0.3), 1e-9).unwrap();
        assert_eq!((flat.delta, flat.bound, flat.type_number), (0.0, 0.0, 0));
        assert!(flat.is_ideal && flat.minimal);

        let g = generic_graph("1,2,7".parse().unwrap()).unwrap();
        let v = chen_check(g.as_ref(), &ChartPoint::new(0.0, 0.0, 0.0), 1e-6).unwrap();
        // Hessian diag(2, 4, 14): δ = λmax(Ric) = 14·(2+4) = 84, (9/4)H² = 100.
        assert!((v.delta - 84.0).abs() < 1e-9 && (v.bound - 100.0).abs() < 1e-9);
        assert!(!v.is_ideal && v.case_tag.is_none());

        let c = chen_check(family_c(1.0).unwrap().as_ref(), &ChartPoint::new(1.2, 0.0, 0.5), 1e-8).unwrap();
        assert_eq!(c.case_tag, Some(CaseTag::TwoEqual));
        assert_eq!(c.type_number, 3);

        let l1 = chen_check(product_l1().as_ref(), &ChartPoint::new(0.5, 1.0, 0.0), 1e-8).unwrap();
        assert_eq!(l1.case_tag, Some(CaseTag::ThreeDistinct));
        assert!(l1.minimal && l1.is_ideal && l1.distinct == 3);
    }
}
