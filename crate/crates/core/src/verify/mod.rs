//! Ideality verdicts, rigidity prerequisites, and grid scans.

mod ideality;
mod ode;
mod rigidity;
mod scan;

pub use ideality::{
    case_classifier, chen_check, classify_triple, distinct_count, equality_pattern, type_number, CaseTag,
    IdealityVerdict, PatternAssignment,
};
pub use ode::{ode_residual, ode_residual_of};
pub use rigidity::{isometry_check, noncongruence_witness, shape_discrepancies};
pub use scan::{evaluate_point, scan, summarize, PointRecord, ScanOptions, ScanReport, ScanSummary, STRUCTURE_STEP};
