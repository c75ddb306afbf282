//! Chen's δ(2) invariant for hypersurfaces of Euclidean 4-space.
//!
//! The crate computes the curvature data of chart-parametrized hypersurfaces
//! `M³ → E⁴`, evaluates `δ_M = τ − inf K` against the bound `(9/4)H² + 2ε`,
//! and ships the ideal families (spherical cylinder, cone, and the Jacobi
//! elliptic hypersurface) together with the catenoid/helicoid product pair
//! used as a non-rigidity example.
//!
//! Module map:
//!
//! * [`elliptic`]: Jacobi elliptic functions, quarter period, adaptive quadrature.
//! * [`geom`]: metric, normal, shape operator, Gauss/Codazzi machinery.
//! * [`catalog`]: concrete immersions.
//! * [`verify`]: ideality verdicts, rigidity prerequisites, grid scans.
//! * [`report`]: the versioned JSON report document.

// Tensor code indexes several arrays with the same loop variables, and
// `!(x > 0.0)` style guards deliberately reject NaN.
#![allow(clippy::needless_range_loop, clippy::neg_cmp_op_on_partial_ord)]

pub mod catalog;
pub mod dual;
pub mod elliptic;
mod error;
pub mod geom;
pub mod grid;
pub mod linalg;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
