//! Jacobi elliptic functions, the quarter period `K(k)`, and adaptive quadrature.
//!
//! `sn`, `cn`, `dn` are evaluated by the descending Landen (AGM) scheme and are
//! valid for every real argument. Quotient ("minor") functions such as
//! `sd = sn/dn` are available through [`JacobiFunction`].

mod jacobi;
mod modulus;
mod quadrature;

pub use jacobi::{invert_sn, jacobi_minor, jacobi_sncndn, JacobiFunction, JacobiState, POLE_THRESHOLD};
pub use modulus::{complete_quarter_period, EllipticModulus, QUARTER_PERIOD_TOL};
pub use quadrature::{integrate_adaptive, Integral, DEFAULT_TOL};
