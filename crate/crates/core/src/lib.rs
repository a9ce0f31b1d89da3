//! Evaluation, bounds, asymptotic expansion and independent numerical checks
//! for the first eigenvalue `lambda(p)` of the one-dimensional p-Laplacian
//!
//! ```text
//! (|u'|^{p-2} u')' + lambda |u|^{p-2} u = 0  on (-1, 1),   u(-1) = u(1) = 0.
//! ```
//!
//! * [`eigen`]: closed form, derivative, bounds, rescaling and the critical
//!   exponent `p_*(L)`.
//! * [`series`]: truncated power-series algebra and the expansion of
//!   `lambda(pi/x) - pi/x` about `x = 0`.
//! * [`oracle`]: a shooting eigensolver for the boundary value problem and a
//!   quadrature for the half-period `pi_p`.
//! * [`verify`]: a falsification harness over scalar inequalities, decimal
//!   constants and limit tables.

// `!(x > 0.0)` deliberately rejects NaN along with non-positive values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod eigen;
pub mod error;
pub mod oracle;
pub mod series;
pub mod special;
pub mod verify;

pub use eigen::{
    asymptotic_gap, bounds_for, conjugate, find_pstar, global_bounds_for, lambda_exact,
    lambda_prime, lambda_scaled, sinc_bounds, BoundSandwich, EigenValue, PParam, Regime,
};
pub use error::{Error, Result};
pub use series::{lambda_approx, lambda_asymptotic_series, t_series, PowerSeries};
