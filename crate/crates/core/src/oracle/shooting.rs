//! Shooting eigensolver for the Dirichlet p-Laplacian on `(-L, L)`.
//!
//! With `v = |u'|^{p-2} u'` the equation becomes the first-order system
//!
//! ```text
//! u' = phi(v, q),   v' = -lambda phi(u, p),   phi(s, r) = |s|^{r-2} s,
//! ```
//!
//! where `q = p/(p-1)`. Starting from `u(-L) = 0`, `v(-L) = 1` the residual
//! `u(L)` is positive below the first eigenvalue and negative just above it.

use crate::eigen::{bounds_for, PParam};
use crate::error::{domain, Error, Result};
use crate::oracle::ode::Stepper;

/// `|s|^{r-2} s` with `phi(0, r) = 0`.
pub fn phi(s: f64, r: f64) -> Result<f64> {
    if !(r > 1.0) {
        return Err(domain(format!("phi requires r > 1, got {r}")));
    }
    Ok(flux(s, r))
}

#[inline]
fn flux(s: f64, r: f64) -> f64 {
    if s == 0.0 {
        0.0
    } else {
        s.abs().powf(r - 1.0).copysign(s)
    }
}

/// Number of grid intervals used by [`eigenvalue_shooting`] for the
/// positivity check of the eigenfunction.
pub const POSITIVITY_GRID: usize = 1000;
const MIN_GRID: usize = 100;
const MAX_BISECTIONS: usize = 200;
/// Length of the first step, taken from the local expansion at the left end,
/// relative to the half-length.
const START_OFFSET: f64 = 1e-6;

/// One integration of the initial value problem.
#[derive(Debug, Clone, Copy)]
pub struct Shot {
    /// `u` at the right endpoint.
    pub residual: f64,
    /// Smallest `u` over the interior grid nodes.
    pub min_interior: f64,
    pub ode_steps: usize,
}

fn validate(lambda: f64, half_length: f64, steps: usize) -> Result<()> {
    if !(lambda.is_finite() && lambda > 0.0) {
        return Err(domain(format!("lambda must be positive, got {lambda}")));
    }
    if !(half_length.is_finite() && half_length > 0.0) {
        return Err(domain(format!(
            "half-length must be positive, got {half_length}"
        )));
    }
    if steps < MIN_GRID {
        return Err(domain(format!(
            "need at least {MIN_GRID} grid intervals, got {steps}"
        )));
    }
    Ok(())
}

/// Integrates from `-L` to `L` through `steps` equal grid intervals
/// (each traversed adaptively).
///
/// The right-hand side `phi(u, p)` is not Lipschitz at `u = 0` when `p < 2`,
/// so the first `1e-6 L` is covered by the expansion
/// `u = s - (q-1) lambda s^{p+1} / (p(p+1))`, `v = 1 - lambda s^p / p`.
pub fn shoot(p: &PParam, lambda: f64, half_length: f64, steps: usize) -> Result<Shot> {
    validate(lambda, half_length, steps)?;
    let (pe, qe) = (p.p(), p.q());
    let rhs = |_t: f64, y: &[f64; 2]| [flux(y[1], qe), -lambda * flux(y[0], pe)];

    let stepper = Stepper::default();
    let s0 = START_OFFSET * half_length;
    let sp = s0.powf(pe);
    let mut y = [
        s0 - (qe - 1.0) * lambda * sp * s0 / (pe * (pe + 1.0)),
        1.0 - lambda * sp / pe,
    ];
    let dt = 2.0 * half_length / steps as f64;
    let mut t = -half_length + s0;
    let mut h = s0;
    let mut ode_steps = 1;
    let mut min_interior = f64::INFINITY;

    for i in 1..=steps {
        let t_next = -half_length + i as f64 * dt;
        if t_next > t {
            let span = stepper.integrate(rhs, t, y, t_next, h)?;
            y = span.y;
            h = span.h_next;
            ode_steps += span.accepted;
            t = t_next;
        }
        if i < steps {
            min_interior = min_interior.min(y[0]);
        }
    }

    Ok(Shot {
        residual: y[0],
        min_interior,
        ode_steps,
    })
}

/// `u(1)` for the problem on `(-1, 1)`.
pub fn shoot_residual(p: &PParam, lambda: f64, steps: usize) -> Result<f64> {
    shoot(p, lambda, 1.0, steps).map(|s| s.residual)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShootingResult {
    pub lambda_estimate: f64,
    /// `u` at the right endpoint for `lambda_estimate`.
    pub residual: f64,
    pub bisection_iterations: usize,
    /// Accepted integrator steps summed over all shots.
    pub ode_steps: usize,
}

/// First eigenvalue on `(-1, 1)` by bisection on the shooting residual.
pub fn eigenvalue_shooting(p: &PParam, tol: f64) -> Result<ShootingResult> {
    eigenvalue_shooting_on(p, 1.0, tol)
}

/// First eigenvalue on `(-L, L)`.
///
/// The initial bracket is `[0.9 lower, 1.1 upper] / L^p` from the explicit
/// bounds; bisection stops once `|u(L)| <= tol` and the eigenfunction is
/// positive on the interior grid.
pub fn eigenvalue_shooting_on(p: &PParam, half_length: f64, tol: f64) -> Result<ShootingResult> {
    if !(tol > 0.0) {
        return Err(domain(format!("tolerance must be positive, got {tol}")));
    }
    validate(1.0, half_length, POSITIVITY_GRID)?;
    let b = bounds_for(p);
    let scale = half_length.powf(-p.p());
    let mut lo = 0.9 * b.lower * scale;
    let mut hi = 1.1 * b.upper * scale;

    let mut ode_steps = 0;
    let mut fire = |lambda: f64| -> Result<Shot> {
        let shot = shoot(p, lambda, half_length, POSITIVITY_GRID)?;
        ode_steps += shot.ode_steps;
        Ok(shot)
    };

    let r_lo = fire(lo)?.residual;
    let r_hi = fire(hi)?.residual;
    if !(r_lo > 0.0 && r_hi < 0.0) {
        return Err(Error::Bracket { lo, hi });
    }

    let mut best = f64::INFINITY;
    for it in 1..=MAX_BISECTIONS {
        let mid = 0.5 * (lo + hi);
        let shot = fire(mid)?;
        best = best.min(shot.residual.abs());
        if shot.residual.abs() <= tol {
            if shot.min_interior <= 0.0 {
                return Err(domain(format!(
                    "eigenfunction for lambda = {mid} changes sign inside the interval"
                )));
            }
            return Ok(ShootingResult {
                lambda_estimate: mid,
                residual: shot.residual,
                bisection_iterations: it,
                ode_steps,
            });
        }
        if shot.residual > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= 4.0 * f64::EPSILON * hi {
            break;
        }
    }
    Err(Error::Tolerance {
        tol,
        achieved: best,
    })
}
