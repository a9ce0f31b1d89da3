//! Half-period of the generalized sine,
//!
//! ```text
//! pi_p = 2 * int_0^1 (1 - s^p)^{-1/p} ds = 2 pi / (p sin(pi/p)),
//! ```
//!
//! by tanh-sinh quadrature. The substitution `s = 1/(1 + exp(-pi sinh tau))`
//! gives the complement `1 - s = 1/(1 + exp(pi sinh tau))` in closed form, so
//! `1 - s^p` is evaluated without cancellation next to the singular endpoint
//! and the transformed integrand decays double-exponentially.

use std::f64::consts::PI;

use crate::eigen::PParam;
use crate::error::{domain, Error, Result};

const MAX_LEVEL: usize = 12;
const TAU_MAX: f64 = 7.0;

fn integrand(p: f64, s: f64, c: f64) -> f64 {
    let one_minus_sp = if s < 0.5 {
        1.0 - s.powf(p)
    } else {
        -(p * (-c).ln_1p()).exp_m1()
    };
    one_minus_sp.powf(-1.0 / p)
}

/// Contribution of the node `tau` (weight included).
fn node(p: f64, tau: f64) -> f64 {
    let u = PI * tau.sinh();
    let s = 1.0 / (1.0 + (-u).exp());
    let c = 1.0 / (1.0 + u.exp());
    if s == 0.0 || c == 0.0 {
        return 0.0;
    }
    let w = PI * tau.cosh() * s * c;
    if w == 0.0 {
        0.0
    } else {
        w * integrand(p, s, c)
    }
}

/// `2 * int_0^1 (1 - s^p)^{-1/p} ds`, refined until successive levels agree
/// to absolute tolerance `tol`.
pub fn pi_p_quadrature(p: &PParam, tol: f64) -> Result<f64> {
    if !(tol > 0.0) {
        return Err(domain(format!("tolerance must be positive, got {tol}")));
    }
    let pe = p.p();
    let mut h = 1.0;
    // level 0: nodes at every integer tau
    let mut sum = node(pe, 0.0);
    let n0 = TAU_MAX as i64;
    for k in 1..=n0 {
        let t = k as f64;
        sum += node(pe, t) + node(pe, -t);
    }
    let mut prev = 2.0 * h * sum;
    let mut diff = f64::INFINITY;

    for _ in 1..=MAX_LEVEL {
        h *= 0.5;
        // new nodes are the odd multiples of h
        let n = (TAU_MAX / h) as i64;
        let mut k = 1;
        while k <= n {
            let t = k as f64 * h;
            sum += node(pe, t) + node(pe, -t);
            k += 2;
        }
        let cur = 2.0 * h * sum;
        diff = (cur - prev).abs();
        if diff <= tol {
            return Ok(cur);
        }
        prev = cur;
    }
    Err(Error::Tolerance {
        tol,
        achieved: diff,
    })
}

/// `2 pi / (p sin(pi/p))`, using `sin(pi/q)` when `pi/p` is close to `pi`.
pub fn pi_p_closed_form(p: &PParam) -> f64 {
    let s = if p.angle() <= PI / 2.0 {
        p.angle().sin()
    } else {
        p.complement().sin()
    };
    2.0 * PI / (p.p() * s)
}
