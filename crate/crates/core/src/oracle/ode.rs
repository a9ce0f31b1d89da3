//! Adaptive Dormand–Prince 5(4) integrator for small ODE systems.

use crate::error::{Error, Result};

// Butcher tableau
const C2: f64 = 1.0 / 5.0;
const C3: f64 = 3.0 / 10.0;
const C4: f64 = 4.0 / 5.0;
const C5: f64 = 8.0 / 9.0;

const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const A71: f64 = 35.0 / 384.0;
const A73: f64 = 500.0 / 1113.0;
const A74: f64 = 125.0 / 192.0;
const A75: f64 = -2187.0 / 6784.0;
const A76: f64 = 11.0 / 84.0;

// 5th-order weights minus the embedded 4th-order weights
const E1: f64 = 71.0 / 57600.0;
const E3: f64 = -71.0 / 16695.0;
const E4: f64 = 71.0 / 1920.0;
const E5: f64 = -17253.0 / 339200.0;
const E6: f64 = 22.0 / 525.0;
const E7: f64 = -1.0 / 40.0;

const SAFETY: f64 = 0.9;
const MIN_FACTOR: f64 = 0.2;
const MAX_FACTOR: f64 = 5.0;

#[derive(Debug, Clone, Copy)]
pub struct Stepper {
    pub rtol: f64,
    pub atol: f64,
    /// Smallest step allowed before reporting failure.
    pub h_min: f64,
    pub max_steps: usize,
}

impl Default for Stepper {
    fn default() -> Self {
        Self {
            rtol: 1e-10,
            atol: 1e-13,
            h_min: 1e-15,
            max_steps: 1_000_000,
        }
    }
}

/// Outcome of [`Stepper::integrate`].
#[derive(Debug, Clone, Copy)]
pub struct Span<const N: usize> {
    pub y: [f64; N],
    pub accepted: usize,
    pub rejected: usize,
    /// Step size to try next.
    pub h_next: f64,
}

fn axpy<const N: usize>(y: &[f64; N], h: f64, terms: &[(f64, &[f64; N])]) -> [f64; N] {
    let mut out = *y;
    for (i, o) in out.iter_mut().enumerate() {
        let s: f64 = terms.iter().map(|(a, k)| a * k[i]).sum();
        *o += h * s;
    }
    out
}

impl Stepper {
    /// Integrates `y' = f(t, y)` from `t0` to `t1 > t0` starting with step `h`.
    pub fn integrate<const N: usize, F>(
        &self,
        f: F,
        t0: f64,
        y0: [f64; N],
        t1: f64,
        h: f64,
    ) -> Result<Span<N>>
    where
        F: Fn(f64, &[f64; N]) -> [f64; N],
    {
        let mut t = t0;
        let mut y = y0;
        let mut h_try = h;
        let mut accepted = 0;
        let mut rejected = 0;
        let mut k1 = f(t, &y);

        while t < t1 {
            if accepted + rejected >= self.max_steps {
                return Err(Error::Integration {
                    t,
                    reason: format!("step budget of {} exhausted", self.max_steps),
                });
            }
            let last = t + h_try >= t1;
            let h = if last { t1 - t } else { h_try };

            let k2 = f(t + C2 * h, &axpy(&y, h, &[(A21, &k1)]));
            let k3 = f(t + C3 * h, &axpy(&y, h, &[(A31, &k1), (A32, &k2)]));
            let k4 = f(
                t + C4 * h,
                &axpy(&y, h, &[(A41, &k1), (A42, &k2), (A43, &k3)]),
            );
            let k5 = f(
                t + C5 * h,
                &axpy(&y, h, &[(A51, &k1), (A52, &k2), (A53, &k3), (A54, &k4)]),
            );
            let k6 = f(
                t + h,
                &axpy(
                    &y,
                    h,
                    &[(A61, &k1), (A62, &k2), (A63, &k3), (A64, &k4), (A65, &k5)],
                ),
            );
            let y_new = axpy(
                &y,
                h,
                &[(A71, &k1), (A73, &k3), (A74, &k4), (A75, &k5), (A76, &k6)],
            );
            let k7 = f(t + h, &y_new);

            let mut err = 0.0f64;
            for i in 0..N {
                let e = h
                    * (E1 * k1[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i] + E6 * k6[i] + E7 * k7[i]);
                let scale = self.atol + self.rtol * y[i].abs().max(y_new[i].abs());
                err = err.max((e / scale).abs());
            }
            if !err.is_finite() {
                err = f64::INFINITY;
            }

            let factor = if err == 0.0 {
                MAX_FACTOR
            } else {
                (SAFETY * err.powf(-0.2)).clamp(MIN_FACTOR, MAX_FACTOR)
            };

            if err <= 1.0 {
                t = if last { t1 } else { t + h };
                y = y_new;
                k1 = k7;
                accepted += 1;
                if !last {
                    h_try = h * factor;
                }
            } else {
                rejected += 1;
                h_try = h * factor.min(1.0);
                if h_try < self.h_min {
                    return Err(Error::Integration {
                        t,
                        reason: format!("step size underflow (h = {h_try:e})"),
                    });
                }
            }
        }

        Ok(Span {
            y,
            accepted,
            rejected,
            h_next: h_try,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn harmonic_oscillator() {
        let st = Stepper::default();
        let span = st
            .integrate(|_, y| [y[1], -y[0]], 0.0, [0.0, 1.0], 10.0, 0.1)
            .unwrap();
        assert!((span.y[0] - 10f64.sin()).abs() < 1e-8);
        assert!((span.y[1] - 10f64.cos()).abs() < 1e-8);
    }

    #[test]
    fn exponential_decay_hits_endpoint() {
        let st = Stepper::default();
        let span = st.integrate(|_, y| [-y[0]], 0.0, [1.0], 3.0, 1.0).unwrap();
        assert!(((span.y[0] - (-3f64).exp()) / (-3f64).exp()).abs() < 1e-9);
        assert!(span.accepted > 1);
    }

    #[test]
    fn step_budget_reports_failure() {
        let st = Stepper {
            max_steps: 10,
            ..Stepper::default()
        };
        let r = st.integrate(|_, y| [y[1], -y[0]], 0.0, [0.0, 1.0], 100.0, 0.1);
        assert!(matches!(r, Err(Error::Integration { .. })));
    }
}
