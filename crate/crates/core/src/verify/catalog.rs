//! Margin functions for the inequality catalog. Each returns a quantity that
//! is positive exactly when its inequality holds; several are rewritten (in
//! log space or as series tails) so the sign survives rounding where both
//! sides agree to many digits.

use std::f64::consts::PI;
use std::sync::OnceLock;

use crate::eigen::{global_bounds_for, log_lambda, sinc_bounds, PParam, ASYMPTOTIC_OFFSET};
use crate::series::log_sinc_series;
use crate::special::{
    horner, ln_x_over_sin, log_one_minus_cubic_defect, sin_taylor_remainder, sinc_defect,
    SERIES_SWITCH,
};

const SERIES_ORDER: usize = 48;

fn param(p: f64) -> PParam {
    PParam::new(p).expect("catalog domains exclude p <= 1")
}

/// Maclaurin coefficients of `log(sin x / x)`.
fn log_sinc_coeffs() -> &'static [f64] {
    static C: OnceLock<Vec<f64>> = OnceLock::new();
    C.get_or_init(|| log_sinc_series(SERIES_ORDER).coeffs().to_vec())
}

/// Maclaurin coefficients of `log((pi + a x)/(pi - x))`, `a = pi^2/6 - 1`:
/// `[(1/pi)^n - (-a/pi)^n] / n`.
fn log_ratio_coeffs() -> &'static [f64] {
    static C: OnceLock<Vec<f64>> = OnceLock::new();
    C.get_or_init(|| {
        let mut c = vec![0.0; SERIES_ORDER + 1];
        for (n, cn) in c.iter_mut().enumerate().skip(1) {
            let k = n as i32;
            *cn = ((1.0 / PI).powi(k) - (-ASYMPTOTIC_OFFSET / PI).powi(k)) / n as f64;
        }
        c
    })
}

fn log_ratio(x: f64) -> f64 {
    (ASYMPTOTIC_OFFSET * x / PI).ln_1p() - (-x / PI).ln_1p()
}

/// `lambda(p) - p`.
pub fn lower_high(p: f64) -> f64 {
    global_bounds_for(&param(p)).lower_margin
}

/// `p + pi^2/6 - 1 - lambda(p)`.
pub fn upper_high(p: f64) -> f64 {
    global_bounds_for(&param(p)).upper_margin
}

/// `log lambda(p) - (p - 1) log(p/(p - 1))`.
pub fn lower_low(p: f64) -> f64 {
    let pm1 = p - 1.0;
    log_lambda(&param(p)) - pm1 * (p / pm1).ln()
}

/// `(1 - p) log(p - 1) + (p - 1) log(1 + (pi^2/6)(p - 1)) - log lambda(p)`.
pub fn upper_low(p: f64) -> f64 {
    let pm1 = p - 1.0;
    let pi2_6 = 1.0 + ASYMPTOTIC_OFFSET;
    -pm1 * pm1.ln() + pm1 * (pi2_6 * pm1).ln_1p() - log_lambda(&param(p))
}

/// `log((p/(p-1))^(p-1)) - log p = (p - 2) log p - (p - 1) log(p - 1)`.
pub fn low_lower_exceeds_p(p: f64) -> f64 {
    (p - 2.0) * p.ln() - (p - 1.0) * (p - 2.0).ln_1p()
}

/// With `x = p - 1`: `log(x + pi^2/6) + x log x - x log(1 + (pi^2/6) x)`.
pub fn low_upper_below_global(p: f64) -> f64 {
    let x = p - 1.0;
    let pi2_6 = 1.0 + ASYMPTOTIC_OFFSET;
    (x + pi2_6).ln() + x * x.ln() - x * (pi2_6 * x).ln_1p()
}

/// Smaller of the two log margins of the sinc sandwich.
pub fn sinc_sandwich(s: f64) -> f64 {
    let b = sinc_bounds(s).expect("sinc domain is (0, 1)");
    b.log_lower_margin.min(b.log_upper_margin)
}

/// `2/pi + ((pi - 2)/pi^3)(pi^2 - 4x^2) - sin x / x`, rewritten as
/// `(x - sin x)/x - 4 (pi - 2) x^2 / pi^3`.
pub fn sinc_quadratic_upper(x: f64) -> f64 {
    sinc_defect(x) - 4.0 * (PI - 2.0) * x * x / (PI * PI * PI)
}

/// `log(p - 1) - log p + 4(pi - 2)/(pi p)`.
pub fn log_gap_f(p: f64) -> f64 {
    (-1.0 / p).ln_1p() + 4.0 * (PI - 2.0) / (PI * p)
}

/// `log((pi + a x)/(pi - x))` minus its cubic Taylor polynomial.
pub fn log_ratio_cubic_defect(x: f64) -> f64 {
    if x < SERIES_SWITCH {
        horner(&log_ratio_coeffs()[4..], x) * x.powi(4)
    } else {
        let c1 = PI / 6.0;
        let c2 = (12.0 - PI * PI) / 72.0;
        let c3 = (108.0 - 18.0 * PI * PI + PI.powi(4)) / (648.0 * PI);
        log_ratio(x) - x * (c1 + x * (c2 + x * c3))
    }
}

/// `log(1 - t) + t + t^2/2 + t^3/2`.
pub fn log_one_minus_bound(t: f64) -> f64 {
    log_one_minus_cubic_defect(t)
}

/// `2/5 - (x - sin x)/x`.
pub fn sinc_defect_below_two_fifths(x: f64) -> f64 {
    0.4 - sinc_defect(x)
}

/// `sin x - (x - x^3/6)`.
pub fn sin_cubic(x: f64) -> f64 {
    sin_taylor_remainder(x, 2)
}

/// `sin x - (x - x^3/3! + x^5/5! - x^7/7!)`.
pub fn sin_septic(x: f64) -> f64 {
    sin_taylor_remainder(x, 4)
}

const LS6: f64 = 17.0 / 15120.0;
const LS8: f64 = 41.0 / 604800.0;

/// `log(sin x / x) + x^2/6 + x^4/180 + 17 x^6/15120 + 41 x^8/604800`.
pub fn log_sinc_lower(x: f64) -> f64 {
    if x < SERIES_SWITCH {
        let c = log_sinc_coeffs();
        let mut tail = c[6..].to_vec();
        tail[0] += LS6;
        tail[2] += LS8;
        horner(&tail, x) * x.powi(6)
    } else {
        let x2 = x * x;
        -ln_x_over_sin(x) + x2 * (1.0 / 6.0 + x2 * (1.0 / 180.0 + x2 * (LS6 + x2 * LS8)))
    }
}

/// The bracket that multiplies `x^3` in the lower estimate of the
/// upper-bound inequality:
/// `(12 - pi^2)/72 - (108 pi^2 - 5 pi^4 - 540)/(3240 pi) x - 17 pi x^3/15120 - 41 pi x^5/604800`.
pub fn cubic_bracket(x: f64) -> f64 {
    let pi2 = PI * PI;
    let c0 = (12.0 - pi2) / 72.0;
    let c1 = (108.0 * pi2 - 5.0 * pi2 * pi2 - 540.0) / (3240.0 * PI);
    let c3 = 17.0 * PI / 15120.0;
    let c5 = 41.0 * PI / 604800.0;
    let x2 = x * x;
    c0 - x * (c1 + x2 * (c3 + x2 * c5))
}

/// `x log((pi + a x)/(pi - x)) + pi log(sin x / x)`, the angle form of
/// `lambda(p) < p + pi^2/6 - 1`.
pub fn upper_angle_form(x: f64) -> f64 {
    if x < SERIES_SWITCH {
        let r = log_ratio_coeffs();
        let l = log_sinc_coeffs();
        // coefficient of x^m is r_{m-1} + pi l_m; the m <= 2 terms cancel
        let coeffs: Vec<f64> = (3..SERIES_ORDER).map(|m| r[m - 1] + PI * l[m]).collect();
        horner(&coeffs, x) * x.powi(3)
    } else {
        x * log_ratio(x) - PI * ln_x_over_sin(x)
    }
}
