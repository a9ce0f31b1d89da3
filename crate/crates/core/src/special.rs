//! Cancellation-safe kernels built on `sin x / x`.
//!
//! Every quantity here is a small difference of O(1) terms when its argument is
//! small, so each switches to a Maclaurin series below [`SERIES_SWITCH`].

use std::f64::consts::PI;

/// Below this argument the series branches are used.
pub const SERIES_SWITCH: f64 = 0.5;

const MAX_TERMS: usize = 64;

/// `t(x) = (x - sin x) / x`, with `t(0) = 0`.
pub fn sinc_defect(x: f64) -> f64 {
    let ax = x.abs();
    if ax < SERIES_SWITCH {
        // x^2/3! - x^4/5! + x^6/7! - ...
        let x2 = x * x;
        let mut term = x2 / 6.0;
        let mut sum = 0.0;
        for k in 1..MAX_TERMS {
            let next = sum + term;
            if next == sum {
                break;
            }
            sum = next;
            let n = 2.0 * k as f64;
            term *= -x2 / ((n + 2.0) * (n + 3.0));
        }
        sum
    } else {
        (x - x.sin()) / x
    }
}

/// `log(x / sin x)` for `x` in `[0, pi/2]`; equals `-log(1 - t(x))`.
pub fn ln_x_over_sin(x: f64) -> f64 {
    if x.abs() < SERIES_SWITCH {
        -(-sinc_defect(x)).ln_1p()
    } else {
        (x / x.sin()).ln()
    }
}

/// `log(x / sin x)` for `x` in `(0, pi)`, given the complement `w = pi - x`
/// computed independently (so that `sin x = sin w` stays accurate near `pi`).
pub fn ln_x_over_sin_with_complement(x: f64, w: f64) -> f64 {
    if x <= PI / 2.0 {
        ln_x_over_sin(x)
    } else {
        x.ln() - w.sin().ln()
    }
}

/// `sin(pi s) / (pi s)` as a logarithm, for `s` in `(0, 1)`.
pub fn ln_sinc_pi(s: f64) -> f64 {
    let y = PI * s;
    if s <= 0.5 {
        -ln_x_over_sin(y)
    } else {
        // 1 - s is exact for s in [1/2, 1].
        (PI * (1.0 - s)).sin().ln() - y.ln()
    }
}

/// `sin x - x cos x`, which behaves like `x^3 / 3` at the origin.
pub fn sin_minus_x_cos(x: f64) -> f64 {
    if x.abs() < SERIES_SWITCH {
        // sum_{k>=1} (-1)^{k+1} 2k x^{2k+1} / (2k+1)!
        let x2 = x * x;
        let mut pow = x * x2; // x^{2k+1}
        let mut fact = 6.0; // (2k+1)!
        let mut sum = 0.0;
        for k in 1..MAX_TERMS {
            let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
            let term = sign * (2 * k) as f64 * pow / fact;
            let next = sum + term;
            if next == sum {
                break;
            }
            sum = next;
            pow *= x2;
            let m = (2 * k + 2) as f64;
            fact *= m * (m + 1.0);
        }
        sum
    } else {
        x.sin() - x * x.cos()
    }
}

/// `sin x` minus its Taylor polynomial with the first `m` nonzero terms
/// (through `x^{2m-1}`).
pub fn sin_taylor_remainder(x: f64, m: usize) -> f64 {
    let x2 = x * x;
    // first dropped term: (-1)^m x^{2m+1} / (2m+1)!
    let mut term = x;
    for k in 0..m {
        let n = (2 * k) as f64;
        term *= -x2 / ((n + 2.0) * (n + 3.0));
    }
    if x.abs() < 2.0 {
        let mut sum = 0.0;
        let mut k = m;
        loop {
            let next = sum + term;
            if next == sum || k > m + MAX_TERMS {
                break;
            }
            sum = next;
            let n = (2 * k) as f64;
            term *= -x2 / ((n + 2.0) * (n + 3.0));
            k += 1;
        }
        sum
    } else {
        let mut poly = 0.0;
        let mut t = x;
        for k in 0..m {
            poly += t;
            let n = (2 * k) as f64;
            t *= -x2 / ((n + 2.0) * (n + 3.0));
        }
        x.sin() - poly
    }
}

/// `log(1 - t) + t + t^2/2 + t^3/2`, which behaves like `t^3 / 6` near zero.
pub fn log_one_minus_cubic_defect(t: f64) -> f64 {
    if t.abs() < 0.25 {
        // t^3/6 - sum_{n>=4} t^n / n
        let mut sum = t * t * t / 6.0;
        let mut pow = t * t * t;
        for n in 4..(4 + 2 * MAX_TERMS) {
            pow *= t;
            let next = sum - pow / n as f64;
            if next == sum {
                break;
            }
            sum = next;
        }
        sum
    } else {
        (-t).ln_1p() + t + 0.5 * t * t + 0.5 * t * t * t
    }
}

/// Sum of `coeffs[k] * x^k` by Horner's rule.
pub fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc.mul_add(x, c))
}
