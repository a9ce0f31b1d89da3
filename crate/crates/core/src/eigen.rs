//! The first Dirichlet eigenvalue of the one-dimensional p-Laplacian on (-1, 1),
//!
//! ```text
//! lambda(p) = (p - 1) * (pi / (p sin(pi/p)))^p,
//! ```
//!
//! together with its derivative, its explicit bounds and the critical exponent
//! of the rescaled problem on (-L, L).
//!
//! The base of the power tends to 1 while the exponent diverges as p grows, so
//! everything is evaluated in log space through `log(x / sin x)` with
//! `x = pi / p`, using [`crate::special`] for the small-argument branches.

use std::f64::consts::PI;

use crate::error::{domain, Result};
use crate::special::{ln_sinc_pi, ln_x_over_sin, ln_x_over_sin_with_complement, sin_minus_x_cos};

/// `pi^2 / 6`, split into a double and its rounding error.
pub(crate) const PI2_6_HI: f64 = 1.644_934_066_848_226_4;
pub(crate) const PI2_6_LO: f64 = 3.040_672_350_398_476e-17;

/// `pi^2 / 6 - 1`, the limit of `lambda(p) - p` as p grows.
pub const ASYMPTOTIC_OFFSET: f64 = 0.644_934_066_848_226_4;

/// An exponent `p > 1` together with its conjugate `q = p / (p - 1)` and the
/// angles `x = pi / p` and `pi - x = pi / q`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PParam {
    p: f64,
    q: f64,
    x: f64,
    w: f64,
}

impl PParam {
    pub fn new(p: f64) -> Result<Self> {
        if !p.is_finite() || p <= 1.0 {
            return Err(domain(format!(
                "exponent must satisfy 1 < p < inf, got {p}"
            )));
        }
        let pm1 = p - 1.0;
        Ok(Self {
            p,
            q: 1.0 + 1.0 / pm1,
            x: PI / p,
            w: PI * (pm1 / p),
        })
    }

    /// Builds the exponent from the angle `x = pi / p`, `0 < x < pi`.
    pub fn from_angle(x: f64) -> Result<Self> {
        if !(x > 0.0 && x < PI) {
            return Err(domain(format!("angle must lie in (0, pi), got {x}")));
        }
        Self::new(PI / x)
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    /// `x = pi / p`.
    pub fn angle(&self) -> f64 {
        self.x
    }

    /// `pi - x = pi / q`, computed without cancellation.
    pub fn complement(&self) -> f64 {
        self.w
    }

    /// The conjugate exponent, with the roles of `x` and `pi - x` exchanged.
    pub fn conjugate(&self) -> Self {
        Self {
            p: self.q,
            q: self.p,
            x: self.w,
            w: self.x,
        }
    }

    pub fn regime(&self) -> Regime {
        if self.p >= 2.0 {
            Regime::HighP
        } else {
            Regime::LowP
        }
    }
}

/// `p / (p - 1)`.
pub fn conjugate(p: f64) -> Result<f64> {
    PParam::new(p).map(|pp| pp.q)
}

/// An eigenvalue and its natural logarithm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenValue {
    pub value: f64,
    pub log_value: f64,
}

impl EigenValue {
    fn from_log(log_value: f64) -> Self {
        Self {
            value: log_value.exp(),
            log_value,
        }
    }
}

/// `log lambda(p)`.
///
/// For `p >= 2` this is `log(p - 1) + p log(x / sin x)`. Below 2 the same
/// quantity is regrouped as `(1 - p) log(p - 1) + p log(w / sin w)` with
/// `w = pi - x`, which keeps both terms small as `p -> 1`.
pub fn log_lambda(p: &PParam) -> f64 {
    let pm1 = p.p - 1.0;
    match p.regime() {
        Regime::HighP => pm1.ln() + p.p * ln_x_over_sin(p.x),
        Regime::LowP => -pm1 * pm1.ln() + p.p * ln_x_over_sin(p.w),
    }
}

pub fn lambda_exact(p: &PParam) -> EigenValue {
    EigenValue::from_log(log_lambda(p))
}

/// `lambda(p) / L^p`, the first eigenvalue on `(-L, L)`.
pub fn lambda_scaled(p: &PParam, half_length: f64) -> Result<EigenValue> {
    check_length(half_length)?;
    Ok(EigenValue::from_log(log_lambda(p) - p.p * half_length.ln()))
}

fn check_length(half_length: f64) -> Result<()> {
    if !(half_length.is_finite() && half_length > 0.0) {
        return Err(domain(format!(
            "half-length must be positive, got {half_length}"
        )));
    }
    Ok(())
}

/// `lambda'(p) / lambda(p)`.
///
/// Evaluated as `x/(pi - x) + log(x/sin x) - (sin x - x cos x)/sin x` for
/// `p >= 2`. For `p < 2` the first and last terms both blow up as `x -> pi`,
/// so the grouped form `log(x/sin x) + x G - 1` is used instead, with
/// `G = 1/(pi - x) + cot x = (sin w - w cos w)/(w sin w)` and `w = pi - x`.
pub fn log_derivative(p: &PParam) -> f64 {
    let (x, w) = (p.x, p.w);
    match p.regime() {
        Regime::HighP => x / w + ln_x_over_sin(x) - sin_minus_x_cos(x) / x.sin(),
        Regime::LowP => ln_x_over_sin_with_complement(x, w) + x * grouped_pole_term(w) - 1.0,
    }
}

/// `1/(pi - x) + cos x / sin x` written in terms of `w = pi - x`. Tends to 0
/// like `w / 3` as `w -> 0`.
pub fn grouped_pole_term(w: f64) -> f64 {
    sin_minus_x_cos(w) / (w * w.sin())
}

pub fn lambda_prime(p: &PParam) -> f64 {
    lambda_exact(p).value * log_derivative(p)
}

/// Partial derivative of `lambda(p, L)` with respect to `p`.
pub fn lambda_scaled_prime(p: &PParam, half_length: f64) -> Result<f64> {
    let scaled = lambda_scaled(p, half_length)?;
    Ok(scaled.value * (log_derivative(p) - half_length.ln()))
}

/// `lambda(p) - p - (pi^2/6 - 1)`.
///
/// For `p >= 2` this is `(p - 1) expm1(p log(x / sin x)) - pi^2/6`, formed with
/// a fused multiply-add and a two-part constant so the result keeps full
/// relative accuracy even when it is ~1e-7.
pub fn asymptotic_gap(p: &PParam) -> f64 {
    match p.regime() {
        Regime::HighP => {
            let e = (p.p * ln_x_over_sin(p.x)).exp_m1();
            (p.p - 1.0).mul_add(e, -PI2_6_HI) - PI2_6_LO
        }
        Regime::LowP => lambda_exact(p).value - p.p - ASYMPTOTIC_OFFSET,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    /// `1 < p < 2`
    LowP,
    /// `p >= 2`
    HighP,
}

impl Regime {
    pub fn as_str(&self) -> &'static str {
        match self {
            Regime::LowP => "low_p",
            Regime::HighP => "high_p",
        }
    }
}

/// Lower and upper bounds on `lambda(p)` with the exact value between them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundSandwich {
    pub p: f64,
    pub lower: f64,
    pub value: f64,
    pub upper: f64,
    pub lower_margin: f64,
    pub upper_margin: f64,
    pub regime: Regime,
}

impl BoundSandwich {
    pub fn holds(&self) -> bool {
        self.lower_margin > 0.0 && self.upper_margin > 0.0
    }
}

/// The sharper regime-dependent bounds:
///
/// * `p >= 2`: `p < lambda(p) < p + pi^2/6 - 1`
/// * `1 < p < 2`: `(p/(p-1))^(p-1) < lambda(p) < (p-1)^(1-p) (1 + (pi^2/6)(p-1))^(p-1)`
pub fn bounds_for(p: &PParam) -> BoundSandwich {
    match p.regime() {
        Regime::HighP => global_bounds_for(p),
        Regime::LowP => {
            let pm1 = p.p - 1.0;
            let log_lower = pm1 * (p.p / pm1).ln();
            let log_upper = -pm1 * pm1.ln() + pm1 * (PI2_6_HI * pm1).ln_1p();
            let lower = log_lower.exp();
            let upper = log_upper.exp();
            let value = lambda_exact(p).value;
            BoundSandwich {
                p: p.p,
                lower,
                value,
                upper,
                lower_margin: value - lower,
                upper_margin: upper - value,
                regime: Regime::LowP,
            }
        }
    }
}

/// `p < lambda(p) < p + pi^2/6 - 1`, valid on the whole range `1 < p < inf`.
/// The margins are formed from [`asymptotic_gap`] so they stay accurate for
/// large `p`.
pub fn global_bounds_for(p: &PParam) -> BoundSandwich {
    let value = lambda_exact(p).value;
    let gap = asymptotic_gap(p);
    BoundSandwich {
        p: p.p,
        lower: p.p,
        value,
        upper: p.p + ASYMPTOTIC_OFFSET,
        lower_margin: gap + ASYMPTOTIC_OFFSET,
        upper_margin: -gap,
        regime: p.regime(),
    }
}

/// `((1-s)/(1 + (pi^2/6 - 1)s))^s < sin(pi s)/(pi s) < (1-s)^s` on `0 < s < 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SincSandwich {
    pub lower: f64,
    pub sinc: f64,
    pub upper: f64,
    /// `log(sinc) - log(lower)`
    pub log_lower_margin: f64,
    /// `log(upper) - log(sinc)`
    pub log_upper_margin: f64,
}

pub fn sinc_bounds(s: f64) -> Result<SincSandwich> {
    if !(s > 0.0 && s < 1.0) {
        return Err(domain(format!("sinc argument must lie in (0, 1), got {s}")));
    }
    let log_upper = s * (-s).ln_1p();
    let log_lower = log_upper - s * (ASYMPTOTIC_OFFSET * s).ln_1p();
    let log_sinc = ln_sinc_pi(s);
    Ok(SincSandwich {
        lower: log_lower.exp(),
        sinc: log_sinc.exp(),
        upper: log_upper.exp(),
        log_lower_margin: log_sinc - log_lower,
        log_upper_margin: log_upper - log_sinc,
    })
}

const PSTAR_START: f64 = 1.01;
const PSTAR_MAX_ITER: usize = 4000;

/// The exponent `p_*(L)` at which `lambda(p, L) = lambda(p) / L^p` stops
/// increasing, i.e. the root of `lambda'(p) - lambda(p) log L`.
///
/// Only exists for `L > 1`. The root is bracketed by doubling `p` from 1.01
/// (or halving `p - 1` if the sign change lies below 1.01) and then bisected
/// until `|lambda'(p)/lambda(p) - log L| <= tol`.
pub fn find_pstar(half_length: f64, tol: f64) -> Result<f64> {
    if !(half_length.is_finite() && half_length > 1.0) {
        return Err(domain(format!(
            "lambda(p, L) is strictly increasing for L <= 1; no critical exponent (L = {half_length})"
        )));
    }
    if !(tol > 0.0) {
        return Err(domain(format!("tolerance must be positive, got {tol}")));
    }
    let log_len = half_length.ln();
    let h = |p: f64| -> Result<f64> { Ok(log_derivative(&PParam::new(p)?) - log_len) };

    let (mut lo, mut hi) = if h(PSTAR_START)? > 0.0 {
        let mut lo = PSTAR_START;
        let mut hi = 2.0 * lo;
        while h(hi)? > 0.0 {
            lo = hi;
            hi *= 2.0;
            if !hi.is_finite() {
                return Err(domain(format!(
                    "no sign change found for L = {half_length}"
                )));
            }
        }
        (lo, hi)
    } else {
        let mut hi = PSTAR_START;
        let mut lo = 1.0 + (hi - 1.0) / 2.0;
        while h(lo)? <= 0.0 {
            hi = lo;
            lo = 1.0 + (lo - 1.0) / 2.0;
            if lo <= 1.0 {
                return Err(domain(format!(
                    "no sign change found for L = {half_length}"
                )));
            }
        }
        (lo, hi)
    };

    for _ in 0..PSTAR_MAX_ITER {
        let mid = 0.5 * (lo + hi);
        let hm = h(mid)?;
        if hm.abs() <= tol || mid <= lo || mid >= hi {
            return Ok(mid);
        }
        if hm > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    fn pp(p: f64) -> PParam {
        PParam::new(p).unwrap()
    }

    #[test]
    fn rejects_bad_exponents() {
        for p in [1.0, 0.5, -3.0, f64::NAN, f64::INFINITY] {
            assert!(PParam::new(p).is_err(), "p = {p}");
            assert!(conjugate(p).is_err());
        }
        assert!(PParam::from_angle(0.0).is_err());
        assert!(PParam::from_angle(PI).is_err());
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(conjugate(2.0).unwrap(), 2.0);
        assert!(rel(conjugate(3.0).unwrap(), 1.5) < 1e-15);
        assert!(rel(conjugate(4.0 / 3.0).unwrap(), 4.0) < 1e-14);
        let c = pp(3.0).conjugate();
        assert!(rel(c.p(), 1.5) < 1e-15);
        assert_eq!(c.conjugate().p(), 3.0);
    }

    #[test]
    fn lambda_at_two() {
        let ev = lambda_exact(&pp(2.0));
        assert!(rel(ev.value, PI * PI / 4.0) < 1e-15);
        assert_eq!(ev.value, 2.467_401_100_272_339_5);
    }

    #[test]
    fn lambda_at_three_and_three_halves() {
        // 60-digit reference values
        assert!(rel(lambda_exact(&pp(3.0)).value, 3.536_095_247_000_319_4) < 1e-15);
        assert!(rel(lambda_exact(&pp(1.5)).value, 1.880_450_809_513_591) < 1e-15);
    }

    #[test]
    fn lambda_tends_to_one_near_p_one() {
        // reference values of lambda(1 + 10^-k)
        let refs = [
            1.047_299_107_779_113_7,
            1.006_933_323_535_230_6,
            1.000_921_474_782_147_8,
            1.000_115_136_046_787_4,
            1.000_013_815_607_637_5,
        ];
        let mut prev = f64::INFINITY;
        for (k, want) in (2..=6).zip(refs) {
            let v = lambda_exact(&pp(1.0 + 10f64.powi(-k))).value;
            assert!(rel(v, want) < 1e-13, "k = {k}: {v} vs {want}");
            assert!(v > 1.0 && v < prev);
            prev = v;
        }
    }

    #[test]
    fn scaled_eigenvalue() {
        let p2 = pp(2.0);
        let base = PI * PI / 4.0;
        assert!(rel(lambda_scaled(&p2, 1.0).unwrap().value, base) < 1e-15);
        assert!(rel(lambda_scaled(&p2, 2.0).unwrap().value, base / 4.0) < 1e-15);
        let p3 = pp(3.0);
        let l3 = lambda_exact(&p3).value;
        assert!(rel(lambda_scaled(&p3, 0.5).unwrap().value, 8.0 * l3) < 1e-14);
        assert!(lambda_scaled(&p3, 0.0).is_err());
        assert!(lambda_scaled(&p3, -1.0).is_err());
    }

    #[test]
    fn derivative_at_two() {
        let want = 1.114_235_663_895_160_6;
        assert!(rel(lambda_prime(&pp(2.0)), want) < 1e-14);
        assert!(rel(lambda_prime(&pp(2.0)), PI * PI / 4.0 * (PI / 2.0).ln()) < 1e-14);
    }

    #[test]
    fn derivative_branches_agree_near_two() {
        let below = lambda_prime(&pp(2.0 - 1e-12));
        let above = lambda_prime(&pp(2.0));
        assert!(rel(below, above) < 1e-10);
    }

    #[test]
    fn derivative_limits() {
        // lambda'(1 + 10^-k) for k = 2..6, 60-digit references
        let refs = [
            3.809_638_447_452_1,
            5.952_023_375_323_948,
            8.218_235_234_163_487,
            10.514_168_783_624_068,
            12.815_690_901_938_468,
        ];
        for (k, want) in (2..=6).zip(refs) {
            let v = lambda_prime(&pp(1.0 + 10f64.powi(-k)));
            assert!(rel(v, want) < 1e-11, "k = {k}: {v}");
        }
        assert!((lambda_prime(&pp(1e3)) - 1.0).abs() < 1e-6);
        assert!((lambda_prime(&pp(1e4)) - 1.0).abs() < 1e-8);
    }

    #[test]
    fn bounds_examples() {
        let b = bounds_for(&pp(2.0));
        assert_eq!(b.regime, Regime::HighP);
        assert_eq!(b.lower, 2.0);
        assert!(rel(b.upper, 2.644_934_066_848_226) < 1e-15);
        assert!(b.holds());

        let b = bounds_for(&pp(1.5));
        assert_eq!(b.regime, Regime::LowP);
        assert!(rel(b.lower, 3f64.sqrt()) < 1e-15);
        assert!(rel(b.upper, 1.909_171_041_800_138_6) < 1e-14);
        assert!(b.holds());
    }

    #[test]
    fn low_p_bounds_are_sharper() {
        for i in 1..200 {
            let p = 1.0 + i as f64 / 200.0;
            let low = bounds_for(&pp(p));
            let global = global_bounds_for(&pp(p));
            assert!(low.lower > global.lower, "p = {p}");
            assert!(low.upper < global.upper, "p = {p}");
        }
    }

    #[test]
    fn sinc_examples() {
        let s = sinc_bounds(0.5).unwrap();
        assert!(rel(s.lower, 0.614_883_125_688_699_1) < 1e-15);
        assert!(rel(s.sinc, 2.0 / PI) < 1e-15);
        assert!(rel(s.upper, 0.5f64.sqrt()) < 1e-15);
        assert!(s.lower < s.sinc && s.sinc < s.upper);
        for k in 1..=8 {
            let s = sinc_bounds(10f64.powi(-k)).unwrap();
            assert!((s.lower - 1.0).abs() < 10f64.powi(-k + 1));
            assert!(s.log_lower_margin > 0.0 && s.log_upper_margin > 0.0);
        }
        let s = sinc_bounds(1.0 - 1e-6).unwrap();
        assert!(s.upper < 1e-5 && s.sinc < 1e-5);
        assert!(s.log_lower_margin > 0.0 && s.log_upper_margin > 0.0);
        assert!(sinc_bounds(0.0).is_err() && sinc_bounds(1.0).is_err());
    }

    #[test]
    fn asymptotic_gap_examples() {
        let g = asymptotic_gap(&pp(2.0));
        assert!((g - (PI * PI / 4.0 - 2.0 - ASYMPTOTIC_OFFSET)).abs() < 1e-15);
        assert!((g + 0.177_533_0).abs() < 1e-7);
        // lambda(1e6) - 1e6 - (pi^2/6 - 1), 40-digit reference
        let g = asymptotic_gap(&pp(1e6));
        assert!(rel(g, -2.920_300_946_391_674e-7) < 1e-9);
    }

    #[test]
    fn pstar_roots() {
        // roots of lambda'/lambda = log L from a 30-digit reference solve
        let cases = [
            (1.5, 2.198_456_065_460_064_8),
            (2.0, 1.475_865_609_902_791_4),
            (std::f64::consts::E, 1.247_150_767_901_025_7),
            (5.0, 1.097_393_461_621_479_8),
        ];
        for (len, want) in cases {
            let got = find_pstar(len, 1e-13).unwrap();
            assert!(rel(got, want) < 1e-10, "L = {len}: {got}");
        }
        assert!(find_pstar(1.0, 1e-10).is_err());
        assert!(find_pstar(0.5, 1e-10).is_err());
        // sign change below the starting point
        let p = find_pstar(1e6, 1e-12).unwrap();
        assert!(p > 1.0 && p < 1.01);
    }
}
