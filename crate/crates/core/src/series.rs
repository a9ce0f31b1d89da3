//! Truncated Maclaurin series and the expansion of `lambda(pi/x) - pi/x`.
//!
//! A [`PowerSeries`] of order `N` stores the coefficients of `x^0 .. x^N`.
//! Binary operations truncate to the smaller order of their operands.

use std::f64::consts::PI;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::eigen::PParam;
use crate::error::{Error, Result};
use crate::special::horner;

#[derive(Clone, PartialEq)]
pub struct PowerSeries {
    coeffs: Vec<f64>,
}

impl fmt::Debug for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PowerSeries{:?}", self.coeffs)
    }
}

impl PowerSeries {
    /// A series of order `coeffs.len() - 1`. Panics on an empty slice.
    pub fn new(coeffs: Vec<f64>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a power series needs at least one coefficient"
        );
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(vec![0.0; order + 1])
    }

    pub fn constant(c: f64, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The series `x` (zero when `order == 0`).
    pub fn identity(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = 1.0;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Coefficient of `x^k`; zero past the stored order is *not* implied, so
    /// this panics for `k > order`.
    pub fn coeff(&self, k: usize) -> f64 {
        self.coeffs[k]
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs[..=order.min(self.order())].to_vec())
    }

    pub fn scale(&self, c: f64) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul_series(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let coeffs = (0..=n)
            .map(|k| (0..=k).map(|i| self.coeffs[i] * other.coeffs[k - i]).sum())
            .collect();
        Self::new(coeffs)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(f64, f64) -> f64) -> Self {
        let n = self.order().min(other.order());
        Self::new(
            (0..=n)
                .map(|k| f(self.coeffs[k], other.coeffs[k]))
                .collect(),
        )
    }

    fn require_zero_constant(&self, what: &str) -> Result<()> {
        if self.coeffs[0] != 0.0 {
            return Err(Error::Structure(format!(
                "{what} requires a zero constant term, got {}",
                self.coeffs[0]
            )));
        }
        Ok(())
    }

    /// `self(inner(x))`. `inner` must vanish at the origin.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        inner.require_zero_constant("composition")?;
        let n = self.order().min(inner.order());
        let inner = inner.truncate(n);
        let mut acc = Self::constant(self.coeffs[n], n);
        for k in (0..n).rev() {
            acc = acc.mul_series(&inner);
            acc.coeffs[0] += self.coeffs[k];
        }
        Ok(acc)
    }

    /// `exp(self)` via `E' = S' E`, i.e. `n e_n = sum_{k=1}^n k s_k e_{n-k}`.
    pub fn exp(&self) -> Self {
        let n = self.order();
        let s = &self.coeffs;
        let mut e = vec![0.0; n + 1];
        e[0] = s[0].exp();
        for m in 1..=n {
            let acc: f64 = (1..=m).map(|k| k as f64 * s[k] * e[m - k]).sum();
            e[m] = acc / m as f64;
        }
        Self::new(e)
    }

    /// `log(1 - self)` as the composition of `-u - u^2/2 - u^3/3 - ...` with
    /// `self`, which must vanish at the origin.
    pub fn log_one_minus(&self) -> Result<Self> {
        self.require_zero_constant("log(1 - T)")?;
        let n = self.order();
        let mut outer = vec![0.0; n + 1];
        for (k, c) in outer.iter_mut().enumerate().skip(1) {
            *c = -1.0 / k as f64;
        }
        Self::new(outer).compose(self)
    }

    /// `self / x`; the constant term must be zero and the order drops by one.
    pub fn divide_by_x(&self) -> Result<Self> {
        self.require_zero_constant("division by x")?;
        if self.order() == 0 {
            return Err(Error::Structure(
                "division by x of an order-0 series leaves no coefficients".into(),
            ));
        }
        Ok(Self::new(self.coeffs[1..].to_vec()))
    }

    /// Horner evaluation of the truncated polynomial.
    pub fn eval(&self, x: f64) -> f64 {
        horner(&self.coeffs, x)
    }

    /// Formal derivative; the order drops by one (an order-0 series maps to `[0]`).
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| k as f64 * c)
                .collect(),
        )
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: Self) -> PowerSeries {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;
    fn sub(self, rhs: Self) -> PowerSeries {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: Self) -> PowerSeries {
        self.mul_series(rhs)
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;
    fn neg(self) -> PowerSeries {
        self.scale(-1.0)
    }
}

/// `(x - sin x) / x = x^2/3! - x^4/5! + x^6/7! - ...` to order `order`.
pub fn t_series(order: usize) -> PowerSeries {
    let mut s = PowerSeries::zero(order);
    let mut fact = 1.0; // (2k+1)!
    let mut k = 1;
    while 2 * k <= order {
        fact *= (2 * k) as f64 * (2 * k + 1) as f64;
        let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
        s.coeffs[2 * k] = sign / fact;
        k += 1;
    }
    s
}

/// `log(sin x / x) = log(1 - t(x))` to order `order`.
pub fn log_sinc_series(order: usize) -> PowerSeries {
    t_series(order)
        .log_one_minus()
        .expect("t(x) vanishes at the origin")
}

/// `log y = -(pi/x) log(sin x / x)` to order `order`, where
/// `y = (x / sin x)^(pi/x) = (pi / (p sin(pi/p)))^p`.
pub fn log_y_series(order: usize) -> PowerSeries {
    log_sinc_series(order + 1)
        .divide_by_x()
        .expect("log(sin x / x) vanishes at the origin")
        .scale(-PI)
}

/// `y = exp(log y)` to order `order`.
pub fn y_series(order: usize) -> PowerSeries {
    log_y_series(order).exp()
}

/// Maclaurin series of `lambda(pi/x) - pi/x = pi (y - 1)/x - y` to order
/// `order`. The first three coefficients are `pi^2/6 - 1`, `pi^3/72 - pi/6`
/// and `pi^4/1296 - pi^2/120`.
pub fn lambda_asymptotic_series(order: usize) -> PowerSeries {
    let y = y_series(order + 1);
    let one = PowerSeries::constant(1.0, order + 1);
    let shifted = (&y - &one)
        .divide_by_x()
        .expect("y - 1 vanishes at the origin")
        .scale(PI);
    &shifted - &y
}

/// `p + sum_{k<=order} c_k (pi/p)^k`.
pub fn lambda_approx(p: &PParam, order: usize) -> f64 {
    p.p() + lambda_asymptotic_series(order).eval(p.angle())
}

/// Absolute value of the first dropped term `c_{order+1} (pi/p)^{order+1}`.
/// A heuristic size for the truncation error, not a proven bound.
pub fn truncation_estimate(p: &PParam, order: usize) -> f64 {
    let c = lambda_asymptotic_series(order + 1).coeff(order + 1);
    (c * p.angle().powi(order as i32 + 1)).abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * b.abs().max(1e-300)
    }

    fn assert_coeffs(s: &PowerSeries, want: &[f64], tol: f64) {
        assert_eq!(s.order() + 1, want.len(), "{s:?}");
        for (k, (&a, &b)) in s.coeffs().iter().zip(want).enumerate() {
            if b == 0.0 {
                assert!(a.abs() < 1e-17, "coefficient {k}: {a} should vanish");
            } else {
                assert!(close(a, b, tol), "coefficient {k}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn exp_of_x() {
        let e = PowerSeries::identity(3).exp();
        assert_coeffs(&e, &[1.0, 1.0, 0.5, 1.0 / 6.0], 1e-15);
    }

    #[test]
    fn t_series_coefficients() {
        assert_coeffs(
            &t_series(4),
            &[0.0, 0.0, 1.0 / 6.0, 0.0, -1.0 / 120.0],
            1e-15,
        );
        assert_coeffs(&t_series(0), &[0.0], 0.0);
        assert!(close(t_series(6).coeff(6), 1.0 / 5040.0, 1e-15));
    }

    #[test]
    fn log_one_minus_of_t() {
        let l = t_series(4).log_one_minus().unwrap();
        assert_coeffs(&l, &[0.0, 0.0, -1.0 / 6.0, 0.0, -1.0 / 180.0], 1e-14);
    }

    #[test]
    fn structural_errors() {
        let inner = PowerSeries::new(vec![0.5, 1.0, 0.0]);
        assert!(matches!(
            PowerSeries::identity(2).compose(&inner),
            Err(Error::Structure(_))
        ));
        assert!(inner.log_one_minus().is_err());
        assert!(inner.divide_by_x().is_err());
        assert!(PowerSeries::zero(0).divide_by_x().is_err());
    }

    #[test]
    fn min_order_rule() {
        let a = PowerSeries::new(vec![1.0, 2.0, 3.0, 4.0]);
        let b = PowerSeries::new(vec![1.0, 1.0]);
        assert_eq!((&a + &b).order(), 1);
        assert_eq!((&a * &b).coeffs(), &[1.0, 3.0]);
        assert_eq!(
            a.compose(&PowerSeries::new(vec![0.0, 2.0]))
                .unwrap()
                .order(),
            1
        );
    }

    #[test]
    fn y_series_prefix() {
        let want = [
            1.0,
            PI / 6.0,
            PI * PI / 72.0,
            PI / 180.0 + PI.powi(3) / 1296.0,
        ];
        assert_coeffs(&y_series(3), &want, 1e-14);
    }

    #[test]
    fn log_y_series_prefix() {
        let l = log_y_series(3);
        assert_coeffs(&l, &[0.0, PI / 6.0, 0.0, PI / 180.0], 1e-14);
    }

    #[test]
    fn asymptotic_series_low_orders() {
        let c0 = PI * PI / 6.0 - 1.0;
        let c1 = PI.powi(3) / 72.0 - PI / 6.0;
        let c2 = PI.powi(4) / 1296.0 - PI * PI / 120.0;
        assert_coeffs(&lambda_asymptotic_series(0), &[c0], 1e-14);
        assert_coeffs(&lambda_asymptotic_series(2), &[c0, c1, c2], 1e-12);
        assert!(close(c2, -0.007_085_367_668_026_725, 1e-14));
    }

    #[test]
    fn higher_coefficients_match_reference() {
        // coefficients c_3..c_11 from an exact symbolic expansion
        let refs = [
            -2.829_777_446_296_157_5e-3,
            -2.424_740_591_708_785e-4,
            -1.255_170_621_000_137e-4,
            -1.142_023_642_660_513_5e-5,
            -6.785_943_866_857_734e-6,
            -6.782_301_633_341_885e-7,
            -4.179_664_015_342_933e-7,
            -4.688_334_391_627_64e-8,
            -2.820_051_317_949_135_4e-8,
        ];
        let s = lambda_asymptotic_series(11);
        for (k, want) in (3..=11).zip(refs) {
            assert!(
                close(s.coeff(k), want, 1e-10),
                "c_{k} = {} vs {want}",
                s.coeff(k)
            );
        }
    }

    #[test]
    fn approx_error_shrinks_with_order_at_ten() {
        let p = PParam::new(10.0).unwrap();
        let exact = crate::eigen::lambda_exact(&p).value;
        let errs: Vec<f64> = (0..=6)
            .map(|n| (lambda_approx(&p, n) - exact).abs())
            .collect();
        for w in errs.windows(2) {
            assert!(w[1] < w[0], "{errs:?}");
        }
        // reference truncation errors at N = 0 and N = 6
        assert!(close(errs[0], 2.999_280_022_344_405_5e-2, 1e-12));
        assert!(close(errs[6], 2.126_893_231_105_519e-9, 1e-5));
    }

    #[test]
    fn derivative_of_polynomial() {
        let s = PowerSeries::new(vec![1.0, 2.0, 3.0]);
        assert_eq!(s.derivative().coeffs(), &[2.0, 6.0]);
        assert_eq!(PowerSeries::constant(4.0, 0).derivative().coeffs(), &[0.0]);
    }
}
