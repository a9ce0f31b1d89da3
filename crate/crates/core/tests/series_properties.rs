use std::f64::consts::PI;

use pleig::eigen::{asymptotic_gap, lambda_prime, PParam, ASYMPTOTIC_OFFSET};
use pleig::series::{
    lambda_approx, lambda_asymptotic_series, log_sinc_series, log_y_series, t_series, PowerSeries,
};
use proptest::prelude::*;

fn series_strategy() -> impl Strategy<Value = PowerSeries> {
    prop::collection::vec(-1.0f64..1.0, 1..=13).prop_map(PowerSeries::new)
}

fn zero_constant_strategy() -> impl Strategy<Value = PowerSeries> {
    prop::collection::vec(-1.0f64..1.0, 2..=13).prop_map(|mut v| {
        v[0] = 0.0;
        PowerSeries::new(v)
    })
}

fn assert_close(a: &PowerSeries, b: &PowerSeries, tol: f64) -> Result<(), TestCaseError> {
    prop_assert_eq!(a.order(), b.order());
    let scale = a
        .coeffs()
        .iter()
        .chain(b.coeffs())
        .fold(1.0f64, |m, c| m.max(c.abs()));
    for (x, y) in a.coeffs().iter().zip(b.coeffs()) {
        prop_assert!((x - y).abs() <= tol * scale, "{:?} vs {:?}", a, b);
    }
    Ok(())
}

proptest! {
    #[test]
    fn multiplication_commutes(a in series_strategy(), b in series_strategy()) {
        assert_close(&(&a * &b), &(&b * &a), 1e-12)?;
    }

    #[test]
    fn multiplication_associates(a in series_strategy(), b in series_strategy(), c in series_strategy()) {
        assert_close(&(&(&a * &b) * &c), &(&a * &(&b * &c)), 1e-12)?;
    }

    #[test]
    fn exp_inverts_log_one_minus(t in zero_constant_strategy()) {
        let back = t.log_one_minus().unwrap().exp();
        let one = PowerSeries::constant(1.0, t.order());
        assert_close(&back, &(&one - &t), 1e-10)?;
    }

    #[test]
    fn divide_undoes_shift(s in series_strategy()) {
        let x = PowerSeries::identity(s.order());
        if s.order() >= 1 {
            let back = (&x * &s).divide_by_x().unwrap();
            assert_close(&back, &s.truncate(s.order() - 1), 0.0)?;
        }
    }

    #[test]
    fn eval_is_horner(s in series_strategy(), x in -1.0f64..1.0) {
        let naive: f64 = s.coeffs().iter().enumerate().map(|(k, c)| c * x.powi(k as i32)).sum();
        prop_assert!((s.eval(x) - naive).abs() <= 1e-13);
    }
}

#[test]
fn closed_form_leading_coefficients() {
    let s = lambda_asymptotic_series(2);
    let want = [
        PI * PI / 6.0 - 1.0,
        PI.powi(3) / 72.0 - PI / 6.0,
        PI.powi(4) / 1296.0 - PI * PI / 120.0,
    ];
    for (k, w) in want.iter().enumerate() {
        assert!(((s.coeff(k) - w) / w).abs() <= 1e-12, "c_{k}");
    }
}

#[test]
fn prefix_stability() {
    let high = lambda_asymptotic_series(16);
    for n in 0..16 {
        let low = lambda_asymptotic_series(n);
        for k in 0..=n {
            let (a, b) = (low.coeff(k), high.coeff(k));
            assert!(((a - b) / b).abs() <= 1e-12, "order {n}, c_{k}");
        }
    }
}

#[test]
fn parity() {
    let t = t_series(16);
    let l = log_sinc_series(16);
    let ly = log_y_series(15);
    for k in (1..=15).step_by(2) {
        assert_eq!(t.coeff(k), 0.0);
        assert!(
            l.coeff(k).abs() < 1e-18,
            "log(sin x / x) odd coefficient {k}"
        );
    }
    for k in (0..=14).step_by(2) {
        assert!(ly.coeff(k).abs() < 1e-18, "log y even coefficient {k}");
    }
}

#[test]
fn truncated_expansion_tracks_closed_form() {
    let c9 = lambda_asymptotic_series(9).coeff(9);
    let s8 = lambda_asymptotic_series(8);
    for p in [5.0, 10.0, 20.0, 50.0, 100.0] {
        let pp = PParam::new(p).unwrap();
        let x = PI / p;
        let series_gap = s8.eval(x);
        let exact_gap = asymptotic_gap(&pp) + ASYMPTOTIC_OFFSET;
        // binary64 cannot resolve the bound itself for p >= 50
        let bound = 10.0 * c9.abs() * x.powi(9) + 1e-15;
        assert!((series_gap - exact_gap).abs() <= bound, "p = {p}");
    }
}

#[test]
fn order_two_approximation_at_hundred() {
    let pp = PParam::new(100.0).unwrap();
    let c3 = lambda_asymptotic_series(3).coeff(3);
    let exact = pleig::lambda_exact(&pp).value;
    assert!((lambda_approx(&pp, 2) - exact).abs() <= 2.0 * c3.abs() * (PI / 100.0).powi(3));
}

#[test]
fn approximation_converges_as_p_grows() {
    for n in 0..4 {
        let mut prev = f64::INFINITY;
        for p in [10.0, 100.0, 1000.0] {
            let pp = PParam::new(p).unwrap();
            let err = (lambda_approx(&pp, n) - p - ASYMPTOTIC_OFFSET - asymptotic_gap(&pp)).abs();
            assert!(err < prev || err < 1e-13, "N = {n}, p = {p}");
            prev = err;
        }
    }
}

#[test]
fn derivative_of_expansion_matches_lambda_prime() {
    let h = 1e-4;
    let f = |p: f64| lambda_approx(&PParam::new(p).unwrap(), 6);
    let fd = (f(20.0 + h) - f(20.0 - h)) / (2.0 * h);
    let d = lambda_prime(&PParam::new(20.0).unwrap());
    assert!(((fd - d) / d).abs() <= 1e-4);
}
