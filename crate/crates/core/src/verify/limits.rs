//! Convergence tables for the limits of `lambda` and `lambda'` at `p -> 1`
//! and `p -> inf`.

use std::f64::consts::PI;

use crate::eigen::{
    asymptotic_gap, grouped_pole_term, lambda_exact, lambda_prime, PParam, ASYMPTOTIC_OFFSET,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LimitTable {
    /// `lambda(1 + 10^-k) -> 1`
    LambdaNearOne,
    /// `lambda'(1 + 10^-k) -> inf`
    DerivativeNearOne,
    /// `lambda(10^k) - 10^k -> pi^2/6 - 1`
    GapAtInfinity,
    /// `lambda'(10^k) -> 1`
    DerivativeAtInfinity,
    /// `1/(pi - x) + cot x -> 0` at `x = pi - 10^-k`
    GroupedTerm,
}

impl LimitTable {
    pub fn as_str(&self) -> &'static str {
        match self {
            LimitTable::LambdaNearOne => "lambda_near_one",
            LimitTable::DerivativeNearOne => "lambda_prime_near_one",
            LimitTable::GapAtInfinity => "gap_at_infinity",
            LimitTable::DerivativeAtInfinity => "lambda_prime_at_infinity",
            LimitTable::GroupedTerm => "grouped_term_near_pi",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LimitRow {
    pub table: LimitTable,
    pub k: i32,
    /// `p`, or `x` for the grouped-term table.
    pub point: f64,
    pub value: f64,
    /// `inf` for the divergent table.
    pub target: f64,
    /// `value - target`; for the divergent table, the increase over the
    /// previous row (NaN on the first).
    pub deviation: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LimitReport {
    pub rows: Vec<LimitRow>,
}

/// Tolerances for the pass/fail summary.
pub const NEAR_ONE_TOL: f64 = 1e-3;
pub const AT_INFINITY_TOL: f64 = 1e-4;
pub const GROUPED_TOL: f64 = 1e-3;

impl LimitReport {
    pub fn table(&self, t: LimitTable) -> impl Iterator<Item = &LimitRow> {
        self.rows.iter().filter(move |r| r.table == t)
    }

    fn last(&self, t: LimitTable) -> &LimitRow {
        self.table(t).last().expect("every table has rows")
    }

    /// Named pass/fail checks summarising the tables.
    pub fn checks(&self) -> Vec<(&'static str, bool)> {
        let increasing = self
            .table(LimitTable::DerivativeNearOne)
            .skip(1)
            .all(|r| r.deviation > 0.0);
        let grouped_at_1e3 = self
            .table(LimitTable::GroupedTerm)
            .find(|r| r.k == 3)
            .is_some_and(|r| r.value.abs() <= GROUPED_TOL);
        vec![
            (
                "lambda(1+1e-6) within 1e-3 of 1",
                self.last(LimitTable::LambdaNearOne).deviation.abs() <= NEAR_ONE_TOL,
            ),
            ("lambda'(1+10^-k) strictly increasing, k=2..6", increasing),
            (
                "lambda(1e5) - 1e5 within 1e-4 of pi^2/6 - 1",
                self.last(LimitTable::GapAtInfinity).deviation.abs() <= AT_INFINITY_TOL,
            ),
            (
                "lambda'(1e5) within 1e-4 of 1",
                self.last(LimitTable::DerivativeAtInfinity).deviation.abs() <= AT_INFINITY_TOL,
            ),
            ("grouped term at x = pi - 1e-3 below 1e-3", grouped_at_1e3),
        ]
    }

    pub fn passed(&self) -> bool {
        self.checks().iter().all(|(_, ok)| *ok)
    }
}

fn pp(p: f64) -> PParam {
    PParam::new(p).expect("limit grids stay inside (1, inf)")
}

pub fn limit_diagnostics() -> LimitReport {
    let mut rows = Vec::new();

    for k in 2..=6 {
        let p = 1.0 + 10f64.powi(-k);
        let v = lambda_exact(&pp(p)).value;
        rows.push(LimitRow {
            table: LimitTable::LambdaNearOne,
            k,
            point: p,
            value: v,
            target: 1.0,
            deviation: v - 1.0,
        });
    }

    let mut prev = f64::NAN;
    for k in 2..=6 {
        let p = 1.0 + 10f64.powi(-k);
        let v = lambda_prime(&pp(p));
        rows.push(LimitRow {
            table: LimitTable::DerivativeNearOne,
            k,
            point: p,
            value: v,
            target: f64::INFINITY,
            deviation: v - prev,
        });
        prev = v;
    }

    for k in 1..=5 {
        let p = 10f64.powi(k);
        let gap = asymptotic_gap(&pp(p));
        rows.push(LimitRow {
            table: LimitTable::GapAtInfinity,
            k,
            point: p,
            value: gap + ASYMPTOTIC_OFFSET,
            target: ASYMPTOTIC_OFFSET,
            deviation: gap,
        });
    }

    for k in 1..=5 {
        let p = 10f64.powi(k);
        let v = lambda_prime(&pp(p));
        rows.push(LimitRow {
            table: LimitTable::DerivativeAtInfinity,
            k,
            point: p,
            value: v,
            target: 1.0,
            deviation: v - 1.0,
        });
    }

    for k in 1..=6 {
        let w = 10f64.powi(-k);
        let v = grouped_pole_term(w);
        rows.push(LimitRow {
            table: LimitTable::GroupedTerm,
            k,
            point: PI - w,
            value: v,
            target: 0.0,
            deviation: v,
        });
    }

    LimitReport { rows }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_checks_pass() {
        let r = limit_diagnostics();
        for (name, ok) in r.checks() {
            assert!(ok, "{name}");
        }
    }

    #[test]
    fn grouped_term_tracks_w_over_three() {
        let r = limit_diagnostics();
        for row in r.table(LimitTable::GroupedTerm) {
            let w = 10f64.powi(-row.k);
            assert!(((row.value - w / 3.0) / (w / 3.0)).abs() < 0.05, "{row:?}");
        }
    }
}
