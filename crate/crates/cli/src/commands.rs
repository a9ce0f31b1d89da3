//! One function per subcommand. Each returns its table and whether every
//! check it performs passed.

use rayon::prelude::*;

use pleig::eigen::{
    bounds_for, find_pstar, global_bounds_for, lambda_exact, lambda_prime, lambda_scaled,
    lambda_scaled_prime, PParam,
};
use pleig::oracle::{eigenvalue_shooting, pi_p_closed_form, pi_p_quadrature};
use pleig::series::{lambda_approx, lambda_asymptotic_series};
use pleig::verify::{
    find_case, limit_diagnostics, reproduce_constants, verify_case, verify_catalog,
    MIN_BASE_SAMPLES,
};
use pleig::Error;

use crate::output::{Cell, Schema, Table};

/// Largest grid accepted by `bounds`.
pub const MAX_GRID: usize = 10_000_000;
/// Agreement required between the oracles and the closed form.
pub const SHOOTING_REL_TOL: f64 = 1e-6;
pub const PI_P_REL_TOL: f64 = 1e-8;

#[derive(Debug)]
pub enum Failure {
    /// Bad input: exit code 2.
    Usage(String),
    /// A check or oracle did not succeed: exit code 1.
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Domain(_) | Error::UnknownCase(_) => Failure::Usage(e.to_string()),
            _ => Failure::Check(e.to_string()),
        }
    }
}

pub type Outcome = Result<(Table, bool), Failure>;

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

pub fn eval(p: f64, half_length: f64) -> Outcome {
    let pp = PParam::new(p)?;
    let ev = lambda_exact(&pp);
    let scaled = lambda_scaled(&pp, half_length)?;
    let mut t = Table::new(Schema::Eval);
    t.push(vec![
        p.into(),
        half_length.into(),
        ev.value.into(),
        ev.log_value.into(),
        lambda_prime(&pp).into(),
        scaled.value.into(),
        lambda_scaled_prime(&pp, half_length)?.into(),
    ]);
    Ok((t, true))
}

pub fn bounds(pmin: f64, pmax: f64, n: usize) -> Outcome {
    if n == 0 || n > MAX_GRID {
        return Err(Failure::Usage(format!(
            "--n must be in 1..={MAX_GRID}, got {n}"
        )));
    }
    if !(pmin <= pmax) {
        return Err(Failure::Usage(format!(
            "--pmin {pmin} exceeds --pmax {pmax}"
        )));
    }
    PParam::new(pmin)?;
    PParam::new(pmax)?;
    let step = if n == 1 {
        0.0
    } else {
        (pmax - pmin) / (n - 1) as f64
    };
    let rows: Vec<(Vec<Cell>, bool)> = (0..n)
        .into_par_iter()
        .map(|i| {
            let p = if i + 1 == n {
                pmax
            } else {
                pmin + step * i as f64
            };
            let pp = PParam::new(p).expect("grid lies inside the endpoints");
            let b = bounds_for(&pp);
            let g = global_bounds_for(&pp);
            let row = vec![
                p.into(),
                b.regime.as_str().into(),
                b.lower.into(),
                b.value.into(),
                b.upper.into(),
                b.lower_margin.into(),
                b.upper_margin.into(),
                g.lower.into(),
                g.upper.into(),
            ];
            (row, b.holds() && g.holds())
        })
        .collect();
    let mut t = Table::new(Schema::Bounds);
    let mut ok = true;
    for (row, holds) in rows {
        ok &= holds;
        t.push(row);
    }
    Ok((t, ok))
}

pub fn series(order: usize, eval_p: Option<f64>) -> Outcome {
    let s = lambda_asymptotic_series(order);
    let pp = eval_p.map(PParam::new).transpose()?;
    let exact = pp.map(|pp| lambda_exact(&pp).value);
    let mut t = Table::new(Schema::Series);
    for k in 0..=order {
        let approx = pp.map(|pp| lambda_approx(&pp, k));
        let err = approx.zip(exact).map(|(a, e)| (a - e).abs());
        t.push(vec![
            k.into(),
            s.coeff(k).into(),
            eval_p.into(),
            approx.into(),
            exact.into(),
            err.into(),
        ]);
    }
    Ok((t, true))
}

pub fn oracle(p: f64, tol: f64) -> Outcome {
    if !(tol > 0.0) {
        return Err(Failure::Usage(format!("--tol must be positive, got {tol}")));
    }
    let pp = PParam::new(p)?;
    let exact = lambda_exact(&pp).value;
    let (shot, quad) = rayon::join(
        || eigenvalue_shooting(&pp, tol),
        || pi_p_quadrature(&pp, 1e-12),
    );
    let shot = shot?;
    let quad = quad?;
    let closed = pi_p_closed_form(&pp);
    let shoot_err = rel(shot.lambda_estimate, exact);
    let quad_err = rel(quad, closed);
    let passed = shoot_err <= SHOOTING_REL_TOL && quad_err <= PI_P_REL_TOL;
    let mut t = Table::new(Schema::Oracle);
    t.push(vec![
        p.into(),
        tol.into(),
        exact.into(),
        shot.lambda_estimate.into(),
        shoot_err.into(),
        shot.residual.into(),
        shot.bisection_iterations.into(),
        shot.ode_steps.into(),
        quad.into(),
        closed.into(),
        quad_err.into(),
        passed.into(),
    ]);
    Ok((t, passed))
}

pub fn verify(id: Option<&str>, samples: usize, refine: usize) -> Outcome {
    if samples < MIN_BASE_SAMPLES {
        return Err(Failure::Usage(format!(
            "--samples must be at least {MIN_BASE_SAMPLES}, got {samples}"
        )));
    }
    let mut cases = match id {
        Some(id) => vec![find_case(id)?],
        None => verify_catalog(),
    };
    cases.sort_by_key(|c| c.id);
    let reports: Vec<_> = cases
        .par_iter()
        .map(|c| verify_case(c.id, samples, refine).map(|r| (c.source, r)))
        .collect::<Result<_, _>>()?;
    let mut t = Table::new(Schema::Verify);
    let mut ok = true;
    for (source, r) in reports {
        ok &= r.passed;
        t.push(vec![
            r.id.into(),
            source.into(),
            r.samples.into(),
            r.refined_rounds.into(),
            r.min_margin.into(),
            r.argmin.into(),
            r.passed.into(),
        ]);
    }
    Ok((t, ok))
}

pub fn limits() -> Outcome {
    let report = limit_diagnostics();
    let mut t = Table::new(Schema::Limit);
    for r in &report.rows {
        t.push(vec![
            r.table.as_str().into(),
            r.k.into(),
            r.point.into(),
            r.value.into(),
            r.target.into(),
            r.deviation.into(),
        ]);
    }
    for (name, ok) in report.checks() {
        if !ok {
            eprintln!("limit check failed: {name}");
        }
    }
    Ok((t, report.passed()))
}

pub fn constants() -> Outcome {
    let mut t = Table::new(Schema::Constant);
    let mut ok = true;
    for r in reproduce_constants() {
        ok &= r.matches;
        t.push(vec![
            r.name.into(),
            r.expression.into(),
            r.printed.into(),
            r.recomputed.into(),
            r.abs_diff.into(),
            r.matches.into(),
        ]);
    }
    Ok((t, ok))
}

pub fn pstar(half_length: f64, tol: f64) -> Outcome {
    if !(tol > 0.0) {
        return Err(Failure::Usage(format!("--tol must be positive, got {tol}")));
    }
    let root = find_pstar(half_length, tol)?;
    let pp = PParam::new(root)?;
    let lam = lambda_exact(&pp).value;
    let dlam = lambda_prime(&pp);
    let residual = (dlam - lam * half_length.ln()) / lam;
    let mut t = Table::new(Schema::Pstar);
    t.push(vec![
        half_length.into(),
        tol.into(),
        root.into(),
        lam.into(),
        dlam.into(),
        residual.into(),
    ]);
    Ok((t, residual.abs() <= tol))
}
