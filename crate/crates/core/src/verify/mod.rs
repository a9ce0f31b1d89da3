//! Falsification harness for scalar inequalities.
//!
//! Every [`InequalityCase`] carries a margin function that is positive where
//! its inequality holds. [`verify_case`] scans the margin on a dense grid,
//! refines around the smallest values and reports the minimum. A positive
//! minimum is numerical evidence, not a proof.

pub mod catalog;
pub mod constants;
pub mod limits;

use std::f64::consts::PI;

use crate::error::{domain, Error, Result};

pub use constants::{reproduce_constants, ConstantRow};
pub use limits::{limit_diagnostics, LimitReport, LimitRow};

/// Distance kept from open endpoints.
pub const INSET: f64 = 1e-6;
/// Slack allowed at an endpoint where the inequality becomes an equality.
pub const EQUALITY_SLACK: f64 = 1e-12;
pub const MIN_BASE_SAMPLES: usize = 1000;

const KEEP: usize = 8;
const REFINE_HALF_WIDTH: i64 = 10;

/// How the case's variable is laid out on the scan grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Layout {
    /// Uniform in the variable itself (bounded domains).
    Uniform,
    /// The variable is an exponent `p` on `[a, inf)`; the grid is uniform in
    /// `x = pi / p` over `(0, pi/a]`.
    ExponentViaAngle,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Domain {
    pub lo: f64,
    pub hi: f64,
    pub lo_open: bool,
    pub hi_open: bool,
    pub layout: Layout,
}

impl Domain {
    const fn open(lo: f64, hi: f64) -> Self {
        Self {
            lo,
            hi,
            lo_open: true,
            hi_open: true,
            layout: Layout::Uniform,
        }
    }

    const fn open_closed(lo: f64, hi: f64) -> Self {
        Self {
            lo,
            hi,
            lo_open: true,
            hi_open: false,
            layout: Layout::Uniform,
        }
    }

    const fn exponent_from(lo: f64) -> Self {
        Self {
            lo,
            hi: f64::INFINITY,
            lo_open: false,
            hi_open: true,
            layout: Layout::ExponentViaAngle,
        }
    }

    /// The grid interval `[a, b]` (in grid coordinates) after insetting
    /// open ends, and equality ends when `equality_end` is set.
    fn grid_interval(&self, equality_end: Option<f64>) -> (f64, f64) {
        match self.layout {
            Layout::Uniform => {
                let mut a = if self.lo_open {
                    self.lo + INSET
                } else {
                    self.lo
                };
                let mut b = if self.hi_open {
                    self.hi - INSET
                } else {
                    self.hi
                };
                if let Some(e) = equality_end {
                    if e == self.lo {
                        a = self.lo + INSET;
                    }
                    if e == self.hi {
                        b = self.hi - INSET;
                    }
                }
                (a, b)
            }
            Layout::ExponentViaAngle => {
                let b = PI / self.lo;
                (INSET, if self.lo_open { b - INSET } else { b })
            }
        }
    }

    fn to_variable(self, g: f64) -> f64 {
        match self.layout {
            Layout::Uniform => g,
            Layout::ExponentViaAngle => PI / g,
        }
    }
}

#[derive(Clone, Copy)]
pub struct InequalityCase {
    pub id: &'static str,
    pub domain: Domain,
    pub margin_fn: fn(f64) -> f64,
    /// What the inequality says, in words.
    pub source: &'static str,
    /// A closed endpoint where the two sides coincide.
    pub equality_at: Option<f64>,
}

impl std::fmt::Debug for InequalityCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("InequalityCase")
            .field("id", &self.id)
            .field("domain", &self.domain)
            .field("source", &self.source)
            .finish()
    }
}

impl InequalityCase {
    pub fn margin(&self, v: f64) -> f64 {
        (self.margin_fn)(v)
    }
}

/// Every inequality checked by the harness.
pub fn verify_catalog() -> Vec<InequalityCase> {
    use catalog::*;
    let half_pi = PI / 2.0;
    let case = |id, domain, margin_fn, source| InequalityCase {
        id,
        domain,
        margin_fn,
        source,
        equality_at: None,
    };
    vec![
        case(
            "I-LB-HI",
            Domain::exponent_from(2.0),
            lower_high as fn(f64) -> f64,
            "p < lambda(p) for p >= 2",
        ),
        case(
            "I-UB-HI",
            Domain::exponent_from(2.0),
            upper_high,
            "lambda(p) < p + pi^2/6 - 1 for p >= 2",
        ),
        case(
            "I-LB-LO",
            Domain::open(1.0, 2.0),
            lower_low,
            "(p/(p-1))^(p-1) < lambda(p) for 1 < p < 2",
        ),
        case(
            "I-UB-LO",
            Domain::open(1.0, 2.0),
            upper_low,
            "lambda(p) < (p-1)^(1-p) (1 + (pi^2/6)(p-1))^(p-1) for 1 < p < 2",
        ),
        case(
            "I-L13a",
            Domain::open(1.0, 2.0),
            low_lower_exceeds_p,
            "p < (p/(p-1))^(p-1) for 1 < p < 2",
        ),
        case(
            "I-L13b",
            Domain::open(1.0, 2.0),
            low_upper_below_global,
            "(p-1)^(1-p) (1 + (pi^2/6)(p-1))^(p-1) < p + pi^2/6 - 1 for 1 < p < 2",
        ),
        case(
            "I-SINC",
            Domain::open(0.0, 1.0),
            sinc_sandwich,
            "((1-s)/(1 + (pi^2/6 - 1)s))^s < sin(pi s)/(pi s) < (1-s)^s for 0 < s < 1",
        ),
        InequalityCase {
            id: "I-ZHU",
            domain: Domain::open_closed(0.0, half_pi),
            margin_fn: sinc_quadratic_upper,
            source: "sin x / x <= 2/pi + ((pi-2)/pi^3)(pi^2 - 4x^2) for 0 < x <= pi/2",
            equality_at: Some(half_pi),
        },
        case(
            "I-F",
            Domain::exponent_from(2.0),
            log_gap_f,
            "log(p-1) - log p + 4(pi-2)/(pi p) > 0 for p >= 2",
        ),
        case(
            "I-G",
            Domain::open(0.0, PI),
            log_ratio_cubic_defect,
            "log((pi + a x)/(pi - x)) exceeds its cubic Taylor polynomial for 0 < x < pi",
        ),
        case(
            "I-H",
            Domain::open_closed(0.0, 0.4),
            log_one_minus_bound,
            "log(1-t) + t + t^2/2 + t^3/2 > 0 for 0 < t <= 2/5",
        ),
        case(
            "I-K",
            Domain::open_closed(0.0, half_pi),
            sinc_defect_below_two_fifths,
            "(x - sin x)/x < 2/5 for 0 < x <= pi/2",
        ),
        case(
            "I-SIN3",
            Domain::open_closed(0.0, PI),
            sin_cubic,
            "sin x > x - x^3/6 for 0 < x <= pi",
        ),
        case(
            "I-SIN7",
            Domain::open_closed(0.0, PI),
            sin_septic,
            "sin x > x - x^3/3! + x^5/5! - x^7/7! for 0 < x <= pi",
        ),
        case(
            "I-LOGSINC",
            Domain::open_closed(0.0, half_pi),
            log_sinc_lower,
            "log(sin x / x) > -x^2/6 - x^4/180 - 17x^6/15120 - 41x^8/604800 for 0 < x <= pi/2",
        ),
        case(
            "I-PHI",
            Domain::open_closed(0.0, half_pi),
            cubic_bracket,
            "(12-pi^2)/72 - c x - 17 pi x^3/15120 - 41 pi x^5/604800 > 0 for 0 < x <= pi/2",
        ),
        case(
            "I-2.7",
            Domain::open_closed(0.0, half_pi),
            upper_angle_form,
            "x log((pi + a x)/(pi - x)) + pi log(sin x / x) > 0 for 0 < x <= pi/2",
        ),
    ]
}

pub fn find_case(id: &str) -> Result<InequalityCase> {
    verify_catalog()
        .into_iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownCase(id.to_string()))
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub id: String,
    pub samples: usize,
    pub min_margin: f64,
    /// Location of the minimum in the case's own variable.
    pub argmin: f64,
    pub passed: bool,
    pub refined_rounds: usize,
    /// Margin at the equality endpoint, when the case has one.
    pub endpoint_margin: Option<f64>,
}

/// Scans `id` on `base_samples` grid points and refines `refine_rounds` times
/// around the smallest margins, each round 10 times denser than the last.
pub fn verify_case(
    id: &str,
    base_samples: usize,
    refine_rounds: usize,
) -> Result<VerificationReport> {
    let case = find_case(id)?;
    run_case(&case, base_samples, refine_rounds)
}

pub fn run_case(
    case: &InequalityCase,
    base_samples: usize,
    refine_rounds: usize,
) -> Result<VerificationReport> {
    if base_samples < MIN_BASE_SAMPLES {
        return Err(domain(format!(
            "need at least {MIN_BASE_SAMPLES} base samples, got {base_samples}"
        )));
    }
    let dom = case.domain;
    let (a, b) = dom.grid_interval(case.equality_at);
    let eval = |g: f64| case.margin(dom.to_variable(g));

    let mut spacing = (b - a) / (base_samples - 1) as f64;
    let mut points: Vec<(f64, f64)> = (0..base_samples)
        .map(|i| {
            let g = if i + 1 == base_samples {
                b
            } else {
                a + i as f64 * spacing
            };
            (g, eval(g))
        })
        .collect();
    let mut samples = points.len();
    let mut worst = lowest(&points, KEEP);

    for _ in 0..refine_rounds {
        spacing /= 10.0;
        points.clear();
        for &(centre, _) in &worst {
            for j in -REFINE_HALF_WIDTH..=REFINE_HALF_WIDTH {
                let g = centre + j as f64 * spacing;
                if j != 0 && g >= a && g <= b {
                    points.push((g, eval(g)));
                }
            }
        }
        samples += points.len();
        points.extend_from_slice(&worst);
        worst = lowest(&points, KEEP);
    }

    let (g_min, min_margin) = worst[0];
    let endpoint_margin = case.equality_at.map(|e| case.margin(e));
    let endpoint_ok = endpoint_margin.is_none_or(|m| m >= -EQUALITY_SLACK);
    Ok(VerificationReport {
        id: case.id.to_string(),
        samples,
        min_margin,
        argmin: dom.to_variable(g_min),
        passed: min_margin > 0.0 && endpoint_ok,
        refined_rounds: refine_rounds,
        endpoint_margin,
    })
}

/// The `k` points with the smallest margins, smallest first. NaN margins
/// sort first so that they are reported.
fn lowest(points: &[(f64, f64)], k: usize) -> Vec<(f64, f64)> {
    let mut v = points.to_vec();
    v.sort_by(|x, y| match (x.1.is_nan(), y.1.is_nan()) {
        (true, true) => std::cmp::Ordering::Equal,
        (true, false) => std::cmp::Ordering::Less,
        (false, true) => std::cmp::Ordering::Greater,
        _ => x.1.total_cmp(&y.1),
    });
    v.dedup_by(|x, y| x.0 == y.0);
    v.truncate(k);
    v
}

/// Runs every catalog case.
pub fn verify_all(base_samples: usize, refine_rounds: usize) -> Result<Vec<VerificationReport>> {
    verify_catalog()
        .iter()
        .map(|c| run_case(c, base_samples, refine_rounds))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_shape() {
        let cat = verify_catalog();
        assert!(cat.len() >= 15);
        let mut ids: Vec<_> = cat.iter().map(|c| c.id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), cat.len());
    }

    #[test]
    fn margins_finite_on_inset_grids() {
        for c in verify_catalog() {
            let (a, b) = c.domain.grid_interval(c.equality_at);
            for i in 0..=200 {
                let g = a + (b - a) * i as f64 / 200.0;
                let m = c.margin(c.domain.to_variable(g));
                assert!(m.is_finite(), "{} at {g}: {m}", c.id);
            }
        }
    }

    #[test]
    fn unknown_case() {
        assert!(matches!(
            verify_case("I-NOPE", 1000, 0),
            Err(Error::UnknownCase(_))
        ));
        assert!(verify_case("I-F", 999, 0).is_err());
    }

    #[test]
    fn endpoint_values() {
        let f = find_case("I-F").unwrap();
        assert!((f.margin(2.0) - 0.033_613_274_704_892).abs() < 1e-14);
        let h = find_case("I-H").unwrap();
        assert!((h.margin(0.4) - 0.001_174_376_234_009_317).abs() < 1e-15);
        let phi = find_case("I-PHI").unwrap();
        assert!((phi.margin(PI / 2.0) - 0.007_863_316_537_000_481).abs() < 1e-15);
    }

    #[test]
    fn left_endpoint_of_compactified_domain_is_sampled() {
        let r = verify_case("I-F", 1000, 0).unwrap();
        assert!(r.passed);
        // f decays like 0.45/p, so the minimum sits at the large-p end
        assert!(r.argmin > 1e6);
    }

    #[test]
    fn equality_endpoint_reported() {
        let r = verify_case("I-ZHU", 1000, 1).unwrap();
        assert!(r.passed);
        assert!(r.endpoint_margin.unwrap().abs() < 1e-15);
    }

    #[test]
    fn lowest_orders_and_dedups() {
        let pts = [(0.0, 3.0), (1.0, f64::NAN), (2.0, -1.0), (2.0, -1.0)];
        let l = lowest(&pts, 3);
        assert!(l[0].1.is_nan());
        assert_eq!(l[1], (2.0, -1.0));
        assert_eq!(l[2], (0.0, 3.0));
    }
}
