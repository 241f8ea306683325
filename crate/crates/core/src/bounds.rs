//! Moore-type ball and diameter bounds for regular complexes, and the
//! minimum-degree eccentricity bound, evaluated in exact integer arithmetic.
//!
//! A ball of radius D around a ridge in an r-regular d-complex holds at most
//! `1 + rd * sum_{i<D} ((r-1)d)^i` ridges: r facets give rd neighbors, and
//! every later ridge has at most r-1 unused facets with d new faces each.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::{Serialize, Serializer};

use crate::complex::{Complex, DegreeProfile};
use crate::error::{Error, Result};
use crate::metric::MetricReport;

/// Largest ball of radius `radius` in an `r`-regular `d`-complex.
pub fn moore_ball(r: u64, d: u64, radius: u32) -> Result<BigUint> {
    if r < 2 {
        return Err(Error::OutOfTheoremDomain(format!("degree r = {r} must be at least 2")));
    }
    if d < 1 {
        return Err(Error::OutOfTheoremDomain("dimension d must be at least 1".into()));
    }
    Ok(BallSeries::new(r, d).nth(radius as usize).expect("infinite series"))
}

/// The same series without the d-factors, `1 + r * sum_{i<D} (r-1)^i`.
/// Coincides with [`moore_ball`] at d = 1.
pub fn moore_ball_without_dimension(r: u64, radius: u32) -> Result<BigUint> {
    moore_ball(r, 1, radius)
}

/// Ball sizes for radius 0, 1, 2, ...
struct BallSeries {
    ratio: BigUint,
    term: BigUint,
    total: BigUint,
    started: bool,
}

impl BallSeries {
    fn new(r: u64, d: u64) -> Self {
        BallSeries {
            term: BigUint::from(r) * d,
            ratio: BigUint::from(r - 1) * d,
            total: BigUint::one(),
            started: false,
        }
    }
}

impl Iterator for BallSeries {
    type Item = BigUint;

    fn next(&mut self) -> Option<BigUint> {
        if self.started {
            self.total += &self.term;
            self.term *= &self.ratio;
        } else {
            self.started = true;
        }
        Some(self.total.clone())
    }
}

/// Smallest D with `moore_ball(r, d, D) >= n_ridges`.
pub fn diameter_lower_bound_int(n_ridges: u64, r: u64, d: u64) -> Result<u32> {
    if n_ridges == 0 {
        return Err(Error::Parameter("N must be positive".into()));
    }
    moore_ball(r, d, 0)?;
    if (r - 1) * d == 1 {
        // 1 + 2D >= N
        return Ok(((n_ridges - 1).div_ceil(2)) as u32);
    }
    let target = BigUint::from(n_ridges);
    let radius = BallSeries::new(r, d).position(|ball| ball >= target).expect("series diverges");
    Ok(radius as u32)
}

/// `log(1 + (N-1)((r-1)d - 1)/(rd)) / log((r-1)d)` in floating point.
pub fn diameter_lower_bound_real(n_ridges: u64, r: u64, d: u64) -> Result<f64> {
    let base = (r.saturating_sub(1)) * d;
    if base < 2 {
        return Err(Error::UndefinedBase(base));
    }
    let arg = 1.0 + (n_ridges as f64 - 1.0) * (base as f64 - 1.0) / ((r * d) as f64);
    Ok(arg.ln() / (base as f64).ln())
}

/// Largest radius rho with `1 + kd * sum_{i<rho} ((k-1)d)^i <= N`.
pub fn theorem2_radius_bound(n_ridges: u64, k: u64, d: u64) -> Result<u32> {
    if k < 3 {
        return Err(Error::OutOfTheoremDomain(format!("minimum degree k = {k} must be at least 3")));
    }
    if d < 1 {
        return Err(Error::OutOfTheoremDomain("dimension d must be at least 1".into()));
    }
    if n_ridges == 0 {
        return Err(Error::Parameter("N must be positive".into()));
    }
    let limit = BigUint::from(n_ridges);
    let fits = BallSeries::new(k, d).take_while(|ball| *ball <= limit).count();
    Ok((fits - 1) as u32)
}

/// Why a bound check was not performed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SkipReason {
    Disconnected,
    NotRegular,
    DegreeBelowTwo,
    MinDegreeBelowThree,
}

impl SkipReason {
    pub fn as_str(self) -> &'static str {
        match self {
            SkipReason::Disconnected => "disconnected",
            SkipReason::NotRegular => "not-regular",
            SkipReason::DegreeBelowTwo => "degree-below-two",
            SkipReason::MinDegreeBelowThree => "min-degree-below-three",
        }
    }
}

fn big_as_number<S: Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v.to_u64() {
        Some(x) => s.serialize_u64(x),
        None => s.serialize_str(&v.to_string()),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MooreCheck {
    pub r: u64,
    pub diameter: u32,
    /// Ball bound at the measured diameter.
    #[serde(serialize_with = "big_as_number")]
    pub moore_ball_value: BigUint,
    /// Series without d-factors, for comparison only.
    #[serde(serialize_with = "big_as_number")]
    pub moore_ball_without_dimension: BigUint,
    pub theorem1_satisfied: bool,
    pub diameter_lb_int: u32,
    pub diameter_lb_real: Option<f64>,
    pub diameter_lb_satisfied: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub rank: usize,
    pub eccentricity: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EccentricityCheck {
    pub k: u64,
    pub theorem2_radius_bound: u32,
    pub holds: bool,
    pub theorem2_violations: Vec<Violation>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Check<T> {
    Checked(T),
    Skipped { reason: SkipReason },
}

impl<T> Check<T> {
    pub fn checked(&self) -> Option<&T> {
        match self {
            Check::Checked(t) => Some(t),
            Check::Skipped { .. } => None,
        }
    }

    pub fn skip_reason(&self) -> Option<SkipReason> {
        match self {
            Check::Checked(_) => None,
            Check::Skipped { reason } => Some(*reason),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub d: usize,
    #[serde(rename = "N")]
    pub num_ridges: usize,
    pub regular_r: Option<usize>,
    pub min_degree: usize,
    pub measured_diameter: Option<u32>,
    pub theorem1: Check<MooreCheck>,
    pub theorem2: Check<EccentricityCheck>,
}

impl BoundReport {
    pub fn violations(&self) -> &[Violation] {
        self.theorem2.checked().map(|c| c.theorem2_violations.as_slice()).unwrap_or(&[])
    }
}

/// Evaluates both bounds against measured data. Bound violations are
/// findings recorded in the report, not errors.
pub fn check_bounds(x: &Complex, metric: &MetricReport, degrees: &DegreeProfile) -> BoundReport {
    let n_ridges = x.num_ridges() as u64;
    let d = x.d() as u64;

    let theorem1 = match (metric.diameter, degrees.regular_r) {
        (None, _) => Check::Skipped { reason: SkipReason::Disconnected },
        (_, None) => Check::Skipped { reason: SkipReason::NotRegular },
        (_, Some(r)) if r < 2 => Check::Skipped { reason: SkipReason::DegreeBelowTwo },
        (Some(diameter), Some(r)) => {
            let r = r as u64;
            let ball = moore_ball(r, d, diameter).expect("r >= 2");
            let lb = diameter_lower_bound_int(n_ridges, r, d).expect("r >= 2");
            Check::Checked(MooreCheck {
                r,
                diameter,
                theorem1_satisfied: BigUint::from(n_ridges) <= ball,
                moore_ball_value: ball,
                moore_ball_without_dimension: moore_ball_without_dimension(r, diameter)
                    .expect("r >= 2"),
                diameter_lb_int: lb,
                diameter_lb_real: diameter_lower_bound_real(n_ridges, r, d).ok(),
                diameter_lb_satisfied: diameter >= lb,
            })
        }
    };

    let theorem2 = if degrees.min < 3 {
        Check::Skipped { reason: SkipReason::MinDegreeBelowThree }
    } else if !metric.is_connected() {
        Check::Skipped { reason: SkipReason::Disconnected }
    } else {
        let k = degrees.min as u64;
        let bound = theorem2_radius_bound(n_ridges, k, d).expect("k >= 3");
        let violations: Vec<Violation> = metric
            .eccentricities
            .iter()
            .enumerate()
            .filter_map(|(rank, e)| {
                let e = e.expect("connected");
                (e > bound).then_some(Violation { rank, eccentricity: e })
            })
            .collect();
        Check::Checked(EccentricityCheck {
            k,
            theorem2_radius_bound: bound,
            holds: violations.is_empty(),
            theorem2_violations: violations,
        })
    };

    BoundReport {
        n: x.n(),
        d: x.d(),
        num_ridges: x.num_ridges(),
        regular_r: degrees.regular_r,
        min_degree: degrees.min,
        measured_diameter: metric.diameter,
        theorem1,
        theorem2,
    }
}
