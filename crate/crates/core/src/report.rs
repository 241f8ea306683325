//! Analysis and bound reports, rendered as JSON or single-header CSV.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::bounds::{check_bounds, BoundReport, Check};
use crate::combinatorics::{Rank, Simplex};
use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::generators::complete;
use crate::metric::MetricReport;

/// Default largest N for full analysis; `MOORE_COMPLEX_CAP` overrides it.
pub const DEFAULT_ANALYZE_CAP: usize = 200_000;
pub const CAP_ENV: &str = "MOORE_COMPLEX_CAP";

pub fn analyze_cap() -> Result<usize> {
    match std::env::var(CAP_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|e| Error::Parameter(format!("{CAP_ENV}={v:?} is not a count: {e}"))),
        Err(_) => Ok(DEFAULT_ANALYZE_CAP),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DegreeSummary {
    pub min: usize,
    pub max: usize,
    pub histogram: BTreeMap<usize, usize>,
    pub regular_r: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Connectivity {
    pub components: usize,
    pub sizes: Vec<usize>,
    pub component_diameters: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EccentricitySummary {
    pub min: Option<u32>,
    pub max: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SourceProfile {
    pub rank: usize,
    pub simplex: Simplex,
    pub layer_profile: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnalysisDocument {
    pub n: usize,
    pub d: usize,
    #[serde(rename = "N")]
    pub num_ridges: usize,
    pub num_facets: usize,
    pub degrees: DegreeSummary,
    pub connectivity: Connectivity,
    pub diameter: Option<u32>,
    pub diameter_undefined_reason: Option<String>,
    pub eccentricity: EccentricitySummary,
    pub source: SourceProfile,
    pub bounds: BoundReport,
}

/// Full analysis of `x`. The source defaults to rank 0.
pub fn analyze(x: &Complex, source: Option<&Simplex>, cap: usize) -> Result<AnalysisDocument> {
    if x.num_ridges() > cap {
        return Err(Error::Capacity {
            what: "metric elements N",
            value: x.num_ridges().to_string(),
            cap: cap.to_string(),
        });
    }
    let source_rank = match source {
        Some(s) => x.ridge_rank(s)?,
        None => Rank(0),
    };
    let degrees = x.degree_profile();
    let components = x.connected_components();
    let metric = MetricReport::compute(x);
    let bounds = check_bounds(x, &metric, &degrees);
    let defined: Vec<u32> = metric.eccentricities.iter().flatten().copied().collect();
    let connected = metric.is_connected();

    Ok(AnalysisDocument {
        n: x.n(),
        d: x.d(),
        num_ridges: x.num_ridges(),
        num_facets: x.num_facets(),
        degrees: DegreeSummary {
            min: degrees.min,
            max: degrees.max,
            histogram: degrees.histogram.clone(),
            regular_r: degrees.regular_r,
        },
        connectivity: Connectivity {
            components: components.count(),
            sizes: components.sizes(),
            component_diameters: metric.component_diameters(&components.members),
        },
        diameter: metric.diameter,
        diameter_undefined_reason: (!connected).then(|| "disconnected".to_string()),
        eccentricity: EccentricitySummary {
            min: defined.iter().copied().min().filter(|_| connected),
            max: defined.iter().copied().max().filter(|_| connected),
        },
        source: SourceProfile {
            rank: source_rank.0,
            simplex: x.ridge(source_rank)?,
            layer_profile: metric.layer_profiles[source_rank.0].clone(),
        },
        bounds,
    })
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|v| v.to_string()).collect::<Vec<_>>().join(";")
}

/// One flat CSV record for a [`BoundReport`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundRow {
    pub n: usize,
    pub d: usize,
    #[serde(rename = "N")]
    pub num_ridges: usize,
    pub regular_r: Option<usize>,
    pub min_degree: usize,
    pub measured_diameter: Option<u32>,
    pub theorem1_status: &'static str,
    pub theorem1_skip_reason: Option<&'static str>,
    pub moore_ball_value: Option<String>,
    pub moore_ball_without_dimension: Option<String>,
    pub theorem1_satisfied: Option<bool>,
    pub diameter_lb_int: Option<u32>,
    pub diameter_lb_real: Option<f64>,
    pub diameter_lb_satisfied: Option<bool>,
    pub theorem2_status: &'static str,
    pub theorem2_skip_reason: Option<&'static str>,
    pub theorem2_k: Option<u64>,
    pub theorem2_radius_bound: Option<u32>,
    pub theorem2_holds: Option<bool>,
    pub theorem2_violation_count: usize,
    /// `rank:eccentricity` pairs separated by `;`.
    pub theorem2_violations: String,
}

fn status<T>(c: &Check<T>) -> &'static str {
    match c {
        Check::Checked(_) => "checked",
        Check::Skipped { .. } => "skipped",
    }
}

impl From<&BoundReport> for BoundRow {
    fn from(b: &BoundReport) -> Self {
        let t1 = b.theorem1.checked();
        let t2 = b.theorem2.checked();
        BoundRow {
            n: b.n,
            d: b.d,
            num_ridges: b.num_ridges,
            regular_r: b.regular_r,
            min_degree: b.min_degree,
            measured_diameter: b.measured_diameter,
            theorem1_status: status(&b.theorem1),
            theorem1_skip_reason: b.theorem1.skip_reason().map(|r| r.as_str()),
            moore_ball_value: t1.map(|c| c.moore_ball_value.to_string()),
            moore_ball_without_dimension: t1.map(|c| c.moore_ball_without_dimension.to_string()),
            theorem1_satisfied: t1.map(|c| c.theorem1_satisfied),
            diameter_lb_int: t1.map(|c| c.diameter_lb_int),
            diameter_lb_real: t1.and_then(|c| c.diameter_lb_real),
            diameter_lb_satisfied: t1.map(|c| c.diameter_lb_satisfied),
            theorem2_status: status(&b.theorem2),
            theorem2_skip_reason: b.theorem2.skip_reason().map(|r| r.as_str()),
            theorem2_k: t2.map(|c| c.k),
            theorem2_radius_bound: t2.map(|c| c.theorem2_radius_bound),
            theorem2_holds: t2.map(|c| c.holds),
            theorem2_violation_count: b.violations().len(),
            theorem2_violations: join(
                b.violations().iter().map(|v| format!("{}:{}", v.rank, v.eccentricity)),
            ),
        }
    }
}

/// One flat CSV record for an [`AnalysisDocument`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnalysisRow {
    pub n: usize,
    pub d: usize,
    #[serde(rename = "N")]
    pub num_ridges: usize,
    pub num_facets: usize,
    pub degree_min: usize,
    pub degree_max: usize,
    /// `degree:count` pairs.
    pub degree_histogram: String,
    pub regular_r: Option<usize>,
    pub components: usize,
    pub component_sizes: String,
    pub component_diameters: String,
    pub diameter: Option<u32>,
    pub diameter_undefined_reason: Option<String>,
    pub eccentricity_min: Option<u32>,
    pub eccentricity_max: Option<u32>,
    pub source_rank: usize,
    pub source_simplex: String,
    pub layer_profile: String,
    #[serde(skip)]
    pub bounds: BoundRow,
}

impl From<&AnalysisDocument> for AnalysisRow {
    fn from(a: &AnalysisDocument) -> Self {
        AnalysisRow {
            n: a.n,
            d: a.d,
            num_ridges: a.num_ridges,
            num_facets: a.num_facets,
            degree_min: a.degrees.min,
            degree_max: a.degrees.max,
            degree_histogram: join(a.degrees.histogram.iter().map(|(g, c)| format!("{g}:{c}"))),
            regular_r: a.degrees.regular_r,
            components: a.connectivity.components,
            component_sizes: join(&a.connectivity.sizes),
            component_diameters: join(&a.connectivity.component_diameters),
            diameter: a.diameter,
            diameter_undefined_reason: a.diameter_undefined_reason.clone(),
            eccentricity_min: a.eccentricity.min,
            eccentricity_max: a.eccentricity.max,
            source_rank: a.source.rank,
            source_simplex: join(a.source.simplex.vertices()),
            layer_profile: join(&a.source.layer_profile),
            bounds: BoundRow::from(&a.bounds),
        }
    }
}

/// Renders records as CSV with a header row and LF line endings.
pub fn to_csv<T: Serialize>(rows: &[T]) -> Result<String> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(vec![]);
    for row in rows {
        w.serialize(row).map_err(|e| Error::Parameter(format!("csv: {e}")))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Parameter(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// Analysis records followed by their bound columns, one line per document.
/// The bound columns repeating `n,d,N,regular_r` are dropped.
pub fn analysis_csv(docs: &[AnalysisDocument]) -> Result<String> {
    let rows: Vec<AnalysisRow> = docs.iter().map(AnalysisRow::from).collect();
    let bounds: Vec<BoundRow> = rows.iter().map(|r| r.bounds.clone()).collect();
    let left = to_csv(&rows)?;
    let right = to_csv(&bounds)?;
    let mut out = String::new();
    for (a, b) in left.lines().zip(right.lines()) {
        out.push_str(a);
        out.push(',');
        out.push_str(b.splitn(5, ',').nth(4).unwrap_or_default());
        out.push('\n');
    }
    Ok(out)
}

/// Bound checks for `complete(n, d)` over inclusive ranges.
pub fn sweep_complete(
    n_range: std::ops::RangeInclusive<usize>,
    d_range: std::ops::RangeInclusive<usize>,
    cap: usize,
) -> Result<Vec<BoundRow>> {
    let mut rows = Vec::new();
    for n in n_range {
        for d in d_range.clone() {
            if d < 1 || d + 1 > n {
                continue;
            }
            let x = complete(n, d)?;
            let doc = analyze(&x, None, cap)?;
            rows.push(BoundRow::from(&doc.bounds));
        }
    }
    Ok(rows)
}
