//! Command-line surface: generate, analyze, check bounds, query distances, sweep.

use std::fs;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bounds::check_bounds;
use crate::combinatorics::Simplex;
use crate::complex::Complex;
use crate::document::{parse_complex, serialize_complex, Metadata};
use crate::error::{Error, Result};
use crate::generators::{near_regular, GenSpec, NamedGraph};
use crate::metric::{distance, MetricReport};
use crate::report::{analysis_csv, analyze, analyze_cap, sweep_complete, to_csv, BoundRow};

#[derive(Debug, Parser)]
#[command(name = "moore-complex", version, about = "Facet-path metric and Moore-type bounds for simplicial complexes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Complete,
    Random,
    Named,
    NearRegular,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a complex and write it as a complex document.
    Gen(GenArgs),
    /// Degrees, connectivity, eccentricities, ball growth and bound checks.
    Analyze {
        #[arg(long = "in")]
        input: PathBuf,
        /// Source (d-1)-simplex, e.g. "1,2". Defaults to colex rank 0.
        #[arg(long)]
        source: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate the ball, diameter and eccentricity bounds.
    CheckBounds {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Distance between two (d-1)-simplices.
    Dist {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Bound checks over a family of complete complexes.
    Sweep {
        #[arg(long, value_enum)]
        kind: SweepKind,
        /// Inclusive range, e.g. `4..9`.
        #[arg(long)]
        n_range: String,
        #[arg(long)]
        d_range: String,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub kind: Kind,
    /// Vertex count (for named graphs: the size parameter m).
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub d: Option<usize>,
    /// Facet probability for `random`.
    #[arg(long)]
    pub p: Option<f64>,
    /// Target degree for `near-regular`.
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1000)]
    pub max_iters: usize,
    /// Graph name for `named`, e.g. `petersen` or `circular_ladder(16)`.
    #[arg(long)]
    pub name: Option<String>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepKind {
    Complete,
}

/// Parses `A..B` (inclusive) or a single value.
pub fn parse_range(text: &str) -> Result<RangeInclusive<usize>> {
    let num = |t: &str| {
        t.trim().parse::<usize>().map_err(|e| Error::Parameter(format!("bad range {text:?}: {e}")))
    };
    match text.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            let (a, b) = (num(a)?, num(b)?);
            if a > b {
                return Err(Error::Parameter(format!("empty range {text:?}")));
            }
            Ok(a..=b)
        }
        None => {
            let v = num(text)?;
            Ok(v..=v)
        }
    }
}

fn read_complex(path: &Path, diag: &mut dyn Write) -> Result<Complex> {
    let text = fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    let parsed = parse_complex(&text).map_err(|e| e.with_context(path.display().to_string()))?;
    for w in &parsed.warnings {
        let _ = writeln!(diag, "warning: {w}");
    }
    Ok(parsed.complex)
}

fn emit(text: &str, out: Option<&Path>, stdout: &mut dyn Write) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Error::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        }),
        None => stdout.write_all(text.as_bytes()).map_err(|e| Error::Io {
            path: "<stdout>".into(),
            message: e.to_string(),
        }),
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("report serializes");
    text.push('\n');
    text
}

fn require<T>(value: Option<T>, flag: &str, kind: &str) -> Result<T> {
    value.ok_or_else(|| Error::Parameter(format!("--{flag} is required for --kind {kind}")))
}

fn generate(args: GenArgs, diag: &mut dyn Write) -> Result<(Complex, Metadata)> {
    let GenArgs { kind, n, d, p, r, seed, max_iters, name, .. } = args;
    let (spec, label) = match kind {
        Kind::Complete => {
            (GenSpec::Complete { n: require(n, "n", "complete")?, d: require(d, "d", "complete")? }, None)
        }
        Kind::Random => (
            GenSpec::RandomUniform {
                n: require(n, "n", "random")?,
                d: require(d, "d", "random")?,
                p: require(p, "p", "random")?,
                seed,
            },
            None,
        ),
        Kind::Named => {
            let name = require(name, "name", "named")?;
            let graph: NamedGraph = match (name.contains('('), n) {
                (false, Some(m)) if name != "petersen" => format!("{name}({m})").parse()?,
                _ => name.parse()?,
            };
            (GenSpec::Named { graph }, Some(graph.to_string()))
        }
        Kind::NearRegular => {
            let (n, d, r) = (
                require(n, "n", "near-regular")?,
                require(d, "d", "near-regular")?,
                require(r, "r", "near-regular")?,
            );
            let outcome = near_regular(n, d, r, seed, max_iters)?;
            let _ = writeln!(
                diag,
                "near-regular: regular_r = {:?}, deviation = {}, iterations = {}",
                outcome.profile.regular_r,
                outcome.profile.deviation_from(r),
                outcome.iterations
            );
            let spec = GenSpec::NearRegular { n, d, r, seed, max_iters };
            let metadata = Metadata { name: None, seed: spec.seed(), genspec: Some(spec) };
            return Ok((outcome.complex, metadata));
        }
    };
    let complex = spec.generate()?;
    let metadata = Metadata { name: label, seed: spec.seed(), genspec: Some(spec) };
    Ok((complex, metadata))
}

/// Runs one command. `stdout` receives results, `diag` warnings.
pub fn run(cli: Cli, stdout: &mut dyn Write, diag: &mut dyn Write) -> Result<()> {
    match cli.command {
        Command::Gen(args) => {
            let out = args.out.clone();
            let (complex, metadata) = generate(args, diag)?;
            emit(&serialize_complex(&complex, Some(&metadata)), out.as_deref(), stdout)
        }
        Command::Analyze { input, source, format, out } => {
            let x = read_complex(&input, diag)?;
            let source = source.as_deref().map(Simplex::parse_list).transpose()?;
            let doc = analyze(&x, source.as_ref(), analyze_cap()?)?;
            let text = match format {
                Format::Json => to_json(&doc),
                Format::Csv => analysis_csv(&[doc])?,
            };
            emit(&text, out.as_deref(), stdout)
        }
        Command::CheckBounds { input, format, out } => {
            let x = read_complex(&input, diag)?;
            let cap = analyze_cap()?;
            if x.num_ridges() > cap {
                return Err(Error::Capacity {
                    what: "metric elements N",
                    value: x.num_ridges().to_string(),
                    cap: cap.to_string(),
                });
            }
            let report = check_bounds(&x, &MetricReport::compute(&x), &x.degree_profile());
            let text = match format {
                Format::Json => to_json(&report),
                Format::Csv => to_csv(&[BoundRow::from(&report)])?,
            };
            emit(&text, out.as_deref(), stdout)
        }
        Command::Dist { input, from, to } => {
            let x = read_complex(&input, diag)?;
            let from = Simplex::parse_list(&from)?;
            let to = Simplex::parse_list(&to)?;
            let text = match distance(&x, &from, &to)? {
                Some(v) => format!("{v}\n"),
                None => "unreachable\n".to_string(),
            };
            emit(&text, None, stdout)
        }
        Command::Sweep { kind: SweepKind::Complete, n_range, d_range, format, out } => {
            let rows = sweep_complete(parse_range(&n_range)?, parse_range(&d_range)?, analyze_cap()?)?;
            let text = match format {
                Format::Json => to_json(&rows),
                Format::Csv => to_csv(&rows)?,
            };
            emit(&text, out.as_deref(), stdout)
        }
    }
}
