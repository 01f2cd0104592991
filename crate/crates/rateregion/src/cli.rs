//! Command-line front end.
//!
//! Exit status: 0 on success, 1 when the computation rejects the input
//! (message on stderr), 2 on I/O, parse and usage errors. Every artifact is
//! computed before the output directory is touched, so a failing command
//! writes nothing.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rateregion_core::crystallize::{self, HullMode, MAX_EXACT_USERS};
use rateregion_core::nregion;
use rateregion_core::oracle::{self, DEFAULT_GRID_2, DEFAULT_GRID_3};
use rateregion_core::{frontier2, normalize_two_user, rate_vector, sinr, ChannelInstance};
use rateregion_core::{PowerVector, RatePoint, TwoUserParams};

use crate::channel_file::{read_channel, FileError};
use crate::formats;
use crate::svg::render_region_svg;

#[derive(Debug, Parser)]
#[command(
    name = "rateregion",
    version,
    about = "Rate regions of the Gaussian interference channel"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Svg,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Per-user SINR and rate for a power vector; writes rates.csv.
    Rates {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value = ".")]
        out: PathBuf,
        /// Comma-separated transmit powers, one per user.
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            required = true
        )]
        powers: Vec<f64>,
    },
    /// Two-user power-control frontier; writes frontier.csv (and region.svg).
    Frontier {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value = ".")]
        out: PathBuf,
        #[arg(long, default_value_t = frontier2::DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Convexity classes, inflection thresholds and TDM verdict; writes convexity.json.
    Classify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Corner points and crystallized hull; writes hull.json (and region.svg).
    Crystallize {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value = ".")]
        out: PathBuf,
        /// Sample the support function over this many directions instead of
        /// building the exact boundary.
        #[arg(long)]
        directions: Option<usize>,
        #[arg(long, default_value_t = frontier2::DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Time-sharing weights reaching a rate target; writes theta.csv.
    Decompose {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value = ".")]
        out: PathBuf,
        /// Comma-separated target rates, one per user.
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            required = true
        )]
        target: Vec<f64>,
    },
    /// Samples the surface with one transmitter at full power; writes
    /// surface.csv, and geometry.json for symmetric channels.
    Surface {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value = ".")]
        out: PathBuf,
        /// Transmitter pinned at full power, from 1.
        #[arg(long, default_value_t = 1)]
        index: usize,
        #[arg(long)]
        grid: Option<usize>,
    },
    /// Symmetric cross-gain sweep of areas and rate gap; writes gap_report.csv.
    Sweep {
        #[arg(long)]
        a: f64,
        #[arg(long)]
        pmax: f64,
        /// Cross gain range in dB as `lo:hi:step`.
        #[arg(long = "b-db", allow_hyphen_values = true)]
        b_db: String,
        #[arg(long, default_value_t = 1024)]
        samples: usize,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Checks the analytic frontier against a brute-force power grid; writes
    /// verify.json and fails when the check does not pass.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value = ".")]
        out: PathBuf,
        #[arg(long, default_value_t = DEFAULT_GRID_2)]
        grid: usize,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
    },
}

/// The input was understood but the analysis rejected it.
#[derive(Debug)]
pub struct DomainError(pub String);

impl fmt::Display for DomainError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for DomainError {}

/// Maps an error chain to the process exit status.
pub fn exit_code(err: &anyhow::Error) -> i32 {
    if err.downcast_ref::<FileError>().is_some() {
        return 2;
    }
    let domain = err.downcast_ref::<rateregion_core::Error>().is_some()
        || err.downcast_ref::<DomainError>().is_some();
    if domain {
        1
    } else {
        2
    }
}

type Artifacts = Vec<(&'static str, String)>;

pub fn run(cli: Cli) -> Result<()> {
    let (out, artifacts, summary) = match cli.command {
        Command::Rates { input, out, powers } => {
            let ch = read_channel(&input)?;
            let p = PowerVector::new(powers);
            let r = rate_vector(&ch, &p)?;
            let s = (0..ch.n())
                .map(|i| sinr(&ch, &p, i))
                .collect::<Result<Vec<_>, _>>()?;
            let summary = sum_line("rates", r.as_slice());
            (
                out,
                vec![("rates.csv", formats::rates_csv(&p, &s, &r))],
                summary,
            )
        }
        Command::Frontier {
            input,
            out,
            samples,
            format,
        } => {
            let params = two_user(&input)?;
            let trace = frontier2::trace_frontier(&params, samples)?;
            let mut files = vec![("frontier.csv", formats::frontier_csv(&trace))];
            match format {
                Format::Csv => {}
                Format::Svg => files.push(("region.svg", region_svg(&params, samples)?)),
                Format::Json => bail!("frontier supports --format csv or svg"),
            }
            let summary = format!("frontier: {} samples", trace.samples.len());
            (out, files, summary)
        }
        Command::Classify { input, out } => {
            let params = two_user(&input)?;
            let report = frontier2::classify(&params)?;
            let summary = format!(
                "class_phi2={} class_phi1={} tdm_optimal={} strategy={}",
                formats::convexity_name(report.class_phi2),
                formats::convexity_name(report.class_phi1),
                report.tdm_optimal,
                formats::strategy_name(report.strategy)
            );
            (
                out,
                vec![("convexity.json", formats::convexity_json(&report))],
                summary,
            )
        }
        Command::Crystallize {
            input,
            out,
            directions,
            samples,
            format,
        } => {
            let ch = read_channel(&input)?;
            let mode = match directions {
                Some(k) => HullMode::Support(k),
                None if ch.n() > MAX_EXACT_USERS => {
                    HullMode::Support(crystallize::DEFAULT_SUPPORT_DIRECTIONS)
                }
                None => HullMode::Exact,
            };
            let hull = crystallize::hull_with(&ch, mode)?;
            let mut files = vec![("hull.json", formats::hull_json(&hull))];
            match format {
                Format::Json => {}
                Format::Svg => {
                    let params = normalize_two_user(&ch)?;
                    files.push(("region.svg", region_svg(&params, samples)?));
                }
                Format::Csv => bail!("crystallize supports --format json or svg"),
            }
            let summary = format!(
                "crystallize: {} corners, dominated {:?}",
                hull.corners.len(),
                hull.dominated
            );
            (out, files, summary)
        }
        Command::Decompose { input, out, target } => {
            let ch = read_channel(&input)?;
            let theta = crystallize::decompose(&ch, &RatePoint::new(target))?;
            let corners = crystallize::corner_rates(&ch)?;
            let summary = format!("decompose: {} nonzero weights", theta.support_size());
            (
                out,
                vec![("theta.csv", formats::theta_csv(&theta, &corners))],
                summary,
            )
        }
        Command::Surface {
            input,
            out,
            index,
            grid,
        } => {
            let ch = read_channel(&input)?;
            if index == 0 || index > ch.n() {
                return Err(rateregion_core::Error::IndexOutOfRange {
                    index: index.wrapping_sub(1),
                    n: ch.n(),
                }
                .into());
            }
            let m = grid.unwrap_or(if ch.n() <= 2 {
                DEFAULT_GRID_2
            } else {
                DEFAULT_GRID_3
            });
            let sample = nregion::sample_surface(&ch, index - 1, m)?;
            let mut files = vec![("surface.csv", formats::surface_csv(&sample, ch.n()))];
            if let Some((a, b)) = symmetric_gains(&ch).filter(|_| ch.n() >= 2) {
                let g = nregion::symmetric_geometry(a, b, ch.p_max(), ch.n())?;
                files.push(("geometry.json", formats::geometry_json(&g)));
            }
            let summary = format!("surface {index}: {} points", sample.grid.len());
            (out, files, summary)
        }
        Command::Sweep {
            a,
            pmax,
            b_db,
            samples,
            out,
        } => {
            let range = parse_range(&b_db)?;
            let rows = oracle::sweep_b_symmetric(a, pmax, range, samples)?;
            let worst = rows.iter().map(|r| r.max_gap_pct).fold(0.0, f64::max);
            let summary = format!("sweep: {} rows, max gap {worst:.4}%", rows.len());
            (
                out,
                vec![("gap_report.csv", formats::gap_report_csv(&rows))],
                summary,
            )
        }
        Command::Verify {
            input,
            out,
            grid,
            tol,
        } => {
            let params = two_user(&input)?;
            let report = oracle::verify_frontier(&params, grid, tol)?;
            let files = vec![("verify.json", formats::verify_json(&report, grid, tol))];
            if !report.passed {
                write_all(&out, &files)?;
                return Err(DomainError(format!(
                    "frontier verification failed: max violation {:e}, round-trip error {:e}, {} failures",
                    report.max_violation, report.roundtrip_max_err, report.roundtrip_failures
                ))
                .into());
            }
            let summary = format!(
                "verify: passed, {} pareto points, max violation {:e}",
                report.pareto_points, report.max_violation
            );
            (out, files, summary)
        }
    };
    write_all(&out, &artifacts)?;
    println!("{summary}");
    Ok(())
}

fn two_user(input: &Path) -> Result<TwoUserParams> {
    let ch = read_channel(input)?;
    Ok(normalize_two_user(&ch)?)
}

fn region_svg(params: &TwoUserParams, samples: usize) -> Result<String> {
    let ch = ChannelInstance::from_two_user(params)?;
    let hull = crystallize::hull(&ch)?;
    let mut traces = vec![frontier2::trace_phi2(params, samples)?];
    if params.b > 0.0 {
        traces.push(frontier2::trace_phi1(params, samples)?);
    }
    let d = frontier2::classify(params)?.inflection_d;
    Ok(render_region_svg(&traces, &hull, d)?)
}

/// `(a, b)` normalized by the noise when every direct gain equals `a` and
/// every cross gain equals `b`.
fn symmetric_gains(ch: &ChannelInstance) -> Option<(f64, f64)> {
    let n = ch.n();
    let direct = ch.gain(0, 0);
    let cross = if n > 1 { ch.gain(0, 1) } else { 0.0 };
    for i in 0..n {
        for j in 0..n {
            let want = if i == j { direct } else { cross };
            if ch.gain(i, j) != want {
                return None;
            }
        }
    }
    Some((direct / ch.noise_var(), cross / ch.noise_var()))
}

/// Parses `lo:hi:step`.
pub fn parse_range(text: &str) -> Result<(f64, f64, f64)> {
    let parts: Vec<&str> = text.split(':').collect();
    if parts.len() != 3 {
        bail!("--b-db expects lo:hi:step, got `{text}`");
    }
    let mut v = [0.0; 3];
    for (slot, part) in v.iter_mut().zip(&parts) {
        *slot = part
            .trim()
            .parse()
            .with_context(|| format!("--b-db: `{part}` is not a number"))?;
    }
    Ok((v[0], v[1], v[2]))
}

fn write_all(dir: &Path, files: &Artifacts) -> Result<()> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    for (name, body) in files {
        let path = dir.join(name);
        fs::write(&path, body).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn sum_line(label: &str, values: &[f64]) -> String {
    let parts: Vec<String> = values.iter().map(|v| format!("{v:.6}")).collect();
    format!("{label}: {}", parts.join(" "))
}
