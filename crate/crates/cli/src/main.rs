use std::io::Write;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use dubins_cli::bench::{self, BenchConfig};
use dubins_cli::grid::{self, GridConfig};
use dubins_cli::render::{self, SolveDoc};
use dubins_cli::parse_pose;
use dubins_core::solver::{solver_by_name, solver_names};
use dubins_core::{normalize, ClassId, Configuration, Granularity};

#[derive(Parser, Debug)]
#[command(name = "dubins", version, about = "Shortest Dubins paths between planar poses")]
struct Cli {
    /// Minimum turning radius.
    #[arg(long, global = true, default_value_t = 1.0)]
    radius: f64,

    /// Output format (json|csv|svg, depending on the command).
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Seed for randomized commands.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Length tolerance for comparisons against the exhaustive search.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tolerance: f64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Svg,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve one query and print the path summary.
    Solve {
        /// Start pose as x,y,theta.
        #[arg(long, allow_hyphen_values = true)]
        start: String,
        /// Goal pose as x,y,theta.
        #[arg(long, allow_hyphen_values = true)]
        goal: String,
        /// Solver strategy.
        #[arg(long, default_value = "classifier")]
        method: String,
    },
    /// Sample the shortest path as a polyline.
    Sample {
        #[arg(long, allow_hyphen_values = true)]
        start: String,
        #[arg(long, allow_hyphen_values = true)]
        goal: String,
        /// Maximum arc length between samples (world units).
        #[arg(long, default_value_t = 0.01)]
        step: f64,
        #[arg(long, default_value = "classifier")]
        method: String,
    },
    /// Time the classifier against the exhaustive search on random queries.
    Bench {
        #[arg(long, default_value_t = 100_000)]
        n: usize,
        /// Draw only short-case queries.
        #[arg(long)]
        short_only: bool,
        /// Eval accounting for the headline mean.
        #[arg(long, value_enum, default_value_t = GranularityArg::Segment)]
        granularity: GranularityArg,
        /// Omit timing fields (output is then byte-identical per seed).
        #[arg(long)]
        no_timing: bool,
        /// Timing passes; the fastest is reported.
        #[arg(long, default_value_t = 3)]
        passes: usize,
    },
    /// Compare the classifier with the exhaustive search on a grid.
    GridCheck {
        #[arg(long, default_value_t = 64)]
        alpha_steps: usize,
        #[arg(long, default_value_t = 64)]
        beta_steps: usize,
        #[arg(long, default_value_t = 32)]
        d_steps: usize,
        /// Restrict to one class, e.g. a23.
        #[arg(long)]
        class: Option<ClassId>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GranularityArg {
    Word,
    Segment,
}

impl From<GranularityArg> for Granularity {
    fn from(g: GranularityArg) -> Self {
        match g {
            GranularityArg::Word => Granularity::Word,
            GranularityArg::Segment => Granularity::Segment,
        }
    }
}

/// Failures that map to a specific exit status.
enum Outcome {
    Ok,
    Mismatch,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Mismatch) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<Outcome> {
    if !(cli.radius.is_finite() && cli.radius > 0.0) {
        bail!("--radius must be positive");
    }
    if !(cli.tolerance.is_finite() && cli.tolerance >= 0.0) {
        bail!("--tolerance must be nonnegative");
    }
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Solve {
            start,
            goal,
            method,
        } => {
            let (start, goal) = poses(&start, &goal)?;
            let solver = lookup(&method)?;
            let (p, _) = normalize(&start, &goal, cli.radius)?;
            let mut r = solver.solve(&p);
            r.path = r.path.scaled(cli.radius);
            let doc = SolveDoc::from(&r);
            match cli.format.unwrap_or(Format::Json) {
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?,
                Format::Csv => write!(out, "{}", render::solve_csv(&doc))?,
                Format::Svg => bail!("solve supports --format json|csv"),
            }
        }
        Command::Sample {
            start,
            goal,
            step,
            method,
        } => {
            let (start, goal) = poses(&start, &goal)?;
            let solver = lookup(&method)?;
            let s = render::sample(&start, &goal, cli.radius, step, |p| solver.solve(p))?;
            let last = s.points.last().expect("at least two samples");
            let err = last.error_to(&goal) / cli.radius.max(1.0);
            if err > cli.tolerance.max(1e-9) * start.distance(&goal).max(1.0) {
                bail!("sampled path misses the goal by {err:e}");
            }
            match cli.format.unwrap_or(Format::Csv) {
                Format::Csv => write!(out, "{}", render::csv(&s.points))?,
                Format::Svg => write!(out, "{}", render::svg(&s, &start, &goal))?,
                Format::Json => bail!("sample supports --format csv|svg"),
            }
        }
        Command::Bench {
            n,
            short_only,
            granularity,
            no_timing,
            passes,
        } => {
            if n == 0 {
                bail!("--n must be at least 1");
            }
            let report = bench::run(&BenchConfig {
                n,
                seed: cli.seed,
                short_only,
                granularity: granularity.into(),
                tolerance: cli.tolerance,
                timing_passes: passes,
                timing: !no_timing,
            });
            match cli.format.unwrap_or(Format::Json) {
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?,
                Format::Csv => write!(out, "{}", bench_csv(&report)?)?,
                Format::Svg => bail!("bench supports --format json|csv"),
            }
        }
        Command::GridCheck {
            alpha_steps,
            beta_steps,
            d_steps,
            class,
        } => {
            if alpha_steps < 2 || beta_steps < 2 || d_steps < 2 {
                bail!("grid step counts must be at least 2");
            }
            let report = grid::run(&GridConfig {
                alpha_steps,
                beta_steps,
                d_steps,
                class_filter: class,
                tolerance: cli.tolerance,
            });
            match cli.format.unwrap_or(Format::Json) {
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?,
                Format::Csv => {
                    writeln!(out, "class,cells,mismatches,fallbacks")?;
                    for (class, s) in &report.per_class {
                        writeln!(out, "{class},{},{},{}", s.cells, s.mismatches, s.fallbacks)?;
                    }
                }
                Format::Svg => bail!("grid-check supports --format json|csv"),
            }
            if !report.passed() {
                eprintln!(
                    "{} of {} cells exceed the oracle by more than {:e}",
                    report.mismatches, report.cells, report.tolerance
                );
                return Ok(Outcome::Mismatch);
            }
        }
    }
    Ok(Outcome::Ok)
}

fn poses(start: &str, goal: &str) -> Result<(Configuration, Configuration)> {
    Ok((
        parse_pose(start).context("--start")?,
        parse_pose(goal).context("--goal")?,
    ))
}

fn lookup(method: &str) -> Result<&'static dyn dubins_core::Solver> {
    solver_by_name(method).with_context(|| {
        format!(
            "available methods: {}",
            solver_names().collect::<Vec<_>>().join(", ")
        )
    })
}

/// Header plus one row; columns sorted by name.
fn bench_csv(report: &bench::BenchReport) -> Result<String> {
    let value = serde_json::to_value(report)?;
    let obj = value.as_object().expect("struct serializes to an object");
    let header: Vec<&str> = obj.keys().map(String::as_str).collect();
    let row: Vec<String> = obj
        .values()
        .map(|v| match v {
            serde_json::Value::Null => String::new(),
            serde_json::Value::String(s) => s.clone(),
            other => other.to_string(),
        })
        .collect();
    Ok(format!("{}\n{}\n", header.join(","), row.join(",")))
}
