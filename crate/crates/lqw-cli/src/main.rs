//! `lqw` — batch experiments for spatial search by lackadaisical quantum
//! walk. Emits plot-ready CSV and metadata JSON.
//!
//! Exit codes: 0 success, 1 hypothesis NOT-SUPPORTED, 2 invalid input,
//! 3 I/O failure.

use clap::{Args, Parser, Subcommand, ValueEnum};
use lqw::graphs::DEFAULT_AMPLITUDE_CAP;
use lqw::io::RunMetadata;
use lqw::{
    compare_full_reduced, default_horizon, evolve_with_peak, hypothesis_check,
    sweep_loop_weight, validate_strongly_regular, Family, Graph, PeakMode, PeakSpec,
    SearchConfig, SrgOutcome, Verdict,
};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "lqw", version, about = "Spatial search by lackadaisical quantum walk")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evolve one search run and record the success-probability series.
    Run {
        #[command(flatten)]
        family: FamilyArgs,
        /// Self-loop weight ℓ ≥ 0.
        #[arg(long = "loop")]
        loop_weight: f64,
        #[command(flatten)]
        horizon: HorizonArgs,
        #[command(flatten)]
        peak: PeakArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Evolve once per weight and tabulate the peaks.
    Sweep {
        #[command(flatten)]
        family: FamilyArgs,
        /// Comma-separated list of self-loop weights.
        #[arg(long, value_delimiter = ',', required = true)]
        weights: Vec<f64>,
        #[command(flatten)]
        horizon: HorizonArgs,
        #[command(flatten)]
        peak: PeakArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Test whether ℓ = d/N is the best weight over a multiplier grid.
    Hypothesis {
        #[command(flatten)]
        family: FamilyArgs,
        /// Comma-separated multipliers c for ℓ = c·d/N; must include 1.
        #[arg(long, value_delimiter = ',', default_values_t = vec![0.25, 0.5, 1.0, 2.0, 4.0])]
        multipliers: Vec<f64>,
        /// Peak-comparison tolerance.
        #[arg(long, default_value_t = 0.02)]
        tolerance: f64,
        #[command(flatten)]
        horizon: HorizonArgs,
        #[command(flatten)]
        peak: PeakArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Compare the full walk on the complete graph against the 4D model.
    ReducedCompare {
        /// Number of vertices of the complete graph.
        #[arg(long)]
        n: usize,
        /// Self-loop weight ℓ > 0.
        #[arg(long = "loop")]
        loop_weight: f64,
        #[command(flatten)]
        horizon: HorizonArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a graph, print its parameters, optionally export the edge list.
    GraphInfo {
        #[command(flatten)]
        family: FamilyArgs,
        /// Run the brute-force strong-regularity check.
        #[arg(long)]
        srg: bool,
        /// Write the plain-text edge list here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct FamilyArgs {
    /// Graph family: complete | cycle | torus | bipartite | paley | latin |
    /// triangular | johnson | hypercube.
    #[arg(long)]
    family: String,
    /// Vertex count (complete, cycle, bipartite) or symbol count (johnson).
    #[arg(long)]
    n: Option<usize>,
    /// Subset size for johnson.
    #[arg(long)]
    k: Option<usize>,
    /// Prime modulus for paley.
    #[arg(long)]
    q: Option<usize>,
    /// Symbol count for triangular (T_m).
    #[arg(long)]
    m: Option<usize>,
    /// Dimension for torus and hypercube.
    #[arg(long)]
    dim: Option<usize>,
    /// Vertices per axis for torus.
    #[arg(long)]
    side: Option<usize>,
    /// Side length for latin (N = order²).
    #[arg(long)]
    order: Option<usize>,
    /// Override the default cap on state size N·(d+1).
    #[arg(long)]
    cap: Option<usize>,
}

#[derive(Args)]
struct HorizonArgs {
    /// Step count; defaults to the horizon heuristic. `--steps` is an alias.
    #[arg(long, alias = "steps")]
    horizon: Option<usize>,
}

#[derive(Args)]
struct PeakArgs {
    /// Peak detection mode.
    #[arg(long, value_enum, default_value_t = PeakModeArg::GlobalMax)]
    peak: PeakModeArg,
    /// Plateau half-width for first-local-max.
    #[arg(long, default_value_t = 5)]
    window: usize,
}

#[derive(Args)]
struct OutputArgs {
    /// Output path; without it only the summary is printed.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Data file format.
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PeakModeArg {
    GlobalMax,
    FirstLocalMax,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

impl PeakArgs {
    fn spec(&self) -> PeakSpec {
        let mode = match self.peak {
            PeakModeArg::GlobalMax => PeakMode::GlobalMax,
            PeakModeArg::FirstLocalMax => PeakMode::FirstLocalMax,
        };
        PeakSpec { window: self.window, mode }
    }
}

enum CliError {
    Invalid(String),
    Io(String),
}

impl CliError {
    fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Invalid(_) => ExitCode::from(2),
            CliError::Io(_) => ExitCode::from(3),
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Invalid(m) | CliError::Io(m) => m,
        }
    }
}

fn invalid<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Invalid(e.to_string())
}

impl FamilyArgs {
    fn parse_family(&self) -> Result<Family, CliError> {
        let need = |opt: Option<usize>, flag: &str| {
            opt.ok_or_else(|| {
                CliError::Invalid(format!("family '{}' requires --{flag}", self.family))
            })
        };
        let family = match self.family.as_str() {
            "complete" => Family::Complete { n: need(self.n, "n")? },
            "cycle" => Family::Cycle { n: need(self.n, "n")? },
            "torus" => Family::TorusLattice {
                dimension: need(self.dim, "dim")?,
                side: need(self.side, "side")?,
            },
            "bipartite" => Family::CompleteBipartite { n: need(self.n, "n")? },
            "paley" => Family::Paley { q: need(self.q, "q")? },
            "latin" => Family::LatinSquare { order: need(self.order, "order")? },
            "triangular" => Family::Triangular { m: need(self.m, "m")? },
            "johnson" => Family::Johnson { n: need(self.n, "n")?, k: need(self.k, "k")? },
            "hypercube" => Family::Hypercube { dimension: need(self.dim, "dim")? },
            other => {
                return Err(CliError::Invalid(format!(
                    "unknown family '{other}' (expected complete, cycle, torus, bipartite, \
                     paley, latin, triangular, johnson, or hypercube)"
                )))
            }
        };
        Ok(family)
    }

    fn build(&self) -> Result<Graph, CliError> {
        let family = self.parse_family()?;
        family
            .build_with_cap(self.cap.unwrap_or(DEFAULT_AMPLITUDE_CAP))
            .map_err(invalid)
    }
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents)
        .map_err(|e| CliError::Io(format!("writing {}: {e}", path.display())))
}

/// Companion metadata path: `runs/foo.csv` → `runs/foo.meta.json`.
fn metadata_path(out: &Path) -> PathBuf {
    out.with_extension("meta.json")
}

fn cmd_run(
    family: &FamilyArgs,
    loop_weight: f64,
    horizon: &HorizonArgs,
    peak: &PeakArgs,
    output: &OutputArgs,
) -> Result<(), CliError> {
    if !loop_weight.is_finite() || loop_weight < 0.0 {
        return Err(CliError::Invalid(format!("loop weight must be ≥ 0, got {loop_weight}")));
    }
    let g = family.build()?;
    let (steps, source) = match horizon.horizon {
        Some(h) => (h, "flag"),
        None => (default_horizon(&g, loop_weight), "heuristic"),
    };
    let started = Instant::now();
    let record = evolve_with_peak(&g, &SearchConfig::new(loop_weight, 0, steps), &peak.spec())
        .map_err(invalid)?;
    let wall_time_ms = started.elapsed().as_millis();
    let metadata = RunMetadata {
        family: g.family_tag().to_string(),
        n_vertices: g.n_vertices(),
        degree: g.degree(),
        loop_weight,
        marked: 0,
        horizon: steps,
        horizon_source: source.to_string(),
        peak_time: record.peak_time,
        peak_probability: record.peak_probability,
        wall_time_ms,
    };
    if let Some(out) = &output.out {
        match output.format {
            Format::Csv => {
                write_file(out, &record.to_csv())?;
                let json = serde_json::to_string_pretty(&metadata).expect("serializable");
                write_file(&metadata_path(out), &json)?;
            }
            Format::Json => {
                let mut value = serde_json::to_value(&metadata).expect("serializable");
                value["probabilities"] = serde_json::to_value(&record.probabilities).unwrap();
                write_file(out, &serde_json::to_string_pretty(&value).unwrap())?;
            }
        }
    }
    println!(
        "{} {} {} {} {} {:.6}",
        g.family_tag(),
        g.n_vertices(),
        g.degree(),
        loop_weight,
        record.peak_time,
        record.peak_probability
    );
    Ok(())
}

fn cmd_sweep(
    family: &FamilyArgs,
    weights: &[f64],
    horizon: &HorizonArgs,
    peak: &PeakArgs,
    output: &OutputArgs,
) -> Result<(), CliError> {
    let g = family.build()?;
    let record = sweep_loop_weight(&g, weights, horizon.horizon, &peak.spec()).map_err(invalid)?;
    if let Some(out) = &output.out {
        let contents = match output.format {
            Format::Csv => record.to_csv(),
            Format::Json => serde_json::to_string_pretty(&record).expect("serializable"),
        };
        write_file(out, &contents)?;
    }
    for e in &record.entries {
        println!(
            "{} {} {} {} {} {:.6}",
            record.family, record.n_vertices, record.degree, e.loop_weight, e.peak_time,
            e.peak_probability
        );
    }
    Ok(())
}

fn cmd_hypothesis(
    family: &FamilyArgs,
    multipliers: &[f64],
    tolerance: f64,
    horizon: &HorizonArgs,
    peak: &PeakArgs,
    output: &OutputArgs,
) -> Result<Verdict, CliError> {
    let g = family.build()?;
    let report = hypothesis_check(&g, multipliers, tolerance, horizon.horizon, &peak.spec())
        .map_err(invalid)?;
    if let Some(out) = &output.out {
        let contents = match output.format {
            Format::Csv => report.sweep.to_csv(),
            Format::Json => serde_json::to_string_pretty(&report).expect("serializable"),
        };
        write_file(out, &contents)?;
    }
    for e in &report.sweep.entries {
        println!(
            "{} {} {} {} {} {:.6}",
            report.sweep.family,
            report.sweep.n_vertices,
            report.sweep.degree,
            e.loop_weight,
            e.peak_time,
            e.peak_probability
        );
    }
    println!(
        "hypothesis ℓ = d/N = {:.6}: {} (p* at d/N = {:.6}, best {:.6} at ℓ = {:.6})",
        report.sweep.hypothesized_weight,
        report.verdict,
        report.hypothesis_peak,
        report.best_peak,
        report.best_weight
    );
    Ok(report.verdict)
}

fn cmd_reduced_compare(
    n: usize,
    loop_weight: f64,
    horizon: &HorizonArgs,
    out: Option<&Path>,
) -> Result<(), CliError> {
    let steps = horizon.horizon.unwrap_or_else(|| {
        let base = 4.0 * std::f64::consts::PI
            * (n as f64 / (2.0 * (loop_weight + 1.0))).sqrt();
        (base.ceil() as usize).max(1)
    });
    let comparison = compare_full_reduced(n, loop_weight, steps).map_err(invalid)?;
    if let Some(out) = out {
        write_file(out, &comparison.to_csv())?;
    }
    let pred = comparison.prediction;
    println!("max |p_full - p_reduced| = {:.3e}", comparison.max_abs_diff);
    println!(
        "prediction: sigma = {:.6}, t_star = {:.2}, p_star = {:.6}{}",
        pred.sigma,
        pred.t_star,
        pred.p_star,
        if pred.in_asymptotic_range { "" } else { " (outside asymptotic range)" }
    );
    Ok(())
}

fn cmd_graph_info(family: &FamilyArgs, srg: bool, out: Option<&Path>) -> Result<(), CliError> {
    let g = family.build()?;
    println!(
        "family = {}, N = {}, d = {}, state length = {}",
        g.family_tag(),
        g.n_vertices(),
        g.degree(),
        g.state_len()
    );
    println!("hypothesized optimal loop weight d/N = {:.6}", lqw::hypothesized_weight(&g));
    if srg {
        match validate_strongly_regular(&g).map_err(invalid)? {
            SrgOutcome::StronglyRegular(p) => {
                println!("strongly regular: ({}, {}, {}, {})", p.n, p.k, p.lambda, p.mu);
            }
            SrgOutcome::NotStronglyRegular { u, v, adjacent, count, expected } => {
                println!(
                    "not strongly regular: {} pair ({u}, {v}) has {count} common \
                     neighbors, earlier pairs had {expected}",
                    if adjacent { "adjacent" } else { "non-adjacent" }
                );
            }
        }
    }
    if let Some(out) = out {
        write_file(out, &g.to_edge_list())?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result: Result<ExitCode, CliError> = match &cli.command {
        Command::Run { family, loop_weight, horizon, peak, output } => {
            cmd_run(family, *loop_weight, horizon, peak, output).map(|()| ExitCode::SUCCESS)
        }
        Command::Sweep { family, weights, horizon, peak, output } => {
            cmd_sweep(family, weights, horizon, peak, output).map(|()| ExitCode::SUCCESS)
        }
        Command::Hypothesis { family, multipliers, tolerance, horizon, peak, output } => {
            cmd_hypothesis(family, multipliers, *tolerance, horizon, peak, output).map(
                |verdict| match verdict {
                    Verdict::Supported | Verdict::NotStrict => ExitCode::SUCCESS,
                    Verdict::NotSupported => ExitCode::from(1),
                },
            )
        }
        Command::ReducedCompare { n, loop_weight, horizon, out } => {
            cmd_reduced_compare(*n, *loop_weight, horizon, out.as_deref())
                .map(|()| ExitCode::SUCCESS)
        }
        Command::GraphInfo { family, srg, out } => {
            cmd_graph_info(family, *srg, out.as_deref()).map(|()| ExitCode::SUCCESS)
        }
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {}", err.message());
            err.exit_code()
        }
    }
}
