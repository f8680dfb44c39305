use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use perapprox::config::{Cover, ProbeJob, Source, Task};
use perapprox::{run, Failure, JobConfig};

/// Periodic approximations of subshifts and the spectra of their Jacobi
/// operators.
#[derive(Parser)]
#[command(name = "perapprox", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Not accepted: every algorithm is deterministic.
    #[arg(long, global = true, hide = true)]
    seed: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Dictionary slice up to `--cap`, as slice text.
    Dict(JobArgs),
    /// De Bruijn graph of order `--order`, as DOT.
    Graph(JobArgs),
    /// Periodic approximant tile: `S^n(v)` for substitutions, otherwise the
    /// word of a global closed path in the de Bruijn graph of order `--order`.
    Approx(JobArgs),
    /// Band edges of the approximant's Jacobi operator, as CSV.
    Spectrum(JobArgs),
    /// Convergence table of approximants against the source, as CSV.
    Converge(JobArgs),
    /// Norm probes on diagonal matrices.
    Probe {
        #[command(subcommand)]
        probe: ProbeCommand,
    },
    /// Run a JSON job description.
    Run {
        #[arg(long)]
        config: PathBuf,
    },
}

#[derive(Args)]
#[group(id = "source", required = true, multiple = false)]
struct SourceArgs {
    /// Built-in example, e.g. fibonacci, table, one-defect.
    #[arg(long, group = "source")]
    builtin: Option<String>,
    /// JSON substitution file.
    #[arg(long, group = "source")]
    subst: Option<PathBuf>,
    /// Slice text file.
    #[arg(long, group = "source")]
    slice: Option<PathBuf>,
    /// Periodic tile: a word, or rows joined by '/', top row first.
    #[arg(long, group = "source")]
    tile: Option<String>,
}

#[derive(Args)]
struct JobArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Letter names of a tile, separated by commas.
    #[arg(long, value_delimiter = ',')]
    alphabet: Option<Vec<String>>,
    #[arg(long)]
    order: Option<usize>,
    #[arg(long)]
    cap: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    n_min: Option<usize>,
    #[arg(long)]
    n_max: Option<usize>,
    /// Potential strength on `--letter`.
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<f64>,
    #[arg(long)]
    letter: Option<String>,
    #[arg(long)]
    tol: Option<f64>,
    /// Cross-check bands against a Bloch grid with this many phases.
    #[arg(long)]
    phases: Option<usize>,
    #[arg(long, value_enum)]
    cover: Option<CoverArg>,
    /// Approximant start pattern, rows joined by '/'.
    #[arg(long)]
    start: Option<String>,
    #[arg(long, short)]
    output: Option<PathBuf>,
    #[arg(long)]
    dot: Option<PathBuf>,
    /// Colour the edges of a global closed path.
    #[arg(long)]
    highlight_path: bool,
    /// Also write the band table of every approximant.
    #[arg(long)]
    bands: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum CoverArg {
    Vertices,
    Edges,
}

#[derive(Subcommand)]
enum ProbeCommand {
    /// Is there spectrum of diag(values) in (x - r, x + r)?
    Presence {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        values: Vec<f64>,
        #[arg(long, allow_hyphen_values = true)]
        x: f64,
        #[arg(long)]
        m: f64,
        #[arg(long)]
        r: f64,
    },
    /// Is there spectrum of diag(e^{i t}) within r of e^{i centre}?
    Unitary {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        phases: Vec<f64>,
        #[arg(long, allow_hyphen_values = true)]
        centre: f64,
        #[arg(long)]
        r: f64,
    },
    /// Norm of p0 + p1 A + p2 A² for A = diag(values).
    P2 {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        values: Vec<f64>,
        /// p0,p1,p2
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        coeffs: Vec<f64>,
    },
}

fn job(task: Task, a: JobArgs) -> JobConfig {
    let s = a.source;
    let source = s
        .builtin
        .map(Source::Builtin)
        .or(s.subst.map(Source::Substitution))
        .or(s.slice.map(Source::Slice))
        .or(s.tile.map(Source::Tile));
    let mut cfg = JobConfig::new(task);
    cfg.source = source;
    cfg.alphabet = a.alphabet;
    cfg.order = a.order;
    cfg.cap = a.cap;
    cfg.n = a.n;
    cfg.n_min = a.n_min;
    cfg.n_max = a.n_max;
    cfg.lambda = a.lambda;
    cfg.letter = a.letter;
    cfg.tol = a.tol;
    cfg.phases = a.phases;
    cfg.cover = a.cover.map(|c| match c {
        CoverArg::Vertices => Cover::Vertices,
        CoverArg::Edges => Cover::Edges,
    });
    cfg.start = a.start;
    cfg.output = a.output;
    cfg.dot = a.dot;
    cfg.highlight_path = a.highlight_path;
    cfg.bands = a.bands;
    cfg
}

fn probe_job(p: ProbeCommand) -> Result<JobConfig, Failure> {
    let mut cfg = JobConfig::new(Task::Probe);
    cfg.probe = Some(match p {
        ProbeCommand::Presence { values, x, m, r } => ProbeJob::Presence { values, x, m, r },
        ProbeCommand::Unitary { phases, centre, r } => ProbeJob::Unitary { phases, centre, r },
        ProbeCommand::P2 { values, coeffs } => ProbeJob::P2 {
            values,
            coeffs: coeffs.try_into().map_err(|_| Failure::config("--coeffs takes exactly three numbers"))?,
        },
    });
    Ok(cfg)
}

fn config(cli: Cli) -> Result<JobConfig, Failure> {
    if cli.seed.is_some() {
        return Err(Failure::config("--seed is reserved and not accepted: every algorithm is deterministic"));
    }
    Ok(match cli.command {
        Command::Dict(a) => job(Task::Dict, a),
        Command::Graph(a) => job(Task::Graph, a),
        Command::Approx(a) => job(Task::Approx, a),
        Command::Spectrum(a) => job(Task::Spectrum, a),
        Command::Converge(a) => job(Task::Converge, a),
        Command::Probe { probe } => probe_job(probe)?,
        Command::Run { config } => {
            let text = std::fs::read_to_string(&config)
                .map_err(|e| Failure::config(format!("cannot read {}: {e}", config.display())))?;
            JobConfig::from_json(&text)?
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match config(cli).and_then(|cfg| run(&cfg)) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
