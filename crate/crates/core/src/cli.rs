//! Command-line front end.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bench::report::{self, OutputFormat, Report};
use crate::bench::{self, bks, brute_force_optimum, AlgoConfig, Algorithm};
use crate::error::{Error, Result};
use crate::instance::{Cost, Instance};
use crate::orlib::{self, InstanceFileFormat};

#[derive(Debug, Parser)]
#[command(
    name = "scp-cro",
    version,
    about = "Set covering by chemical reaction optimization"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// One run; prints the cover and its cost.
    Solve {
        file: PathBuf,
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        algo: AlgoArgs,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Out::Text)]
        out: Out,
    },
    /// A batch of seeded trials on one instance.
    Bench {
        file: PathBuf,
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        algo: AlgoArgs,
        #[command(flatten)]
        batch: BatchArgs,
        /// Best known value; defaults to the built-in table.
        #[arg(long)]
        bks: Option<Cost>,
        /// Name used for the BKS lookup and the report; defaults to the file
        /// stem.
        #[arg(long)]
        name: Option<String>,
    },
    /// Every instance file in a directory, one report row each.
    Suite {
        dir: PathBuf,
        #[command(flatten)]
        input: InputArgs,
        /// Layout for files whose name is a known unicost instance.
        #[arg(long)]
        unicost_format: Option<InstanceFileFormat>,
        #[command(flatten)]
        algo: AlgoArgs,
        #[command(flatten)]
        batch: BatchArgs,
    },
    /// Exact optimum by exhaustive search (small instances only).
    Oracle {
        file: PathBuf,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Random instance in the native format.
    Gen {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        #[arg(long, default_value_t = 0.3)]
        density: f64,
        #[arg(long, default_value_t = 1)]
        cost_lo: Cost,
        #[arg(long, default_value_t = 100)]
        cost_hi: Cost,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write here instead of stdout.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// row (costs, row lists), column (unicost, column lists) or native.
    #[arg(long, default_value = "row")]
    pub format: InstanceFileFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Out {
    Text,
    Csv,
    Json,
}

impl From<Out> for OutputFormat {
    fn from(o: Out) -> Self {
        match o {
            Out::Text => OutputFormat::Text,
            Out::Csv => OutputFormat::Csv,
            Out::Json => OutputFormat::Json,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Toggle {
    On,
    Off,
}

#[derive(Debug, Args)]
pub struct BatchArgs {
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    /// Base seed; trial k uses seed + k.
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Out::Json)]
    pub out: Out,
}

#[derive(Debug, Args)]
pub struct AlgoArgs {
    #[arg(long, default_value = "hcro")]
    pub algo: Algorithm,
    /// Evaluation budget; defaults to n * 1000.
    #[arg(long)]
    pub fe_limit: Option<u64>,
    #[arg(long, value_enum, default_value_t = Toggle::Off)]
    pub redundancy_removal: Toggle,
    #[arg(long)]
    pub pop_size: Option<usize>,
    #[arg(long)]
    pub init_ke: Option<f64>,
    #[arg(long)]
    pub init_buffer: Option<f64>,
    #[arg(long)]
    pub collision_rate: Option<f64>,
    #[arg(long)]
    pub ke_loss_rate: Option<f64>,
    #[arg(long)]
    pub dec_threshold: Option<u64>,
    #[arg(long)]
    pub syn_threshold: Option<f64>,
    /// Leave the initial population out of the evaluation budget.
    #[arg(long)]
    pub free_initial_evaluations: bool,
    #[arg(long)]
    pub crossover_rate: Option<f64>,
    #[arg(long)]
    pub mutation_rate: Option<f64>,
}

impl AlgoArgs {
    pub fn config(&self) -> Result<AlgoConfig> {
        let mut cfg = AlgoConfig::new(self.algo).with_fe_limit(self.fe_limit);
        cfg.redundancy_removal = self.redundancy_removal == Toggle::On;
        let p = &mut cfg.params;
        if let Some(v) = self.pop_size {
            p.pop_size = v;
            cfg.ga.pop_size = v;
        }
        macro_rules! apply {
            ($($field:ident),*) => {$(
                if let Some(v) = self.$field {
                    p.$field = v;
                }
            )*};
        }
        apply!(
            init_ke,
            init_buffer,
            collision_rate,
            ke_loss_rate,
            dec_threshold,
            syn_threshold
        );
        p.count_initial_evaluations = !self.free_initial_evaluations;
        if let Some(v) = self.crossover_rate {
            cfg.ga.crossover_rate = v;
        }
        if let Some(v) = self.mutation_rate {
            cfg.ga.mutation_rate = v;
        }
        cfg.params.validate()?;
        cfg.ga.validate()?;
        Ok(cfg)
    }
}

fn stem(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn display_name(path: &Path) -> String {
    let s = stem(path);
    bks::canonical_name(&s).unwrap_or(s)
}

/// Parses `argv` (including the program name) and runs the command,
/// writing results to `out`.
pub fn run<I, T>(argv: I, out: &mut dyn Write) -> Result<()>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).map_err(|e| Error::InvalidParam(e.to_string()))?;
    execute(cli, out)
}

pub fn execute(cli: Cli, out: &mut dyn Write) -> Result<()> {
    match cli.command {
        Command::Solve {
            file,
            input,
            algo,
            seed,
            out: fmt,
        } => {
            let inst = orlib::read_instance(&file, input.format)?;
            let cfg = algo.config()?;
            let r = bench::run_once(&inst, &cfg, seed)?;
            match fmt {
                Out::Json => {
                    let v = serde_json::json!({
                        "instance": display_name(&file),
                        "algorithm": cfg.algorithm.name(),
                        "seed": seed,
                        "cost": r.best_cost,
                        "cover": r.best_cover.one_based(),
                        "fe_used": r.fe_used,
                        "reaction_counts": r.reaction_counts,
                    });
                    writeln!(out, "{}", serde_json::to_string_pretty(&v).map_err(io)?)?;
                }
                Out::Text | Out::Csv => {
                    writeln!(out, "cost {}", r.best_cost)?;
                    let cols: Vec<String> = r
                        .best_cover
                        .one_based()
                        .iter()
                        .map(|j| j.to_string())
                        .collect();
                    writeln!(out, "cover {}", cols.join(" "))?;
                }
            }
        }
        Command::Bench {
            file,
            input,
            algo,
            batch,
            bks: bks_override,
            name,
        } => {
            let inst = orlib::read_instance(&file, input.format)?;
            let name = name.unwrap_or_else(|| display_name(&file));
            let cfg = algo.config()?;
            let bks_value = bks_override.or_else(|| bks::lookup(&name));
            let row = bench::run_trials(&inst, &name, &cfg, batch.trials, batch.seed, bks_value)?;
            let report = Report {
                algorithm: cfg.algorithm.name().into(),
                base_seed: batch.seed,
                trials: batch.trials,
                fe_limit: algo.fe_limit,
                rows: vec![row],
            };
            out.write_all(report::render(&report, batch.out.into())?.as_bytes())?;
        }
        Command::Suite {
            dir,
            input,
            unicost_format,
            algo,
            batch,
        } => {
            let cfg = algo.config()?;
            let mut files: Vec<PathBuf> = std::fs::read_dir(&dir)?
                .filter_map(|e| e.ok().map(|e| e.path()))
                .filter(|p| p.is_file())
                .collect();
            files.sort();
            let mut rows = Vec::new();
            for path in files {
                let name = display_name(&path);
                let fmt = match unicost_format {
                    Some(f) if bks::is_unicost_name(&name) => f,
                    _ => input.format,
                };
                let inst: Instance = orlib::read_instance(&path, fmt)?;
                let row = bench::run_trials(
                    &inst,
                    &name,
                    &cfg,
                    batch.trials,
                    batch.seed,
                    bks::lookup(&name),
                )?;
                rows.push(row);
            }
            let report = Report {
                algorithm: cfg.algorithm.name().into(),
                base_seed: batch.seed,
                trials: batch.trials,
                fe_limit: algo.fe_limit,
                rows,
            };
            out.write_all(report::render(&report, batch.out.into())?.as_bytes())?;
        }
        Command::Oracle { file, input } => {
            let inst = orlib::read_instance(&file, input.format)?;
            let (cost, cover) = brute_force_optimum(&inst)?;
            writeln!(out, "cost {cost}")?;
            let cols: Vec<String> = cover.one_based().iter().map(|j| j.to_string()).collect();
            writeln!(out, "cover {}", cols.join(" "))?;
        }
        Command::Gen {
            rows,
            cols,
            density,
            cost_lo,
            cost_hi,
            seed,
            output,
        } => {
            let inst = orlib::generate_random(rows, cols, density, cost_lo, cost_hi, seed)?;
            let text = orlib::write_native(&inst);
            match output {
                Some(path) => std::fs::write(path, text)?,
                None => out.write_all(text.as_bytes())?,
            }
        }
    }
    Ok(())
}

fn io(e: serde_json::Error) -> Error {
    Error::Io(e.to_string())
}
