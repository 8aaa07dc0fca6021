//! The `sgi` command line.
//!
//! Exit codes: 0 success or all rows pass, 1 a property fails, 2 a budget
//! ran out, 64 usage or input errors.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use sgi_core::algebra::build_family;
use sgi_core::classify::{classify_with, intersection_graph, RowStatus, Suite};
use sgi_core::embed::{nonorientable_genus, orientable_genus, GenusOptions, GenusResult};
use sgi_core::lattice::enumerate_subgroups;
use sgi_core::{Error, FamilySpec};

use crate::config::{OutputFormat, RunConfig};
use crate::formats::{export_graph, group_summary, lattice_csv, parse_adjacency, scheme_to_text, GraphFormat};
use crate::runner::{rows_csv, run_suite, suite_exit, write_classification};
use crate::store::Store;
use crate::SgiError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Parser)]
#[command(name = "sgi", version, about = "Intersection graphs of subgroups of finite groups")]
struct Cli {
    /// Directory for reports, graphs and embedding fixtures.
    #[arg(long, global = true)]
    output_dir: Option<PathBuf>,
    /// Comma-separated subset of dot, adjacency, csv, report.
    #[arg(long, global = true, value_delimiter = ',')]
    formats: Option<Vec<String>>,
    /// Node budget for subgraph, independence and clique cover searches.
    #[arg(long, global = true)]
    search_budget: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Group information.
    Group {
        #[command(subcommand)]
        command: GroupCommand,
    },
    /// Subgroup lattice as CSV.
    Lattice { spec: String },
    /// Intersection graph of proper nontrivial subgroups.
    Igraph {
        spec: String,
        #[arg(long, default_value = "adjacency")]
        export: String,
    },
    /// Every decided property of the intersection graph, as JSON.
    Classify {
        spec: String,
        /// Genus search node budget.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Replay a verification suite over the catalog.
    Verify {
        suite: String,
        #[arg(long)]
        max_order: Option<usize>,
        /// Genus search node budget per instance.
        #[arg(long)]
        budget: Option<u64>,
        /// Worker threads; defaults to all cores.
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Orientable genus of a graph in adjacency format.
    Genus {
        file: PathBuf,
        /// Write the realising embedding scheme here.
        #[arg(long)]
        scheme: Option<PathBuf>,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Nonorientable genus of a graph in adjacency format.
    Crosscap {
        file: PathBuf,
        #[arg(long)]
        scheme: Option<PathBuf>,
        #[arg(long)]
        budget: Option<u64>,
    },
}

#[derive(Debug, Subcommand)]
enum GroupCommand {
    Show { spec: String },
}

/// Largest order each suite covers unless `--max-order` says otherwise.
pub fn default_max_order(suite: Suite) -> usize {
    match suite {
        Suite::Formulas | Suite::PlanarCatalog => 256,
        Suite::Toroidal | Suite::ProjectivePlanar | Suite::ProjectiveImpliesToroidal => 200,
        Suite::K5Free | Suite::BipartiteAcyclic | Suite::GraphClasses => 200,
        Suite::CliqueCover => 100,
        Suite::Uniqueness => 64,
    }
}

fn exit_for(e: &SgiError) -> i32 {
    match e {
        SgiError::Core(Error::OrderBudget { .. } | Error::SearchBudget(_)) => EXIT_BUDGET,
        _ => EXIT_USAGE,
    }
}

pub fn run() -> i32 {
    run_with(std::env::args_os(), &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_for(&e)
        }
    }
}

fn config(cli: &Cli) -> Result<RunConfig, SgiError> {
    let mut cfg = RunConfig { output_dir: cli.output_dir.clone(), ..RunConfig::default() };
    if let Some(f) = &cli.formats {
        cfg.formats = f.iter().map(|s| s.parse::<OutputFormat>()).collect::<Result<_, _>>()?;
    }
    if let Some(b) = cli.search_budget {
        cfg.search_node_budget = b;
    }
    Ok(cfg)
}

fn io(e: std::io::Error) -> SgiError {
    SgiError::Io { path: "<stdout>".into(), source: e }
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32, SgiError> {
    let mut cfg = config(&cli)?;
    let build = |s: &str, cfg: &RunConfig| -> Result<_, SgiError> {
        let spec: FamilySpec = s.parse()?;
        Ok(build_family(&spec, cfg.max_order)?)
    };
    match cli.command {
        Command::Group { command: GroupCommand::Show { spec } } => {
            let g = build(&spec, &cfg)?;
            write!(out, "{}", group_summary(&g, &enumerate_subgroups(&g))).map_err(io)?;
        }
        Command::Lattice { spec } => {
            let g = build(&spec, &cfg)?;
            write!(out, "{}", lattice_csv(&enumerate_subgroups(&g))?).map_err(io)?;
        }
        Command::Igraph { spec, export } => {
            let format: GraphFormat = export.parse()?;
            let g = build(&spec, &cfg)?;
            write!(out, "{}", export_graph(&intersection_graph(&enumerate_subgroups(&g)), format)).map_err(io)?;
        }
        Command::Classify { spec, budget } => {
            if let Some(b) = budget {
                cfg.genus_node_budget = b;
            }
            cfg.validate()?;
            let g = build(&spec, &cfg)?;
            let lat = enumerate_subgroups(&g);
            let report = classify_with(&g, &lat, &cfg.budgets())?;
            writeln!(out, "{}", serde_json::to_string_pretty(&report)?).map_err(io)?;
            if let Some(dir) = &cfg.output_dir {
                write_classification(&Store::new(dir), g.family(), &report, &cfg)?;
            }
            return Ok(if report.budget_exceeded { EXIT_BUDGET } else { EXIT_OK });
        }
        Command::Verify { suite, max_order, budget, jobs } => {
            let suite: Suite = suite.parse()?;
            cfg.max_order = max_order.unwrap_or_else(|| default_max_order(suite));
            if let Some(b) = budget {
                cfg.genus_node_budget = b;
            }
            let report = match jobs {
                Some(j) => rayon::ThreadPoolBuilder::new()
                    .num_threads(j)
                    .build()
                    .map_err(|e| SgiError::Core(Error::InvalidConfig(e.to_string())))?
                    .install(|| run_suite(suite, &cfg))?,
                None => run_suite(suite, &cfg)?,
            };
            write!(out, "{}", rows_csv(&report.rows)?).map_err(io)?;
            writeln!(
                out,
                "# {}: {} rows, {} pass, {} fail, {} flagged, {} budget",
                report.suite,
                report.rows.len(),
                report.count(RowStatus::Pass),
                report.count(RowStatus::Fail),
                report.count(RowStatus::Flagged),
                report.count(RowStatus::Budget)
            )
            .map_err(io)?;
            return Ok(suite_exit(&report));
        }
        Command::Genus { file, scheme, budget } => return surface(&file, scheme, budget, true, &cfg, out),
        Command::Crosscap { file, scheme, budget } => return surface(&file, scheme, budget, false, &cfg, out),
    }
    Ok(EXIT_OK)
}

/// Prints the exact genus, or `a..b` / `>=a` bounds and exits with the
/// budget code.
fn surface(
    file: &PathBuf,
    scheme: Option<PathBuf>,
    budget: Option<u64>,
    orientable: bool,
    cfg: &RunConfig,
    out: &mut dyn Write,
) -> Result<i32, SgiError> {
    let text = std::fs::read_to_string(file).map_err(SgiError::io(file))?;
    let g = parse_adjacency(&text)?;
    let opts = GenusOptions { budget: budget.unwrap_or(cfg.genus_node_budget), stop_above: None };
    let r: GenusResult = if orientable { orientable_genus(&g, opts)? } else { nonorientable_genus(&g, opts)? };
    match (r.exact(), r.upper()) {
        (Some(k), _) => writeln!(out, "{k}"),
        (None, Some(u)) => writeln!(out, "{}..{u}", r.lower()),
        (None, None) => writeln!(out, ">={}", r.lower()),
    }
    .map_err(io)?;
    if let (Some(path), Some(s)) = (scheme, &r.scheme) {
        std::fs::write(&path, scheme_to_text(s)).map_err(SgiError::io(&path))?;
    }
    Ok(if r.exact().is_some() { EXIT_OK } else { EXIT_BUDGET })
}
