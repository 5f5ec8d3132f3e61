//! Subcommand surface. `run` writes to any sink so tests can capture output.

use std::io::Write;
use std::path::PathBuf;

use aclus_core::aclus::{
    analyze, cluster_search, combine_rows, whatif_remove, ClusterQuery, Status,
};
use aclus_core::groebner::DEFAULT_VARIETY_LIMIT;
use aclus_core::interpret::Style;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use crate::load::{load_table, LoadError, LoadOptions};
use crate::report::{
    AnalysisReport, ClustersReport, CombineReport, GroebnerReport, ReduceReport, WeightsReport,
    WhatIfOutput,
};

pub const VARIETY_GUARD_ENV: &str = "ACLUS_VARIETY_GUARD";

/// Exit code for an inconsistent (empty) table under `analyze`.
pub const EXIT_INCONSISTENT: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Load(#[from] LoadError),
    #[error(transparent)]
    Core(#[from] aclus_core::Error),
    #[error("{VARIETY_GUARD_ENV}: `{0}` is not a non-negative integer")]
    BadGuard(String),
    #[error("output: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// The reader of stdout went away, e.g. `aclus analyze t.csv | head`.
    pub fn is_broken_pipe(&self) -> bool {
        let io = match self {
            CliError::Io(e) => Some(e.kind()),
            CliError::Json(e) => e.io_error_kind(),
            _ => None,
        };
        io == Some(std::io::ErrorKind::BrokenPipe)
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "aclus",
    version,
    about = "Audit binary tables with Boolean Gröbner bases"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct Common {
    /// CSV file with a header row and 0/1 cells.
    pub csv: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Extra cell spellings read as 1 (comma separated or repeated).
    #[arg(long, value_delimiter = ',')]
    pub truthy: Vec<String>,
    /// Extra cell spellings read as 0.
    #[arg(long, value_delimiter = ',')]
    pub falsy: Vec<String>,
    /// Column holding row labels instead of 1..m.
    #[arg(long)]
    pub id_column: Option<String>,
    /// Render logic with `& | ! => <=>` instead of Unicode.
    #[arg(long)]
    pub ascii: bool,
    /// Largest column count for the brute-force variety check
    /// (default 24, or the ACLUS_VARIETY_GUARD environment variable).
    #[arg(long)]
    pub variety_limit: Option<usize>,
}

impl Common {
    fn style(&self) -> Style {
        if self.ascii {
            Style::Ascii
        } else {
            Style::Unicode
        }
    }

    fn load_options(&self) -> LoadOptions {
        LoadOptions {
            id_column: self.id_column.clone(),
            ..LoadOptions::with_aliases(&self.truthy, &self.falsy)
        }
    }

    fn variety_limit(&self) -> Result<usize, CliError> {
        if let Some(limit) = self.variety_limit {
            return Ok(limit);
        }
        match std::env::var(VARIETY_GUARD_ENV) {
            Ok(v) => v.trim().parse().map_err(|_| CliError::BadGuard(v)),
            Err(_) => Ok(DEFAULT_VARIETY_LIMIT),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full report: weights, basis, per-row reductions, warnings.
    Analyze(Common),
    /// Column weights and the variable order they induce.
    Weights(Common),
    /// The reduced Gröbner basis with rule readings.
    Groebner(Common),
    /// Sum of the reductions of the listed rows.
    Combine {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_delimiter = ',', required = true)]
        rows: Vec<String>,
    },
    /// Groups of rows whose combined reduction is short.
    Clusters {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 3)]
        max_terms: usize,
        /// Refuse when more subsets than this would be examined.
        #[arg(long)]
        cap: Option<u128>,
    },
    /// What changes if the listed rows are dropped.
    Whatif {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_delimiter = ',', required = true)]
        remove: Vec<String>,
    },
    /// Normal form of a polynomial against the table's ideal.
    Reduce {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        poly: String,
    },
}

fn emit<T: Serialize>(
    out: &mut dyn Write,
    format: Format,
    value: &T,
    text: impl FnOnce(&T) -> String,
) -> Result<(), CliError> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, value)?;
            writeln!(out)?;
        }
        Format::Text => write!(out, "{}", text(value))?,
    }
    Ok(())
}

/// Runs a parsed command and returns the process exit code.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    match cli.command {
        Command::Analyze(common) => {
            let limit = common.variety_limit()?;
            let table = load_table(&common.csv, &common.load_options())?;
            let result = analyze(&table)?;
            let report = AnalysisReport::build(&table, &result, common.style(), limit)?;
            emit(out, common.format, &report, AnalysisReport::to_text)?;
            Ok(if result.status() == Status::Inconsistent {
                EXIT_INCONSISTENT
            } else {
                0
            })
        }
        Command::Weights(common) => {
            let table = load_table(&common.csv, &common.load_options())?;
            let result = analyze(&table)?;
            emit(
                out,
                common.format,
                &WeightsReport::of(&result),
                WeightsReport::to_text,
            )?;
            Ok(0)
        }
        Command::Groebner(common) => {
            let table = load_table(&common.csv, &common.load_options())?;
            let result = analyze(&table)?;
            let report = GroebnerReport::of(&result, common.style());
            emit(out, common.format, &report, GroebnerReport::to_text)?;
            Ok(0)
        }
        Command::Combine { common, rows } => {
            let table = load_table(&common.csv, &common.load_options())?;
            let result = analyze(&table)?;
            let p = combine_rows(&result, &rows)?;
            let report = CombineReport::of(rows, &p, common.style());
            emit(out, common.format, &report, CombineReport::to_text)?;
            Ok(0)
        }
        Command::Clusters {
            common,
            k,
            max_terms,
            cap,
        } => {
            let table = load_table(&common.csv, &common.load_options())?;
            let result = analyze(&table)?;
            let mut query = ClusterQuery::new(k, max_terms);
            if let Some(cap) = cap {
                query.cap = cap;
            }
            let found = cluster_search(&result, query)?;
            let report = ClustersReport::of(&result, k, max_terms, &found, common.style());
            emit(out, common.format, &report, ClustersReport::to_text)?;
            Ok(0)
        }
        Command::Whatif { common, remove } => {
            let table = load_table(&common.csv, &common.load_options())?;
            let report = whatif_remove(&table, &remove)?;
            let output = WhatIfOutput::of(&report, common.style());
            emit(out, common.format, &output, WhatIfOutput::to_text)?;
            Ok(0)
        }
        Command::Reduce { common, poly } => {
            let table = load_table(&common.csv, &common.load_options())?;
            let result = analyze(&table)?;
            let f = table.context().parse(&poly)?;
            let nf = result.reduce(&f)?;
            let report = ReduceReport {
                input: f.render(),
                in_ideal: nf.is_zero(),
                normal_form: nf.render(),
            };
            emit(out, common.format, &report, ReduceReport::to_text)?;
            Ok(0)
        }
    }
}
