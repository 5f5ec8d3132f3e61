//! CSV ingestion.
//!
//! Comma separated, UTF-8, optional quoting, mandatory header row. Every
//! header except the optional id column becomes a variable.

use std::collections::HashSet;
use std::fs::File;
use std::io::Read;
use std::path::Path;

use aclus_core::aclus::BooleanTable;
use aclus_core::VariableContext;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed CSV: {0}")]
    Csv(#[from] csv::Error),
    #[error("file is empty: a header row is required")]
    EmptyFile,
    #[error("duplicate column header `{0}`")]
    DuplicateHeader(String),
    #[error("column {0} has an empty header")]
    EmptyHeader(usize),
    #[error("id column `{0}` not found in header")]
    MissingIdColumn(String),
    #[error("no variable columns besides the id column")]
    NoVariables,
    #[error("line {line}: expected {expected} cells, found {found}")]
    Ragged {
        line: u64,
        expected: usize,
        found: usize,
    },
    #[error("line {line}, column `{column}`: `{value}` is not a binary value")]
    NonBinary {
        line: u64,
        column: String,
        value: String,
    },
    #[error("line {line}: duplicate row id `{id}`")]
    DuplicateId { line: u64, id: String },
    #[error(transparent)]
    Table(#[from] aclus_core::Error),
}

#[derive(Clone, Debug)]
pub struct LoadOptions {
    /// Cell values read as 1, compared case-insensitively.
    pub truthy: Vec<String>,
    /// Cell values read as 0, compared case-insensitively.
    pub falsy: Vec<String>,
    pub id_column: Option<String>,
}

impl Default for LoadOptions {
    fn default() -> Self {
        Self {
            truthy: vec!["1".into()],
            falsy: vec!["0".into()],
            id_column: None,
        }
    }
}

impl LoadOptions {
    /// Adds aliases on top of the default `1`/`0`.
    pub fn with_aliases(truthy: &[String], falsy: &[String]) -> Self {
        let mut opts = Self::default();
        opts.truthy.extend(truthy.iter().cloned());
        opts.falsy.extend(falsy.iter().cloned());
        opts
    }

    fn cell(&self, value: &str) -> Option<bool> {
        let matches = |set: &[String]| set.iter().any(|a| a.eq_ignore_ascii_case(value));
        if matches(&self.truthy) {
            Some(true)
        } else if matches(&self.falsy) {
            Some(false)
        } else {
            None
        }
    }
}

pub fn load_table(path: &Path, options: &LoadOptions) -> Result<BooleanTable, LoadError> {
    let file = File::open(path).map_err(|source| LoadError::Io {
        path: path.display().to_string(),
        source,
    })?;
    read_table(file, options)
}

pub fn read_table<R: Read>(reader: R, options: &LoadOptions) -> Result<BooleanTable, LoadError> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(reader);
    let headers = rdr.headers()?.clone();
    if headers.is_empty() {
        return Err(LoadError::EmptyFile);
    }
    let mut seen = HashSet::new();
    for (i, h) in headers.iter().enumerate() {
        if h.is_empty() {
            return Err(LoadError::EmptyHeader(i + 1));
        }
        if !seen.insert(h) {
            return Err(LoadError::DuplicateHeader(h.to_owned()));
        }
    }
    let id_index = match &options.id_column {
        Some(name) => Some(
            headers
                .iter()
                .position(|h| h == name)
                .ok_or_else(|| LoadError::MissingIdColumn(name.clone()))?,
        ),
        None => None,
    };
    let var_columns: Vec<usize> = (0..headers.len())
        .filter(|&i| Some(i) != id_index)
        .collect();
    if var_columns.is_empty() {
        return Err(LoadError::NoVariables);
    }
    let ctx = VariableContext::new(var_columns.iter().map(|&i| headers[i].to_owned()))?;

    let mut rows = Vec::new();
    let mut labels = Vec::new();
    let mut ids = HashSet::new();
    for record in rdr.records() {
        let record = record?;
        let line = record.position().map_or(0, |p| p.line());
        if record.len() != headers.len() {
            return Err(LoadError::Ragged {
                line,
                expected: headers.len(),
                found: record.len(),
            });
        }
        let row = var_columns
            .iter()
            .map(|&i| {
                options
                    .cell(&record[i])
                    .ok_or_else(|| LoadError::NonBinary {
                        line,
                        column: headers[i].to_owned(),
                        value: record[i].to_owned(),
                    })
            })
            .collect::<Result<Vec<bool>, _>>()?;
        rows.push(row);
        if let Some(i) = id_index {
            let id = record[i].to_owned();
            if !ids.insert(id.clone()) {
                return Err(LoadError::DuplicateId { line, id });
            }
            labels.push(id);
        }
    }
    let labels = id_index.map(|_| labels);
    Ok(BooleanTable::with_labels(&ctx, rows, labels)?)
}
