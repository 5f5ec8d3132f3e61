use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::ring::{Assignment, VariableContext};

/// An `m x n` table over `{0,1}` with named columns and labelled rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BooleanTable {
    ctx: VariableContext,
    rows: Vec<Assignment>,
    labels: Vec<String>,
}

impl BooleanTable {
    /// Builds a table with row labels `1..=m`.
    pub fn new(ctx: &VariableContext, rows: Vec<Vec<bool>>) -> Result<Self> {
        Self::with_labels(ctx, rows, None)
    }

    pub fn with_labels(
        ctx: &VariableContext,
        rows: Vec<Vec<bool>>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        let assignments = rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                if r.len() != ctx.len() {
                    return Err(Error::RaggedRow {
                        row: i + 1,
                        expected: ctx.len(),
                        found: r.len(),
                    });
                }
                Assignment::new(r)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_assignments(ctx, assignments, labels)
    }

    pub fn from_assignments(
        ctx: &VariableContext,
        rows: Vec<Assignment>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        for (i, r) in rows.iter().enumerate() {
            if r.len() != ctx.len() {
                return Err(Error::RaggedRow {
                    row: i + 1,
                    expected: ctx.len(),
                    found: r.len(),
                });
            }
        }
        let labels = match labels {
            Some(labels) => {
                if labels.len() != rows.len() {
                    return Err(Error::LabelCount {
                        labels: labels.len(),
                        rows: rows.len(),
                    });
                }
                let mut seen = HashSet::new();
                for l in &labels {
                    if !seen.insert(l.as_str()) {
                        return Err(Error::DuplicateLabel(l.clone()));
                    }
                }
                labels
            }
            None => (1..=rows.len()).map(|i| i.to_string()).collect(),
        };
        Ok(Self {
            ctx: ctx.clone(),
            rows,
            labels,
        })
    }

    /// Parses rows written as `0`/`1` strings, e.g. `["0011", "1010"]`.
    pub fn from_strings(ctx: &VariableContext, rows: &[&str]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|s| Assignment::from_str01(s))
            .collect::<Result<Vec<_>>>()?;
        Self::from_assignments(ctx, rows, None)
    }

    pub fn context(&self) -> &VariableContext {
        &self.ctx
    }

    /// Number of rows.
    pub fn m(&self) -> usize {
        self.rows.len()
    }

    /// Number of columns.
    pub fn n(&self) -> usize {
        self.ctx.len()
    }

    pub fn rows(&self) -> &[Assignment] {
        &self.rows
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn row_index(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownRow(label.to_owned()))
    }

    pub fn column_ones(&self, column: usize) -> usize {
        self.rows.iter().filter(|r| r.get(column)).count()
    }

    /// A copy without the rows at `indices`; remaining labels are kept.
    pub fn without_rows(&self, indices: &HashSet<usize>) -> Self {
        let (rows, labels) = self
            .rows
            .iter()
            .zip(&self.labels)
            .enumerate()
            .filter(|(i, _)| !indices.contains(i))
            .map(|(_, (r, l))| (*r, l.clone()))
            .unzip();
        Self {
            ctx: self.ctx.clone(),
            rows,
            labels,
        }
    }
}

/// One distinct row pattern and the rows that carry it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternEntry {
    pub pattern: Assignment,
    /// Row indices (0-based) in table order.
    pub rows: Vec<usize>,
}

impl PatternEntry {
    pub fn multiplicity(&self) -> usize {
        self.rows.len()
    }
}

/// The distinct patterns of a table, in order of first occurrence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternSet {
    entries: Vec<PatternEntry>,
    row_pattern: Vec<usize>,
}

impl PatternSet {
    pub fn from_table(table: &BooleanTable) -> Self {
        let mut index: HashMap<Assignment, usize> = HashMap::new();
        let mut entries: Vec<PatternEntry> = Vec::new();
        let mut row_pattern = Vec::with_capacity(table.m());
        for (row, &pattern) in table.rows().iter().enumerate() {
            let idx = *index.entry(pattern).or_insert_with(|| {
                entries.push(PatternEntry {
                    pattern,
                    rows: Vec::new(),
                });
                entries.len() - 1
            });
            entries[idx].rows.push(row);
            row_pattern.push(idx);
        }
        Self {
            entries,
            row_pattern,
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[PatternEntry] {
        &self.entries
    }

    pub fn get(&self, index: usize) -> Result<&PatternEntry> {
        self.entries.get(index).ok_or(Error::UnknownPattern(index))
    }

    pub fn patterns(&self) -> impl Iterator<Item = &Assignment> {
        self.entries.iter().map(|e| &e.pattern)
    }

    /// Index of the pattern carried by row `row`.
    pub fn pattern_of_row(&self, row: usize) -> usize {
        self.row_pattern[row]
    }

    pub fn index_of(&self, pattern: &Assignment) -> Option<usize> {
        self.entries.iter().position(|e| &e.pattern == pattern)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> VariableContext {
        VariableContext::new(["x", "y"]).unwrap()
    }

    #[test]
    fn default_labels_are_one_based() {
        let t = BooleanTable::from_strings(&ctx(), &["01", "11"]).unwrap();
        assert_eq!(t.labels(), ["1", "2"]);
        assert_eq!(t.row_index("2").unwrap(), 1);
        assert_eq!(t.row_index("3").unwrap_err(), Error::UnknownRow("3".into()));
    }

    #[test]
    fn validation() {
        let c = ctx();
        assert!(matches!(
            BooleanTable::new(&c, vec![vec![true]]),
            Err(Error::RaggedRow {
                row: 1,
                expected: 2,
                found: 1
            })
        ));
        assert_eq!(
            BooleanTable::with_labels(
                &c,
                vec![vec![true, false], vec![false, false]],
                Some(vec!["a".into(), "a".into()])
            )
            .unwrap_err(),
            Error::DuplicateLabel("a".into())
        );
        assert!(matches!(
            BooleanTable::with_labels(&c, vec![vec![true, false]], Some(vec![])),
            Err(Error::LabelCount { .. })
        ));
    }

    #[test]
    fn patterns_deduplicate_in_first_occurrence_order() {
        let t = BooleanTable::from_strings(&ctx(), &["11", "01", "11", "11"]).unwrap();
        let p = PatternSet::from_table(&t);
        assert_eq!(p.len(), 2);
        assert_eq!(p.entries()[0].pattern.to_string(), "11");
        assert_eq!(p.entries()[0].rows, vec![0, 2, 3]);
        assert_eq!(p.entries()[1].multiplicity(), 1);
        assert_eq!(p.pattern_of_row(2), 0);
        let total: usize = p.entries().iter().map(PatternEntry::multiplicity).sum();
        assert_eq!(total, t.m());
    }

    #[test]
    fn removing_rows_keeps_labels() {
        let t = BooleanTable::from_strings(&ctx(), &["11", "01", "10"]).unwrap();
        let r = t.without_rows(&HashSet::from([1]));
        assert_eq!(r.labels(), ["1", "3"]);
        assert_eq!(r.m(), 2);
    }
}
