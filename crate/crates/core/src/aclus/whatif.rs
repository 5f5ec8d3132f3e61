use std::collections::{BTreeSet, HashSet};

use crate::aclus::{analyze, AclusResult, BooleanTable, Status, WeightVector};
use crate::error::Result;
use crate::ring::{Assignment, BooleanPolynomial};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RemovalCase {
    /// No remaining row carries the pattern: its reduction becomes a rule.
    PatternRemoved { rule: BooleanPolynomial },
    /// Other rows still carry the pattern; only weights can shift.
    PatternRemains { remaining: usize },
}

#[derive(Clone, Debug)]
pub struct RemovedRow {
    pub label: String,
    pub pattern: Assignment,
    pub case: RemovalCase,
}

#[derive(Clone, Debug)]
pub struct WhatIfReport {
    pub removed: Vec<RemovedRow>,
    /// Rules `r = 0` that would hold after the removal, one per pattern
    /// that disappears from the table.
    pub new_rules: Vec<BooleanPolynomial>,
    pub weights_before: WeightVector,
    pub weights_after: WeightVector,
    pub basis_changed: bool,
    pub before: AclusResult,
    pub after: AclusResult,
}

impl WhatIfReport {
    pub fn weights_changed(&self) -> bool {
        self.weights_before != self.weights_after
    }

    /// True when the removal leaves no rows at all.
    pub fn inconsistent_after(&self) -> bool {
        self.after.status() == Status::Inconsistent
    }
}

/// Analyzes `table` with and without the rows labelled `labels`.
pub fn whatif_remove<S: AsRef<str>>(table: &BooleanTable, labels: &[S]) -> Result<WhatIfReport> {
    let indices: BTreeSet<usize> = labels
        .iter()
        .map(|l| table.row_index(l.as_ref()))
        .collect::<Result<_>>()?;
    let before = analyze(table)?;
    let removed_set: HashSet<usize> = indices.iter().copied().collect();
    let after = analyze(&table.without_rows(&removed_set))?;

    let mut removed = Vec::new();
    let mut new_rules: Vec<BooleanPolynomial> = Vec::new();
    let mut seen_patterns = HashSet::new();
    for &row in &indices {
        let pattern_idx = before.patterns().pattern_of_row(row);
        let entry = before.patterns().get(pattern_idx)?;
        let remaining = entry
            .rows
            .iter()
            .filter(|r| !removed_set.contains(r))
            .count();
        let case = if remaining == 0 {
            let rule = before.reduction(pattern_idx)?.clone();
            if seen_patterns.insert(pattern_idx) {
                new_rules.push(rule.clone());
            }
            RemovalCase::PatternRemoved { rule }
        } else {
            RemovalCase::PatternRemains { remaining }
        };
        removed.push(RemovedRow {
            label: table.labels()[row].clone(),
            pattern: entry.pattern,
            case,
        });
    }

    Ok(WhatIfReport {
        removed,
        new_rules,
        weights_before: before.weights().clone(),
        weights_after: after.weights().clone(),
        basis_changed: before.basis().elements() != after.basis().elements(),
        before,
        after,
    })
}
