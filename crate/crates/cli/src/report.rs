//! Machine- and human-readable reports. Every report serializes to JSON
//! through serde and renders to a stable, line-oriented text form.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use aclus_core::aclus::{
    AclusResult, BooleanTable, ClusterCandidate, RemovalCase, Status, WhatIfReport,
};
use aclus_core::interpret::{factor, rule_from_ideal_element, to_logic, Style};
use aclus_core::{variety, BooleanPolynomial, Ideal};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fingerprint {
    pub rows: usize,
    pub columns: usize,
    pub distinct_patterns: usize,
    /// SHA-256 over the header and the parsed 0/1 rows with their labels.
    pub sha256: String,
}

impl Fingerprint {
    pub fn of(table: &BooleanTable, distinct_patterns: usize) -> Self {
        let mut hasher = Sha256::new();
        hasher.update(table.context().names().join(",").as_bytes());
        hasher.update(b"\n");
        for (label, row) in table.labels().iter().zip(table.rows()) {
            hasher.update(format!("{label},{row}\n").as_bytes());
        }
        Self {
            rows: table.m(),
            columns: table.n(),
            distinct_patterns,
            sha256: hex::encode(hasher.finalize()),
        }
    }
}

/// An ideal element with its reading as a rule.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleEntry {
    pub polynomial: String,
    pub rule: String,
}

impl RuleEntry {
    pub fn of(p: &BooleanPolynomial, style: Style) -> Self {
        Self {
            polynomial: p.render(),
            rule: rule_from_ideal_element(p).render_formula(style),
        }
    }

    fn line(&self) -> String {
        format!("{} = 0  [{}]", self.polynomial, self.rule)
    }
}

/// A polynomial read as the set of points where it is 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Peculiarity {
    pub polynomial: String,
    pub factored: String,
    pub logic: String,
}

impl Peculiarity {
    pub fn of(p: &BooleanPolynomial, style: Style) -> Self {
        let factored = match factor(p) {
            Ok(f) => f.render(),
            Err(_) => p.render(),
        };
        Self {
            polynomial: p.render(),
            factored,
            logic: to_logic(p).render(p.context(), style),
        }
    }

    fn line(&self) -> String {
        format!("{}  [{}]", self.polynomial, self.logic)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionEntry {
    pub label: String,
    pub pattern: String,
    #[serde(flatten)]
    pub reduction: Peculiarity,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VarietyCheck {
    pub points: usize,
    /// The brute-force zero set equals the set of distinct row patterns.
    pub matches_patterns: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightsReport {
    pub variables: Vec<String>,
    pub weights: Vec<u64>,
    pub variable_order: Vec<String>,
}

impl WeightsReport {
    pub fn of(result: &AclusResult) -> Self {
        let ctx = result.context();
        Self {
            variables: ctx.names().to_vec(),
            weights: result.weights().as_slice().to_vec(),
            variable_order: result
                .order()
                .variable_order(ctx)
                .into_iter()
                .map(|i| ctx.name(i).to_owned())
                .collect(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (name, w) in self.variables.iter().zip(&self.weights) {
            let _ = writeln!(out, "{name} {w}");
        }
        let _ = writeln!(out, "order: {}", self.variable_order.join(" > "));
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub fingerprint: Fingerprint,
    pub status: String,
    #[serde(flatten)]
    pub weights: WeightsReport,
    pub basis: Vec<RuleEntry>,
    pub reductions: Vec<ReductionEntry>,
    /// Absent when the table has too many columns for the brute-force scan.
    pub variety_check: Option<VarietyCheck>,
    pub warnings: Vec<String>,
}

pub fn status_name(status: Status) -> &'static str {
    match status {
        Status::Consistent => "consistent",
        Status::Inconsistent => "inconsistent",
        Status::NoRules => "no-rules",
    }
}

impl AnalysisReport {
    pub fn build(
        table: &BooleanTable,
        result: &AclusResult,
        style: Style,
        variety_limit: usize,
    ) -> aclus_core::Result<Self> {
        let ctx = result.context();
        let patterns = result.patterns();
        let reductions = table
            .labels()
            .iter()
            .enumerate()
            .map(|(row, label)| {
                let idx = patterns.pattern_of_row(row);
                ReductionEntry {
                    label: label.clone(),
                    pattern: table.rows()[row].to_string(),
                    reduction: Peculiarity::of(&result.reductions()[idx], style),
                }
            })
            .collect();
        let mut warnings: Vec<String> = result.warnings().iter().map(|w| w.to_string()).collect();
        let variety_check = if ctx.len() <= variety_limit {
            let ideal = Ideal::principal(result.generator().clone());
            let points = variety(&ideal, variety_limit)?;
            let found: BTreeSet<String> = points.iter().map(|p| p.to_string()).collect();
            let expected: BTreeSet<String> = patterns.patterns().map(|p| p.to_string()).collect();
            Some(VarietyCheck {
                points: points.len(),
                matches_patterns: found == expected,
            })
        } else {
            warnings.push(format!(
                "variety check skipped: {} variables exceed the limit of {variety_limit}",
                ctx.len()
            ));
            None
        };
        Ok(Self {
            fingerprint: Fingerprint::of(table, patterns.len()),
            status: status_name(result.status()).to_owned(),
            weights: WeightsReport::of(result),
            basis: result
                .basis()
                .elements()
                .iter()
                .map(|g| RuleEntry::of(g, style))
                .collect(),
            reductions,
            variety_check,
            warnings,
        })
    }

    pub fn to_text(&self) -> String {
        let fp = &self.fingerprint;
        let w = &self.weights;
        let mut out = String::new();
        let _ = writeln!(
            out,
            "table: {} rows, {} columns, {} distinct patterns",
            fp.rows, fp.columns, fp.distinct_patterns
        );
        let _ = writeln!(out, "sha256: {}", fp.sha256);
        let _ = writeln!(out, "status: {}", self.status);
        let weights: Vec<String> = w
            .variables
            .iter()
            .zip(&w.weights)
            .map(|(n, x)| format!("{n}={x}"))
            .collect();
        let _ = writeln!(out, "weights: {}", weights.join(" "));
        let _ = writeln!(out, "order: {}", w.variable_order.join(" > "));
        let _ = writeln!(out, "\nbasis ({} elements):", self.basis.len());
        for entry in &self.basis {
            let _ = writeln!(out, "  {}", entry.line());
        }
        let _ = writeln!(out, "\nreductions:");
        let width = self
            .reductions
            .iter()
            .map(|r| r.label.len())
            .max()
            .unwrap_or(0);
        for r in &self.reductions {
            let _ = writeln!(
                out,
                "  {:<width$}  {}  {}",
                r.label,
                r.pattern,
                r.reduction.line()
            );
        }
        match &self.variety_check {
            Some(v) => {
                let verdict = if v.matches_patterns {
                    "matches"
                } else {
                    "DOES NOT match"
                };
                let _ = writeln!(
                    out,
                    "\nvariety: {} points, {verdict} the row patterns",
                    v.points
                );
            }
            None => {
                let _ = writeln!(out, "\nvariety: not checked");
            }
        }
        if !self.warnings.is_empty() {
            let _ = writeln!(out, "\nwarnings:");
            for warning in &self.warnings {
                let _ = writeln!(out, "  {warning}");
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroebnerReport {
    pub order: Vec<String>,
    pub basis: Vec<RuleEntry>,
}

impl GroebnerReport {
    pub fn of(result: &AclusResult, style: Style) -> Self {
        Self {
            order: WeightsReport::of(result).variable_order,
            basis: result
                .basis()
                .elements()
                .iter()
                .map(|g| RuleEntry::of(g, style))
                .collect(),
        }
    }

    pub fn to_text(&self) -> String {
        self.basis.iter().map(|e| e.line() + "\n").collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CombineReport {
    pub rows: Vec<String>,
    #[serde(flatten)]
    pub combined: Peculiarity,
    /// Rule that would hold if all these rows were absent.
    pub rule_if_removed: RuleEntry,
}

impl CombineReport {
    pub fn of(rows: Vec<String>, p: &BooleanPolynomial, style: Style) -> Self {
        Self {
            rows,
            combined: Peculiarity::of(p, style),
            rule_if_removed: RuleEntry::of(p, style),
        }
    }

    pub fn to_text(&self) -> String {
        format!(
            "{}\nfactored: {}\nlogic: {}\nrule if removed: {}\n",
            self.combined.polynomial,
            self.combined.factored,
            self.combined.logic,
            self.rule_if_removed.line()
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClusterEntry {
    /// Row labels grouped by pattern.
    pub rows: Vec<Vec<String>>,
    pub patterns: Vec<String>,
    #[serde(flatten)]
    pub combined: Peculiarity,
    pub terms: usize,
    pub variables: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClustersReport {
    pub k: usize,
    pub max_terms: usize,
    pub candidates: Vec<ClusterEntry>,
}

impl ClustersReport {
    pub fn of(
        result: &AclusResult,
        k: usize,
        max_terms: usize,
        candidates: &[ClusterCandidate],
        style: Style,
    ) -> Self {
        let labels = result.row_labels();
        let entries = result.patterns().entries();
        let candidates = candidates
            .iter()
            .map(|c| ClusterEntry {
                rows: c
                    .patterns
                    .iter()
                    .map(|&p| entries[p].rows.iter().map(|&r| labels[r].clone()).collect())
                    .collect(),
                patterns: c
                    .patterns
                    .iter()
                    .map(|&p| entries[p].pattern.to_string())
                    .collect(),
                combined: Peculiarity {
                    polynomial: c.polynomial.render(),
                    factored: c.factored.render(),
                    logic: to_logic(&c.polynomial).render(c.polynomial.context(), style),
                },
                terms: c.terms,
                variables: c.variables,
            })
            .collect();
        Self {
            k,
            max_terms,
            candidates,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.candidates {
            let groups: Vec<String> = c.rows.iter().map(|g| g.join("=")).collect();
            let _ = writeln!(
                out,
                "rows {}  {}  [{}]",
                groups.join(","),
                c.combined.factored,
                c.combined.logic
            );
        }
        if self.candidates.is_empty() {
            out.push_str("no candidates\n");
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RemovedEntry {
    pub label: String,
    pub pattern: String,
    /// Rows still carrying the pattern after the removal.
    pub remaining: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WhatIfOutput {
    pub removed: Vec<RemovedEntry>,
    pub new_rules: Vec<RuleEntry>,
    pub weights_before: Vec<u64>,
    pub weights_after: Vec<u64>,
    pub weights_changed: bool,
    pub basis_changed: bool,
    pub status_after: String,
}

impl WhatIfOutput {
    pub fn of(report: &WhatIfReport, style: Style) -> Self {
        Self {
            removed: report
                .removed
                .iter()
                .map(|r| RemovedEntry {
                    label: r.label.clone(),
                    pattern: r.pattern.to_string(),
                    remaining: match r.case {
                        RemovalCase::PatternRemoved { .. } => 0,
                        RemovalCase::PatternRemains { remaining } => remaining,
                    },
                })
                .collect(),
            new_rules: report
                .new_rules
                .iter()
                .map(|p| RuleEntry::of(p, style))
                .collect(),
            weights_before: report.weights_before.as_slice().to_vec(),
            weights_after: report.weights_after.as_slice().to_vec(),
            weights_changed: report.weights_changed(),
            basis_changed: report.basis_changed,
            status_after: status_name(report.after.status()).to_owned(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.removed {
            let fate = if r.remaining == 0 {
                "pattern disappears".to_owned()
            } else {
                format!("pattern still carried by {} row(s)", r.remaining)
            };
            let _ = writeln!(out, "remove row {} ({}): {fate}", r.label, r.pattern);
        }
        if self.new_rules.is_empty() {
            let _ = writeln!(out, "no new rules");
        } else {
            let _ = writeln!(out, "new rules:");
            for rule in &self.new_rules {
                let _ = writeln!(out, "  {}", rule.line());
            }
        }
        let fmt = |w: &[u64]| w.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
        if self.weights_changed {
            let _ = writeln!(
                out,
                "weights: {} -> {}",
                fmt(&self.weights_before),
                fmt(&self.weights_after)
            );
        } else {
            let _ = writeln!(out, "weights unchanged: {}", fmt(&self.weights_before));
        }
        let _ = writeln!(
            out,
            "basis changed: {}",
            if self.basis_changed { "yes" } else { "no" }
        );
        let _ = writeln!(out, "status after: {}", self.status_after);
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReduceReport {
    pub input: String,
    pub normal_form: String,
    pub in_ideal: bool,
}

impl ReduceReport {
    pub fn to_text(&self) -> String {
        let verdict = if self.in_ideal {
            "in ideal"
        } else {
            "not in ideal"
        };
        format!("{} ({verdict})\n", self.normal_form)
    }
}
