//! The algebraic clustering pipeline.
//!
//! A table's distinct patterns `p_1..p_k` give indicator polynomials `g_i`
//! that evaluate to 1 only at `p_i`. The generator `g = 1 + sum g_i` vanishes
//! exactly on the observed patterns, so `<g>` is the ideal of every rule the
//! table satisfies. Reducing each `g_i` modulo a Gröbner basis of `<g>`
//! under the weight-induced order leaves what is peculiar about that row.

mod cluster;
mod table;
mod weights;
mod whatif;

pub use cluster::{
    cluster_search, combine, combine_rows, ClusterCandidate, ClusterQuery, DEFAULT_CLUSTER_CAP,
};
pub use table::{BooleanTable, PatternEntry, PatternSet};
pub use weights::{compute_weights, WeightVector};
pub use whatif::{whatif_remove, RemovalCase, RemovedRow, WhatIfReport};

use crate::error::{Error, Result};
use crate::groebner::{buchberger, GroebnerBasis, Ideal};
use crate::ring::{Assignment, BooleanPolynomial, Monomial, MonomialOrder, VariableContext};

/// Indicator polynomial of `row`: the product of `X_i` over its true
/// columns and `1 + X_i` over its false ones, fully expanded.
pub fn row_polynomial(row: &Assignment, ctx: &VariableContext) -> Result<BooleanPolynomial> {
    if row.len() != ctx.len() {
        return Err(Error::AssignmentLength {
            expected: ctx.len(),
            found: row.len(),
        });
    }
    Ok(BooleanPolynomial::from_monomials(
        ctx,
        indicator_terms(row, ctx),
    ))
}

// The expansion is the sum over all supersets of the true set.
fn indicator_terms(row: &Assignment, ctx: &VariableContext) -> Vec<Monomial> {
    let ones = row.support().bits();
    let free = ctx.full_mask() & !ones;
    let mut terms = Vec::with_capacity(1 << free.count_ones());
    let mut sub = free;
    loop {
        terms.push(Monomial::from_bits(ones | sub));
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & free;
    }
    terms
}

/// `1 + sum` of the indicator polynomials of the distinct patterns.
pub fn aclus_generator(patterns: &PatternSet, ctx: &VariableContext) -> Result<BooleanPolynomial> {
    let mut terms = vec![Monomial::ONE];
    for p in patterns.patterns() {
        if p.len() != ctx.len() {
            return Err(Error::AssignmentLength {
                expected: ctx.len(),
                found: p.len(),
            });
        }
        terms.extend(indicator_terms(p, ctx));
    }
    Ok(BooleanPolynomial::from_monomials(ctx, terms))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    /// The table has rows and misses at least one pattern.
    Consistent,
    /// No rows: the ideal is the whole ring and every reduction is 0.
    Inconsistent,
    /// Every pattern occurs: the ideal is zero and no rule can be derived.
    NoRules,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Warning {
    ConstantColumn { column: String, value: bool },
    EmptyTable,
    AllPatternsPresent,
    RepeatedPatterns { rows: usize, patterns: usize },
}

impl std::fmt::Display for Warning {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Warning::ConstantColumn { column, value } => write!(
                f,
                "column `{column}` is constantly {} (weight 0)",
                u8::from(*value)
            ),
            Warning::EmptyTable => write!(f, "inconsistent: the table has no rows, the ideal is the whole ring and all reductions are 0"),
            Warning::AllPatternsPresent => write!(f, "every pattern occurs: the ideal is zero and no rules are derivable"),
            Warning::RepeatedPatterns { rows, patterns } => {
                write!(f, "{rows} rows collapse to {patterns} distinct patterns")
            }
        }
    }
}

/// Output of [`analyze`].
#[derive(Clone, Debug)]
pub struct AclusResult {
    ctx: VariableContext,
    labels: Vec<String>,
    patterns: PatternSet,
    weights: WeightVector,
    generator: BooleanPolynomial,
    basis: GroebnerBasis,
    reductions: Vec<BooleanPolynomial>,
    status: Status,
    warnings: Vec<Warning>,
}

impl AclusResult {
    pub fn context(&self) -> &VariableContext {
        &self.ctx
    }

    pub fn row_labels(&self) -> &[String] {
        &self.labels
    }

    pub fn patterns(&self) -> &PatternSet {
        &self.patterns
    }

    pub fn weights(&self) -> &WeightVector {
        &self.weights
    }

    pub fn order(&self) -> &MonomialOrder {
        self.basis.order()
    }

    pub fn generator(&self) -> &BooleanPolynomial {
        &self.generator
    }

    pub fn basis(&self) -> &GroebnerBasis {
        &self.basis
    }

    /// Reductions indexed like [`PatternSet::entries`].
    pub fn reductions(&self) -> &[BooleanPolynomial] {
        &self.reductions
    }

    pub fn reduction(&self, pattern: usize) -> Result<&BooleanPolynomial> {
        self.reductions
            .get(pattern)
            .ok_or(Error::UnknownPattern(pattern))
    }

    pub fn status(&self) -> Status {
        self.status
    }

    pub fn warnings(&self) -> &[Warning] {
        &self.warnings
    }

    pub fn pattern_of_label(&self, label: &str) -> Result<usize> {
        let row = self
            .labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownRow(label.to_owned()))?;
        Ok(self.patterns.pattern_of_row(row))
    }

    pub fn reduction_of_row(&self, label: &str) -> Result<&BooleanPolynomial> {
        self.reduction(self.pattern_of_label(label)?)
    }

    /// Normal form of an arbitrary polynomial against the table's ideal.
    pub fn reduce(&self, f: &BooleanPolynomial) -> Result<BooleanPolynomial> {
        self.basis.normal_form(f)
    }
}

/// Runs the full pipeline on `table`.
pub fn analyze(table: &BooleanTable) -> Result<AclusResult> {
    let ctx = table.context();
    let patterns = PatternSet::from_table(table);
    let weights = compute_weights(table);
    let order = weights.order()?;
    let generator = aclus_generator(&patterns, ctx)?;
    let basis = buchberger(&Ideal::principal(generator.clone()), &order)?;
    let reductions = patterns
        .patterns()
        .map(|p| basis.normal_form(&row_polynomial(p, ctx)?))
        .collect::<Result<Vec<_>>>()?;

    let mut warnings = Vec::new();
    let status = if table.m() == 0 {
        warnings.push(Warning::EmptyTable);
        Status::Inconsistent
    } else if generator.is_zero() {
        warnings.push(Warning::AllPatternsPresent);
        Status::NoRules
    } else {
        Status::Consistent
    };
    if table.m() > 0 {
        for i in 0..table.n() {
            let ones = table.column_ones(i);
            if ones == 0 || ones == table.m() {
                warnings.push(Warning::ConstantColumn {
                    column: ctx.name(i).to_owned(),
                    value: ones != 0,
                });
            }
        }
    }
    if patterns.len() < table.m() {
        warnings.push(Warning::RepeatedPatterns {
            rows: table.m(),
            patterns: patterns.len(),
        });
    }

    Ok(AclusResult {
        ctx: ctx.clone(),
        labels: table.labels().to_vec(),
        patterns,
        weights,
        generator,
        basis,
        reductions,
        status,
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn indicator_of_all_ones() {
        let ctx = VariableContext::new(["x1", "x2"]).unwrap();
        let row = Assignment::from_str01("11").unwrap();
        assert_eq!(
            row_polynomial(&row, &ctx).unwrap(),
            ctx.parse("x1*x2").unwrap()
        );
    }

    #[test]
    fn indicator_matches_product_form() {
        let ctx = VariableContext::new(["w", "a", "n", "c", "v", "g"]).unwrap();
        let row = Assignment::from_str01("001100").unwrap();
        assert_eq!(
            row_polynomial(&row, &ctx).unwrap(),
            ctx.parse("(w+1)*(a+1)*n*c*(v+1)*(g+1)").unwrap()
        );
    }

    #[test]
    fn indicator_selects_exactly_its_point() {
        for n in 1..=4 {
            let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
            let ctx = VariableContext::new(names).unwrap();
            for p in Assignment::all(n) {
                let f = row_polynomial(&p, &ctx).unwrap();
                for q in Assignment::all(n) {
                    assert_eq!(f.evaluate(&q).unwrap(), p == q);
                }
            }
        }
    }

    #[test]
    fn generator_edge_cases() {
        let ctx = VariableContext::new(["x"]).unwrap();
        let empty = BooleanTable::new(&ctx, vec![]).unwrap();
        assert!(aclus_generator(&PatternSet::from_table(&empty), &ctx)
            .unwrap()
            .is_one());

        let one = BooleanTable::from_strings(&ctx, &["1"]).unwrap();
        let g = aclus_generator(&PatternSet::from_table(&one), &ctx).unwrap();
        assert_eq!(g, ctx.parse("x + 1").unwrap());

        let ctx3 = VariableContext::new(["a", "b", "c"]).unwrap();
        let rows: Vec<String> = Assignment::all(3).map(|a| a.to_string()).collect();
        let refs: Vec<&str> = rows.iter().map(String::as_str).collect();
        let full = BooleanTable::from_strings(&ctx3, &refs).unwrap();
        assert!(aclus_generator(&PatternSet::from_table(&full), &ctx3)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn degenerate_tables() {
        let ctx = VariableContext::new(["a", "b"]).unwrap();
        let empty = analyze(&BooleanTable::new(&ctx, vec![]).unwrap()).unwrap();
        assert_eq!(empty.status(), Status::Inconsistent);
        assert!(empty.basis().is_whole_ring());
        assert!(empty.reductions().is_empty());

        let full =
            analyze(&BooleanTable::from_strings(&ctx, &["00", "01", "10", "11"]).unwrap()).unwrap();
        assert_eq!(full.status(), Status::NoRules);
        assert!(full.basis().is_empty());
        for (entry, r) in full.patterns().entries().iter().zip(full.reductions()) {
            assert_eq!(r, &row_polynomial(&entry.pattern, &ctx).unwrap());
        }
    }

    #[test]
    fn constant_column_warning() {
        let ctx = VariableContext::new(["a", "b"]).unwrap();
        let r = analyze(&BooleanTable::from_strings(&ctx, &["10", "11", "11"]).unwrap()).unwrap();
        assert!(r.warnings().contains(&Warning::ConstantColumn {
            column: "a".into(),
            value: true
        }));
        assert!(r.warnings().contains(&Warning::RepeatedPatterns {
            rows: 3,
            patterns: 2
        }));
        assert_eq!(r.weights().as_slice(), [0, 2]);
    }
}
