use std::collections::BTreeSet;

use crate::aclus::AclusResult;
use crate::error::{Error, Result};
use crate::interpret::{factor, FactoredForm};
use crate::ring::BooleanPolynomial;

pub const DEFAULT_CLUSTER_CAP: u128 = 2_000_000;

/// Sum of the reductions of the selected patterns.
///
/// Distinct indicator polynomials multiply to zero, so the sum is the
/// reduction of the indicator of the union.
pub fn combine(result: &AclusResult, patterns: &[usize]) -> Result<BooleanPolynomial> {
    if patterns.is_empty() {
        return Err(Error::EmptySelection);
    }
    let unique: BTreeSet<usize> = patterns.iter().copied().collect();
    let mut acc = BooleanPolynomial::zero(result.context());
    for p in unique {
        acc = acc.try_add(result.reduction(p)?)?;
    }
    Ok(acc)
}

/// [`combine`] addressed by row labels; rows sharing a pattern count once.
pub fn combine_rows<S: AsRef<str>>(
    result: &AclusResult,
    labels: &[S],
) -> Result<BooleanPolynomial> {
    let patterns = labels
        .iter()
        .map(|l| result.pattern_of_label(l.as_ref()))
        .collect::<Result<Vec<_>>>()?;
    combine(result, &patterns)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClusterQuery {
    /// Largest subset size; subsets of size 2 up to `k` are visited.
    pub k: usize,
    /// Keep candidates whose factored residual has at most this many terms.
    pub max_terms: usize,
    /// Refuse when more subsets than this would be visited.
    pub cap: u128,
}

impl ClusterQuery {
    pub fn new(k: usize, max_terms: usize) -> Self {
        Self {
            k,
            max_terms,
            cap: DEFAULT_CLUSTER_CAP,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ClusterCandidate {
    /// Pattern indices, ascending.
    pub patterns: Vec<usize>,
    pub polynomial: BooleanPolynomial,
    pub factored: FactoredForm,
    /// Monomials of the residual left after extracting literal factors.
    pub terms: usize,
    /// Distinct variables of the combined polynomial.
    pub variables: usize,
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Enumerates pattern subsets of size `2..=k` whose combined reduction is
/// short, ranked by `(terms, variables)` and then by pattern indices.
pub fn cluster_search(result: &AclusResult, query: ClusterQuery) -> Result<Vec<ClusterCandidate>> {
    if !(2..=3).contains(&query.k) {
        return Err(Error::ClusterSize(query.k));
    }
    if query.max_terms == 0 {
        return Err(Error::MaxTerms);
    }
    let count = result.patterns().len();
    let candidates: u128 = (2..=query.k).map(|s| binomial(count, s)).sum();
    if candidates > query.cap {
        return Err(Error::ClusterGuard {
            candidates,
            cap: query.cap,
        });
    }

    let reductions = result.reductions();
    let mut out = Vec::new();
    let mut consider = |subset: Vec<usize>, poly: BooleanPolynomial| -> Result<()> {
        let factored = factor(&poly)?;
        let terms = factored.residual().len();
        if terms <= query.max_terms {
            out.push(ClusterCandidate {
                variables: poly.support().degree() as usize,
                patterns: subset,
                polynomial: poly,
                factored,
                terms,
            });
        }
        Ok(())
    };
    for i in 0..count {
        for j in i + 1..count {
            let pair = reductions[i].try_add(&reductions[j])?;
            if query.k >= 3 {
                for (l, third) in reductions.iter().enumerate().skip(j + 1) {
                    consider(vec![i, j, l], pair.try_add(third)?)?;
                }
            }
            consider(vec![i, j], pair)?;
        }
    }
    out.sort_by(|a, b| {
        (a.terms, a.variables, &a.patterns).cmp(&(b.terms, b.variables, &b.patterns))
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aclus::{analyze, BooleanTable};
    use crate::ring::VariableContext;

    #[test]
    fn binomials() {
        assert_eq!(binomial(18, 2), 153);
        assert_eq!(binomial(18, 3), 816);
        assert_eq!(binomial(2, 3), 0);
    }

    #[test]
    fn two_pattern_table_has_one_candidate() {
        let ctx = VariableContext::new(["x", "y"]).unwrap();
        let r = analyze(&BooleanTable::from_strings(&ctx, &["10", "01"]).unwrap()).unwrap();
        let found = cluster_search(&r, ClusterQuery::new(2, 4)).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].patterns, vec![0, 1]);
        assert_eq!(found[0].polynomial, &r.reductions()[0] + &r.reductions()[1]);
    }

    #[test]
    fn guards() {
        let ctx = VariableContext::new(["x", "y"]).unwrap();
        let r = analyze(&BooleanTable::from_strings(&ctx, &["10", "01", "11"]).unwrap()).unwrap();
        assert_eq!(
            cluster_search(&r, ClusterQuery::new(4, 1)).unwrap_err(),
            Error::ClusterSize(4)
        );
        assert_eq!(
            cluster_search(&r, ClusterQuery::new(2, 0)).unwrap_err(),
            Error::MaxTerms
        );
        let q = ClusterQuery {
            cap: 2,
            ..ClusterQuery::new(2, 1)
        };
        assert!(matches!(
            cluster_search(&r, q),
            Err(Error::ClusterGuard {
                candidates: 3,
                cap: 2
            })
        ));
        assert_eq!(combine(&r, &[]).unwrap_err(), Error::EmptySelection);
        assert_eq!(combine(&r, &[7]).unwrap_err(), Error::UnknownPattern(7));
        assert_eq!(
            combine_rows(&r, &["9"]).unwrap_err(),
            Error::UnknownRow("9".into())
        );
    }

    #[test]
    fn singleton_combination_is_the_reduction() {
        let ctx = VariableContext::new(["x", "y"]).unwrap();
        let r = analyze(&BooleanTable::from_strings(&ctx, &["10", "01", "11"]).unwrap()).unwrap();
        for i in 0..3 {
            assert_eq!(&combine(&r, &[i]).unwrap(), &r.reductions()[i]);
        }
        assert_eq!(combine(&r, &[1, 1]).unwrap(), r.reductions()[1]);
    }
}
