use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ring::{BooleanPolynomial, Monomial};

/// Monomials are 64-bit masks, one bit per variable.
pub const MAX_VARIABLES: usize = 64;

/// An ordered list of distinct variable names, indexed from 0.
///
/// Cloning is cheap; clones compare equal and polynomials built against
/// either clone may be mixed freely.
#[derive(Clone)]
pub struct VariableContext {
    inner: Arc<Inner>,
}

struct Inner {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl VariableContext {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::NoVariables);
        }
        if names.len() > MAX_VARIABLES {
            return Err(Error::TooManyVariables {
                count: names.len(),
                max: MAX_VARIABLES,
            });
        }
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::EmptyVariableName(i));
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateVariable(name.clone()));
            }
        }
        Ok(Self {
            inner: Arc::new(Inner { names, index }),
        })
    }

    pub fn len(&self) -> usize {
        self.inner.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inner.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.inner.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.inner.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.inner.index.get(name).copied()
    }

    /// The polynomial consisting of the single variable `name`.
    pub fn var(&self, name: &str) -> Result<BooleanPolynomial> {
        let i = self
            .index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_owned()))?;
        Ok(BooleanPolynomial::from_monomials(self, [Monomial::var(i)]))
    }

    pub fn var_at(&self, index: usize) -> Result<BooleanPolynomial> {
        if index >= self.len() {
            return Err(Error::VariableIndex {
                index,
                count: self.len(),
            });
        }
        Ok(BooleanPolynomial::from_monomials(
            self,
            [Monomial::var(index)],
        ))
    }

    /// Parses `text` with this context's variable names.
    pub fn parse(&self, text: &str) -> Result<BooleanPolynomial> {
        crate::ring::parse_polynomial(text, self)
    }

    /// Bits that may be set in a monomial over this context.
    pub(crate) fn full_mask(&self) -> u64 {
        Monomial::from_indices(0..self.len()).bits()
    }

    pub(crate) fn check_same(&self, other: &Self) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }
}

impl PartialEq for VariableContext {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.names == other.inner.names
    }
}

impl Eq for VariableContext {}

impl fmt::Debug for VariableContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("VariableContext")
            .field(&self.inner.names)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_names() {
        assert_eq!(
            VariableContext::new(Vec::<String>::new()).unwrap_err(),
            Error::NoVariables
        );
        assert_eq!(
            VariableContext::new(["a", "b", "a"]).unwrap_err(),
            Error::DuplicateVariable("a".into())
        );
        assert_eq!(
            VariableContext::new(["a", ""]).unwrap_err(),
            Error::EmptyVariableName(1)
        );
        let many: Vec<String> = (0..65).map(|i| format!("x{i}")).collect();
        assert!(matches!(
            VariableContext::new(many),
            Err(Error::TooManyVariables { count: 65, .. })
        ));
    }

    #[test]
    fn equality_is_by_names() {
        let a = VariableContext::new(["x", "y"]).unwrap();
        let b = VariableContext::new(["x", "y"]).unwrap();
        let c = VariableContext::new(["y", "x"]).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert_eq!(a.index_of("y"), Some(1));
        assert_eq!(a.full_mask().count_ones(), 2);
    }
}
