use std::fmt;
use std::ops::{Add, Mul, Not};

use crate::error::{Error, Result};
use crate::ring::{Assignment, Monomial, MonomialOrder, VariableContext};

/// An element of the Boolean quotient ring over a [`VariableContext`].
///
/// Stored as the set of monomials with coefficient 1, kept sorted in
/// ascending lex order without duplicates. Structural equality is therefore
/// ring equality.
#[derive(Clone, PartialEq, Eq)]
pub struct BooleanPolynomial {
    ctx: VariableContext,
    terms: Vec<Monomial>,
}

/// Sorts and cancels equal monomials in pairs.
pub(crate) fn canonicalize(mut terms: Vec<Monomial>) -> Vec<Monomial> {
    terms.sort_unstable();
    let mut out = Vec::with_capacity(terms.len());
    let mut iter = terms.into_iter().peekable();
    while let Some(t) = iter.next() {
        let mut odd = true;
        while iter.peek() == Some(&t) {
            iter.next();
            odd = !odd;
        }
        if odd {
            out.push(t);
        }
    }
    out
}

/// Symmetric difference of two sorted, duplicate-free monomial lists.
fn xor_sorted(a: &[Monomial], b: &[Monomial]) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

impl BooleanPolynomial {
    pub fn zero(ctx: &VariableContext) -> Self {
        Self {
            ctx: ctx.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ctx: &VariableContext) -> Self {
        Self::monomial(ctx, Monomial::ONE)
    }

    pub fn constant(ctx: &VariableContext, value: bool) -> Self {
        if value {
            Self::one(ctx)
        } else {
            Self::zero(ctx)
        }
    }

    pub fn monomial(ctx: &VariableContext, m: Monomial) -> Self {
        Self::from_monomials(ctx, [m])
    }

    /// Sums the given monomials; repeated monomials cancel in pairs.
    ///
    /// Panics if a monomial mentions a variable outside `ctx`.
    pub fn from_monomials<I: IntoIterator<Item = Monomial>>(
        ctx: &VariableContext,
        monomials: I,
    ) -> Self {
        let full = ctx.full_mask();
        let terms: Vec<Monomial> = monomials.into_iter().collect();
        assert!(
            terms.iter().all(|m| m.bits() & !full == 0),
            "monomial uses a variable outside the context"
        );
        Self {
            ctx: ctx.clone(),
            terms: canonicalize(terms),
        }
    }

    pub(crate) fn from_sorted_unchecked(ctx: &VariableContext, terms: Vec<Monomial>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0] < w[1]));
        Self {
            ctx: ctx.clone(),
            terms,
        }
    }

    pub fn context(&self) -> &VariableContext {
        &self.ctx
    }

    /// Monomials in ascending lex order.
    pub fn monomials(&self) -> &[Monomial] {
        &self.terms
    }

    /// Monomials from largest to smallest under `order`.
    pub fn sorted_monomials(&self, order: &MonomialOrder) -> Vec<Monomial> {
        let mut terms = self.terms.clone();
        terms.sort_by_cached_key(|&m| std::cmp::Reverse(order.key(m)));
        terms
    }

    /// Number of monomials; see [`is_zero`](Self::is_zero) for emptiness.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].is_one()
    }

    pub fn contains(&self, m: Monomial) -> bool {
        self.terms.binary_search(&m).is_ok()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|m| m.degree()).max()
    }

    /// Union of the variables of all monomials.
    pub fn support(&self) -> Monomial {
        self.terms.iter().fold(Monomial::ONE, |acc, &m| acc.mul(m))
    }

    /// Variables present in every monomial (`1` for the zero polynomial).
    pub fn common_variables(&self) -> Monomial {
        match self.terms.split_first() {
            None => Monomial::ONE,
            Some((first, rest)) => rest.iter().fold(*first, |acc, &m| acc.gcd(m)),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.ctx.check_same(&other.ctx)?;
        Ok(Self {
            ctx: self.ctx.clone(),
            terms: xor_sorted(&self.terms, &other.terms),
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.ctx.check_same(&other.ctx)?;
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for &a in &self.terms {
            for &b in &other.terms {
                terms.push(a.mul(b));
            }
        }
        Ok(Self {
            ctx: self.ctx.clone(),
            terms: canonicalize(terms),
        })
    }

    pub fn mul_monomial(&self, m: Monomial) -> Self {
        assert!(m.bits() & !self.ctx.full_mask() == 0);
        Self {
            ctx: self.ctx.clone(),
            terms: canonicalize(self.terms.iter().map(|&t| t.mul(m)).collect()),
        }
    }

    /// Logical negation, `p + 1`.
    pub fn not(&self) -> Self {
        Self {
            ctx: self.ctx.clone(),
            terms: xor_sorted(&self.terms, &[Monomial::ONE]),
        }
    }

    /// Logical disjunction, `p + q + p*q`.
    pub fn or(&self, other: &Self) -> Result<Self> {
        let pq = self.try_mul(other)?;
        self.try_add(other)?.try_add(&pq)
    }

    /// Logical conjunction, `p * q`.
    pub fn and(&self, other: &Self) -> Result<Self> {
        self.try_mul(other)
    }

    pub fn evaluate(&self, point: &Assignment) -> Result<bool> {
        if point.len() != self.ctx.len() {
            return Err(Error::AssignmentLength {
                expected: self.ctx.len(),
                found: point.len(),
            });
        }
        Ok(self.evaluate_mask(point.support().bits()))
    }

    #[inline]
    pub(crate) fn evaluate_mask(&self, mask: u64) -> bool {
        self.terms.iter().filter(|m| m.bits() & !mask == 0).count() % 2 == 1
    }

    /// Substitutes a constant for variable `index`.
    pub fn substitute(&self, index: usize, value: bool) -> Self {
        let var = Monomial::var(index);
        let terms = self
            .terms
            .iter()
            .filter_map(|&m| {
                if !m.contains(index) {
                    Some(m)
                } else if value {
                    Some(m.div(var))
                } else {
                    None
                }
            })
            .collect();
        Self {
            ctx: self.ctx.clone(),
            terms: canonicalize(terms),
        }
    }

    /// The largest monomial under `order`.
    pub fn leading_monomial(&self, order: &MonomialOrder) -> Result<Monomial> {
        self.terms
            .iter()
            .copied()
            .max_by_key(|&m| order.key(m))
            .ok_or(Error::ZeroPolynomial)
    }

    /// Renders with monomials in descending lex order.
    pub fn render(&self) -> String {
        self.render_with(&MonomialOrder::Lex)
    }

    /// Renders with monomials in descending `order`, e.g. `c*g + c + g + 1`.
    pub fn render_with(&self, order: &MonomialOrder) -> String {
        if self.is_zero() {
            return "0".to_owned();
        }
        self.sorted_monomials(order)
            .into_iter()
            .map(|m| m.render(&self.ctx))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Display for BooleanPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for BooleanPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BooleanPolynomial({})", self.render())
    }
}

// Operator forms panic on context mismatch; use the `try_*` methods to
// handle it as an error.
impl Add for &BooleanPolynomial {
    type Output = BooleanPolynomial;

    fn add(self, rhs: Self) -> BooleanPolynomial {
        self.try_add(rhs).expect("polynomial addition")
    }
}

impl Mul for &BooleanPolynomial {
    type Output = BooleanPolynomial;

    fn mul(self, rhs: Self) -> BooleanPolynomial {
        self.try_mul(rhs).expect("polynomial multiplication")
    }
}

impl Not for &BooleanPolynomial {
    type Output = BooleanPolynomial;

    fn not(self) -> BooleanPolynomial {
        BooleanPolynomial::not(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn beech() -> VariableContext {
        VariableContext::new(["w", "a", "n", "c", "v", "g"]).unwrap()
    }

    fn p(ctx: &VariableContext, s: &str) -> BooleanPolynomial {
        ctx.parse(s).unwrap()
    }

    #[test]
    fn addition_cancels() {
        let ctx = beech();
        assert_eq!(&p(&ctx, "c*g + c") + &p(&ctx, "c"), p(&ctx, "c*g"));
        let q = p(&ctx, "w*a + n + 1");
        assert!((&q + &q).is_zero());
        assert_eq!(&p(&ctx, "n*v*g + v*g") + &p(&ctx, "n*v*g"), p(&ctx, "v*g"));
    }

    #[test]
    fn multiplication_is_idempotent() {
        let ctx = beech();
        let x = ctx.var("c").unwrap();
        assert_eq!(&x * &x, x);
        assert!((&x * &x.not()).is_zero());
        assert_eq!(
            &p(&ctx, "a") * &p(&ctx, "c + g + 1"),
            p(&ctx, "a*c + a*g + a")
        );
    }

    #[test]
    fn logic_operations() {
        let ctx = beech();
        let zero = BooleanPolynomial::zero(&ctx);
        assert!(zero.not().is_one());
        let c = ctx.var("c").unwrap();
        let g = ctx.var("g").unwrap();
        assert_eq!(c.or(&g).unwrap(), p(&ctx, "c + g + c*g"));
        assert_eq!(c.or(&g).unwrap().not(), p(&ctx, "c*g + c + g + 1"));
        assert_eq!(c.and(&g).unwrap(), p(&ctx, "c*g"));
    }

    #[test]
    fn context_mismatch_is_rejected() {
        let a = VariableContext::new(["x"]).unwrap();
        let b = VariableContext::new(["y"]).unwrap();
        let x = a.var("x").unwrap();
        let y = b.var("y").unwrap();
        assert_eq!(x.try_add(&y).unwrap_err(), Error::ContextMismatch);
        assert_eq!(x.try_mul(&y).unwrap_err(), Error::ContextMismatch);
        assert_eq!(x.or(&y).unwrap_err(), Error::ContextMismatch);
    }

    #[test]
    fn evaluation() {
        let ctx = beech();
        let one = BooleanPolynomial::one(&ctx);
        for a in Assignment::all(6) {
            assert!(one.evaluate(&a).unwrap());
        }
        let row5 = p(&ctx, "(w+1)*(a+1)*n*c*(v+1)*(g+1)");
        let hits: Vec<String> = Assignment::all(6)
            .filter(|a| row5.evaluate(a).unwrap())
            .map(|a| a.to_string())
            .collect();
        assert_eq!(hits, ["001100"]);
        let short = Assignment::from_str01("0011").unwrap();
        assert_eq!(
            row5.evaluate(&short).unwrap_err(),
            Error::AssignmentLength {
                expected: 6,
                found: 4
            }
        );
    }

    #[test]
    fn leading_monomials() {
        let ctx = beech();
        let f = p(&ctx, "c*g + c + g + 1");
        for order in [
            MonomialOrder::Lex,
            MonomialOrder::weighted_lex(&[81, 72, 72, 72, 72, 80]).unwrap(),
            MonomialOrder::weighted_lex(&[0, 0, 0, 1, 9, 0]).unwrap(),
        ] {
            assert_eq!(
                f.leading_monomial(&order).unwrap(),
                Monomial::from_indices([3, 5])
            );
        }
        let ctx4 = VariableContext::new(["x1", "x2", "x3", "x4"]).unwrap();
        let h = p(&ctx4, "x1 + x2*x3");
        assert_eq!(
            h.leading_monomial(&MonomialOrder::Lex).unwrap(),
            Monomial::var(0)
        );
        let wlex = MonomialOrder::weighted_lex(&[4, 3, 2, 1]).unwrap();
        assert_eq!(
            h.leading_monomial(&wlex).unwrap(),
            Monomial::from_indices([1, 2])
        );
        assert_eq!(
            BooleanPolynomial::zero(&ctx)
                .leading_monomial(&wlex)
                .unwrap_err(),
            Error::ZeroPolynomial
        );
    }

    #[test]
    fn substitution() {
        let ctx = beech();
        let f = p(&ctx, "w*a*g + w*a + a*g + a");
        assert!(f.substitute(0, true).substitute(5, true).is_zero());
        assert_eq!(f.substitute(0, false), p(&ctx, "a*g + a"));
        assert_eq!(f.common_variables(), Monomial::var(1));
    }
}
