//! Boolean Gröbner bases.
//!
//! Polynomials live in the quotient ring, so the field equations
//! `x^2 + x` are never stored. Their S-pairs are replaced by the
//! obligations `x * f` for every variable `x` of `LM(f)`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::ring::{Assignment, BooleanPolynomial, Monomial, MonomialOrder, VariableContext};

/// Largest number of variables [`variety`] enumerates without an explicit
/// override.
pub const DEFAULT_VARIETY_LIMIT: usize = 24;

/// An ideal given by generators. Zero generators are dropped, so the zero
/// ideal has no generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    ctx: VariableContext,
    generators: Vec<BooleanPolynomial>,
}

impl Ideal {
    pub fn new<I>(ctx: &VariableContext, generators: I) -> Result<Self>
    where
        I: IntoIterator<Item = BooleanPolynomial>,
    {
        let mut gens = Vec::new();
        for g in generators {
            ctx.check_same(g.context())?;
            if !g.is_zero() {
                gens.push(g);
            }
        }
        Ok(Self {
            ctx: ctx.clone(),
            generators: gens,
        })
    }

    pub fn principal(generator: BooleanPolynomial) -> Self {
        let ctx = generator.context().clone();
        let generators = if generator.is_zero() {
            Vec::new()
        } else {
            vec![generator]
        };
        Self { ctx, generators }
    }

    pub fn context(&self) -> &VariableContext {
        &self.ctx
    }

    pub fn generators(&self) -> &[BooleanPolynomial] {
        &self.generators
    }
}

// Working representation: order keys sorted in descending order, so the
// first entry is the leading monomial.
type Keyed = Vec<u128>;

#[inline]
fn mono(key: u128) -> Monomial {
    Monomial::from_bits(key as u64)
}

fn keyed(p: &BooleanPolynomial, order: &MonomialOrder) -> Keyed {
    let mut keys: Vec<u128> = p.monomials().iter().map(|&m| order.key(m)).collect();
    keys.sort_unstable_by(|a, b| b.cmp(a));
    keys
}

fn unkeyed(ctx: &VariableContext, keys: &[u128]) -> BooleanPolynomial {
    let mut terms: Vec<Monomial> = keys.iter().map(|&k| mono(k)).collect();
    terms.sort_unstable();
    BooleanPolynomial::from_sorted_unchecked(ctx, terms)
}

#[inline]
fn toggle(set: &mut BTreeSet<u128>, key: u128) {
    if !set.remove(&key) {
        set.insert(key);
    }
}

/// Full reduction of a sum of monomials by `divisors`, trying divisors in
/// the given order. Returns the remainder in key form.
fn reduce_keyed<I>(terms: I, divisors: &[&[u128]], order: &MonomialOrder) -> Keyed
where
    I: IntoIterator<Item = Monomial>,
{
    let mut work = BTreeSet::new();
    for m in terms {
        toggle(&mut work, order.key(m));
    }
    let mut rem = Vec::new();
    while let Some(&top) = work.last() {
        let t = mono(top);
        match divisors.iter().find(|d| mono(d[0]).divides(t)) {
            Some(d) => {
                let q = t.div(mono(d[0]));
                for &k in d.iter() {
                    toggle(&mut work, order.key(mono(k).mul(q)));
                }
            }
            None => {
                work.pop_last();
                rem.push(top);
            }
        }
    }
    rem
}

fn check_nonzero(p: &BooleanPolynomial) -> Result<()> {
    if p.is_zero() {
        Err(Error::ZeroPolynomial)
    } else {
        Ok(())
    }
}

/// `S(f, g) = (L / LM(f)) f + (L / LM(g)) g` with `L = lcm(LM(f), LM(g))`.
pub fn s_polynomial(
    f: &BooleanPolynomial,
    g: &BooleanPolynomial,
    order: &MonomialOrder,
) -> Result<BooleanPolynomial> {
    f.context().check_same(g.context())?;
    check_nonzero(f)?;
    check_nonzero(g)?;
    let lf = f.leading_monomial(order)?;
    let lg = g.leading_monomial(order)?;
    let l = lf.lcm(lg);
    f.mul_monomial(l.div(lf))
        .try_add(&g.mul_monomial(l.div(lg)))
}

/// The products `x * f` for each variable `x` of `LM(f)`. These stand in
/// for the S-pairs of `f` with the field equations `x^2 + x`.
pub fn variable_s_pairs(f: &BooleanPolynomial, order: &MonomialOrder) -> Vec<BooleanPolynomial> {
    match f.leading_monomial(order) {
        Ok(lm) => lm
            .vars()
            .map(|x| f.mul_monomial(Monomial::var(x)))
            .collect(),
        Err(_) => Vec::new(),
    }
}

/// Remainder of `f` after full division by `divisors`, taken in the given
/// order. Against a Gröbner basis the result does not depend on that order.
pub fn reduce(
    f: &BooleanPolynomial,
    divisors: &[BooleanPolynomial],
    order: &MonomialOrder,
) -> Result<BooleanPolynomial> {
    order.check(f.context())?;
    for d in divisors {
        f.context().check_same(d.context())?;
    }
    let keyed_divs: Vec<Keyed> = divisors
        .iter()
        .filter(|d| !d.is_zero())
        .map(|d| keyed(d, order))
        .collect();
    let refs: Vec<&[u128]> = keyed_divs.iter().map(Vec::as_slice).collect();
    let rem = reduce_keyed(f.monomials().iter().copied(), &refs, order);
    Ok(unkeyed(f.context(), &rem))
}

/// Checks the Boolean Buchberger criterion on `elements` without any pair
/// skipping: every S-polynomial and every variable obligation reduces to 0.
pub fn is_groebner_basis(elements: &[BooleanPolynomial], order: &MonomialOrder) -> Result<bool> {
    let elems: Vec<&BooleanPolynomial> = elements.iter().filter(|e| !e.is_zero()).collect();
    let owned: Vec<BooleanPolynomial> = elems.iter().map(|&e| e.clone()).collect();
    for (i, f) in elems.iter().enumerate() {
        for v in variable_s_pairs(f, order) {
            if !reduce(&v, &owned, order)?.is_zero() {
                return Ok(false);
            }
        }
        for g in &elems[i + 1..] {
            if !reduce(&s_polynomial(f, g, order)?, &owned, order)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A reduced Boolean Gröbner basis, sorted by leading monomial descending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ctx: VariableContext,
    order: MonomialOrder,
    elements: Vec<BooleanPolynomial>,
    keyed: Vec<Keyed>,
}

impl GroebnerBasis {
    pub fn context(&self) -> &VariableContext {
        &self.ctx
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn elements(&self) -> &[BooleanPolynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    /// True for the basis of the zero ideal.
    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// True when the ideal is the whole ring, i.e. its variety is empty.
    pub fn is_whole_ring(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_one()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.keyed.iter().map(|k| mono(k[0])).collect()
    }

    pub fn normal_form(&self, f: &BooleanPolynomial) -> Result<BooleanPolynomial> {
        self.ctx.check_same(f.context())?;
        let refs: Vec<&[u128]> = self.keyed.iter().map(Vec::as_slice).collect();
        let rem = reduce_keyed(f.monomials().iter().copied(), &refs, &self.order);
        Ok(unkeyed(&self.ctx, &rem))
    }

    /// Ideal membership: `f` reduces to zero.
    pub fn contains(&self, f: &BooleanPolynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Pair {
    // kept in this order so that, at equal lcm, field obligations run first
    Field { elem: usize, var: usize },
    Critical { first: usize, second: usize },
}

struct Builder<'a> {
    order: &'a MonomialOrder,
    basis: Vec<Keyed>,
    queue: BTreeSet<(u128, Pair)>,
}

impl Builder<'_> {
    fn reduce<I: IntoIterator<Item = Monomial>>(&self, terms: I) -> Keyed {
        let refs: Vec<&[u128]> = self.basis.iter().map(Vec::as_slice).collect();
        reduce_keyed(terms, &refs, self.order)
    }

    fn insert(&mut self, h: Keyed) {
        let idx = self.basis.len();
        let lm = mono(h[0]);
        for (j, other) in self.basis.iter().enumerate() {
            let lo = mono(other[0]);
            // product criterion
            if lo.is_coprime(lm) {
                continue;
            }
            self.queue.insert((
                self.order.key(lo.lcm(lm)),
                Pair::Critical {
                    first: j,
                    second: idx,
                },
            ));
        }
        for var in lm.vars() {
            self.queue.insert((h[0], Pair::Field { elem: idx, var }));
        }
        self.basis.push(h);
    }

    fn pair_terms(&self, pair: Pair) -> Vec<Monomial> {
        match pair {
            Pair::Field { elem, var } => {
                let x = Monomial::var(var);
                self.basis[elem].iter().map(|&k| mono(k).mul(x)).collect()
            }
            Pair::Critical { first, second } => {
                let (f, g) = (&self.basis[first], &self.basis[second]);
                let l = mono(f[0]).lcm(mono(g[0]));
                let qf = l.div(mono(f[0]));
                let qg = l.div(mono(g[0]));
                f.iter()
                    .map(|&k| mono(k).mul(qf))
                    .chain(g.iter().map(|&k| mono(k).mul(qg)))
                    .collect()
            }
        }
    }

    fn has_unit(&self) -> bool {
        self.basis
            .iter()
            .any(|b| b.len() == 1 && mono(b[0]).is_one())
    }

    /// Drops redundant elements and reduces tails of the rest.
    fn into_reduced(self) -> Vec<Keyed> {
        let lms: Vec<Monomial> = self.basis.iter().map(|b| mono(b[0])).collect();
        let kept: Vec<&Keyed> = self
            .basis
            .iter()
            .enumerate()
            .filter(|&(i, _)| {
                !lms.iter()
                    .enumerate()
                    .any(|(j, &lj)| j != i && lj.divides(lms[i]) && (lj != lms[i] || j < i))
            })
            .map(|(_, b)| b)
            .collect();
        let mut out: Vec<Keyed> = kept
            .iter()
            .enumerate()
            .map(|(i, b)| {
                let others: Vec<&[u128]> = kept
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, o)| o.as_slice())
                    .collect();
                let mut r = vec![b[0]];
                r.extend(reduce_keyed(
                    b[1..].iter().map(|&k| mono(k)),
                    &others,
                    self.order,
                ));
                r
            })
            .collect();
        out.sort_unstable_by(|a, b| b[0].cmp(&a[0]));
        out
    }
}

/// Computes the reduced Boolean Gröbner basis of `ideal` under `order`.
///
/// Pairs are processed smallest lcm first; pairs with coprime leading
/// monomials are skipped.
pub fn buchberger(ideal: &Ideal, order: &MonomialOrder) -> Result<GroebnerBasis> {
    let ctx = ideal.context();
    order.check(ctx)?;
    let mut builder = Builder {
        order,
        basis: Vec::new(),
        queue: BTreeSet::new(),
    };
    for g in ideal.generators() {
        let h = builder.reduce(g.monomials().iter().copied());
        if !h.is_empty() {
            builder.insert(h);
        }
    }
    while !builder.has_unit() {
        let Some((_, pair)) = builder.queue.pop_first() else {
            break;
        };
        let h = builder.reduce(builder.pair_terms(pair));
        if !h.is_empty() {
            builder.insert(h);
        }
    }
    let keyed = if builder.has_unit() {
        vec![vec![order.key(Monomial::ONE)]]
    } else {
        builder.into_reduced()
    };
    let elements = keyed.iter().map(|k| unkeyed(ctx, k)).collect();
    Ok(GroebnerBasis {
        ctx: ctx.clone(),
        order: order.clone(),
        elements,
        keyed,
    })
}

/// All points of `{0,1}^n` on which every generator vanishes, by exhaustive
/// scan. Refuses when `n` exceeds `limit`.
pub fn variety(ideal: &Ideal, limit: usize) -> Result<Vec<Assignment>> {
    let n = ideal.context().len();
    if n > limit || n >= 64 {
        return Err(Error::VarietyGuard { vars: n, limit });
    }
    Ok(Assignment::all(n)
        .filter(|a| {
            let mask = a.support().bits();
            ideal.generators().iter().all(|g| !g.evaluate_mask(mask))
        })
        .collect())
}
