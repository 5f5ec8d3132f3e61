//! Reading Boolean polynomials as logical statements.
//!
//! In the Boolean ring `x * y` is `x ∧ y`, `x + 1` is `¬x` and
//! `x + y + x*y` is `x ∨ y`. [`factor`] pulls out variables and complements
//! `(x + 1)`; [`to_logic`] and [`rule_from_ideal_element`] build formulas
//! from the factored form.

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{Assignment, BooleanPolynomial, Monomial, VariableContext};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Literal {
    Pos(usize),
    Neg(usize),
}

impl Literal {
    pub fn var(self) -> usize {
        match self {
            Literal::Pos(i) | Literal::Neg(i) => i,
        }
    }

    pub fn to_polynomial(self, ctx: &VariableContext) -> BooleanPolynomial {
        let x = BooleanPolynomial::monomial(ctx, Monomial::var(self.var()));
        match self {
            Literal::Pos(_) => x,
            Literal::Neg(_) => x.not(),
        }
    }

    fn formula(self) -> Formula {
        match self {
            Literal::Pos(i) => Formula::Var(i),
            Literal::Neg(i) => Formula::Not(Box::new(Formula::Var(i))),
        }
    }
}

/// `literals` times `residual`, with variables listed before complements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredForm {
    literals: Vec<Literal>,
    residual: BooleanPolynomial,
}

impl FactoredForm {
    pub fn literals(&self) -> &[Literal] {
        &self.literals
    }

    /// What remains after extracting literals; `1` when fully factored.
    pub fn residual(&self) -> &BooleanPolynomial {
        &self.residual
    }

    pub fn context(&self) -> &VariableContext {
        self.residual.context()
    }

    /// The factors as polynomials; the residual is omitted when it is `1`
    /// and other factors exist.
    pub fn factors(&self) -> Vec<BooleanPolynomial> {
        let ctx = self.context();
        let mut out: Vec<BooleanPolynomial> =
            self.literals.iter().map(|l| l.to_polynomial(ctx)).collect();
        if !self.residual.is_one() || out.is_empty() {
            out.push(self.residual.clone());
        }
        out
    }

    pub fn expand(&self) -> BooleanPolynomial {
        self.factors()
            .iter()
            .fold(BooleanPolynomial::one(self.context()), |acc, f| &acc * f)
    }

    /// E.g. `a*(w + 1)*(g + 1)`.
    pub fn render(&self) -> String {
        let factors = self.factors();
        let alone = factors.len() == 1;
        factors
            .iter()
            .map(|f| {
                if f.len() > 1 && !alone {
                    format!("({})", f.render())
                } else {
                    f.render()
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl fmt::Display for FactoredForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Greedily extracts variables common to every monomial and complement
/// factors `(x + 1)`, detected by `p|x=1 = 0`, until neither applies.
pub fn factor(p: &BooleanPolynomial) -> Result<FactoredForm> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let ctx = p.context();
    let mut rest = p.clone();
    let mut literals = Vec::new();
    loop {
        let common = rest.common_variables();
        if !common.is_one() {
            literals.extend(common.vars().map(Literal::Pos));
            rest = BooleanPolynomial::from_monomials(
                ctx,
                rest.monomials().iter().map(|m| m.div(common)),
            );
            continue;
        }
        if let Some(x) = rest
            .support()
            .vars()
            .find(|&x| rest.substitute(x, true).is_zero())
        {
            literals.push(Literal::Neg(x));
            rest = rest.substitute(x, false);
            continue;
        }
        break;
    }
    literals.sort();
    Ok(FactoredForm {
        literals,
        residual: rest,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Style {
    #[default]
    Unicode,
    Ascii,
}

impl Style {
    fn and(self) -> &'static str {
        match self {
            Style::Unicode => " ∧ ",
            Style::Ascii => " & ",
        }
    }
    fn or(self) -> &'static str {
        match self {
            Style::Unicode => " ∨ ",
            Style::Ascii => " | ",
        }
    }
    fn not(self) -> &'static str {
        match self {
            Style::Unicode => "¬",
            Style::Ascii => "!",
        }
    }
    fn implies(self) -> &'static str {
        match self {
            Style::Unicode => " ⇒ ",
            Style::Ascii => " => ",
        }
    }
    fn iff(self) -> &'static str {
        match self {
            Style::Unicode => " ⇔ ",
            Style::Ascii => " <=> ",
        }
    }
}

/// A propositional formula over the variables of a context. `Poly` holds a
/// residual with no simpler rendering and is true where it evaluates to 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Formula {
    Const(bool),
    Var(usize),
    Not(Box<Formula>),
    And(Vec<Formula>),
    Or(Vec<Formula>),
    Iff(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Poly(BooleanPolynomial),
}

impl Formula {
    pub fn eval(&self, point: &Assignment) -> bool {
        match self {
            Formula::Const(b) => *b,
            Formula::Var(i) => point.get(*i),
            Formula::Not(f) => !f.eval(point),
            Formula::And(fs) => fs.iter().all(|f| f.eval(point)),
            Formula::Or(fs) => fs.iter().any(|f| f.eval(point)),
            Formula::Iff(a, b) => a.eval(point) == b.eval(point),
            Formula::Implies(a, b) => !a.eval(point) || b.eval(point),
            Formula::Poly(p) => p.evaluate_mask(point.support().bits()),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::Poly(p) if p.len() > 1 => 0,
            Formula::Implies(..) => 1,
            Formula::Iff(..) => 2,
            Formula::Or(_) => 3,
            Formula::And(_) => 4,
            _ => 5,
        }
    }

    pub fn render(&self, ctx: &VariableContext, style: Style) -> String {
        let child = |f: &Formula, min: u8| {
            let s = f.render(ctx, style);
            if f.precedence() < min {
                format!("({s})")
            } else {
                s
            }
        };
        match self {
            Formula::Const(b) => if *b { "1" } else { "0" }.to_owned(),
            Formula::Var(i) => ctx.name(*i).to_owned(),
            Formula::Not(f) => format!("{}{}", style.not(), child(f, 5)),
            Formula::And(fs) => fs
                .iter()
                .map(|f| child(f, 5))
                .collect::<Vec<_>>()
                .join(style.and()),
            Formula::Or(fs) => fs
                .iter()
                .map(|f| child(f, 4))
                .collect::<Vec<_>>()
                .join(style.or()),
            Formula::Iff(a, b) => format!("{}{}{}", child(a, 3), style.iff(), child(b, 3)),
            Formula::Implies(a, b) => {
                format!("{}{}{}", child(a, 2), style.implies(), child(b, 2))
            }
            Formula::Poly(p) => p.render(),
        }
    }

    fn negate(self) -> Formula {
        match self {
            Formula::Not(f) => *f,
            Formula::Const(b) => Formula::Const(!b),
            f => Formula::Not(Box::new(f)),
        }
    }
}

fn conjunction(mut parts: Vec<Formula>) -> Formula {
    match parts.len() {
        0 => Formula::Const(true),
        1 => parts.pop().unwrap(),
        _ => Formula::And(parts),
    }
}

fn disjunction_of_vars(vars: impl Iterator<Item = usize>) -> Formula {
    let mut parts: Vec<Formula> = vars.map(Formula::Var).collect();
    if parts.len() == 1 {
        parts.pop().unwrap()
    } else {
        Formula::Or(parts)
    }
}

/// Formula for a residual that has no variable or complement factors.
fn residual_formula(r: &BooleanPolynomial) -> Formula {
    if r.is_one() {
        return Formula::Const(true);
    }
    if r.is_zero() {
        return Formula::Const(false);
    }
    // r + 1 = (1 + x1)...(1 + xk)  <=>  r = x1 ∨ ... ∨ xk
    if let Ok(neg) = factor(&r.not()) {
        if neg.residual().is_one() && neg.literals().iter().all(|l| matches!(l, Literal::Neg(_))) {
            return disjunction_of_vars(neg.literals().iter().map(|l| l.var()));
        }
    }
    // 1 + x + y  <=>  x ⇔ y
    if r.len() == 3 && r.degree() == Some(1) && r.contains(Monomial::ONE) {
        let vars: Vec<usize> = r.support().vars().collect();
        return Formula::Iff(
            Box::new(Formula::Var(vars[0])),
            Box::new(Formula::Var(vars[1])),
        );
    }
    Formula::Poly(r.clone())
}

fn literal_parts(literals: &[Literal]) -> Vec<Formula> {
    let mut parts: Vec<Formula> = literals
        .iter()
        .filter(|l| matches!(l, Literal::Pos(_)))
        .map(|l| l.formula())
        .collect();
    let negs: Vec<usize> = literals
        .iter()
        .filter(|l| matches!(l, Literal::Neg(_)))
        .map(|l| l.var())
        .collect();
    match negs.len() {
        0 => {}
        1 => parts.push(Literal::Neg(negs[0]).formula()),
        // (1 + x)(1 + y) = ¬(x ∨ y)
        _ => parts.push(disjunction_of_vars(negs.into_iter()).negate()),
    }
    parts
}

/// A formula true exactly where `p` evaluates to 1.
pub fn to_logic(p: &BooleanPolynomial) -> Formula {
    let Ok(f) = factor(p) else {
        return Formula::Const(false);
    };
    let mut parts = literal_parts(f.literals());
    if !f.residual().is_one() {
        parts.push(residual_formula(f.residual()));
    }
    conjunction(parts)
}

/// The rule `f = 0` for an ideal element `f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub polynomial: BooleanPolynomial,
    /// True exactly where `polynomial` evaluates to 0.
    pub formula: Formula,
}

impl Rule {
    pub fn equation(&self) -> String {
        format!("{} = 0", self.polynomial.render())
    }

    pub fn render_formula(&self, style: Style) -> String {
        self.formula.render(self.polynomial.context(), style)
    }

    /// E.g. `c*g + c + g + 1 = 0  [¬c ⇒ g]`.
    pub fn render(&self, style: Style) -> String {
        format!("{}  [{}]", self.equation(), self.render_formula(style))
    }
}

/// Reads `f = 0` as a statement. When `f` is a product of literals the
/// statement is an implication whose consequent is a positive variable
/// where possible; otherwise the literals imply the negated residual.
pub fn rule_from_ideal_element(f: &BooleanPolynomial) -> Rule {
    let formula = match factor(f) {
        Err(_) => Formula::Const(true),
        Ok(form) => {
            let mut literals = form.literals().to_vec();
            let consequent = if form.residual().is_one() {
                // literals is sorted Pos before Neg, so the last one is the
                // highest complement if any exists; none means f = 1
                match literals.pop() {
                    Some(chosen) => chosen.formula().negate(),
                    None => Formula::Const(false),
                }
            } else {
                residual_formula(form.residual()).negate()
            };
            literals.sort_by_key(|l| (l.var(), matches!(l, Literal::Neg(_))));
            let antecedent: Vec<Formula> = literals.iter().map(|l| l.formula()).collect();
            if antecedent.is_empty() {
                consequent
            } else {
                Formula::Implies(Box::new(conjunction(antecedent)), Box::new(consequent))
            }
        }
    };
    Rule {
        polynomial: f.clone(),
        formula,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> VariableContext {
        VariableContext::new(["w", "a", "n", "c", "v", "g"]).unwrap()
    }

    fn p(ctx: &VariableContext, s: &str) -> BooleanPolynomial {
        ctx.parse(s).unwrap()
    }

    #[test]
    fn factors_worked_examples() {
        let ctx = ctx();
        let f = factor(&p(&ctx, "a*c + a*g + a")).unwrap();
        assert_eq!(f.literals(), [Literal::Pos(1)]);
        assert_eq!(f.residual(), &p(&ctx, "c + g + 1"));
        assert_eq!(f.render(), "a*(c + g + 1)");

        let f = factor(&p(&ctx, "w*a*g + w*a + a*g + a")).unwrap();
        assert_eq!(
            f.literals(),
            [Literal::Pos(1), Literal::Neg(0), Literal::Neg(5)]
        );
        assert!(f.residual().is_one());
        assert_eq!(f.render(), "a*(w + 1)*(g + 1)");

        let f = factor(&p(&ctx, "n*v*g + v*g")).unwrap();
        assert_eq!(
            f.literals(),
            [Literal::Pos(4), Literal::Pos(5), Literal::Neg(2)]
        );
        assert_eq!(f.expand(), p(&ctx, "(n+1)*v*g"));

        assert_eq!(
            factor(&BooleanPolynomial::zero(&ctx)).unwrap_err(),
            Error::ZeroPolynomial
        );
        assert_eq!(factor(&BooleanPolynomial::one(&ctx)).unwrap().render(), "1");
        assert_eq!(factor(&p(&ctx, "w + c + 1")).unwrap().render(), "w + c + 1");
    }

    #[test]
    fn logic_renderings() {
        let ctx = ctx();
        let show = |s: &str| to_logic(&p(&ctx, s)).render(&ctx, Style::Unicode);
        assert_eq!(show("c*g + c + g + 1"), "¬(c ∨ g)");
        assert_eq!(show("a*c + a*g + a"), "a ∧ (c ⇔ g)");
        assert_eq!(show("c"), "c");
        assert_eq!(show("c + g + c*g"), "c ∨ g");
        assert_eq!(show("v*g"), "v ∧ g");
        assert_eq!(show("a*w + a*c + a*g"), "a ∧ (w + c + g)");
        assert_eq!(show("0"), "0");
        assert_eq!(show("1"), "1");
        assert_eq!(
            to_logic(&p(&ctx, "c*g + c + g + 1")).render(&ctx, Style::Ascii),
            "!(c | g)"
        );
    }

    #[test]
    fn rule_renderings() {
        let ctx = ctx();
        let rule = |s: &str| rule_from_ideal_element(&p(&ctx, s)).render_formula(Style::Unicode);
        assert_eq!(rule("(g+1)*w*(c+1)"), "w ∧ ¬c ⇒ g");
        assert_eq!(rule("c*v + v"), "v ⇒ c");
        assert_eq!(rule("c*g + c + g + 1"), "¬c ⇒ g");
        assert_eq!(rule("v*g"), "v ⇒ ¬g");
        assert_eq!(rule("c"), "¬c");
        assert_eq!(rule("1"), "0");
        assert_eq!(rule("a*(c + g + 1)"), "a ⇒ ¬(c ⇔ g)");
        assert_eq!(
            rule_from_ideal_element(&p(&ctx, "c*g + c + g + 1")).render(Style::Ascii),
            "c*g + c + g + 1 = 0  [!c => g]"
        );

        let q = VariableContext::new(["e", "h", "I", "a", "c", "p", "H", "d", "x"]).unwrap();
        let f = q.parse("h*I*c*x + h*c*x").unwrap();
        assert_eq!(
            rule_from_ideal_element(&f).render_formula(Style::Unicode),
            "h ∧ c ∧ x ⇒ I"
        );
    }

    #[test]
    fn formulas_agree_with_polynomials() {
        let ctx = ctx();
        for s in [
            "c*g + c + g + 1",
            "a*c + a*g + a",
            "w*a*g + w*a + a*g + a",
            "a*w + a*c + a*g",
            "n*v*g + n*c + n*g + n + c*g + c + g + 1",
        ] {
            let f = p(&ctx, s);
            let logic = to_logic(&f);
            let rule = rule_from_ideal_element(&f);
            for pt in Assignment::all(6) {
                let v = f.evaluate(&pt).unwrap();
                assert_eq!(logic.eval(&pt), v, "{s} at {pt}");
                assert_eq!(rule.formula.eval(&pt), !v, "rule {s} at {pt}");
            }
        }
    }
}
