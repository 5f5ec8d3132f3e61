//! Helpers shared by the integration test targets.
#![allow(dead_code)]

use aclus_core::aclus::BooleanTable;
use aclus_core::{Assignment, BooleanPolynomial, Monomial, VariableContext};

/// Context with variables `x0..x{n-1}`.
pub fn ctx(n: usize) -> VariableContext {
    VariableContext::new((0..n).map(|i| format!("x{i}"))).unwrap()
}

pub fn mono(mask: u32, n: usize) -> Monomial {
    Monomial::from_indices((0..n).filter(|i| mask >> i & 1 == 1))
}

pub fn poly(ctx: &VariableContext, masks: &[u32]) -> BooleanPolynomial {
    let n = ctx.len();
    BooleanPolynomial::from_monomials(ctx, masks.iter().map(|&m| mono(m & ((1 << n) - 1), n)))
}

pub fn point(mask: u32, n: usize) -> Assignment {
    Assignment::new(&(0..n).map(|i| mask >> i & 1 == 1).collect::<Vec<_>>()).unwrap()
}

/// Table whose row `k` has bit `i` of `rows[k]` in column `i`.
pub fn table(n: usize, rows: &[u32]) -> BooleanTable {
    let c = ctx(n);
    let rows = rows
        .iter()
        .map(|&r| (0..n).map(|i| r >> i & 1 == 1).collect())
        .collect();
    BooleanTable::new(&c, rows).unwrap()
}

/// Independent reader for the ASCII rendering. Precedence from loosest:
/// `+` (polynomial residuals), `=>`, `<=>`, `|`, `&`, `!`, `*`.
pub struct Reader<'a> {
    s: &'a [u8],
    i: usize,
    n: usize,
}

#[derive(Debug)]
pub enum Ast {
    Const(bool),
    Var(usize),
    Not(Box<Ast>),
    Bin(&'static str, Box<Ast>, Box<Ast>),
}

impl Ast {
    pub fn eval(&self, pt: u32) -> bool {
        match self {
            Ast::Const(b) => *b,
            Ast::Var(i) => pt >> i & 1 == 1,
            Ast::Not(a) => !a.eval(pt),
            Ast::Bin(op, a, b) => {
                let (x, y) = (a.eval(pt), b.eval(pt));
                match *op {
                    "+" => x ^ y,
                    "=>" => !x || y,
                    "<=>" => x == y,
                    "|" => x || y,
                    "&" | "*" => x && y,
                    _ => unreachable!(),
                }
            }
        }
    }
}

impl<'a> Reader<'a> {
    pub fn parse(s: &'a str, n: usize) -> Ast {
        let mut r = Reader {
            s: s.as_bytes(),
            i: 0,
            n,
        };
        let ast = r.sum();
        r.skip();
        assert_eq!(r.i, r.s.len(), "trailing input in {s:?}");
        ast
    }

    fn skip(&mut self) {
        while self.i < self.s.len() && self.s[self.i] == b' ' {
            self.i += 1;
        }
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.skip();
        if self.s[self.i..].starts_with(tok.as_bytes()) {
            self.i += tok.len();
            true
        } else {
            false
        }
    }

    fn sum(&mut self) -> Ast {
        let mut a = self.implies();
        while self.eat("+") {
            a = Ast::Bin("+", Box::new(a), Box::new(self.implies()));
        }
        a
    }

    fn implies(&mut self) -> Ast {
        let a = self.iff();
        if self.eat("=>") {
            return Ast::Bin("=>", Box::new(a), Box::new(self.iff()));
        }
        a
    }

    fn iff(&mut self) -> Ast {
        let a = self.or();
        if self.eat("<=>") {
            return Ast::Bin("<=>", Box::new(a), Box::new(self.or()));
        }
        a
    }

    fn or(&mut self) -> Ast {
        let mut a = self.and();
        while self.eat("|") {
            a = Ast::Bin("|", Box::new(a), Box::new(self.and()));
        }
        a
    }

    fn and(&mut self) -> Ast {
        let mut a = self.unary();
        while self.eat("&") {
            a = Ast::Bin("&", Box::new(a), Box::new(self.unary()));
        }
        a
    }

    fn unary(&mut self) -> Ast {
        if self.eat("!") {
            return Ast::Not(Box::new(self.unary()));
        }
        let mut a = self.atom();
        while self.eat("*") {
            a = Ast::Bin("*", Box::new(a), Box::new(self.atom()));
        }
        a
    }

    fn atom(&mut self) -> Ast {
        if self.eat("(") {
            let a = self.sum();
            assert!(self.eat(")"));
            return a;
        }
        if self.eat("0") {
            return Ast::Const(false);
        }
        if self.eat("1") {
            return Ast::Const(true);
        }
        assert!(self.eat("x"), "unexpected input at {}", self.i);
        let start = self.i;
        while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
            self.i += 1;
        }
        let v: usize = std::str::from_utf8(&self.s[start..self.i])
            .unwrap()
            .parse()
            .unwrap();
        assert!(v < self.n);
        Ast::Var(v)
    }
}
