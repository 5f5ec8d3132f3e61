//! Text form of Boolean polynomials.
//!
//! ```text
//! poly   := term ('+' term)*
//! term   := factor ('*' factor)*
//! factor := '0' | '1' | varname | '(' poly ')'
//! ```
//!
//! A variable name is any run of characters other than whitespace and
//! `+ * ( )`. Whitespace between tokens is ignored.

use crate::error::{Error, Result};
use crate::ring::{BooleanPolynomial, Monomial, VariableContext};

#[derive(Debug, Clone, Copy, PartialEq)]
enum Token<'a> {
    Plus,
    Star,
    Open,
    Close,
    Word(&'a str),
}

fn tokenize(text: &str) -> Vec<(usize, Token<'_>)> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        let tok = match c {
            c if c.is_whitespace() => {
                chars.next();
                continue;
            }
            '+' => Token::Plus,
            '*' => Token::Star,
            '(' => Token::Open,
            ')' => Token::Close,
            _ => {
                let mut end = pos;
                while let Some(&(p, c)) = chars.peek() {
                    if c.is_whitespace() || "+*()".contains(c) {
                        break;
                    }
                    end = p + c.len_utf8();
                    chars.next();
                }
                out.push((pos, Token::Word(&text[pos..end])));
                continue;
            }
        };
        chars.next();
        out.push((pos, tok));
    }
    out
}

struct Parser<'a> {
    ctx: &'a VariableContext,
    tokens: Vec<(usize, Token<'a>)>,
    cursor: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<Token<'a>> {
        self.tokens.get(self.cursor).map(|&(_, t)| t)
    }

    fn position(&self) -> usize {
        self.tokens.get(self.cursor).map_or(self.end, |&(p, _)| p)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            position: self.position(),
            message: message.into(),
        })
    }

    fn poly(&mut self) -> Result<BooleanPolynomial> {
        let mut acc = self.term()?;
        while self.peek() == Some(Token::Plus) {
            self.cursor += 1;
            acc = acc.try_add(&self.term()?)?;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<BooleanPolynomial> {
        let mut acc = self.factor()?;
        while self.peek() == Some(Token::Star) {
            self.cursor += 1;
            acc = acc.try_mul(&self.factor()?)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<BooleanPolynomial> {
        match self.peek() {
            Some(Token::Word("0")) => {
                self.cursor += 1;
                Ok(BooleanPolynomial::zero(self.ctx))
            }
            Some(Token::Word("1")) => {
                self.cursor += 1;
                Ok(BooleanPolynomial::one(self.ctx))
            }
            Some(Token::Word(name)) => match self.ctx.index_of(name) {
                Some(i) => {
                    self.cursor += 1;
                    Ok(BooleanPolynomial::monomial(self.ctx, Monomial::var(i)))
                }
                None => self.error(format!("unknown variable `{name}`")),
            },
            Some(Token::Open) => {
                self.cursor += 1;
                let inner = self.poly()?;
                if self.peek() != Some(Token::Close) {
                    return self.error("expected `)`");
                }
                self.cursor += 1;
                Ok(inner)
            }
            Some(tok) => self.error(format!("unexpected {}", describe(tok))),
            None => self.error("unexpected end of input"),
        }
    }
}

fn describe(tok: Token<'_>) -> String {
    match tok {
        Token::Plus => "`+`".into(),
        Token::Star => "`*`".into(),
        Token::Open => "`(`".into(),
        Token::Close => "`)`".into(),
        Token::Word(w) => format!("`{w}`"),
    }
}

/// Parses `text` into a polynomial over `ctx`.
pub fn parse_polynomial(text: &str, ctx: &VariableContext) -> Result<BooleanPolynomial> {
    let mut parser = Parser {
        ctx,
        tokens: tokenize(text),
        cursor: 0,
        end: text.len(),
    };
    let poly = parser.poly()?;
    if let Some(tok) = parser.peek() {
        return parser.error(format!("unexpected {} after expression", describe(tok)));
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::MonomialOrder;

    fn ctx() -> VariableContext {
        VariableContext::new(["w", "a", "n", "c", "v", "g"]).unwrap()
    }

    #[test]
    fn round_trip_render() {
        let ctx = ctx();
        let p = parse_polynomial("c*g + c + g + 1", &ctx).unwrap();
        assert_eq!(p.len(), 4);
        assert_eq!(p.render(), "c*g + c + g + 1");
        assert_eq!(parse_polynomial(&p.render(), &ctx).unwrap(), p);
    }

    #[test]
    fn canonicalizes() {
        let ctx = ctx();
        assert!(parse_polynomial("w + w", &ctx).unwrap().is_zero());
        assert_eq!(
            parse_polynomial("a*(c+g+1)", &ctx).unwrap(),
            parse_polynomial("a*c + a*g + a", &ctx).unwrap()
        );
        assert_eq!(parse_polynomial("  c*c*c ", &ctx).unwrap().render(), "c");
        assert!(parse_polynomial("0", &ctx).unwrap().is_zero());
    }

    #[test]
    fn renders_in_requested_order() {
        let ctx = ctx();
        let p = parse_polynomial("w + a*g", &ctx).unwrap();
        assert_eq!(p.render(), "w + a*g");
        let wlex = MonomialOrder::weighted_lex(&[81, 72, 72, 72, 72, 80]).unwrap();
        assert_eq!(p.render_with(&wlex), "a*g + w");
    }

    #[test]
    fn errors_carry_positions() {
        let ctx = ctx();
        let err = |s: &str| match parse_polynomial(s, &ctx) {
            Err(Error::Parse { position, message }) => (position, message),
            other => panic!("expected parse error, got {other:?}"),
        };
        assert_eq!(err("c + q").0, 4);
        assert!(err("c + q").1.contains("unknown variable"));
        assert_eq!(err("(c + g").0, 6);
        assert_eq!(err("c + ").0, 4);
        assert_eq!(err("c g").0, 2);
        assert_eq!(err("").0, 0);
        assert_eq!(err("c * ) ").0, 4);
    }
}
