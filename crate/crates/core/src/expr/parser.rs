//! Lexer, parser and printer for Grassmann's notation.
//!
//! Letters are juxtaposed without separators, so every letter is its own
//! token; a name is one letter plus an optional `_<digits>` subscript
//! (`a`, `a_1`, `g_2`, `K`). Lowercase names are points, uppercase names are
//! lines, and `x` is the variable point. Periods separate items and
//! parentheses group them:
//!
//! ```text
//! expression := items ( "=" "0" )?
//! items      := chain ( "." chain )*
//! chain      := atom+
//! atom       := NAME | "x" | "(" items ")"
//! ```
//!
//! Chains and period-separated items both fold left to right.

use std::fmt;

use crate::error::{Error, Result};
use crate::geom::Kind;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Token {
    LowerIdent(String),
    UpperIdent(String),
    VarX,
    Period,
    LParen,
    RParen,
    EqualsZero,
}

/// Kind of object a name denotes, or `None` if it is not a valid operand
/// name (`x` included, as it is reserved).
pub fn name_kind(name: &str) -> Option<Kind> {
    let mut chars = name.chars();
    let first = chars.next()?;
    if !first.is_ascii_alphabetic() {
        return None;
    }
    let rest = chars.as_str();
    if !rest.is_empty() {
        let digits = rest.strip_prefix('_')?;
        if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
            return None;
        }
    }
    if first == 'x' {
        None
    } else if first.is_ascii_lowercase() {
        Some(Kind::Point)
    } else {
        Some(Kind::Line)
    }
}

pub fn tokenize(text: &str) -> Result<Vec<(usize, Token)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        match c {
            '.' => {
                out.push((start, Token::Period));
                i += 1;
            }
            '(' => {
                out.push((start, Token::LParen));
                i += 1;
            }
            ')' => {
                out.push((start, Token::RParen));
                i += 1;
            }
            '=' => {
                i += 1;
                while i < bytes.len() && (bytes[i] as char).is_ascii_whitespace() {
                    i += 1;
                }
                if i < bytes.len() && bytes[i] == b'0' {
                    out.push((start, Token::EqualsZero));
                    i += 1;
                } else {
                    return Err(Error::Syntax {
                        pos: start,
                        message: "`=` must be followed by `0`".into(),
                    });
                }
            }
            c if c.is_ascii_alphabetic() => {
                i += 1;
                let mut name = c.to_string();
                if i < bytes.len() && bytes[i] == b'_' {
                    let sub_start = i + 1;
                    let mut j = sub_start;
                    while j < bytes.len() && bytes[j].is_ascii_digit() {
                        j += 1;
                    }
                    if j == sub_start {
                        return Err(Error::Syntax {
                            pos: i,
                            message: "subscript must be digits".into(),
                        });
                    }
                    name.push_str(&text[i..j]);
                    i = j;
                }
                let tok = if c == 'x' {
                    if name.len() > 1 {
                        return Err(Error::Syntax {
                            pos: start,
                            message: "`x` is the reserved variable and takes no subscript".into(),
                        });
                    }
                    Token::VarX
                } else if c.is_ascii_lowercase() {
                    Token::LowerIdent(name)
                } else {
                    Token::UpperIdent(name)
                };
                out.push((start, tok));
            }
            _ => {
                let ch = text[i..].chars().next().unwrap();
                return Err(Error::UnknownChar { pos: start, ch });
            }
        }
    }
    Ok(out)
}

/// Expression tree. `Group` holds period-separated items or a parenthesized
/// expression; `Chain` holds juxtaposed atoms. Both fold left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Expr {
    Operand(String),
    Var,
    Chain(Vec<Expr>),
    Group(Vec<Expr>),
}

impl Expr {
    /// Whether the variable `x` occurs anywhere.
    pub fn contains_var(&self) -> bool {
        match self {
            Expr::Var => true,
            Expr::Operand(_) => false,
            Expr::Chain(v) | Expr::Group(v) => v.iter().any(Expr::contains_var),
        }
    }

    /// Number of occurrences of `x`.
    pub fn var_count(&self) -> usize {
        match self {
            Expr::Var => 1,
            Expr::Operand(_) => 0,
            Expr::Chain(v) | Expr::Group(v) => v.iter().map(Expr::var_count).sum(),
        }
    }

    /// Operand names in order of first appearance.
    pub fn names(&self) -> Vec<String> {
        fn walk(e: &Expr, out: &mut Vec<String>) {
            match e {
                Expr::Operand(n) => {
                    if !out.contains(n) {
                        out.push(n.clone());
                    }
                }
                Expr::Var => {}
                Expr::Chain(v) | Expr::Group(v) => v.iter().for_each(|c| walk(c, out)),
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out
    }
}

/// A parsed expression and whether it was written as an equation `... = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expression {
    pub expr: Expr,
    pub equation: bool,
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|(o, _)| *o)
            .unwrap_or(self.len)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.offset(),
            message: message.into(),
        })
    }

    fn items(&mut self) -> Result<Vec<Expr>> {
        let mut parts = vec![self.chain()?];
        while self.peek() == Some(&Token::Period) {
            self.pos += 1;
            parts.push(self.chain()?);
        }
        Ok(parts)
    }

    fn chain(&mut self) -> Result<Expr> {
        let mut atoms = Vec::new();
        loop {
            match self.peek() {
                Some(Token::LowerIdent(n)) | Some(Token::UpperIdent(n)) => {
                    atoms.push(Expr::Operand(n.clone()));
                    self.pos += 1;
                }
                Some(Token::VarX) => {
                    atoms.push(Expr::Var);
                    self.pos += 1;
                }
                Some(Token::LParen) => {
                    self.pos += 1;
                    let inner = self.items()?;
                    if self.peek() != Some(&Token::RParen) {
                        return self.error("expected `)`");
                    }
                    self.pos += 1;
                    atoms.push(Expr::Group(inner));
                }
                _ => break,
            }
        }
        match atoms.len() {
            0 => self.error("expected an operand or `(`"),
            1 => Ok(atoms.pop().unwrap()),
            _ => Ok(Expr::Chain(atoms)),
        }
    }
}

pub fn parse(text: &str) -> Result<Expression> {
    let tokens = tokenize(text)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        len: text.len(),
    };
    let mut parts = p.items()?;
    let mut equation = false;
    if p.peek() == Some(&Token::EqualsZero) {
        equation = true;
        p.pos += 1;
    }
    if p.pos != p.tokens.len() {
        return match p.peek() {
            Some(Token::RParen) => p.error("unmatched `)`"),
            _ => p.error("unexpected token after expression"),
        };
    }
    let expr = if parts.len() == 1 {
        parts.pop().unwrap()
    } else {
        Expr::Group(parts)
    };
    Ok(Expression { expr, equation })
}

fn write_expr(f: &mut fmt::Formatter<'_>, e: &Expr, top: bool) -> fmt::Result {
    match e {
        Expr::Operand(n) => f.write_str(n),
        Expr::Var => f.write_str("x"),
        Expr::Chain(items) => items.iter().try_for_each(|i| write_expr(f, i, false)),
        Expr::Group(parts) => {
            let bare = top && parts.len() > 1;
            if !bare {
                f.write_str("(")?;
            }
            for (k, part) in parts.iter().enumerate() {
                if k > 0 {
                    f.write_str(".")?;
                }
                write_expr(f, part, false)?;
            }
            if !bare {
                f.write_str(")")?;
            }
            Ok(())
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_expr(f, self, true)
    }
}

impl fmt::Display for Expression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_expr(f, &self.expr, true)?;
        if self.equation {
            f.write_str("=0")?;
        }
        Ok(())
    }
}

pub fn pretty_print(e: &Expression) -> String {
    e.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn op(n: &str) -> Expr {
        Expr::Operand(n.into())
    }

    fn chain(names: &[&str]) -> Expr {
        Expr::Chain(
            names
                .iter()
                .map(|n| if *n == "x" { Expr::Var } else { op(n) })
                .collect(),
        )
    }

    #[test]
    fn period_groups() {
        let e = parse("pq.rs").unwrap();
        assert_eq!(
            e.expr,
            Expr::Group(vec![chain(&["p", "q"]), chain(&["r", "s"])])
        );
        assert!(!e.equation);
    }

    #[test]
    fn cubic_expression() {
        let e = parse("(xaAa_1.xbBkCb_1.xc)=0").unwrap();
        assert!(e.equation);
        let Expr::Group(parts) = &e.expr else {
            panic!("expected a group, got {:?}", e.expr)
        };
        assert_eq!(parts.len(), 3);
        assert_eq!(parts[0], chain(&["x", "a", "A", "a_1"]));
        assert_eq!(parts[1], chain(&["x", "b", "B", "k", "C", "b_1"]));
        assert_eq!(parts[2], chain(&["x", "c"]));
        assert_eq!(e.expr.var_count(), 3);
    }

    #[test]
    fn plain_chain() {
        let e = parse("abAcBd").unwrap();
        assert_eq!(e.expr, chain(&["a", "b", "A", "c", "B", "d"]));
    }

    #[test]
    fn explicit_parentheses_survive() {
        let e = parse("((pq)r)s").unwrap();
        let inner = Expr::Group(vec![Expr::Chain(vec![
            Expr::Group(vec![chain(&["p", "q"])]),
            op("r"),
        ])]);
        assert_eq!(e.expr, Expr::Chain(vec![inner, op("s")]));
        assert_eq!(pretty_print(&e), "((pq)r)s");
    }

    #[test]
    fn round_trips() {
        for text in [
            "(xaAa_1.xbBkCb_1.xc)",
            "pq.rs",
            "((pq)r)s",
            "xaAbBcx=0",
            "(abAa_1.abBkCb_1)c.ab",
            "aq.y(bz.(ab.yc)(aq.zc))",
            "(qa_1.xc.xbBkCb_1)=0",
        ] {
            let e = parse(text).unwrap();
            let printed = pretty_print(&e);
            assert_eq!(parse(&printed).unwrap(), e, "{text} -> {printed}");
        }
    }

    #[test]
    fn whitespace_is_ignored() {
        assert_eq!(parse(" p q . r s ").unwrap(), parse("pq.rs").unwrap());
        assert_eq!(parse("xaAbBcx = 0").unwrap(), parse("xaAbBcx=0").unwrap());
    }

    #[test]
    fn syntax_errors() {
        assert!(matches!(
            parse("a?b"),
            Err(Error::UnknownChar { pos: 1, ch: '?' })
        ));
        assert!(matches!(parse("(ab"), Err(Error::Syntax { pos: 3, .. })));
        assert!(matches!(parse("ab)"), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(parse("a..b"), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(parse(""), Err(Error::Syntax { pos: 0, .. })));
        assert!(matches!(parse("a_"), Err(Error::Syntax { .. })));
        assert!(matches!(parse("x_1a"), Err(Error::Syntax { .. })));
        assert!(matches!(parse("ab=1"), Err(Error::Syntax { .. })));
        assert!(matches!(parse("ab=0c"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn names_and_kinds() {
        assert_eq!(name_kind("a_1"), Some(Kind::Point));
        assert_eq!(name_kind("K"), Some(Kind::Line));
        assert_eq!(name_kind("x"), None);
        assert_eq!(name_kind("ab"), None);
        assert_eq!(name_kind("g_"), None);
        let e = parse("abAa_1.abBkCb_1").unwrap();
        assert_eq!(e.expr.names(), ["a", "b", "A", "a_1", "B", "k", "C", "b_1"]);
    }
}
