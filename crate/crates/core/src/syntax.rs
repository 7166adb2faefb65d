//! Concrete syntax for the composed language.
//!
//! ```text
//! expr    := sum
//! sum     := postfix ('+' postfix)*
//! postfix := primary ('!' primary | '[' expr ']' ':=' primary)*
//! primary := natural | 'nil' | 'none' | 'some' '(' expr ')' | '(' expr ')'
//! ```
//!
//! Both binary levels associate to the left.

use crate::error::{Error, Result};
use crate::fragments::{assign, enat, index, nil, none, plus, some, view, ExprView};
use crate::functor::Term;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Nat(u64),
    Word(String),
    Plus,
    Bang,
    LBracket,
    RBracket,
    Assign,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Nat(n) => format!("`{n}`"),
            Tok::Word(w) => format!("`{w}`"),
            Tok::Plus => "`+`".into(),
            Tok::Bang => "`!`".into(),
            Tok::LBracket => "`[`".into(),
            Tok::RBracket => "`]`".into(),
            Tok::Assign => "`:=`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = src.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let single = match c {
            b'+' => Some(Tok::Plus),
            b'!' => Some(Tok::Bang),
            b'[' => Some(Tok::LBracket),
            b']' => Some(Tok::RBracket),
            b'(' => Some(Tok::LParen),
            b')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = single {
            toks.push((start, tok));
            i += 1;
        } else if c.is_ascii_whitespace() {
            i += 1;
        } else if c == b':' {
            if bytes.get(i + 1) != Some(&b'=') {
                return Err(Error::syntax(start, "expected `:=`"));
            }
            toks.push((start, Tok::Assign));
            i += 2;
        } else if c.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n = src[start..i]
                .parse()
                .map_err(|_| Error::syntax(start, "numeric literal out of range"))?;
            toks.push((start, Tok::Nat(n)));
        } else if c.is_ascii_alphabetic() {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            toks.push((start, Tok::Word(src[start..i].to_string())));
        } else {
            let ch = src[start..].chars().next().unwrap_or('?');
            return Err(Error::syntax(start, format!("unexpected character `{ch}`")));
        }
    }
    toks.push((src.len(), Tok::End));
    Ok(toks)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let tok = self.toks[self.pos].1.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        tok
    }

    fn expect(&mut self, want: Tok) -> Result<()> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(self.unexpected(&format!("expected {}", want.describe())))
        }
    }

    fn unexpected(&self, what: &str) -> Error {
        Error::syntax(
            self.offset(),
            format!("{what}, found {}", self.peek().describe()),
        )
    }

    fn expr(&mut self) -> Result<Term> {
        let mut acc = self.postfix()?;
        while *self.peek() == Tok::Plus {
            self.bump();
            let rhs = self.postfix()?;
            acc = plus(acc, rhs);
        }
        Ok(acc)
    }

    fn postfix(&mut self) -> Result<Term> {
        let mut acc = self.primary()?;
        loop {
            match self.peek() {
                Tok::Bang => {
                    self.bump();
                    let i = self.primary()?;
                    acc = index(acc, i);
                }
                Tok::LBracket => {
                    self.bump();
                    let i = self.expr()?;
                    self.expect(Tok::RBracket)?;
                    self.expect(Tok::Assign)?;
                    let e = self.primary()?;
                    acc = assign(acc, i, e);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn primary(&mut self) -> Result<Term> {
        match self.peek().clone() {
            Tok::Nat(n) => {
                self.bump();
                Ok(enat(n))
            }
            Tok::Word(w) => match w.as_str() {
                "nil" => {
                    self.bump();
                    Ok(nil())
                }
                "none" => {
                    self.bump();
                    Ok(none())
                }
                "some" => {
                    self.bump();
                    self.expect(Tok::LParen)?;
                    let e = self.expr()?;
                    self.expect(Tok::RParen)?;
                    Ok(some(e))
                }
                _ => Err(self.unexpected("unknown keyword")),
            },
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            _ => Err(self.unexpected("expected an expression")),
        }
    }
}

/// Parses surface syntax into a term built from the smart constructors.
/// Error offsets are byte offsets into `src`.
pub fn parse(src: &str) -> Result<Term> {
    let mut p = Parser {
        toks: lex(src)?,
        pos: 0,
    };
    let t = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.unexpected("expected end of input"));
    }
    Ok(t)
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Level {
    Sum,
    Postfix,
    Primary,
}

fn level(t: &Term) -> Level {
    match view(t) {
        Some(ExprView::Plus(..)) => Level::Sum,
        Some(ExprView::Assign { .. } | ExprView::Index { .. }) => Level::Postfix,
        _ => Level::Primary,
    }
}

fn write_at(out: &mut String, t: &Term, min: Level) -> Result<()> {
    if level(t) < min {
        out.push('(');
        write_term(out, t)?;
        out.push(')');
        Ok(())
    } else {
        write_term(out, t)
    }
}

fn write_term(out: &mut String, t: &Term) -> Result<()> {
    use std::fmt::Write;
    let Some(v) = view(t) else {
        return Err(Error::ShapeMismatch {
            expected: "a term of the composed language".into(),
        });
    };
    match v {
        ExprView::Nat(n) => {
            let _ = write!(out, "{n}");
        }
        ExprView::None => out.push_str("none"),
        ExprView::Nil => out.push_str("nil"),
        ExprView::Some(e) => {
            out.push_str("some(");
            write_term(out, e)?;
            out.push(')');
        }
        ExprView::Plus(a, b) => {
            write_at(out, a, Level::Sum)?;
            out.push_str(" + ");
            write_at(out, b, Level::Postfix)?;
        }
        ExprView::Index { array, index } => {
            write_at(out, array, Level::Postfix)?;
            out.push_str(" ! ");
            write_at(out, index, Level::Primary)?;
        }
        ExprView::Assign {
            array,
            index,
            value,
        } => {
            write_at(out, array, Level::Postfix)?;
            out.push('[');
            write_term(out, index)?;
            out.push_str("] := ");
            write_at(out, value, Level::Primary)?;
        }
    }
    Ok(())
}

/// Renders a term with the fewest parentheses the grammar allows. Fails on
/// terms outside the composed language.
pub fn render(t: &Term) -> Result<String> {
    let mut out = String::new();
    write_term(&mut out, t)?;
    Ok(out)
}
