//! S-expression form of derivations, using the rule names of the relations.
//!
//! Typing derivations are self-describing: every term they mention can be
//! recovered from their premises, except the payload of `lift-wt-option`,
//! which is written as a quoted surface-syntax term. Step derivations are
//! written without their implicit term arguments, e.g.
//! `(step[] (stepi (step⁺ stepv)))`; reading one back elaborates it against
//! the term it steps from.

use std::fmt;

use crate::error::{Error, Result};
use crate::fragments::{
    lift_array, lift_nat, lift_option, lift_sum, view_array, view_sum, ArrayView,
};
use crate::functor::{AtomValue, Payload, Term};
use crate::semantics::{ArrayStep, ComposedStep, SumStep};
use crate::syntax;
use crate::typing::{ArrayTyping, ComposedTyping, SumTyping};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SExpr {
    Atom(String),
    Str(String),
    List(Vec<SExpr>),
}

impl SExpr {
    fn atom(s: &str) -> Self {
        SExpr::Atom(s.to_string())
    }

    fn app(head: &str, args: Vec<SExpr>) -> Self {
        let mut items = vec![SExpr::atom(head)];
        items.extend(args);
        SExpr::List(items)
    }

    /// Splits `(head args...)` or a bare `head`.
    fn head(&self) -> Result<(&str, &[SExpr])> {
        match self {
            SExpr::Atom(a) => Ok((a, &[])),
            SExpr::List(items) => match items.split_first() {
                Some((SExpr::Atom(h), rest)) => Ok((h, rest)),
                _ => Err(malformed(
                    "expected a constructor name at the head of a list",
                )),
            },
            SExpr::Str(_) => Err(malformed("expected a constructor, found a string")),
        }
    }
}

impl fmt::Display for SExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SExpr::Atom(a) => f.write_str(a),
            SExpr::Str(s) => write!(f, "\"{s}\""),
            SExpr::List(items) => {
                f.write_str("(")?;
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "{item}")?;
                }
                f.write_str(")")
            }
        }
    }
}

fn malformed(msg: impl Into<String>) -> Error {
    Error::MalformedDerivation(msg.into())
}

/// Reads one s-expression. Strings may not contain `"`.
pub fn parse_sexpr(src: &str) -> Result<SExpr> {
    let mut stack: Vec<Vec<SExpr>> = Vec::new();
    let mut done: Option<SExpr> = None;
    let mut chars = src.char_indices().peekable();
    while let Some(&(at, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        if done.is_some() {
            return Err(Error::syntax(at, "trailing input after s-expression"));
        }
        let item = match c {
            '(' => {
                chars.next();
                stack.push(Vec::new());
                continue;
            }
            ')' => {
                chars.next();
                let items = stack
                    .pop()
                    .ok_or_else(|| Error::syntax(at, "unbalanced `)`"))?;
                SExpr::List(items)
            }
            '"' => {
                chars.next();
                let mut s = String::new();
                loop {
                    match chars.next() {
                        Some((_, '"')) => break,
                        Some((_, ch)) => s.push(ch),
                        None => return Err(Error::syntax(at, "unterminated string")),
                    }
                }
                SExpr::Str(s)
            }
            _ => {
                let mut s = String::new();
                while let Some(&(_, ch)) = chars.peek() {
                    if ch.is_whitespace() || ch == '(' || ch == ')' || ch == '"' {
                        break;
                    }
                    s.push(ch);
                    chars.next();
                }
                SExpr::Atom(s)
            }
        };
        match stack.last_mut() {
            Some(top) => top.push(item),
            None => done = Some(item),
        }
    }
    if !stack.is_empty() {
        return Err(Error::syntax(src.len(), "unbalanced `(`"));
    }
    done.ok_or_else(|| Error::syntax(src.len(), "empty input"))
}

fn arity(name: &str, args: &[SExpr], n: usize) -> Result<()> {
    if args.len() == n {
        Ok(())
    } else {
        Err(malformed(format!(
            "`{name}` takes {n} argument(s), got {}",
            args.len()
        )))
    }
}

// Typing derivations.

pub fn typing_to_sexpr(d: &ComposedTyping) -> Result<SExpr> {
    Ok(match d {
        ComposedTyping::Nat(n) => SExpr::app("lift-wt-nat", vec![SExpr::Atom(n.to_string())]),
        ComposedTyping::Option(m) => {
            let t = lift_option()
                .apply(m.clone())
                .map_err(|_| malformed("lift-wt-option payload is not an option"))?;
            SExpr::app("lift-wt-option", vec![SExpr::Str(syntax::render(&t)?)])
        }
        ComposedTyping::Sum(SumTyping::OkSum { left, right, .. }) => SExpr::app(
            "lift-wt-sum",
            vec![SExpr::app(
                "ok-sum",
                vec![typing_to_sexpr(left)?, typing_to_sexpr(right)?],
            )],
        ),
        ComposedTyping::Array(a) => {
            let inner = match a {
                ArrayTyping::OkNil => SExpr::atom("ok-nil"),
                ArrayTyping::OkIns {
                    array,
                    value,
                    index,
                    ..
                } => SExpr::app(
                    "ok-ins",
                    vec![
                        typing_to_sexpr(array)?,
                        typing_to_sexpr(value)?,
                        typing_to_sexpr(index)?,
                    ],
                ),
                ArrayTyping::OkLookup { array, index, .. } => SExpr::app(
                    "ok-lookup",
                    vec![typing_to_sexpr(array)?, typing_to_sexpr(index)?],
                ),
            };
            SExpr::app("lift-wt-array", vec![inner])
        }
    })
}

pub fn render_typing(d: &ComposedTyping) -> Result<String> {
    Ok(typing_to_sexpr(d)?.to_string())
}

fn premise(s: &SExpr) -> Result<(Box<ComposedTyping>, Term)> {
    let d = typing_from_sexpr(s)?;
    let (t, _) = d.subject()?;
    Ok((Box::new(d), t))
}

pub fn typing_from_sexpr(s: &SExpr) -> Result<ComposedTyping> {
    let (name, args) = s.head()?;
    match name {
        "lift-wt-nat" => {
            arity(name, args, 1)?;
            match &args[0] {
                SExpr::Atom(n) => n
                    .parse()
                    .map(ComposedTyping::Nat)
                    .map_err(|_| malformed(format!("`{n}` is not a natural number"))),
                _ => Err(malformed("lift-wt-nat expects a number")),
            }
        }
        "lift-wt-option" => {
            arity(name, args, 1)?;
            let SExpr::Str(src) = &args[0] else {
                return Err(malformed("lift-wt-option expects a quoted term"));
            };
            let t = syntax::parse(src)?;
            let m = lift_option()
                .downcast(&t)
                .ok_or_else(|| malformed("lift-wt-option term is not an option"))?;
            Ok(ComposedTyping::Option(m))
        }
        "lift-wt-sum" => {
            arity(name, args, 1)?;
            let (inner, inner_args) = args[0].head()?;
            if inner != "ok-sum" {
                return Err(unknown_or_misplaced(inner, "ok-sum"));
            }
            arity(inner, inner_args, 2)?;
            let (left, left_term) = premise(&inner_args[0])?;
            let (right, right_term) = premise(&inner_args[1])?;
            Ok(ComposedTyping::Sum(SumTyping::OkSum {
                left,
                right,
                left_term,
                right_term,
            }))
        }
        "lift-wt-array" => {
            arity(name, args, 1)?;
            let (inner, inner_args) = args[0].head()?;
            let a = match inner {
                "ok-nil" => {
                    if matches!(args[0], SExpr::List(_)) {
                        return Err(malformed("ok-nil takes no arguments"));
                    }
                    ArrayTyping::OkNil
                }
                "ok-ins" => {
                    arity(inner, inner_args, 3)?;
                    let (array, array_term) = premise(&inner_args[0])?;
                    let (value, value_term) = premise(&inner_args[1])?;
                    let (index, index_term) = premise(&inner_args[2])?;
                    ArrayTyping::OkIns {
                        array,
                        value,
                        index,
                        array_term,
                        value_term,
                        index_term,
                    }
                }
                "ok-lookup" => {
                    arity(inner, inner_args, 2)?;
                    let (array, array_term) = premise(&inner_args[0])?;
                    let (index, index_term) = premise(&inner_args[1])?;
                    ArrayTyping::OkLookup {
                        array,
                        index,
                        array_term,
                        index_term,
                    }
                }
                other => return Err(unknown_or_misplaced(other, "an array typing rule")),
            };
            Ok(ComposedTyping::Array(a))
        }
        other => Err(unknown_or_misplaced(other, "a lift-wt-* rule")),
    }
}

pub fn parse_typing(src: &str) -> Result<ComposedTyping> {
    typing_from_sexpr(&parse_sexpr(src)?)
}

const KNOWN: &[&str] = &[
    "lift-wt-nat",
    "lift-wt-option",
    "lift-wt-sum",
    "lift-wt-array",
    "ok-sum",
    "ok-nil",
    "ok-ins",
    "ok-lookup",
    "step⁺",
    "step+",
    "step[]",
    "stepl",
    "stepr",
    "stepv",
    "stepi",
    "lookup",
];

fn unknown_or_misplaced(name: &str, expected: &str) -> Error {
    if KNOWN.contains(&name) {
        malformed(format!("expected {expected}, found `{name}`"))
    } else {
        Error::UnknownConstructor(name.to_string())
    }
}

// Step derivations.

pub fn step_to_sexpr(d: &ComposedStep) -> SExpr {
    match d {
        ComposedStep::Sum(s) => {
            let inner = match s {
                SumStep::Left { inner, .. } => SExpr::app("stepl", vec![step_to_sexpr(inner)]),
                SumStep::Right { inner, .. } => SExpr::app("stepr", vec![step_to_sexpr(inner)]),
                SumStep::Value { .. } => SExpr::atom("stepv"),
            };
            SExpr::app("step⁺", vec![inner])
        }
        ComposedStep::Array(s) => {
            let inner = match s {
                ArrayStep::Index { inner, .. } => SExpr::app("stepi", vec![step_to_sexpr(inner)]),
                ArrayStep::Lookup { .. } => SExpr::atom("lookup"),
            };
            SExpr::app("step[]", vec![inner])
        }
    }
}

pub fn render_step(d: &ComposedStep) -> String {
    step_to_sexpr(d).to_string()
}

fn literal(t: &Term) -> Option<u64> {
    match lift_nat().peel(t) {
        Some(Payload::Atom(AtomValue::Nat(n))) => Some(*n),
        _ => None,
    }
}

fn nullary(s: &SExpr, name: &str) -> Result<()> {
    match s {
        SExpr::Atom(_) => Ok(()),
        _ => Err(malformed(format!("`{name}` takes no arguments"))),
    }
}

/// Rebuilds a step derivation from its s-expression, recovering the implicit
/// terms from `source`.
pub fn step_from_sexpr(s: &SExpr, source: &Term) -> Result<ComposedStep> {
    let (name, args) = s.head()?;
    match name {
        "step⁺" | "step+" => {
            arity(name, args, 1)?;
            let (l, r) = lift_sum()
                .peel(source)
                .and_then(view_sum)
                .ok_or_else(|| malformed("step⁺ applied to a term that is not a sum"))?;
            let (rule, rule_args) = args[0].head()?;
            let step = match rule {
                "stepl" => {
                    arity(rule, rule_args, 1)?;
                    let inner = step_from_sexpr(&rule_args[0], l)?;
                    let (_, left_to) = inner.endpoints()?;
                    SumStep::Left {
                        inner: Box::new(inner),
                        left: l.clone(),
                        left_to,
                        right: r.clone(),
                    }
                }
                "stepr" => {
                    arity(rule, rule_args, 1)?;
                    let inner = step_from_sexpr(&rule_args[0], r)?;
                    let (_, right_to) = inner.endpoints()?;
                    SumStep::Right {
                        inner: Box::new(inner),
                        left: l.clone(),
                        right: r.clone(),
                        right_to,
                    }
                }
                "stepv" => {
                    nullary(&args[0], rule)?;
                    match (literal(l), literal(r)) {
                        (Some(n), Some(m)) => SumStep::Value { n, m },
                        _ => return Err(malformed("stepv needs two literal operands")),
                    }
                }
                other => return Err(unknown_or_misplaced(other, "a sum step rule")),
            };
            Ok(ComposedStep::Sum(step))
        }
        "step[]" => {
            arity(name, args, 1)?;
            let Some(ArrayView::Index { array, index }) =
                lift_array().peel(source).and_then(view_array)
            else {
                return Err(malformed("step[] applied to a term that is not a lookup"));
            };
            let (rule, rule_args) = args[0].head()?;
            let step = match rule {
                "stepi" => {
                    arity(rule, rule_args, 1)?;
                    let inner = step_from_sexpr(&rule_args[0], index)?;
                    let (_, index_to) = inner.endpoints()?;
                    ArrayStep::Index {
                        inner: Box::new(inner),
                        array: array.clone(),
                        index: index.clone(),
                        index_to,
                    }
                }
                "lookup" => {
                    nullary(&args[0], rule)?;
                    let a = lift_array()
                        .downcast(array)
                        .ok_or_else(|| malformed("lookup on an operand that is not an array"))?;
                    let n =
                        literal(index).ok_or_else(|| malformed("lookup needs a literal index"))?;
                    ArrayStep::Lookup { array: a, n }
                }
                other => return Err(unknown_or_misplaced(other, "an array step rule")),
            };
            Ok(ComposedStep::Array(step))
        }
        other => Err(unknown_or_misplaced(other, "step⁺ or step[]")),
    }
}

pub fn parse_step(src: &str, source: &Term) -> Result<ComposedStep> {
    step_from_sexpr(&parse_sexpr(src)?, source)
}
