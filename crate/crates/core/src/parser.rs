//! Concrete syntax: lexing, parsing, and printing.
//!
//! The grammar, loosest binding first:
//!
//! ```text
//! sequent  := [formula {"," formula}] "|-" formula
//! formula  := conjunct {"|" conjunct}
//! conjunct := unary {"&" unary}
//! unary    := "~" unary | quantifier | primary
//! quantifier := ("forall" | "exists") variable "." formula
//! primary  := letter | Predicate "(" term {"," term} ")" | "(" formula ")"
//! ```
//!
//! `&` and `|` associate to the left and `&` binds tighter. A quantifier
//! takes the longest formula it can to its right, so
//! `forall x. P(x) & q` binds the conjunction and
//! `(forall x. P(x)) & q` does not.
//!
//! Unicode aliases are accepted everywhere: `¬` for `~`, `∧` for `&`,
//! `∨` for `|`, `∀` for `forall`, `∃` for `exists`, `⊢` for `|-`.
//!
//! Identifier conventions: predicate symbols start with an uppercase
//! letter and take parenthesized arguments; a lowercase identifier in
//! formula position is a propositional letter. A lowercase identifier in
//! term position is a variable if it is bound by an enclosing quantifier
//! or matches `x`/`y`/`z` followed by digits; otherwise it is a constant.
//! Quantifiers may bind any lowercase name.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::formula::{Formula, Sequent, Signature, Term};

/// A byte range in the input, for error reporting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SourceSpan {
    pub start: usize,
    pub end: usize,
}

impl fmt::Display for SourceSpan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.end <= self.start + 1 {
            write!(f, "{}", self.start)
        } else {
            write!(f, "{}..{}", self.start, self.end)
        }
    }
}

/// A syntax error, with the byte span where it was detected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at byte {span}: {message}")]
pub struct ParseError {
    pub message: String,
    pub span: SourceSpan,
}

impl ParseError {
    fn new(message: impl Into<String>, span: SourceSpan) -> ParseError {
        ParseError {
            message: message.into(),
            span,
        }
    }

    /// Renders the error with a caret line pointing into `input`.
    pub fn render(&self, input: &str) -> String {
        let mut out = String::new();
        out.push_str(input.trim_end());
        out.push('\n');
        let col = input
            .get(..self.span.start)
            .map(|prefix| prefix.chars().count())
            .unwrap_or(self.span.start);
        out.push_str(&" ".repeat(col));
        out.push_str("^ ");
        out.push_str(&self.message);
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum TokenKind {
    LParen,
    RParen,
    Comma,
    Dot,
    Not,
    And,
    Or,
    Turnstile,
    Forall,
    Exists,
    Ident,
}

#[derive(Debug, Clone)]
struct Token {
    kind: TokenKind,
    text: String,
    span: SourceSpan,
}

fn lex(input: &str) -> Result<Vec<Token>, ParseError> {
    let mut tokens = Vec::new();
    let mut chars = input.char_indices().peekable();
    while let Some(&(start, c)) = chars.peek() {
        let single = |kind: TokenKind| Token {
            kind,
            text: c.to_string(),
            span: SourceSpan {
                start,
                end: start + c.len_utf8(),
            },
        };
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '(' => {
                tokens.push(single(TokenKind::LParen));
                chars.next();
            }
            ')' => {
                tokens.push(single(TokenKind::RParen));
                chars.next();
            }
            ',' => {
                tokens.push(single(TokenKind::Comma));
                chars.next();
            }
            '.' => {
                tokens.push(single(TokenKind::Dot));
                chars.next();
            }
            '~' | '¬' => {
                tokens.push(single(TokenKind::Not));
                chars.next();
            }
            '&' | '∧' => {
                tokens.push(single(TokenKind::And));
                chars.next();
            }
            '∨' => {
                tokens.push(single(TokenKind::Or));
                chars.next();
            }
            '∀' => {
                tokens.push(single(TokenKind::Forall));
                chars.next();
            }
            '∃' => {
                tokens.push(single(TokenKind::Exists));
                chars.next();
            }
            '⊢' => {
                tokens.push(single(TokenKind::Turnstile));
                chars.next();
            }
            '|' => {
                chars.next();
                if matches!(chars.peek(), Some(&(_, '-'))) {
                    chars.next();
                    tokens.push(Token {
                        kind: TokenKind::Turnstile,
                        text: "|-".to_string(),
                        span: SourceSpan {
                            start,
                            end: start + 2,
                        },
                    });
                } else {
                    tokens.push(Token {
                        kind: TokenKind::Or,
                        text: "|".to_string(),
                        span: SourceSpan {
                            start,
                            end: start + 1,
                        },
                    });
                }
            }
            c if c.is_ascii_alphabetic() => {
                let mut end = start;
                let mut text = String::new();
                while let Some(&(i, d)) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        text.push(d);
                        end = i + d.len_utf8();
                        chars.next();
                    } else {
                        break;
                    }
                }
                let kind = match text.as_str() {
                    "forall" => TokenKind::Forall,
                    "exists" => TokenKind::Exists,
                    _ => TokenKind::Ident,
                };
                tokens.push(Token {
                    kind,
                    text,
                    span: SourceSpan { start, end },
                });
            }
            other => {
                return Err(ParseError::new(
                    format!("unexpected character {other:?}"),
                    SourceSpan {
                        start,
                        end: start + other.len_utf8(),
                    },
                ));
            }
        }
    }
    Ok(tokens)
}

fn variable_like(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some('x' | 'y' | 'z')) && chars.all(|c| c.is_ascii_digit())
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    input_len: usize,
    declared: Option<&'a Signature>,
    /// Arities seen so far, for consistency checks without a declared
    /// signature.
    seen: Signature,
    /// Stack of quantifier-bound variable names.
    scope: Vec<String>,
}

impl<'a> Parser<'a> {
    fn new(tokens: Vec<Token>, input_len: usize, declared: Option<&'a Signature>) -> Parser<'a> {
        Parser {
            tokens,
            pos: usize::MAX, // replaced below; keeps fields in one place
            input_len,
            declared,
            seen: Signature::default(),
            scope: Vec::new(),
        }
        .started()
    }

    fn started(mut self) -> Parser<'a> {
        self.pos = 0;
        self
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn end_span(&self) -> SourceSpan {
        SourceSpan {
            start: self.input_len,
            end: self.input_len,
        }
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, kind: TokenKind) -> bool {
        if self.peek().map(|t| t.kind) == Some(kind) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, kind: TokenKind, what: &str) -> Result<Token, ParseError> {
        match self.peek() {
            Some(t) if t.kind == kind => Ok(self.bump().expect("just peeked")),
            Some(t) => Err(ParseError::new(
                format!("expected {what}, found `{}`", t.text),
                t.span,
            )),
            None => Err(ParseError::new(
                format!("expected {what}, found end of input"),
                self.end_span(),
            )),
        }
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        let mut f = self.conjunct()?;
        while self.eat(TokenKind::Or) {
            let rhs = self.conjunct()?;
            f = Formula::or(f, rhs);
        }
        Ok(f)
    }

    fn conjunct(&mut self) -> Result<Formula, ParseError> {
        let mut f = self.unary()?;
        while self.eat(TokenKind::And) {
            let rhs = self.unary()?;
            f = Formula::and(f, rhs);
        }
        Ok(f)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek().map(|t| t.kind) {
            Some(TokenKind::Not) => {
                self.bump();
                Ok(Formula::not(self.unary()?))
            }
            Some(TokenKind::Forall) => self.quantifier(true),
            Some(TokenKind::Exists) => self.quantifier(false),
            _ => self.primary(),
        }
    }

    fn quantifier(&mut self, universal: bool) -> Result<Formula, ParseError> {
        self.bump();
        let var = self.expect(TokenKind::Ident, "a variable name")?;
        if !var
            .text
            .chars()
            .next()
            .is_some_and(|c| c.is_ascii_lowercase())
        {
            return Err(ParseError::new(
                format!(
                    "quantified variable `{}` must start with a lowercase letter",
                    var.text
                ),
                var.span,
            ));
        }
        self.expect(TokenKind::Dot, "`.` after the quantified variable")?;
        self.scope.push(var.text.clone());
        let body = self.formula();
        self.scope.pop();
        let body = body?;
        Ok(if universal {
            Formula::forall(var.text, body)
        } else {
            Formula::exists(var.text, body)
        })
    }

    fn primary(&mut self) -> Result<Formula, ParseError> {
        match self.peek().map(|t| t.kind) {
            Some(TokenKind::LParen) => {
                self.bump();
                let f = self.formula()?;
                self.expect(TokenKind::RParen, "`)`")?;
                Ok(f)
            }
            Some(TokenKind::Ident) => {
                let name = self.bump().expect("just peeked");
                let uppercase = name
                    .text
                    .chars()
                    .next()
                    .is_some_and(|c| c.is_ascii_uppercase());
                if uppercase {
                    self.expect(
                        TokenKind::LParen,
                        &format!("`(` after predicate `{}`", name.text),
                    )?;
                    let mut args = vec![self.term()?];
                    while self.eat(TokenKind::Comma) {
                        args.push(self.term()?);
                    }
                    self.expect(TokenKind::RParen, "`)` after predicate arguments")?;
                    self.check_predicate(&name, args.len())?;
                    Ok(Formula::Atom(name.text, args))
                } else {
                    if self.peek().map(|t| t.kind) == Some(TokenKind::LParen) {
                        return Err(ParseError::new(
                            format!(
                                "`{}` looks like a predicate application; predicate names start with an uppercase letter",
                                name.text
                            ),
                            name.span,
                        ));
                    }
                    if self.scope.contains(&name.text) {
                        return Err(ParseError::new(
                            format!("bound variable `{}` cannot be used as a formula", name.text),
                            name.span,
                        ));
                    }
                    self.check_predicate(&name, 0)?;
                    Ok(Formula::letter(name.text))
                }
            }
            Some(_) => {
                let tok = self.peek().expect("just peeked");
                Err(ParseError::new(
                    format!("expected a formula, found `{}`", tok.text),
                    tok.span,
                ))
            }
            None => Err(ParseError::new(
                "expected a formula, found end of input",
                self.end_span(),
            )),
        }
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let tok = self.expect(TokenKind::Ident, "a term")?;
        let first = tok.text.chars().next().expect("idents are nonempty");
        if !first.is_ascii_lowercase() {
            return Err(ParseError::new(
                format!("term `{}` must start with a lowercase letter", tok.text),
                tok.span,
            ));
        }
        if self.scope.contains(&tok.text) || variable_like(&tok.text) {
            return Ok(Term::Var(tok.text));
        }
        if let Some(sig) = self.declared {
            if !sig.constants.contains(&tok.text) {
                return Err(ParseError::new(
                    format!("unknown constant `{}`", tok.text),
                    tok.span,
                ));
            }
        }
        Ok(Term::Const(tok.text))
    }

    fn check_predicate(&mut self, name: &Token, arity: usize) -> Result<(), ParseError> {
        if let Some(sig) = self.declared {
            match sig.predicates.get(&name.text) {
                None => {
                    return Err(ParseError::new(
                        if arity == 0 {
                            format!("unknown proposition letter `{}`", name.text)
                        } else {
                            format!("unknown predicate `{}`", name.text)
                        },
                        name.span,
                    ))
                }
                Some(&expected) if expected != arity => {
                    return Err(ParseError::new(
                        format!(
                            "predicate `{}` has arity {expected}, applied to {arity} arguments",
                            name.text
                        ),
                        name.span,
                    ))
                }
                Some(_) => {}
            }
        }
        self.seen
            .add_predicate(&name.text, arity)
            .map_err(|e| ParseError::new(e.to_string(), name.span))
    }

    fn expect_end(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(t) => Err(ParseError::new(
                format!("unexpected `{}` after the end of the formula", t.text),
                t.span,
            )),
        }
    }
}

/// Parses a formula. With a signature, every predicate and constant must
/// be declared in it; without one, the only vocabulary check is that each
/// predicate keeps a consistent arity.
pub fn parse_formula(input: &str, sig: Option<&Signature>) -> Result<Formula, ParseError> {
    let tokens = lex(input)?;
    let mut p = Parser::new(tokens, input.len(), sig);
    let f = p.formula()?;
    p.expect_end()?;
    Ok(f)
}

/// Parses a sequent: comma-separated premises, a turnstile (`|-` or `⊢`),
/// and a conclusion. The premise list may be empty.
pub fn parse_sequent(input: &str, sig: Option<&Signature>) -> Result<Sequent, ParseError> {
    let tokens = lex(input)?;
    let mut p = Parser::new(tokens, input.len(), sig);
    let mut premises = Vec::new();
    if !p.eat(TokenKind::Turnstile) {
        loop {
            premises.push(p.formula()?);
            if p.eat(TokenKind::Comma) {
                continue;
            }
            p.expect(TokenKind::Turnstile, "`|-` between premises and conclusion")?;
            break;
        }
    }
    let conclusion = p.formula()?;
    p.expect_end()?;
    Ok(Sequent::new(premises, conclusion))
}

impl FromStr for Formula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Formula, ParseError> {
        parse_formula(s, None)
    }
}

impl FromStr for Sequent {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Sequent, ParseError> {
        parse_sequent(s, None)
    }
}

// Printing. `min_prec` is the loosest precedence allowed without
// parentheses (Or = 1, And = 2, Not = 3). `rightmost` tracks whether the
// formula extends to the right edge of its enclosing group; a quantifier
// printed anywhere else must be parenthesized, because when re-parsed it
// would swallow everything to its right.
fn write_formula(
    fla: &Formula,
    out: &mut fmt::Formatter<'_>,
    min_prec: u8,
    rightmost: bool,
) -> fmt::Result {
    match fla {
        Formula::Atom(p, args) => {
            out.write_str(p)?;
            if !args.is_empty() {
                out.write_str("(")?;
                for (i, t) in args.iter().enumerate() {
                    if i > 0 {
                        out.write_str(",")?;
                    }
                    write!(out, "{t}")?;
                }
                out.write_str(")")?;
            }
            Ok(())
        }
        Formula::Not(g) => {
            out.write_str("~")?;
            write_formula(g, out, 3, rightmost)
        }
        Formula::And(a, b) => {
            let wrap = min_prec > 2;
            if wrap {
                out.write_str("(")?;
            }
            write_formula(a, out, 2, false)?;
            out.write_str(" & ")?;
            write_formula(b, out, 3, wrap || rightmost)?;
            if wrap {
                out.write_str(")")?;
            }
            Ok(())
        }
        Formula::Or(a, b) => {
            let wrap = min_prec > 1;
            if wrap {
                out.write_str("(")?;
            }
            write_formula(a, out, 1, false)?;
            out.write_str(" | ")?;
            write_formula(b, out, 2, wrap || rightmost)?;
            if wrap {
                out.write_str(")")?;
            }
            Ok(())
        }
        Formula::Forall(x, body) | Formula::Exists(x, body) => {
            let word = if matches!(fla, Formula::Forall(..)) {
                "forall"
            } else {
                "exists"
            };
            let wrap = !rightmost;
            if wrap {
                out.write_str("(")?;
            }
            write!(out, "{word} {x}. ")?;
            write_formula(body, out, 1, true)?;
            if wrap {
                out.write_str(")")?;
            }
            Ok(())
        }
    }
}

impl fmt::Display for Formula {
    /// Prints with minimal parentheses; `parse_formula` inverts this
    /// exactly (structurally, including variable/constant status).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_formula(self, f, 1, true)
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.premises().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        if !self.premises().is_empty() {
            f.write_str(" ")?;
        }
        write!(f, "|- {}", self.conclusion())
    }
}
