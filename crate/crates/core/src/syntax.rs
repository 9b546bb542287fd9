//! Concrete syntax: parsing, printing, definitions files.
//!
//! Grammar:
//! ```text
//! term   := lambda | app
//! lambda := ("\" | "λ") ident+ "." term
//! app    := atom atom*
//! atom   := ident | "(" term ")"
//! ```
//! Application is left-associative, an abstraction body extends
//! maximally to the right, `\x y. M` abbreviates `\x.\y. M`, and `#`
//! starts a comment running to end of line. Identifiers are an ASCII
//! letter followed by letters, digits, `_` or `'`.

use std::fmt;

use crate::term::Term;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SyntaxError {
    #[error("{origin}:{line}:{col}: {message}")]
    Parse {
        origin: String,
        line: usize,
        col: usize,
        message: String,
    },
    #[error("{origin}:{line}:{col}: unknown name '{name}'")]
    UnknownName {
        origin: String,
        line: usize,
        col: usize,
        name: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum TokenKind {
    Lambda,
    Dot,
    LParen,
    RParen,
    Ident(String),
    Eof,
}

#[derive(Debug, Clone)]
struct Token {
    kind: TokenKind,
    line: usize,
    col: usize,
}

fn lex(src: &str, origin: &str, start_line: usize) -> Result<Vec<Token>, SyntaxError> {
    let mut tokens = Vec::new();
    let mut line = start_line;
    let mut col = 1usize;
    let mut chars = src.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            '\n' => {
                chars.next();
                line += 1;
                col = 1;
            }
            c if c.is_whitespace() => {
                chars.next();
                col += 1;
            }
            '#' => {
                while let Some(&c) = chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    chars.next();
                }
            }
            '\\' | 'λ' => {
                tokens.push(Token {
                    kind: TokenKind::Lambda,
                    line,
                    col,
                });
                chars.next();
                col += 1;
            }
            '.' => {
                tokens.push(Token {
                    kind: TokenKind::Dot,
                    line,
                    col,
                });
                chars.next();
                col += 1;
            }
            '(' => {
                tokens.push(Token {
                    kind: TokenKind::LParen,
                    line,
                    col,
                });
                chars.next();
                col += 1;
            }
            ')' => {
                tokens.push(Token {
                    kind: TokenKind::RParen,
                    line,
                    col,
                });
                chars.next();
                col += 1;
            }
            c if c.is_ascii_alphabetic() => {
                let start_col = col;
                let mut name = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' || c == '\'' {
                        name.push(c);
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                tokens.push(Token {
                    kind: TokenKind::Ident(name),
                    line,
                    col: start_col,
                });
            }
            c => {
                return Err(SyntaxError::Parse {
                    origin: origin.to_string(),
                    line,
                    col,
                    message: format!("unexpected character '{c}'"),
                });
            }
        }
    }
    tokens.push(Token {
        kind: TokenKind::Eof,
        line,
        col,
    });
    Ok(tokens)
}

/// Named terms usable inside later terms; references are inlined at
/// parse time.
#[derive(Debug, Clone, Default)]
pub struct Definitions {
    entries: Vec<(String, Term)>,
}

impl Definitions {
    pub fn new() -> Definitions {
        Definitions::default()
    }

    pub fn define(&mut self, name: impl Into<String>, term: Term) {
        self.entries.push((name.into(), term));
    }

    pub fn get(&self, name: &str) -> Option<&Term> {
        self.entries
            .iter()
            .rev()
            .find(|(n, _)| n == name)
            .map(|(_, t)| t)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|(n, _)| n.as_str())
    }
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    origin: &'a str,
    defs: &'a Definitions,
    scope: Vec<String>,
    // when true, unresolved names are errors instead of free variables
    strict: bool,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, tok: &Token, message: impl Into<String>) -> SyntaxError {
        SyntaxError::Parse {
            origin: self.origin.to_string(),
            line: tok.line,
            col: tok.col,
            message: message.into(),
        }
    }

    fn term(&mut self) -> Result<Term, SyntaxError> {
        if self.peek().kind == TokenKind::Lambda {
            return self.lambda();
        }
        self.application()
    }

    fn lambda(&mut self) -> Result<Term, SyntaxError> {
        self.bump(); // lambda sigil
        let mut binders = Vec::new();
        loop {
            match &self.peek().kind {
                TokenKind::Ident(name) => {
                    binders.push(name.clone());
                    self.bump();
                }
                TokenKind::Dot if !binders.is_empty() => {
                    self.bump();
                    break;
                }
                _ => {
                    let tok = self.peek().clone();
                    return Err(self.error(&tok, "expected binder name"));
                }
            }
        }
        for b in &binders {
            self.scope.push(b.clone());
        }
        let body = self.term()?;
        let mut t = body;
        for _ in 0..binders.len() {
            let name = self.scope.pop().expect("binder scope underflow");
            t = Term::Lam(Some(name), Box::new(t));
        }
        Ok(t)
    }

    fn application(&mut self) -> Result<Term, SyntaxError> {
        let mut t = self.atom()?.ok_or_else(|| {
            let tok = self.peek().clone();
            self.error(&tok, "expected a term")
        })?;
        loop {
            if self.peek().kind == TokenKind::Lambda {
                // `x \y. ...`: a lambda in argument position extends right
                let arg = self.lambda()?;
                t = Term::app(t, arg);
                break;
            }
            match self.atom()? {
                Some(arg) => t = Term::app(t, arg),
                None => break,
            }
        }
        Ok(t)
    }

    fn atom(&mut self) -> Result<Option<Term>, SyntaxError> {
        match &self.peek().kind {
            TokenKind::Ident(_) => {
                let tok = self.bump();
                let name = match tok.kind {
                    TokenKind::Ident(n) => n,
                    _ => unreachable!(),
                };
                if let Some(pos) = self.scope.iter().rposition(|b| *b == name) {
                    return Ok(Some(Term::Bound(self.scope.len() - 1 - pos)));
                }
                if let Some(def) = self.defs.get(&name) {
                    return Ok(Some(def.clone()));
                }
                if self.strict {
                    return Err(SyntaxError::UnknownName {
                        origin: self.origin.to_string(),
                        line: tok.line,
                        col: tok.col,
                        name,
                    });
                }
                Ok(Some(Term::free(name)))
            }
            TokenKind::LParen => {
                self.bump();
                let t = self.term()?;
                let tok = self.peek().clone();
                if tok.kind != TokenKind::RParen {
                    return Err(self.error(&tok, "expected ')'"));
                }
                self.bump();
                Ok(Some(t))
            }
            _ => Ok(None),
        }
    }

    fn finish(&mut self, t: Term) -> Result<Term, SyntaxError> {
        let tok = self.peek().clone();
        if tok.kind != TokenKind::Eof {
            return Err(self.error(&tok, "unexpected trailing input"));
        }
        Ok(t)
    }
}

fn parse_tokens(
    tokens: Vec<Token>,
    origin: &str,
    defs: &Definitions,
    strict: bool,
) -> Result<Term, SyntaxError> {
    let mut p = Parser {
        tokens,
        pos: 0,
        origin,
        defs,
        scope: Vec::new(),
        strict,
    };
    let t = p.term()?;
    p.finish(t)
}

pub fn parse(src: &str) -> Result<Term, SyntaxError> {
    parse_with(src, "<input>", &Definitions::new())
}

pub fn parse_with(src: &str, origin: &str, defs: &Definitions) -> Result<Term, SyntaxError> {
    let tokens = lex(src, origin, 1)?;
    parse_tokens(tokens, origin, defs, false)
}

/// Parses a definitions file: one `name = term` per line, blank lines
/// and `#` comments allowed. Each body may reference earlier names;
/// anything else unresolved is an `UnknownName` error.
pub fn parse_definitions(src: &str, origin: &str) -> Result<Definitions, SyntaxError> {
    let mut defs = Definitions::new();
    for (idx, raw_line) in src.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw_line.find('#') {
            Some(i) => &raw_line[..i],
            None => raw_line,
        };
        if line.trim().is_empty() {
            continue;
        }
        let eq = line.find('=').ok_or_else(|| SyntaxError::Parse {
            origin: origin.to_string(),
            line: line_no,
            col: 1,
            message: "expected 'name = term'".to_string(),
        })?;
        let name = line[..eq].trim();
        if name.is_empty() || !is_ident(name) {
            return Err(SyntaxError::Parse {
                origin: origin.to_string(),
                line: line_no,
                col: 1,
                message: format!("invalid definition name '{name}'"),
            });
        }
        let body_src = &line[eq + 1..];
        let mut tokens = lex(body_src, origin, line_no)?;
        // column offsets in the body are relative to the '='; good enough
        // for a one-line diagnostic
        for tok in &mut tokens {
            if tok.line == line_no {
                tok.col += eq + 1;
            }
        }
        let term = parse_tokens(tokens, origin, &defs, true)?;
        defs.define(name, term);
    }
    Ok(defs)
}

fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrintMode {
    /// Reuse binder hints where that cannot change how the text reparses.
    Readable,
    /// Deterministic binder names from the nameless structure, so two
    /// terms print identically iff they are α-equivalent.
    Canonical,
}

pub fn print(t: &Term, mode: PrintMode) -> String {
    let free = t.free_vars();
    let mut namer = Namer {
        mode,
        free,
        next: 0,
    };
    let mut out = String::new();
    fmt_term(t, &mut Vec::new(), &mut namer, Pos::Top, &mut out);
    out
}

struct Namer {
    mode: PrintMode,
    free: std::collections::BTreeSet<String>,
    next: usize,
}

impl Namer {
    fn binder_name(&mut self, hint: &Option<String>, env: &[String]) -> String {
        match self.mode {
            PrintMode::Readable => {
                let base = hint.clone().unwrap_or_else(|| "x".to_string());
                if !self.free.contains(&base) && !env.contains(&base) {
                    return base;
                }
                let mut i = 1usize;
                loop {
                    let cand = format!("{base}{i}");
                    if !self.free.contains(&cand) && !env.contains(&cand) {
                        return cand;
                    }
                    i += 1;
                }
            }
            PrintMode::Canonical => loop {
                let i = self.next;
                self.next += 1;
                let letter = (b'a' + (i % 26) as u8) as char;
                let cand = if i < 26 {
                    letter.to_string()
                } else {
                    format!("{letter}{}", i / 26)
                };
                if !self.free.contains(&cand) {
                    return cand;
                }
            },
        }
    }
}

#[derive(PartialEq, Clone, Copy)]
enum Pos {
    Top,
    Fun,
    Arg,
}

fn fmt_term(t: &Term, env: &mut Vec<String>, namer: &mut Namer, pos: Pos, out: &mut String) {
    match t {
        Term::Free(n) => out.push_str(n),
        Term::Bound(i) => {
            let idx = env.len().checked_sub(1 + i);
            match idx {
                Some(idx) => out.push_str(&env[idx]),
                None => out.push_str(&format!("?{i}")), // dangling index; not printable as a name
            }
        }
        Term::Lam(..) => {
            let parens = pos != Pos::Top;
            if parens {
                out.push('(');
            }
            fmt_lambda(t, env, namer, out);
            if parens {
                out.push(')');
            }
        }
        Term::App(f, a) => {
            let parens = pos == Pos::Arg;
            if parens {
                out.push('(');
            }
            fmt_term(f, env, namer, Pos::Fun, out);
            out.push(' ');
            fmt_term(a, env, namer, Pos::Arg, out);
            if parens {
                out.push(')');
            }
        }
    }
}

fn fmt_lambda(t: &Term, env: &mut Vec<String>, namer: &mut Namer, out: &mut String) {
    match t {
        Term::Lam(hint, body) => {
            let name = namer.binder_name(hint, env);
            out.push('\\');
            out.push_str(&name);
            out.push('.');
            env.push(name);
            if matches!(**body, Term::Lam(..)) {
                fmt_lambda(body, env, namer, out);
            } else {
                out.push(' ');
                fmt_term(body, env, namer, Pos::Top, out);
            }
            env.pop();
        }
        _ => unreachable!(),
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print(self, PrintMode::Readable))
    }
}
