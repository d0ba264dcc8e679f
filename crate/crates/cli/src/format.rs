//! Text formats for representations and Markov measures.
//!
//! Representation file:
//!
//! ```text
//! alphabet a b
//! dim 3
//! lambda 1/3 1/3 1/3
//! gamma 1 1 1
//! phi a
//! 0 0 0
//! 2/3 0 0
//! 1/3 0 0
//! phi b
//! 0 2/3 1/3
//! 0 1/3 0
//! 0 0 2/3
//! ```
//!
//! Markov file:
//!
//! ```text
//! states 1 2 3
//! v 1/3 1/3 1/3
//! M
//! 0 2/3 1/3
//! 2/3 1/3 0
//! 1/3 0 2/3
//! ```
//!
//! `#` starts a comment; blank lines are ignored; tokens are separated by
//! whitespace. Scalars are integers or `p/q`. A dimension-0 representation
//! is the header alone.

use std::fmt::Write as _;

use sofic_core::exactalg::{RMatrix, RVector, Rational};
use sofic_core::markov::{MarkovError, MarkovMeasure};
use sofic_core::repr::{Alphabet, LinearRepresentation};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MarkovFileError {
    #[error(transparent)]
    Syntax(#[from] ParseError),
    #[error(transparent)]
    Invalid(#[from] MarkovError),
}

#[derive(Debug, Clone, Copy)]
struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

impl Token<'_> {
    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError { line: self.line, column: self.column, message: message.into() }
    }
}

struct Line<'a> {
    number: usize,
    tokens: Vec<Token<'a>>,
}

impl<'a> Line<'a> {
    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError { line: self.number, column: 1, message: message.into() }
    }

    fn keyword(&self) -> &'a str {
        self.tokens[0].text
    }

    fn args(&self) -> &[Token<'a>] {
        &self.tokens[1..]
    }
}

fn lines(text: &str) -> Vec<Line<'_>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let content = raw.split('#').next().unwrap_or("");
            let mut tokens = Vec::new();
            let mut start = None;
            for (col, (byte, ch)) in content.char_indices().enumerate() {
                match (ch.is_whitespace(), start) {
                    (false, None) => start = Some((byte, col)),
                    (true, Some((b, c))) => {
                        tokens.push(Token { text: &content[b..byte], line: i + 1, column: c + 1 });
                        start = None;
                    }
                    _ => {}
                }
            }
            if let Some((b, c)) = start {
                tokens.push(Token { text: &content[b..], line: i + 1, column: c + 1 });
            }
            (!tokens.is_empty()).then_some(Line { number: i + 1, tokens })
        })
        .collect()
}

struct Cursor<'a> {
    lines: Vec<Line<'a>>,
    next: usize,
    last_line: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { lines: lines(text), next: 0, last_line: text.lines().count().max(1) }
    }

    fn peek(&self) -> Option<&Line<'a>> {
        self.lines.get(self.next)
    }

    fn take(&mut self, what: &str) -> Result<&Line<'a>, ParseError> {
        let line = self.lines.get(self.next).ok_or_else(|| ParseError {
            line: self.last_line,
            column: 1,
            message: format!("unexpected end of input, expected {what}"),
        })?;
        self.next += 1;
        Ok(line)
    }

    fn keyword_line(&mut self, keyword: &str) -> Result<&Line<'a>, ParseError> {
        let line = self.take(&format!("`{keyword}`"))?;
        if line.keyword() != keyword {
            return Err(line.tokens[0].error(format!("expected `{keyword}`, found `{}`", line.keyword())));
        }
        Ok(line)
    }

    fn finish(&self) -> Result<(), ParseError> {
        match self.peek() {
            Some(line) => Err(line.tokens[0].error("unexpected trailing content")),
            None => Ok(()),
        }
    }
}

fn scalar(token: &Token<'_>) -> Result<Rational, ParseError> {
    token
        .text
        .parse()
        .map_err(|e| token.error(format!("invalid scalar `{}`: {e}", token.text)))
}

fn scalars(line: &Line<'_>, tokens: &[Token<'_>], n: usize, what: &str) -> Result<Vec<Rational>, ParseError> {
    if tokens.len() != n {
        return Err(line.error(format!("{what} has {} entries, expected {n}", tokens.len())));
    }
    tokens.iter().map(scalar).collect()
}

fn alphabet_from(line: &Line<'_>, what: &str) -> Result<Alphabet, ParseError> {
    if line.args().is_empty() {
        return Err(line.error(format!("{what} needs at least one symbol")));
    }
    Alphabet::new(line.args().iter().map(|t| t.text)).map_err(|e| line.error(e.to_string()))
}

fn matrix_rows(cursor: &mut Cursor<'_>, n: usize, what: &str) -> Result<RMatrix, ParseError> {
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let line = cursor.take(&format!("row {} of {what}", i + 1))?;
        rows.push(scalars(line, &line.tokens, n, &format!("row {} of {what}", i + 1))?);
    }
    Ok(RMatrix::from_rows(rows).expect("rows have equal length"))
}

pub fn parse_rep(text: &str) -> Result<LinearRepresentation, ParseError> {
    let mut cursor = Cursor::new(text);
    let header = cursor.keyword_line("alphabet")?;
    let alphabet = alphabet_from(header, "alphabet")?;

    let dim_line = cursor.keyword_line("dim")?;
    let [dim_token] = dim_line.args() else {
        return Err(dim_line.error("`dim` takes exactly one value"));
    };
    let n: usize = dim_token
        .text
        .parse()
        .map_err(|_| dim_token.error(format!("invalid dimension `{}`", dim_token.text)))?;

    if n == 0 && cursor.peek().is_none() {
        return Ok(LinearRepresentation::zero(alphabet));
    }

    let lambda_line = cursor.keyword_line("lambda")?;
    let lambda = scalars(lambda_line, lambda_line.args(), n, "lambda")?;
    let gamma_line = cursor.keyword_line("gamma")?;
    let gamma = scalars(gamma_line, gamma_line.args(), n, "gamma")?;

    let mut phi: Vec<Option<RMatrix>> = vec![None; alphabet.len()];
    while cursor.peek().is_some() {
        let head = cursor.keyword_line("phi")?;
        let [symbol] = head.args() else {
            return Err(head.error("`phi` takes exactly one symbol"));
        };
        let index = alphabet
            .index_of(symbol.text)
            .ok_or_else(|| symbol.error(format!("symbol `{}` is not in the alphabet", symbol.text)))?;
        if phi[index].is_some() {
            return Err(symbol.error(format!("matrix for `{}` given twice", symbol.text)));
        }
        let symbol_text = symbol.text.to_string();
        phi[index] = Some(matrix_rows(&mut cursor, n, &format!("phi {symbol_text}"))?);
    }
    let phi = phi
        .into_iter()
        .enumerate()
        .map(|(i, m)| {
            m.ok_or_else(|| ParseError {
                line: cursor.last_line,
                column: 1,
                message: format!("missing matrix for `{}`", alphabet.symbol(i)),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(LinearRepresentation::new(
        alphabet,
        RVector::row(lambda),
        phi,
        RVector::column(gamma),
    )
    .expect("dimensions checked while parsing"))
}

fn join<'a>(items: impl IntoIterator<Item = &'a Rational>) -> String {
    let mut out = String::new();
    for (i, x) in items.into_iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        write!(out, "{x}").expect("writing to a string");
    }
    out
}

fn push_rows(out: &mut String, m: &RMatrix) {
    for i in 0..m.rows() {
        out.push_str(&join(m.row(i)));
        out.push('\n');
    }
}

fn keyword_with(keyword: &str, rest: &str) -> String {
    if rest.is_empty() {
        format!("{keyword}\n")
    } else {
        format!("{keyword} {rest}\n")
    }
}

pub fn print_rep(rep: &LinearRepresentation) -> String {
    let mut out = keyword_with("alphabet", &rep.alphabet().symbols().join(" "));
    writeln!(out, "dim {}", rep.dim()).expect("writing to a string");
    if rep.dim() == 0 {
        return out;
    }
    out.push_str(&keyword_with("lambda", &join(rep.lambda().iter())));
    out.push_str(&keyword_with("gamma", &join(rep.gamma().iter())));
    for (symbol, m) in rep.alphabet().symbols().iter().zip(rep.matrices()) {
        writeln!(out, "phi {symbol}").expect("writing to a string");
        push_rows(&mut out, m);
    }
    out
}

pub fn parse_markov(text: &str) -> Result<MarkovMeasure, MarkovFileError> {
    let mut cursor = Cursor::new(text);
    let header = cursor.keyword_line("states")?;
    let states = alphabet_from(header, "states")?;
    let n = states.len();
    let v_line = cursor.keyword_line("v")?;
    let v = scalars(v_line, v_line.args(), n, "v")?;
    let m_line = cursor.keyword_line("M")?;
    if let Some(extra) = m_line.args().first() {
        return Err(extra.error("`M` takes no arguments; rows follow on separate lines").into());
    }
    let m = matrix_rows(&mut cursor, n, "M")?;
    cursor.finish()?;
    Ok(MarkovMeasure::new(states, RVector::row(v), m)?)
}

pub fn print_markov(m: &MarkovMeasure) -> String {
    let mut out = keyword_with("states", &m.states().symbols().join(" "));
    out.push_str(&keyword_with("v", &join(m.v().iter())));
    out.push_str("M\n");
    push_rows(&mut out, m.transitions());
    out
}

/// `p/q` entries separated by spaces, rows separated by `; `.
pub fn inline_matrix(m: &RMatrix) -> String {
    (0..m.rows()).map(|i| join(m.row(i))).collect::<Vec<_>>().join("; ")
}

pub fn inline_vector(v: &RVector) -> String {
    join(v.iter())
}

/// Key/value lines describing a representation, for machine output.
pub fn rep_fields(rep: &LinearRepresentation) -> Vec<(String, String)> {
    let mut fields = vec![
        ("alphabet".to_string(), rep.alphabet().symbols().join(" ")),
        ("dim".to_string(), rep.dim().to_string()),
        ("lambda".to_string(), inline_vector(rep.lambda())),
        ("gamma".to_string(), inline_vector(rep.gamma())),
    ];
    for (symbol, m) in rep.alphabet().symbols().iter().zip(rep.matrices()) {
        fields.push((format!("phi.{symbol}"), inline_matrix(m)));
    }
    fields
}

pub fn markov_fields(m: &MarkovMeasure) -> Vec<(String, String)> {
    vec![
        ("states".to_string(), m.states().symbols().join(" ")),
        ("v".to_string(), inline_vector(m.v())),
        ("M".to_string(), inline_matrix(m.transitions())),
    ]
}
