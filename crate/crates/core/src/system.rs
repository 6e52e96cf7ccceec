//! The line-oriented system file format:
//!
//! ```text
//! ring: x,y,z,t
//! char: 32003
//! order: grevlex
//! polys:
//! y*z^3 - x^2*t^2
//! x*z^2 - y^2*t   # comment
//! ```
//!
//! Factors are joined with `*`, exponents use `^`, coefficients are
//! integers reduced modulo the characteristic.

use std::fmt;

use crate::algebra::{Coeff, Exponent, Monomial, MonomialOrder, Polynomial, PrimeField, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    UnknownVariable(String),
    InvalidCharacteristic(String),
    Header(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: ", self.line, self.column)?;
        match &self.kind {
            ParseErrorKind::Syntax(msg) => write!(f, "syntax error: {msg}"),
            ParseErrorKind::UnknownVariable(v) => write!(f, "unknown variable `{v}`"),
            ParseErrorKind::InvalidCharacteristic(c) => write!(f, "characteristic `{c}` is not a prime below 2^31"),
            ParseErrorKind::Header(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for ParseError {}

/// A polynomial system over a named ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct System {
    pub variables: Vec<String>,
    pub ring: Ring,
    pub polys: Vec<Polynomial>,
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("")
}

pub fn parse_system(text: &str) -> Result<System, ParseError> {
    parse_system_with_char(text, None)
}

/// Parses a system file; `char_override` replaces the declared characteristic.
pub fn parse_system_with_char(text: &str, char_override: Option<u64>) -> Result<System, ParseError> {
    let mut variables: Option<Vec<String>> = None;
    let mut characteristic: Option<PrimeField> = None;
    let mut order = MonomialOrder::default();
    let mut lines = text.lines().enumerate();
    let header_err = |line: usize, msg: String| ParseError {
        line,
        column: 1,
        kind: ParseErrorKind::Header(msg),
    };

    let mut saw_polys = false;
    for (n, raw) in lines.by_ref() {
        let lineno = n + 1;
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once(':') else {
            return Err(header_err(lineno, format!("expected `key: value`, found `{line}`")));
        };
        let value = value.trim();
        match key.trim() {
            "ring" => {
                let vars: Vec<String> = value.split(',').map(|v| v.trim().to_string()).collect();
                if let Some(bad) = vars.iter().find(|v| !is_identifier(v)) {
                    return Err(header_err(lineno, format!("invalid variable name `{bad}`")));
                }
                for (i, v) in vars.iter().enumerate() {
                    if vars[..i].contains(v) {
                        return Err(header_err(lineno, format!("duplicate variable `{v}`")));
                    }
                }
                variables = Some(vars);
            }
            "char" => {
                let p = value
                    .parse::<u64>()
                    .ok()
                    .and_then(|p| PrimeField::new(p).ok())
                    .ok_or_else(|| ParseError {
                        line: lineno,
                        column: raw.find(value).map_or(1, |c| c + 1),
                        kind: ParseErrorKind::InvalidCharacteristic(value.to_string()),
                    })?;
                characteristic = Some(p);
            }
            "order" => {
                order = value
                    .parse()
                    .map_err(|_| header_err(lineno, format!("unknown monomial order `{value}`")))?;
            }
            "polys" => {
                if !value.is_empty() {
                    return Err(header_err(lineno, "`polys:` must be followed by a line break".into()));
                }
                saw_polys = true;
                break;
            }
            other => return Err(header_err(lineno, format!("unknown header key `{other}`"))),
        }
    }

    let variables = variables.ok_or_else(|| header_err(1, "missing `ring:` header".into()))?;
    let field = match char_override {
        Some(p) => PrimeField::new(p).map_err(|_| ParseError {
            line: 0,
            column: 0,
            kind: ParseErrorKind::InvalidCharacteristic(p.to_string()),
        })?,
        None => characteristic.ok_or_else(|| header_err(1, "missing `char:` header".into()))?,
    };
    if !saw_polys {
        return Err(header_err(text.lines().count().max(1), "missing `polys:` section".into()));
    }
    let ring = Ring::new(field, order, variables.len());

    let mut polys = Vec::new();
    for (n, raw) in lines {
        let body = strip_comment(raw);
        if body.trim().is_empty() {
            continue;
        }
        polys.push(parse_polynomial_at(body, n + 1, &variables, &ring)?);
    }
    Ok(System { variables, ring, polys })
}

pub fn parse_polynomial(text: &str, variables: &[String], ring: &Ring) -> Result<Polynomial, ParseError> {
    parse_polynomial_at(text, 1, variables, ring)
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    variables: &'a [String],
    ring: &'a Ring,
}

impl Parser<'_> {
    fn err(&self, column: usize, kind: ParseErrorKind) -> ParseError {
        ParseError {
            line: self.line,
            column: column + 1,
            kind,
        }
    }

    fn syntax(&self, msg: impl Into<String>) -> ParseError {
        self.err(self.pos, ParseErrorKind::Syntax(msg.into()))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn digits(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    fn coeff_of(&self, digits: &str) -> Coeff {
        let p = self.ring.field.characteristic() as u64;
        digits.bytes().fold(0u64, |acc, d| (acc * 10 + (d - b'0') as u64) % p) as Coeff
    }

    /// factor := INT | IDENT ('^' INT)?
    fn factor(&mut self, coeff: &mut Coeff, exps: &mut [Exponent]) -> Result<(), ParseError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits().unwrap();
                *coeff = self.ring.field.mul(*coeff, self.coeff_of(&d));
                Ok(())
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.chars.len()
                    && (self.chars[self.pos].is_ascii_alphanumeric() || self.chars[self.pos] == '_')
                {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                let var = self
                    .variables
                    .iter()
                    .position(|v| *v == name)
                    .ok_or_else(|| self.err(start, ParseErrorKind::UnknownVariable(name.clone())))?;
                let mut e: u64 = 1;
                if self.peek() == Some('^') {
                    self.pos += 1;
                    let d = self.digits().ok_or_else(|| self.syntax("expected exponent after `^`"))?;
                    e = d.parse().ok().filter(|&e| e <= Exponent::MAX as u64).ok_or_else(|| {
                        self.err(self.pos - d.len(), ParseErrorKind::Syntax(format!("exponent {d} is too large")))
                    })?;
                }
                let total = exps[var] as u64 + e;
                if total > Exponent::MAX as u64 {
                    return Err(self.syntax("exponent is too large"));
                }
                exps[var] = total as Exponent;
                Ok(())
            }
            Some(c) => Err(self.syntax(format!("unexpected `{c}`"))),
            None => Err(self.syntax("unexpected end of line")),
        }
    }

    fn polynomial(&mut self) -> Result<Polynomial, ParseError> {
        let mut terms = Vec::new();
        let mut first = true;
        loop {
            let mut negative = false;
            match self.peek() {
                Some('+') | Some('-') => {
                    negative = self.chars[self.pos] == '-';
                    self.pos += 1;
                }
                None if first => return Err(self.syntax("empty polynomial")),
                None => break,
                _ if !first => return Err(self.syntax("expected `+` or `-`")),
                _ => {}
            }
            first = false;
            let mut coeff: Coeff = 1;
            let mut exps = vec![0; self.ring.nvars()];
            self.factor(&mut coeff, &mut exps)?;
            while self.peek() == Some('*') {
                self.pos += 1;
                self.factor(&mut coeff, &mut exps)?;
            }
            if negative {
                coeff = self.ring.field.neg(coeff);
            }
            terms.push((coeff, Monomial::new(exps)));
            if self.peek().is_none() {
                break;
            }
        }
        Ok(self.ring.from_terms(terms).expect("arity matches the ring"))
    }
}

fn parse_polynomial_at(text: &str, line: usize, variables: &[String], ring: &Ring) -> Result<Polynomial, ParseError> {
    Parser {
        chars: text.chars().collect(),
        pos: 0,
        line,
        variables,
        ring,
    }
    .polynomial()
}

fn render_monomial(out: &mut String, mono: &Monomial, variables: &[String]) {
    let mut first = true;
    for (v, &e) in variables.iter().zip(mono.exponents()) {
        if e == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push_str(v);
        if e > 1 {
            out.push('^');
            out.push_str(&e.to_string());
        }
    }
}

/// Renders terms in descending order with coefficients lifted to
/// `(-p/2, p/2]`.
pub fn render_polynomial(p: &Polynomial, variables: &[String], field: &PrimeField) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, t) in p.terms().iter().enumerate() {
        let c = field.to_signed(t.coeff);
        let magnitude = c.unsigned_abs();
        match (i, c < 0) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        if t.mono.is_one() {
            out.push_str(&magnitude.to_string());
        } else {
            if magnitude != 1 {
                out.push_str(&magnitude.to_string());
                out.push('*');
            }
            render_monomial(&mut out, &t.mono, variables);
        }
    }
    out
}

impl System {
    pub fn render(&self, p: &Polynomial) -> String {
        render_polynomial(p, &self.variables, &self.ring.field)
    }

    /// Serializes back into the file format.
    pub fn to_file_string(&self) -> String {
        let mut s = format!(
            "ring: {}\nchar: {}\norder: {}\npolys:\n",
            self.variables.join(","),
            self.ring.field.characteristic(),
            self.ring.order
        );
        for p in &self.polys {
            s.push_str(&self.render(p));
            s.push('\n');
        }
        s
    }

    pub fn is_homogeneous(&self) -> bool {
        self.polys.iter().all(Polynomial::is_homogeneous)
    }

    /// Adds a fresh lowest-precedence variable and homogenizes every
    /// generator with it.
    pub fn homogenize(&self) -> System {
        let mut name = "h".to_string();
        let mut n = 0;
        while self.variables.contains(&name) {
            n += 1;
            name = format!("h{n}");
        }
        let mut variables = self.variables.clone();
        variables.push(name);
        let ring = Ring::new(self.ring.field, self.ring.order, variables.len());
        let polys = self
            .polys
            .iter()
            .map(|p| {
                let d = p.degree();
                ring.from_terms(p.terms().iter().map(|t| {
                    let mut e = t.mono.exponents().to_vec();
                    e.push((d - t.mono.degree()) as Exponent);
                    (t.coeff, Monomial::new(e))
                }))
                .expect("arity matches")
            })
            .collect();
        System { variables, ring, polys }
    }
}
