use std::fmt;

use super::{Command, DiamondSource, Expr, Format, Suite, Target};
use crate::determinantal::{DetCase, DetSpec};
use crate::spectrum::BpSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorCode {
    Syntax,
    UnknownVerb,
    Exponent,
    DetRange,
    BadFlag,
    IntRange,
}

impl ErrorCode {
    pub fn as_str(self) -> &'static str {
        match self {
            ErrorCode::Syntax => "E_SYNTAX",
            ErrorCode::UnknownVerb => "E_VERB",
            ErrorCode::Exponent => "E_EXPONENT",
            ErrorCode::DetRange => "E_DET_RANGE",
            ErrorCode::BadFlag => "E_FLAG",
            ErrorCode::IntRange => "E_INT_RANGE",
        }
    }
}

/// Malformed input, located by byte offset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub code: ErrorCode,
    pub pos: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at position {}", self.message, self.pos)
    }
}

impl std::error::Error for ParseError {}

type PResult<T> = Result<T, ParseError>;

struct Parser<'a> {
    src: &'a [u8],
    text: &'a str,
    pos: usize,
}

fn is_word_byte(b: u8) -> bool {
    b.is_ascii_alphanumeric() || b == b'-' || b == b'_'
}

impl<'a> Parser<'a> {
    fn err<T>(&self, code: ErrorCode, pos: usize, message: impl Into<String>) -> PResult<T> {
        Err(ParseError { code, pos, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    /// Next non-space byte, without consuming it.
    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn describe_here(&mut self) -> String {
        match self.peek() {
            None => "end of input".to_string(),
            Some(_) => {
                let c = self.text[self.pos..].chars().next().expect("in bounds");
                format!("'{c}'")
            }
        }
    }

    fn expect(&mut self, b: u8) -> PResult<()> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            let found = self.describe_here();
            self.err(ErrorCode::Syntax, self.pos, format!("expected '{}', found {found}", b as char))
        }
    }

    /// A run of letters, digits, `-` and `_`; returns it with its start offset.
    fn word(&mut self, what: &str) -> PResult<(&'a str, usize)> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && is_word_byte(self.src[self.pos]) {
            self.pos += 1;
        }
        if start == self.pos {
            let found = self.describe_here();
            return self.err(ErrorCode::Syntax, start, format!("expected {what}, found {found}"));
        }
        Ok((&self.text[start..self.pos], start))
    }

    /// `key=`; the key must be one of `allowed`.
    fn key(&mut self, allowed: &[&str]) -> PResult<(&'a str, usize)> {
        let (k, at) = self.word("a key")?;
        if !allowed.contains(&k) {
            return self.err(
                ErrorCode::Syntax,
                at,
                format!("unexpected key '{k}', expected one of {}", allowed.join(", ")),
            );
        }
        self.expect(b'=')?;
        Ok((k, at))
    }

    fn int(&mut self) -> PResult<(i64, usize)> {
        self.skip_ws();
        let start = self.pos;
        if self.src.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        let digits = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if digits == self.pos {
            self.pos = start;
            let found = self.describe_here();
            return self.err(ErrorCode::Syntax, start, format!("expected an integer, found {found}"));
        }
        match self.text[start..self.pos].parse::<i64>() {
            Ok(v) => Ok((v, start)),
            Err(_) => self.err(ErrorCode::IntRange, start, "integer out of range"),
        }
    }

    fn bool_value(&mut self) -> PResult<bool> {
        let (w, at) = self.word("true or false")?;
        match w {
            "true" => Ok(true),
            "false" => Ok(false),
            _ => self.err(ErrorCode::Syntax, at, format!("expected true or false, found '{w}'")),
        }
    }

    /// `[int, ...]`, possibly empty.
    fn int_list(&mut self) -> PResult<Vec<i64>> {
        self.expect(b'[')?;
        let mut out = Vec::new();
        if self.peek() == Some(b']') {
            self.pos += 1;
            return Ok(out);
        }
        loop {
            out.push(self.int()?.0);
            match self.peek() {
                Some(b',') => self.pos += 1,
                _ => break,
            }
        }
        self.expect(b']')?;
        Ok(out)
    }

    /// `[[...], ...]`, possibly empty.
    fn int_matrix(&mut self) -> PResult<Vec<(Vec<i64>, usize)>> {
        self.expect(b'[')?;
        let mut out = Vec::new();
        if self.peek() == Some(b']') {
            self.pos += 1;
            return Ok(out);
        }
        loop {
            let at = self.pos;
            out.push((self.int_list()?, at));
            match self.peek() {
                Some(b',') => self.pos += 1,
                _ => break,
            }
        }
        self.expect(b']')?;
        Ok(out)
    }

    fn expr(&mut self) -> PResult<Expr> {
        let (head, at) = self.word("bp(, ts( or tuple(")?;
        match head {
            "bp" => {
                self.expect(b'(')?;
                let mut exps = Vec::new();
                loop {
                    let (e, at) = self.int()?;
                    if e < 2 {
                        return self.err(ErrorCode::Exponent, at, "exponent must be ≥ 2");
                    }
                    let e = u32::try_from(e).or_else(|_| self.err(ErrorCode::IntRange, at, "exponent out of range"))?;
                    exps.push(e);
                    match self.peek() {
                        Some(b',') => self.pos += 1,
                        _ => break,
                    }
                }
                self.expect(b')')?;
                Ok(Expr::Bp(BpSpec::new(exps).expect("exponents checked")))
            }
            "ts" | "tuple" => {
                self.expect(b'(')?;
                let a = self.expr()?;
                self.expect(b',')?;
                let b = self.expr()?;
                self.expect(b')')?;
                let (a, b) = (Box::new(a), Box::new(b));
                Ok(if head == "ts" { Expr::Ts(a, b) } else { Expr::Tuple(a, b) })
            }
            _ => self.err(ErrorCode::Syntax, at, format!("expected bp, ts or tuple, found '{head}'")),
        }
    }

    /// `key=int` pairs in any order, each exactly once.
    fn int_keys(&mut self, keys: &[&str]) -> PResult<Vec<i64>> {
        let mut vals: Vec<Option<i64>> = vec![None; keys.len()];
        for _ in 0..keys.len() {
            let (k, at) = self.key(keys)?;
            let i = keys.iter().position(|x| *x == k).expect("key checked");
            if vals[i].is_some() {
                return self.err(ErrorCode::Syntax, at, format!("duplicate key '{k}'"));
            }
            vals[i] = Some(self.int()?.0);
        }
        Ok(vals.into_iter().map(|v| v.expect("every key seen once")).collect())
    }

    fn det(&mut self) -> PResult<DetSpec> {
        let (case, at) = self.word("a matrix case")?;
        let start = at;
        let (case, p) = match case {
            "generic" => {
                let v = self.int_keys(&["m", "n", "p"])?;
                (DetCase::Generic { m: v[0], n: v[1] }, v[2])
            }
            "skew-odd" | "skew-even" => {
                let v = self.int_keys(&["m", "p"])?;
                let c = if case == "skew-odd" { DetCase::SkewOdd { m: v[0] } } else { DetCase::SkewEven { m: v[0] } };
                (c, v[1])
            }
            "symmetric" => {
                let v = self.int_keys(&["n", "p"])?;
                (DetCase::Symmetric { n: v[0] }, v[1])
            }
            _ => {
                return self.err(
                    ErrorCode::Syntax,
                    at,
                    format!("unknown matrix case '{case}', expected generic, skew-odd, skew-even or symmetric"),
                )
            }
        };
        DetSpec::new(case, p).or_else(|e| self.err(ErrorCode::DetRange, start, e.to_string()))
    }

    fn cone(&mut self) -> PResult<DiamondSource> {
        let (k, _) = self.key(&["n", "file"])?;
        if k == "file" {
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.src.len() && !self.src[self.pos].is_ascii_whitespace() {
                self.pos += 1;
            }
            if start == self.pos {
                return self.err(ErrorCode::Syntax, start, "expected a file path");
            }
            return Ok(DiamondSource::File(self.text[start..self.pos].to_string()));
        }
        let (n, at) = self.int()?;
        let n = usize::try_from(n).or_else(|_| self.err(ErrorCode::IntRange, at, "n must be non-negative"))?;
        self.key(&["h"])?;
        let mut entries = Vec::new();
        for (row, at) in self.int_matrix()? {
            match row[..] {
                [p, q, v] => entries.push((p, q, v)),
                _ => return self.err(ErrorCode::Syntax, at, "Hodge entries are [p,q,value]"),
            }
        }
        Ok(DiamondSource::Inline { n, entries })
    }

    fn command(&mut self) -> PResult<Command> {
        let (verb, at) = self.word("a command")?;
        let target = match verb {
            "spectrum" => Target::Spectrum(self.expr()?),
            "hrh" => Target::Hrh(self.expr()?),
            "bsato" => Target::Bsato(self.expr()?),
            "det" => Target::Det(self.det()?),
            "cone" => Target::Cone(self.cone()?),
            "toric" => {
                self.key(&["rays"])?;
                Target::Toric(self.int_matrix()?.into_iter().map(|(r, _)| r).collect())
            }
            "secant" => {
                self.key(&["p1"])?;
                let is_p1 = self.bool_value()?;
                self.key(&["vanishing"])?;
                let vanishing = self.bool_value()?;
                Target::Secant { is_p1, vanishing }
            }
            "verify" => Target::Verify(Suite::All),
            _ => {
                return self.err(
                    ErrorCode::UnknownVerb,
                    at,
                    format!("unknown command '{verb}', expected spectrum, hrh, bsato, det, cone, toric, secant or verify"),
                )
            }
        };
        let mut cmd = Command { target, format: None };
        let mut seen_suite = false;
        while !self.at_end() {
            let at = self.pos;
            if !self.text[at..].starts_with("--") {
                let found = self.describe_here();
                return self.err(ErrorCode::Syntax, at, format!("expected a --flag or end of input, found {found}"));
            }
            self.pos += 2;
            let (name, _) = self.word("a flag name")?;
            self.expect(b'=')?;
            let (value, vat) = self.word("a flag value")?;
            match (name, &mut cmd.target) {
                ("format", _) if cmd.format.is_none() => {
                    cmd.format = Some(match value {
                        "text" => Format::Text,
                        "json" => Format::Json,
                        _ => return self.err(ErrorCode::BadFlag, vat, format!("unknown format '{value}'")),
                    });
                }
                ("suite", Target::Verify(suite)) if !seen_suite => {
                    seen_suite = true;
                    *suite = match value {
                        "all" => Suite::All,
                        "spectrum" => Suite::Spectrum,
                        "det" => Suite::Det,
                        "families" => Suite::Families,
                        _ => return self.err(ErrorCode::BadFlag, vat, format!("unknown suite '{value}'")),
                    };
                }
                _ => return self.err(ErrorCode::BadFlag, at, format!("flag --{name} not allowed here")),
            }
        }
        Ok(cmd)
    }
}

/// Parses one command. Whitespace between tokens is ignored; errors carry
/// the byte offset of the offending token.
pub fn parse(input: &str) -> Result<Command, ParseError> {
    let mut p = Parser { src: input.as_bytes(), text: input, pos: 0 };
    p.command()
}
