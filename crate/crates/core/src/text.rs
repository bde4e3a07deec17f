//! Tokenizing for the series text syntax shared by the univariate and
//! multivariate parsers: `term (± term)*`, `term = [coeff [*]] monomial`.

use crate::error::{Error, Result};

pub(crate) struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(text: &'a str) -> Self {
        Cursor { text, pos: 0 }
    }

    pub(crate) fn pos(&self) -> usize {
        self.pos
    }

    pub(crate) fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            message: message.into(),
        })
    }

    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    pub(crate) fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.text.len() - trimmed.len();
    }

    pub(crate) fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    pub(crate) fn at_end(&self) -> bool {
        self.pos == self.text.len()
    }

    /// Consumes `c` after optional whitespace.
    pub(crate) fn eat(&mut self, c: char) -> bool {
        let save = self.pos;
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            self.pos = save;
            false
        }
    }

    pub(crate) fn digits(&mut self) -> Option<&'a str> {
        let rest = self.rest();
        let len = rest.bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            None
        } else {
            self.pos += len;
            Some(&rest[..len])
        }
    }

    /// An unsigned integer or fraction `a/b`.
    fn number(&mut self) -> Option<&'a str> {
        let start = self.pos;
        self.digits()?;
        if self.peek() == Some('/') {
            self.pos += 1;
            if self.digits().is_none() {
                self.pos = start;
                return None;
            }
        }
        Some(&self.text[start..self.pos])
    }

    pub(crate) fn integer<T: std::str::FromStr>(&mut self, what: &str) -> Result<T> {
        self.skip_ws();
        match self.digits() {
            Some(d) => match d.parse() {
                Ok(v) => Ok(v),
                Err(_) => self.error(format!("{what} {d} is out of range")),
            },
            None => self.error(format!("expected {what}")),
        }
    }
}

/// One signed term. `coeff` is the literal text with the sign folded in.
pub(crate) struct Term<M> {
    pub pos: usize,
    pub coeff: Option<String>,
    pub negative: bool,
    pub monomial: Option<M>,
}

/// Splits `text` into terms, calling `monomial` where a variable part may
/// start. `monomial` returns `Ok(None)` when no variable part is present.
pub(crate) fn parse_terms<M>(
    text: &str,
    mut monomial: impl FnMut(&mut Cursor<'_>) -> Result<Option<M>>,
) -> Result<Vec<Term<M>>> {
    let mut cur = Cursor::new(text);
    let mut terms = Vec::new();
    cur.skip_ws();
    if cur.at_end() {
        return cur.error("empty series");
    }
    loop {
        cur.skip_ws();
        let negative = if terms.is_empty() {
            if cur.eat('-') {
                true
            } else {
                cur.eat('+');
                false
            }
        } else if cur.eat('+') {
            false
        } else if cur.eat('-') {
            true
        } else {
            return cur.error("expected '+' or '-'");
        };
        cur.skip_ws();
        let pos = cur.pos();
        let coeff = cur.number().map(str::to_string);
        let mono = if coeff.is_some() {
            let starred = cur.eat('*');
            cur.skip_ws();
            let m = monomial(&mut cur)?;
            if starred && m.is_none() {
                return cur.error("expected a variable after '*'");
            }
            m
        } else {
            match monomial(&mut cur)? {
                Some(m) => Some(m),
                None => return cur.error("expected a coefficient or a variable"),
            }
        };
        terms.push(Term {
            pos,
            coeff,
            negative,
            monomial: mono,
        });
        cur.skip_ws();
        if cur.at_end() {
            return Ok(terms);
        }
    }
}

pub(crate) fn signed_coeff(term: &Term<impl Sized>) -> String {
    let c = term.coeff.as_deref().unwrap_or("1");
    if term.negative {
        format!("-{c}")
    } else {
        c.to_string()
    }
}

/// Joins `(is_negative, body)` pieces into `a + b - c` form. `body` is the
/// term without its sign.
pub(crate) fn join_signed(pieces: impl IntoIterator<Item = (bool, String)>) -> String {
    let mut out = String::new();
    for (i, (negative, body)) in pieces.into_iter().enumerate() {
        match (i, negative) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
