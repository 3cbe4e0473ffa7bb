use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::monomial::{Monomial, MonomialOrder, MAX_EXPONENT};
use super::polynomial::Polynomial;
use crate::error::{Error, Result};

/// Variable names plus the active monomial order of `Z[x1..xn]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingContext {
    variables: Vec<String>,
    order: MonomialOrder,
}

impl RingContext {
    pub fn new<S: AsRef<str>>(variables: &[S], order: MonomialOrder) -> Result<Self> {
        if variables.is_empty() {
            return Err(Error::InvalidRing(
                "at least one variable is required".into(),
            ));
        }
        let variables: Vec<String> = variables.iter().map(|v| v.as_ref().to_string()).collect();
        for (i, v) in variables.iter().enumerate() {
            if !is_identifier(v) {
                return Err(Error::InvalidRing(format!("bad variable name `{v}`")));
            }
            if variables[..i].contains(v) {
                return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
            }
        }
        Ok(RingContext { variables, order })
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn with_order(&self, order: MonomialOrder) -> RingContext {
        RingContext {
            variables: self.variables.clone(),
            order,
        }
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(self.nvars(), self.order)
    }

    pub fn one(&self) -> Polynomial {
        Polynomial::one(self.nvars(), self.order)
    }

    /// The polynomial `x_i`.
    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial::term(self.nvars(), self.order, 1, Monomial::var(self.nvars(), i))
    }

    pub fn monomial(&self, m: Monomial) -> Polynomial {
        Polynomial::term(self.nvars(), self.order, 1, m)
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        Parser {
            ctx: self,
            src: text.as_bytes(),
            pos: 0,
        }
        .polynomial()
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".into();
        }
        let mut s = String::new();
        for (name, &e) in self.variables.iter().zip(m.exponents()) {
            if e == 0 {
                continue;
            }
            if !s.is_empty() {
                s.push('*');
            }
            s.push_str(name);
            if e > 1 {
                write!(s, "^{e}").unwrap();
            }
        }
        s
    }

    /// Canonical text form: terms descending, explicit `*` and `^`, unit
    /// coefficients omitted on non-constant terms.
    pub fn format(&self, f: &Polynomial) -> String {
        if f.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (m, c)) in f.terms().iter().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            let a = c.abs();
            if m.is_one() {
                write!(s, "{a}").unwrap();
            } else if a.is_one() {
                s.push_str(&self.format_monomial(m));
            } else {
                write!(s, "{a}*{}", self.format_monomial(m)).unwrap();
            }
        }
        s
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut bytes = s.bytes();
    matches!(bytes.next(), Some(b) if b.is_ascii_alphabetic())
        && bytes.all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

struct Parser<'a> {
    ctx: &'a RingContext,
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn polynomial(mut self) -> Result<Polynomial> {
        let n = self.ctx.nvars();
        let mut terms = Vec::new();
        let mut sign = BigInt::one();
        if self.peek() == Some(b'-') {
            self.pos += 1;
            sign = -sign;
        } else if self.peek() == Some(b'+') {
            self.pos += 1;
        }
        loop {
            let (m, c) = self.term()?;
            terms.push((m, c * &sign));
            match self.peek() {
                None => break,
                Some(b'+') => sign = BigInt::one(),
                Some(b'-') => sign = -BigInt::one(),
                Some(_) => return self.err("expected `+`, `-` or end of input"),
            }
            self.pos += 1;
        }
        Ok(Polynomial::from_terms(n, self.ctx.order(), terms))
    }

    fn term(&mut self) -> Result<(Monomial, BigInt)> {
        let mut exps = vec![0u32; self.ctx.nvars()];
        let coeff = match self.peek() {
            Some(b) if b.is_ascii_digit() => {
                let c = self.integer()?;
                if self.peek() != Some(b'*') {
                    return Ok((Monomial::new(exps), c));
                }
                self.pos += 1;
                c
            }
            Some(b) if b.is_ascii_alphabetic() => BigInt::one(),
            Some(_) => return self.err("expected a coefficient or variable"),
            None => return self.err("unexpected end of input"),
        };
        loop {
            self.varpow(&mut exps)?;
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((Monomial::new(exps), coeff))
    }

    fn digits(&mut self) -> &[u8] {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        let d = self.digits();
        if d.is_empty() {
            self.pos = start;
            return self.err("expected an integer");
        }
        Ok(BigInt::parse_bytes(d, 10).expect("decimal digits"))
    }

    fn varpow(&mut self, exps: &mut [u32]) -> Result<()> {
        self.skip_ws();
        let start = self.pos;
        if !self
            .src
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_alphabetic())
        {
            return self.err("expected a variable name");
        }
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        let var = self
            .ctx
            .variables
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable {
                name: name.to_string(),
                pos: start,
            })?;
        let mut e: u64 = 1;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let at = self.pos;
            let d = self.digits();
            if d.is_empty() {
                return self.err("expected an exponent");
            }
            // more than 10 digits cannot fit below 2^31
            if d.len() > 10 {
                return Err(Error::ExponentOverflow { pos: at });
            }
            e = std::str::from_utf8(d).unwrap().parse().unwrap();
            if e > MAX_EXPONENT as u64 {
                return Err(Error::ExponentOverflow { pos: at });
            }
        }
        let total = exps[var] as u64 + e;
        if total > MAX_EXPONENT as u64 {
            return Err(Error::ExponentOverflow { pos: start });
        }
        exps[var] = total as u32;
        Ok(())
    }
}
