//! The ambient ring `Q[x_1..x_d]` (read locally at the origin) and the
//! polynomial text format.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError, Result};
use crate::monomial::{Monomial, TermOrder};
use crate::poly::{Coeff, Polynomial};

/// Largest ring dimension accepted from user input.
pub const MAX_DIM: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingCtx {
    vars: Vec<String>,
    order: TermOrder,
}

impl RingCtx {
    pub fn new<S: AsRef<str>>(vars: &[S], order: TermOrder) -> Result<Self> {
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        if vars.is_empty() || vars.len() > MAX_DIM {
            return Err(Error::InvalidRing(format!("dimension must be between 1 and {MAX_DIM}, got {}", vars.len())));
        }
        for (i, v) in vars.iter().enumerate() {
            let mut chars = v.chars();
            let ok = chars.next().is_some_and(|c| c.is_ascii_alphabetic())
                && chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !ok {
                return Err(Error::InvalidRing(format!("bad variable name {v:?}")));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidRing(format!("duplicate variable {v:?}")));
            }
        }
        Ok(RingCtx { vars, order })
    }

    /// `Q[x,y]` with degrevlex.
    pub fn xy() -> Self {
        Self::new(&["x", "y"], TermOrder::DegRevLex).unwrap()
    }

    /// `Q[x,y,z]` with degrevlex.
    pub fn xyz() -> Self {
        Self::new(&["x", "y", "z"], TermOrder::DegRevLex).unwrap()
    }

    pub fn dim(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial::monomial(Monomial::var(self.dim(), i), self.order)
    }

    pub fn monomial(&self, exps: &[u32]) -> Polynomial {
        Polynomial::monomial(Monomial::new(exps), self.order)
    }

    /// Parses a polynomial, panicking on malformed input. For literals in
    /// tests and examples.
    pub fn poly(&self, text: &str) -> Polynomial {
        self.parse_poly(text).unwrap_or_else(|e| panic!("{text:?}: {e}"))
    }

    pub fn parse_poly(&self, text: &str) -> std::result::Result<Polynomial, ParseError> {
        self.parse_poly_at(text, 1, 1)
    }

    /// Parses `text`, reporting errors as if it started at `line:col`.
    pub fn parse_poly_at(&self, text: &str, line: usize, col: usize) -> std::result::Result<Polynomial, ParseError> {
        let mut p = PolyParser { ring: self, src: text.as_bytes(), pos: 0, line, col0: col };
        p.parse()
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        let mut s = String::new();
        for (i, &e) in m.exps().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !s.is_empty() {
                s.push('*');
            }
            s.push_str(&self.vars[i]);
            if e > 1 {
                let _ = write!(s, "^{e}");
            }
        }
        if s.is_empty() {
            s.push('1');
        }
        s
    }

    pub fn format_poly(&self, f: &Polynomial) -> String {
        if f.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, t) in f.terms().iter().enumerate() {
            let neg = t.coeff.is_negative();
            let abs = t.coeff.abs();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if t.mono.is_one() {
                s.push_str(&format_rational(&abs));
            } else if abs.is_one() {
                s.push_str(&self.format_monomial(&t.mono));
            } else {
                let _ = write!(s, "{}*{}", format_rational(&abs), self.format_monomial(&t.mono));
            }
        }
        s
    }
}

/// `p/q`, or `p` for integers.
pub fn format_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

struct PolyParser<'a> {
    ring: &'a RingCtx,
    src: &'a [u8],
    pos: usize,
    line: usize,
    col0: usize,
}

impl PolyParser<'_> {
    fn err(&self, expected: &str) -> ParseError {
        ParseError { line: self.line, col: self.col0 + self.pos, expected: expected.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && (self.src[self.pos] == b' ' || self.src[self.pos] == b'\t') {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn integer(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        std::str::from_utf8(&self.src[start..self.pos]).ok()?.parse().ok()
    }

    fn variable(&mut self) -> Option<usize> {
        let rest = &self.src[self.pos..];
        let mut best: Option<(usize, usize)> = None;
        for (i, v) in self.ring.vars.iter().enumerate() {
            if rest.starts_with(v.as_bytes()) && best.is_none_or(|(_, len)| v.len() > len) {
                best = Some((i, v.len()));
            }
        }
        let (i, len) = best?;
        self.pos += len;
        Some(i)
    }

    fn parse(&mut self) -> std::result::Result<Polynomial, ParseError> {
        let n = self.ring.dim();
        let mut terms: Vec<(Coeff, Monomial)> = Vec::new();
        self.skip_ws();
        let mut sign = BigInt::one();
        match self.peek() {
            Some(b'-') => {
                sign = -sign;
                self.pos += 1;
            }
            Some(b'+') => self.pos += 1,
            _ => {}
        }
        loop {
            self.skip_ws();
            let (coeff, mono) = self.term(n)?;
            terms.push((coeff * BigRational::from_integer(sign.clone()), mono));
            self.skip_ws();
            match self.peek() {
                None => break,
                Some(b'+') => sign = BigInt::one(),
                Some(b'-') => sign = -BigInt::one(),
                Some(_) => return Err(self.err("'+', '-' or end of polynomial")),
            }
            self.pos += 1;
        }
        Ok(Polynomial::from_terms(n, self.ring.order, terms))
    }

    fn term(&mut self, n: usize) -> std::result::Result<(Coeff, Monomial), ParseError> {
        let mut coeff = Coeff::one();
        let mut have_coeff = false;
        if let Some(num) = self.integer() {
            have_coeff = true;
            let mut c = BigRational::from_integer(num);
            if self.peek() == Some(b'/') {
                self.pos += 1;
                let den = self.integer().ok_or_else(|| self.err("denominator"))?;
                if den.is_zero() {
                    return Err(self.err("nonzero denominator"));
                }
                c /= BigRational::from_integer(den);
            }
            coeff = c;
        }
        let mut exps = vec![0u32; n];
        let mut have_var = false;
        loop {
            self.skip_ws();
            let save = self.pos;
            if self.peek() == Some(b'*') {
                self.pos += 1;
                self.skip_ws();
            }
            match self.variable() {
                Some(i) => {
                    have_var = true;
                    let mut e = 1u32;
                    self.skip_ws();
                    if self.peek() == Some(b'^') {
                        self.pos += 1;
                        self.skip_ws();
                        let k = self.integer().ok_or_else(|| self.err("exponent"))?;
                        e = u32::try_from(k).ok().filter(|&k| k <= u16::MAX as u32).ok_or_else(|| self.err("exponent below 65536"))?;
                    }
                    exps[i] = exps[i].checked_add(e).filter(|&k| k <= u16::MAX as u32).ok_or_else(|| self.err("exponent below 65536"))?;
                }
                None => {
                    if self.pos != save {
                        return Err(self.err("variable"));
                    }
                    self.pos = save;
                    break;
                }
            }
        }
        if !have_coeff && !have_var {
            return Err(self.err("coefficient or variable"));
        }
        Ok((coeff, Monomial::new(&exps)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let r = RingCtx::xy();
        let f = r.poly("x^6 - 3/2*x*y^5 + x^4*y + 7");
        assert_eq!(r.format_poly(&f), "x^6 - 3/2*x*y^5 + x^4*y + 7");
        assert_eq!(r.poly("xy"), r.poly("x*y"));
        assert_eq!(r.poly("2 x^1 y"), r.poly("2*x*y"));
        assert_eq!(r.format_poly(&r.poly("-y + x - x")), "-y");
        assert_eq!(r.format_poly(&r.poly("0")), "0");
    }

    #[test]
    fn parse_errors_are_positioned() {
        let r = RingCtx::xy();
        let e = r.parse_poly("x + z").unwrap_err();
        assert_eq!((e.line, e.col), (1, 5));
        assert!(r.parse_poly("x^").is_err());
        assert!(r.parse_poly("1/0").is_err());
        assert!(r.parse_poly("").is_err());
    }

    #[test]
    fn ring_validation() {
        assert!(RingCtx::new(&["x", "x"], TermOrder::DegRevLex).is_err());
        assert!(RingCtx::new(&["a", "b", "c", "d", "e"], TermOrder::DegRevLex).is_err());
        assert!(RingCtx::new::<&str>(&[], TermOrder::DegRevLex).is_err());
        assert!(RingCtx::new(&["x1", "x2"], TermOrder::Lex).is_ok());
    }
}
