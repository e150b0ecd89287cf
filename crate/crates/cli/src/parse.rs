//! Inline ideal syntax:
//!
//! ```text
//! ideal := mono ("," mono)*
//! mono  := term ("*" term)*
//! term  := var ("^" nat)?
//! var   := letter (letter | digit | "_")*
//! ```
//!
//! Whitespace between tokens is ignored.

use stanley_core::{Monomial, MonomialIdeal, RingContext};

use crate::CliError;

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn error(&self, msg: impl Into<String>) -> CliError {
        CliError::Parse { pos: self.pos, msg: msg.into() }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn var(&mut self) -> Result<(usize, &'a str), CliError> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() => self.pos += 1,
            Some(c) => return Err(self.error(format!("expected a variable, found '{c}'"))),
            None => return Err(self.error("expected a variable, found end of input")),
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        Ok((start, &self.src[start..self.pos]))
    }

    fn nat(&mut self) -> Result<u32, CliError> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an exponent"));
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| CliError::Parse { pos: start, msg: "exponent too large".into() })
    }
}

type RawTerm<'a> = (usize, &'a str, u32);

fn parse_raw(src: &str) -> Result<Vec<Vec<RawTerm<'_>>>, CliError> {
    let mut cur = Cursor { src, pos: 0 };
    cur.skip_ws();
    if cur.peek().is_none() {
        return Err(cur.error("empty generator list"));
    }
    let mut monos = Vec::new();
    loop {
        let mut terms = Vec::new();
        loop {
            let (pos, name) = cur.var()?;
            let e = if cur.eat('^') { cur.nat()? } else { 1 };
            terms.push((pos, name, e));
            if !cur.eat('*') {
                break;
            }
        }
        monos.push(terms);
        if !cur.eat(',') {
            break;
        }
    }
    cur.skip_ws();
    if let Some(c) = cur.peek() {
        return Err(cur.error(format!("unexpected '{c}'")));
    }
    Ok(monos)
}

/// Parses an ideal. Without `vars`, variables are collected in order of first
/// appearance; with `vars`, any other name is rejected.
pub fn parse_ideal(src: &str, vars: Option<&[String]>) -> Result<MonomialIdeal, CliError> {
    let monos = parse_raw(src)?;
    let names: Vec<String> = match vars {
        Some(v) => v.to_vec(),
        None => {
            let mut names: Vec<String> = Vec::new();
            for &(_, name, _) in monos.iter().flatten() {
                if !names.iter().any(|n| n == name) {
                    names.push(name.to_string());
                }
            }
            names
        }
    };
    let ring = RingContext::new(names)?;
    let mut gens = Vec::with_capacity(monos.len());
    for terms in &monos {
        let mut e = vec![0u32; ring.n()];
        for &(pos, name, x) in terms {
            let i = ring
                .index_of(name)
                .ok_or_else(|| CliError::Parse { pos, msg: format!("unknown variable '{name}'") })?;
            e[i] = e[i]
                .checked_add(x)
                .ok_or_else(|| CliError::Parse { pos, msg: "exponent too large".into() })?;
        }
        gens.push(Monomial::new(e));
    }
    Ok(MonomialIdeal::new(ring, gens)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use stanley_core::Error;

    #[test]
    fn examples() {
        let i = parse_ideal("x1^2, x1*x2, x3^2", None).unwrap();
        assert_eq!(i, MonomialIdeal::from_exponents(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 0, 2]]).unwrap());
        assert_eq!(parse_ideal("x1", None).unwrap().to_string(), "x1");
        assert!(matches!(parse_ideal("x1^0", None), Err(CliError::Core(Error::UnitIdeal))));
    }

    #[test]
    fn first_appearance_order_and_explicit_vars() {
        let i = parse_ideal("y*x, z^3", None).unwrap();
        assert_eq!(i.ring().names(), ["y", "x", "z"]);
        let vars: Vec<String> = ["x", "y", "z", "w"].map(String::from).to_vec();
        let i = parse_ideal("y*x, z^3", Some(&vars)).unwrap();
        assert_eq!(i.n(), 4);
        assert_eq!(i.to_string(), "x*y, z^3");
        assert!(matches!(parse_ideal("q", Some(&vars)), Err(CliError::Parse { pos: 0, .. })));
    }

    #[test]
    fn repeated_variable_in_a_term_adds() {
        assert_eq!(parse_ideal("x*x^2", None).unwrap().to_string(), "x^3");
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let pos = |s: &str| match parse_ideal(s, None) {
            Err(CliError::Parse { pos, .. }) => pos,
            other => panic!("{other:?}"),
        };
        assert_eq!(pos(""), 0);
        assert_eq!(pos("x1,"), 3);
        assert_eq!(pos("x1^"), 3);
        assert_eq!(pos("x1 ** x2"), 4);
        assert_eq!(pos("1"), 0);
        assert_eq!(pos("x1 x2"), 3);
        assert_eq!(pos("x^4294967296"), 2);
    }
}
