use num_bigint::BigInt;
use num_rational::BigRational;

use crate::{CohClass, CohError, Geometry};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Name(String),
    Op(char),
}

fn lex(s: &str) -> Result<Vec<Tok>, CohError> {
    let mut out = Vec::new();
    let cs: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            let t: String = cs[st..i].iter().collect();
            out.push(Tok::Num(t.parse().unwrap()));
        } else if c.is_alphabetic() || c == '_' {
            // one letter per generator so that `Hp` reads as `H*p`
            out.push(Tok::Name(c.to_string()));
            i += 1;
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(CohError::Parse(format!("unexpected character {c:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    g: &'a Geometry,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<CohClass, CohError> {
        let neg = self.eat('-');
        let mut acc = self.term()?;
        if neg {
            acc = acc.neg();
        }
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<CohClass, CohError> {
        let mut acc = self.factor()?;
        loop {
            let explicit = self.eat('*');
            match self.peek() {
                Some(Tok::Num(_)) | Some(Tok::Name(_)) | Some(Tok::Op('(')) => {
                    let f = self.factor()?;
                    acc = self.g.x.cup(&acc, &f);
                }
                _ if explicit => return Err(CohError::Parse("dangling '*'".into())),
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<CohClass, CohError> {
        let base = self.atom()?;
        if self.eat('^') {
            let Some(Tok::Num(n)) = self.peek().cloned() else {
                return Err(CohError::Parse("expected exponent".into()));
            };
            self.pos += 1;
            let n: u32 = n.try_into().map_err(|_| CohError::Parse("exponent too large".into()))?;
            let mut acc = self.g.x.one();
            for _ in 0..n {
                acc = self.g.x.cup(&acc, &base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<CohClass, CohError> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                let mut r = BigRational::from_integer(n);
                if self.eat('/') {
                    let Some(Tok::Num(d)) = self.peek().cloned() else {
                        return Err(CohError::Parse("expected denominator".into()));
                    };
                    self.pos += 1;
                    r /= BigRational::from_integer(d);
                }
                Ok(self.g.x.one().scale(&r))
            }
            Some(Tok::Name(s)) => {
                self.pos += 1;
                self.g
                    .generators
                    .iter()
                    .find(|(n, _)| *n == s)
                    .map(|(_, c)| c.clone())
                    .ok_or_else(|| CohError::Parse(format!("unknown generator {s}")))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(CohError::Parse("expected ')'".into()));
                }
                Ok(e)
            }
            t => Err(CohError::Parse(format!("unexpected token {t:?}"))),
        }
    }
}

pub(crate) fn parse(g: &Geometry, s: &str) -> Result<CohClass, CohError> {
    let mut p = Parser { toks: lex(s)?, pos: 0, g };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(CohError::Parse(format!("trailing input in {s:?}")));
    }
    Ok(out)
}
