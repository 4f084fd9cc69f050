//! Text syntax for ring elements, e.g. `-G2 + A^2/2` or `-1/(Theta^2*Delta)`.
//!
//! Generators: `Theta` (`Θ`), `A`, `G2`, `P` (`℘`), `Pp` (`℘'`), `G4`; also
//! `Delta` (`Δ`) and `G6`. Extra names can be bound through `env`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{Generator, MeroQJac, QJacError, QJacPoly};

#[derive(Clone, Debug)]
enum Value {
    /// `c Θ^theta Δ^delta` with possibly negative exponents.
    Unit { c: BigRational, theta: i64, delta: i64 },
    General(MeroQJac),
}

impl Value {
    fn into_mero(self) -> MeroQJac {
        match self {
            Value::General(m) => m,
            Value::Unit { c, theta, delta } => {
                let mut num = QJacPoly::constant(c);
                if theta > 0 {
                    num = num.mul_theta(theta as u32);
                }
                if delta > 0 {
                    num = num.mul(&crate::deriv::delta_poly().pow(delta as u32));
                }
                MeroQJac::new(num, (-theta).max(0) as u32, (-delta).max(0) as u32)
            }
        }
    }

    fn mul(self, other: Value) -> Value {
        match (self, other) {
            (Value::Unit { c: c1, theta: t1, delta: d1 }, Value::Unit { c: c2, theta: t2, delta: d2 }) => {
                Value::Unit { c: c1 * c2, theta: t1 + t2, delta: d1 + d2 }
            }
            (a, b) => Value::General(a.into_mero().mul(&b.into_mero())),
        }
    }

    fn neg(self) -> Value {
        match self {
            Value::Unit { c, theta, delta } => Value::Unit { c: -c, theta, delta },
            Value::General(m) => Value::General(m.neg()),
        }
    }

    fn add(self, other: Value) -> Value {
        match (self, other) {
            (Value::Unit { c: c1, theta: t1, delta: d1 }, Value::Unit { c: c2, theta: t2, delta: d2 })
                if t1 == t2 && d1 == d2 =>
            {
                Value::Unit { c: c1 + c2, theta: t1, delta: d1 }
            }
            (a, b) => Value::General(a.into_mero().add(&b.into_mero())),
        }
    }

    fn inv(self) -> Result<Value, QJacError> {
        match self {
            Value::Unit { c, theta, delta } => {
                if c.is_zero() {
                    return Err(QJacError::Parse("division by zero".into()));
                }
                Ok(Value::Unit { c: c.recip(), theta: -theta, delta: -delta })
            }
            Value::General(m) => {
                // a single Θ-monomial over Θ^a Δ^b is still invertible
                let terms: Vec<_> = m.numerator.terms().collect();
                if terms.len() == 1 && terms[0].0[1..].iter().all(|&e| e == 0) {
                    let (e, c) = terms[0];
                    return Ok(Value::Unit {
                        c: c.recip(),
                        theta: m.theta_pow as i64 - e[0] as i64,
                        delta: m.delta_pow as i64,
                    });
                }
                Err(QJacError::Parse(format!("cannot divide by {m}")))
            }
        }
    }

    fn pow(self, k: i64) -> Result<Value, QJacError> {
        let base = if k < 0 { self.inv()? } else { self };
        let mut acc = Value::Unit { c: BigRational::one(), theta: 0, delta: 0 };
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(base.clone());
        }
        Ok(acc)
    }
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    env: &'a HashMap<String, MeroQJac>,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: &str) -> Result<T, QJacError> {
        Err(QJacError::Parse(format!("{msg} at position {}", self.pos)))
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

    fn expr(&mut self) -> Result<Value, QJacError> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                '+' => {
                    self.pos += 1;
                    acc = acc.add(self.term()?);
                }
                '-' => {
                    self.pos += 1;
                    acc = acc.add(self.term()?.neg());
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Value, QJacError> {
        let mut acc = self.unary()?;
        while let Some(c) = self.peek() {
            match c {
                '*' => {
                    self.pos += 1;
                    acc = acc.mul(self.unary()?);
                }
                '/' => {
                    self.pos += 1;
                    acc = acc.mul(self.unary()?.inv()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Value, QJacError> {
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                Ok(self.unary()?.neg())
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn integer(&mut self) -> Result<BigInt, QJacError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        Ok(s.parse().expect("digits"))
    }

    fn power(&mut self) -> Result<Value, QJacError> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let paren = self.peek() == Some('(');
            if paren {
                self.pos += 1;
            }
            let neg = self.peek() == Some('-');
            if neg {
                self.pos += 1;
            }
            let k: i64 = i64::try_from(self.integer()?).map_err(|e| QJacError::Parse(e.to_string()))?;
            if paren {
                if self.peek() != Some(')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
            }
            return base.pow(if neg { -k } else { k });
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Value, QJacError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(Value::Unit { c: BigRational::from_integer(n), theta: 0, delta: 0 })
            }
            Some(c) if c.is_alphabetic() || c == '℘' || c == 'Θ' || c == 'Δ' => {
                let start = self.pos;
                while self.pos < self.chars.len() {
                    let c = self.chars[self.pos];
                    if c.is_alphanumeric() || c == '_' || c == '℘' || c == '\'' || c == '′' {
                        self.pos += 1;
                    } else {
                        break;
                    }
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                self.name(&name)
            }
            _ => self.err("unexpected input"),
        }
    }

    fn name(&self, name: &str) -> Result<Value, QJacError> {
        if let Some(v) = self.env.get(name) {
            return Ok(Value::General(v.clone()));
        }
        if name == "Theta" || name == "Θ" {
            return Ok(Value::Unit { c: BigRational::one(), theta: 1, delta: 0 });
        }
        if name == "Delta" || name == "Δ" {
            return Ok(Value::Unit { c: BigRational::one(), theta: 0, delta: 1 });
        }
        if name == "G6" {
            return Ok(Value::General(MeroQJac::poly(crate::deriv::g6_poly())));
        }
        match Generator::from_name(name) {
            Some(g) => Ok(Value::General(MeroQJac::generator(g))),
            None => self.err(&format!("unknown name {name:?}")),
        }
    }
}

/// Parses an expression, binding extra names from `env`.
pub fn parse_mero_with(text: &str, env: &HashMap<String, MeroQJac>) -> Result<MeroQJac, QJacError> {
    let mut p = Parser { chars: text.chars().collect(), pos: 0, env };
    let v = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(v.into_mero())
}

pub fn parse_mero(text: &str) -> Result<MeroQJac, QJacError> {
    parse_mero_with(text, &HashMap::new())
}

/// Parses a polynomial (no `Θ` or `Δ` denominators).
pub fn parse_poly(text: &str) -> Result<QJacPoly, QJacError> {
    let m = parse_mero(text)?;
    if !m.is_poly() {
        return Err(QJacError::Parse(format!("{text:?} is not a polynomial")));
    }
    Ok(m.numerator)
}

#[cfg(test)]
mod tests {
    use super::*;
    use series_core::arith::rat;

    #[test]
    fn simple_polynomial() {
        let f = parse_poly("-G2 + A^2/2").unwrap();
        let want = QJacPoly::generator(Generator::G2)
            .neg()
            .add(&QJacPoly::generator(Generator::A).pow(2).scale(&rat(1, 2)));
        assert_eq!(f, want);
    }

    #[test]
    fn quotient_by_theta_and_delta() {
        let f = parse_mero("-1/(Theta^2*Delta)").unwrap();
        assert_eq!(f, MeroQJac::new(QJacPoly::from_int(-1), 2, 1));
        let g = parse_mero("Theta^(-2) * A").unwrap();
        assert_eq!(g, MeroQJac::new(QJacPoly::generator(Generator::A), 2, 0));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_mero("A + ").is_err());
        assert!(parse_mero("1/A").is_err());
        assert!(parse_mero("Foo").is_err());
    }
}
