//! Residue formulas for `A_k`, `B_k`, `C_{kl}` as Laurent jets in `z`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use qjac_ring::expansion::eisenstein;
use series_core::arith::{binomial, factorial};
use series_core::{JetSeries, QSeries};

use crate::{Family, K3Error};

type Jet = JetSeries<BigRational>;
type Q = QSeries<BigRational>;

fn r(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn fact(n: i64) -> BigRational {
    BigRational::from_integer(factorial(n as u64))
}

fn g(m: i64, qorder: i64) -> Result<Q, K3Error> {
    if m % 2 == 1 {
        return Ok(Q::zero(qorder));
    }
    Ok(eisenstein(m as u32, qorder)?)
}

/// `A(z) = 1/z - 2 sum_{m >= 2} G_m z^(m-1)/(m-1)!` through `z^zorder`.
pub fn a_jet(zorder: i64, qorder: i64) -> Result<Jet, K3Error> {
    let mut terms = vec![(-1, Q::one(qorder))];
    for m in 2..=zorder + 1 {
        terms.push((m - 1, g(m, qorder)?.scale(&(r(-2) / fact(m - 1)))));
    }
    Ok(Jet::univariate("z", -1, zorder, qorder, terms))
}

fn derivative(j: &Jet) -> Jet {
    let mut out = Jet::new(j.vars().to_vec(), vec![j.lowpow()[0] - 1], vec![j.trunc()[0] - 1], j.qtrunc());
    for (e, c) in j.terms() {
        if e[0] != 0 {
            out.add_term(vec![e[0] - 1], &c.scale(&r(e[0])));
        }
    }
    out
}

struct Powers {
    pw: Vec<Jet>,
    qorder: i64,
}

impl Powers {
    fn new(a: &Jet, max: usize) -> Self {
        let mut pw = vec![a.pow(0)];
        for i in 1..=max {
            let next = pw[i - 1].mul(a);
            pw.push(next);
        }
        Powers { pw, qorder: a.qtrunc() }
    }

    /// `[x^n] A(x)^j`.
    fn coeff(&self, j: i64, n: i64) -> Q {
        let p = &self.pw[j as usize];
        if n < p.lowpow()[0] {
            return Q::zero(self.qorder);
        }
        p.coeff(&[n])
    }
}

fn zero_jet(trunc: i64, qorder: i64) -> Jet {
    Jet::new(vec!["z".into()], vec![0], vec![trunc], qorder)
}

/// Jet of the residue formula for `A_k`, `B_k` or `C_{kl}` through `z^zorder`,
/// with coefficients through `q^qorder`.
pub fn residue_eval(family: Family, k: i64, l: i64, zorder: i64, qorder: i64) -> Result<Jet, K3Error> {
    if k < 0 || l < 0 || qorder < 0 {
        return Err(K3Error::Invalid(format!("residue of ({k}, {l}) at q-order {qorder}")));
    }
    let inner = zorder.max(0) + 2 * (k + l) + 8;
    let a = a_jet(inner, qorder)?;
    let pw = Powers::new(&a, (k + l + 3) as usize);
    let mut out = zero_jet(inner, qorder);
    match family {
        Family::A => {
            for j in 0..=k + 1 {
                let c = BigRational::from_integer(binomial(k + 1, j)) / fact(k + 1);
                let term = pw.pw[(k + 1 - j) as usize].mul_series(&pw.coeff(j, -1).scale(&c));
                out = out.add(&term);
            }
        }
        Family::B => {
            let mut derivs = vec![a.clone()];
            for n in 1..=k {
                let d = derivative(&derivs[n as usize - 1]);
                derivs.push(d);
            }
            for j in 0..=k {
                let c = BigRational::from_integer(binomial(k, j)) / fact(k);
                let mut bracket = zero_jet(inner, qorder).sub(&Jet::constant(
                    vec!["z".into()],
                    vec![inner],
                    pw.coeff(j + 1, -1),
                ));
                for n in 0..j {
                    let coef = pw.coeff(j, -1 - n).scale(&(BigRational::one() / fact(n)));
                    bracket = bracket.add(&derivs[n as usize].mul_series(&coef));
                }
                out = out.add(&pw.pw[(k - j) as usize].mul(&bracket).scale(&c));
            }
        }
        Family::C => {
            let norm = BigRational::one() / (fact(k + 1) * fact(l + 1));
            for n in 0..=k + 1 {
                for m in 0..=l + 1 {
                    let s = pair_residue(&pw, n, m, qorder)?;
                    if s.is_zero() {
                        continue;
                    }
                    let c = &norm
                        * BigRational::from_integer(binomial(k + 1, n) * binomial(l + 1, m));
                    let e = (k + 1 - n + l + 1 - m) as usize;
                    out = out.add(&pw.pw[e].mul_series(&s.scale(&c)));
                }
            }
        }
    }
    if out.trunc()[0] < zorder {
        return Err(K3Error::InsufficientTruncation { need: zorder, have: out.trunc()[0] });
    }
    Ok(out.truncate(&[zorder]))
}

/// `Res_{x1} Res_{x2} A(x1)^n A(x2)^m A'(x1 - x2)` in the region `|x2| < |x1|`.
fn pair_residue(pw: &Powers, n: i64, m: i64, qorder: i64) -> Result<Q, K3Error> {
    let mut s = Q::zero(qorder);
    for j in 0..m {
        let c2 = pw.coeff(m, -1 - j);
        if c2.is_zero() {
            continue;
        }
        // singular part -(j+1) x2^j / x1^(j+2)
        let mut inner = pw.coeff(n, j + 1).scale(&r(-(j + 1)));
        // regular part -2 G_{i+j+2} (x1 - x2)^(i+j) / (i+j)!
        for i in 0..n {
            let sign = if j % 2 == 0 { r(-2) } else { r(2) };
            let c = sign * BigRational::from_integer(binomial(i + j, i)) / fact(i + j);
            let gs = g(i + j + 2, qorder)?;
            if gs.is_zero() {
                continue;
            }
            inner = inner.add(&gs.mul(&pw.coeff(n, -1 - i)).scale(&c));
        }
        s = s.add(&inner.mul(&c2));
    }
    Ok(s)
}
