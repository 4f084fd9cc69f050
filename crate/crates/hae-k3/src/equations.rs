//! Right-hand sides of the `d/dA` and `d/dG2` equations and the `q^0` data.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use qjac_ring::QJacPoly;
use series_core::arith::{binomial, factorial};
use series_core::RationalFunction;

use crate::{Family, K3Error, SeriesTable};

/// `n!` as a rational; `None` for negative `n` (such terms are dropped).
fn fact(n: i64) -> Option<BigRational> {
    (n >= 0).then(|| BigRational::from_integer(factorial(n as u64)))
}

/// `a! b! / c!`, or `None` when any argument is negative.
fn fact_ratio(a: i64, b: i64, c: i64) -> Option<BigRational> {
    Some(fact(a)? * fact(b)? / fact(c)?)
}

/// Right-hand side of `d/dA F = ...`.
pub fn rhs_d_a(family: Family, k: i64, l: i64, t: &SeriesTable) -> Result<QJacPoly, K3Error> {
    Ok(match family {
        Family::A => t.a(k - 1)?,
        Family::B => t.b(k - 1)?.add(&t.a(k - 1)?),
        Family::C => t.c(k - 1, l)?.add(&t.c(k, l - 1)?),
    })
}

/// Right-hand side of `d/dG2 F = ...`.
pub fn rhs_d_g2(family: Family, k: i64, l: i64, t: &SeriesTable) -> Result<QJacPoly, K3Error> {
    let mut out = QJacPoly::zero();
    match family {
        Family::A => {
            for m1 in 0..=k - 2 {
                let m2 = k - 2 - m1;
                if let Some(c) = fact_ratio(m1, m2, k - 1) {
                    out = out.sub(&t.a(m1)?.mul(&t.a(m2)?).scale(&c));
                }
            }
        }
        Family::B => {
            if let Some(fk) = fact(k - 1) {
                let two = BigRational::from_integer(BigInt::from(2));
                for m1 in 2..=k {
                    let m2 = k - m1;
                    let c = fact(m1 - 2).unwrap() * fact(m2).unwrap() * &two / &fk;
                    out = out.sub(&t.a(m1 - 2)?.mul(&t.b(m2)?).scale(&c));
                }
            }
        }
        Family::C => {
            let two = BigRational::from_integer(BigInt::from(2));
            for m1 in 1..=k {
                let m2 = k - m1;
                let c = fact_ratio(m1 - 1, m2, k).unwrap() * &two;
                out = out.sub(&t.a(m1 - 1)?.mul(&t.c(m2 - 1, l)?).scale(&c));
            }
            for m1 in 1..=l {
                let m2 = l - m1;
                let c = fact_ratio(m1 - 1, m2, l).unwrap() * &two;
                out = out.sub(&t.a(m1 - 1)?.mul(&t.c(k, m2 - 1)?).scale(&c));
            }
            if k >= 0 && l >= 0 {
                let multi = BigRational::from_integer(binomial(k + l, k)) * &two;
                out = out.add(&t.a(k + l)?.scale(&multi));
                out = out.sub(&t.a(k)?.mul(&t.a(l)?).scale(&two));
            }
        }
    }
    Ok(out)
}

/// `q^0` coefficient of `A_k`:
/// `(-1)^k/(k+1)! (1 - p^(k+1))/(1 - p)^(k+1)`.
pub fn leading_a(k: i64) -> RationalFunction {
    assert!(k >= 0);
    let sign = if k % 2 == 0 { BigRational::one() } else { -BigRational::one() };
    let c = sign / fact(k + 1).unwrap();
    let one = RationalFunction::one();
    let num = one.sub(&RationalFunction::p_pow(k + 1));
    let den = one.sub(&RationalFunction::p_pow(1)).pow(k + 1).expect("nonzero");
    num.div(&den).expect("nonzero").scale_by(&c)
}

/// `q^0` coefficient of each family member.
pub fn boundary(family: Family, k: i64) -> RationalFunction {
    match family {
        Family::A => leading_a(k),
        Family::B if k == 0 => RationalFunction::from_int(-1),
        Family::B | Family::C => RationalFunction::zero(),
    }
}

/// `sum_{l=0}^{k} (-1)^(n-1+k) / ((k+1-l)! l!) * binom(n, l+1)`.
pub fn leading_brute(n: i64, k: i64) -> BigRational {
    let sign = if (n - 1 + k).rem_euclid(2) == 0 { BigRational::one() } else { -BigRational::one() };
    let mut s = BigRational::zero();
    for l in 0..=k {
        let b = BigRational::from_integer(binomial(n, l + 1));
        s += b / (fact(k + 1 - l).unwrap() * fact(l).unwrap());
    }
    sign * s
}
