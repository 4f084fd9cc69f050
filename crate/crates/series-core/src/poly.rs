//! Dense integer polynomials in one variable, coefficients in ascending order.
//!
//! These are the building blocks of [`crate::RationalFunction`]. Every function
//! returns trimmed vectors (no trailing zeros); the zero polynomial is `[]`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type IntPoly = Vec<BigInt>;

pub fn trim(p: &mut IntPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub fn is_monomial(p: &[BigInt]) -> bool {
    !p.is_empty() && p[..p.len() - 1].iter().all(|c| c.is_zero())
}

/// Index of the lowest nonzero coefficient; `None` for the zero polynomial.
pub fn valuation(p: &[BigInt]) -> Option<usize> {
    p.iter().position(|c| !c.is_zero())
}

pub fn shift_down(p: &[BigInt], k: usize) -> IntPoly {
    p[k.min(p.len())..].to_vec()
}

pub fn shift_up(p: &[BigInt], k: usize) -> IntPoly {
    if p.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); k];
    out.extend_from_slice(p);
    out
}

pub fn add(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x + y,
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => unreachable!(),
        };
        out.push(x);
    }
    trim(&mut out);
    out
}

pub fn neg(a: &[BigInt]) -> IntPoly {
    a.iter().map(|c| -c).collect()
}

pub fn sub(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    add(a, &neg(b))
}

pub fn scale(a: &[BigInt], c: &BigInt) -> IntPoly {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|x| x * c).collect()
}

pub fn mul(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    trim(&mut out);
    out
}

pub fn derivative(a: &[BigInt]) -> IntPoly {
    let mut out: IntPoly = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect();
    trim(&mut out);
    out
}

/// Nonnegative gcd of the coefficients (zero for the zero polynomial).
pub fn content(a: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in a {
        if !c.is_zero() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
    }
    g
}

/// Splits `a` as `c * p` with `p` primitive and positive leading coefficient.
pub fn primitive_part(a: &[BigInt]) -> (BigInt, IntPoly) {
    if a.is_empty() {
        return (BigInt::zero(), Vec::new());
    }
    let mut c = content(a);
    if a.last().unwrap().is_negative() {
        c = -c;
    }
    if c.is_one() {
        return (c, a.to_vec());
    }
    let p = a.iter().map(|x| x / &c).collect();
    (c, p)
}

/// Exact division in Z[s]; `None` when `b` does not divide `a`.
pub fn div_exact(a: &[BigInt], b: &[BigInt]) -> Option<IntPoly> {
    assert!(!b.is_empty(), "division by the zero polynomial");
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    if b.len() == 1 {
        let d = &b[0];
        let mut out = Vec::with_capacity(a.len());
        for c in a {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return None;
            }
            out.push(q);
        }
        return Some(out);
    }
    let mut rem = a.to_vec();
    let lb = b.last().unwrap();
    let n = a.len() - b.len() + 1;
    let mut q = vec![BigInt::zero(); n];
    for i in (0..n).rev() {
        let top = &rem[i + b.len() - 1];
        if top.is_zero() {
            continue;
        }
        let (qi, r) = top.div_rem(lb);
        if !r.is_zero() {
            return None;
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                rem[i + j] -= &qi * bj;
            }
        }
        q[i] = qi;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return None;
    }
    trim(&mut q);
    Some(q)
}

/// Pseudo-remainder of `a` by `b`.
fn prem(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let mut r = a.to_vec();
    let lb = b.last().unwrap().clone();
    while r.len() >= b.len() && !r.is_empty() {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - b.len();
        for c in r.iter_mut() {
            *c *= &lb;
        }
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] -= &lr * bj;
        }
        trim(&mut r);
    }
    r
}

/// Greatest common divisor, primitive with positive leading coefficient.
/// `gcd(0, 0)` is `[1]` so callers can always divide by it.
pub fn gcd(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    if a.is_empty() && b.is_empty() {
        return vec![BigInt::one()];
    }
    if a.is_empty() {
        return primitive_part(b).1;
    }
    if b.is_empty() {
        return primitive_part(a).1;
    }
    // split off the power of s, which is by far the most common common factor
    let va = valuation(a).unwrap();
    let vb = valuation(b).unwrap();
    let v = va.min(vb);
    let a0 = shift_down(a, va);
    let b0 = shift_down(b, vb);
    let core = gcd_nonmonomial(&a0, &b0);
    shift_up(&core, v)
}

fn gcd_nonmonomial(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    if a.len() == 1 || b.len() == 1 {
        return vec![BigInt::one()];
    }
    let (_, mut x) = primitive_part(a);
    let (_, mut y) = primitive_part(b);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    if div_exact(&x, &y).is_some() {
        return y;
    }
    while !y.is_empty() {
        let r = prem(&x, &y);
        x = y;
        y = primitive_part(&r).1;
        if y.len() == 1 {
            return vec![BigInt::one()];
        }
    }
    primitive_part(&x).1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> IntPoly {
        let mut out: IntPoly = v.iter().map(|&c| BigInt::from(c)).collect();
        trim(&mut out);
        out
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (1 - s^2)(2 + s) and (1 - s^2) s^3
        let f = mul(&p(&[1, 0, -1]), &p(&[2, 1]));
        let g = mul(&p(&[1, 0, -1]), &p(&[0, 0, 0, 1]));
        assert_eq!(gcd(&f, &g), p(&[-1, 0, 1]));
    }

    #[test]
    fn gcd_coprime_is_one() {
        assert_eq!(gcd(&p(&[1, 1]), &p(&[1, -1])), p(&[1]));
    }

    #[test]
    fn exact_division() {
        let f = mul(&p(&[3, 1]), &p(&[1, 0, 2]));
        assert_eq!(div_exact(&f, &p(&[1, 0, 2])), Some(p(&[3, 1])));
        assert_eq!(div_exact(&f, &p(&[1, 1])), None);
    }

    #[test]
    fn primitive_sign() {
        let (c, q) = primitive_part(&p(&[4, -6]));
        assert_eq!(c, BigInt::from(-2));
        assert_eq!(q, p(&[-2, 3]));
    }
}
