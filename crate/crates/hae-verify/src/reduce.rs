//! String, divisor, `ch̃_0`, `ch̃_1` and `ch̃_2(W)` rules.

use num_rational::BigRational;
use num_traits::{One, Zero};
use qjac_ring::{Generator, MeroQJac, QJacError};

use crate::expr::{Expr, Key};
use crate::insertion::Slot;
use crate::Theory;

/// Sorts the slots, returning the Koszul sign, or `None` when a repeated
/// odd slot makes the product vanish.
pub fn canonicalize(slots: &[Slot], th: &Theory) -> Option<(BigRational, Vec<Slot>)> {
    let mut v = slots.to_vec();
    let mut sign = 1i32;
    // insertion sort, tracking swaps of two odd entries
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            if th.is_odd(v[j - 1].1) && th.is_odd(v[j].1) {
                sign = -sign;
            }
            v.swap(j - 1, j);
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1] && th.is_odd(w[0].1)) {
        return None;
    }
    Some((BigRational::from_integer(sign.into()), v))
}

/// Sign of moving the slot at `i` to the front.
pub fn front_sign(slots: &[Slot], i: usize, th: &Theory) -> BigRational {
    if !th.koszul || !th.is_odd(slots[i].1) {
        return BigRational::one();
    }
    let before = slots[..i].iter().filter(|s| th.is_odd(s.1)).count();
    if before % 2 == 1 {
        -BigRational::one()
    } else {
        BigRational::one()
    }
}

fn dimension_ok(th: &Theory, beta: i64, slots: &[Slot]) -> bool {
    let Some(slope) = th.vdim_slope else {
        return true;
    };
    let deg: i64 = slots
        .iter()
        .map(|(k, i)| 2 * k - 6 + th.geometry.x.degree[*i] as i64)
        .sum();
    deg == slope * beta
}

fn mero(c: &BigRational) -> MeroQJac {
    MeroQJac::constant(c.clone())
}

/// Rewrites `Z_β(Π ch̃_{k_i}(e_i))` in terms of irreducible correlators.
pub fn reduce(th: &Theory, beta: i64, slots: &[Slot]) -> Result<Expr, QJacError> {
    if slots.iter().any(|(k, _)| *k < 0) || !dimension_ok(th, beta, slots) {
        return Ok(Expr::zero());
    }
    let x = &th.geometry.x;
    for (i, &(k, idx)) in slots.iter().enumerate() {
        let mut rest = slots.to_vec();
        rest.remove(i);
        let sign = front_sign(slots, i, th);
        match k {
            0 => {
                let c = -x.integral[idx].clone() * sign;
                if c.is_zero() {
                    return Ok(Expr::zero());
                }
                return Ok(reduce(th, beta, &rest)?.scale(&mero(&c)));
            }
            1 => return Ok(Expr::zero()),
            2 if idx == th.w => {
                let r = reduce(th, beta, &rest)?;
                let g2 = MeroQJac::generator(Generator::G2).scale(&th.geometry.pack.g2_coefficient());
                let out = r.derive(0, 1)?.add(&r.scale(&g2));
                return Ok(out.scale(&mero(&sign)));
            }
            2 => {
                if let Some(v) = th.divisor_value(idx, beta) {
                    if v.is_zero() {
                        return Ok(Expr::zero());
                    }
                    return Ok(reduce(th, beta, &rest)?.scale(&mero(&(v * sign))));
                }
            }
            3 if idx == th.unit => {
                return Ok(reduce(th, beta, &rest)?.derive(1, 0)?.scale(&mero(&sign)));
            }
            _ => {}
        }
    }
    Ok(match canonicalize(slots, th) {
        None => Expr::zero(),
        Some((s, v)) => Expr::key(Key { beta, slots: v }).scale(&mero(&s)),
    })
}
