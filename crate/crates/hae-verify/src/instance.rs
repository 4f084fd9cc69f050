//! Both anomaly equations for one insertion list.

use num_rational::BigRational;
use num_traits::{One, Zero};
use qjac_ring::MeroQJac;
use series_core::arith::factorial;

use cohomology::{CohClass, Tensor};

use crate::expr::{Expr, Symbol};
use crate::insertion::{class_slots, expand, Insertion, Slot};
use crate::reduce::{front_sign, reduce};
use crate::{Theory, VerifyError};

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Op {
    DA,
    DG2,
}

/// `lhs = rhs`, both sides over correlator symbols.
#[derive(Clone, Debug)]
pub struct Instance {
    pub name: String,
    pub lhs: Expr,
    pub rhs: Expr,
}

impl Instance {
    pub fn residual(&self) -> Expr {
        self.lhs.sub(&self.rhs)
    }
}

fn fact(n: i64) -> Option<BigRational> {
    (n >= 0).then(|| BigRational::from_integer(factorial(n as u64)))
}

fn sign_pow(e: i64) -> BigRational {
    if e.rem_euclid(2) == 1 {
        -BigRational::one()
    } else {
        BigRational::one()
    }
}

/// Accumulates `coef · Z(front ++ rest)` for every basis expansion of `front`.
struct Builder<'a> {
    th: &'a Theory,
    beta: i64,
    out: Expr,
}

impl Builder<'_> {
    fn push(&mut self, coef: &BigRational, front: &[Vec<(BigRational, Slot)>], rest: &[Slot]) -> Result<(), VerifyError> {
        if coef.is_zero() {
            return Ok(());
        }
        let mut prods: Vec<(BigRational, Vec<Slot>)> = vec![(coef.clone(), Vec::new())];
        for choices in front {
            let mut next = Vec::new();
            for (c, s) in &prods {
                for (c1, slot) in choices {
                    let mut v = s.clone();
                    v.push(*slot);
                    next.push((c * c1, v));
                }
            }
            prods = next;
        }
        for (c, mut slots) in prods {
            slots.extend_from_slice(rest);
            let r = reduce(self.th, self.beta, &slots)?;
            self.out = self.out.add(&r.scale(&MeroQJac::constant(c)));
        }
        Ok(())
    }

    /// Künneth terms of a tensor, as pairs of slot choices.
    fn push_tensor(
        &mut self,
        coef: &BigRational,
        t: &Tensor,
        k1: i64,
        k2: i64,
        rest: &[Slot],
    ) -> Result<(), VerifyError> {
        if k1 < 0 || k2 < 0 {
            return Ok(());
        }
        for ((a, b), c) in &t.terms {
            self.push(&(coef * c), &[vec![(BigRational::one(), (k1, *a))], vec![(BigRational::one(), (k2, *b))]], rest)?;
        }
        Ok(())
    }
}

fn without(slots: &[Slot], drop: &[usize]) -> Vec<Slot> {
    slots.iter().enumerate().filter(|(i, _)| !drop.contains(i)).map(|(_, s)| *s).collect()
}

fn basis(th: &Theory, i: usize) -> CohClass {
    th.geometry.x.basis(i)
}

fn rhs_da(th: &Theory, b: &mut Builder, slots: &[Slot]) -> Result<(), VerifyError> {
    let g = &th.geometry;
    let db = g.delta_b_pulled();
    for (i, &(k, e)) in slots.iter().enumerate() {
        let sigma = front_sign(slots, i, th);
        let rest = without(slots, &[i]);
        let t = Tensor::product(&basis(th, e), &g.x.one()).mul(&db, &g.x);
        b.push_tensor(&sigma, &t, k - 1, 2, &rest)?;
        let pp = g.pi_pull_push(&basis(th, e));
        b.push(&sigma, &[class_slots(k + 1, &pp)], &rest)?;
    }
    Ok(())
}

fn pair_sign(slots: &[Slot], i: usize, j: usize, th: &Theory) -> BigRational {
    let first = front_sign(slots, i, th);
    let rest = without(slots, &[i]);
    let j2 = if j > i { j - 1 } else { j };
    first * front_sign(&rest, j2, th)
}

fn rhs_dg2(th: &Theory, b: &mut Builder, slots: &[Slot]) -> Result<(), VerifyError> {
    let g = &th.geometry;
    let x = &g.x;
    let db = g.delta_b_pulled();
    let two = BigRational::from_integer(2.into());
    let wt = |e: usize| g.wt_basis(e);
    for i in 0..slots.len() {
        for j in i + 1..slots.len() {
            let (ki, ei) = slots[i];
            let (kj, ej) = slots[j];
            let sij = pair_sign(slots, i, j, th);
            let rest = without(slots, &[i, j]);
            let t = Tensor::product(&basis(th, ei), &basis(th, ej)).mul(&db, x);
            b.push_tensor(&(-&two * &sij), &t, ki - 1, kj - 1, &rest)?;

            let (wi, wj) = (wt(ei), wt(ej));
            let (a, c) = (ki - 2 + wi, kj - 2 + wj);
            if a >= 0 && c >= 0 {
                let binom = fact(a + c).unwrap() / (fact(a).unwrap() * fact(c).unwrap());
                let coef = -&two * &sij * sign_pow((1 + wi) * (1 + wj)) * binom;
                let e = g.e_corr_pair(&basis(th, ei), &basis(th, ej));
                b.push(&coef, &[class_slots(ki + kj - 2, &e)], &rest)?;
            }
        }
    }
    let c2b = g.pi_pull(&g.c2_b);
    for (i, &(k, e)) in slots.iter().enumerate() {
        let sigma = front_sign(slots, i, th);
        let rest = without(slots, &[i]);
        b.push(&-sigma.clone(), &[class_slots(k - 2, &x.cup(&basis(th, e), &c2b))], &rest)?;

        let Some(den) = fact(k - 2 + wt(e)) else {
            continue;
        };
        let t = g.e_corr(&x.cup(&g.k_x, &basis(th, e)));
        for ((l, r), c) in &t.terms {
            let (wl, wr) = (wt(*l), wt(*r));
            for m1 in 0..=k {
                let m2 = k - m1;
                let (Some(f1), Some(f2)) = (fact(m1 - 1 + wl), fact(m2 - 1 + wr)) else {
                    continue;
                };
                let coef = &sigma * c * sign_pow((1 + wl) * (1 + wr)) * f1 * f2 / &den;
                b.push(
                    &coef,
                    &[vec![(BigRational::one(), (m1, *l))], vec![(BigRational::one(), (m2, *r))]],
                    &rest,
                )?;
            }
        }
    }
    if let Some(corr) = &th.correction {
        lattice_term(th, corr, b, slots)?;
    }
    Ok(())
}

/// `-Σ (g^{-1})_{ab} T_{e_a} T_{e_b}` applied to the insertion product.
fn lattice_term(
    th: &Theory,
    corr: &crate::theory::LatticeCorrection,
    b: &mut Builder,
    slots: &[Slot],
) -> Result<(), VerifyError> {
    let x = &th.geometry.x;
    let f = basis(th, corr.f);
    let dot = |u: &CohClass, v: &CohClass| x.integrate(&x.cup(u, v));
    let perp_part = |gamma: &CohClass| -> CohClass {
        let mut out = CohClass::zero(x.dim());
        for &a in &corr.perp {
            for &c in &corr.perp {
                let ginv = perp_inverse(th, corr, a, c);
                if !ginv.is_zero() {
                    out = out.add(&basis(th, a).scale(&(ginv * dot(&basis(th, c), gamma))));
                }
            }
        }
        out
    };
    let rank = BigRational::from_integer(corr.rank.into());
    let two = BigRational::from_integer(2.into());
    for (i, &(k, e)) in slots.iter().enumerate() {
        let fe = dot(&f, &basis(th, e));
        // σ(ch_k(γ)) = -rank (γ·F) ch_k(F), entering with an overall minus
        let mut rest = slots.to_vec();
        rest.remove(i);
        b.push(&(&rank * &fe), &[class_slots(k, &f)], &rest)?;
    }
    for i in 0..slots.len() {
        for j in i + 1..slots.len() {
            let (ki, ei) = slots[i];
            let (kj, ej) = slots[j];
            let (gi, gj) = (basis(th, ei), basis(th, ej));
            let (fi, fj) = (dot(&f, &gi), dot(&f, &gj));
            if !fi.is_zero() && !fj.is_zero() {
                return Err(VerifyError::Unsupported(
                    "lattice trace between two insertions with nonzero F-degree".into(),
                ));
            }
            let rest = without(slots, &[i, j]);
            let one = BigRational::one();
            let (pi, pj) = (perp_part(&gi), perp_part(&gj));
            // the cross term 2 Σ g^{ab} T_a ⊗ T_b, again with a minus
            if !fi.is_zero() {
                b.push(&(&two * &fi), &[class_slots(ki, &pj), vec![(one.clone(), (kj, corr.f))]], &rest)?;
            }
            if !fj.is_zero() {
                b.push(&(&two * &fj), &[vec![(one.clone(), (ki, corr.f))], class_slots(kj, &pi)], &rest)?;
            }
            let pp = dot(&pi, &pj);
            if !pp.is_zero() {
                b.push(&(-&two * pp), &[vec![(one.clone(), (ki, corr.f))], vec![(one, (kj, corr.f))]], &rest)?;
            }
        }
    }
    Ok(())
}

fn perp_inverse(th: &Theory, corr: &crate::theory::LatticeCorrection, a: usize, c: usize) -> BigRational {
    let x = &th.geometry.x;
    let g: Vec<Vec<BigRational>> = corr
        .perp
        .iter()
        .map(|&u| corr.perp.iter().map(|&v| x.integrate(&x.mult[u][v])).collect())
        .collect();
    let inv = cohomology::algebra::invert(&g).expect("nondegenerate lattice");
    let ia = corr.perp.iter().position(|&u| u == a).unwrap();
    let ic = corr.perp.iter().position(|&u| u == c).unwrap();
    inv[ia][ic].clone()
}

/// The `op`-anomaly equation for `Z_β(ins)`.
pub fn hae_instance(op: Op, ins: &[Insertion], beta: i64, th: &Theory) -> Result<Instance, VerifyError> {
    for i in ins {
        th.geometry
            .wt_of(&i.class)
            .map_err(|_| VerifyError::NotEigenvector(th.geometry.render(&i.class)))?;
    }
    let mut b = Builder { th, beta, out: Expr::zero() };
    let mut lhs = Expr::zero();
    for (c, slots) in expand(ins, &th.geometry) {
        let coef = MeroQJac::constant(c.clone());
        let z = reduce(th, beta, &slots)?;
        for (s, zc) in &z.terms {
            let a = s.atom().clone();
            let d = match op {
                Op::DA => zc.d_a(),
                Op::DG2 => zc.d_g2(),
            };
            lhs.add_term(s.clone(), d.mul(&coef));
            let sym = match op {
                Op::DA => Symbol::DA(a),
                Op::DG2 => Symbol::DG2(a),
            };
            lhs.add_term(sym, zc.mul(&coef));
        }
        let before = b.out.clone();
        b.out = Expr::zero();
        match op {
            Op::DA => rhs_da(th, &mut b, &slots)?,
            Op::DG2 => rhs_dg2(th, &mut b, &slots)?,
        }
        b.out = before.add(&b.out.scale(&coef));
    }
    let name = format!(
        "{:?} Z{}({})",
        op,
        beta,
        ins.iter()
            .map(|i| format!(
                "{}{}({})",
                if i.kind == crate::Kind::Ch { "ch" } else { "ch~" },
                i.k,
                th.geometry.render(&i.class)
            ))
            .collect::<Vec<_>>()
            .join(" ")
    );
    Ok(Instance { name, lhs, rhs: b.out })
}
