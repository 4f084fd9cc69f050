//! The `K3 x C` specialization with `t = 1`.
//!
//! `H*(S)` is modelled by `1, F, W, u, v, p` where `W = B + F` and `u, v`
//! span a hyperbolic plane inside `{F, B}^⊥`.

use std::sync::Arc;

use num_rational::BigRational;
use qjac_ring::MeroQJac;

use cohomology::{Algebra, CohClass, Geometry, NumericPack};
use hae_k3::{kkv, stationary_mero, Family, SeriesTable};

use crate::db::CorrelatorDB;
use crate::expr::Key;
use crate::insertion::Insertion;
use crate::theory::{LatticeCorrection, Theory};
use crate::{hae_instance, Instance, Op, VerifyError};

pub const UNIT: usize = 0;
pub const F: usize = 1;
pub const W: usize = 2;
pub const U: usize = 3;
pub const V: usize = 4;
pub const P: usize = 5;

/// Shipped `A`, `B`, `C` table.
pub const TABLE_JSON: &str = include_str!("../data/k3_abc.json");

fn r(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

pub fn build_k3_model() -> Geometry {
    let dim = 6;
    let mut mult = vec![vec![CohClass::zero(dim); dim]; dim];
    mult[UNIT] = (0..dim).map(|i| CohClass::basis(dim, i)).collect();
    for (i, row) in mult.iter_mut().enumerate() {
        row[UNIT] = CohClass::basis(dim, i);
    }
    for (a, b) in [(F, W), (W, F), (U, V), (V, U)] {
        mult[a][b] = CohClass::basis(dim, P);
    }
    let x = Algebra {
        labels: ["1", "F", "W", "u", "v", "p"].map(String::from).to_vec(),
        degree: vec![0, 2, 2, 2, 2, 4],
        mult,
        integral: vec![r(0), r(0), r(0), r(0), r(0), r(1)],
    };
    let b = Algebra {
        labels: vec!["1".into(), "pt".into()],
        degree: vec![0, 2],
        mult: vec![
            vec![CohClass::basis(2, 0), CohClass::basis(2, 1)],
            vec![CohClass::basis(2, 1), CohClass::zero(2)],
        ],
        integral: vec![r(0), r(1)],
    };
    let push = (0..dim)
        .map(|i| match i {
            W => CohClass::basis(2, 0),
            P => CohClass::basis(2, 1),
            _ => CohClass::zero(2),
        })
        .collect();
    let pull = vec![CohClass::basis(dim, UNIT), CohClass::basis(dim, F)];
    let gens = ["F", "W", "u", "v", "p"]
        .iter()
        .zip([F, W, U, V, P])
        .map(|(n, i)| (n.to_string(), CohClass::basis(dim, i)))
        .collect();
    Geometry::new(
        "K3xC",
        x,
        b,
        push,
        pull,
        CohClass::basis(dim, W),
        CohClass::basis(dim, UNIT).scale(&r(-1)),
        CohClass::basis(dim, P).scale(&r(24)),
        CohClass::basis(2, 1).scale(&r(2)),
        // e(B) = 2, c_1(N)·c_1(T_B) = -2
        NumericPack { e_b: 2, c1n_c1tb: -2, c1n_sq: 0 },
        gens,
    )
    .expect("K3 model is well formed")
}

pub fn theory() -> Theory {
    let g = build_k3_model();
    let mut divisors = vec![None; g.x.dim()];
    divisors[F] = Some((r(0), r(1)));
    divisors[U] = Some((r(0), r(0)));
    divisors[V] = Some((r(0), r(0)));
    Theory {
        geometry: g,
        unit: UNIT,
        w: W,
        divisors,
        vdim_slope: None,
        koszul: false,
        correction: Some(LatticeCorrection { rank: 20, f: F, perp: vec![U, V] }),
    }
}

/// Stationary evaluation of a key from the `A`, `B`, `C` table; `p` uses
/// the descendent index itself, every other class `k - 2`.
pub fn stationary_value(th: &Theory, table: &SeriesTable, key: &Key) -> Option<MeroQJac> {
    let x = &th.geometry.x;
    if key.slots.iter().any(|(_, i)| *i == UNIT) {
        return None;
    }
    let dot = |a: usize, b: usize| x.integrate(&x.mult[a][b]);
    let ins: Vec<hae_k3::Insertion> = key
        .slots
        .iter()
        .map(|&(k, i)| hae_k3::Insertion {
            k: if i == P { k } else { k - 2 },
            w: dot(i, W),
            f: dot(i, F),
            one: x.integral[i].clone(),
        })
        .collect();
    let pairing: Vec<Vec<BigRational>> =
        key.slots.iter().map(|&(_, i)| key.slots.iter().map(|&(_, j)| dot(i, j)).collect()).collect();
    stationary_mero(&ins, &pairing, table).ok()
}

pub fn load_table() -> Result<SeriesTable, VerifyError> {
    let v: serde_json::Value = serde_json::from_str(TABLE_JSON).map_err(|e| VerifyError::Table(e.to_string()))?;
    Ok(SeriesTable::from_json(&v)?)
}

pub fn db(th: &Theory, table: SeriesTable) -> CorrelatorDB {
    let th = th.clone();
    CorrelatorDB::with_oracle(Arc::new(move |k: &Key| stationary_value(&th, &table, k)))
}

/// The insertion list whose correlator is `family_{k,l} · KKV`.
pub fn family_insertions(th: &Theory, family: Family, k: i64, l: i64) -> Vec<Insertion> {
    let b = |i| th.geometry.x.basis(i);
    match family {
        Family::A => vec![Insertion::chtilde(2 + k, b(F))],
        Family::B => vec![Insertion::ch(k, b(P))],
        Family::C => vec![Insertion::chtilde(2 + k, b(U)), Insertion::chtilde(2 + l, b(V))],
    }
}

/// Both equations for every `A_k`, `B_k` (`k ≤ n`) and `C_{kl}` (`k + l ≤ n`).
pub fn family_instances(th: &Theory, n: i64) -> Result<Vec<Instance>, VerifyError> {
    let mut out = Vec::new();
    let mut push = |fam, k, l| -> Result<(), VerifyError> {
        let ins = family_insertions(th, fam, k, l);
        for op in [Op::DA, Op::DG2] {
            let mut inst = hae_instance(op, &ins, 0, th)?;
            inst.name = format!("{op:?} {fam:?}_{k},{l}");
            out.push(inst);
        }
        Ok(())
    };
    for k in 0..=n {
        push(Family::A, k, 0)?;
        push(Family::B, k, 0)?;
        for l in 0..=n - k {
            push(Family::C, k, l)?;
        }
    }
    Ok(out)
}

/// `KKV · p` for a table polynomial.
pub fn times_kkv(p: &qjac_ring::QJacPoly) -> MeroQJac {
    kkv().mul_poly(p)
}
