//! The stationary partition function assembled from the `A`, `B`, `C` table.

use num_rational::BigRational;
use num_traits::Zero;
use qjac_ring::{derive_word, evaluate, MeroQJac, QJacPoly};
use series_core::FourierSeries;

use crate::{K3Error, SeriesTable};

/// One insertion `ch_{2+k}(gamma)` with the pairings of `gamma`
/// against `W`, `F` and `1`.
#[derive(Clone, Debug, PartialEq)]
pub struct Insertion {
    pub k: i64,
    pub w: BigRational,
    pub f: BigRational,
    pub one: BigRational,
}

/// `-1/(Θ^2 Δ)`.
pub fn kkv() -> MeroQJac {
    MeroQJac::new(QJacPoly::from_int(-1), 2, 1)
}

/// Terms `(number of D_τ, product)` from every matching of the insertions
/// into singletons and pairs.
fn matchings(
    ins: &[Insertion],
    pairing: &[Vec<BigRational>],
    t: &SeriesTable,
    used: &mut Vec<bool>,
    m: u32,
    acc: QJacPoly,
    out: &mut Vec<(u32, QJacPoly)>,
) -> Result<(), K3Error> {
    let Some(i) = used.iter().position(|u| !u) else {
        out.push((m, acc));
        return Ok(());
    };
    used[i] = true;
    let a = t.a(ins[i].k)?;
    let plain = a.scale(&ins[i].w).add(&t.b(ins[i].k)?.scale(&ins[i].one));
    if !plain.is_zero() {
        matchings(ins, pairing, t, used, m, acc.mul(&plain), out)?;
    }
    if !ins[i].f.is_zero() {
        matchings(ins, pairing, t, used, m + 1, acc.mul(&a.scale(&ins[i].f)), out)?;
    }
    for j in i + 1..ins.len() {
        if used[j] || pairing[i][j].is_zero() {
            continue;
        }
        used[j] = true;
        let c = t.c(ins[i].k, ins[j].k)?.scale(&pairing[i][j]);
        matchings(ins, pairing, t, used, m, acc.mul(&c), out)?;
        used[j] = false;
    }
    used[i] = false;
    Ok(())
}

/// Coefficient of `t_1 ... t_n` in
/// `exp(sum t_i L_i + 1/2 sum t_i t_j (γ_i·γ_j) C_{k_i k_j}) · (-1/(Θ^2 Δ))`,
/// with `L_i = (γ_i, W) A_{k_i} + (γ_i, F) D_τ A_{k_i} + (γ_i, 1) B_{k_i}`.
/// Every `D_τ` is moved to the left and applied to the rest of its term,
/// including the factor `-1/(Θ^2 Δ)`.
pub fn stationary_mero(ins: &[Insertion], pairing: &[Vec<BigRational>], t: &SeriesTable) -> Result<MeroQJac, K3Error> {
    if pairing.len() != ins.len() || pairing.iter().any(|r| r.len() != ins.len()) {
        return Err(K3Error::Invalid("pairing matrix does not match the insertions".into()));
    }
    let mut terms = Vec::new();
    matchings(ins, pairing, t, &mut vec![false; ins.len()], 0, QJacPoly::one(), &mut terms)?;
    let mut by_m: Vec<QJacPoly> = Vec::new();
    for (m, p) in terms {
        let m = m as usize;
        if by_m.len() <= m {
            by_m.resize(m + 1, QJacPoly::zero());
        }
        by_m[m] = by_m[m].add(&p);
    }
    let mut out = MeroQJac::zero();
    for (m, p) in by_m.into_iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        let term = kkv().mul_poly(&p);
        out = out.add(&derive_word(&term, 0, m as u32)?);
    }
    Ok(out)
}

/// Fourier expansion of [`stationary_mero`] through `q^qorder`.
pub fn stationary_z(
    ins: &[Insertion],
    pairing: &[Vec<BigRational>],
    t: &SeriesTable,
    qorder: i64,
) -> Result<FourierSeries, K3Error> {
    let f = stationary_mero(ins, pairing, t)?;
    Ok(evaluate(&f, qorder))
}
