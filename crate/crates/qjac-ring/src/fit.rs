//! Recognition of a Fourier series as an element of a graded slice.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use series_core::{poly as ipoly, FourierSeries, RationalFunction};

use crate::expansion::Evaluator;
use crate::linalg::{nullspace, RowReducer, SolveOutcome};
use crate::{Exponent, Generator, Grading, MeroQJac, QJacError, QJacPoly};

/// Extra independent conditions required beyond the slice dimension.
pub const DEFAULT_MARGIN: usize = 10;

/// Monomial basis of the polynomial slice of the given grading.
pub fn slice_monomials(g: Grading) -> Vec<Exponent> {
    let mut out = Vec::new();
    if g.index2 < 0 {
        return out;
    }
    let e_theta = g.index2 as u32;
    // weight left for A, G2, P, Pp, G4 (weights 1, 2, 2, 3, 4)
    let rest = g.weight + g.index2;
    if rest < 0 {
        return out;
    }
    let rest = rest as u32;
    for g4 in 0..=rest / 4 {
        let r4 = rest - 4 * g4;
        for pp in 0..=r4 / 3 {
            let r3 = r4 - 3 * pp;
            for p in 0..=r3 / 2 {
                let r2 = r3 - 2 * p;
                for g2 in 0..=r2 / 2 {
                    let a = r2 - 2 * g2;
                    out.push([e_theta, a, g2, p, pp, g4]);
                }
            }
        }
    }
    out.sort();
    out
}

fn poly_lcm(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let g = ipoly::gcd(a, b);
    ipoly::mul(&ipoly::div_exact(a, &g).expect("gcd divides"), b)
}

/// Writes `f * den_lcm` as a polynomial in `s` with rational coefficients.
fn clear_denominator(f: &RationalFunction, lcm: &[BigInt]) -> Vec<BigRational> {
    if f.is_zero() {
        return Vec::new();
    }
    let cof = ipoly::div_exact(lcm, f.denominator()).expect("lcm is a multiple");
    ipoly::mul(f.numerator(), &cof)
        .into_iter()
        .map(|c| BigRational::from_integer(c) * f.scale())
        .collect()
}

/// Feeds the conditions `sum_i x_i m_i = t` coefficient by coefficient.
pub fn add_series_rows(
    red: &mut RowReducer,
    target: &FourierSeries,
    basis: &[FourierSeries],
    lo: i64,
    hi: i64,
) {
    for n in lo..=hi {
        let t = target.coeff(n);
        let ms: Vec<RationalFunction> = basis.iter().map(|b| b.coeff(n)).collect();
        let mut dens: Vec<&[BigInt]> = ms.iter().chain(std::iter::once(&t)).filter(|f| !f.is_zero()).map(|f| f.denominator()).collect();
        if dens.is_empty() {
            // everything vanishes at this order: still one checked condition
            red.add_row(vec![BigRational::zero(); basis.len()], BigRational::zero());
            continue;
        }
        dens.sort();
        dens.dedup();
        let lcm = dens.iter().fold(vec![BigInt::one()], |acc, d| poly_lcm(&acc, d));
        let tp = clear_denominator(&t, &lcm);
        let mps: Vec<Vec<BigRational>> = ms.iter().map(|m| clear_denominator(m, &lcm)).collect();
        let width = mps.iter().map(|v| v.len()).chain(std::iter::once(tp.len())).max().unwrap_or(0);
        for j in 0..width {
            let row: Vec<BigRational> = mps
                .iter()
                .map(|v| v.get(j).cloned().unwrap_or_else(BigRational::zero))
                .collect();
            let rhs = tp.get(j).cloned().unwrap_or_else(BigRational::zero);
            if row.iter().all(|x| x.is_zero()) && rhs.is_zero() {
                continue;
            }
            red.add_row(row, rhs);
        }
    }
}

/// Finds the element of grading `(weight, index)` with denominator
/// `Θ^theta_pow Δ^delta_pow` whose expansion is `target`.
pub fn fit(
    target: &FourierSeries,
    weight: i64,
    index: &BigRational,
    theta_pow: u32,
    delta_pow: u32,
) -> Result<MeroQJac, QJacError> {
    fit_with_margin(target, weight, index, theta_pow, delta_pow, DEFAULT_MARGIN)
}

pub fn fit_with_margin(
    target: &FourierSeries,
    weight: i64,
    index: &BigRational,
    theta_pow: u32,
    delta_pow: u32,
    margin: usize,
) -> Result<MeroQJac, QJacError> {
    let g = Grading::new(weight, index)?;
    let num_grading = Grading {
        weight: g.weight - theta_pow as i64 + 12 * delta_pow as i64,
        index2: g.index2 + theta_pow as i64,
    };
    let basis = slice_monomials(num_grading);
    let n = target.trunc();
    let ev = Evaluator::new(n.max(0));
    let mut num_target = target.clone();
    if delta_pow > 0 {
        let b = delta_pow as i64;
        let d = series_core::product_builder(|l, _| if l == 0 { 24 * b } else { 0 }, 0, n + 1).shift(b);
        num_target = num_target.mul(&d);
    }
    if theta_pow > 0 {
        let mut e = [0; 6];
        e[Generator::Theta as usize] = theta_pow;
        num_target = num_target.mul(&ev.monomial(&e));
    }
    if basis.is_empty() {
        return if num_target.is_zero() { Ok(MeroQJac::zero()) } else { Err(QJacError::NoSolution) };
    }
    let values: Vec<FourierSeries> = basis.iter().map(|e| ev.monomial(e)).collect();
    let hi = num_target.trunc();
    let lo = num_target.qshift().min(0);
    let mut red = RowReducer::new(basis.len());
    add_series_rows(&mut red, &num_target, &values, lo, hi);
    let needed = basis.len() + margin;
    if red.is_inconsistent() {
        return Err(QJacError::NoSolution);
    }
    if red.rows_seen() < needed {
        return Err(QJacError::InsufficientData { rows: red.rows_seen(), needed });
    }
    match red.solve() {
        SolveOutcome::Inconsistent => Err(QJacError::NoSolution),
        SolveOutcome::Underdetermined { kernel_dim } => Err(QJacError::Underdetermined { kernel_dim }),
        SolveOutcome::Unique(x) => {
            let mut num = QJacPoly::zero();
            for (e, c) in basis.iter().zip(x) {
                num.add_term(*e, c);
            }
            Ok(MeroQJac::new(num, theta_pow, delta_pow))
        }
    }
}

/// Basis of the common kernel of `d/dG2` and `d/dA` on a polynomial slice.
pub fn partials_kernel(g: Grading) -> Vec<QJacPoly> {
    let basis = slice_monomials(g);
    // columns: basis monomials; rows: coefficients of the images
    let mut rows: BTreeMap<(u8, Exponent), Vec<BigRational>> = BTreeMap::new();
    for (j, e) in basis.iter().enumerate() {
        let m = QJacPoly::monomial(*e, BigRational::one());
        for (tag, img) in [(0u8, m.d_g2()), (1u8, m.d_a())] {
            for (f, c) in img.terms() {
                rows.entry((tag, *f))
                    .or_insert_with(|| vec![BigRational::zero(); basis.len()])[j] = c.clone();
            }
        }
    }
    let rows: Vec<Vec<BigRational>> = rows.into_values().collect();
    nullspace(&rows, basis.len())
        .into_iter()
        .map(|v| {
            let mut p = QJacPoly::zero();
            for (e, c) in basis.iter().zip(v) {
                p.add_term(*e, c);
            }
            p
        })
        .collect()
}
