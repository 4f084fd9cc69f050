//! Solving one table entry from its derivative equations and `q^0` data.

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::Zero;
use qjac_ring::fit::add_series_rows;
use qjac_ring::linalg::{RowReducer, SolveOutcome};
use qjac_ring::{slice_monomials, Evaluator, Exponent, Grading, QJacPoly};
use series_core::FourierSeries;

use crate::equations::{boundary, rhs_d_a, rhs_d_g2};
use crate::{Family, K3Error, SeriesTable};

/// Weight of `A_k`, `B_k` (both `k`) and `C_{kl}` (`k + l + 2`).
pub fn weight(family: Family, k: i64, l: i64) -> i64 {
    match family {
        Family::A | Family::B => k,
        Family::C => k + l + 2,
    }
}

fn add_poly_rows(red: &mut RowReducer, images: &[QJacPoly], rhs: &QJacPoly) {
    let mut exps: BTreeSet<Exponent> = rhs.terms().map(|(e, _)| *e).collect();
    for m in images {
        exps.extend(m.terms().map(|(e, _)| *e));
    }
    for e in &exps {
        let row: Vec<BigRational> = images.iter().map(|m| m.coeff(e)).collect();
        red.add_row(row, rhs.coeff(e));
    }
}

/// Solves for the weight-graded, index-0 polynomial `F` with
/// `d/dA F`, `d/dG2 F` given by the anomaly equations and prescribed `q^0`
/// coefficient. `extra` pins further Fourier coefficients when the
/// homogeneous kernel is nontrivial.
pub fn solve_series(
    family: Family,
    k: i64,
    l: i64,
    table: &SeriesTable,
    extra: Option<&FourierSeries>,
) -> Result<QJacPoly, K3Error> {
    if k < 0 || l < 0 {
        return Err(K3Error::Invalid(format!("negative index ({k}, {l})")));
    }
    let w = weight(family, k, l);
    let basis = slice_monomials(Grading { weight: w, index2: 0 });
    let rhs_a = rhs_d_a(family, k, l, table)?;
    let rhs_g = rhs_d_g2(family, k, l, table)?;
    let bdry = boundary(family, k);
    let monos: Vec<QJacPoly> = basis.iter().map(|e| QJacPoly::monomial(*e, BigRational::from_integer(1.into()))).collect();

    let mut red = RowReducer::new(basis.len());
    add_poly_rows(&mut red, &monos.iter().map(|m| m.d_a()).collect::<Vec<_>>(), &rhs_a);
    add_poly_rows(&mut red, &monos.iter().map(|m| m.d_g2()).collect::<Vec<_>>(), &rhs_g);

    let qorder = extra.map_or(0, |s| s.trunc().max(0));
    let ev = Evaluator::new(qorder);
    let values: Vec<FourierSeries> = basis.iter().map(|e| ev.monomial(e)).collect();
    let target = FourierSeries::constant(bdry.clone(), 0);
    add_series_rows(&mut red, &target, &values, 0, 0);
    if let Some(s) = extra {
        add_series_rows(&mut red, s, &values, s.qshift().min(0), s.trunc());
    }

    if basis.is_empty() {
        let ok = rhs_a.is_zero() && rhs_g.is_zero() && bdry.is_zero();
        return if ok { Ok(QJacPoly::zero()) } else { Err(K3Error::Inconsistent) };
    }
    match red.solve() {
        SolveOutcome::Inconsistent => Err(K3Error::Inconsistent),
        SolveOutcome::Underdetermined { kernel_dim } => Err(K3Error::Underdetermined { kernel_dim }),
        SolveOutcome::Unique(x) => {
            let mut out = QJacPoly::zero();
            for (e, c) in basis.iter().zip(x) {
                if !c.is_zero() {
                    out.add_term(*e, c);
                }
            }
            Ok(out)
        }
    }
}
