//! Fourier expansions of the generators and the evaluation homomorphism.

use std::cell::RefCell;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use series_core::arith::{bernoulli, sigma};
use series_core::{product_builder, theta_series, FourierSeries, RationalFunction};

use crate::{Exponent, Generator, MeroQJac, QJacError, QJacPoly};

/// A generator or one of the auxiliary series.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum SeriesName {
    Gen(Generator),
    /// Eisenstein series `G_k` for even `k >= 2`.
    G(u32),
    Delta,
}

impl SeriesName {
    pub fn parse(name: &str) -> Option<Self> {
        if let Some(g) = Generator::from_name(name) {
            return Some(SeriesName::Gen(g));
        }
        if name == "Delta" || name == "Δ" {
            return Some(SeriesName::Delta);
        }
        name.strip_prefix('G')?.parse().ok().map(SeriesName::G)
    }
}

/// `G_k = -B_k/(2k) + sum_n sigma_{k-1}(n) q^n` with rational coefficients.
pub fn eisenstein(k: u32, qorder: i64) -> Result<series_core::QSeries<BigRational>, QJacError> {
    if k < 2 || k % 2 == 1 {
        return Err(QJacError::NotInRing(format!("G_{k} is only defined for even k >= 2")));
    }
    Ok(series_core::QSeries::from_fn(0, qorder, |n| {
        if n == 0 {
            -bernoulli(k as usize) / BigRational::from_integer(BigInt::from(2 * k))
        } else {
            BigRational::from_integer(sigma(k - 1, n as u64))
        }
    }))
}

fn constant_series(s: &series_core::QSeries<BigRational>) -> FourierSeries {
    s.map_into(|c| RationalFunction::constant(c.clone()))
}

/// `q prod (1 - q^n)^24` through `q^qorder`.
pub fn delta_series(qorder: i64) -> FourierSeries {
    product_builder(|l, _| if l == 0 { 24 } else { 0 }, 0, qorder - 1).shift(1)
}

/// `Δ^-b` through `q^qorder` (shift `-b`).
pub fn delta_inverse_power(b: u32, qorder: i64) -> FourierSeries {
    let b = b as i64;
    product_builder(|l, _| if l == 0 { -24 * b } else { 0 }, 0, qorder + b).shift(-b)
}

fn a_series(theta: &FourierSeries) -> FourierSeries {
    theta.d_p().div(theta).expect("theta is invertible")
}

pub fn generator_expansion(name: SeriesName, qorder: i64) -> Result<FourierSeries, QJacError> {
    Ok(match name {
        SeriesName::Gen(g) => Evaluator::new(qorder).generator(g).clone(),
        SeriesName::G(k) => constant_series(&eisenstein(k, qorder)?),
        SeriesName::Delta => delta_series(qorder),
    })
}

/// Caches generator expansions and their powers at a fixed order.
pub struct Evaluator {
    order: i64,
    gens: [FourierSeries; 6],
    powers: RefCell<HashMap<(usize, u32), FourierSeries>>,
}

impl Evaluator {
    pub fn new(order: i64) -> Self {
        let theta = theta_series(order);
        let a = a_series(&theta);
        let g2 = constant_series(&eisenstein(2, order).unwrap());
        let p = a.d_p().neg().sub(&g2.scale(&BigRational::from_integer(2.into())));
        let pp = p.d_p();
        let g4 = constant_series(&eisenstein(4, order).unwrap());
        Evaluator {
            order,
            gens: [theta, a, g2, p, pp, g4],
            powers: RefCell::new(HashMap::new()),
        }
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn generator(&self, g: Generator) -> &FourierSeries {
        &self.gens[g as usize]
    }

    fn power(&self, i: usize, k: u32) -> FourierSeries {
        if k == 1 {
            return self.gens[i].clone();
        }
        if let Some(s) = self.powers.borrow().get(&(i, k)) {
            return s.clone();
        }
        let s = self.power(i, k - 1).mul(&self.gens[i]);
        self.powers.borrow_mut().insert((i, k), s.clone());
        s
    }

    pub fn monomial(&self, e: &Exponent) -> FourierSeries {
        let mut acc: Option<FourierSeries> = None;
        for (i, &k) in e.iter().enumerate() {
            if k == 0 {
                continue;
            }
            let p = self.power(i, k);
            acc = Some(match acc {
                None => p,
                Some(a) => a.mul(&p),
            });
        }
        acc.unwrap_or_else(|| FourierSeries::one(self.order))
    }

    pub fn poly(&self, f: &QJacPoly) -> FourierSeries {
        let mut out = FourierSeries::zero(self.order);
        for (e, c) in f.terms() {
            out = out.add(&self.monomial(e).scale(c));
        }
        out
    }

    /// Value of `f`; exact through `q^(order - delta_pow)`.
    pub fn mero(&self, f: &MeroQJac) -> FourierSeries {
        let mut out = self.poly(&f.numerator);
        if f.theta_pow > 0 {
            let t = self.power(0, f.theta_pow);
            out = out.div(&t).expect("theta is invertible");
        }
        if f.delta_pow > 0 {
            out = out.mul(&delta_inverse_power(f.delta_pow, self.order));
        }
        out
    }
}

/// Fourier expansion of `f` through `q^qorder`.
pub fn evaluate(f: &MeroQJac, qorder: i64) -> FourierSeries {
    let ev = Evaluator::new(qorder + f.delta_pow as i64);
    ev.mero(f).truncate(qorder)
}
