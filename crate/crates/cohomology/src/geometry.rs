//! Fibration data `π: X -> B` over finite cohomology models.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::invert;
use crate::tensor::Tensor;
use crate::{Algebra, CohClass, CohError, NumericPack};

/// Triple Künneth tensor on `X^3`, used only to build `ℰ`.
type Tensor3 = std::collections::BTreeMap<(usize, usize, usize), BigRational>;

#[derive(Clone, Debug)]
pub struct Geometry {
    pub name: String,
    pub x: Algebra,
    pub b: Algebra,
    /// `π_*(e_i)` as a class on `B`, per basis element of `X`.
    pub push: Vec<CohClass>,
    /// `π^*(f_a)` as a class on `X`, per basis element of `B`.
    pub pull: Vec<CohClass>,
    pub w: CohClass,
    pub k_x: CohClass,
    pub c2_x: CohClass,
    /// `c_2(T_B)` on `B`.
    pub c2_b: CohClass,
    pub pack: NumericPack,
    /// Named generators accepted by [`Geometry::parse_class`].
    pub generators: Vec<(String, CohClass)>,
    wt: Vec<i64>,
    e3: Tensor3,
}

impl Geometry {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        name: &str,
        x: Algebra,
        b: Algebra,
        push: Vec<CohClass>,
        pull: Vec<CohClass>,
        w: CohClass,
        k_x: CohClass,
        c2_x: CohClass,
        c2_b: CohClass,
        pack: NumericPack,
        generators: Vec<(String, CohClass)>,
    ) -> Result<Self, CohError> {
        let mut g = Geometry {
            name: name.to_string(),
            x,
            b,
            push,
            pull,
            w,
            k_x,
            c2_x,
            c2_b,
            pack,
            generators,
            wt: Vec::new(),
            e3: Tensor3::new(),
        };
        g.wt = (0..g.x.dim())
            .map(|i| {
                let e = g.x.basis(i);
                let image = g.wt_apply(&e);
                [-1i64, 0, 1]
                    .into_iter()
                    .find(|l| image == e.scale(&BigRational::from_integer((*l).into())))
                    .ok_or(CohError::NotEigenvector)
            })
            .collect::<Result<_, _>>()?;
        g.e3 = g.build_e3()?;
        Ok(g)
    }

    pub fn pi_push(&self, g: &CohClass) -> CohClass {
        let mut out = CohClass::zero(self.b.dim());
        for (i, c) in g.terms() {
            out = out.add(&self.push[i].scale(c));
        }
        out
    }

    pub fn pi_pull(&self, a: &CohClass) -> CohClass {
        let mut out = CohClass::zero(self.x.dim());
        for (i, c) in a.terms() {
            out = out.add(&self.pull[i].scale(c));
        }
        out
    }

    pub fn pi_pull_push(&self, g: &CohClass) -> CohClass {
        self.pi_pull(&self.pi_push(g))
    }

    /// `[W ∪ -, π^*π_*](γ)`.
    pub fn wt_apply(&self, g: &CohClass) -> CohClass {
        let a = self.x.cup(&self.w, &self.pi_pull_push(g));
        let b = self.pi_pull_push(&self.x.cup(&self.w, g));
        a.sub(&b)
    }

    pub fn wt_basis(&self, i: usize) -> i64 {
        self.wt[i]
    }

    /// Weight of a class supported on a single eigenspace.
    pub fn wt_of(&self, g: &CohClass) -> Result<i64, CohError> {
        let mut it = g.terms().map(|(i, _)| self.wt[i]);
        let first = it.next().ok_or(CohError::NotEigenvector)?;
        if it.all(|w| w == first) {
            Ok(first)
        } else {
            Err(CohError::NotEigenvector)
        }
    }

    /// `Δ_X = Σ c_ij e_i ⊠ e_j` with `pr_2*(pr_1^*γ · Δ_X) = γ`.
    pub fn delta_x(&self) -> Tensor {
        diagonal(&self.x)
    }

    pub fn delta_b(&self) -> Tensor {
        diagonal(&self.b)
    }

    /// `(π × π)^* Δ_B` on `X × X`.
    pub fn delta_b_pulled(&self) -> Tensor {
        self.delta_b().map(|a| self.pull[a].clone())
    }

    fn build_e3(&self) -> Result<Tensor3, CohError> {
        let x = &self.x;
        let one = x.one();
        let one_i = one.terms().next().map(|(i, _)| i).unwrap();
        let dx = self.delta_x();
        let db = self.delta_b_pulled();
        let embed = |t: &Tensor, slots: (usize, usize)| -> Tensor3 {
            let mut out = Tensor3::new();
            for ((i, j), c) in &t.terms {
                let mut idx = [one_i; 3];
                idx[slots.0] = *i;
                idx[slots.1] = *j;
                add3(&mut out, (idx[0], idx[1], idx[2]), c.clone());
            }
            out
        };
        let mul = |a: &Tensor3, b: &Tensor3| mul3(a, b, x);
        let mut e = Tensor3::new();
        for (dxs, dbs) in [((0, 1), (0, 2)), ((0, 2), (0, 1)), ((1, 2), (0, 1))] {
            merge3(&mut e, &mul(&embed(&dx, dxs), &embed(&db, dbs)), &BigRational::one());
        }
        let db123 = mul(&embed(&db, (0, 1)), &embed(&db, (1, 2)));
        for slot in 0..3 {
            let mut wl = Tensor3::new();
            for (i, c) in self.w.terms() {
                let mut idx = [one_i; 3];
                idx[slot] = i;
                add3(&mut wl, (idx[0], idx[1], idx[2]), c.clone());
            }
            merge3(&mut e, &mul(&db123, &wl), &-BigRational::one());
        }
        Ok(e)
    }

    /// `ℰ(γ) = pr_23*(pr_1^*γ · ℰ)` as a Künneth tensor on `X × X`.
    pub fn e_corr(&self, g: &CohClass) -> Tensor {
        let mut t = Tensor::zero();
        for ((i, j, k), c) in &self.e3 {
            let w = self.x.integrate(&self.x.cup(g, &self.x.basis(*i)));
            if !w.is_zero() {
                t.add_term(*j, *k, w * c);
            }
        }
        t
    }

    /// `ℰ(Γ) = pr_3*(pr_12^*Γ · ℰ)` computed from the class on `X^3`.
    pub fn e_corr_tensor(&self, gamma: &Tensor) -> CohClass {
        let x = &self.x;
        let mut out = CohClass::zero(x.dim());
        for ((a, b), gc) in &gamma.terms {
            for ((i, j, k), c) in &self.e3 {
                let sign = if x.is_odd(*b) && x.is_odd(*i) { -BigRational::one() } else { BigRational::one() };
                let u = x.integrate(&x.mult[*a][*i]);
                if u.is_zero() {
                    continue;
                }
                let v = x.integrate(&x.mult[*b][*j]);
                if v.is_zero() {
                    continue;
                }
                out = out.add(&x.basis(*k).scale(&(gc * c * sign * u * v)));
            }
        }
        out
    }

    /// The six-term closed form of `ℰ(γ ⊠ γ')`.
    pub fn e_corr_pair(&self, g: &CohClass, h: &CohClass) -> CohClass {
        let x = &self.x;
        let b = &self.b;
        let pg = self.pi_push(g);
        let ph = self.pi_push(h);
        let mut out = self.pi_pull_push(&x.cup(g, h));
        out = out.add(&x.cup(g, &self.pi_pull(&ph)));
        out = out.add(&x.cup(&self.pi_pull(&pg), h));
        out = out.sub(&self.pi_pull(&b.cup(&self.pi_push(&x.cup(&self.w, g)), &ph)));
        out = out.sub(&self.pi_pull(&b.cup(&pg, &self.pi_push(&x.cup(h, &self.w)))));
        out.sub(&x.cup(&self.pi_pull(&b.cup(&pg, &ph)), &self.w))
    }

    /// Linear combination of named generators, e.g. `H^2*p - 3*H*a`.
    pub fn parse_class(&self, s: &str) -> Result<CohClass, CohError> {
        crate::parse::parse(self, s)
    }

    /// Short label for a class, built from basis labels.
    pub fn render(&self, g: &CohClass) -> String {
        let mut parts = Vec::new();
        for (i, c) in g.terms() {
            let lab = &self.x.labels[i];
            if c.is_one() {
                parts.push(lab.clone());
            } else {
                parts.push(format!("{c}*{lab}"));
            }
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

fn diagonal(alg: &Algebra) -> Tensor {
    let inv = invert(&alg.pairing_matrix()).expect("nondegenerate pairing");
    let mut t = Tensor::zero();
    for (i, row) in inv.iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            t.add_term(i, j, c.clone());
        }
    }
    t
}

fn add3(t: &mut Tensor3, k: (usize, usize, usize), c: BigRational) {
    if c.is_zero() {
        return;
    }
    let e = t.entry(k).or_insert_with(BigRational::zero);
    *e += c;
    if e.is_zero() {
        t.remove(&k);
    }
}

fn merge3(t: &mut Tensor3, o: &Tensor3, k: &BigRational) {
    for (key, c) in o {
        add3(t, *key, c * k);
    }
}

fn mul3(a: &Tensor3, b: &Tensor3, x: &Algebra) -> Tensor3 {
    let mut out = Tensor3::new();
    for ((a1, a2, a3), u) in a {
        for ((b1, b2, b3), v) in b {
            let odd = |i: &usize| x.is_odd(*i) as u32;
            let s = odd(a2) * odd(b1) + odd(a3) * odd(b1) + odd(a3) * odd(b2);
            let coef = if s % 2 == 1 { -(u * v) } else { u * v };
            for (i, p) in x.mult[*a1][*b1].terms() {
                for (j, q) in x.mult[*a2][*b2].terms() {
                    for (k, r) in x.mult[*a3][*b3].terms() {
                        add3(&mut out, (i, j, k), &coef * p * q * r);
                    }
                }
            }
        }
    }
    out
}
