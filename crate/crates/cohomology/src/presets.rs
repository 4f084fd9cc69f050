//! Built-in geometries.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{Algebra, CohClass, Geometry, NumericPack};

fn r(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// `H*(P^2)`: basis `1, H, H^2`.
pub fn p2_algebra() -> Algebra {
    let mult = (0..3)
        .map(|i| {
            (0..3)
                .map(|j| if i + j <= 2 { CohClass::basis(3, i + j) } else { CohClass::zero(3) })
                .collect()
        })
        .collect();
    Algebra {
        labels: vec!["1".into(), "H".into(), "H^2".into()],
        degree: vec![0, 2, 4],
        mult,
        integral: vec![r(0), r(0), r(1)],
    }
}

/// `H*(P^2) ⊗ H*(E)` with basis index `4*i + j`, `i` the power of `H` and
/// `j` running over `1, a, b, p` (`ab = p = -ba`).
pub fn build_p2xe() -> Geometry {
    const E_LABELS: [&str; 4] = ["", "a", "b", "p"];
    const E_DEG: [u32; 4] = [0, 1, 1, 2];
    // e_j * e_k on the curve: (sign, index)
    let e_mult = |j: usize, k: usize| -> Option<(i64, usize)> {
        match (j, k) {
            (0, k) => Some((1, k)),
            (j, 0) => Some((1, j)),
            (1, 2) => Some((1, 3)),
            (2, 1) => Some((-1, 3)),
            _ => None,
        }
    };
    let dim = 12;
    let mut labels = Vec::new();
    let mut degree = Vec::new();
    let mut integral = Vec::new();
    for i in 0..3usize {
        for j in 0..4usize {
            let h = ["", "H", "H^2"][i];
            let lab = format!("{h}{}", E_LABELS[j]);
            labels.push(if lab.is_empty() { "1".to_string() } else { lab });
            degree.push(2 * i as u32 + E_DEG[j]);
            integral.push(if i == 2 && j == 3 { BigRational::one() } else { BigRational::zero() });
        }
    }
    let mut mult = vec![vec![CohClass::zero(dim); dim]; dim];
    for (a, row) in mult.iter_mut().enumerate() {
        for (b, slot) in row.iter_mut().enumerate() {
            let (i, j) = (a / 4, a % 4);
            let (k, l) = (b / 4, b % 4);
            if i + k > 2 {
                continue;
            }
            if let Some((s, m)) = e_mult(j, l) {
                *slot = CohClass::basis(dim, 4 * (i + k) + m).scale(&r(s));
            }
        }
    }
    let x = Algebra { labels, degree, mult, integral };
    let b = p2_algebra();
    let push = (0..dim)
        .map(|a| if a % 4 == 3 { CohClass::basis(3, a / 4) } else { CohClass::zero(3) })
        .collect();
    let pull = (0..3).map(|i| CohClass::basis(dim, 4 * i)).collect();
    let gens = vec![
        ("H".to_string(), CohClass::basis(dim, 4)),
        ("a".to_string(), CohClass::basis(dim, 1)),
        ("b".to_string(), CohClass::basis(dim, 2)),
        ("p".to_string(), CohClass::basis(dim, 3)),
        ("W".to_string(), CohClass::basis(dim, 3)),
    ];
    Geometry::new(
        "P2xE",
        x,
        b,
        push,
        pull,
        CohClass::basis(dim, 3),
        CohClass::basis(dim, 4).scale(&r(-3)),
        CohClass::basis(dim, 8).scale(&r(3)),
        CohClass::basis(3, 2).scale(&r(3)),
        NumericPack::p2xe(),
        gens,
    )
    .expect("P2xE model is well formed")
}
