//! `P^2 x E` with the degree 1 and 2 correlators of the trivial fibration.

use num_rational::BigRational;
use qjac_ring::{derive_word, Generator, MeroQJac};

use cohomology::build_p2xe;

use crate::db::CorrelatorDB;
use crate::insertion::{Insertion, Kind};
use crate::theory::Theory;
use crate::{hae_instance, Instance, Op, VerifyError};

/// Shipped table, regenerated by the `p2xe_table_matches_reference` test.
pub const TABLE_JSON: &str = include_str!("../data/p2xe.json");

pub fn theory() -> Theory {
    let g = build_p2xe();
    let mut divisors = vec![None; g.x.dim()];
    // H·β for β = d·[line]
    divisors[4] = Some((BigRational::from_integer(1.into()), BigRational::from_integer(0.into())));
    Theory { unit: 0, w: 3, divisors, vdim_slope: Some(6), koszul: true, correction: None, geometry: g }
}

fn theta() -> MeroQJac {
    MeroQJac::generator(Generator::Theta)
}

fn d(f: &MeroQJac, n_p: u32, n_tau: u32) -> MeroQJac {
    derive_word(f, n_p, n_tau).expect("derivation images")
}

fn c(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// `(β, [(k, class)], value)`.
pub type RefEntry = (i64, Vec<(i64, &'static str)>, MeroQJac);

/// The tabulated entries as `(β, [(k, class)], value)`, common factor `i`
/// of the degree 1 values removed.
pub fn reference() -> Vec<RefEntry> {
    let t = theta();
    let dt = d(&t, 0, 1);
    let dp = d(&t, 1, 0);
    let dpt = d(&t, 1, 1);
    let dpp = d(&t, 2, 0);
    let dppt = d(&t, 2, 1);
    let t2 = t.mul(&t);
    let t3 = t2.mul(&t);
    vec![
        (1, vec![(2, "H^2p"), (2, "H^2")], t.clone()),
        (1, vec![(2, "H^2p"), (2, "Hp")], dt.scale(&c(3))),
        (1, vec![(2, "Hp"), (2, "Hp"), (2, "H^2")], dt.scale(&c(4))),
        (
            1,
            vec![(2, "Hp"), (2, "Hp"), (2, "Hp")],
            d(&t, 0, 2).scale(&c(3)).add(&dt.mul(&dt).scale(&c(9)).mul(&MeroQJac::new(qjac_ring::QJacPoly::one(), 1, 0))),
        ),
        (1, vec![(3, "H^2p")], t.mul(&MeroQJac::generator(Generator::A))),
        (1, vec![(2, "H^2p"), (2, "Ha"), (2, "Hb")], dt.clone()),
        (2, vec![(2, "H^2p"), (2, "H^2"), (2, "H^2"), (2, "H^2"), (2, "H^2")], t2.mul(&t2)),
        (
            2,
            vec![(2, "H^2p"), (2, "H^2p"), (2, "H^2p")],
            t3.mul(&dppt)
                .scale(&c(3))
                .add(&t2.mul(&dpp).mul(&dt).scale(&c(3)))
                .sub(&t2.mul(&dpt).mul(&dp).scale(&c(6)))
                .add(&t2.mul(&dt).mul(&dt).scale(&c(3))),
        ),
        (2, vec![(2, "H^2p"), (2, "H^2p"), (3, "H^2")], t3.mul(&dpt).scale(&c(2))),
    ]
}

/// JSON rows for [`reference`].
pub fn reference_json() -> serde_json::Value {
    let rows: Vec<serde_json::Value> = reference()
        .into_iter()
        .map(|(beta, ins, v)| {
            let ins: Vec<serde_json::Value> = ins
                .iter()
                .map(|(k, cl)| serde_json::json!({"kind": "ch", "k": k, "class": cl}))
                .collect();
            serde_json::json!({"beta": beta, "insertions": ins, "value": v})
        })
        .collect();
    serde_json::Value::Array(rows)
}

pub fn load_db(th: &Theory) -> Result<CorrelatorDB, VerifyError> {
    let mut db = CorrelatorDB::new();
    db.load_json(th, TABLE_JSON)?;
    Ok(db)
}

/// Both anomaly equations for every tabulated entry.
pub fn table_instances(th: &Theory) -> Result<Vec<Instance>, VerifyError> {
    let mut out = Vec::new();
    for (beta, ins, _) in reference() {
        let ins: Vec<Insertion> = ins
            .iter()
            .map(|(k, cl)| Ok(Insertion { kind: Kind::Ch, k: *k, class: th.geometry.parse_class(cl)? }))
            .collect::<Result<_, VerifyError>>()?;
        for op in [Op::DA, Op::DG2] {
            out.push(hae_instance(op, &ins, beta, th)?);
        }
    }
    Ok(out)
}
