//! Stored correlator values, loadable from JSON.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_rational::BigRational;
use qjac_ring::{derive_word, MeroQJac};
use serde::{Deserialize, Serialize};

use crate::expr::{Expr, Key, Symbol};
use crate::insertion::{expand, Insertion, Kind};
use crate::{reduce, Theory, VerifyError};

#[derive(Clone, Debug, PartialEq)]
pub enum Entry {
    Value(MeroQJac),
    Unknown(String),
}

/// Fallback evaluation for keys not stored explicitly.
pub type Oracle = Arc<dyn Fn(&Key) -> Option<MeroQJac> + Send + Sync>;

#[derive(Clone, Default)]
pub struct CorrelatorDB {
    pub entries: BTreeMap<Key, Entry>,
    pub oracle: Option<Oracle>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct JsonInsertion {
    pub kind: Kind,
    pub k: i64,
    pub class: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum JsonValue {
    Unknown { unknown: String },
    Value(MeroQJac),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct JsonEntry {
    pub beta: i64,
    pub insertions: Vec<JsonInsertion>,
    pub value: JsonValue,
}

impl CorrelatorDB {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_oracle(oracle: Oracle) -> Self {
        CorrelatorDB { entries: BTreeMap::new(), oracle: Some(oracle) }
    }

    /// Stores `Z_β(ins) = value`; the insertion product must reduce to a
    /// single canonical key.
    pub fn insert(&mut self, th: &Theory, beta: i64, ins: &[Insertion], value: Entry) -> Result<Key, VerifyError> {
        let (key, sign) = single_key(th, beta, ins)?;
        let value = match value {
            Entry::Value(v) => Entry::Value(v.scale(&sign)),
            u => u,
        };
        self.entries.insert(key.clone(), value);
        Ok(key)
    }

    pub fn value(&self, key: &Key) -> Option<MeroQJac> {
        match self.entries.get(key) {
            Some(Entry::Value(v)) => Some(v.clone()),
            Some(Entry::Unknown(_)) => None,
            None => self.oracle.as_ref().and_then(|o| o(key)),
        }
    }

    /// Value of a symbol, when its key is known.
    pub fn resolve(&self, s: &Symbol) -> Option<MeroQJac> {
        let a = s.atom();
        let v = derive_word(&self.value(&a.key)?, a.n_p, a.n_tau).ok()?;
        Some(match s {
            Symbol::Z(_) => v,
            Symbol::DA(_) => v.d_a(),
            Symbol::DG2(_) => v.d_g2(),
        })
    }

    pub fn load_json(&mut self, th: &Theory, text: &str) -> Result<Vec<Key>, VerifyError> {
        let rows: Vec<JsonEntry> = serde_json::from_str(text).map_err(|e| VerifyError::Table(e.to_string()))?;
        let mut keys = Vec::new();
        for row in rows {
            let ins = row
                .insertions
                .iter()
                .map(|j| {
                    let class = th.geometry.parse_class(&j.class)?;
                    Ok(Insertion { kind: j.kind, k: j.k, class })
                })
                .collect::<Result<Vec<_>, VerifyError>>()?;
            let value = match row.value {
                JsonValue::Value(v) => Entry::Value(MeroQJac::new(v.numerator, v.theta_pow, v.delta_pow)),
                JsonValue::Unknown { unknown } => Entry::Unknown(unknown),
            };
            keys.push(self.insert(th, row.beta, &ins, value)?);
        }
        Ok(keys)
    }
}

/// The canonical key of an irreducible product, with the sign relating
/// the given order to the canonical one.
pub fn single_key(th: &Theory, beta: i64, ins: &[Insertion]) -> Result<(Key, BigRational), VerifyError> {
    let terms = expand(ins, &th.geometry);
    let mut e = Expr::zero();
    for (c, slots) in terms {
        e = e.add(&reduce(th, beta, &slots)?.scale(&MeroQJac::constant(c)));
    }
    if e.terms.len() != 1 {
        return Err(VerifyError::Table("entry does not reduce to a single correlator".into()));
    }
    let (s, c) = e.terms.into_iter().next().unwrap();
    let sign = c.numerator.as_constant().filter(|_| c.is_poly());
    match (s, sign) {
        (Symbol::Z(a), Some(sign)) if a.n_p == 0 && a.n_tau == 0 => Ok((a.key, BigRational::from_integer(1.into()) / sign)),
        _ => Err(VerifyError::Table("entry is reducible".into())),
    }
}
