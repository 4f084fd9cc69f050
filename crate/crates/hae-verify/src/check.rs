//! Substitution of known correlators and propagation of predictions.

use std::collections::BTreeMap;

use qjac_ring::MeroQJac;

use crate::db::{CorrelatorDB, Entry};
use crate::expr::{Expr, Key, Symbol};
use crate::Instance;

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub verified: Vec<String>,
    pub predictions: BTreeMap<Key, MeroQJac>,
    /// Instance name and the nonzero residual.
    pub inconsistencies: Vec<(String, MeroQJac)>,
    /// Instances that still contain several unknowns.
    pub undetermined: Vec<String>,
}

impl Report {
    pub fn is_consistent(&self) -> bool {
        self.inconsistencies.is_empty()
    }
}

/// Known part and remaining unknown symbols of an expression.
fn split(e: &Expr, db: &CorrelatorDB) -> (MeroQJac, Expr) {
    let mut known = MeroQJac::zero();
    let mut unknown = Expr::zero();
    for (s, c) in &e.terms {
        match db.resolve(s) {
            Some(v) => known = known.add(&v.mul(c)),
            None => unknown.add_term(s.clone(), c.clone()),
        }
    }
    (known, unknown)
}

/// Checks every instance against the database, solving for an unknown
/// plain correlator whenever an instance contains exactly one, with a
/// constant coefficient; repeats until nothing changes.
pub fn check_system(db: &CorrelatorDB, instances: &[Instance]) -> Report {
    let mut db = db.clone();
    let mut report = Report::default();
    let mut pending: Vec<&Instance> = instances.iter().collect();
    loop {
        let mut progress = false;
        let mut next = Vec::new();
        for inst in pending {
            let (known, unknown) = split(&inst.residual(), &db);
            if unknown.is_zero() {
                if known.is_zero() {
                    report.verified.push(inst.name.clone());
                } else {
                    report.inconsistencies.push((inst.name.clone(), known));
                }
                continue;
            }
            if unknown.terms.len() == 1 {
                let (s, c) = unknown.terms.iter().next().unwrap();
                let constant = c.numerator.as_constant().filter(|_| c.is_poly());
                if let (Symbol::Z(a), Some(c)) = (s, constant) {
                    if s.is_plain() {
                        let v = known.scale(&(-c.recip()));
                        db.entries.insert(a.key.clone(), Entry::Value(v.clone()));
                        report.predictions.insert(a.key.clone(), v);
                        report.verified.push(inst.name.clone());
                        progress = true;
                        continue;
                    }
                }
            }
            next.push(inst);
        }
        pending = next;
        if !progress {
            break;
        }
    }
    report.undetermined = pending.into_iter().map(|i| i.name.clone()).collect();
    report
}

/// Value of an expression, or the part that could not be resolved.
pub fn evaluate(e: &Expr, db: &CorrelatorDB) -> Result<MeroQJac, Expr> {
    let (known, unknown) = split(e, db);
    if unknown.is_zero() {
        Ok(known)
    } else {
        Err(unknown)
    }
}
