//! Solved `A`, `B`, `C` polynomials.

use std::collections::BTreeMap;
use std::fmt::Write;

use qjac_ring::QJacPoly;
use serde_json::json;

use crate::{solve_series, Family, K3Error};

#[derive(Clone, Debug, Default, PartialEq)]
pub struct SeriesTable {
    pub a: BTreeMap<i64, QJacPoly>,
    pub b: BTreeMap<i64, QJacPoly>,
    pub c: BTreeMap<(i64, i64), QJacPoly>,
}

impl SeriesTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// `A_k`; zero for negative `k`.
    pub fn a(&self, k: i64) -> Result<QJacPoly, K3Error> {
        if k < 0 {
            return Ok(QJacPoly::zero());
        }
        self.a.get(&k).cloned().ok_or_else(|| K3Error::MissingEntry(format!("A_{k}")))
    }

    pub fn b(&self, k: i64) -> Result<QJacPoly, K3Error> {
        if k < 0 {
            return Ok(QJacPoly::zero());
        }
        self.b.get(&k).cloned().ok_or_else(|| K3Error::MissingEntry(format!("B_{k}")))
    }

    /// `C_{kl}`; zero when either index is negative.
    pub fn c(&self, k: i64, l: i64) -> Result<QJacPoly, K3Error> {
        if k < 0 || l < 0 {
            return Ok(QJacPoly::zero());
        }
        self.c.get(&(k, l)).cloned().ok_or_else(|| K3Error::MissingEntry(format!("C_{k}{l}")))
    }

    pub fn get(&self, family: Family, k: i64, l: i64) -> Result<QJacPoly, K3Error> {
        match family {
            Family::A => self.a(k),
            Family::B => self.b(k),
            Family::C => self.c(k, l),
        }
    }

    pub fn insert(&mut self, family: Family, k: i64, l: i64, p: QJacPoly) {
        match family {
            Family::A => {
                self.a.insert(k, p);
            }
            Family::B => {
                self.b.insert(k, p);
            }
            Family::C => {
                self.c.insert((k, l), p);
            }
        }
    }

    /// Solves `A_0..=A_na`, `B_0..=B_nb` and `C_{kl}` with `k + l <= nc`.
    pub fn build(na: i64, nb: i64, nc: i64) -> Result<Self, K3Error> {
        let mut t = SeriesTable::new();
        let amax = na.max(nb).max(nc);
        for k in 0..=amax {
            let p = solve_series(Family::A, k, 0, &t, None)?;
            t.insert(Family::A, k, 0, p);
        }
        for k in 0..=nb {
            let p = solve_series(Family::B, k, 0, &t, None)?;
            t.insert(Family::B, k, 0, p);
        }
        for s in 0..=nc {
            for k in 0..=s {
                let p = solve_series(Family::C, k, s - k, &t, None)?;
                t.insert(Family::C, k, s - k, p);
            }
        }
        // drop helper entries beyond the request
        t.a.retain(|k, _| *k <= na);
        Ok(t)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let a: serde_json::Map<String, serde_json::Value> = self
            .a
            .iter()
            .map(|(k, p)| (k.to_string(), serde_json::to_value(p).unwrap()))
            .collect();
        let b: serde_json::Map<String, serde_json::Value> = self
            .b
            .iter()
            .map(|(k, p)| (k.to_string(), serde_json::to_value(p).unwrap()))
            .collect();
        let c: serde_json::Map<String, serde_json::Value> = self
            .c
            .iter()
            .map(|((k, l), p)| (format!("{k},{l}"), serde_json::to_value(p).unwrap()))
            .collect();
        json!({ "A": a, "B": b, "C": c })
    }

    /// Inverse of [`SeriesTable::to_json`].
    pub fn from_json(v: &serde_json::Value) -> Result<Self, K3Error> {
        let bad = |m: &str| K3Error::Invalid(format!("table json: {m}"));
        let section = |name: &str| v.get(name).and_then(|s| s.as_object()).ok_or_else(|| bad(name));
        let poly = |p: &serde_json::Value| serde_json::from_value::<QJacPoly>(p.clone()).map_err(|e| bad(&e.to_string()));
        let index = |s: &str| s.trim().parse::<i64>().map_err(|_| bad(s));
        let mut t = SeriesTable::new();
        for (k, p) in section("A")? {
            t.a.insert(index(k)?, poly(p)?);
        }
        for (k, p) in section("B")? {
            t.b.insert(index(k)?, poly(p)?);
        }
        for (kl, p) in section("C")? {
            let (k, l) = kl.split_once(',').ok_or_else(|| bad(kl))?;
            t.c.insert((index(k)?, index(l)?), poly(p)?);
        }
        Ok(t)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (k, p) in &self.a {
            writeln!(out, "A_{k} = {p}").unwrap();
        }
        for (k, p) in &self.b {
            writeln!(out, "B_{k} = {p}").unwrap();
        }
        for ((k, l), p) in &self.c {
            writeln!(out, "C_{k}{l} = {p}").unwrap();
        }
        out
    }
}
